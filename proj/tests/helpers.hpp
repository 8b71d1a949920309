#pragma once

#include <random>
#include <vector>

#include "thompson/words.hpp"

namespace thompson::testing {

inline Dyadic dy(long long n, int e) { return Dyadic(BigInt(n), e); }

/// Uniform random word over {x0^±1, x1^±1} of the given length.
inline Word random_word(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  for (int i = 0; i < length; ++i) {
    int g = pick(rng);
    w.letters.push_back({Letter::Base::X, g / 2, g % 2 == 0 ? 1 : -1});
  }
  return w;
}

inline PLMap random_map(std::mt19937& rng, int length) { return eval_word(random_word(rng, length)); }

/// Affine transplant of a map of [0,1] onto the interval j; slopes and
/// the power-of-two property are preserved because conjugating by
/// x -> lo + (hi - lo) x rescales both axes by the same dyadic factor.
inline PLMap rescale(const PLMap& f, const Interval& j) {
  Dyadic len = j.length();
  std::vector<PLMap::Point> pts;
  pts.reserve(f.points().size());
  for (const auto& p : f.points()) pts.push_back({j.lo + len * p.x, j.lo + len * p.y});
  return PLMap::make(j, std::move(pts));
}

/// Random dyadic in [0,1] with exponent at most `max_exp`.
inline Dyadic random_dyadic(std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<int> exp_pick(0, max_exp);
  int e = exp_pick(rng);
  std::uniform_int_distribution<long long> num_pick(0, (1LL << e));
  return Dyadic(BigInt(num_pick(rng)), e);
}

}  // namespace thompson::testing

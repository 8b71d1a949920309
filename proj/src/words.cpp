#include "thompson/words.hpp"

#include <cctype>
#include <mutex>
#include <unordered_map>

namespace thompson {

namespace {

Dyadic dy(long long n, int e) { return Dyadic(BigInt(n), e); }

PLMap x0_map() {
  return PLMap::make(unit_interval(), {{dy(0, 0), dy(0, 0)},
                                       {dy(1, 2), dy(1, 1)},
                                       {dy(1, 1), dy(3, 2)},
                                       {dy(1, 0), dy(1, 0)}});
}

PLMap x1_map() {
  return PLMap::make(unit_interval(), {{dy(0, 0), dy(0, 0)},
                                       {dy(1, 1), dy(1, 1)},
                                       {dy(5, 3), dy(3, 2)},
                                       {dy(3, 2), dy(7, 3)},
                                       {dy(1, 0), dy(1, 0)}});
}

}  // namespace

PLMap generator_map(long n) {
  if (n < 0) throw Error("generator index must be nonnegative");
  static std::unordered_map<long, PLMap> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  PLMap m = n == 0 ? x0_map() : x1_map();
  if (n >= 2) {
    // x_n = x0^{-n+1} x1 x0^{n-1} = conjugate of x1 by x0^{n-1}
    m = conjugate(m, power(x0_map(), n - 1));
  }
  cache.emplace(n, m);
  return m;
}

PLMap a_map() {
  static const PLMap a = compose(generator_map(0), generator_map(0));
  return a;
}

PLMap b_map() {
  static const PLMap b = compose(generator_map(1), inverse(generator_map(2)));
  return b;
}

PLMap basis_conjugate_map(long k) {
  return conjugate(b_map(), power(a_map(), k));
}

PLMap eval_word(const Word& w) {
  PLMap acc = PLMap::identity(unit_interval());
  for (const auto& l : w.letters) {
    PLMap g = l.base == Letter::Base::A   ? a_map()
              : l.base == Letter::Base::B ? b_map()
                                          : generator_map(l.index);
    acc = compose(acc, power(g, l.exp));
  }
  return acc;
}

bool is_trivial(const Word& w) { return eval_word(w).is_identity(); }

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Letter l = *it;
    l.exp = -l.exp;
    out.letters.push_back(l);
  }
  return out;
}

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

std::string Word::str() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += " ";
    switch (l.base) {
      case Letter::Base::A: out += "a"; break;
      case Letter::Base::B: out += "b"; break;
      case Letter::Base::X: out += "x" + std::to_string(l.index); break;
    }
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_long = [&](const char* what) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw SyntaxError(std::string("expected ") + what, start);
    try {
      return std::stol(std::string(text.substr(start, i - start)));
    } catch (const std::out_of_range&) {
      throw SyntaxError(std::string(what) + " out of range", start);
    }
  };
  skip_ws();
  while (i < text.size()) {
    Letter l;
    char c = text[i];
    if (c == 'a') {
      l.base = Letter::Base::A;
      ++i;
    } else if (c == 'b') {
      l.base = Letter::Base::B;
      ++i;
    } else if (c == 'x') {
      ++i;
      l.base = Letter::Base::X;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw SyntaxError("generator 'x' needs an index, e.g. x0", i);
      l.index = parse_long("generator index");
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    if (i < text.size() && text[i] == '^') {
      ++i;
      l.exp = parse_long("exponent");
    } else {
      l.exp = 1;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw SyntaxError("letters must be separated by whitespace", i);
    if (l.exp != 0) w.letters.push_back(l);
    skip_ws();
  }
  return w;
}

}  // namespace thompson

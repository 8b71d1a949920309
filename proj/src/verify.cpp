#include "thompson/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"

namespace thompson {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Checker {
  Report report;
  Clock::time_point start = Clock::now();

  explicit Checker(std::string name) { report.check = std::move(name); }

  void param(const std::string& key, long value) {
    report.params.emplace_back(key, std::to_string(value));
  }

  // Records the first failure; later failures keep the first witness.
  void require(bool ok, const std::string& witness) {
    if (!ok && !report.counterexample) report.counterexample = witness;
  }

  Report finish() {
    report.pass = !report.counterexample.has_value();
    report.elapsed_ms = ms_since(start);
    return std::move(report);
  }
};

}  // namespace

Report verify_lemma1(int kmax) {
  Checker c("lemma1");
  c.param("kmax", kmax);
  for (long k = -kmax; k <= kmax; ++k) {
    SupportSet s = support(basis_conjugate_map(k));
    if (s != SupportSet::of(support_interval(k)))
      c.require(false, "supp(a^" + std::to_string(-k) + " b a^" + std::to_string(k) +
                           ") = " + s.str() + " != S_" + std::to_string(k));
  }
  // Disjointness and exact tiling: consecutive closures meet in one point.
  for (long k = -kmax; k <= kmax; ++k) {
    Interval sk = support_interval(k);
    Interval next = support_interval(k + 1);
    c.require(sk.hi == next.lo, "closures of S_" + std::to_string(k) + " and S_" +
                                    std::to_string(k + 1) + " do not meet in one point");
    c.require(sk.lo < sk.hi, "S_" + std::to_string(k) + " degenerate");
  }
  // Monotone convergence of the grid toward 0 and 1.
  for (long k = 1; k <= kmax; ++k) {
    Dyadic to_zero_prev = grid_point(-(k - 1));
    Dyadic to_zero = grid_point(-k);
    c.require(to_zero + to_zero <= to_zero_prev,
              "left endpoints do not halve toward 0 at k=" + std::to_string(-k));
    Dyadic to_one_prev = Dyadic(1) - grid_point(k);
    Dyadic to_one = Dyadic(1) - grid_point(k + 1);
    c.require(to_one + to_one <= to_one_prev,
              "right endpoints do not halve toward 1 at k=" + std::to_string(k));
  }
  return c.finish();
}

Report verify_claim(int kmax) {
  Checker c("claim");
  c.param("kmax", kmax);
  for (long k = -kmax; k <= kmax; ++k) {
    Interval sk = support_interval(k);
    PLMap gk = restrict(basis_conjugate_map(k), sk);
    c.require(is_gt_identity_interior(gk),
              "g_" + std::to_string(k) + " is not strictly above the identity on S_k");
    c.require(slope_right(gk, sk.lo) == 1,
              "g_" + std::to_string(k) + " has initial slope exponent " +
                  std::to_string(slope_right(gk, sk.lo)) + ", expected 1");
  }
  return c.finish();
}

Report verify_relations(int nmax) {
  Checker c("relations");
  c.param("nmax", nmax);
  const PLMap b = b_map();
  for (long n = -nmax; n <= nmax; ++n) {
    PLMap bn = basis_conjugate_map(n);
    PLMap commutator = compose(compose(inverse(b), inverse(bn)), compose(b, bn));
    c.require(commutator.is_identity(), "[b, a^" + std::to_string(-n) + " b a^" +
                                            std::to_string(n) + "] is not the identity");
  }
  return c.finish();
}

int ball_radius_cap() {
  if (const char* env = std::getenv("THOMPSON_RADIUS_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 10;
}

namespace {

// Ball search alphabet, in lexicographic tie-break order.
struct BallGen {
  Letter letter;
  int inverse;  // index of the inverse generator
};

const std::vector<BallGen>& ball_gens() {
  static const std::vector<BallGen> gens = {
      {{Letter::Base::X, 0, 1}, 1},
      {{Letter::Base::X, 0, -1}, 0},
      {{Letter::Base::X, 1, 1}, 3},
      {{Letter::Base::X, 1, -1}, 2},
  };
  return gens;
}

Word witness_word(const std::vector<int>& gen_ids) {
  Word w;
  for (int id : gen_ids) {
    const Letter& l = ball_gens()[static_cast<std::size_t>(id)].letter;
    if (!w.letters.empty() && w.letters.back().base == l.base &&
        w.letters.back().index == l.index) {
      w.letters.back().exp += l.exp;
      if (w.letters.back().exp == 0) w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

}  // namespace

std::vector<BallEntry> enumerate_ball(int radius) {
  if (radius < 0) throw CapExceeded("negative radius");
  if (radius > ball_radius_cap())
    throw CapExceeded("radius " + std::to_string(radius) + " exceeds cap " +
                      std::to_string(ball_radius_cap()));
  std::vector<PLMap> gen_maps;
  for (const auto& g : ball_gens()) gen_maps.push_back(eval_word(Word{{g.letter}}));

  // Breadth-first growth over deduplicated elements.  Words are kept free
  // reduced; at each level the lexicographically least witness wins, and
  // a least geodesic always extends a least geodesic, so the recorded
  // witnesses are the lexicographically least shortest words.
  std::map<PLMap, std::vector<int>> ball;
  std::map<PLMap, std::vector<int>> frontier;
  frontier.emplace(PLMap::identity(unit_interval()), std::vector<int>{});
  ball.insert(frontier.begin(), frontier.end());
  for (int level = 0; level < radius; ++level) {
    std::map<PLMap, std::vector<int>> next;
    for (const auto& [map, word] : frontier) {
      for (int id = 0; id < static_cast<int>(ball_gens().size()); ++id) {
        if (!word.empty() && ball_gens()[static_cast<std::size_t>(id)].inverse == word.back())
          continue;  // free reduction: never undo the last letter
        PLMap longer = compose(map, gen_maps[static_cast<std::size_t>(id)]);
        if (ball.contains(longer)) continue;
        std::vector<int> cand = word;
        cand.push_back(id);
        auto [it, inserted] = next.try_emplace(longer, cand);
        if (!inserted && cand < it->second) it->second = std::move(cand);
      }
    }
    ball.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<BallEntry> out;
  out.reserve(ball.size());
  for (auto& [map, word] : ball) out.push_back({map, witness_word(word)});
  return out;
}

std::vector<BallEntry> centralizer_in_ball(int radius, const std::vector<PLMap>& targets) {
  std::vector<BallEntry> out;
  for (auto& entry : enumerate_ball(radius)) {
    bool central = true;
    for (const auto& t : targets)
      if (!commutes(entry.map, t)) {
        central = false;
        break;
      }
    if (central) out.push_back(std::move(entry));
  }
  return out;
}

Report verify_centralizer_x0(int radius) {
  Checker c("centralizer_x0");
  c.param("radius", radius);
  const PLMap x0 = generator_map(0);
  std::map<PLMap, long> powers;
  for (long m = -radius; m <= radius; ++m) powers.emplace(power(x0, m), m);
  std::vector<BallEntry> central = centralizer_in_ball(radius, {x0});
  std::size_t found = 0;
  for (const auto& entry : central) {
    if (powers.contains(entry.map))
      ++found;
    else
      c.require(false, "element '" + entry.witness.str() + "' commutes with x0 but is not a power of x0");
  }
  c.require(found == powers.size(), "some power of x0 within the ball is missing from the centralizer");
  return c.finish();
}

Report check_base_centralizer(int radius, int kmax) {
  Checker c("base_centralizer");
  c.param("radius", radius);
  c.param("kmax", kmax);
  std::vector<PLMap> targets;
  for (long k = -kmax; k <= kmax; ++k) targets.push_back(basis_conjugate_map(k));
  SupportSet grid_union;
  for (long k = -kmax; k <= kmax; ++k)
    grid_union.intervals.push_back({grid_point(k).to_rational(), grid_point(k + 1).to_rational()});
  long members = 0, outside = 0;
  for (const auto& entry : centralizer_in_ball(radius, targets)) {
    bool in_base = false;
    try {
      in_base = decompose(entry.map).shift == 0;
    } catch (const NotInWreathSubgroup&) {
      in_base = false;
    }
    if (in_base) {
      ++members;
    } else if (disjoint(support(entry.map), grid_union)) {
      ++outside;  // supported beyond the truncated grid; expected at finite kmax
    } else {
      c.require(false, "unexplained centralizer element '" + entry.witness.str() + "'");
    }
  }
  c.param("base_members", members);
  c.param("outside_grid", outside);
  return c.finish();
}

std::string Report::str() const {
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << check;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << elapsed_ms << " ms)";
  if (counterexample) os << "\n       counterexample: " << *counterexample;
  return os.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["check"] = check;
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["pass"] = pass;
  j["counterexample"] = counterexample ? nlohmann::json(*counterexample) : nlohmann::json();
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

}  // namespace thompson

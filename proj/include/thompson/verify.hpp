#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thompson/words.hpp"
#include "thompson/wreath.hpp"

namespace thompson {

/// Outcome of one machine check; counterexample is set exactly when the
/// check failed.
struct Report {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0.0;

  std::string str() const;
  std::string json() const;
};

/// The S_k grid, |k| <= kmax: supp(a^-k b a^k) equals S_k, the S_k are
/// pairwise disjoint, consecutive closures share exactly one point and
/// tile [grid(-kmax), grid(kmax+1)], and the endpoint sequences converge
/// monotonically (distance to 0 resp. 1 at least halves per step).
Report verify_lemma1(int kmax);

/// Each restriction of a^-k b a^k to the closure of S_k lies strictly
/// above the identity on the interior and has initial slope exponent
/// exactly 1, |k| <= kmax.
Report verify_claim(int kmax);

/// [b, a^-n b a^n] is the identity for |n| <= nmax.
Report verify_relations(int nmax);

/// A group element found by ball search, with a shortest witness word
/// over {x0, x0^-1, x1, x1^-1} (ties broken lexicographically in that
/// letter order).
struct BallEntry {
  PLMap map;
  Word witness;
};

/// Radius cap for ball enumeration; THOMPSON_RADIUS_CAP overrides the
/// default of 10.
int ball_radius_cap();

/// All distinct elements spelled by words of length <= radius over
/// {x0^+-1, x1^+-1}, deduplicated by exact map equality and sorted by
/// canonical breakpoint list.  Throws CapExceeded past the cap.
std::vector<BallEntry> enumerate_ball(int radius);

/// The entries of enumerate_ball(radius) commuting with every target.
std::vector<BallEntry> centralizer_in_ball(int radius, const std::vector<PLMap>& targets);

/// Desk-scale evidence that the centralizer of x0 is <x0>: the ball
/// centralizer of x0 must consist of exactly the powers of x0 present in
/// the ball.
Report verify_centralizer_x0(int radius);

/// Every ball element commuting with all a^-k b a^k, |k| <= kmax, must
/// either decompose into the base group (shift 0) or be supported outside
/// the union of those S_k (an artifact of truncating k); anything else
/// fails the check.
Report check_base_centralizer(int radius, int kmax);

}  // namespace thompson

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/errors.hpp"

namespace thompson {

/// Closed interval [lo, hi] with dyadic endpoints, lo < hi.
struct Interval {
  Dyadic lo, hi;

  Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw BadEndpoints("interval needs lo < hi: [" + lo.str() + ", " + hi.str() + "]");
  }

  Dyadic length() const { return hi - lo; }
  bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) = default;
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

inline Interval unit_interval() { return Interval(Dyadic(0), Dyadic(1)); }

/// An element of PL2(J): an increasing piecewise-linear bijection of
/// J = [lo, hi] onto itself with finitely many breakpoints, all at dyadic
/// rationals, and every segment slope an integer power of two.
///
/// Maps act on the right throughout: the group product fg applies f first
/// and g second, and compose(f, g) is the map alpha |-> (alpha f) g.
///
/// Stored as the canonical breakpoint list (x_0, y_0) .. (x_n, y_n) with
/// x_0 = y_0 = lo, x_n = y_n = hi, both coordinate sequences strictly
/// increasing, and no interior point collinear with its neighbours.  Since
/// every constructor canonicalizes, operator== decides equality of maps,
/// which is the word problem oracle for the whole library.
class PLMap {
 public:
  struct Point {
    Dyadic x, y;
    friend bool operator==(const Point& a, const Point& b) = default;
  };

  /// Validates endpoints, strict monotonicity and power-of-two slopes,
  /// then drops collinear interior points.
  /// Throws BadEndpoints, NotMonotone, SlopeNotPowerOfTwo.
  static PLMap make(Interval domain, std::vector<Point> points);

  static PLMap identity(Interval domain);

  const Interval& domain() const { return domain_; }
  const std::vector<Point>& points() const { return pts_; }
  std::size_t segments() const { return pts_.size() - 1; }

  /// Slope exponent s of segment i (slope 2^s).
  int slope_exponent(std::size_t i) const { return slopes_[i]; }

  bool is_identity() const { return pts_.size() == 2 && slopes_[0] == 0; }

  /// Exact image of alpha under the map; throws OutOfDomain.
  Dyadic evaluate(const Dyadic& alpha) const;
  /// Same map extended exactly to rational arguments.
  Rational evaluate(const Rational& alpha) const;
  /// Exact preimage: the beta with evaluate(beta) == alpha.
  Dyadic evaluate_inverse(const Dyadic& alpha) const;

  friend bool operator==(const PLMap& a, const PLMap& b) = default;
  /// Lexicographic on the canonical breakpoint list; used for ordered
  /// deduplication sets.
  friend bool operator<(const PLMap& a, const PLMap& b);

  /// Space-separated "x:y" pairs, endpoints included.
  std::string str() const;
  /// Inverse of str(); the domain is read off the first and last pair.
  static PLMap parse(std::string_view text);

  /// {"domain": [lo, hi], "points": [[x, y], ...]} with dyadics as strings.
  std::string json() const;
  /// "x,y" header plus one breakpoint per line.
  std::string csv() const;

 private:
  PLMap(Interval domain, std::vector<Point> pts, std::vector<int> slopes)
      : domain_(std::move(domain)), pts_(std::move(pts)), slopes_(std::move(slopes)) {}

  std::size_t segment_of(const Dyadic& alpha) const;

  Interval domain_;
  std::vector<Point> pts_;
  std::vector<int> slopes_;
};

/// alpha |-> (alpha f) g; the group product fg in right-action convention.
/// Breakpoints are f's breakpoints refined with the exact f-preimages of
/// g's breakpoints.  Throws DomainMismatch.
PLMap compose(const PLMap& f, const PLMap& g);

PLMap inverse(const PLMap& f);

/// f^n by repeated composition (n may be negative).
PLMap power(const PLMap& f, long n);

/// g^-1 f g.  Throws DomainMismatch.
PLMap conjugate(const PLMap& f, const PLMap& g);

/// fg == gf.
bool commutes(const PLMap& f, const PLMap& g);

/// Restriction of f to J; requires f to fix both endpoints of J (an
/// increasing bijection then maps J onto J).  Throws NotInvariant.
PLMap restrict(const PLMap& f, const Interval& j);

/// The map equal to f on f's domain and to the identity on the rest of
/// `target`; requires f's domain to be contained in target.
PLMap extend_identity(const PLMap& f, const Interval& target);

/// supp(f) = {alpha : alpha f != alpha}, a finite union of open intervals.
///
/// Endpoints are exact rationals rather than dyadics: on a segment with
/// slope 2^s, f - id is linear with slope 2^s - 1, and when it changes sign
/// inside the segment the crossing x* = x_i + (x_i - y_i)/(2^s - 1) need
/// not be dyadic.  Example: the map through (1/2, 1/4) with slope 4 fixes
/// 7/12.  Such crossings are isolated fixed points and split the support.
struct SupportSet {
  struct OpenInterval {
    Rational lo, hi;
    friend bool operator==(const OpenInterval& a, const OpenInterval& b) = default;
  };

  std::vector<OpenInterval> intervals;  // disjoint, sorted

  bool empty() const { return intervals.empty(); }
  std::size_t size() const { return intervals.size(); }

  static SupportSet of(const Interval& j) {
    return SupportSet{{OpenInterval{j.lo.to_rational(), j.hi.to_rational()}}};
  }

  friend bool operator==(const SupportSet& a, const SupportSet& b) = default;
  std::string str() const;
};

SupportSet support(const PLMap& f);

/// Interval-by-interval image of a support set under f.
SupportSet image(const SupportSet& s, const PLMap& f);

bool disjoint(const SupportSet& a, const SupportSet& b);

/// Exponent s with local slope 2^s just right of alpha; alpha must lie in
/// [lo, hi).  Throws OutOfDomain.
int slope_right(const PLMap& f, const Dyadic& alpha);
/// Exponent just left of alpha; alpha must lie in (lo, hi].
int slope_left(const PLMap& f, const Dyadic& alpha);

/// Membership in PL2>=(J): alpha f >= alpha on all of J.  Equivalent to
/// y >= x at every breakpoint, since f - id is linear between breakpoints
/// and a linear function nonnegative at both segment ends is nonnegative
/// on the segment.
bool is_ge_identity(const PLMap& f);

/// Membership in PL2>(J): alpha f > alpha on the open interval (lo, hi).
/// Tested as: y > x at every interior breakpoint, initial slope exponent
/// > 0, final slope exponent < 0.  Interior segments are handled by the
/// same linearity argument as above with strict signs; on the first
/// segment f - id = (2^s - 1)(x - lo), positive for x > lo exactly when
/// s > 0, and symmetrically on the last segment.
bool is_gt_identity_interior(const PLMap& f);

/// (log2 initial slope, log2 final slope); a homomorphism onto Z^2 whose
/// kernel on PL2([0,1]) is the commutator subgroup.
std::pair<int, int> abelianize(const PLMap& f);

}  // namespace thompson

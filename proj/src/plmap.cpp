#include "thompson/plmap.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace thompson {

namespace {

// Slope exponent of the segment (x0,y0) -> (x1,y1), or nullopt when the
// slope is not a power of two.  Requires dx > 0, dy > 0.
std::optional<int> segment_slope_exponent(const Dyadic& x0, const Dyadic& y0, const Dyadic& x1,
                                          const Dyadic& y1) {
  Dyadic dx = x1 - x0;
  Dyadic dy = y1 - y0;
  // dy/dx = 2^s  iff  the odd parts of the numerators agree.
  const BigInt& ny = dy.num();
  const BigInt& nx = dx.num();
  int vy = two_valuation(ny);
  int vx = two_valuation(nx);
  if ((ny >> vy) != (nx >> vx)) return std::nullopt;
  return (vy - dy.exp()) - (vx - dx.exp());
}

Rational pow2_rational(int s) {
  if (s >= 0) return Rational(BigInt(1) << s);
  return Rational(1, BigInt(1) << -s);
}

}  // namespace

PLMap PLMap::make(Interval domain, std::vector<Point> points) {
  if (points.size() < 2) throw BadEndpoints("need at least the two endpoint pairs");
  if (points.front().x != domain.lo || points.front().y != domain.lo ||
      points.back().x != domain.hi || points.back().y != domain.hi)
    throw BadEndpoints("endpoints of " + domain.str() + " must be fixed");
  std::vector<int> slopes;
  slopes.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].x < points[i + 1].x) || !(points[i].y < points[i + 1].y))
      throw NotMonotone("breakpoint coordinates must be strictly increasing");
    auto s = segment_slope_exponent(points[i].x, points[i].y, points[i + 1].x, points[i + 1].y);
    if (!s)
      throw SlopeNotPowerOfTwo("segment " + points[i].x.str() + ":" + points[i].y.str() + " -> " +
                               points[i + 1].x.str() + ":" + points[i + 1].y.str());
    slopes.push_back(*s);
  }
  // Drop interior points collinear with their neighbours.
  std::vector<Point> pts;
  std::vector<int> sl;
  pts.push_back(std::move(points.front()));
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (slopes[i] == slopes[i - 1]) continue;
    pts.push_back(std::move(points[i]));
    sl.push_back(slopes[i - 1]);
  }
  pts.push_back(std::move(points.back()));
  sl.push_back(slopes.back());
  return PLMap(std::move(domain), std::move(pts), std::move(sl));
}

PLMap PLMap::identity(Interval domain) {
  std::vector<Point> pts{{domain.lo, domain.lo}, {domain.hi, domain.hi}};
  return PLMap(std::move(domain), std::move(pts), {0});
}

std::size_t PLMap::segment_of(const Dyadic& alpha) const {
  // Greatest i with x_i <= alpha, clamped to a segment index.
  std::size_t lo = 0, hi = pts_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (pts_[mid].x <= alpha)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Dyadic PLMap::evaluate(const Dyadic& alpha) const {
  if (!domain_.contains(alpha))
    throw OutOfDomain("evaluate: " + alpha.str() + " outside " + domain_.str());
  std::size_t i = segment_of(alpha);
  return pts_[i].y + (alpha - pts_[i].x).times_pow2(slopes_[i]);
}

Rational PLMap::evaluate(const Rational& alpha) const {
  if (alpha < domain_.lo.to_rational() || alpha > domain_.hi.to_rational())
    throw OutOfDomain("evaluate: " + rational_str(alpha) + " outside " + domain_.str());
  std::size_t i = pts_.size() - 2;
  for (std::size_t k = 1; k + 1 < pts_.size(); ++k) {
    if (alpha < pts_[k].x.to_rational()) {
      i = k - 1;
      break;
    }
  }
  return pts_[i].y.to_rational() + (alpha - pts_[i].x.to_rational()) * pow2_rational(slopes_[i]);
}

Dyadic PLMap::evaluate_inverse(const Dyadic& alpha) const {
  if (!domain_.contains(alpha))
    throw OutOfDomain("evaluate_inverse: " + alpha.str() + " outside " + domain_.str());
  // Greatest i with y_i <= alpha.
  std::size_t lo = 0, hi = pts_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (pts_[mid].y <= alpha)
      lo = mid;
    else
      hi = mid;
  }
  return pts_[lo].x + (alpha - pts_[lo].y).times_pow2(-slopes_[lo]);
}

bool operator<(const PLMap& a, const PLMap& b) {
  auto cmp_dy = [](const Dyadic& x, const Dyadic& y) { return x <=> y; };
  if (auto c = cmp_dy(a.domain_.lo, b.domain_.lo); c != 0) return c < 0;
  if (auto c = cmp_dy(a.domain_.hi, b.domain_.hi); c != 0) return c < 0;
  const auto& pa = a.pts_;
  const auto& pb = b.pts_;
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
    if (auto c = cmp_dy(pa[i].x, pb[i].x); c != 0) return c < 0;
    if (auto c = cmp_dy(pa[i].y, pb[i].y); c != 0) return c < 0;
  }
  return pa.size() < pb.size();
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.domain() != g.domain())
    throw DomainMismatch("compose: " + f.domain().str() + " vs " + g.domain().str());
  std::vector<Dyadic> xs;
  xs.reserve(f.points().size() + g.points().size());
  for (const auto& p : f.points()) xs.push_back(p.x);
  for (const auto& q : g.points()) xs.push_back(f.evaluate_inverse(q.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = g.evaluate(f.evaluate(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap::make(f.domain(), std::move(pts));
}

PLMap inverse(const PLMap& f) {
  std::vector<PLMap::Point> pts;
  pts.reserve(f.points().size());
  for (const auto& p : f.points()) pts.push_back({p.y, p.x});
  return PLMap::make(f.domain(), std::move(pts));
}

PLMap power(const PLMap& f, long n) {
  PLMap base = n < 0 ? inverse(f) : f;
  PLMap acc = PLMap::identity(f.domain());
  for (long i = 0, m = n < 0 ? -n : n; i < m; ++i) acc = compose(acc, base);
  return acc;
}

PLMap conjugate(const PLMap& f, const PLMap& g) { return compose(compose(inverse(g), f), g); }

bool commutes(const PLMap& f, const PLMap& g) { return compose(f, g) == compose(g, f); }

PLMap restrict(const PLMap& f, const Interval& j) {
  if (!f.domain().contains(j.lo) || !f.domain().contains(j.hi))
    throw OutOfDomain("restrict: " + j.str() + " not inside " + f.domain().str());
  if (f.evaluate(j.lo) != j.lo || f.evaluate(j.hi) != j.hi)
    throw NotInvariant("restrict: endpoints of " + j.str() + " are not fixed by the map");
  std::vector<PLMap::Point> pts;
  pts.push_back({j.lo, j.lo});
  for (const auto& p : f.points())
    if (j.lo < p.x && p.x < j.hi) pts.push_back(p);
  pts.push_back({j.hi, j.hi});
  return PLMap::make(j, std::move(pts));
}

PLMap extend_identity(const PLMap& f, const Interval& target) {
  if (!(target.lo <= f.domain().lo) || !(f.domain().hi <= target.hi))
    throw DomainMismatch("extend_identity: " + f.domain().str() + " not inside " + target.str());
  std::vector<PLMap::Point> pts;
  if (target.lo < f.domain().lo) pts.push_back({target.lo, target.lo});
  for (const auto& p : f.points()) pts.push_back(p);
  if (f.domain().hi < target.hi) pts.push_back({target.hi, target.hi});
  return PLMap::make(target, std::move(pts));
}

SupportSet support(const PLMap& f) {
  // Fixed set of f as sorted disjoint closed (possibly degenerate)
  // intervals; the support is its complement in [lo, hi].  Both domain
  // endpoints are always fixed, so the fixed set is never empty.
  struct Zone {
    Rational lo, hi;
  };
  std::vector<Zone> zones;
  auto add = [&zones](Rational lo, Rational hi) {
    if (!zones.empty() && zones.back().hi == lo)
      zones.back().hi = std::move(hi);
    else
      zones.push_back({std::move(lo), std::move(hi)});
  };
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Dyadic dl = pts[i].y - pts[i].x;
    Dyadic dr = pts[i + 1].y - pts[i + 1].x;
    int sl = dl.sign(), sr = dr.sign();
    if (sl == 0 && sr == 0) {
      add(pts[i].x.to_rational(), pts[i + 1].x.to_rational());
    } else if (sl == 0) {
      add(pts[i].x.to_rational(), pts[i].x.to_rational());
    } else if (sr == 0) {
      // the next segment starts at this fixed point and records it,
      // except at the very end of the domain
      if (i + 2 == pts.size()) add(pts[i + 1].x.to_rational(), pts[i + 1].x.to_rational());
    } else if (sl != sr) {
      // f - id is linear with slope 2^s - 1 != 0 on the segment and
      // changes sign, so it has one interior root.
      int s = f.slope_exponent(i);
      Rational cross = pts[i].x.to_rational() +
                       (pts[i].x.to_rational() - pts[i].y.to_rational()) / (pow2_rational(s) - 1);
      add(cross, cross);
    }
  }
  SupportSet out;
  for (std::size_t i = 0; i + 1 < zones.size(); ++i)
    out.intervals.push_back({zones[i].hi, zones[i + 1].lo});
  return out;
}

SupportSet image(const SupportSet& s, const PLMap& f) {
  SupportSet out;
  out.intervals.reserve(s.intervals.size());
  for (const auto& iv : s.intervals) out.intervals.push_back({f.evaluate(iv.lo), f.evaluate(iv.hi)});
  return out;
}

bool disjoint(const SupportSet& a, const SupportSet& b) {
  for (const auto& u : a.intervals)
    for (const auto& v : b.intervals)
      if (u.lo < v.hi && v.lo < u.hi) return false;
  return true;
}

std::string SupportSet::str() const {
  if (intervals.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i) out += " ";
    out += "(" + rational_str(intervals[i].lo) + ", " + rational_str(intervals[i].hi) + ")";
  }
  return out;
}

int slope_right(const PLMap& f, const Dyadic& alpha) {
  if (!(f.domain().lo <= alpha) || !(alpha < f.domain().hi))
    throw OutOfDomain("slope_right: " + alpha.str() + " outside [" + f.domain().lo.str() + ", " +
                      f.domain().hi.str() + ")");
  const auto& pts = f.points();
  for (std::size_t i = pts.size() - 1; i-- > 0;)
    if (pts[i].x <= alpha) return f.slope_exponent(i);
  return f.slope_exponent(0);
}

int slope_left(const PLMap& f, const Dyadic& alpha) {
  if (!(f.domain().lo < alpha) || !(alpha <= f.domain().hi))
    throw OutOfDomain("slope_left: " + alpha.str() + " outside (" + f.domain().lo.str() + ", " +
                      f.domain().hi.str() + "]");
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (alpha <= pts[i + 1].x) return f.slope_exponent(i);
  return f.slope_exponent(pts.size() - 2);
}

bool is_ge_identity(const PLMap& f) {
  for (const auto& p : f.points())
    if (p.y < p.x) return false;
  return true;
}

bool is_gt_identity_interior(const PLMap& f) {
  const auto& pts = f.points();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    if (!(pts[i].y > pts[i].x)) return false;
  return f.slope_exponent(0) > 0 && f.slope_exponent(f.segments() - 1) < 0;
}

std::pair<int, int> abelianize(const PLMap& f) {
  return {f.slope_exponent(0), f.slope_exponent(f.segments() - 1)};
}

std::string PLMap::str() const {
  std::string out;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i) out += " ";
    out += pts_[i].x.str() + ":" + pts_[i].y.str();
  }
  return out;
}

PLMap PLMap::parse(std::string_view text) {
  std::vector<Point> pts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(i, end - i);
    auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw SyntaxError("expected 'x:y' pair", i);
    pts.push_back({Dyadic::parse(tok.substr(0, colon)), Dyadic::parse(tok.substr(colon + 1))});
    i = end;
  }
  if (pts.size() < 2) throw SyntaxError("a map needs at least two breakpoints", 0);
  Interval dom(pts.front().x, pts.back().x);
  return PLMap::make(std::move(dom), std::move(pts));
}

std::string PLMap::json() const {
  std::ostringstream os;
  os << "{\"domain\": [\"" << domain_.lo.str() << "\", \"" << domain_.hi.str()
     << "\"], \"points\": [";
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i) os << ", ";
    os << "[\"" << pts_[i].x.str() << "\", \"" << pts_[i].y.str() << "\"]";
  }
  os << "]}";
  return os.str();
}

std::string PLMap::csv() const {
  std::string out = "x,y\n";
  for (const auto& p : pts_) out += p.x.str() + "," + p.y.str() + "\n";
  return out;
}

}  // namespace thompson

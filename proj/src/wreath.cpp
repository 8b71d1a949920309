#include "thompson/wreath.hpp"

#include <cctype>
#include <sstream>

#include "thompson/words.hpp"

namespace thompson {

WreathElement::WreathElement(long s, std::map<long, long> c) : shift(s), coeffs(std::move(c)) {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
}

WreathElement w_mul(const WreathElement& u, const WreathElement& v) {
  WreathElement out;
  out.shift = u.shift + v.shift;
  for (const auto& [k, m] : u.coeffs) out.coeffs[k + v.shift] += m;
  for (const auto& [k, m] : v.coeffs) out.coeffs[k] += m;
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

WreathElement w_inv(const WreathElement& u) {
  WreathElement out;
  out.shift = -u.shift;
  for (const auto& [k, m] : u.coeffs) out.coeffs[k - u.shift] = -m;
  return out;
}

WreathElement w_pow(const WreathElement& u, long n) {
  WreathElement base = n < 0 ? w_inv(u) : u;
  WreathElement acc;
  for (long i = 0, m = n < 0 ? -n : n; i < m; ++i) acc = w_mul(acc, base);
  return acc;
}

PLMap embed(const WreathElement& u) {
  PLMap acc = power(a_map(), u.shift);
  for (const auto& [k, m] : u.coeffs)
    acc = compose(acc, conjugate(power(b_map(), m), power(a_map(), k)));
  return acc;
}

Dyadic grid_point(long k) {
  // 1/2 x0^{2k}; iterating x0 keeps everything exact.
  Dyadic p(BigInt(1), 1);
  const PLMap x0 = generator_map(0);
  if (k >= 0) {
    for (long i = 0; i < 2 * k; ++i) p = x0.evaluate(p);
  } else {
    const PLMap x0inv = inverse(x0);
    for (long i = 0; i < -2 * k; ++i) p = x0inv.evaluate(p);
  }
  return p;
}

Interval support_interval(long k) { return Interval(grid_point(k), grid_point(k + 1)); }

namespace {

// The k with grid_point(k) == x, if any.  Since grid_point(k) is
// 1 - 2^-(2k+1) for k >= 0 and 2^(2k-1) for k <= 0, work off the exponent.
bool grid_index_of(const Dyadic& x, long& k_out) {
  if (x.num() == 1) {
    // 1/2^e = 2^(2k-1) needs e odd
    int e = x.exp();
    if (e % 2 == 0) return false;
    k_out = -(static_cast<long>(e) - 1) / 2;
    return true;
  }
  Dyadic d = Dyadic(1) - x;
  if (d.num() == 1 && d.exp() % 2 == 1) {
    k_out = (static_cast<long>(d.exp()) - 1) / 2;
    return true;
  }
  return false;
}

}  // namespace

WreathElement decompose(const PLMap& f) {
  if (f.domain() != unit_interval())
    throw DomainMismatch("decompose needs domain [0, 1], got " + f.domain().str());
  int s0 = slope_right(f, Dyadic(0));
  if (s0 % 2 != 0)
    throw NotInWreathSubgroup("initial slope exponent " + std::to_string(s0) +
                              " is odd; powers of a have even exponent");
  long m = s0 / 2;
  WreathElement out;
  out.shift = m;
  PLMap base = compose(power(a_map(), -m), f);
  SupportSet supp = support(base);
  for (const auto& iv : supp.intervals) {
    if (!is_dyadic(iv.lo) || !is_dyadic(iv.hi))
      throw NotInWreathSubgroup("support endpoint " + rational_str(iv.lo) +
                                " is not on the S_k grid");
    Dyadic lo = to_dyadic(iv.lo);
    Dyadic hi = to_dyadic(iv.hi);
    long k;
    if (!grid_index_of(lo, k) || grid_point(k + 1) != hi)
      throw NotInWreathSubgroup("support component (" + lo.str() + ", " + hi.str() +
                                ") is not one of the S_k");
    out.coeffs[k] = slope_right(base, lo);
  }
  if (embed(out) != f)
    throw NotInWreathSubgroup("reconstruction mismatch: map is not in <a, b>");
  return out;
}

std::string WreathElement::str() const {
  std::string out = "shift=" + std::to_string(shift) + "; coeffs={";
  bool first = true;
  for (const auto& [k, m] : coeffs) {
    if (!first) out += ", ";
    out += std::to_string(k) + ":" + std::to_string(m);
    first = false;
  }
  return out + "}";
}

std::string WreathElement::json() const {
  std::ostringstream os;
  os << "{\"shift\": " << shift << ", \"coeffs\": {";
  bool first = true;
  for (const auto& [k, m] : coeffs) {
    if (!first) os << ", ";
    os << "\"" << k << "\": " << m;
    first = false;
  }
  os << "}}";
  return os.str();
}

WreathElement WreathElement::parse(std::string_view text) {
  auto fail = [&](std::size_t pos) {
    throw SyntaxError("expected 'shift=m; coeffs={k:m, ...}', got '" + std::string(text) + "'",
                      pos);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](std::string_view lit) {
    skip_ws();
    if (text.substr(i, lit.size()) != lit) fail(i);
    i += lit.size();
  };
  auto parse_long = [&] {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) fail(start);
    try {
      return std::stol(std::string(text.substr(start, i - start)));
    } catch (const std::out_of_range&) {
      throw SyntaxError("number out of range", start);
    }
  };
  expect("shift=");
  long shift = parse_long();
  expect(";");
  expect("coeffs=");
  expect("{");
  std::map<long, long> coeffs;
  skip_ws();
  if (i < text.size() && text[i] != '}') {
    while (true) {
      long k = parse_long();
      expect(":");
      long m = parse_long();
      coeffs[k] += m;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  expect("}");
  skip_ws();
  if (i != text.size()) fail(i);
  return WreathElement(shift, std::move(coeffs));
}

}  // namespace thompson

#include "thompson/dyadic.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace thompson {

namespace {

bool parse_bigint(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  return true;
}

}  // namespace

int two_valuation(const BigInt& n) {
  // lsb() is the index of the least significant set bit.
  return static_cast<int>(boost::multiprecision::lsb(boost::multiprecision::abs(n)));
}

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ > 0) {
    int v = two_valuation(num_);
    int shift = v < exp_ ? v : exp_;
    if (shift > 0) {
      num_ >>= shift;
      exp_ -= shift;
    }
  }
}

Dyadic::Dyadic(BigInt n, int e) : num_(std::move(n)), exp_(e) {
  if (e < 0) {
    // n / 2^e with e < 0 is the integer n * 2^|e|.
    num_ <<= -e;
    exp_ = 0;
  }
  canonicalize();
}

Dyadic Dyadic::pow2(int s) {
  if (s >= 0) return Dyadic(BigInt(1) << s);
  return Dyadic(BigInt(1), -s);
}

Dyadic Dyadic::times_pow2(int s) const {
  if (num_ == 0) return Dyadic();
  if (s >= 0) return Dyadic(num_ << s, exp_);
  return Dyadic(num_, exp_ - s);
}

BigInt Dyadic::floor() const {
  if (exp_ == 0) return num_;
  BigInt q = num_ >> exp_;  // arithmetic shift: rounds toward -inf
  return q;
}

int Dyadic::log2_exact() const {
  if (num_ <= 0) throw NotAPowerOfTwo("log2_exact: value is not positive: " + str());
  int v = two_valuation(num_);
  if ((num_ >> v) != 1)
    throw NotAPowerOfTwo("log2_exact: value has an odd factor != 1: " + str());
  return v - exp_;
}

Rational Dyadic::to_rational() const {
  return Rational(num_, BigInt(1) << exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  BigInt n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
  return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic operator-(const Dyadic& a) {
  Dyadic r;
  r.num_ = -a.num_;
  r.exp_ = a.exp_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  // a.num / 2^a.exp <=> b.num / 2^b.exp, cross-multiplied by 2^max.
  int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  BigInt lhs = a.num_ << (e - a.exp_);
  BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt n;
  if (slash == std::string_view::npos) {
    if (!parse_bigint(text, n))
      throw SyntaxError("expected a dyadic rational, got '" + std::string(text) + "'", 0);
    return Dyadic(std::move(n));
  }
  if (!parse_bigint(text.substr(0, slash), n))
    throw SyntaxError("bad numerator in '" + std::string(text) + "'", 0);
  std::string_view den = text.substr(slash + 1);
  if (den.rfind("2^", 0) == 0) {
    BigInt e;
    if (!parse_bigint(den.substr(2), e) || e < 0)
      throw SyntaxError("bad exponent in '" + std::string(text) + "'", slash + 1);
    return Dyadic(std::move(n), static_cast<int>(e));
  }
  BigInt d;
  if (!parse_bigint(den, d) || d <= 0)
    throw SyntaxError("bad denominator in '" + std::string(text) + "'", slash + 1);
  int v = two_valuation(d);
  if ((d >> v) != 1)
    throw SyntaxError("denominator is not a power of two in '" + std::string(text) + "'",
                      slash + 1);
  return Dyadic(std::move(n), v);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

bool is_dyadic(const Rational& r) {
  BigInt d = boost::multiprecision::denominator(r);
  return (d >> two_valuation(d)) == 1;
}

Dyadic to_dyadic(const Rational& r) {
  BigInt d = boost::multiprecision::denominator(r);
  return Dyadic(boost::multiprecision::numerator(r), two_valuation(d));
}

std::string rational_str(const Rational& r) {
  if (is_dyadic(r)) return to_dyadic(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace thompson

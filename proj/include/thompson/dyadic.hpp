#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "thompson/errors.hpp"

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact dyadic rational num / 2^exp with an arbitrary-precision numerator.
///
/// Canonical form: exp == 0, or num is odd.  Every constructor and every
/// operation canonicalizes, so structural equality coincides with equality
/// of rational values.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long long n) : num_(n), exp_(0) {}
  Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
  Dyadic(BigInt n, int e);

  /// 2^s for any integer s (negative s gives 1/2^|s|).
  static Dyadic pow2(int s);

  /// Accepts "n", "n/2^e" and "n/d" with d a positive power of two.
  static Dyadic parse(std::string_view text);

  const BigInt& num() const { return num_; }
  int exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  /// Largest integer <= value.
  BigInt floor() const;

  /// Exact value * 2^s.
  Dyadic times_pow2(int s) const;

  /// The m with value == 2^m; throws NotAPowerOfTwo otherwise (also for
  /// values <= 0).
  int log2_exact() const;

  Rational to_rational() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "n/2^e" for non-integers, plain decimal for integers.
  std::string str() const;

 private:
  void canonicalize();

  BigInt num_;
  int exp_;  // >= 0
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

/// Splits n != 0 as odd * 2^v; returns v.
int two_valuation(const BigInt& n);

/// True when r has a power-of-two denominator (every dyadic does).
bool is_dyadic(const Rational& r);

/// Exact conversion; precondition: is_dyadic(r).
Dyadic to_dyadic(const Rational& r);

/// Renders dyadic values as Dyadic::str(), everything else as "p/q".
std::string rational_str(const Rational& r);

}  // namespace thompson

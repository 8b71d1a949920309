#pragma once

#include <map>
#include <string>
#include <string_view>

#include "thompson/plmap.hpp"

namespace thompson {

/// Element of the restricted wreath product Z wr Z in normal form
/// a^shift * prod_k (a^-k b^{coeffs[k]} a^k), with a = (shift 1, no
/// coefficients) and a^-k b a^k = (shift 0, coefficient 1 at k).
///
/// The product rule follows from those constraints alone:
///   (m, c) * (m', c') = (m + m', translate(c, m') + c')
/// since a^-m' (a^-k b a^k) a^m' = a^-(k+m') b a^(k+m').
struct WreathElement {
  long shift = 0;
  std::map<long, long> coeffs;  // finitely supported, no zero values

  WreathElement() = default;
  WreathElement(long s, std::map<long, long> c);

  static WreathElement identity() { return {}; }
  static WreathElement gen_a() { return WreathElement(1, {}); }
  static WreathElement gen_b() { return WreathElement(0, {{0, 1}}); }
  /// a^-k b a^k.
  static WreathElement basis(long k) { return WreathElement(0, {{k, 1}}); }

  bool is_identity() const { return shift == 0 && coeffs.empty(); }

  friend bool operator==(const WreathElement& u, const WreathElement& v) = default;

  /// "shift=m; coeffs={k1:m1, k2:m2, ...}" with keys increasing.
  std::string str() const;
  static WreathElement parse(std::string_view text);
  std::string json() const;
};

WreathElement w_mul(const WreathElement& u, const WreathElement& v);
WreathElement w_inv(const WreathElement& u);
WreathElement w_pow(const WreathElement& u, long n);

/// The exact map a^m * prod_k (a^-k b^{m_k} a^k) in PL2([0,1]).
PLMap embed(const WreathElement& u);

/// The k-th support interval S_k = (1/2 x0^{2k}, 1/2 x0^{2k+2}); the open
/// support of a^-k b a^k.
Interval support_interval(long k);

/// The grid point 1/2 x0^{2k} (left endpoint of S_k).
Dyadic grid_point(long k);

/// Inverse of embed.  Reads the shift off the initial slope (a has initial
/// slope 4, the base group fixes a neighbourhood of 0), strips it, then
/// reads each coefficient m_k off the slope just right of the left end of
/// S_k (the restriction of a^-k b a^k there has initial slope 2, so its
/// l-th power has initial slope 2^l).  A full reconstruction check rejects
/// every map outside the subgroup.  Throws NotInWreathSubgroup.
WreathElement decompose(const PLMap& f);

}  // namespace thompson

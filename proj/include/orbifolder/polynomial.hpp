#ifndef ORBIFOLDER_POLYNOMIAL_HPP
#define ORBIFOLDER_POLYNOMIAL_HPP

#include <map>
#include <optional>

#include "orbifolder/numeric.hpp"

namespace orbifolder {

/// Dense integer polynomial, coefficients from degree 0 upward.  The empty
/// vector is the zero polynomial; otherwise the leading coefficient is
/// non-zero.
struct IPoly {
  std::vector<Int> coeffs;

  IPoly() = default;
  explicit IPoly(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }

  static IPoly zero() { return IPoly(); }
  static IPoly one() { return IPoly({Int(1)}); }
  /// x^t - 1
  static IPoly xt_minus_one(int t);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : Int(0);
  }
  void normalize();

  bool operator==(const IPoly& o) const { return coeffs == o.coeffs; }
};

IPoly add(const IPoly& a, const IPoly& b);
IPoly sub(const IPoly& a, const IPoly& b);
IPoly mul(const IPoly& a, const IPoly& b);
IPoly pow(const IPoly& a, int e);

/// Quotient when b divides a exactly over Z; nullopt otherwise.
std::optional<IPoly> divide_exact(const IPoly& a, const IPoly& b);

/// The s-th cyclotomic polynomial.
IPoly cyclotomic(int s);

/// Multiplicities a_s of the cyclotomic factors of p, provided p is (up to
/// sign checks) a product of cyclotomic polynomials; nullopt otherwise.
/// Requires p monic.
std::optional<std::map<int, int>> cyclotomic_multiplicities(const IPoly& p);

std::string to_string(const IPoly& p);

}  // namespace orbifolder

#endif

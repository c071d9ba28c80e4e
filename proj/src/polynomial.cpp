#include "orbifolder/polynomial.hpp"

#include <sstream>

namespace orbifolder {

void IPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IPoly IPoly::xt_minus_one(int t) {
  std::vector<Int> c(t + 1, Int(0));
  c[0] = -1;
  c[t] = 1;
  return IPoly(std::move(c));
}

IPoly add(const IPoly& a, const IPoly& b) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return IPoly(std::move(c));
}

IPoly sub(const IPoly& a, const IPoly& b) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return IPoly(std::move(c));
}

IPoly mul(const IPoly& a, const IPoly& b) {
  if (a.is_zero() || b.is_zero()) return IPoly::zero();
  std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return IPoly(std::move(c));
}

IPoly pow(const IPoly& a, int e) {
  IPoly r = IPoly::one();
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::optional<IPoly> divide_exact(const IPoly& a, const IPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return IPoly::zero();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem = a.coeffs;
  std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
  const Int& lead = b.coeffs.back();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Int top = rem[i + b.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    quot[i] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= q * b.coeffs[j];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return IPoly(std::move(quot));
}

IPoly cyclotomic(int s) {
  // x^s - 1 = prod_{d | s} Phi_d, peel off the proper divisors.
  IPoly p = IPoly::xt_minus_one(s);
  for (int d = 1; d < s; ++d) {
    if (s % d != 0) continue;
    auto q = divide_exact(p, cyclotomic(d));
    p = *q;
  }
  return p;
}

std::optional<std::map<int, int>> cyclotomic_multiplicities(const IPoly& p) {
  if (p.is_zero() || p.coeffs.back() != 1) return std::nullopt;
  std::map<int, int> mult;
  IPoly rest = p;
  int s = 0;
  while (rest.degree() > 0) {
    ++s;
    if (s > 4 * (p.degree() + 1) + 8) return std::nullopt;
    if (euler_phi(s) > rest.degree()) continue;
    IPoly phi = cyclotomic(s);
    for (;;) {
      auto q = divide_exact(rest, phi);
      if (!q) break;
      rest = *q;
      mult[s] += 1;
    }
  }
  if (!(rest == IPoly::one())) return std::nullopt;
  return mult;
}

std::string to_string(const IPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i) == 0) continue;
    if (!first) os << " + ";
    os << p.coeff(i).get_str() << "*x^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace orbifolder

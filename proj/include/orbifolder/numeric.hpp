#ifndef ORBIFOLDER_NUMERIC_HPP
#define ORBIFOLDER_NUMERIC_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 120,
    MulCost = 120
  };
};

}  // namespace Eigen

namespace orbifolder {

/// Exact arbitrary-precision integer and rational scalars.  mpq_class keeps
/// values in lowest terms with positive denominator, which is exactly the
/// invariant the domain requires.
using Int = mpz_class;
using Rat = mpq_class;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline IMat imat_identity(Eigen::Index n) { return IMat::Identity(n, n); }

inline RMat to_rational(const IMat& m) { return m.cast<Rat>(); }
inline RVec to_rational(const IVec& v) { return v.cast<Rat>(); }

/// Numerator/denominator access without GMP reference surprises.
inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Canonicalized fraction (mpq_class two-argument construction does not
/// reduce on its own).
inline Rat frac(const Int& p, const Int& q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}
inline Rat frac(long p, long q) { return frac(Int(p), Int(q)); }

inline bool is_integral(const RVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

inline IVec to_integer(const RVec& v) {
  IVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integral(v(i))) throw std::invalid_argument("vector not integral");
    r(i) = num(v(i));
  }
  return r;
}

inline Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline Int ceil_rat(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

/// Nearest integer, ties broken downward: floor(q + 1/2).
inline Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

/// Representative of q mod 1 in [0, 1).
inline Rat mod1(const Rat& q) { return q - Rat(floor_rat(q)); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int lcm_of_denominators(const RVec& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, den(v(i)));
  return l;
}

inline Int lcm_of_denominators(const RMat& m) {
  Int l = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) l = lcm(l, den(m(i, j)));
  return l;
}

std::vector<int> divisors(int n);
std::vector<int> prime_factors(int n);
int moebius(int n);
int euler_phi(int n);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

/// Deterministic total order on coordinate vectors, used to stabilize output.
bool lex_less(const IVec& a, const IVec& b);
bool lex_less(const RVec& a, const RVec& b);

}  // namespace orbifolder

#endif

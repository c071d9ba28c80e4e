#ifndef ORBIFOLDER_LINALG_HPP
#define ORBIFOLDER_LINALG_HPP

#include <optional>

#include "orbifolder/numeric.hpp"
#include "orbifolder/polynomial.hpp"

namespace orbifolder {

/// U * M * V = S with S diagonal, diagonal entries non-negative and forming a
/// divisibility chain, U and V unimodular.
struct SmithDecomposition {
  IMat S;
  IMat U;
  IMat V;
};

SmithDecomposition smith_normal_form(const IMat& m);

/// Row-style Hermite normal form: returns H with the same row span as A over
/// Z, in row echelon form with positive pivots and reduced entries above them.
/// Zero rows are dropped.
IMat hnf_rows(const IMat& a);

/// Column-style HNF; same column span as A, zero columns dropped.
inline IMat hnf_cols(const IMat& a) { return hnf_rows(a.transpose()).transpose().eval(); }

/// Some integral solution of A x = b, if one exists.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

/// Exact solution of A x = b over the rationals, if consistent.  When the
/// kernel is non-trivial an arbitrary (deterministic) solution is returned.
std::optional<RVec> solve_rational(const RMat& a, const RVec& b);

/// Exact LLL reduction (delta = 3/4) of a positive-definite rational Gram
/// matrix.  New basis = old basis * u.
struct GramReduction {
  RMat gram;
  IMat u;
  IMat uinv;
};
GramReduction lll_gram(const RMat& gram);

/// Basis (as columns) of the saturated integer kernel {x in Z^n : A x = 0},
/// LLL-reduced.
IMat integer_kernel(const IMat& a);

/// Basis (as columns) of {x in Q^n : A x = 0}.
RMat rational_kernel(const RMat& a);

Eigen::Index rank_of(const RMat& a);

Rat determinant(const RMat& a);
Int determinant(const IMat& a);

/// Inverse of a square non-singular rational matrix.
RMat inverse(const RMat& a);

/// Characteristic polynomial of a square integer matrix, monic, exact
/// (division-free Berkowitz scheme).
IPoly char_poly(const IMat& m);

}  // namespace orbifolder

#endif

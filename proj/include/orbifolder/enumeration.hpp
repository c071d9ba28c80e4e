#ifndef ORBIFOLDER_ENUMERATION_HPP
#define ORBIFOLDER_ENUMERATION_HPP

#include "orbifolder/lattice.hpp"

namespace orbifolder {

/// Reusable enumerator for one positive-definite form: the reduction and the
/// LDL data are computed once, then many coset queries can be answered.
class FormEnumerator {
 public:
  explicit FormEnumerator(const RMat& gram);

  std::vector<IVec> shorter_than(const Rat& bound) const;
  Rat min_coset(const RVec& t) const;
  Int count_coset(const RVec& t, const Rat& norm) const;
  Eigen::Index rank() const { return gram_.rows(); }

 private:
  RMat gram_;          // original form
  GramReduction red_;
  RMat r_;             // unit upper factor of the reduced form
  RVec d_;             // positive diagonal
};

/// All x in Z^r with 0 < x^T Q x <= bound for a positive-definite rational
/// form Q.  Exact branch-and-bound over an LDL^T decomposition; both signs of
/// each vector are reported; output sorted lexicographically.
std::vector<IVec> short_form_vectors(const RMat& q, const Rat& bound);

/// min over x in Z^r of (x+t)^T Q (x+t).
Rat min_coset_norm_form(const RMat& q, const RVec& t);

/// #{x in Z^r : (x+t)^T Q (x+t) = norm}.
Int count_coset_norm_form(const RMat& q, const RVec& t, const Rat& norm);

/// Norm-bounded vectors of a lattice, in lattice coordinates.
std::vector<IVec> vectors_up_to_norm(const Lattice& l, const Rat& bound);

/// Minimum norm over the coset M + h, h given in ambient coordinates and
/// required to lie in the rational span of M.
Rat min_coset_norm(const Sublattice& m, const RVec& h);
Rat min_coset_norm(const GeneratedLattice& m, const RVec& h);

Int count_coset_vectors_of_norm(const Sublattice& m, const RVec& h, const Rat& norm);
Int count_coset_vectors_of_norm(const GeneratedLattice& m, const RVec& h, const Rat& norm);

}  // namespace orbifolder

#endif

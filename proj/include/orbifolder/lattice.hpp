#ifndef ORBIFOLDER_LATTICE_HPP
#define ORBIFOLDER_LATTICE_HPP

#include <string>

#include "orbifolder/linalg.hpp"

namespace orbifolder {

/// An even, positive-definite integral lattice presented by its Gram matrix.
/// Vectors are column coordinate vectors with respect to the implicit basis.
struct Lattice {
  IMat gram;
  std::string label;

  Eigen::Index rank() const { return gram.rows(); }
};

/// Coordinates of a (possibly rational) point of L tensor Q in the basis of L.
using LatticeVector = RVec;

/// Validates symmetry, evenness of the diagonal and positive definiteness.
Lattice make_lattice(IMat gram, std::string label = {});

bool is_positive_definite(const IMat& gram);

/// A sublattice of full rank in its own span, given by an independent rational
/// basis in ambient coordinates.  Rank 0 is a valid value.
struct Sublattice {
  IMat ambient_gram;
  RMat basis;  // columns; ambient coordinates
  RMat gram;   // basis^T * ambient_gram * basis

  Eigen::Index rank() const { return basis.cols(); }
};

/// Finitely generated subgroup of L tensor Q: keeps the generators as given
/// (not necessarily independent).  Used for projected lattices.
struct GeneratedLattice {
  IMat ambient_gram;
  RMat generators;  // columns
};

Rat inner_product(const Lattice& l, const LatticeVector& u, const LatticeVector& v);
Rat inner_product(const IMat& gram, const RVec& u, const RVec& v);

/// Columns of gram^{-1}: the dual basis of L in the coordinates of L.
RMat dual_basis(const Lattice& l);

struct DiscriminantGroup {
  std::vector<Int> elementary_divisors;  // > 1, divisibility chain order
  RMat generators;                       // columns, ambient coordinates
  Int order;
};

DiscriminantGroup discriminant_group(const Lattice& l);

/// Sublattice with the given generating set, reduced to a canonical basis.
Sublattice sublattice_from_generators(const IMat& ambient_gram, const RMat& generators);

/// Dual of a sublattice inside its own rational span.
Sublattice dual_in_span(const Sublattice& s);

/// Membership of v in the integer span of the columns of gens.
bool contains(const IMat& /*ambient_gram*/, const RMat& gens, const RVec& v);
bool contains(const Sublattice& s, const RVec& v);
bool contains(const GeneratedLattice& g, const RVec& v);

/// Smallest k >= 1 with k*h in the sublattice; throws if no multiple lies in
/// the span.
Int coset_order(const LatticeVector& h, const Sublattice& m);

/// Index |A/B| for B a finite-index sublattice of A.
Int sublattice_index(const Sublattice& a, const Sublattice& b);

/// Fixed-point sublattice L^nu = ker(nu - 1) intersected with L; primitive by
/// construction (saturated integer kernel).
Sublattice fixed_sublattice(const Lattice& l, const IMat& nu);

/// pi_nu(v) = (1/m) sum nu^i v for nu of finite order m.
RVec project_fixed(const IMat& nu, int order, const RVec& v);

/// The projection pi_nu(L) of the full lattice, as a generated lattice.
GeneratedLattice projected_lattice(const Lattice& l, const IMat& nu, int order);

/// Coset representatives of (A + B)/B for two sublattices of the same ambient
/// space, enumerated deterministically via the Smith normal form of the
/// relation matrix.  A and B need not contain one another.
std::vector<RVec> quotient_representatives(const Sublattice& a, const Sublattice& b);

}  // namespace orbifolder

#endif

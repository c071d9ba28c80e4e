#ifndef ORBIFOLDER_ISOMETRY_HPP
#define ORBIFOLDER_ISOMETRY_HPP

#include "orbifolder/lattice.hpp"

namespace orbifolder {

/// A finite-order isometry of a lattice: integer matrix acting on coordinate
/// columns with mat^T G mat = G.
struct Isometry {
  IMat mat;
  int order;
};

/// Validates the Gram invariance and computes the order (via the cyclotomic
/// factorization of the characteristic polynomial, then an explicit power
/// check).  Throws on non-isometries and infinite order.
Isometry make_isometry(const Lattice& l, IMat mat);

/// Frame shape prod t^{b_t}: char poly = prod (x^t - 1)^{b_t}, t | order.
struct FrameShape {
  std::map<int, int> exponents;  // only non-zero b_t
  int order = 1;

  bool operator==(const FrameShape& o) const = default;
};

std::string to_string(const FrameShape& f);

/// Exponents via Moebius inversion on the cyclotomic multiplicities, verified
/// by exact polynomial multiplication.
FrameShape frame_shape(const Lattice& l, const Isometry& nu);
FrameShape frame_shape_of_power(const Lattice& l, const Isometry& nu, int i);

/// True iff a standard lift of nu has order 2m rather than m: for even order
/// m, the parity form alpha -> <alpha, nu^{m/2} alpha> is non-trivial.
bool order_doubling(const Lattice& l, const Isometry& nu);

/// Deterministic set of simple roots: positive system for a fixed generic
/// linear functional, then the indecomposable elements.  Sorted.
std::vector<IVec> simple_roots(const Lattice& l, const std::vector<IVec>& roots);

bool stabilizes_simple_roots(const Isometry& nu, const std::vector<IVec>& delta);

/// w * nu for the unique Weyl element w with (w nu)(Delta) = Delta.  Requires
/// the root system to span the ambient space.
IMat conjugate_into_stabilizer(const Lattice& l, const std::vector<IVec>& delta, const IMat& nu);

/// Partition of the given h vectors under h -> i^{-1} tau h modulo the dual
/// of the fixed sublattice, for supplied normalizer elements tau (powers of
/// nu act trivially on nu-fixed h and contribute nothing).  Returns the
/// partition as index lists, each sorted, ordered by smallest member.
std::vector<std::vector<int>> power_equivalence_classes(const Lattice& l, const Isometry& nu,
                                                        const std::vector<RVec>& hs,
                                                        const std::vector<IMat>& normalizer_gens);

}  // namespace orbifolder

#endif

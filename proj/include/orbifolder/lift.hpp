#ifndef ORBIFOLDER_LIFT_HPP
#define ORBIFOLDER_LIFT_HPP

#include "orbifolder/isometry.hpp"

namespace orbifolder {

/// Per-lattice data shared by every automorphism computation: the root list,
/// the deterministic simple system and the cocycle convention.
struct VoaContext {
  Lattice lattice;
  std::vector<IVec> roots;  // norm-2 vectors, sorted
  std::vector<IVec> delta;  // simple roots of the positive system
  IMat eps_lower;           // strict lower triangle of the Gram matrix

  Eigen::Index rank() const { return lattice.rank(); }
};

VoaContext make_context(Lattice l);

/// The bimultiplicative 2-cocycle: eps(b_i, b_j) = (-1)^{<b_i,b_j>} for
/// i > j and +1 for i <= j.
int cocycle_sign(const VoaContext& ctx, const IVec& a, const IVec& b);

/// Sign function eta: L -> {+-1} with
///   eta(a) eta(b) / eta(a+b) = eps(a, b) / eps(nu a, nu b),
/// stored through the parity form of the right-hand side and a linear twist.
struct EtaFunction {
  IMat f_parity;            // F mod 2: f(a,b) = (-1)^{a^T F b}
  std::vector<int> linear;  // character parities on the basis

  int sign(const IVec& alpha) const;
};

/// Standard lift data: eta trivial on the fixed sublattice of nu.
EtaFunction standard_eta(const VoaContext& ctx, const Isometry& nu);

/// g = (standard lift of nu) composed with e^{-2 pi i h(0)}.
struct LiftedAutomorphism {
  Isometry nu;
  EtaFunction eta;
  RVec h;     // fixed by nu
  int order;  // order of g
};

/// Validates that nu is an isometry fixing h and computes everything else.
LiftedAutomorphism make_lifted(const VoaContext& ctx, IMat nu_mat, RVec h);

/// Scalar of (standard lift of nu)^i on e_alpha: prod_{j<i} eta(nu^j alpha).
int lift_power_sign(const VoaContext& ctx, const LiftedAutomorphism& g, int i, const IVec& alpha);

/// The vector s_i in (1/2) (L^{nu^i})' with e^{-2 pi i <s_i, .>} equal to the
/// power sign character on L^{nu^i}; canonical representative with dual-basis
/// coordinates in [0, 1).
RVec s_vector(const VoaContext& ctx, const LiftedAutomorphism& g, int i);
RVec s_vector(const VoaContext& ctx, const LiftedAutomorphism& g, int i,
              const Sublattice& fixed_of_power);

/// Smallest k with nu^k = 1 and trivial scalars on the graded components.
int order_of(const VoaContext& ctx, const Isometry& nu, const EtaFunction& eta, const RVec& h);

/// Action of nu on the root list as an index permutation.
std::vector<int> root_action(const VoaContext& ctx, const IMat& nu_mat);

/// dim V_1^{g^d}: rank of the fixed sublattice of nu^d plus the number of
/// root orbits with trivial holonomy.
int fixed_weight_one_dim(const VoaContext& ctx, const LiftedAutomorphism& g, int d);
int fixed_weight_one_dim(const VoaContext& ctx, const LiftedAutomorphism& g, int d,
                         const std::vector<int>& root_perm,
                         const std::vector<Sublattice>& fixed_by_residue);

/// True iff g acts with full Lie rank on the weight-one space (requires nu in
/// the simple-root stabilizer, where that rank is rk L^nu).
bool is_inner(const VoaContext& ctx, const LiftedAutomorphism& g);

}  // namespace orbifolder

#endif

#ifndef ORBIFOLDER_ORBIFOLD_HPP
#define ORBIFOLDER_ORBIFOLD_HPP

#include <memory>
#include <optional>

#include "orbifolder/catalog.hpp"
#include "orbifolder/enumeration.hpp"
#include "orbifolder/lift.hpp"

namespace orbifolder {

/// rho_nu = (1/24) sum_t b_t (t - 1/t).
Rat vacuum_anomaly(const FrameShape& fs);

/// Coefficients of the weight-one dimension formula: Euler product,
/// cross-checked against the defining linear system (throws on mismatch).
Rat c_coeff(int n, int d);

/// Everything about one isometry that does not depend on h; built once and
/// shared by all candidate automorphisms g = nu-hat e^{-2 pi i h(0)}.
struct NuContext {
  const VoaContext* voa = nullptr;
  Isometry nu;
  EtaFunction eta;
  std::vector<int> root_perm;            // action of nu on the root list
  std::vector<IMat> nu_pow;              // nu^i, i = 0..m-1
  std::vector<FrameShape> frame_pow;     // frame shape of nu^i
  std::vector<Sublattice> fixed_pow;     // L^{nu^i}
  std::vector<Sublattice> proj_pow;      // pi_{nu^i}(L)
  std::vector<std::shared_ptr<FormEnumerator>> enum_pow;  // for proj_pow
  std::vector<RVec> s_pow;               // s_i, i = 0..2m-1 (period 2m)
  Sublattice fixed_dual;                 // (L^nu)'
  bool doubling = false;

  int order() const { return nu.order; }
  // data of nu itself (index 1 cyclically; index 0 holds the identity power)
  const Sublattice& fixed_nu() const { return fixed_pow[1 % fixed_pow.size()]; }
  const Sublattice& proj_nu() const { return proj_pow[1 % proj_pow.size()]; }
  const FrameShape& frame_nu() const { return frame_pow[1 % frame_pow.size()]; }
};

NuContext make_nu_context(const VoaContext& voa, IMat nu_mat);

struct Fingerprint {
  int order;
  bool type_zero;
  bool extremal;
  int fixed_dim;
  int resolved_entry;  // -1 when unresolved
  int eigenspace_dim;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
};

struct OrbifoldReport {
  std::string lattice_label;
  int order = 1;
  FrameShape frame;
  bool order_doubling = false;
  int type = 0;
  std::vector<Rat> conformal_weights;  // rho(V(g^i)), i = 1..n-1
  std::map<int, int> fixed_dims;       // d | n -> dim V_1^{g^d}
  bool is_short = false;
  std::vector<std::string> short_reasons;  // failed clauses
  bool extremal = false;                   // all weights >= 1 (and type 0)
  bool rank_criterion = false;
  bool gdh_certificate = false;
  int orbifold_dim = 0;
  bool orbifold_dim_exact = false;  // value vs upper bound
  int orbifold_rank = 0;
  std::vector<int> candidates;              // schellekens numbers
  std::optional<int> resolved;              // unique identification
  std::optional<Fingerprint> fingerprint_;  // set for type-0 g
  Int orbit_index = 1;                      // [N^nu : N^{nu,h}]
  Int orbit_disc = 1;                       // |disc N^{nu,h}|
};

/// Individual operations (all pure in h; the context is read-only).
Rat conformal_weight(const NuContext& nc, const LiftedAutomorphism& g, int i);
int type_of(const NuContext& nc, const LiftedAutomorphism& g);
std::pair<int, bool> orbifold_dim(const NuContext& nc, const LiftedAutomorphism& g);
bool rank_criterion(const NuContext& nc, const LiftedAutomorphism& g);
std::pair<bool, std::vector<std::string>> is_short(const NuContext& nc,
                                                   const LiftedAutomorphism& g);
bool gdh_certificate(const NuContext& nc, const LiftedAutomorphism& g);
Fingerprint fingerprint(const NuContext& nc, const LiftedAutomorphism& g);
std::pair<Int, Int> orbit_lattice_invariants(const NuContext& nc, const LiftedAutomorphism& g);

/// Identification of the orbifold weight-one algebra by dimension and rank,
/// refined by the per-cell table data; `resolved` is set only when exactly
/// one entry survives.
struct OrbifoldIdentification {
  int dim = 0;
  bool dim_exact = false;
  int rank = 0;
  std::vector<int> candidates;
  std::optional<int> resolved;
};
OrbifoldIdentification identify_orbifold(const NuContext& nc, const LiftedAutomorphism& g);

/// dim V_L(g^i)_1 from the twisted-module character (optional refinement).
Int twisted_weight_one_dim(const NuContext& nc, const LiftedAutomorphism& g, int i);

/// The defect multiplicity d(nu^i); asserts squareness.
Int twisted_defect(const NuContext& nc, int i);

/// Full report; cheap-to-expensive evaluation order internally.
OrbifoldReport analyze(const NuContext& nc, const RVec& h);
OrbifoldReport analyze(const NuContext& nc, const LiftedAutomorphism& g);

/// The lifted automorphism g built over a nu-context (shares the eta).
LiftedAutomorphism lift_over(const NuContext& nc, const RVec& h);

/// Normal form of g^d over the standard lift of nu^d: the isometry matrix
/// nu^d and the twist vector s_d + d h.  All report invariants of g^d can be
/// computed from this pair.
std::pair<IMat, RVec> power_normal_form(const NuContext& nc, const LiftedAutomorphism& g, int d);

}  // namespace orbifolder

#endif

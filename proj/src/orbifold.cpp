#include <numeric>
#include "orbifolder/orbifold.hpp"

#include <algorithm>
#include <set>

namespace orbifolder {

Rat vacuum_anomaly(const FrameShape& fs) {
  Rat acc = 0;
  for (auto& [t, b] : fs.exponents) acc += Rat(b) * (Rat(t) - Rat(1, t));
  return acc / 24;
}

Rat c_coeff(int n, int d) {
  if (n % d != 0) throw std::invalid_argument("c_coeff: d does not divide n");
  auto euler = [&](int dd) {
    Rat c = frac(n, dd * dd);
    for (int p : prime_factors(dd)) c *= Rat(-p);
    for (int p : prime_factors(std::gcd(dd, n / dd))) c *= Rat(1) - Rat(1, p);
    for (int p : prime_factors(n / dd)) c *= Rat(1) + Rat(1, p);
    return c;
  };
  // cross-check against the defining system sum_{d|n} c_n(d) (t,d) = n/t
  std::vector<int> divs = divisors(n);
  const int k = static_cast<int>(divs.size());
  RMat a(k, k);
  RVec b(k);
  for (int ti = 0; ti < k; ++ti) {
    for (int di = 0; di < k; ++di) a(ti, di) = std::gcd(divs[ti], divs[di]);
    b(ti) = frac(n, divs[ti]);
  }
  auto x = solve_rational(a, b);
  if (!x.has_value()) throw std::logic_error("c_coeff: singular divisor system");
  Rat result;
  for (int di = 0; di < k; ++di) {
    Rat e = euler(divs[di]);
    if (e != (*x)(di)) throw std::logic_error("c_coeff: euler product disagrees with the system");
    if (divs[di] == d) result = e;
  }
  return result;
}

NuContext make_nu_context(const VoaContext& voa, IMat nu_mat) {
  NuContext nc;
  nc.voa = &voa;
  nc.nu = make_isometry(voa.lattice, std::move(nu_mat));
  nc.eta = standard_eta(voa, nc.nu);
  nc.root_perm = root_action(voa, nc.nu.mat);
  nc.doubling = order_doubling(voa.lattice, nc.nu);
  const int m = nc.nu.order;
  IMat p = imat_identity(voa.rank());
  for (int i = 0; i < m; ++i) {
    nc.nu_pow.push_back(p);
    nc.frame_pow.push_back(frame_shape_of_power(voa.lattice, nc.nu, i));
    nc.fixed_pow.push_back(fixed_sublattice(voa.lattice, p));
    GeneratedLattice gl = projected_lattice(voa.lattice, p, m / std::gcd(m, i == 0 ? m : i));
    nc.proj_pow.push_back(sublattice_from_generators(voa.lattice.gram, gl.generators));
    nc.enum_pow.push_back(nc.proj_pow.back().rank() == 0
                              ? nullptr
                              : std::make_shared<FormEnumerator>(nc.proj_pow.back().gram));
    p = (nc.nu.mat * p).eval();
  }
  nc.fixed_dual = dual_in_span(nc.fixed_pow[1 % nc.fixed_pow.size()]);
  LiftedAutomorphism probe{nc.nu, nc.eta, RVec::Zero(voa.rank()), nc.nu.order};
  for (int i = 0; i < 2 * m; ++i)
    nc.s_pow.push_back(s_vector(voa, probe, i, nc.fixed_pow[static_cast<size_t>(i % m)]));
  return nc;
}

LiftedAutomorphism lift_over(const NuContext& nc, const RVec& h) {
  if (to_rational(nc.nu.mat) * h != h)
    throw std::invalid_argument("lifted automorphism: h not fixed by nu");
  int order = order_of(*nc.voa, nc.nu, nc.eta, h);
  return LiftedAutomorphism{nc.nu, nc.eta, h, order};
}

namespace {

// rho(V(g^i)) for the coset s_i + i h + pi_{nu^i}(L).
Rat sector_weight(const NuContext& nc, const LiftedAutomorphism& g, int i, const RVec& s_i) {
  const int m = nc.nu.order;
  Rat anomaly = vacuum_anomaly(nc.frame_pow[static_cast<size_t>(i % m)]);
  const Sublattice& proj = nc.proj_pow[static_cast<size_t>(i % m)];
  RVec offset = s_i + Rat(i) * g.h;
  Rat min;
  if (proj.rank() == 0) {
    if (!offset.isZero()) throw std::logic_error("sector_weight: offset outside the span");
    min = 0;
  } else {
    auto coords = solve_rational(proj.basis, offset);
    if (!coords.has_value()) throw std::logic_error("sector_weight: offset outside the span");
    min = nc.enum_pow[static_cast<size_t>(i % m)]->min_coset(*coords);
  }
  return anomaly + min / 2;
}

RVec sector_s(const NuContext& nc, const LiftedAutomorphism& g, int i) {
  (void)g;
  return nc.s_pow[static_cast<size_t>(i % (2 * nc.nu.order))];
}

}  // namespace

Rat conformal_weight(const NuContext& nc, const LiftedAutomorphism& g, int i) {
  if (i < 1 || i >= g.order) throw std::invalid_argument("conformal_weight: sector index out of range");
  return sector_weight(nc, g, i, sector_s(nc, g, i));
}

int type_of(const NuContext& nc, const LiftedAutomorphism& g) {
  const int n = g.order;
  if (n == 1) return 0;
  Rat rho = conformal_weight(nc, g, 1);
  Rat t = Rat(n) * Rat(n) * rho;
  if (!is_integral(t)) throw std::logic_error("type_of: n^2 rho is not an integer");
  Int r = num(t) % n;
  if (r < 0) r += n;
  return static_cast<int>(r.get_si());
}

bool rank_criterion(const NuContext& nc, const LiftedAutomorphism& g) {
  const int n = g.order;
  for (int i = 1; i < n; ++i) {
    RVec v = project_fixed(nc.nu.mat, nc.nu.order, sector_s(nc, g, i)) + Rat(i) * g.h;
    if (contains(nc.proj_nu(), v)) return false;
  }
  return true;
}

std::pair<bool, std::vector<std::string>> is_short(const NuContext& nc,
                                                   const LiftedAutomorphism& g) {
  std::vector<std::string> reasons;
  if (type_of(nc, g) != 0) reasons.push_back("type is not 0");
  if (g.order != nc.nu.order) reasons.push_back("order of g differs from the order of nu");
  if (coset_order(g.h, nc.fixed_dual) != g.order)
    reasons.push_back("h has the wrong order modulo the dual of the fixed sublattice");
  return {reasons.empty(), reasons};
}

bool gdh_certificate(const NuContext& nc, const LiftedAutomorphism& g) {
  if (type_of(nc, g) != 0) return false;
  for (int i = 1; i < g.order; ++i)
    if (conformal_weight(nc, g, i) < 1) return false;
  return rank_criterion(nc, g);
}

std::pair<int, bool> orbifold_dim(const NuContext& nc, const LiftedAutomorphism& g) {
  const int n = g.order;
  if (nc.voa->rank() != 24) throw std::invalid_argument("orbifold_dim: central charge 24 only");
  if (n == 1) return {24 + static_cast<int>(nc.voa->roots.size()), true};
  Rat acc = 24;
  for (int d : divisors(n))
    acc += c_coeff(n, d) * fixed_weight_one_dim(*nc.voa, g, d, nc.root_perm, nc.fixed_pow);
  if (!is_integral(acc)) throw std::logic_error("orbifold_dim: non-integral dimension");
  bool exact = type_of(nc, g) == 0;
  for (int i = 1; i < n && exact; ++i)
    if (conformal_weight(nc, g, i) < 1) exact = false;
  return {static_cast<int>(num(acc).get_si()), exact};
}

Fingerprint fingerprint(const NuContext& nc, const LiftedAutomorphism& g) {
  Fingerprint fp{};
  const int n = g.order;
  fp.order = n;
  fp.type_zero = type_of(nc, g) == 0;
  fp.extremal = fp.type_zero;
  for (int i = 1; i < n && fp.extremal; ++i)
    if (conformal_weight(nc, g, i) < 1) fp.extremal = false;
  fp.fixed_dim = fixed_weight_one_dim(*nc.voa, g, 1, nc.root_perm, nc.fixed_pow);
  fp.resolved_entry = -1;  // filled by analyze when identification succeeds
  // dimension of the e^{2 pi i / n} eigenspace of g on the weight-one space
  int eig = 0;
  for (auto& [t, b] : nc.frame_nu().exponents)
    if (t % n == 0) eig += b;
  std::vector<char> seen(nc.voa->roots.size(), 0);
  for (size_t i = 0; i < nc.voa->roots.size(); ++i) {
    if (seen[i]) continue;
    int k = 0;
    int at = static_cast<int>(i);
    do {
      seen[at] = 1;
      at = nc.root_perm[at];
      ++k;
    } while (at != static_cast<int>(i));
    const IVec& alpha = nc.voa->roots[i];
    Rat phase = lift_power_sign(*nc.voa, g, k, alpha) == -1 ? Rat(1, 2) : Rat(0);
    phase -= Rat(k) * inner_product(nc.voa->lattice, g.h, to_rational(alpha));
    // holonomy equal to e^{2 pi i k / n}
    if (mod1(phase - frac(k, n)) == 0) eig += 1;
  }
  fp.eigenspace_dim = eig;
  return fp;
}

namespace {

void identify_from_dim_rank(const NuContext& nc, const FrameShape& frame, OrbifoldIdentification& id) {
  for (const auto& e : schellekens_candidates(id.dim, id.rank)) id.candidates.push_back(e.number);
  if (id.candidates.size() == 1) {
    id.resolved = id.candidates.front();
    return;
  }
  auto fam = family_of_frame_shape(frame.exponents);
  const std::string& label = nc.voa->lattice.label;
  if (!fam.has_value() || label.empty()) return;
  std::set<int> admissible;
  for (const auto& col : golden_columns(*fam, label))
    for (auto& [entry, mult] : col.rows) admissible.insert(entry);
  std::vector<int> filtered;
  for (int c : id.candidates)
    if (admissible.count(c)) filtered.push_back(c);
  if (filtered.size() == 1) id.resolved = filtered.front();
}

}  // namespace

OrbifoldIdentification identify_orbifold(const NuContext& nc, const LiftedAutomorphism& g) {
  OrbifoldIdentification id;
  auto [dim, exact] = orbifold_dim(nc, g);
  id.dim = dim;
  id.dim_exact = exact;
  id.rank = static_cast<int>(nc.fixed_nu().rank());
  identify_from_dim_rank(nc, nc.frame_pow[std::min<size_t>(1, nc.frame_pow.size() - 1)], id);
  return id;
}

std::pair<Int, Int> orbit_lattice_invariants(const NuContext& nc, const LiftedAutomorphism& g) {
  const Sublattice& fixed = nc.fixed_nu();
  const Eigen::Index r = fixed.rank();
  Sublattice sub;
  if (r == 0) {
    sub = fixed;
  } else {
    RVec vals(r);
    for (Eigen::Index k = 0; k < r; ++k)
      vals(k) = inner_product(nc.voa->lattice, RVec(fixed.basis.col(k)), g.h);
    Int dcom = lcm_of_denominators(vals);
    IMat rel(1, r + 1);
    for (Eigen::Index k = 0; k < r; ++k) rel(0, k) = num(Rat(vals(k) * dcom));
    rel(0, r) = dcom;
    IMat ker = integer_kernel(rel);
    RMat gens(nc.voa->rank(), ker.cols());
    for (Eigen::Index j = 0; j < ker.cols(); ++j)
      gens.col(j) = fixed.basis * to_rational(IVec(ker.col(j).head(r)));
    sub = sublattice_from_generators(nc.voa->lattice.gram, gens);
  }
  Int index = sublattice_index(fixed, sub);
  if (index != g.order)
    throw std::logic_error("orbit_lattice_invariants: index differs from the order");
  Int disc = sub.rank() == 0 ? Int(1) : num(determinant(sub.gram));
  return {index, disc};
}

Int twisted_defect(const NuContext& nc, int i) {
  const int m = nc.nu.order;
  const IMat& pow = nc.nu_pow[static_cast<size_t>(i % m)];
  const Eigen::Index n = nc.voa->rank();
  // coinvariant lattice of nu^i: integer kernel of sum_j (nu^i)^j
  int mi = m / std::gcd(m, i % m == 0 ? m : i % m);
  IMat acc = IMat::Zero(n, n);
  IMat p = imat_identity(n);
  for (int j = 0; j < mi; ++j) {
    acc += p;
    p = (pow * p).eval();
  }
  IMat coin = integer_kernel(acc);
  if (coin.cols() == 0) return 1;
  // index of (1 - nu^i) L inside the coinvariant lattice
  IMat one_minus = imat_identity(n) - pow;
  RMat coords(coin.cols(), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto x = solve_rational(to_rational(coin), RVec(to_rational(IVec(one_minus.col(j)))));
    if (!x.has_value() || !is_integral(*x))
      throw std::logic_error("twisted_defect: (1-nu)L outside the coinvariant lattice");
    coords.col(j) = *x;
  }
  IMat t(coin.cols(), n);
  for (Eigen::Index a = 0; a < coin.cols(); ++a)
    for (Eigen::Index b = 0; b < n; ++b) t(a, b) = num(coords(a, b));
  IMat h = hnf_cols(t);
  Int index = 1;
  for (Eigen::Index a = 0; a < h.rows() && a < h.cols(); ++a) index *= h(a, a);
  index = abs(index);
  Int root;
  mpz_sqrt(root.get_mpz_t(), index.get_mpz_t());
  if (root * root != index) throw std::logic_error("twisted_defect: index is not a perfect square");
  return root;
}

Int twisted_weight_one_dim(const NuContext& nc, const LiftedAutomorphism& g, int i) {
  const int m = nc.nu.order;
  const FrameShape& fs = nc.frame_pow[static_cast<size_t>(i % m)];
  int mi = fs.order;
  Rat anomaly = vacuum_anomaly(fs);
  // oscillator degree multiplicities a_j for the eigenvalue e^{2 pi i j / mi}
  std::vector<int> mult(static_cast<size_t>(mi), 0);
  for (auto& [t, b] : fs.exponents)
    for (int j = 0; j < mi; ++j)
      if ((static_cast<long>(t) * j) % mi == 0) mult[static_cast<size_t>(j)] += b;
  // partition counts on the (1/mi) grid up to degree 1
  std::vector<Int> ways(static_cast<size_t>(mi) + 1, Int(0));
  ways[0] = 1;
  auto add_mode = [&](int step, int count) {
    for (int rep = 0; rep < count; ++rep)
      for (size_t q = static_cast<size_t>(step); q < ways.size(); ++q)
        ways[q] += ways[q - static_cast<size_t>(step)];
  };
  add_mode(mi, mult[0]);  // integer modes contribute at degree 1
  for (int j = 1; j < mi; ++j)
    if (mult[static_cast<size_t>(j)] > 0) add_mode(j, mult[static_cast<size_t>(j)]);
  // lattice coset part
  const Sublattice& proj = nc.proj_pow[static_cast<size_t>(i % m)];
  RVec offset = sector_s(nc, g, i) + Rat(i) * g.h;
  Int total = 0;
  for (int q = 0; q <= mi; ++q) {
    if (ways[static_cast<size_t>(q)] == 0) continue;
    Rat target = 2 * (Rat(1) - anomaly - frac(q, mi));
    if (target < 0) continue;
    Int count;
    if (proj.rank() == 0) {
      count = (target == 0 && offset.isZero()) ? 1 : 0;
    } else {
      auto coords = solve_rational(proj.basis, offset);
      if (!coords.has_value()) throw std::logic_error("twisted dim: offset outside span");
      count = nc.enum_pow[static_cast<size_t>(i % m)]->count_coset(*coords, target);
    }
    total += ways[static_cast<size_t>(q)] * count;
  }
  return twisted_defect(nc, i) * total;
}

OrbifoldReport analyze(const NuContext& nc, const RVec& h) { return analyze(nc, lift_over(nc, h)); }

std::pair<IMat, RVec> power_normal_form(const NuContext& nc, const LiftedAutomorphism& g, int d) {
  const int m = nc.nu.order;
  IMat pow = nc.nu_pow[static_cast<size_t>(d % m)];
  RVec h = nc.s_pow[static_cast<size_t>(d % (2 * m))] + Rat(d) * g.h;
  return {std::move(pow), std::move(h)};
}

OrbifoldReport analyze(const NuContext& nc, const LiftedAutomorphism& g) {
  OrbifoldReport rep;
  rep.lattice_label = nc.voa->lattice.label;
  rep.order = g.order;
  rep.frame = nc.frame_pow[std::min<size_t>(1, nc.frame_pow.size() - 1)];
  rep.order_doubling = nc.doubling;
  const int n = g.order;

  std::vector<RVec> svecs(static_cast<size_t>(n), RVec());
  for (int i = 1; i < n; ++i) svecs[static_cast<size_t>(i)] = sector_s(nc, g, i);
  for (int i = 1; i < n; ++i)
    rep.conformal_weights.push_back(sector_weight(nc, g, i, svecs[static_cast<size_t>(i)]));

  if (n == 1) {
    rep.type = 0;
  } else {
    Rat t = Rat(n) * Rat(n) * rep.conformal_weights.front();
    if (!is_integral(t)) throw std::logic_error("analyze: n^2 rho is not an integer");
    Int r = num(t) % n;
    if (r < 0) r += n;
    rep.type = static_cast<int>(r.get_si());
  }

  for (int d : divisors(n))
    rep.fixed_dims[d] = fixed_weight_one_dim(*nc.voa, g, d, nc.root_perm, nc.fixed_pow);

  if (rep.type != 0) rep.short_reasons.push_back("type is not 0");
  if (g.order != nc.nu.order)
    rep.short_reasons.push_back("order of g differs from the order of nu");
  if (coset_order(g.h, nc.fixed_dual) != g.order)
    rep.short_reasons.push_back("h has the wrong order modulo the dual of the fixed sublattice");
  rep.is_short = rep.short_reasons.empty();

  rep.extremal = rep.type == 0;
  for (const Rat& w : rep.conformal_weights)
    if (w < 1) rep.extremal = false;
  {
    bool rk = true;
    for (int i = 1; i < n && rk; ++i) {
      RVec v = project_fixed(nc.nu.mat, nc.nu.order, svecs[static_cast<size_t>(i)]) + Rat(i) * g.h;
      if (contains(nc.proj_nu(), v)) rk = false;
    }
    rep.rank_criterion = rk;
  }
  rep.gdh_certificate = rep.type == 0 && rep.extremal && rep.rank_criterion;

  if (nc.voa->rank() != 24) throw std::invalid_argument("analyze: central charge 24 only");
  int dim;
  if (n == 1) {
    dim = 24 + static_cast<int>(nc.voa->roots.size());
  } else {
    Rat acc = 24;
    for (int d : divisors(n)) acc += c_coeff(n, d) * rep.fixed_dims[d];
    if (!is_integral(acc)) throw std::logic_error("analyze: non-integral orbifold dimension");
    dim = static_cast<int>(num(acc).get_si());
  }
  rep.orbifold_dim = dim;
  rep.orbifold_dim_exact = rep.type == 0 && rep.extremal;
  rep.orbifold_rank = static_cast<int>(nc.fixed_nu().rank());

  {
    OrbifoldIdentification id;
    id.dim = dim;
    id.rank = rep.orbifold_rank;
    identify_from_dim_rank(nc, rep.frame, id);
    rep.candidates = std::move(id.candidates);
    rep.resolved = id.resolved;
  }

  if (rep.type == 0) {
    Fingerprint fp = fingerprint(nc, g);
    fp.resolved_entry = rep.resolved.value_or(-1);
    rep.fingerprint_ = fp;
  }
  if (rep.is_short) {
    auto [index, disc] = orbit_lattice_invariants(nc, g);
    rep.orbit_index = index;
    rep.orbit_disc = disc;
  }
  return rep;
}

}  // namespace orbifolder

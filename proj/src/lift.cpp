#include <numeric>
#include "orbifolder/lift.hpp"

#include <map>

#include "orbifolder/enumeration.hpp"

namespace orbifolder {

namespace {

int parity(const Int& v) {
  Int r = v % 2;
  return r == 0 ? 0 : 1;
}

std::vector<long> key_of(const IVec& v) {
  std::vector<long> k(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) k[i] = v(i).get_si();
  return k;
}

}  // namespace

VoaContext make_context(Lattice l) {
  VoaContext ctx;
  ctx.roots = vectors_up_to_norm(l, 2);
  ctx.delta = simple_roots(l, ctx.roots);
  const Eigen::Index n = l.rank();
  ctx.eps_lower = IMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) ctx.eps_lower(i, j) = ((l.gram(i, j) % 2) + 2) % 2;
  ctx.lattice = std::move(l);
  return ctx;
}

int cocycle_sign(const VoaContext& ctx, const IVec& a, const IVec& b) {
  Int e = (a.transpose() * ctx.eps_lower * b).eval()(0, 0);
  return parity(e) ? -1 : 1;
}

int EtaFunction::sign(const IVec& alpha) const {
  const Eigen::Index n = alpha.size();
  Int e = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    e += Int(linear[i]) * alpha(i);
    e += f_parity(i, i) * (alpha(i) * (alpha(i) - 1) / 2);
    for (Eigen::Index j = i + 1; j < n; ++j) e += f_parity(i, j) * alpha(i) * alpha(j);
  }
  return parity(e) ? -1 : 1;
}

EtaFunction standard_eta(const VoaContext& ctx, const Isometry& nu) {
  const Eigen::Index n = ctx.rank();
  EtaFunction eta;
  // parity form of f(a, b) = eps(a, b) / eps(nu a, nu b)
  IMat f = ctx.eps_lower + nu.mat.transpose() * ctx.eps_lower * nu.mat;
  eta.f_parity = IMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) eta.f_parity(i, j) = parity(f(i, j));
  // symmetry of f is forced by nu being an isometry of an even lattice
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (parity(eta.f_parity(i, j) + eta.f_parity(j, i)) != 0)
        throw std::logic_error("standard_eta: asymmetric twist form");
  eta.linear.assign(n, 0);

  // Kill eta on a basis of the fixed sublattice by a character: solve
  // <l, v_k> = parity(eta0(v_k)) over F2; solvable since L^nu is primitive.
  Sublattice fixed = fixed_sublattice(ctx.lattice, nu.mat);
  const Eigen::Index r = fixed.rank();
  if (r > 0) {
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    for (Eigen::Index k = 0; k < r; ++k) {
      IVec v = to_integer(RVec(fixed.basis.col(k)));
      std::vector<int> row(n);
      for (Eigen::Index i = 0; i < n; ++i) row[i] = parity(v(i));
      rows.push_back(std::move(row));
      rhs.push_back(eta.sign(v) == -1 ? 1 : 0);
    }
    // GF(2) elimination
    std::vector<int> sol(n, 0);
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (Eigen::Index c = 0; c < n && rank < rows.size(); ++c) {
      size_t piv = rank;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      std::swap(rhs[rank], rhs[piv]);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i != rank && rows[i][c]) {
          for (Eigen::Index j = 0; j < n; ++j) rows[i][j] ^= rows[rank][j];
          rhs[i] ^= rhs[rank];
        }
      }
      pivot_col.push_back(static_cast<int>(c));
      ++rank;
    }
    for (size_t i = rank; i < rows.size(); ++i)
      if (rhs[i]) throw std::logic_error("standard_eta: character system inconsistent");
    for (size_t i = 0; i < rank; ++i) sol[pivot_col[i]] = rhs[i];
    eta.linear = sol;
    for (Eigen::Index k = 0; k < r; ++k) {
      IVec v = to_integer(RVec(fixed.basis.col(k)));
      if (eta.sign(v) != 1) throw std::logic_error("standard_eta: fixed basis sign not killed");
    }
  }
  // functional equation on basis pairs
  for (Eigen::Index i = 0; i < n; ++i) {
    IVec bi = IVec::Zero(n);
    bi(i) = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      IVec bj = IVec::Zero(n);
      bj(j) = 1;
      int lhs = eta.sign(bi) * eta.sign(bj) * eta.sign(IVec(bi + bj));
      int rhs_sign = cocycle_sign(ctx, bi, bj) *
                     cocycle_sign(ctx, IVec(nu.mat * bi), IVec(nu.mat * bj));
      if (lhs != rhs_sign) throw std::logic_error("standard_eta: functional equation failed");
    }
  }
  return eta;
}

LiftedAutomorphism make_lifted(const VoaContext& ctx, IMat nu_mat, RVec h) {
  Isometry nu = make_isometry(ctx.lattice, std::move(nu_mat));
  if (to_rational(nu.mat) * h != h) throw std::invalid_argument("lifted automorphism: h not fixed by nu");
  EtaFunction eta = standard_eta(ctx, nu);
  int order = order_of(ctx, nu, eta, h);
  return LiftedAutomorphism{std::move(nu), std::move(eta), std::move(h), order};
}

int lift_power_sign(const VoaContext& ctx, const LiftedAutomorphism& g, int i, const IVec& alpha) {
  (void)ctx;
  int s = 1;
  IVec v = alpha;
  for (int j = 0; j < i; ++j) {
    s *= g.eta.sign(v);
    v = (g.nu.mat * v).eval();
  }
  return s;
}

RVec s_vector(const VoaContext& ctx, const LiftedAutomorphism& g, int i) {
  IMat pow = imat_identity(ctx.rank());
  for (int k = 0; k < i % g.nu.order; ++k) pow = (g.nu.mat * pow).eval();
  return s_vector(ctx, g, i, fixed_sublattice(ctx.lattice, pow));
}

RVec s_vector(const VoaContext& ctx, const LiftedAutomorphism& g, int i,
              const Sublattice& fixed_of_power) {
  const Eigen::Index r = fixed_of_power.rank();
  if (r == 0) return RVec::Zero(ctx.rank());
  RVec c(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    IVec v = to_integer(RVec(fixed_of_power.basis.col(k)));
    c(k) = lift_power_sign(ctx, g, i, v) == -1 ? Rat(1, 2) : Rat(0);
  }
  auto y = solve_rational(fixed_of_power.gram, c);
  if (!y.has_value()) throw std::logic_error("s_vector: system inconsistent");
  RVec s = fixed_of_power.basis * *y;
  // consistency: the character matches on the basis of the fixed sublattice
  for (Eigen::Index k = 0; k < r; ++k) {
    IVec v = to_integer(RVec(fixed_of_power.basis.col(k)));
    Rat pairing = inner_product(ctx.lattice, s, to_rational(v));
    int want = lift_power_sign(ctx, g, i, v);
    if ((mod1(pairing) == 0 ? 1 : -1) != want || (mod1(2 * pairing) != 0))
      throw std::logic_error("s_vector: character mismatch");
  }
  return s;
}

int order_of(const VoaContext& ctx, const Isometry& nu, const EtaFunction& eta, const RVec& h) {
  const Eigen::Index n = ctx.rank();
  Int bound = 2 * nu.order;
  for (Eigen::Index i = 0; i < n; ++i) {
    IVec e = IVec::Zero(n);
    e(i) = 1;
    bound = lcm(bound, den(inner_product(ctx.lattice, h, to_rational(e))) * 2 * nu.order);
  }
  LiftedAutomorphism probe{nu, eta, h, 0};
  for (int k = nu.order; Int(k) <= bound; k += nu.order) {
    bool ok = true;
    for (Eigen::Index i = 0; i < n && ok; ++i) {
      IVec e = IVec::Zero(n);
      e(i) = 1;
      Rat phase = lift_power_sign(ctx, probe, k, e) == -1 ? Rat(1, 2) : Rat(0);
      phase -= Rat(k) * inner_product(ctx.lattice, h, to_rational(e));
      if (mod1(phase) != 0) ok = false;
    }
    if (ok) return k;
  }
  throw std::logic_error("order_of: no order found below the denominator bound");
}

std::vector<int> root_action(const VoaContext& ctx, const IMat& nu_mat) {
  std::map<std::vector<long>, int> index;
  for (size_t i = 0; i < ctx.roots.size(); ++i) index.emplace(key_of(ctx.roots[i]), int(i));
  std::vector<int> perm(ctx.roots.size());
  for (size_t i = 0; i < ctx.roots.size(); ++i) {
    auto it = index.find(key_of(IVec(nu_mat * ctx.roots[i])));
    if (it == index.end()) throw std::logic_error("root_action: image is not a root");
    perm[i] = it->second;
  }
  return perm;
}

int fixed_weight_one_dim(const VoaContext& ctx, const LiftedAutomorphism& g, int d) {
  std::vector<Sublattice> fixed;
  for (int i = 0; i < g.nu.order; ++i) {
    IMat pow = imat_identity(ctx.rank());
    for (int k = 0; k < i; ++k) pow = (g.nu.mat * pow).eval();
    fixed.push_back(fixed_sublattice(ctx.lattice, pow));
  }
  return fixed_weight_one_dim(ctx, g, d, root_action(ctx, g.nu.mat), fixed);
}

int fixed_weight_one_dim(const VoaContext& ctx, const LiftedAutomorphism& g, int d,
                         const std::vector<int>& root_perm,
                         const std::vector<Sublattice>& fixed_by_residue) {
  const int m = g.nu.order;
  int dim = static_cast<int>(fixed_by_residue[d % m].rank());
  // orbits of nu^d on the roots; orbit of length k contributes 1 iff the
  // holonomy scalar of g^d around it is trivial
  std::vector<int> perm_d(ctx.roots.size());
  for (size_t i = 0; i < perm_d.size(); ++i) {
    int at = static_cast<int>(i);
    for (int j = 0; j < d % m; ++j) at = root_perm[at];
    perm_d[i] = at;
  }
  std::vector<char> seen(ctx.roots.size(), 0);
  for (size_t i = 0; i < ctx.roots.size(); ++i) {
    if (seen[i]) continue;
    int k = 0;
    int at = static_cast<int>(i);
    do {
      seen[at] = 1;
      at = perm_d[at];
      ++k;
    } while (at != static_cast<int>(i));
    const IVec& alpha = ctx.roots[i];
    Rat phase = lift_power_sign(ctx, g, d * k, alpha) == -1 ? Rat(1, 2) : Rat(0);
    phase -= Rat(d) * Rat(k) * inner_product(ctx.lattice, g.h, to_rational(alpha));
    if (mod1(phase) == 0) dim += 1;
  }
  return dim;
}

bool is_inner(const VoaContext& ctx, const LiftedAutomorphism& g) {
  return fixed_sublattice(ctx.lattice, g.nu.mat).rank() == ctx.rank();
}

}  // namespace orbifolder

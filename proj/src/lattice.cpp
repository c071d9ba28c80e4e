#include "orbifolder/lattice.hpp"

namespace orbifolder {

bool is_positive_definite(const IMat& gram) {
  // Leading principal minors, all positive.
  RMat m = to_rational(gram);
  for (Eigen::Index k = 1; k <= gram.rows(); ++k) {
    if (determinant(RMat(m.topLeftCorner(k, k))) <= 0) return false;
  }
  return true;
}

Lattice make_lattice(IMat gram, std::string label) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("lattice: gram not square");
  if (gram.rows() == 0) throw std::invalid_argument("lattice: empty gram");
  if (gram != gram.transpose().eval()) throw std::invalid_argument("lattice: gram not symmetric");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) throw std::invalid_argument("lattice: gram not even");
  if (!is_positive_definite(gram)) throw std::invalid_argument("lattice: gram not positive definite");
  return Lattice{std::move(gram), std::move(label)};
}

Rat inner_product(const IMat& gram, const RVec& u, const RVec& v) {
  if (u.size() != gram.rows() || v.size() != gram.rows())
    throw std::invalid_argument("inner_product: dimension mismatch");
  return (u.transpose() * to_rational(gram) * v).eval()(0, 0);
}

Rat inner_product(const Lattice& l, const LatticeVector& u, const LatticeVector& v) {
  return inner_product(l.gram, u, v);
}

RMat dual_basis(const Lattice& l) { return inverse(to_rational(l.gram)); }

DiscriminantGroup discriminantgroup_impl(const IMat& gram) {
  SmithDecomposition d = smith_normal_form(gram);
  // L'/L in dual-basis coordinates is Z^n / gram Z^n; with gram = U^-1 S V^-1
  // the cyclic factor of order S_ii is generated by column i of U^-1.
  RMat uinv = inverse(to_rational(d.U));
  RMat gram_inv = inverse(to_rational(gram));
  DiscriminantGroup g;
  g.order = 1;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    g.order *= d.S(i, i);
    if (d.S(i, i) > 1) keep.push_back(i);
  }
  g.generators = RMat(gram.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    g.elementary_divisors.push_back(d.S(keep[j], keep[j]));
    // dual-basis coordinates -> ambient coordinates
    g.generators.col(j) = gram_inv * uinv.col(keep[j]);
  }
  return g;
}

DiscriminantGroup discriminant_group(const Lattice& l) { return discriminantgroup_impl(l.gram); }

Sublattice sublattice_from_generators(const IMat& ambient_gram, const RMat& generators) {
  Sublattice s;
  s.ambient_gram = ambient_gram;
  if (generators.cols() == 0 || generators.isZero()) {
    s.basis = RMat(ambient_gram.rows(), 0);
    s.gram = RMat(0, 0);
    return s;
  }
  Int d = lcm_of_denominators(generators);
  IMat scaled(generators.rows(), generators.cols());
  for (Eigen::Index j = 0; j < generators.cols(); ++j)
    for (Eigen::Index i = 0; i < generators.rows(); ++i)
      scaled(i, j) = num(Rat(generators(i, j) * d));
  IMat h = hnf_cols(scaled);
  s.basis = to_rational(h) / Rat(d);
  s.gram = s.basis.transpose() * to_rational(ambient_gram) * s.basis;
  return s;
}

Sublattice dual_in_span(const Sublattice& s) {
  Sublattice d;
  d.ambient_gram = s.ambient_gram;
  if (s.rank() == 0) {
    d.basis = s.basis;
    d.gram = s.gram;
    return d;
  }
  d.basis = s.basis * inverse(s.gram);
  d.gram = d.basis.transpose() * to_rational(s.ambient_gram) * d.basis;
  return d;
}

bool contains(const IMat&, const RMat& gens, const RVec& v) {
  if (v.isZero()) return true;
  if (gens.cols() == 0) return false;
  Int d = lcm_of_denominators(gens);
  d = lcm(d, lcm_of_denominators(v));
  IMat a(gens.rows(), gens.cols());
  for (Eigen::Index j = 0; j < gens.cols(); ++j)
    for (Eigen::Index i = 0; i < gens.rows(); ++i) a(i, j) = num(Rat(gens(i, j) * d));
  IVec b(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) b(i) = num(Rat(v(i) * d));
  return solve_integer(a, b).has_value();
}

bool contains(const Sublattice& s, const RVec& v) { return contains(s.ambient_gram, s.basis, v); }
bool contains(const GeneratedLattice& g, const RVec& v) {
  return contains(g.ambient_gram, g.generators, v);
}

Int coset_order(const LatticeVector& h, const Sublattice& m) {
  if (h.isZero()) return 1;
  auto x = solve_rational(m.basis, h);
  if (!x.has_value()) throw std::invalid_argument("coset_order: h not in the span of the sublattice");
  return lcm_of_denominators(*x);
}

Sublattice fixed_sublattice(const Lattice& l, const IMat& nu) {
  IMat ker = integer_kernel(IMat(nu - imat_identity(l.rank())));
  return sublattice_from_generators(l.gram, to_rational(ker));
}

RVec project_fixed(const IMat& nu, int order, const RVec& v) {
  RVec acc = v;
  RVec w = v;
  RMat n = to_rational(nu);
  for (int i = 1; i < order; ++i) {
    w = n * w;
    acc += w;
  }
  return acc / Rat(order);
}

GeneratedLattice projected_lattice(const Lattice& l, const IMat& nu, int order) {
  GeneratedLattice g;
  g.ambient_gram = l.gram;
  RMat acc = RMat::Zero(l.rank(), l.rank());
  IMat p = imat_identity(l.rank());
  for (int i = 0; i < order; ++i) {
    acc += to_rational(p);
    p = (nu * p).eval();
  }
  g.generators = acc / Rat(order);
  return g;
}

std::vector<RVec> quotient_representatives(const Sublattice& a, const Sublattice& b) {
  // Work in coordinates relative to the basis of B, where U = A + B and the
  // index matrix stay small.  X = coords of A in B, U = X Z^a + Z^r.
  const Eigen::Index r = b.rank();
  if (a.rank() != r) throw std::invalid_argument("quotient_representatives: rank mismatch");
  if (r == 0) return {RVec::Zero(a.basis.rows())};
  RMat x(r, a.rank());
  for (Eigen::Index j = 0; j < a.rank(); ++j) {
    auto c = solve_rational(b.basis, RVec(a.basis.col(j)));
    if (!c.has_value()) throw std::invalid_argument("quotient_representatives: different spans");
    x.col(j) = *c;
  }
  Int dcom = lcm_of_denominators(x);
  IMat stack(r, a.rank() + r);
  for (Eigen::Index j = 0; j < a.rank(); ++j)
    for (Eigen::Index i = 0; i < r; ++i) stack(i, j) = num(Rat(x(i, j) * dcom));
  stack.rightCols(r) = dcom * imat_identity(r);
  IMat hu = hnf_cols(stack);  // basis of dcom * U in B-coordinates
  if (hu.cols() != r) throw std::logic_error("quotient_representatives: rank defect");
  // coords of B in the U-basis: solve hu * t = dcom * e_j
  IMat t(r, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    RVec rhs = RVec::Zero(r);
    rhs(j) = Rat(dcom);
    auto sol = solve_rational(to_rational(hu), rhs);
    if (!sol.has_value() || !is_integral(*sol))
      throw std::logic_error("quotient_representatives: inconsistent spans");
    for (Eigen::Index i = 0; i < r; ++i) t(i, j) = num((*sol)(i));
  }
  RMat u_basis = b.basis * to_rational(hu) / Rat(dcom);
  // Z^r / t Z^r for lower-triangular t: box representatives along the diagonal
  IMat tri = hnf_cols(t);
  if (tri.cols() != r) throw std::invalid_argument("quotient_representatives: quotient not finite");
  std::vector<Int> orders(r);
  Int total = 1;
  for (Eigen::Index i = 0; i < r; ++i) {
    orders[i] = abs(tri(i, i));
    total *= orders[i];
  }
  std::vector<RVec> reps;
  std::vector<Int> counter(r, Int(0));
  for (Int k = 0; k < total; ++k) {
    RVec coord = RVec::Zero(r);
    for (Eigen::Index j = 0; j < r; ++j) coord(j) = Rat(counter[j]);
    reps.push_back(u_basis * coord);
    for (Eigen::Index i = 0; i < r; ++i) {
      counter[i] += 1;
      if (counter[i] < orders[i]) break;
      counter[i] = 0;
    }
  }
  return reps;
}

Int sublattice_index(const Sublattice& a, const Sublattice& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("sublattice_index: rank mismatch");
  if (a.rank() == 0) return 1;
  RMat t(a.rank(), b.rank());
  for (Eigen::Index j = 0; j < b.rank(); ++j) {
    auto x = solve_rational(a.basis, RVec(b.basis.col(j)));
    if (!x.has_value() || !is_integral(*x))
      throw std::invalid_argument("sublattice_index: B is not a sublattice of A");
    t.col(j) = *x;
  }
  Rat d = determinant(t);
  if (d == 0) throw std::invalid_argument("sublattice_index: B has lower rank than A");
  return abs(num(d));
}

}  // namespace orbifolder

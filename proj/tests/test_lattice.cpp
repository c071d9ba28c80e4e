#include "doctest.h"

#include "orbifolder/enumeration.hpp"
#include "orbifolder/lattice.hpp"

using namespace orbifolder;

namespace {

IMat imat(std::initializer_list<std::initializer_list<long>> rows) {
  IMat m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

IMat gram_a1() { return imat({{2}}); }

IMat gram_d4() {
  return imat({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

IMat gram_e8() {
  // Simple roots in the Dynkin ordering 1-3-4-5-6-7-8 with 2 attached to 4.
  IMat g = imat({{2, 0, -1, 0, 0, 0, 0, 0},
                 {0, 2, 0, -1, 0, 0, 0, 0},
                 {-1, 0, 2, -1, 0, 0, 0, 0},
                 {0, -1, -1, 2, -1, 0, 0, 0},
                 {0, 0, 0, -1, 2, -1, 0, 0},
                 {0, 0, 0, 0, -1, 2, -1, 0},
                 {0, 0, 0, 0, 0, -1, 2, -1},
                 {0, 0, 0, 0, 0, 0, -1, 2}});
  return g;
}

RVec rvec(std::initializer_list<Rat> vals) {
  RVec v(vals.size());
  Eigen::Index i = 0;
  for (const Rat& q : vals) v(i++) = q;
  return v;
}

}  // namespace

TEST_CASE("lattice validation") {
  CHECK_NOTHROW(make_lattice(gram_e8(), "E8"));
  CHECK_THROWS(make_lattice(imat({{1}})));              // odd diagonal
  CHECK_THROWS(make_lattice(imat({{2, 1}, {0, 2}})));   // not symmetric
  CHECK_THROWS(make_lattice(imat({{2, 4}, {4, 2}})));   // not positive definite
}

TEST_CASE("inner products") {
  Lattice a1 = make_lattice(gram_a1(), "A1");
  RVec e1 = rvec({1});
  CHECK(inner_product(a1, e1, e1) == 2);
  CHECK(inner_product(a1, rvec({0}), e1) == 0);
  Lattice e8 = make_lattice(gram_e8(), "E8");
  auto roots = vectors_up_to_norm(e8, 2);
  CHECK(roots.size() == 240);
  for (const IVec& r : roots) {
    RVec v = to_rational(r);
    CHECK(inner_product(e8, v, v) == 2);
  }
}

TEST_CASE("dual basis and discriminant groups") {
  Lattice e8 = make_lattice(gram_e8(), "E8");
  RMat d8 = dual_basis(e8);
  // unimodular: dual basis again spans the lattice
  for (Eigen::Index j = 0; j < d8.cols(); ++j) CHECK(is_integral(RVec(d8.col(j))));
  CHECK(discriminant_group(e8).order == 1);
  CHECK(discriminant_group(e8).elementary_divisors.empty());

  Lattice a1 = make_lattice(gram_a1(), "A1");
  auto dg1 = discriminant_group(a1);
  CHECK(dg1.order == 2);
  REQUIRE(dg1.elementary_divisors.size() == 1);
  CHECK(dg1.elementary_divisors[0] == 2);

  Lattice d4 = make_lattice(gram_d4(), "D4");
  auto dg4 = discriminant_group(d4);
  CHECK(dg4.order == 4);
  REQUIRE(dg4.elementary_divisors.size() == 2);
  CHECK(dg4.elementary_divisors[0] == 2);
  CHECK(dg4.elementary_divisors[1] == 2);
  // [L' : L] = det via index of L in L'
  Sublattice dual = sublattice_from_generators(d4.gram, dual_basis(d4));
  Sublattice self = sublattice_from_generators(d4.gram, RMat::Identity(4, 4).cast<Rat>());
  CHECK(sublattice_index(dual, self) == 4);
}

TEST_CASE("fixed sublattice and projection") {
  Lattice z2ish = make_lattice(imat({{2, 0}, {0, 2}}), "A1^2");
  IMat swap = imat({{0, 1}, {1, 0}});
  SUBCASE("identity fixes everything") {
    Sublattice f = fixed_sublattice(z2ish, imat_identity(2));
    CHECK(f.rank() == 2);
  }
  SUBCASE("swap fixes the diagonal") {
    Sublattice f = fixed_sublattice(z2ish, swap);
    REQUIRE(f.rank() == 1);
    CHECK(f.basis(0, 0) == f.basis(1, 0));
    RVec v = rvec({1, 0});
    RVec p = project_fixed(swap, 2, v);
    CHECK(p == rvec({Rat(1, 2), Rat(1, 2)}));
    CHECK(project_fixed(swap, 2, p) == p);
  }
  SUBCASE("minus identity fixes nothing") {
    Sublattice f = fixed_sublattice(z2ish, -imat_identity(2));
    CHECK(f.rank() == 0);
  }
}

TEST_CASE("contains and coset order") {
  Lattice z2ish = make_lattice(imat({{2, 0}, {0, 2}}), "A1^2");
  Sublattice whole = sublattice_from_generators(z2ish.gram, RMat::Identity(2, 2).cast<Rat>());
  CHECK(contains(whole, rvec({1, 1})));
  CHECK(!contains(whole, rvec({Rat(1, 2), Rat(1, 2)})));
  CHECK(coset_order(rvec({0, 0}), whole) == 1);
  CHECK(coset_order(rvec({Rat(1, 2), 0}), whole) == 2);
  CHECK(coset_order(rvec({Rat(1, 3), Rat(1, 3)}), whole) == 3);
  Sublattice xaxis = sublattice_from_generators(z2ish.gram, rvec({1, 0}));
  CHECK(coset_order(rvec({Rat(1, 2), 0}), xaxis) == 2);
  CHECK_THROWS(coset_order(rvec({0, Rat(1, 2)}), xaxis));
}

TEST_CASE("sublattice index") {
  Lattice z2ish = make_lattice(imat({{2, 0}, {0, 2}}), "A1^2");
  Sublattice a = sublattice_from_generators(z2ish.gram, RMat::Identity(2, 2).cast<Rat>());
  CHECK(sublattice_index(a, a) == 1);
  RMat g(2, 2);
  g << Rat(2), Rat(0), Rat(0), Rat(1);
  Sublattice b = sublattice_from_generators(z2ish.gram, g);
  CHECK(sublattice_index(a, b) == 2);
}

TEST_CASE("quotient representatives") {
  Lattice z2ish = make_lattice(imat({{2, 0}, {0, 2}}), "A1^2");
  Sublattice half = sublattice_from_generators(
      z2ish.gram, RMat(RMat::Identity(2, 2).cast<Rat>() / Rat(2)));
  Sublattice whole = sublattice_from_generators(z2ish.gram, RMat::Identity(2, 2).cast<Rat>());
  auto reps = quotient_representatives(half, whole);
  CHECK(reps.size() == 4);
  // all reps distinct modulo the whole lattice
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) CHECK(!contains(whole, RVec(reps[i] - reps[j])));
}

TEST_CASE("enumeration against box brute force") {
  std::vector<IMat> grams{gram_a1(), imat({{2, 1}, {1, 2}}), gram_d4()};
  for (const IMat& g : grams) {
    Lattice l = make_lattice(g);
    for (int bound = 1; bound <= 6; ++bound) {
      auto fast = vectors_up_to_norm(l, bound);
      // brute force over a box
      std::vector<IVec> brute;
      int n = int(g.rows());
      std::vector<int> x(n, -6);
      for (;;) {
        IVec v(n);
        for (int i = 0; i < n; ++i) v(i) = x[i];
        Rat nrm = inner_product(l, to_rational(v), to_rational(v));
        if (nrm > 0 && nrm <= bound) brute.push_back(v);
        int i = 0;
        for (; i < n; ++i) {
          if (++x[i] <= 6) break;
          x[i] = -6;
        }
        if (i == n) break;
      }
      CHECK(fast.size() == brute.size());
      // negation closure
      for (const IVec& v : fast) {
        bool has_neg = false;
        for (const IVec& w : fast)
          if (w == -v) has_neg = true;
        CHECK(has_neg);
      }
    }
  }
}

TEST_CASE("min_coset_norm basics") {
  Lattice z1 = make_lattice(imat({{2}}), "A1");  // gram [[2]]
  Sublattice whole = sublattice_from_generators(z1.gram, rvec({1}));
  CHECK(min_coset_norm(whole, rvec({Rat(1, 2)})) == Rat(1, 2));
  CHECK(min_coset_norm(whole, rvec({3})) == 0);
  CHECK(count_coset_vectors_of_norm(whole, rvec({Rat(1, 2)}), Rat(1, 2)) == 2);
  CHECK(count_coset_vectors_of_norm(whole, rvec({0}), Rat(2)) == 2);

  // unit form: min over Z + 1/2 of x^2 = 1/4
  RMat unit(1, 1);
  unit(0, 0) = 1;
  RVec t(1);
  t(0) = Rat(1, 2);
  CHECK(min_coset_norm_form(unit, t) == Rat(1, 4));
}

TEST_CASE("dual of the dual basis regenerates the lattice") {
  IMat g = gram_d4();
  Lattice l = make_lattice(g, "D4");
  RMat d = dual_basis(l);
  // dual of the dual: solve the pairing conditions against the dual basis
  RMat dd = d * inverse(RMat(d.transpose() * to_rational(g) * d));
  Sublattice original = sublattice_from_generators(g, RMat(RMat::Identity(4, 4).cast<Rat>()));
  Sublattice doubled = sublattice_from_generators(g, dd);
  CHECK(sublattice_index(original, doubled) == 1);
  CHECK(sublattice_index(doubled, original) == 1);
}

TEST_CASE("coset queries on a projected lattice") {
  Lattice z2ish = make_lattice(imat({{2, 0}, {0, 2}}), "A1^2");
  IMat swap = imat({{0, 1}, {1, 0}});
  GeneratedLattice proj = projected_lattice(z2ish, swap, 2);
  // pi(L) is spanned by (1/2, 1/2); projecting any lattice vector stays inside
  CHECK(contains(proj, project_fixed(swap, 2, rvec({3, -1}))));
  CHECK(!contains(proj, rvec({Rat(1, 4), Rat(1, 4)})));
  // <pi u, w> = <u, w> for fixed w
  RVec w = rvec({1, 1});
  RVec u = rvec({5, -2});
  CHECK(inner_product(z2ish, project_fixed(swap, 2, u), w) == inner_product(z2ish, u, w));
  CHECK(min_coset_norm(proj, rvec({Rat(1, 2), Rat(1, 2)})) == 0);
  CHECK(min_coset_norm(proj, rvec({Rat(1, 4), Rat(1, 4)})) == Rat(1, 4));
  CHECK(count_coset_vectors_of_norm(proj, rvec({0, 0}), Rat(1)) == 2);
}

TEST_CASE("min_coset_norm invariant under lattice translation") {
  Lattice d4 = make_lattice(gram_d4(), "D4");
  Sublattice whole = sublattice_from_generators(d4.gram, RMat::Identity(4, 4).cast<Rat>());
  RVec h = rvec({Rat(1, 2), Rat(1, 3), 0, Rat(2, 5)});
  Rat base = min_coset_norm(whole, h);
  RVec shift = rvec({1, -2, 3, 0});
  CHECK(min_coset_norm(whole, RVec(h + shift)) == base);
}

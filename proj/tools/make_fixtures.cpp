// Generates the shipped isometry fixtures under data/fixtures/.
//
// The Leech-lattice fixtures are monomial maps in the standard coordinates:
// coordinate permutations preserving the quadratic-residue Golay code (found
// as words in the code's symmetry generators and pinned here explicitly),
// together with one sign-flip construction on an invariant twelve-set for the
// frame shape 2^3 6^3.  The E8^3 fixture is the factor swap conjugated into
// the simple-root stabilizer.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "orbifolder/catalog.hpp"
#include "orbifolder/json_io.hpp"
#include "orbifolder/search.hpp"

using namespace orbifolder;

namespace {

struct MonomialFixture {
  char family;
  std::array<int, 24> perm;
  uint32_t flips;  // coordinate set with negated sign (a Golay word or empty)
};

// Coordinate permutations preserving the Golay code, one per frame shape.
const std::vector<MonomialFixture> kMonomials = {
    {'B', {20, 9, 5, 3, 8, 2, 12, 7, 4, 1, 10, 11, 6, 13, 18, 15, 19, 23, 14, 16, 0, 21, 22, 17}, 0},
    {'C', {1, 23, 14, 8, 3, 11, 6, 7, 4, 5, 21, 9, 12, 13, 17, 18, 16, 2, 20, 10, 15, 19, 22, 0}, 0},
    {'D', {23, 19, 21, 14, 22, 13, 7, 6, 11, 20, 18, 8, 15, 5, 3, 12, 17, 16, 10, 1, 9, 2, 4, 0}, 0},
    {'E', {6, 1, 3, 20, 14, 17, 5, 22, 9, 8, 2, 12, 15, 21, 4, 23, 16, 0, 18, 19, 10, 7, 13, 11}, 0},
    {'F', {0, 2, 16, 8, 13, 17, 18, 15, 12, 9, 21, 11, 6, 1, 5, 22, 4, 10, 3, 20, 7, 14, 19, 23}, 0},
    {'G', {1, 17, 14, 19, 13, 22, 7, 6, 5, 4, 8, 20, 3, 9, 18, 16, 10, 12, 2, 0, 11, 21, 15, 23}, 0},
    {'H', {9, 23, 20, 17, 10, 2, 14, 7, 3, 12, 13, 5, 4, 22, 19, 6, 1, 11, 18, 16, 8, 21, 0, 15}, 0},
    {'I', {1, 2, 10, 14, 13, 12, 3, 0, 17, 9, 8, 21, 19, 5, 15, 6, 7, 16, 4, 22, 18, 11, 20, 23}, 0},
    // order 6 with sign flips on an invariant twelve-set meeting three fixed
    // points of the order-3 permutation
    {'J', {1, 23, 14, 8, 3, 11, 6, 7, 4, 5, 21, 9, 12, 13, 17, 18, 16, 2, 20, 10, 15, 19, 22, 0},
     0xd7c047},
    {'K', {23, 5, 20, 22, 11, 8, 19, 12, 21, 14, 9, 1, 7, 17, 2, 3, 15, 6, 10, 18, 13, 16, 4, 0}, 0},
};

IMat monomial_in_basis(const MonomialFixture& m) {
  const IMat& x = leech_coordinates();  // rows are basis vectors
  IMat p = IMat::Zero(24, 24);
  for (int i = 0; i < 24; ++i) p(m.perm[i], i) = (m.flips >> i & 1) ? -1 : 1;
  RMat xt = to_rational(x).transpose();
  RMat a(24, 24);
  // a = x^{-T} p x^T, column-coordinate action
  RMat rhs = to_rational(p) * xt;
  for (int j = 0; j < 24; ++j) {
    auto col = solve_rational(xt, RVec(rhs.col(j)));
    if (!col.has_value()) throw std::logic_error("monomial: basis solve failed");
    a.col(j) = *col;
  }
  IMat out(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      if (!is_integral(a(i, j))) throw std::logic_error("monomial: map does not preserve the lattice");
      out(i, j) = num(a(i, j));
    }
  return out;
}

void write_fixture(const std::filesystem::path& dir, const Fixture& f) {
  std::ofstream out(dir / (f.name + ".json"));
  out << fixture_to_json_text(f) << "\n";
  std::cout << "wrote " << (dir / (f.name + ".json")).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "data/fixtures";
  std::filesystem::create_directories(dir);

  for (const auto& m : kMonomials) {
    Fixture f;
    f.name = std::string("leech-") + m.family;
    f.lattice_label = "A24";
    f.family = m.family;
    f.class_index = 0;
    f.matrix = monomial_in_basis(m);
    f.claimed.exponents = frame_class(m.family).exponents;
    f.claimed.order = frame_class(m.family).order;
    f.claimed_doubling = frame_class(m.family).order_doubling;
    f.provenance =
        "monomial map of the standard coordinate frame: permutation preserving the "
        "quadratic-residue Golay code" +
        std::string(m.flips ? ", with sign flips on an invariant code word" : "") +
        "; expressed in the catalog basis and validated by frame shape";
    const VoaContext& voa = niemeier_context("A24");
    validate_fixture(voa, f);
    write_fixture(dir, f);
  }

  {
    // E8^3: swap of the first two factors, conjugated into the stabilizer of
    // the simple system
    const VoaContext& voa = niemeier_context("A3");
    IMat swap = IMat::Zero(24, 24);
    for (int i = 0; i < 8; ++i) {
      swap(i, 8 + i) = 1;
      swap(8 + i, i) = 1;
    }
    for (int i = 16; i < 24; ++i) swap(i, i) = 1;
    Fixture f;
    f.name = "e8-swap";
    f.lattice_label = "A3";
    f.family = 'B';
    f.class_index = 0;
    f.matrix = conjugate_into_stabilizer(voa.lattice, voa.delta, swap);
    f.claimed.exponents = frame_class('B').exponents;
    f.claimed.order = 2;
    f.claimed_doubling = false;
    f.provenance =
        "swap of the first two E8 factors, composed with the Weyl element taking the "
        "image simple system back to the reference simple system";
    validate_fixture(voa, f);
    write_fixture(dir, f);
  }
  return 0;
}

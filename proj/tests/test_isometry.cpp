#include "doctest.h"

#include "orbifolder/catalog.hpp"
#include "orbifolder/isometry.hpp"
#include "orbifolder/json_io.hpp"

using namespace orbifolder;

namespace {

IMat block_swap_e8() {
  IMat swap = IMat::Zero(24, 24);
  for (int i = 0; i < 8; ++i) {
    swap(i, 8 + i) = 1;
    swap(8 + i, i) = 1;
  }
  for (int i = 16; i < 24; ++i) swap(i, i) = 1;
  return swap;
}

}  // namespace

TEST_CASE("isometry validation and order") {
  const Lattice& e8x3 = build_niemeier("A3");
  CHECK_THROWS(make_isometry(e8x3, IMat(2 * imat_identity(24))));
  Isometry id = make_isometry(e8x3, imat_identity(24));
  CHECK(id.order == 1);
  Isometry neg = make_isometry(e8x3, IMat(-imat_identity(24)));
  CHECK(neg.order == 2);
  Isometry swap = make_isometry(e8x3, block_swap_e8());
  CHECK(swap.order == 2);
}

TEST_CASE("frame shapes") {
  const Lattice& e8x3 = build_niemeier("A3");
  SUBCASE("identity is 1^24") {
    FrameShape fs = frame_shape(e8x3, make_isometry(e8x3, imat_identity(24)));
    CHECK(fs.exponents == std::map<int, int>{{1, 24}});
  }
  SUBCASE("minus identity is 2^24 1^-24") {
    FrameShape fs = frame_shape(e8x3, make_isometry(e8x3, IMat(-imat_identity(24))));
    CHECK(fs.exponents == std::map<int, int>{{1, -24}, {2, 24}});
  }
  SUBCASE("factor swap is 1^8 2^8") {
    FrameShape fs = frame_shape(e8x3, make_isometry(e8x3, block_swap_e8()));
    CHECK(fs.exponents == std::map<int, int>{{1, 8}, {2, 8}});
    CHECK(to_string(fs) == "1^8 2^8");
  }
  SUBCASE("order is the lcm of the frame-shape periods") {
    const Lattice& leech = build_niemeier("A24");
    for (const char* name : {"leech-E", "leech-G", "leech-K"}) {
      Fixture f = load_fixture(name);
      Isometry nu = make_isometry(leech, f.matrix);
      FrameShape fs = frame_shape(leech, nu);
      int order = 1;
      for (auto& [t, b] : fs.exponents)
        if (b != 0) order = static_cast<int>(lcm(order, t).get_si());
      CHECK(order == nu.order);
    }
  }
  SUBCASE("powers of a fixture") {
    const Lattice& leech = build_niemeier("A24");
    Fixture f = load_fixture("leech-G");
    Isometry nu = make_isometry(leech, f.matrix);
    CHECK(frame_shape_of_power(leech, nu, 2).exponents == std::map<int, int>{{1, 6}, {3, 6}});
    CHECK(frame_shape_of_power(leech, nu, 3).exponents == std::map<int, int>{{1, 8}, {2, 8}});
    CHECK(frame_shape_of_power(leech, nu, 6).exponents == std::map<int, int>{{1, 24}});
  }
}

TEST_CASE("order doubling matches the family table on every fixture") {
  for (const auto& blob : embedded_fixtures()) {
    Fixture f = fixture_from_json_text(blob.json);
    const Lattice& l = build_niemeier(f.lattice_label);
    Isometry nu = make_isometry(l, f.matrix);
    CAPTURE(f.name);
    CHECK(order_doubling(l, nu) == frame_class(f.family).order_doubling);
  }
  // minus identity on an even lattice never doubles
  const Lattice& e8x3 = build_niemeier("A3");
  CHECK(!order_doubling(e8x3, make_isometry(e8x3, IMat(-imat_identity(24)))));
}

TEST_CASE("simple roots and stabilization") {
  const VoaContext& ctx = niemeier_context("A3");
  CHECK(ctx.delta.size() == 24);
  // simple roots are positive-definite rank-24 and pairwise non-positive products
  for (size_t i = 0; i < ctx.delta.size(); ++i)
    for (size_t j = i + 1; j < ctx.delta.size(); ++j) {
      Rat ip = inner_product(ctx.lattice, to_rational(ctx.delta[i]), to_rational(ctx.delta[j]));
      CHECK(ip <= 0);
    }
  Isometry id = make_isometry(ctx.lattice, imat_identity(24));
  CHECK(stabilizes_simple_roots(id, ctx.delta));
  // a reflection never stabilizes: it negates its own root
  IMat refl = imat_identity(24) - ctx.delta[0] * (ctx.delta[0].transpose() * ctx.lattice.gram);
  Isometry r = make_isometry(ctx.lattice, refl);
  CHECK(!stabilizes_simple_roots(r, ctx.delta));
  // minus identity sends the simple system to its negative
  Isometry neg = make_isometry(ctx.lattice, IMat(-imat_identity(24)));
  CHECK(!stabilizes_simple_roots(neg, ctx.delta));
  // the conjugated swap lands in the stabilizer (here the blocks share one
  // simple system, so the swap already stabilizes and survives unchanged)
  IMat conj = conjugate_into_stabilizer(ctx.lattice, ctx.delta, block_swap_e8());
  Isometry fixed = make_isometry(ctx.lattice, conj);
  CHECK(stabilizes_simple_roots(fixed, ctx.delta));
  CHECK(fixed.order == 2);
  CHECK(frame_shape(ctx.lattice, fixed).exponents == std::map<int, int>{{1, 8}, {2, 8}});
}

TEST_CASE("power equivalence classes") {
  const Lattice& leech = build_niemeier("A24");
  Isometry id = make_isometry(leech, imat_identity(24));
  RVec h1 = RVec::Zero(24);
  h1(0) = Rat(1, 3);
  RVec h2 = h1;
  h2(1) = 1;  // differs by a lattice vector
  RVec h3 = -h1;
  SUBCASE("cosets merge, distinct cosets do not") {
    auto classes = power_equivalence_classes(leech, id, {h1, h2, h3}, {});
    CHECK(classes.size() == 2);  // {h1, h2} and {h3}
  }
  SUBCASE("tau = -1 merges h with -h") {
    auto classes =
        power_equivalence_classes(leech, id, {h1, h2, h3}, {IMat(-imat_identity(24))});
    CHECK(classes.size() == 1);
  }
  SUBCASE("non-normalizing generator is rejected") {
    IMat g(2, 2);
    g << 2, 0, 0, 2;
    Lattice l = make_lattice(g, "A1^2");
    IMat swap(2, 2);
    swap << 0, 1, 1, 0;
    Isometry nu = make_isometry(l, swap);
    IMat tau(2, 2);
    tau << 1, 0, 0, -1;  // conjugates the swap to its negative, outside <swap>
    RVec zero = RVec::Zero(2);
    bool threw = false;
    try {
      power_equivalence_classes(l, nu, {zero}, {tau});
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    CHECK(threw);
  }
}

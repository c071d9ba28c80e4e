#include "doctest.h"

#include "orbifolder/catalog.hpp"
#include "orbifolder/json_io.hpp"
#include "orbifolder/search.hpp"

using namespace orbifolder;

TEST_CASE("candidate set for the identity is the zero coset") {
  const VoaContext& ctx = niemeier_context("A1");
  NuContext nc = make_nu_context(ctx, imat_identity(24));
  auto cands = candidate_h_set(ctx, nc);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].isZero());
}

TEST_CASE("identity search resolves to the lattice itself") {
  for (const std::string label : {"A1", "A24"}) {
    const VoaContext& ctx = niemeier_context(label);
    NuContext nc = make_nu_context(ctx, imat_identity(24));
    SearchResult res = find_short(ctx, nc, 'A', 0, {});
    CHECK(res.candidate_count == 1);
    REQUIRE(res.classes.size() == 1);
    CHECK(res.exact);
    CHECK(res.table.covered);
    CHECK(res.table.pass);
    int expected = golden_lookup('A', label, 0).rows.front().first;
    CHECK(res.classes[0].report.resolved.value_or(-1) == expected);
  }
}

TEST_CASE("a fast rootless cell: 2^2 10^2 on the Leech lattice") {
  const VoaContext& ctx = niemeier_context("A24");
  Fixture f = fixture_from_json_text(*embedded_fixture_json("leech-K"));
  validate_fixture(ctx, f);
  NuContext nc = make_nu_context(ctx, f.matrix);
  SearchOptions opt;
  opt.jobs = 4;
  SearchResult res = find_short(ctx, nc, 'K', 0, opt);
  CHECK(res.candidate_count == 25);
  REQUIRE(res.classes.size() == 1);
  CHECK(res.exact);
  CHECK(res.table.pass);
  const OrbifoldReport& rep = res.classes[0].report;
  CHECK(rep.resolved.value_or(-1) == 4);
  CHECK(rep.orbifold_dim == 36);
  CHECK(rep.orbifold_rank == 4);
  CHECK(rep.order == 10);
  CHECK(rep.orbit_index == 10);
  // every reported class passes the certificates and the index identity
  CHECK(rep.gdh_certificate);
  Rat base = determinant(nc.fixed_nu().gram);
  CHECK(Rat(rep.orbit_disc) == Rat(100) * base);
}

TEST_CASE("projection identity: pi_nu(L') equals the dual of the fixed lattice") {
  for (const auto& blob : embedded_fixtures()) {
    Fixture f = fixture_from_json_text(blob.json);
    const VoaContext& ctx = niemeier_context(f.lattice_label);
    NuContext nc = make_nu_context(ctx, f.matrix);
    CAPTURE(f.name);
    // double inclusion on generators; L' = L for these lattices
    const Sublattice& proj = nc.proj_nu();
    const Sublattice& dual = nc.fixed_dual;
    for (Eigen::Index j = 0; j < proj.basis.cols(); ++j)
      CHECK(contains(dual, RVec(proj.basis.col(j))));
    for (Eigen::Index j = 0; j < dual.basis.cols(); ++j)
      CHECK(contains(proj, RVec(dual.basis.col(j))));
  }
}

TEST_CASE("table reproduction: family A restricted to three lattices") {
  TableReport rep = reproduce_table('A', {"A1", "A12", "A24"}, {}, {});
  CHECK(rep.pass);
  CHECK(rep.cells.size() == 3);
  for (const auto& c : rep.cells) CHECK(c.status == CellReport::Status::Pass);
}

TEST_CASE("table reproduction skips cells without fixtures") {
  TableReport rep = reproduce_table('B', {"A6"}, {}, {});
  CHECK(rep.pass);  // skipped cells do not fail
  REQUIRE(rep.cells.size() == 1);
  CHECK(rep.cells[0].status == CellReport::Status::Skipped);
}

TEST_CASE("fixture round trip and loader validation") {
  Fixture f = fixture_from_json_text(*embedded_fixture_json("leech-B"));
  std::string text = fixture_to_json_text(f);
  Fixture g = fixture_from_json_text(text);
  CHECK(g.matrix == f.matrix);
  CHECK(g.claimed.exponents == f.claimed.exponents);
  CHECK(g.family == f.family);
  // forged frame shape is rejected
  Fixture bad = f;
  bad.claimed.exponents = {{1, 24}};
  const VoaContext& ctx = niemeier_context("A24");
  CHECK_THROWS(validate_fixture(ctx, bad));
}

#include "orbifolder/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace orbifolder {

std::vector<RVec> candidate_h_set(const VoaContext& voa, const NuContext& nc) {
  const int n = nc.order();
  const Eigen::Index dim = voa.rank();
  const Sublattice& fixed = nc.fixed_nu();
  // particular solution h0 of "n h + s_n integral" inside the fixed space:
  // solve F u - q lambda = -q s_n over the integers, h0 = F u / (q n).
  const RVec& s_n = nc.s_pow[static_cast<size_t>(n)];
  Int q = lcm_of_denominators(s_n);
  const Eigen::Index r = fixed.rank();
  IMat a(dim, r + dim);
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = num(Rat(fixed.basis(i, j)));
  Int negq = -q;
  a.rightCols(dim) = negq * imat_identity(dim);
  IVec b(dim);
  for (Eigen::Index i = 0; i < dim; ++i) b(i) = num(Rat(-q * s_n(i)));
  auto sol = solve_integer(a, b);
  if (!sol.has_value()) return {};  // no order-n automorphism over this lift
  RVec h0 = RVec::Zero(dim);
  if (r > 0) h0 = fixed.basis * to_rational(IVec(sol->head(r))) / (Rat(q) * Rat(n));
  if (fixed.rank() == 0) return {h0};

  Sublattice scaled = fixed;
  scaled.basis /= Rat(n);
  scaled.gram /= Rat(n) * Rat(n);
  std::vector<RVec> reps = quotient_representatives(scaled, nc.fixed_dual);
  std::vector<RVec> out;
  out.reserve(reps.size());
  for (const RVec& rep : reps) out.push_back(rep + h0);
  std::sort(out.begin(), out.end(), [](const RVec& a2, const RVec& b2) { return lex_less(a2, b2); });
  return out;
}

namespace {

std::vector<int> sorted_entries(const GoldenColumn& col) {
  std::vector<int> out;
  for (auto& [entry, mult] : col.rows)
    for (int i = 0; i < mult; ++i) out.push_back(entry);
  std::sort(out.begin(), out.end());
  return out;
}

// Fingerprint with the eigenspace component dropped: these five components
// are invariants of algebraic conjugacy, so distinct values certify distinct
// classes.
std::array<int, 5> algebraic_prefix(const Fingerprint& fp) {
  return {fp.order, fp.type_zero ? 1 : 0, fp.extremal ? 1 : 0, fp.fixed_dim, fp.resolved_entry};
}

}  // namespace

SearchResult find_short(const VoaContext& voa, const NuContext& nc, char family, int class_index,
                        const SearchOptions& options) {
  SearchResult res;
  res.lattice_label = voa.lattice.label;
  res.family = family;
  res.class_index = class_index;

  std::vector<RVec> cands = candidate_h_set(voa, nc);
  res.candidate_count = cands.size();
  const int n = nc.order();

  // cheap-to-expensive: coset order, then type, then the order of g, then the
  // full report
  std::vector<std::optional<OrbifoldReport>> reports(cands.size());
  std::vector<char> shortflag(cands.size(), 0);
  std::atomic<size_t> next{0};
  int jobs = std::max(1, options.jobs);
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cands.size()) return;
      const RVec& h = cands[i];
      if (coset_order(h, nc.fixed_dual) != n) continue;
      // type from the first twisted sector
      const Sublattice& proj = nc.proj_pow[std::min<size_t>(1, nc.proj_pow.size() - 1)];
      if (n > 1) {
        RVec offset = nc.s_pow[1] + h;
        auto coords = solve_rational(proj.basis, offset);
        if (!coords.has_value()) continue;
        Rat rho = vacuum_anomaly(nc.frame_pow[std::min<size_t>(1, nc.frame_pow.size() - 1)]) +
                  nc.enum_pow[std::min<size_t>(1, nc.enum_pow.size() - 1)]->min_coset(*coords) / 2;
        Rat t = Rat(n) * Rat(n) * rho;
        if (!is_integral(t) || num(t) % n != 0) continue;
      }
      if (order_of(voa, nc.nu, nc.eta, h) != n) continue;
      LiftedAutomorphism g{nc.nu, nc.eta, h, n};
      OrbifoldReport rep = analyze(nc, g);
      if (!rep.is_short) continue;
      shortflag[i] = 1;
      reports[i] = std::move(rep);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<int> short_idx;
  for (size_t i = 0; i < cands.size(); ++i)
    if (shortflag[i]) short_idx.push_back(static_cast<int>(i));
  res.short_count = short_idx.size();

  // dedup: power equivalence under the supplied normalizer elements, then
  // merge classes with equal fingerprints (a complete invariant for short
  // automorphisms)
  std::vector<RVec> short_hs;
  for (int i : short_idx) short_hs.push_back(cands[static_cast<size_t>(i)]);
  std::vector<std::vector<int>> parts =
      power_equivalence_classes(voa.lattice, nc.nu, short_hs, options.dedup_gens);
  // union-find over the partition cells keyed by fingerprint equality
  std::vector<int> cell_of(short_hs.size());
  for (size_t c = 0; c < parts.size(); ++c)
    for (int member : parts[c]) cell_of[static_cast<size_t>(member)] = static_cast<int>(c);
  std::vector<int> root(parts.size());
  for (size_t c = 0; c < parts.size(); ++c) root[c] = static_cast<int>(c);
  std::function<int(int)> find = [&](int a) {
    while (root[static_cast<size_t>(a)] != a) a = root[static_cast<size_t>(a)] = root[static_cast<size_t>(root[static_cast<size_t>(a)])];
    return a;
  };
  auto fp_of_cell = [&](size_t c) {
    return reports[static_cast<size_t>(short_idx[static_cast<size_t>(parts[c].front())])]->fingerprint_;
  };
  for (size_t a = 0; a < parts.size(); ++a)
    for (size_t b = a + 1; b < parts.size(); ++b)
      if (fp_of_cell(a) == fp_of_cell(b)) {
        int ra = find(static_cast<int>(a)), rb = find(static_cast<int>(b));
        if (ra != rb) root[static_cast<size_t>(rb)] = ra;
      }
  std::map<int, std::vector<int>> merged;  // final class -> member short indices
  for (size_t c = 0; c < parts.size(); ++c)
    for (int member : parts[c]) merged[find(static_cast<int>(c))].push_back(member);
  for (auto& [cls, members] : merged) {
    std::sort(members.begin(), members.end());
    ShortClass sc;
    sc.representative = short_hs[static_cast<size_t>(members.front())];
    sc.members = static_cast<int>(members.size());
    sc.report = *reports[static_cast<size_t>(short_idx[static_cast<size_t>(members.front())])];
    res.classes.push_back(std::move(sc));
  }
  std::sort(res.classes.begin(), res.classes.end(), [](const ShortClass& a, const ShortClass& b) {
    return lex_less(a.representative, b.representative);
  });

  // exactness: distinct classes must differ in the algebraically invariant
  // part of the fingerprint, otherwise only an upper bound is claimed
  res.exact = true;
  for (size_t a = 0; a < res.classes.size() && res.exact; ++a)
    for (size_t b = a + 1; b < res.classes.size() && res.exact; ++b) {
      const auto& fa = res.classes[a].report.fingerprint_;
      const auto& fb = res.classes[b].report.fingerprint_;
      if (fa && fb && algebraic_prefix(*fa) == algebraic_prefix(*fb)) res.exact = false;
    }
  if (!options.dedup_gens.empty() && res.classes.size() > 1) {
    // with supplied generators the partition itself is trusted
    res.exact = true;
  }

  // table comparison when the cell is covered
  for (const auto& row : class_count_table()) {
    if (row.label != res.lattice_label) continue;
    auto it = row.counts.find(family);
    if (it == row.counts.end() || class_index >= static_cast<int>(it->second.size())) break;
    res.table.covered = true;
    res.table.expected_count = it->second[static_cast<size_t>(class_index)];
    res.table.expected_entries = sorted_entries(golden_lookup(family, res.lattice_label, class_index));
    std::vector<int> got;
    for (const auto& c : res.classes) got.push_back(c.report.resolved.value_or(-1));
    std::sort(got.begin(), got.end());
    res.table.pass = static_cast<int>(res.classes.size()) == res.table.expected_count &&
                     got == res.table.expected_entries;
    break;
  }
  return res;
}

void validate_fixture(const VoaContext& voa, const Fixture& f) {
  Isometry nu = make_isometry(voa.lattice, f.matrix);
  FrameShape fs = frame_shape(voa.lattice, nu);
  if (fs.exponents != f.claimed.exponents)
    throw std::invalid_argument("fixture " + f.name + ": frame shape mismatch");
  if (order_doubling(voa.lattice, nu) != f.claimed_doubling)
    throw std::invalid_argument("fixture " + f.name + ": order-doubling flag mismatch");
  if (!stabilizes_simple_roots(nu, voa.delta))
    throw std::invalid_argument("fixture " + f.name + ": does not stabilize the simple roots");
  if (f.family != '?') {
    auto fam = family_of_frame_shape(fs.exponents);
    if (!fam.has_value() || *fam != f.family)
      throw std::invalid_argument("fixture " + f.name + ": family tag mismatch");
    if (frame_class(f.family).order_doubling != order_doubling(voa.lattice, nu))
      throw std::invalid_argument("fixture " + f.name + ": doubling flag differs from the table");
  }
}

TableReport reproduce_table(char family, const std::vector<std::string>& cells,
                            const std::vector<Fixture>& fixtures, const SearchOptions& options) {
  TableReport report;
  report.family = family;
  auto wanted = [&](const std::string& label) {
    return cells.empty() || std::find(cells.begin(), cells.end(), label) != cells.end();
  };
  for (const auto& col : golden_table()) {
    if (col.family != family || !wanted(col.label)) continue;
    CellReport cell;
    cell.label = col.label;
    cell.class_index = col.class_index;
    const Fixture* fx = nullptr;
    Fixture identity_fx;
    if (family == 'A') {
      identity_fx.name = "identity";
      identity_fx.lattice_label = col.label;
      identity_fx.matrix = imat_identity(24);
      identity_fx.claimed.exponents = {{1, 24}};
      identity_fx.family = 'A';
      fx = &identity_fx;
    } else {
      for (const auto& f : fixtures)
        if (f.lattice_label == col.label && f.family == family && f.class_index == col.class_index)
          fx = &f;
    }
    if (fx == nullptr) {
      cell.status = CellReport::Status::Skipped;
      cell.detail = "no fixture for this cell";
      report.cells.push_back(std::move(cell));
      continue;
    }
    try {
      const VoaContext& voa = niemeier_context(col.label);
      validate_fixture(voa, *fx);
      NuContext nc = make_nu_context(voa, fx->matrix);
      SearchOptions opt = options;
      for (const IMat& g : fx->dedup_gens) opt.dedup_gens.push_back(g);
      cell.result = find_short(voa, nc, family, col.class_index, opt);
      cell.status = cell.result.table.pass ? CellReport::Status::Pass : CellReport::Status::Fail;
      if (!cell.result.table.pass) {
        cell.detail = "expected " + std::to_string(cell.result.table.expected_count) + " classes, found " +
                      std::to_string(cell.result.classes.size());
        report.pass = false;
      }
    } catch (const std::exception& e) {
      cell.status = CellReport::Status::Fail;
      cell.detail = e.what();
      report.pass = false;
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace orbifolder

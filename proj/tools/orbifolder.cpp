// Command-line front end: catalog inspection, automorphism analysis, short
// automorphism search and identification-table reproduction.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orbifolder/json_io.hpp"

using namespace orbifolder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComparisonFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string root_system_name(const std::vector<RootComponent>& comps) {
  if (comps.empty()) return "(none)";
  std::ostringstream os;
  for (size_t i = 0; i < comps.size();) {
    size_t j = i;
    while (j < comps.size() && comps[j] == comps[i]) ++j;
    if (i) os << " ";
    os << to_string(comps[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

int cmd_catalog_list(bool as_json) {
  std::ostringstream js;
  js << "[";
  bool first = true;
  for (const auto& spec : niemeier_table()) {
    const VoaContext& ctx = niemeier_context(spec.label);
    auto comps = identify_root_system(ctx.lattice, ctx.roots);
    if (as_json) {
      if (!first) js << ",";
      js << "{\"label\":\"" << spec.label << "\",\"root_system\":\"" << root_system_name(comps)
         << "\",\"roots\":" << ctx.roots.size() << "}";
      first = false;
    } else {
      std::cout << spec.label << "\t" << root_system_name(comps) << "\t" << ctx.roots.size()
                << " roots\n";
    }
  }
  js << "]";
  if (as_json) {
    std::cout << js.str() << "\n";
    return kExitOk;
  }
  std::cout << "\nfamilies (frame shape, order doubling, genus, classes, constructions):\n";
  for (const auto& f : frame_classes()) {
    FrameShape fs{f.exponents, f.order};
    std::cout << f.family << "\t" << to_string(fs) << "\t" << (f.order_doubling ? "yes" : "no")
              << "\t" << f.genus << "\t" << f.class_number << "\t" << f.voa_count << "\n";
  }
  return kExitOk;
}

int cmd_catalog_info(const std::string& label, bool as_json) {
  const VoaContext& ctx = niemeier_context(label);
  auto comps = identify_root_system(ctx.lattice, ctx.roots);
  auto disc = discriminant_group(ctx.lattice);
  if (as_json) {
    std::ostringstream os;
    os << "{\"label\":\"" << label << "\",\"rank\":" << ctx.rank() << ",\"det\":\""
       << determinant(ctx.lattice.gram).get_str() << "\""
       << ",\"roots\":" << ctx.roots.size() << ",\"root_system\":\"" << root_system_name(comps)
       << "\",\"discriminant_group_order\":\"" << disc.order.get_str()
       << "\",\"gram\":" << imat_to_json_text(ctx.lattice.gram) << "}";
    std::cout << os.str() << "\n";
    return kExitOk;
  }
  std::cout << "lattice " << label << "\n";
  std::cout << "  rank          " << ctx.rank() << "\n";
  std::cout << "  determinant   " << determinant(ctx.lattice.gram).get_str() << "\n";
  std::cout << "  roots         " << ctx.roots.size() << "\n";
  std::cout << "  root system   " << root_system_name(comps) << "\n";
  std::cout << "  disc group    order " << disc.order.get_str() << "\n";
  std::cout << "  gram matrix:\n";
  for (Eigen::Index i = 0; i < ctx.lattice.gram.rows(); ++i) {
    std::cout << "   ";
    for (Eigen::Index j = 0; j < ctx.lattice.gram.cols(); ++j)
      std::cout << " " << ctx.lattice.gram(i, j).get_str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const std::string& spec_path, bool as_json) {
  AutomorphismSpec spec = automorphism_spec_from_json_text(read_file(spec_path));
  std::optional<VoaContext> own;
  const VoaContext* ctx;
  if (spec.inline_lattice.has_value()) {
    own = make_context(*spec.inline_lattice);
    ctx = &*own;
  } else {
    ctx = &niemeier_context(spec.label);
  }
  NuContext nc = make_nu_context(*ctx, spec.matrix);
  OrbifoldReport rep = analyze(nc, spec.h);
  if (as_json) {
    std::cout << report_to_json_text(rep) << "\n";
  } else {
    std::cout << "lattice " << rep.lattice_label << ", order " << rep.order << ", frame shape "
              << to_string(rep.frame) << (rep.order_doubling ? " (order doubling)" : "") << "\n";
    std::cout << "type " << rep.type << ", short: " << (rep.is_short ? "yes" : "no");
    for (const auto& r : rep.short_reasons) std::cout << " [" << r << "]";
    std::cout << "\n";
    std::cout << "conformal weights:";
    for (const Rat& w : rep.conformal_weights) std::cout << " " << rat_to_string(w);
    std::cout << "\n";
    std::cout << "orbifold dim " << rep.orbifold_dim
              << (rep.orbifold_dim_exact ? "" : " (upper bound)") << ", rank " << rep.orbifold_rank
              << ", gdh " << (rep.gdh_certificate ? "yes" : "no") << "\n";
    if (rep.resolved.has_value())
      std::cout << "weight-one algebra: " << schellekens_entry(*rep.resolved).name() << " (entry "
                << *rep.resolved << ")\n";
    else
      std::cout << "weight-one algebra: unresolved, " << rep.candidates.size() << " candidates\n";
  }
  return kExitOk;
}

Fixture resolve_fixture(const std::string& name, const std::string& lattice) {
  if (name == "identity") {
    const VoaContext& ctx = niemeier_context(lattice);
    Fixture f;
    f.name = "identity";
    f.lattice_label = lattice;
    f.matrix = imat_identity(ctx.rank());
    f.claimed.exponents = {{1, static_cast<int>(ctx.rank())}};
    f.claimed.order = 1;
    f.family = 'A';
    return f;
  }
  return load_fixture(name);
}

int cmd_search(const std::string& lattice, const std::string& fixture_name,
               const std::string& dedup_path, int jobs, const std::string& cache_dir,
               bool as_json) {
  Fixture f = resolve_fixture(fixture_name, lattice);
  if (f.lattice_label != lattice)
    throw std::invalid_argument("fixture " + f.name + " targets lattice " + f.lattice_label);
  const VoaContext& ctx = niemeier_context(lattice);
  validate_fixture(ctx, f);
  NuContext nc = make_nu_context(ctx, f.matrix);
  SearchOptions opt;
  opt.jobs = jobs;
  opt.dedup_gens = f.dedup_gens;
  if (!dedup_path.empty()) {
    Fixture gens = load_fixture(dedup_path);
    opt.dedup_gens.push_back(gens.matrix);
    for (const IMat& g : gens.dedup_gens) opt.dedup_gens.push_back(g);
  }
  SearchResult res = find_short(ctx, nc, f.family, f.class_index, opt);
  std::string json = search_result_to_json_text(res);
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    size_t h = std::hash<std::string>{}(fixture_to_json_text(f));
    std::ostringstream name;
    name << lattice << "-" << std::hex << h << ".json";
    std::ofstream out(std::filesystem::path(cache_dir) / name.str());
    out << json << "\n";
  }
  if (as_json) {
    std::cout << json << "\n";
  } else {
    std::cout << "lattice " << lattice << ", fixture " << f.name << " (family " << f.family
              << ")\n";
    std::cout << res.candidate_count << " candidates, " << res.short_count
              << " short automorphisms, " << res.classes.size() << " classes ("
              << (res.exact ? "exact" : "upper bound") << ")\n";
    for (const auto& c : res.classes) {
      std::cout << "  class of " << c.members << " representatives -> ";
      if (c.report.resolved.has_value())
        std::cout << schellekens_entry(*c.report.resolved).name() << " (entry "
                  << *c.report.resolved << ")";
      else
        std::cout << "unresolved";
      std::cout << ", dim " << c.report.orbifold_dim << ", rank " << c.report.orbifold_rank << "\n";
    }
    if (res.table.covered)
      std::cout << "table comparison: expected " << res.table.expected_count << " classes -> "
                << (res.table.pass ? "pass" : "FAIL") << "\n";
  }
  return res.table.covered && !res.table.pass ? kExitComparisonFailed : kExitOk;
}

int cmd_table(char family, const std::vector<std::string>& cells, int jobs, bool as_json) {
  std::vector<Fixture> fixtures;
  for (const auto& blob : embedded_fixtures())
    fixtures.push_back(fixture_from_json_text(blob.json));
  SearchOptions opt;
  opt.jobs = jobs;
  TableReport rep = reproduce_table(family, cells, fixtures, opt);
  if (as_json) {
    std::cout << table_report_to_json_text(rep) << "\n";
  } else {
    std::cout << "family " << family << ":\n";
    for (const auto& c : rep.cells) {
      std::cout << "  " << c.label << "[" << c.class_index << "] ";
      switch (c.status) {
        case CellReport::Status::Pass:
          std::cout << "pass (" << c.result.classes.size() << " classes)";
          break;
        case CellReport::Status::Fail:
          std::cout << "FAIL " << c.detail;
          break;
        case CellReport::Status::Skipped:
          std::cout << "skipped: " << c.detail;
          break;
      }
      std::cout << "\n";
    }
    std::cout << (rep.pass ? "pass" : "FAIL") << "\n";
  }
  return rep.pass ? kExitOk : kExitComparisonFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice computations for cyclic orbifolds of the Niemeier lattices"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* catalog = app.add_subcommand("catalog", "inspect the built-in lattices");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list the 24 lattices and the 11 families");
  std::string info_label;
  auto* info = catalog->add_subcommand("info", "details for one lattice");
  info->add_option("label", info_label, "catalog label (A1..A24)")->required();

  std::string spec_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for an automorphism spec file");
  analyze_cmd->add_option("spec", spec_path, "json file {lattice, matrix, h}")->required();

  std::string search_lattice, search_fixture, dedup_path, cache_dir;
  int jobs = 1;
  auto* search_cmd = app.add_subcommand("search", "enumerate and classify short automorphisms");
  search_cmd->add_option("--lattice", search_lattice, "catalog label")->required();
  search_cmd->add_option("--fixture", search_fixture, "fixture name, path, or 'identity'")
      ->required();
  search_cmd->add_option("--dedup-gens", dedup_path, "fixture file with normalizer generators");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_option("--cache-dir", cache_dir, "directory for result caching");

  std::string family_str;
  std::vector<std::string> cells;
  auto* table_cmd = app.add_subcommand("table", "reproduce identification tables");
  auto* reproduce = table_cmd->add_subcommand("reproduce", "compare against the embedded tables");
  reproduce->add_option("--family", family_str, "family letter A..K")->required();
  reproduce->add_option("--cells", cells, "restrict to these lattice labels");
  reproduce->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_catalog_list(as_json);
    if (info->parsed()) return cmd_catalog_info(info_label, as_json);
    if (analyze_cmd->parsed()) return cmd_analyze(spec_path, as_json);
    if (search_cmd->parsed())
      return cmd_search(search_lattice, search_fixture, dedup_path, jobs, cache_dir, as_json);
    if (reproduce->parsed()) {
      if (family_str.size() != 1 || family_str[0] < 'A' || family_str[0] > 'K')
        throw std::invalid_argument("unknown family: " + family_str);
      return cmd_table(family_str[0], cells, jobs, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

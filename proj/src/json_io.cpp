#include "orbifolder/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include "json.hpp"
#include <sstream>

namespace orbifolder {

using ordered_json = nlohmann::ordered_json;

namespace {

Int int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long>());
  throw std::invalid_argument("json: expected an integer (as string or number)");
}

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("json: expected a rational (as string or number)");
}

IMat imat_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("json: expected a matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  IMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw std::invalid_argument("json: ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

ordered_json imat_to_json(const IMat& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json rvec_to_json(const RVec& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rat_to_string(v(i)));
  return a;
}

ordered_json frame_to_json(const FrameShape& f) {
  ordered_json o = ordered_json::object();
  for (auto& [t, b] : f.exponents) o[std::to_string(t)] = b;
  return o;
}

FrameShape frame_from_json(const nlohmann::json& j) {
  FrameShape f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int t = std::stoi(it.key());
    f.exponents[t] = it.value().get<int>();
  }
  for (auto& [t, b] : f.exponents)
    if (b > 0) f.order = static_cast<int>(lcm(f.order, t).get_si());
  return f;
}

}  // namespace

std::string imat_to_json_text(const IMat& m) { return imat_to_json(m).dump(); }

Lattice lattice_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  IMat gram = imat_from_json(j.at("gram"));
  return make_lattice(std::move(gram), j.value("label", std::string{}));
}

Fixture fixture_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Fixture f;
  f.name = j.value("name", std::string{});
  f.lattice_label = j.at("lattice").get<std::string>();
  f.matrix = imat_from_json(j.at("matrix"));
  f.claimed = frame_from_json(j.at("claimed_frame_shape"));
  f.claimed_doubling = j.value("order_doubling", false);
  std::string fam = j.value("family", std::string{"?"});
  f.family = fam.empty() ? '?' : fam[0];
  f.class_index = j.value("class_index", 0);
  f.provenance = j.value("provenance", std::string{});
  if (j.contains("dedup_gens"))
    for (const auto& g : j["dedup_gens"]) f.dedup_gens.push_back(imat_from_json(g));
  return f;
}

std::string fixture_to_json_text(const Fixture& f) {
  ordered_json j;
  j["name"] = f.name;
  j["lattice"] = f.lattice_label;
  j["family"] = std::string(1, f.family);
  j["class_index"] = f.class_index;
  j["claimed_frame_shape"] = frame_to_json(f.claimed);
  j["order_doubling"] = f.claimed_doubling;
  j["provenance"] = f.provenance;
  j["matrix"] = imat_to_json(f.matrix);
  if (!f.dedup_gens.empty()) {
    ordered_json gens = ordered_json::array();
    for (const IMat& g : f.dedup_gens) gens.push_back(imat_to_json(g));
    j["dedup_gens"] = std::move(gens);
  }
  return j.dump(1);
}

AutomorphismSpec automorphism_spec_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  AutomorphismSpec spec;
  const auto& lat = j.at("lattice");
  if (lat.is_string()) {
    spec.label = lat.get<std::string>();
  } else {
    spec.inline_lattice = lattice_from_json_text(lat.dump());
    spec.label = spec.inline_lattice->label;
  }
  spec.matrix = imat_from_json(j.at("matrix"));
  const auto& h = j.at("h");
  spec.h = RVec::Zero(static_cast<Eigen::Index>(h.size()));
  for (Eigen::Index i = 0; i < spec.h.size(); ++i) spec.h(i) = rat_from_json(h[i]);
  return spec;
}

namespace {

ordered_json report_to_json(const OrbifoldReport& rep) {
  ordered_json j;
  j["lattice"] = rep.lattice_label;
  j["order"] = rep.order;
  j["frame_shape"] = frame_to_json(rep.frame);
  j["order_doubling"] = rep.order_doubling;
  j["type"] = rep.type;
  ordered_json weights = ordered_json::array();
  for (const Rat& w : rep.conformal_weights) weights.push_back(rat_to_string(w));
  j["conformal_weights"] = std::move(weights);
  ordered_json dims = ordered_json::object();
  for (auto& [d, v] : rep.fixed_dims) dims[std::to_string(d)] = v;
  j["fixed_dims"] = std::move(dims);
  j["is_short"] = rep.is_short;
  j["short_reasons"] = rep.short_reasons;
  j["extremal"] = rep.extremal;
  j["rank_criterion"] = rep.rank_criterion;
  j["gdh_certificate"] = rep.gdh_certificate;
  j["orbifold_dim"] = rep.orbifold_dim;
  j["orbifold_dim_exact"] = rep.orbifold_dim_exact;
  j["orbifold_rank"] = rep.orbifold_rank;
  j["schellekens_candidates"] = rep.candidates;
  if (rep.resolved.has_value()) {
    j["resolved_entry"] = *rep.resolved;
    j["lie_algebra"] = schellekens_entry(*rep.resolved).name();
  } else {
    j["resolved_entry"] = nullptr;
  }
  if (rep.fingerprint_.has_value()) {
    const Fingerprint& fp = *rep.fingerprint_;
    ordered_json f;
    f["order"] = fp.order;
    f["type_zero"] = fp.type_zero;
    f["extremal"] = fp.extremal;
    f["fixed_dim"] = fp.fixed_dim;
    f["resolved_entry"] = fp.resolved_entry;
    f["eigenspace_dim"] = fp.eigenspace_dim;
    j["fingerprint"] = std::move(f);
  }
  if (rep.is_short) {
    j["orbit_lattice_index"] = rep.orbit_index.get_str();
    j["orbit_lattice_disc"] = rep.orbit_disc.get_str();
  }
  return j;
}

ordered_json search_result_to_json(const SearchResult& res) {
  ordered_json j;
  j["lattice"] = res.lattice_label;
  j["family"] = std::string(1, res.family);
  j["class_index"] = res.class_index;
  j["candidates"] = res.candidate_count;
  j["short_automorphisms"] = res.short_count;
  j["class_count"] = res.classes.size();
  j["count_is_exact"] = res.exact;
  ordered_json classes = ordered_json::array();
  for (const auto& c : res.classes) {
    ordered_json cj;
    cj["h"] = rvec_to_json(c.representative);
    cj["members"] = c.members;
    cj["report"] = report_to_json(c.report);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  if (res.table.covered) {
    ordered_json t;
    t["expected_classes"] = res.table.expected_count;
    t["expected_entries"] = res.table.expected_entries;
    t["pass"] = res.table.pass;
    j["table_comparison"] = std::move(t);
  }
  return j;
}

}  // namespace

std::string report_to_json_text(const OrbifoldReport& rep) { return report_to_json(rep).dump(1); }

std::string search_result_to_json_text(const SearchResult& res) {
  return search_result_to_json(res).dump(1);
}

std::string table_report_to_json_text(const TableReport& rep) {
  ordered_json j;
  j["family"] = std::string(1, rep.family);
  j["pass"] = rep.pass;
  ordered_json cells = ordered_json::array();
  for (const auto& c : rep.cells) {
    ordered_json cj;
    cj["lattice"] = c.label;
    cj["class_index"] = c.class_index;
    cj["status"] = c.status == CellReport::Status::Pass     ? "pass"
                   : c.status == CellReport::Status::Fail   ? "fail"
                                                            : "skipped";
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.status != CellReport::Status::Skipped) {
      cj["classes_found"] = c.result.classes.size();
      cj["expected"] = c.result.table.expected_count;
      ordered_json entries = ordered_json::array();
      for (const auto& cls : c.result.classes)
        entries.push_back(cls.report.resolved.has_value() ? ordered_json(*cls.report.resolved)
                                                          : ordered_json(nullptr));
      cj["resolved_entries"] = std::move(entries);
    }
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j.dump(1);
}

Fixture load_fixture(const std::string& name_or_path) {
  auto read_file = [](const std::string& path) -> std::optional<std::string> {
    std::ifstream in(path);
    if (!in.good()) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  if (auto text = read_file(name_or_path)) return fixture_from_json_text(*text);
  if (const char* dir = std::getenv("ORBIFOLDER_DATA")) {
    if (auto text = read_file(std::string(dir) + "/" + name_or_path + ".json"))
      return fixture_from_json_text(*text);
  }
  if (auto text = embedded_fixture_json(name_or_path)) return fixture_from_json_text(*text);
  throw std::invalid_argument("fixture not found: " + name_or_path);
}

}  // namespace orbifolder

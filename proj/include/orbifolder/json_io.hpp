#ifndef ORBIFOLDER_JSON_IO_HPP
#define ORBIFOLDER_JSON_IO_HPP

#include "orbifolder/search.hpp"

// JSON conventions: exact integers and rationals are strings ("p/q" for
// non-integral rationals), matrices are arrays of rows, field order is
// stable.

namespace orbifolder {

std::string imat_to_json_text(const IMat& m);

/// {"label": ..., "gram": [["2","-1"],...]}
Lattice lattice_from_json_text(const std::string& text);

/// Fixture schema:
/// {"name", "lattice", "matrix", "claimed_frame_shape": {"1": 8, ...},
///  "order_doubling", "family", "class_index", "provenance", "dedup_gens"}
Fixture fixture_from_json_text(const std::string& text);
std::string fixture_to_json_text(const Fixture& f);

/// Automorphism spec: {"lattice": label-or-object, "matrix": ..., "h": [...]}
struct AutomorphismSpec {
  std::string label;          // empty when the lattice is inline
  std::optional<Lattice> inline_lattice;
  IMat matrix;
  RVec h;
};
AutomorphismSpec automorphism_spec_from_json_text(const std::string& text);

std::string report_to_json_text(const OrbifoldReport& rep);
std::string search_result_to_json_text(const SearchResult& res);
std::string table_report_to_json_text(const TableReport& rep);

/// Resolves a fixture by file path, then by $ORBIFOLDER_DATA/<name>.json,
/// then by embedded name.  Throws when nothing matches.
Fixture load_fixture(const std::string& name_or_path);

}  // namespace orbifolder

#endif

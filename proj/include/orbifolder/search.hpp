#ifndef ORBIFOLDER_SEARCH_HPP
#define ORBIFOLDER_SEARCH_HPP

#include "orbifolder/orbifold.hpp"

namespace orbifolder {

/// A validated isometry fixture: the matrix is an isometry of the named
/// catalog lattice, stabilizes the simple roots, and reproduces the claimed
/// frame shape and order-doubling flag.
struct Fixture {
  std::string name;
  std::string lattice_label;
  IMat matrix;
  FrameShape claimed;
  bool claimed_doubling = false;
  char family = '?';
  int class_index = 0;
  std::string provenance;
  std::vector<IMat> dedup_gens;
};

struct SearchOptions {
  int jobs = 1;
  std::vector<IMat> dedup_gens;
};

struct ShortClass {
  RVec representative;
  int members;  // candidate representatives merged into this class
  OrbifoldReport report;
};

struct CellComparison {
  bool covered = false;  // the (lattice, family, class) cell is in the tables
  int expected_count = 0;
  std::vector<int> expected_entries;  // with multiplicity
  bool pass = false;
};

struct SearchResult {
  std::string lattice_label;
  char family = '?';
  int class_index = 0;
  size_t candidate_count = 0;
  size_t short_count = 0;  // candidates passing the short test, before dedup
  std::vector<ShortClass> classes;
  bool exact = false;  // class count certified exact (not just an upper bound)
  CellComparison table;
};

/// Coset representatives of ((1/n) N^nu + s) modulo (N^nu)', the finite set
/// containing every h giving an order-n automorphism over nu.
std::vector<RVec> candidate_h_set(const VoaContext& voa, const NuContext& nc);

/// Filters the candidate set down to the short automorphisms and partitions
/// them into algebraic conjugacy classes (power equivalence merged with
/// fingerprint equality).
SearchResult find_short(const VoaContext& voa, const NuContext& nc, char family, int class_index,
                        const SearchOptions& options = {});

struct CellReport {
  std::string label;
  int class_index = 0;
  enum class Status { Pass, Fail, Skipped } status = Status::Skipped;
  std::string detail;
  SearchResult result;  // populated unless skipped
};

struct TableReport {
  char family;
  std::vector<CellReport> cells;
  bool pass = true;  // no failed cell (skipped cells do not fail)
};

/// Re-derives the identification table of a family from the shipped fixtures
/// (family A uses the identity on every lattice and needs no fixtures).
/// `cells` restricts to the named lattice labels; empty means all covered.
TableReport reproduce_table(char family, const std::vector<std::string>& cells,
                            const std::vector<Fixture>& fixtures, const SearchOptions& options = {});

/// Fixture validation against a built context; throws with a named violation.
void validate_fixture(const VoaContext& voa, const Fixture& f);

}  // namespace orbifolder

#endif

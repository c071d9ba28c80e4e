#ifndef ORBIFOLDER_CATALOG_HPP
#define ORBIFOLDER_CATALOG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "orbifolder/lift.hpp"

namespace orbifolder {

// ---------------------------------------------------------------------------
// Root lattice components

enum class RootType { A, D, E };

struct RootComponent {
  RootType type;
  int n;  // rank

  bool operator==(const RootComponent& o) const = default;
  auto operator<=>(const RootComponent& o) const = default;
};

std::string to_string(const RootComponent& c);

/// Gram matrix in the simple-root basis.  D_n uses the ordering in which
/// nodes n-1 and n are the fork attached to node n-2.
IMat root_gram(const RootComponent& c);

/// Number of roots of the component.
int root_count(const RootComponent& c);

/// Order of the discriminant group, with classes labelled 0..order-1.
/// For D_n with n even the group is Z2 x Z2 and labels follow the
/// {0, s, v, c} = {0, 1, 2, 3} convention with XOR addition; all other
/// components are cyclic with addition mod the order.
int glue_class_count(const RootComponent& c);
int glue_class_add(const RootComponent& c, int a, int b);
int glue_class_negate(const RootComponent& c, int a);

/// Representative vector of the labelled discriminant class, in the
/// component's simple-root coordinates.
RVec glue_rep(const RootComponent& c, int label);

// ---------------------------------------------------------------------------
// The binary Golay code (extended quadratic-residue construction on P^1(F23);
// bit i < 23 is the residue i, bit 23 is the point at infinity).

const std::array<uint32_t, 12>& golay_basis();
bool golay_contains(uint32_t word);
std::vector<uint32_t> golay_codewords();

// ---------------------------------------------------------------------------
// Niemeier lattices

struct NiemeierSpec {
  std::string label;                         // "A1".."A24" as in the embedded tables
  std::vector<RootComponent> components;     // empty for the Leech lattice
  std::vector<std::vector<int>> glue_words;  // class labels, one per component
};

const std::vector<NiemeierSpec>& niemeier_table();
const NiemeierSpec& niemeier_spec(const std::string& label);

/// Builds the lattice for a catalog label; Gram matrices are cached.
const Lattice& build_niemeier(const std::string& label);

/// Shared per-lattice context (roots, simple system, cocycle data), built on
/// first use and cached.
const VoaContext& niemeier_context(const std::string& label);

/// Basis of the Leech lattice as rows of integer coordinates x with bilinear
/// form (x, y)/8.
const IMat& leech_coordinates();

/// Decomposes the norm-2 vectors into irreducible components.  Returns the
/// multiset of component types, sorted.  Throws if some component does not
/// match any ADE count/rank pattern.
std::vector<RootComponent> identify_root_system(const Lattice& l);
std::vector<RootComponent> identify_root_system(const Lattice& l, const std::vector<IVec>& roots);

// ---------------------------------------------------------------------------
// Schellekens' list

struct LieSummand {
  char family;  // 'A'..'G'
  int rank;
  int level;
};

struct SchellekensEntry {
  int number;  // 0 = zero Lie algebra, 1..70 as in the embedded tables
  std::vector<LieSummand> summands;
  int abelian_rank = 0;  // 24 for entry 1, else 0

  int dim() const;
  int rank() const;
  std::string name() const;
};

const std::vector<SchellekensEntry>& schellekens_list();
const SchellekensEntry& schellekens_entry(int number);
std::vector<SchellekensEntry> schellekens_candidates(int dim, int rank);

// ---------------------------------------------------------------------------
// Frame shape classes (families A..K) and the class-count table

struct FrameClass {
  char family;                   // 'A'..'K'
  std::map<int, int> exponents;  // frame shape t -> b_t
  int order;
  bool order_doubling;
  std::string genus;  // display string
  int class_number;
  int voa_count;
};

const std::vector<FrameClass>& frame_classes();
const FrameClass& frame_class(char family);
/// Family whose frame shape matches, if any.
std::optional<char> family_of_frame_shape(const std::map<int, int>& exponents);

/// Per-lattice class counts: for each Niemeier label and family, the list of
/// algebraic conjugacy classes in H with the number of short classes each.
struct ClassCountRow {
  std::string label;
  std::map<char, std::vector<int>> counts;
};

const std::vector<ClassCountRow>& class_count_table();

// ---------------------------------------------------------------------------
// Golden tables: short orbifold identifications per (family, lattice, class)

struct GoldenColumn {
  char family;
  std::string label;
  int class_index;                        // 0-based within (family, label)
  std::vector<std::pair<int, int>> rows;  // (schellekens number, multiplicity)
};

const std::vector<GoldenColumn>& golden_table();
/// All columns for the given family and lattice label.
std::vector<GoldenColumn> golden_columns(char family, const std::string& label);
/// Single column; throws on unknown key.
const GoldenColumn& golden_lookup(char family, const std::string& label, int class_index);

/// Expected identifications of the non-trivial powers of a short class:
/// divisor d of the order -> schellekens numbers admissible for g^d.
std::map<int, std::vector<int>> power_expectations(char family, const std::string& label,
                                                   int class_index);

// ---------------------------------------------------------------------------
// Curated isometry fixtures (embedded JSON; see json_io.hpp for the schema)

struct FixtureBlob {
  std::string name;
  std::string json;
};

const std::vector<FixtureBlob>& embedded_fixtures();
std::optional<std::string> embedded_fixture_json(const std::string& name);

}  // namespace orbifolder

#endif

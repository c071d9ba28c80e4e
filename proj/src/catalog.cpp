#include "orbifolder/catalog.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "orbifolder/enumeration.hpp"
#include "orbifolder/lift.hpp"

namespace orbifolder {

std::string to_string(const RootComponent& c) {
  const char* t = c.type == RootType::A ? "A" : c.type == RootType::D ? "D" : "E";
  return t + std::to_string(c.n);
}

IMat root_gram(const RootComponent& c) {
  const int n = c.n;
  IMat g = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  auto link = [&](int i, int j) {
    g(i, j) = -1;
    g(j, i) = -1;
  };
  switch (c.type) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case RootType::D:
      if (n < 3) throw std::invalid_argument("root_gram: D_n needs n >= 3");
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case RootType::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("root_gram: E_n needs n in 6..8");
      // chain 0-1-...-(n-2), node n-1 attached to node 2 from the right end:
      // standard E_n diagram with the trivalent node three steps from one end.
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 4, n - 1);
      break;
    }
  }
  return g;
}

int root_count(const RootComponent& c) {
  switch (c.type) {
    case RootType::A:
      return c.n * (c.n + 1);
    case RootType::D:
      return 2 * c.n * (c.n - 1);
    case RootType::E:
      return c.n == 6 ? 72 : c.n == 7 ? 126 : 240;
  }
  return 0;
}

int glue_class_count(const RootComponent& c) {
  switch (c.type) {
    case RootType::A:
      return c.n + 1;
    case RootType::D:
      return 4;
    case RootType::E:
      return c.n == 6 ? 3 : c.n == 7 ? 2 : 1;
  }
  return 1;
}

int glue_class_add(const RootComponent& c, int a, int b) {
  if (c.type == RootType::D && c.n % 2 == 0) return a ^ b;
  return (a + b) % glue_class_count(c);
}

int glue_class_negate(const RootComponent& c, int a) {
  if (c.type == RootType::D && c.n % 2 == 0) return a;
  int m = glue_class_count(c);
  return (m - a) % m;
}

RVec glue_rep(const RootComponent& c, int label) {
  const int n = c.n;
  const int order = glue_class_count(c);
  if (label < 0 || label >= order) throw std::invalid_argument("glue_rep: bad label");
  RVec zero = RVec::Zero(n);
  if (label == 0) return zero;
  RMat dual = inverse(to_rational(root_gram(c)));
  switch (c.type) {
    case RootType::A:
      return dual.col(0) * Rat(label);
    case RootType::D:
      if (n % 2 == 0) {
        // 1 = s, 2 = v, 3 = c
        if (label == 1) return dual.col(n - 1);
        if (label == 2) return dual.col(0);
        return dual.col(n - 2);
      }
      // cyclic of order 4 generated by the half-spin class
      return dual.col(n - 1) * Rat(label);
    case RootType::E: {
      if (n == 8) throw std::invalid_argument("glue_rep: E8 has no non-trivial classes");
      // generator: first dual basis vector with a non-integral class
      for (int j = 0; j < n; ++j) {
        if (!is_integral(RVec(dual.col(j)))) return dual.col(j) * Rat(label);
      }
      throw std::logic_error("glue_rep: no generator found");
    }
  }
  return zero;
}

// ---------------------------------------------------------------------------
// Golay code

namespace {

std::array<uint32_t, 12> compute_golay_basis() {
  bool qr[23] = {};
  for (int i = 1; i < 23; ++i) qr[i * i % 23] = true;
  uint32_t chi_q = 0;
  for (int i = 1; i < 23; ++i)
    if (qr[i]) chi_q |= 1u << i;
  // span of the 23 cyclic shifts of the residue indicator, each completed by
  // a parity bit at infinity
  std::vector<uint32_t> basis;
  auto reduce_add = [&basis](uint32_t w) {
    for (uint32_t b : basis) {
      uint32_t pivot = b & (~b + 1);
      if (w & pivot) w ^= b;
    }
    if (w) {
      uint32_t pivot = w & (~w + 1);
      for (uint32_t& b : basis)
        if (b & pivot) b ^= w;
      basis.push_back(w);
    }
  };
  uint32_t w = chi_q;
  for (int s = 0; s < 23; ++s) {
    uint32_t ext = w;
    if (__builtin_popcount(w) % 2 == 1) ext |= 1u << 23;
    reduce_add(ext);
    uint32_t shifted = 0;
    for (int i = 0; i < 23; ++i)
      if (w >> i & 1) shifted |= 1u << ((i + 1) % 23);
    w = shifted;
  }
  if (basis.size() != 12) throw std::logic_error("golay: construction failed");
  std::sort(basis.begin(), basis.end());
  std::array<uint32_t, 12> out{};
  std::copy(basis.begin(), basis.end(), out.begin());
  return out;
}

}  // namespace

const std::array<uint32_t, 12>& golay_basis() {
  static const std::array<uint32_t, 12> basis = compute_golay_basis();
  return basis;
}

bool golay_contains(uint32_t word) {
  for (uint32_t b : golay_basis()) {
    uint32_t pivot = b & (~b + 1);
    if (word & pivot) word ^= b;
  }
  return word == 0;
}

std::vector<uint32_t> golay_codewords() {
  const auto& basis = golay_basis();
  std::vector<uint32_t> all(4096, 0);
  for (size_t m = 1; m < 4096; ++m) {
    size_t low = m & (~m + 1);
    size_t rest = m ^ low;
    int bit = __builtin_ctzl(low);
    all[m] = all[rest] ^ basis[bit];
  }
  return all;
}

// ---------------------------------------------------------------------------
// Leech lattice

namespace {

IMat compute_leech_coordinates() {
  // Generators in coordinates x (lattice point = x / sqrt 8):
  // doubled Golay words, 4e_0 + 4e_i, 8e_0 and (-3, 1, ..., 1).
  std::vector<IVec> gens;
  for (uint32_t b : golay_basis()) {
    IVec v = IVec::Zero(24);
    for (int i = 0; i < 24; ++i)
      if (b >> i & 1) v(i) = 2;
    gens.push_back(v);
  }
  for (int i = 1; i < 24; ++i) {
    IVec v = IVec::Zero(24);
    v(0) = 4;
    v(i) = 4;
    gens.push_back(v);
  }
  {
    IVec v = IVec::Zero(24);
    v(0) = 8;
    gens.push_back(v);
  }
  {
    IVec v = IVec::Constant(24, 1);
    v(0) = -3;
    gens.push_back(v);
  }
  IMat stack(static_cast<Eigen::Index>(gens.size()), 24);
  for (size_t i = 0; i < gens.size(); ++i) stack.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  IMat basis = hnf_rows(stack);
  if (basis.rows() != 24) throw std::logic_error("leech: generators do not span");
  return basis;
}

}  // namespace

const IMat& leech_coordinates() {
  static const IMat x = compute_leech_coordinates();
  return x;
}

// ---------------------------------------------------------------------------
// Niemeier assembly

namespace {

Lattice assemble(const NiemeierSpec& spec) {
  if (spec.components.empty()) {
    const IMat& x = leech_coordinates();
    IMat gram(24, 24);
    IMat prod = x * x.transpose();
    for (int i = 0; i < 24; ++i)
      for (int j = 0; j < 24; ++j) {
        if (prod(i, j) % 8 != 0) throw std::logic_error("leech: gram not integral");
        gram(i, j) = prod(i, j) / 8;
      }
    return make_lattice(std::move(gram), spec.label);
  }
  int rank = 0;
  for (const auto& c : spec.components) rank += c.n;
  IMat block = IMat::Zero(rank, rank);
  int at = 0;
  std::vector<int> offsets;
  for (const auto& c : spec.components) {
    offsets.push_back(at);
    block.block(at, at, c.n, c.n) = root_gram(c);
    at += c.n;
  }
  // columns: component basis + glue representatives
  RMat gens(rank, rank + static_cast<int>(spec.glue_words.size()));
  gens.leftCols(rank) = RMat::Identity(rank, rank);
  for (size_t w = 0; w < spec.glue_words.size(); ++w) {
    const auto& word = spec.glue_words[w];
    if (word.size() != spec.components.size())
      throw std::invalid_argument("niemeier: glue word length mismatch");
    RVec v = RVec::Zero(rank);
    for (size_t ci = 0; ci < word.size(); ++ci) {
      RVec rep = glue_rep(spec.components[ci], word[ci]);
      v.segment(offsets[ci], spec.components[ci].n) = rep;
    }
    gens.col(rank + static_cast<Eigen::Index>(w)) = v;
  }
  Sublattice full = sublattice_from_generators(block, gens);
  if (full.rank() != rank) throw std::logic_error("niemeier: assembly rank defect");
  IMat gram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (!is_integral(full.gram(i, j))) throw std::logic_error("niemeier: non-integral gram");
      gram(i, j) = num(full.gram(i, j));
    }
  return make_lattice(std::move(gram), spec.label);
}

}  // namespace

const NiemeierSpec& niemeier_spec(const std::string& label) {
  for (const auto& spec : niemeier_table())
    if (spec.label == label) return spec;
  throw std::invalid_argument("unknown lattice label: " + label);
}

const Lattice& build_niemeier(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, Lattice> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;
  Lattice l = assemble(niemeier_spec(label));
  return cache.emplace(label, std::move(l)).first->second;
}

const VoaContext& niemeier_context(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<VoaContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it != cache.end()) return *it->second;
  auto ctx = std::make_unique<VoaContext>(make_context(build_niemeier(label)));
  return *cache.emplace(label, std::move(ctx)).first->second;
}

// ---------------------------------------------------------------------------
// Root system identification

std::vector<RootComponent> identify_root_system(const Lattice& l) {
  return identify_root_system(l, vectors_up_to_norm(l, 2));
}

std::vector<RootComponent> identify_root_system(const Lattice& l, const std::vector<IVec>& roots) {
  const size_t m = roots.size();
  if (m == 0) return {};
  // small representations for fast pairings
  const Eigen::Index n = l.rank();
  std::vector<std::vector<long>> r(m, std::vector<long>(n));
  for (size_t i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!roots[i](j).fits_slong_p()) throw std::logic_error("identify_root_system: huge root");
      r[i][j] = roots[i](j).get_si();
    }
  std::vector<std::vector<long>> gr(m, std::vector<long>(n));  // gram * root
  for (size_t i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      long acc = 0;
      for (Eigen::Index k = 0; k < n; ++k) acc += l.gram(j, k).get_si() * r[i][k];
      gr[i][j] = acc;
    }
  // union-find over non-orthogonal pairs
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      long dot = 0;
      for (Eigen::Index k = 0; k < n; ++k) dot += r[i][k] * gr[j][k];
      if (dot != 0) {
        size_t a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }
    }
  }
  std::map<size_t, std::vector<size_t>> comps;
  for (size_t i = 0; i < m; ++i) comps[find(i)].push_back(i);
  std::vector<RootComponent> out;
  for (const auto& [root_idx, members] : comps) {
    RMat span(n, static_cast<Eigen::Index>(members.size()));
    for (size_t k = 0; k < members.size(); ++k) span.col(k) = to_rational(roots[members[k]]);
    int rank = static_cast<int>(rank_of(span));
    int count = static_cast<int>(members.size());
    RootComponent c{RootType::A, rank};
    if (count == rank * (rank + 1)) {
      c.type = RootType::A;
    } else if (rank >= 4 && count == 2 * rank * (rank - 1)) {
      c.type = RootType::D;
    } else if ((rank == 6 && count == 72) || (rank == 7 && count == 126) ||
               (rank == 8 && count == 240)) {
      c.type = RootType::E;
    } else {
      std::ostringstream os;
      os << "identify_root_system: component with " << count << " roots of rank " << rank
         << " matches no ADE type";
      throw std::runtime_error(os.str());
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Schellekens helpers

namespace {

int lie_dim(const LieSummand& s) {
  switch (s.family) {
    case 'A':
      return s.rank * (s.rank + 2);
    case 'B':
    case 'C':
      return s.rank * (2 * s.rank + 1);
    case 'D':
      return s.rank * (2 * s.rank - 1);
    case 'E':
      return s.rank == 6 ? 78 : s.rank == 7 ? 133 : 248;
    case 'F':
      return 52;
    case 'G':
      return 14;
  }
  throw std::logic_error("lie_dim: bad family");
}

}  // namespace

int SchellekensEntry::dim() const {
  int d = abelian_rank;
  for (const auto& s : summands) d += lie_dim(s);
  return d;
}

int SchellekensEntry::rank() const {
  int r = abelian_rank;
  for (const auto& s : summands) r += s.rank;
  return r;
}

std::string SchellekensEntry::name() const {
  if (number == 0) return "0";
  if (summands.empty()) return "u(1)^24";
  std::ostringstream os;
  for (size_t i = 0; i < summands.size();) {
    size_t j = i;
    while (j < summands.size() && summands[j].family == summands[i].family &&
           summands[j].rank == summands[i].rank && summands[j].level == summands[i].level)
      ++j;
    if (i) os << " ";
    os << summands[i].family << summands[i].rank << "," << summands[i].level;
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

const SchellekensEntry& schellekens_entry(int number) {
  for (const auto& e : schellekens_list())
    if (e.number == number) return e;
  throw std::invalid_argument("unknown schellekens entry " + std::to_string(number));
}

std::vector<SchellekensEntry> schellekens_candidates(int dim, int rank) {
  std::vector<SchellekensEntry> out;
  for (const auto& e : schellekens_list())
    if (e.dim() == dim && e.rank() == rank) out.push_back(e);
  return out;
}

const FrameClass& frame_class(char family) {
  for (const auto& f : frame_classes())
    if (f.family == family) return f;
  throw std::invalid_argument(std::string("unknown family ") + family);
}

std::optional<char> family_of_frame_shape(const std::map<int, int>& exponents) {
  for (const auto& f : frame_classes())
    if (f.exponents == exponents) return f.family;
  return std::nullopt;
}

std::vector<GoldenColumn> golden_columns(char family, const std::string& label) {
  std::vector<GoldenColumn> out;
  for (const auto& c : golden_table())
    if (c.family == family && c.label == label) out.push_back(c);
  return out;
}

const GoldenColumn& golden_lookup(char family, const std::string& label, int class_index) {
  for (const auto& c : golden_table())
    if (c.family == family && c.label == label && c.class_index == class_index) return c;
  throw std::invalid_argument("golden_lookup: no column for family " + std::string(1, family) +
                              ", lattice " + label + ", class " + std::to_string(class_index));
}

std::optional<std::string> embedded_fixture_json(const std::string& name) {
  for (const auto& f : embedded_fixtures())
    if (f.name == name) return f.json;
  return std::nullopt;
}

}  // namespace orbifolder

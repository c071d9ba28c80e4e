#include <sstream>

#include "orbifolder/catalog.hpp"

// Embedded data: lattice assembly data (components and glue words in
// discriminant-class labels), the 71-entry weight-one Lie algebra list, the
// 11 frame-shape families with their class counts, the per-lattice class
// count table, the identification tables per family, and the expected
// identifications of powers for the curated cells.

namespace orbifolder {

namespace {

RootComponent A(int n) { return {RootType::A, n}; }
RootComponent D(int n) { return {RootType::D, n}; }
RootComponent E(int n) { return {RootType::E, n}; }

std::vector<NiemeierSpec> make_niemeier_table() {
  std::vector<NiemeierSpec> t;
  t.push_back({"A1", {D(24)}, {{1}}});
  t.push_back({"A2", {D(16), E(8)}, {{1, 0}}});
  t.push_back({"A3", {E(8), E(8), E(8)}, {}});
  t.push_back({"A4", {A(24)}, {{5}}});
  t.push_back({"A5", {D(12), D(12)}, {{1, 2}, {2, 1}}});
  t.push_back({"A6", {A(17), E(7)}, {{3, 1}}});
  t.push_back({"A7", {D(10), E(7), E(7)}, {{1, 1, 0}, {3, 0, 1}}});
  t.push_back({"A8", {A(15), D(9)}, {{2, 1}}});
  t.push_back({"A9", {D(8), D(8), D(8)}, {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}});
  t.push_back({"A10", {A(12), A(12)}, {{1, 5}}});
  t.push_back({"A11", {A(11), D(7), E(6)}, {{1, 1, 1}}});
  t.push_back({"A12", {E(6), E(6), E(6), E(6)}, {{1, 1, 1, 0}, {2, 1, 0, 1}}});
  t.push_back({"A13", {A(9), A(9), D(6)}, {{4, 2, 0}, {5, 0, 1}, {7, 1, 2}}});
  t.push_back({"A14", {D(6), D(6), D(6), D(6)},
              {{2, 1, 1, 0}, {1, 3, 2, 0}, {1, 2, 0, 1}, {3, 1, 0, 2}}});
  t.push_back({"A15", {A(8), A(8), A(8)}, {{3, 3, 0}, {5, 1, 1}}});
  t.push_back({"A16", {A(7), A(7), D(5), D(5)}, {{4, 4, 0, 0}, {3, 1, 1, 0}, {5, 1, 0, 1}}});
  t.push_back({"A17", {A(6), A(6), A(6), A(6)}, {{3, 2, 1, 0}, {5, 3, 0, 1}}});
  t.push_back({"A18", {A(5), A(5), A(5), A(5), D(4)},
              {{2, 2, 2, 0, 0}, {5, 3, 1, 1, 0}, {3, 3, 0, 0, 1}, {4, 1, 1, 0, 2}}});
  t.push_back({"A19", {D(4), D(4), D(4), D(4), D(4), D(4)},
              {{1, 1, 1, 1, 0, 0},
               {2, 2, 2, 2, 0, 0},
               {3, 2, 1, 0, 1, 0},
               {1, 3, 2, 0, 2, 0},
               {2, 3, 1, 0, 0, 1},
               {3, 1, 2, 0, 0, 2}}});
  t.push_back({"A20", {A(4), A(4), A(4), A(4), A(4), A(4)},
              {{2, 2, 1, 1, 0, 0}, {3, 1, 2, 0, 1, 0}, {1, 3, 2, 0, 0, 1}}});
  t.push_back({"A21", {A(3), A(3), A(3), A(3), A(3), A(3), A(3), A(3)},
              {{2, 2, 2, 2, 0, 0, 0, 0},
               {1, 1, 1, 1, 2, 0, 0, 0},
               {3, 2, 1, 0, 1, 1, 0, 0},
               {1, 3, 2, 0, 1, 0, 1, 0},
               {2, 1, 3, 0, 1, 0, 0, 1}}});
  {
    NiemeierSpec s;
    s.label = "A22";
    for (int i = 0; i < 12; ++i) s.components.push_back(A(2));
    s.glue_words = {{2, 2, 1, 2, 0, 1, 0, 0, 0, 0, 0, 2}, {0, 2, 2, 1, 2, 0, 1, 0, 0, 0, 0, 2},
                    {0, 0, 2, 2, 1, 2, 0, 1, 0, 0, 0, 2}, {0, 0, 0, 2, 2, 1, 2, 0, 1, 0, 0, 2},
                    {0, 0, 0, 0, 2, 2, 1, 2, 0, 1, 0, 2}, {0, 0, 0, 0, 0, 2, 2, 1, 2, 0, 1, 2}};
    t.push_back(std::move(s));
  }
  {
    NiemeierSpec s;
    s.label = "A23";
    for (int i = 0; i < 24; ++i) s.components.push_back(A(1));
    for (uint32_t b : golay_basis()) {
      std::vector<int> word(24, 0);
      for (int i = 0; i < 24; ++i)
        if (b >> i & 1) word[i] = 1;
      s.glue_words.push_back(std::move(word));
    }
    t.push_back(std::move(s));
  }
  t.push_back({"A24", {}, {}});
  return t;
}

SchellekensEntry parse_entry(int number, const std::string& text) {
  SchellekensEntry e;
  e.number = number;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    // e.g. "A1,2^16" or "D4,12"
    char fam = tok[0];
    size_t comma = tok.find(',');
    size_t caret = tok.find('^');
    int rank = std::stoi(tok.substr(1, comma - 1));
    int level = std::stoi(tok.substr(comma + 1, caret == std::string::npos
                                                    ? std::string::npos
                                                    : caret - comma - 1));
    int count = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    for (int i = 0; i < count; ++i) e.summands.push_back({fam, rank, level});
  }
  return e;
}

std::vector<SchellekensEntry> make_schellekens_list() {
  std::vector<SchellekensEntry> v;
  v.push_back(parse_entry(0, ""));
  {
    SchellekensEntry leech = parse_entry(1, "");
    leech.abelian_rank = 24;
    v.push_back(leech);
  }
  v.push_back(parse_entry(2, "A1,4^12"));
  v.push_back(parse_entry(3, "A2,6 D4,12"));
  v.push_back(parse_entry(4, "C4,10"));
  v.push_back(parse_entry(5, "A1,2^16"));
  v.push_back(parse_entry(6, "A2,3^6"));
  v.push_back(parse_entry(7, "A1,2 A3,4^3"));
  v.push_back(parse_entry(8, "A1,2 A5,6 B2,3"));
  v.push_back(parse_entry(9, "A4,5^2"));
  v.push_back(parse_entry(10, "A1,2 D5,8"));
  v.push_back(parse_entry(11, "A6,7"));
  v.push_back(parse_entry(12, "B2,2^6"));
  v.push_back(parse_entry(13, "A2,2^4 D4,4"));
  v.push_back(parse_entry(14, "A2,2 F4,6"));
  v.push_back(parse_entry(15, "A1,1^24"));
  v.push_back(parse_entry(16, "A1,1^4 A3,2^4"));
  v.push_back(parse_entry(17, "A1,1^3 A5,3 D4,3"));
  v.push_back(parse_entry(18, "A1,1^3 A7,4"));
  v.push_back(parse_entry(19, "A1,1^2 C3,2 D5,4"));
  v.push_back(parse_entry(20, "A1,1^2 D6,5"));
  v.push_back(parse_entry(21, "A1,1 C5,3 G2,2"));
  v.push_back(parse_entry(22, "A4,2^2 C4,2"));
  v.push_back(parse_entry(23, "B3,2^4"));
  v.push_back(parse_entry(24, "A2,1^12"));
  v.push_back(parse_entry(25, "B2,1^4 D4,2^2"));
  v.push_back(parse_entry(26, "A2,1^2 A5,2^2 B2,1"));
  v.push_back(parse_entry(27, "A2,1^2 A8,3"));
  v.push_back(parse_entry(28, "A2,1 B2,1 E6,4"));
  v.push_back(parse_entry(29, "B4,2^3"));
  v.push_back(parse_entry(30, "A3,1^8"));
  v.push_back(parse_entry(31, "A3,1^2 D5,2^2"));
  v.push_back(parse_entry(32, "E6,3 G2,1^3"));
  v.push_back(parse_entry(33, "A3,1 A7,2 C3,1^2"));
  v.push_back(parse_entry(34, "A3,1 D7,3 G2,1"));
  v.push_back(parse_entry(35, "A3,1 C7,2"));
  v.push_back(parse_entry(36, "A8,2 F4,2"));
  v.push_back(parse_entry(37, "A4,1^6"));
  v.push_back(parse_entry(38, "C4,1^4"));
  v.push_back(parse_entry(39, "B3,1^2 C4,1 D6,2"));
  v.push_back(parse_entry(40, "A4,1 A9,2 B3,1"));
  v.push_back(parse_entry(41, "B6,2^2"));
  v.push_back(parse_entry(42, "D4,1^6"));
  v.push_back(parse_entry(43, "A5,1^4 D4,1"));
  v.push_back(parse_entry(44, "A5,1 C5,1 E6,2"));
  v.push_back(parse_entry(45, "A5,1 E7,3"));
  v.push_back(parse_entry(46, "A6,1^4"));
  v.push_back(parse_entry(47, "B4,1^2 D8,2"));
  v.push_back(parse_entry(48, "B4,1 C6,1^2"));
  v.push_back(parse_entry(49, "A7,1^2 D5,1^2"));
  v.push_back(parse_entry(50, "A7,1 D9,2"));
  v.push_back(parse_entry(51, "A8,1^3"));
  v.push_back(parse_entry(52, "C8,1 F4,1^2"));
  v.push_back(parse_entry(53, "B5,1 E7,2 F4,1"));
  v.push_back(parse_entry(54, "D6,1^4"));
  v.push_back(parse_entry(55, "A9,1^2 D6,1"));
  v.push_back(parse_entry(56, "B6,1 C10,1"));
  v.push_back(parse_entry(57, "B12,2"));
  v.push_back(parse_entry(58, "E6,1^4"));
  v.push_back(parse_entry(59, "A11,1 D7,1 E6,1"));
  v.push_back(parse_entry(60, "A12,1^2"));
  v.push_back(parse_entry(61, "D8,1^3"));
  v.push_back(parse_entry(62, "B8,1 E8,2"));
  v.push_back(parse_entry(63, "A15,1 D9,1"));
  v.push_back(parse_entry(64, "D10,1 E7,1^2"));
  v.push_back(parse_entry(65, "A17,1 E7,1"));
  v.push_back(parse_entry(66, "D12,1^2"));
  v.push_back(parse_entry(67, "A24,1"));
  v.push_back(parse_entry(68, "E8,1^3"));
  v.push_back(parse_entry(69, "D16,1 E8,1"));
  v.push_back(parse_entry(70, "D24,1"));
  return v;
}

std::map<int, int> fs(std::initializer_list<std::pair<int, int>> l) {
  return std::map<int, int>(l.begin(), l.end());
}

std::vector<FrameClass> make_frame_classes() {
  return {
      {'A', fs({{1, 24}}), 1, false, "II_24,0", 24, 24},
      {'B', fs({{1, 8}, {2, 8}}), 2, false, "II_16,0(2_II^+10)", 17, 17},
      {'C', fs({{1, 6}, {3, 6}}), 3, false, "II_12,0(3^-8)", 6, 6},
      {'D', fs({{2, 12}}), 2, true, "II_12,0(2_II^-10 4_II^-2)", 2, 9},
      {'E', fs({{1, 4}, {2, 2}, {4, 4}}), 4, false, "II_10,0(2_2^+2 4_II^+6)", 5, 5},
      {'F', fs({{1, 4}, {5, 4}}), 5, false, "II_8,0(5^+6)", 2, 2},
      {'G', fs({{1, 2}, {2, 2}, {3, 2}, {6, 2}}), 6, false, "II_8,0(2_II^+6 3^-6)", 2, 2},
      {'H', fs({{1, 3}, {7, 3}}), 7, false, "II_6,0(7^-5)", 1, 1},
      {'I', fs({{1, 2}, {2, 1}, {4, 1}, {8, 2}}), 8, false, "II_6,0(2_5^+1 4_1^+1 8_II^+4)", 1, 1},
      {'J', fs({{2, 3}, {6, 3}}), 6, true, "II_6,0(2_II^+4 4_II^-2 3^+5)", 1, 2},
      {'K', fs({{2, 2}, {10, 2}}), 10, true, "II_4,0(2_II^-2 4_II^-2 5^+4)", 1, 1},
  };
}

std::vector<ClassCountRow> make_class_count_table() {
  auto row = [](std::string label,
                std::initializer_list<std::pair<char, std::vector<int>>> data) {
    ClassCountRow r;
    r.label = std::move(label);
    for (auto& [f, v] : data) r.counts[f] = v;
    return r;
  };
  return {
      row("A1", {{'A', {1}}}),
      row("A2", {{'A', {1}}}),
      row("A3", {{'A', {1}}, {'B', {1}}}),
      row("A4", {{'A', {1}}, {'D', {1}}}),
      row("A5", {{'A', {1}}, {'D', {1}}}),
      row("A6", {{'A', {1}}, {'B', {2}}}),
      row("A7", {{'A', {1}}, {'B', {2}}}),
      row("A8", {{'A', {1}}, {'B', {4}}}),
      row("A9", {{'A', {1}}, {'B', {3}}}),
      row("A10", {{'A', {1}}, {'D', {1}}}),
      row("A11", {{'A', {1}}, {'B', {5}}}),
      row("A12", {{'A', {1}}, {'B', {2, 2}}, {'C', {2}}, {'G', {1}}}),
      row("A13", {{'A', {1}}, {'B', {4}}, {'E', {2}}}),
      row("A14", {{'A', {1}}, {'B', {3}}, {'C', {2}}, {'D', {1}}}),
      row("A15", {{'A', {1}}, {'B', {2}}, {'D', {1, 1}}}),
      row("A16", {{'A', {1}}, {'B', {6, 4, 4}}}),
      row("A17", {{'A', {1}}, {'C', {3}}, {'D', {1}}, {'J', {1}}}),
      row("A18", {{'A', {1}}, {'B', {4, 5}}, {'C', {5}}, {'E', {4}}, {'G', {4}}, {'I', {1}}}),
      row("A19", {{'A', {1}},
                  {'B', {2, 3}},
                  {'C', {2, 3}},
                  {'D', {1}},
                  {'E', {2}},
                  {'F', {1}},
                  {'G', {3, 2}}}),
      row("A20", {{'A', {1}}, {'B', {3}}, {'D', {1, 1}}, {'E', {5}}, {'F', {2}}, {'K', {1}}}),
      row("A21", {{'A', {1}},
                  {'B', {3, 6}},
                  {'C', {3}},
                  {'D', {1}},
                  {'E', {7}},
                  {'G', {4}},
                  {'H', {1}},
                  {'J', {1}}}),
      row("A22", {{'A', {1}},
                  {'B', {2}},
                  {'C', {4}},
                  {'D', {1, 1}},
                  {'E', {5}},
                  {'F', {2}},
                  {'G', {4}},
                  {'I', {2}},
                  {'J', {1, 2}},
                  {'K', {1}}}),
      row("A23", {{'A', {1}},
                  {'B', {3}},
                  {'C', {2}},
                  {'D', {1}},
                  {'E', {5}},
                  {'F', {2}},
                  {'G', {7}},
                  {'H', {1}},
                  {'I', {2}},
                  {'K', {1}}}),
      row("A24", {{'A', {1}},
                  {'B', {1}},
                  {'C', {1}},
                  {'D', {1}},
                  {'E', {1}},
                  {'F', {1}},
                  {'G', {1}},
                  {'H', {1}},
                  {'I', {1}},
                  {'J', {1}},
                  {'K', {1}}}),
  };
}

struct Col {
  const char* label;
  int class_index;
  std::initializer_list<std::pair<int, int>> rows;
};

void add_cols(std::vector<GoldenColumn>& out, char family, std::initializer_list<Col> cols) {
  for (const Col& c : cols) {
    GoldenColumn g;
    g.family = family;
    g.label = c.label;
    g.class_index = c.class_index;
    g.rows.assign(c.rows.begin(), c.rows.end());
    out.push_back(std::move(g));
  }
}

std::vector<GoldenColumn> make_golden_table() {
  std::vector<GoldenColumn> t;
  // family A: the diagonal
  const std::pair<const char*, int> diag[] = {
      {"A1", 70},  {"A2", 69},  {"A3", 68},  {"A4", 67},  {"A5", 66},  {"A6", 65},
      {"A7", 64},  {"A8", 63},  {"A9", 61},  {"A10", 60}, {"A11", 59}, {"A12", 58},
      {"A13", 55}, {"A14", 54}, {"A15", 51}, {"A16", 49}, {"A17", 46}, {"A18", 43},
      {"A19", 42}, {"A20", 37}, {"A21", 30}, {"A22", 24}, {"A23", 15}, {"A24", 1}};
  for (auto& [label, entry] : diag) {
    GoldenColumn g;
    g.family = 'A';
    g.label = label;
    g.class_index = 0;
    g.rows = {{entry, 1}};
    t.push_back(std::move(g));
  }
  add_cols(t, 'B',
           {{"A3", 0, {{62, 1}}},
            {"A6", 0, {{56, 1}, {50, 1}}},
            {"A7", 0, {{62, 1}, {53, 1}}},
            {"A8", 0, {{62, 1}, {56, 1}, {52, 1}, {47, 1}}},
            {"A9", 0, {{62, 1}, {50, 1}, {47, 1}}},
            {"A11", 0, {{56, 1}, {52, 1}, {53, 1}, {48, 1}, {39, 1}}},
            {"A12", 0, {{52, 1}, {38, 1}}},
            {"A12", 1, {{53, 1}, {44, 1}}},
            {"A13", 0, {{56, 1}, {48, 1}, {44, 1}, {31, 1}}},
            {"A14", 0, {{53, 1}, {47, 1}, {39, 1}}},
            {"A15", 0, {{50, 1}, {40, 1}}},
            {"A16", 0, {{52, 1}, {47, 1}, {48, 1}, {39, 1}, {38, 1}, {25, 1}}},
            {"A16", 1, {{50, 1}, {44, 1}, {39, 1}, {31, 1}}},
            {"A16", 2, {{53, 1}, {47, 1}, {40, 1}, {33, 1}}},
            {"A18", 0, {{48, 1}, {38, 1}, {33, 1}, {16, 1}}},
            {"A18", 1, {{44, 1}, {40, 1}, {39, 1}, {33, 1}, {26, 1}}},
            {"A19", 0, {{39, 1}, {25, 1}}},
            {"A19", 1, {{47, 1}, {31, 1}, {25, 1}}},
            {"A20", 0, {{40, 1}, {31, 1}, {26, 1}}},
            {"A21", 0, {{38, 1}, {25, 1}, {5, 1}}},
            {"A21", 1, {{39, 1}, {33, 1}, {31, 1}, {26, 1}, {25, 1}, {16, 1}}},
            {"A22", 0, {{26, 1}, {16, 1}}},
            {"A23", 0, {{25, 1}, {16, 1}, {5, 1}}},
            {"A24", 0, {{5, 1}}}});
  add_cols(t, 'C',
           {{"A12", 0, {{45, 1}, {32, 1}}},
            {"A14", 0, {{45, 1}, {34, 1}}},
            {"A17", 0, {{45, 1}, {34, 1}, {27, 1}}},
            {"A18", 0, {{45, 1}, {34, 1}, {32, 1}, {27, 1}, {17, 1}}},
            {"A19", 0, {{32, 1}, {6, 1}}},
            {"A19", 1, {{34, 1}, {32, 1}, {17, 1}}},
            {"A21", 0, {{34, 1}, {27, 1}, {17, 1}}},
            {"A22", 0, {{32, 1}, {27, 1}, {17, 1}, {6, 1}}},
            {"A23", 0, {{17, 1}, {6, 1}}},
            {"A24", 0, {{6, 1}}}});
  add_cols(t, 'D',
           {{"A4", 0, {{57, 1}}},   {"A5", 0, {{57, 1}}},   {"A10", 0, {{41, 1}}},
            {"A14", 0, {{41, 1}}},  {"A15", 0, {{29, 1}}},  {"A15", 1, {{36, 1}}},
            {"A17", 0, {{23, 1}}},  {"A19", 0, {{29, 1}}},  {"A20", 0, {{12, 1}}},
            {"A20", 1, {{22, 1}}},  {"A21", 0, {{23, 1}}},  {"A22", 0, {{2, 1}}},
            {"A22", 1, {{13, 1}}},  {"A23", 0, {{12, 1}}},  {"A24", 0, {{2, 1}}}});
  add_cols(t, 'E',
           {{"A13", 0, {{35, 1}, {28, 1}}},
            {"A18", 0, {{35, 2}, {18, 1}, {19, 1}}},
            {"A19", 0, {{28, 1}, {19, 1}}},
            {"A20", 0, {{35, 1}, {28, 2}, {18, 1}, {19, 1}}},
            {"A21", 0, {{35, 1}, {28, 1}, {18, 1}, {19, 3}, {7, 1}}},
            {"A22", 0, {{28, 1}, {18, 2}, {19, 1}, {7, 1}}},
            {"A23", 0, {{18, 1}, {19, 2}, {7, 2}}},
            {"A24", 0, {{7, 1}}}});
  add_cols(t, 'F',
           {{"A19", 0, {{20, 1}}},
            {"A20", 0, {{20, 1}, {9, 1}}},
            {"A22", 0, {{20, 1}, {9, 1}}},
            {"A23", 0, {{20, 1}, {9, 1}}},
            {"A24", 0, {{9, 1}}}});
  add_cols(t, 'G',
           {{"A12", 0, {{21, 1}}},
            {"A18", 0, {{21, 3}, {8, 1}}},
            {"A19", 0, {{21, 2}, {8, 1}}},
            {"A19", 1, {{21, 1}, {8, 1}}},
            {"A21", 0, {{21, 2}, {8, 2}}},
            {"A22", 0, {{21, 2}, {8, 2}}},
            {"A23", 0, {{21, 2}, {8, 5}}},
            {"A24", 0, {{8, 1}}}});
  add_cols(t, 'H',
           {{"A21", 0, {{11, 1}}}, {"A23", 0, {{11, 1}}}, {"A24", 0, {{11, 1}}}});
  add_cols(t, 'I',
           {{"A18", 0, {{10, 1}}},
            {"A22", 0, {{10, 2}}},
            {"A23", 0, {{10, 2}}},
            {"A24", 0, {{10, 1}}}});
  add_cols(t, 'J',
           {{"A17", 0, {{14, 1}}},
            {"A21", 0, {{14, 1}}},
            {"A22", 0, {{3, 1}}},
            {"A22", 1, {{14, 1}, {3, 1}}},
            {"A24", 0, {{3, 1}}}});
  add_cols(t, 'K',
           {{"A20", 0, {{4, 1}}},
            {"A22", 0, {{4, 1}}},
            {"A23", 0, {{4, 1}}},
            {"A24", 0, {{4, 1}}}});
  return t;
}

struct PowerRow {
  char family;
  const char* label;
  int class_index;
  int divisor;
  std::vector<int> entries;
};

// Expected identifications of g^d for the curated cells (single-class
// columns, so the assignment of powers is unambiguous).
const std::vector<PowerRow>& power_rows() {
  static const std::vector<PowerRow> rows = {
      {'E', "A24", 0, 2, {5}},
      {'G', "A24", 0, 2, {6}},
      {'G', "A24", 0, 3, {5}},
      {'I', "A24", 0, 2, {7}},
      {'I', "A24", 0, 4, {5}},
      {'J', "A24", 0, 2, {6}},
      {'J', "A24", 0, 3, {2}},
      {'K', "A24", 0, 2, {9}},
      {'K', "A24", 0, 5, {2}},
  };
  return rows;
}

}  // namespace

const std::vector<NiemeierSpec>& niemeier_table() {
  static const std::vector<NiemeierSpec> t = make_niemeier_table();
  return t;
}

const std::vector<SchellekensEntry>& schellekens_list() {
  static const std::vector<SchellekensEntry> t = make_schellekens_list();
  return t;
}

const std::vector<FrameClass>& frame_classes() {
  static const std::vector<FrameClass> t = make_frame_classes();
  return t;
}

const std::vector<ClassCountRow>& class_count_table() {
  static const std::vector<ClassCountRow> t = make_class_count_table();
  return t;
}

const std::vector<GoldenColumn>& golden_table() {
  static const std::vector<GoldenColumn> t = make_golden_table();
  return t;
}

std::map<int, std::vector<int>> power_expectations(char family, const std::string& label,
                                                   int class_index) {
  std::map<int, std::vector<int>> out;
  const GoldenColumn& own = golden_lookup(family, label, class_index);
  std::vector<int> first;
  for (auto& [entry, mult] : own.rows) first.push_back(entry);
  out[1] = first;
  int n = frame_class(family).order;
  if (n > 1) out[n] = {golden_lookup('A', label, 0).rows.front().first};
  for (const PowerRow& r : power_rows())
    if (r.family == family && r.label == label && r.class_index == class_index)
      out[r.divisor] = r.entries;
  return out;
}


}  // namespace orbifolder

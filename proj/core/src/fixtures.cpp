#include <algorithm>
#include <cctype>
#include <map>

#include "latcomp/constructions.hpp"

namespace latcomp {

namespace {

using Covers = std::vector<std::pair<int, int>>;

Lattice diamond_lattice() {
  return Lattice::from_covers({"0", "a", "b", "c", "1"},
                              {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Lattice pentagon_lattice() {
  // 0 < a < b < 1 on one side, 0 < c < 1 on the other
  return Lattice::from_covers({"0", "a", "b", "c", "1"},
                              {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

Lattice fig5_lattice() {
  // a four-element chain through b plus two extra atoms c, d
  return Lattice::from_covers({"0", "a", "b", "c", "d", "1"},
                              {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 5}, {0, 4}, {4, 5}});
}

Lattice m3x2_lattice() {
  const std::vector<std::string> labels = {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"};
  Covers covers = {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 4}, {2, 4}, {3, 4}, {1, 6}, {2, 7},
                   {3, 8}, {5, 6}, {5, 7}, {5, 8}, {4, 9}, {6, 9}, {7, 9}, {8, 9}};
  return Lattice::from_covers(labels, covers);
}

Lattice pg22_lattice() {
  const std::vector<std::string> labels = {"0", "a", "b", "c", "d", "e", "f", "g",
                                           "h", "i", "j", "k", "l", "m", "n", "1"};
  Covers covers;
  for (int atom = 1; atom <= 7; ++atom) covers.emplace_back(0, atom);
  for (int coatom = 8; coatom <= 14; ++coatom) covers.emplace_back(coatom, 15);
  auto at = [&](const std::string& s) {
    for (int i = 0; i < 16; ++i)
      if (labels[i] == s) return i;
    return -1;
  };
  const std::vector<std::pair<std::string, std::string>> incidences = {
      {"a", "h"}, {"b", "h"}, {"d", "h"}, {"b", "i"}, {"c", "i"}, {"f", "i"}, {"a", "j"},
      {"e", "j"}, {"f", "j"}, {"c", "k"}, {"d", "k"}, {"e", "k"}, {"a", "l"}, {"c", "l"},
      {"g", "l"}, {"b", "m"}, {"e", "m"}, {"g", "m"}, {"d", "n"}, {"f", "n"}, {"g", "n"}};
  for (const auto& [lo, hi] : incidences) covers.emplace_back(at(lo), at(hi));
  return Lattice::from_covers(labels, covers);
}

Lattice benzene_lattice() {
  return Lattice::from_covers({"0", "a", "b", "a''", "b''", "1"},
                              {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
}

CompLattice with_comp(Lattice l, const std::vector<std::pair<std::string, std::string>>& table) {
  const int n = l.size();
  std::vector<int> comp(n, -1);
  comp[l.bottom()] = l.top();
  comp[l.top()] = l.bottom();
  for (const auto& [from, to] : table) {
    int i = l.index_of(from), j = l.index_of(to);
    if (i < 0 || j < 0) throw Error("fixture table names unknown element");
    comp[i] = j;
  }
  return CompLattice(std::move(l), std::move(comp));
}

CompLattice build_fixture(const std::string& id) {
  if (id == "diamond-cyclic")
    return with_comp(diamond_lattice(), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  if (id == "diamond-repeat")
    return with_comp(diamond_lattice(), {{"a", "b"}, {"b", "c"}, {"c", "b"}});
  if (id == "pentagon-1")
    return with_comp(pentagon_lattice(), {{"a", "c"}, {"c", "b"}, {"b", "c"}});
  if (id == "pentagon-2")
    return with_comp(pentagon_lattice(), {{"b", "c"}, {"c", "a"}, {"a", "c"}});
  if (id == "fig5-invol")
    return with_comp(fig5_lattice(), {{"a", "c"}, {"c", "a"}, {"b", "d"}, {"d", "b"}});
  if (id == "fig5-noninj")
    return with_comp(fig5_lattice(), {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"d", "c"}});
  if (id == "h1")
    return with_comp(m3x2_lattice(), {{"a", "g"},
                                      {"b", "h"},
                                      {"c", "f"},
                                      {"d", "e"},
                                      {"e", "d"},
                                      {"f", "b"},
                                      {"g", "c"},
                                      {"h", "a"}});
  if (id == "h2")
    return with_comp(m3x2_lattice(), {{"a", "g"},
                                      {"b", "h"},
                                      {"c", "f"},
                                      {"d", "e"},
                                      {"e", "d"},
                                      {"f", "c"},
                                      {"g", "a"},
                                      {"h", "b"}});
  if (id == "pg22-c1")
    return with_comp(pg22_lattice(), {{"a", "k"},
                                      {"b", "j"},
                                      {"c", "m"},
                                      {"d", "i"},
                                      {"e", "n"},
                                      {"f", "l"},
                                      {"g", "h"},
                                      {"h", "g"},
                                      {"i", "d"},
                                      {"j", "b"},
                                      {"k", "a"},
                                      {"l", "f"},
                                      {"m", "c"},
                                      {"n", "e"}});
  if (id == "pg22-c2")
    return with_comp(pg22_lattice(), {{"a", "m"},
                                      {"b", "n"},
                                      {"c", "h"},
                                      {"d", "j"},
                                      {"e", "i"},
                                      {"f", "l"},
                                      {"g", "k"},
                                      {"h", "e"},
                                      {"i", "a"},
                                      {"j", "g"},
                                      {"k", "f"},
                                      {"l", "d"},
                                      {"m", "c"},
                                      {"n", "b"}});
  if (id == "pg22-c3")
    return with_comp(pg22_lattice(), {{"a", "n"},
                                      {"b", "k"},
                                      {"c", "j"},
                                      {"d", "l"},
                                      {"e", "i"},
                                      {"f", "m"},
                                      {"g", "h"},
                                      {"h", "g"},
                                      {"i", "e"},
                                      {"j", "c"},
                                      {"k", "b"},
                                      {"l", "d"},
                                      {"m", "f"},
                                      {"n", "a"}});
  throw UnknownFixture(id);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

CompLattice fixture(const std::string& name) { return build_fixture(lower(name)); }

Lattice fixture_lattice(const std::string& name) {
  const std::string id = lower(name);
  if (id == "diamond") return diamond_lattice();
  if (id == "pentagon") return pentagon_lattice();
  if (id == "fig5") return fig5_lattice();
  if (id == "m3x2") return m3x2_lattice();
  if (id == "pg22") return pg22_lattice();
  if (id == "benzene") return benzene_lattice();
  throw UnknownFixture(name);
}

std::vector<std::string> fixture_names() {
  return {"diamond-cyclic", "diamond-repeat", "pentagon-1", "pentagon-2", "fig5-invol",
          "fig5-noninj",    "h1",             "h2",         "pg22-c1",    "pg22-c2",
          "pg22-c3"};
}

std::vector<std::string> fixture_lattice_names() {
  return {"diamond", "pentagon", "fig5", "m3x2", "pg22", "benzene"};
}

}  // namespace latcomp

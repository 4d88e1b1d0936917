#include "latcomp/json_io.hpp"

#include <fstream>

namespace latcomp {

namespace {

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

Json lattice_to_json(const Lattice& l) {
  Json doc;
  doc["labels"] = l.labels();
  Json covers = Json::array();
  for (auto [i, j] : l.covers()) covers.push_back(Json::array({i, j}));
  doc["covers"] = covers;
  return doc;
}

Lattice lattice_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("lattice document must be an object");
  std::vector<std::string> labels;
  for (const auto& v : field(doc, "labels")) {
    if (!v.is_string()) throw InputError("labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  if (doc.contains("covers")) {
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : doc["covers"]) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("covers must be index pairs");
      covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Lattice::from_covers(std::move(labels), covers);
  }
  if (doc.contains("leq")) {
    std::vector<std::vector<bool>> leq;
    for (const auto& row : doc["leq"]) leq.push_back(row.get<std::vector<bool>>());
    return Lattice::from_leq(std::move(labels), leq);
  }
  throw InputError("lattice document needs 'covers' or 'leq'");
}

Json algebra_to_json(const CompLattice& a) {
  Json doc = lattice_to_json(a.lattice());
  doc["complement"] = a.comp_table();
  return doc;
}

CompLattice algebra_from_json(const Json& doc) {
  Lattice l = lattice_from_json(doc);
  // the lattice may have been reindexed into a linear extension, so route
  // the complement table through the original label positions
  std::vector<int> raw = field(doc, "complement").get<std::vector<int>>();
  const auto& original = field(doc, "labels");
  if (raw.size() != original.size()) throw InputError("complement table has wrong size");
  std::vector<int> comp(l.size(), -1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] >= l.size()) throw InputError("complement index out of range");
    int from = l.index_of(original[i].get<std::string>());
    int to = l.index_of(original[raw[i]].get<std::string>());
    comp[from] = to;
  }
  return CompLattice(std::move(l), std::move(comp));
}

Json congruence_to_json(const Congruence& c) {
  Json doc;
  Json blocks = Json::array();
  for (const auto& blk : c.block_lists()) blocks.push_back(blk);
  doc["blocks"] = blocks;
  return doc;
}

Congruence congruence_from_json(const Json& doc, int carrier_size) {
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : field(doc, "blocks")) blocks.push_back(blk.get<std::vector<int>>());
  return Congruence::from_blocks(blocks, carrier_size);
}

Json isomorphism_to_json(const Isomorphism& iso) {
  Json doc;
  doc["map"] = iso;
  return doc;
}

Isomorphism isomorphism_from_json(const Json& doc) {
  return field(doc, "map").get<std::vector<int>>();
}

Json action_to_json(const Action& s) {
  Json doc;
  doc["k"] = s.k;
  Json tables = Json::object();
  for (int mask = 0; mask < static_cast<int>(s.comps.size()); ++mask) {
    std::string key(s.k, '0');
    for (int i = 0; i < s.k; ++i)
      if (mask >> i & 1) key[i] = '1';
    if (s.k == 0) key = "*";
    tables[key] = s.comps[mask];
  }
  doc["S"] = tables;
  return doc;
}

Action action_from_json(const Json& doc) {
  Action s;
  s.k = field(doc, "k").get<int>();
  if (s.k < 0 || s.k > 12) throw InputError("unsupported exponent");
  s.comps.assign(1u << s.k, {});
  const Json& tables = field(doc, "S");
  if (!tables.is_object()) throw InputError("'S' must map bitstrings to tables");
  for (const auto& [key, value] : tables.items()) {
    int mask = 0;
    if (s.k == 0) {
      if (key != "*" && !key.empty()) throw InputError("bad bitstring '" + key + "'");
    } else {
      if (static_cast<int>(key.size()) != s.k) throw InputError("bad bitstring '" + key + "'");
      for (int i = 0; i < s.k; ++i) {
        if (key[i] == '1')
          mask |= 1 << i;
        else if (key[i] != '0')
          throw InputError("bad bitstring '" + key + "'");
      }
    }
    s.comps[mask] = value.get<std::vector<int>>();
  }
  for (const auto& table : s.comps)
    if (table.empty()) throw InputError("action misses a Boolean element");
  return s;
}

Formula formula_from_json(const Json& doc) {
  auto identity_of = [](const Json& j) {
    return TermIdentity{parse_term(field(j, "lhs").get<std::string>()),
                        parse_term(field(j, "rhs").get<std::string>())};
  };
  std::vector<TermIdentity> premises;
  if (doc.contains("premises"))
    for (const auto& p : doc["premises"]) premises.push_back(identity_of(p));
  TermIdentity conclusion = identity_of(field(doc, "conclusion"));
  return Formula::quasi(doc.value("name", "custom"), std::move(premises), std::move(conclusion));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return doc;
}

}  // namespace latcomp

#include "latcomp/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "latcomp/terms.hpp"

namespace latcomp {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

Congruence canonical_from_dsu(Dsu& dsu) {
  const int n = static_cast<int>(dsu.parent.size());
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = dsu.find(i);
  return Congruence::from_raw(raw);
}

}  // namespace

Congruence Congruence::identity(int n) {
  Congruence c;
  c.block_of.resize(n);
  std::iota(c.block_of.begin(), c.block_of.end(), 0);
  c.blocks = n;
  return c;
}

Congruence Congruence::full(int n) {
  Congruence c;
  c.block_of.assign(n, 0);
  c.blocks = n > 0 ? 1 : 0;
  return c;
}

Congruence Congruence::from_raw(const std::vector<int>& raw) {
  Congruence c;
  c.block_of.assign(raw.size(), -1);
  std::vector<int> renumber(raw.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int r = raw[i];
    if (renumber[r] < 0) renumber[r] = next++;
    c.block_of[i] = renumber[r];
  }
  c.blocks = next;
  return c;
}

Congruence Congruence::from_blocks(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> raw(n, -1);
  for (const auto& blk : blocks) {
    if (blk.empty()) throw InputError("empty congruence block");
    int least = *std::min_element(blk.begin(), blk.end());
    for (int x : blk) {
      if (x < 0 || x >= n) throw InputError("congruence block element out of range");
      if (raw[x] != -1) throw InputError("congruence blocks overlap");
      raw[x] = least;
    }
  }
  for (int x = 0; x < n; ++x)
    if (raw[x] < 0) throw InputError("congruence blocks do not cover the carrier");
  return from_raw(raw);
}

bool Congruence::refines(const Congruence& other) const {
  std::vector<int> image(blocks, -1);
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    int b = block_of[i];
    if (image[b] < 0)
      image[b] = other.block_of[i];
    else if (image[b] != other.block_of[i])
      return false;
  }
  return true;
}

std::vector<std::vector<int>> Congruence::block_lists() const {
  std::vector<std::vector<int>> out(blocks);
  for (std::size_t i = 0; i < block_of.size(); ++i) out[block_of[i]].push_back(static_cast<int>(i));
  return out;
}

bool is_congruence(const CompLattice& a, const Congruence& theta, Subject subject) {
  const int n = a.size();
  if (static_cast<int>(theta.block_of.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!theta.same(x, y)) continue;
      for (int c = 0; c < n; ++c) {
        if (!theta.same(a.meet(x, c), a.meet(y, c))) return false;
        if (!theta.same(a.join(x, c), a.join(y, c))) return false;
      }
      if (subject == Subject::Algebra && !theta.same(a.comp(x), a.comp(y))) return false;
    }
  return true;
}

bool compatible_with_comp(const CompLattice& a, const Congruence& theta) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (theta.same(x, y) && !theta.same(a.comp(x), a.comp(y))) return false;
  return true;
}

Congruence principal_congruence(const CompLattice& a, int x, int y, Subject subject) {
  const int n = a.size();
  if (x < 0 || y < 0 || x >= n || y >= n) throw InputError("element out of range");
  Dsu dsu(n);
  std::deque<std::pair<int, int>> work;
  auto push = [&](int u, int v) {
    if (dsu.merge(u, v)) work.emplace_back(u, v);
  };
  push(x, y);
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    for (int c = 0; c < n; ++c) {
      push(a.meet(u, c), a.meet(v, c));
      push(a.join(u, c), a.join(v, c));
    }
    if (subject == Subject::Algebra) push(a.comp(u), a.comp(v));
  }
  return canonical_from_dsu(dsu);
}

namespace {

Congruence join_congruences(const Congruence& p, const Congruence& q) {
  const int n = static_cast<int>(p.block_of.size());
  Dsu dsu(n);
  // transitive closure of the union; both relations are already compatible
  std::vector<int> rep_p(p.blocks, -1), rep_q(q.blocks, -1);
  for (int i = 0; i < n; ++i) {
    if (rep_p[p.block_of[i]] < 0)
      rep_p[p.block_of[i]] = i;
    else
      dsu.merge(rep_p[p.block_of[i]], i);
    if (rep_q[q.block_of[i]] < 0)
      rep_q[q.block_of[i]] = i;
    else
      dsu.merge(rep_q[q.block_of[i]], i);
  }
  return canonical_from_dsu(dsu);
}

}  // namespace

ConLattice congruence_lattice(const CompLattice& a, Subject subject, std::size_t count_cap) {
  const int n = a.size();
  std::set<Congruence> found;
  found.insert(Congruence::identity(n));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) found.insert(principal_congruence(a, x, y, subject));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Congruence> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Congruence joined = join_congruences(current[i], current[j]);
        if (found.insert(std::move(joined)).second) grew = true;
        if (found.size() > count_cap) throw BudgetExceeded("congruence lattice exceeds the cap");
      }
  }

  ConLattice out;
  out.congruences.assign(found.begin(), found.end());
  // finest to coarsest: more blocks first, ties by canonical table
  std::sort(out.congruences.begin(), out.congruences.end(),
            [](const Congruence& l, const Congruence& r) {
              if (l.blocks != r.blocks) return l.blocks > r.blocks;
              return l.block_of < r.block_of;
            });
  return out;
}

std::vector<int> ConLattice::atoms() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (congruences[i].is_identity()) continue;
    bool minimal = true;
    for (int j = 0; j < size() && minimal; ++j)
      if (j != i && !congruences[j].is_identity() && congruences[j].refines(congruences[i]) &&
          !(congruences[j] == congruences[i]))
        minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::optional<Congruence> ConLattice::monolith() const {
  std::optional<int> least;
  for (int i = 0; i < size(); ++i) {
    if (congruences[i].is_identity()) continue;
    bool below_all = true;
    for (int j = 0; j < size() && below_all; ++j)
      if (j != i && !congruences[j].is_identity() && !congruences[i].refines(congruences[j]))
        below_all = false;
    if (below_all) {
      least = i;
      break;
    }
  }
  if (!least) return std::nullopt;
  return congruences[*least];
}

SIResult subdirect_irreducibility(const CompLattice& a) {
  SIResult r;
  if (a.size() <= 1) return r;
  ConLattice con = congruence_lattice(a, Subject::Algebra);
  if (con.size() < 2) return r;
  auto m = con.monolith();
  if (m) {
    r.subdirectly_irreducible = true;
    r.monolith = std::move(m);
  }
  return r;
}

CompLattice quotient(const CompLattice& a, const Congruence& theta) {
  const int n = a.size();
  if (static_cast<int>(theta.block_of.size()) != n)
    throw IncompatibleCongruence("partition size does not match the carrier");
  if (!is_congruence(a, theta, Subject::Algebra))
    throw IncompatibleCongruence("partition is not compatible with the operations");

  auto blocks = theta.block_lists();
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& l, const auto& r) { return l.front() < r.front(); });
  const int m = static_cast<int>(blocks.size());
  std::vector<int> block_index(n);
  std::vector<int> rep(m);
  std::vector<std::string> labels(m);
  for (int b = 0; b < m; ++b) {
    rep[b] = blocks[b].front();
    labels[b] = a.label(rep[b]);
    for (int x : blocks[b]) block_index[x] = b;
  }
  // blocks of a lattice congruence are intervals; comparing least members
  // gives the quotient order, and least-member order is a linear extension
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i][j] = block_index[a.meet(rep[i], rep[j])] == i;
  Lattice lat = Lattice::from_leq(std::move(labels), leq);
  std::vector<int> comp(m);
  for (int b = 0; b < m; ++b) comp[b] = block_index[a.comp(rep[b])];
  return CompLattice(std::move(lat), std::move(comp));
}

ReductComparison reduct_congruence_comparison(const CompLattice& a) {
  ReductComparison r;
  ConLattice reduct = congruence_lattice(a, Subject::LatticeReduct);
  for (const auto& theta : reduct.congruences) {
    if (!compatible_with_comp(a, theta)) {
      r.equal = false;
      r.witness = theta;
      return r;
    }
  }
  r.equal = true;
  return r;
}

namespace {

bool congruences_permute(const CompLattice& a, const Congruence& p, const Congruence& q) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      bool pq = false, qp = false;
      for (int y = 0; y < n && !(pq && qp); ++y) {
        if (p.same(x, y) && q.same(y, z)) pq = true;
        if (q.same(x, y) && p.same(y, z)) qp = true;
      }
      if (pq != qp) return false;
    }
  return true;
}

}  // namespace

MalcevReport malcev_checks(const CompLattice& a) {
  MalcevReport r;
  ConLattice con = congruence_lattice(a, Subject::Algebra);
  const int m = con.size();

  r.permutable = true;
  for (int i = 0; i < m && r.permutable; ++i)
    for (int j = i + 1; j < m && r.permutable; ++j)
      if (!congruences_permute(a, con.congruences[i], con.congruences[j])) r.permutable = false;

  if (m == 1) {
    r.cong_distributive = true;
  } else {
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = "c" + std::to_string(i);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) leq[i][j] = con.leq(i, j);
    r.cong_distributive = is_distributive(Lattice::from_leq(std::move(labels), leq)).holds;
  }

  r.regular = true;
  for (int i = 0; i < m && r.regular; ++i)
    for (int j = i + 1; j < m && r.regular; ++j) {
      auto bi = con.congruences[i].block_lists();
      auto bj = con.congruences[j].block_lists();
      std::set<std::vector<int>> si(bi.begin(), bi.end());
      for (const auto& blk : bj)
        if (si.count(blk)) {
          r.regular = false;
          break;
        }
    }

  r.pixley_p = check_formula(a, builtin_formula("PIXLEY-P")).holds;
  r.pixley_q = check_formula(a, builtin_formula("PIXLEY-Q")).holds;
  r.reg_terms = check_formula(a, builtin_formula("REG-D")).holds;
  return r;
}

}  // namespace latcomp

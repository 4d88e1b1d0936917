#include "latcomp/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace latcomp {

namespace {

int highest_bit(const Bitset& b) {
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
    if (b.test(i)) return i;
  return -1;
}

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InputError("element names are not distinct");
  if (labels.empty()) throw InputError("empty carrier");
}

}  // namespace

Lattice Lattice::from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& covers) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  std::vector<Bitset> up(n, Bitset(n));
  for (int a = 0; a < n; ++a) up[a].set(a);
  for (auto [i, j] : covers) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InputError("cover index out of range");
    if (i == j) throw NotAPartialOrder("cover pair (" + labels[i] + "," + labels[j] + ") is reflexive");
    up[i].set(j);
  }
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (up[a].test(k)) up[a] |= up[k];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (up[a].test(b) && up[b].test(a))
        throw NotAPartialOrder("cycle through '" + labels[a] + "' and '" + labels[b] + "'");
  return build(std::move(labels), std::move(up));
}

Lattice Lattice::from_leq(std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(leq.size()) != n)
    throw InputError("leq relation has wrong number of rows");
  std::vector<Bitset> up(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq[a].size()) != n)
      throw InputError("leq relation is not square");
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) up[a].set(b);
  }
  for (int a = 0; a < n; ++a)
    if (!up[a].test(a)) throw NotAPartialOrder("relation not reflexive at '" + labels[a] + "'");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && up[a].test(b)) {
        if (up[b].test(a))
          throw NotAPartialOrder("antisymmetry fails on '" + labels[a] + "','" + labels[b] + "'");
        if (!up[b].is_subset_of(up[a]))
          throw NotAPartialOrder("transitivity fails above '" + labels[a] + "'");
      }
  return build(std::move(labels), std::move(up));
}

Lattice Lattice::build(std::vector<std::string> labels, std::vector<Bitset> up) {
  const int n = static_cast<int>(labels.size());

  int bottom = -1, top = -1;
  Bitset everyone(n);
  everyone.set();
  Bitset common = everyone;
  for (int a = 0; a < n; ++a) {
    if (up[a] == everyone) bottom = a;
    common &= up[a];
  }
  if (bottom < 0) throw Unbounded("no least element");
  if (common.count() != 1) throw Unbounded("no greatest element");
  top = static_cast<int>(common.find_first());

  // Reindex into a linear extension: bottom first, then the least available
  // original index at every step, top last.
  std::vector<int> order;  // order[new] = old
  order.reserve(n);
  std::vector<bool> placed(n, false);
  std::vector<Bitset> down_old(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (up[b].test(a)) down_old[a].set(b);
  Bitset placed_set(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int a = 0; a < n; ++a) {
      if (placed[a]) continue;
      Bitset strict_down = down_old[a];
      strict_down.reset(a);
      if (strict_down.is_subset_of(placed_set)) {
        pick = a;
        break;
      }
    }
    if (pick < 0) throw NotAPartialOrder("order contains a cycle");
    placed[pick] = true;
    placed_set.set(pick);
    order.push_back(pick);
  }

  std::vector<int> pos(n);  // pos[old] = new
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  Lattice l;
  l.n_ = n;
  l.labels_.resize(n);
  l.up_.assign(n, Bitset(n));
  l.down_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    l.labels_[i] = labels[order[i]];
    for (int j = 0; j < n; ++j)
      if (up[order[i]].test(order[j])) l.up_[i].set(j);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (l.up_[b].test(a)) l.down_[a].set(b);

  if (pos[bottom] != 0 || pos[top] != n - 1)
    throw Unbounded("bounds misplaced by the linear extension");

  l.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  l.join_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Bitset lower = l.down_[a] & l.down_[b];
      int g = highest_bit(lower);
      if (g < 0 || !lower.is_subset_of(l.down_[g]))
        throw NotALattice("pair ('" + l.labels_[a] + "','" + l.labels_[b] + "') has no meet");
      Bitset upper = l.up_[a] & l.up_[b];
      int s = static_cast<int>(upper.find_first());
      if (s < 0 || !upper.is_subset_of(l.up_[s]))
        throw NotALattice("pair ('" + l.labels_[a] + "','" + l.labels_[b] + "') has no join");
      l.meet_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(g);
      l.meet_[static_cast<std::size_t>(b) * n + a] = static_cast<std::uint16_t>(g);
      l.join_[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(s);
      l.join_[static_cast<std::size_t>(b) * n + a] = static_cast<std::uint16_t>(s);
    }
  }
  return l;
}

int Lattice::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

std::vector<std::pair<int, int>> Lattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!leq(a, b)) continue;
      Bitset between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Lattice::complements_of(int a) const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b)
    if (join(a, b) == top() && meet(a, b) == bottom()) out.push_back(b);
  return out;
}

Verdict is_modular(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
          return {false, {x, y, z}};
      }
  return {};
}

Verdict is_distributive(const Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return {false, {x, y, z}};
  return {};
}

ElementProfile element_profile(const Lattice& l, int a) {
  const int n = l.size();
  ElementProfile p;
  p.element = a;
  p.distributive = p.dually_distributive = p.standard = p.dually_standard = p.neutral = true;
  for (int x = 0; x < n && (p.distributive || p.dually_distributive || p.standard ||
                            p.dually_standard || p.neutral);
       ++x) {
    for (int y = 0; y < n; ++y) {
      if (l.join(a, l.meet(x, y)) != l.meet(l.join(a, x), l.join(a, y))) p.distributive = false;
      if (l.meet(a, l.join(x, y)) != l.join(l.meet(a, x), l.meet(a, y)))
        p.dually_distributive = false;
      if (l.meet(x, l.join(a, y)) != l.join(l.meet(x, a), l.meet(x, y))) p.standard = false;
      if (l.join(x, l.meet(a, y)) != l.meet(l.join(x, a), l.join(x, y))) p.dually_standard = false;
      if (l.meet(l.meet(l.join(a, x), l.join(a, y)), l.join(x, y)) !=
          l.join(l.join(l.meet(a, x), l.meet(a, y)), l.meet(x, y)))
        p.neutral = false;
    }
  }
  p.complements = l.complements_of(a);
  return p;
}

namespace {

// Maximum matching (Kuhn) on the strict-order bipartite graph; by Dilworth,
// width = n - matching.
int max_matching_strict_order(const Lattice& l) {
  const int n = l.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> visited(n, 0);
  std::function<bool(int)> try_kuhn = [&](int u) -> bool {
    for (int v = 0; v < n; ++v) {
      if (u == v || !l.leq(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || try_kuhn(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (try_kuhn(u)) ++matched;
  }
  return matched;
}

}  // namespace

LatticeProfile lattice_profile(const Lattice& l) {
  const int n = l.size();
  LatticeProfile p;
  std::vector<int> height(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (l.leq(b, a)) height[a] = std::max(height[a], height[b] + 1);
  p.length = height[l.top()];
  p.width = n - max_matching_strict_order(l);
  for (auto [i, j] : l.covers()) {
    if (i == l.bottom()) p.atoms.push_back(j);
    if (j == l.top()) p.coatoms.push_back(i);
  }
  std::sort(p.atoms.begin(), p.atoms.end());
  std::sort(p.coatoms.begin(), p.coatoms.end());
  return p;
}

}  // namespace latcomp

#include "latcomp/morphism.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "latcomp/constructions.hpp"

namespace latcomp {

namespace {

struct Invariant {
  int height = 0, depth = 0;
  int down = 0, up = 0;
  int complements = 0;
  int comp_orbit = 0;
  bool operator==(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const CompLattice& a) {
  const auto& l = a.lattice();
  const int n = l.size();
  std::vector<Invariant> inv(n);
  std::vector<int> height(n, 0), depth(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (l.leq(j, i)) height[i] = std::max(height[i], height[j] + 1);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (l.leq(i, j)) depth[i] = std::max(depth[i], depth[j] + 1);
  for (int i = 0; i < n; ++i) {
    inv[i].height = height[i];
    inv[i].depth = depth[i];
    inv[i].down = static_cast<int>(l.downset(i).count());
    inv[i].up = static_cast<int>(l.upset(i).count());
    inv[i].complements = static_cast<int>(l.complements_of(i).size());
    std::vector<char> seen(n, 0);
    int c = i, len = 0;
    while (!seen[c]) {
      seen[c] = 1;
      ++len;
      c = a.comp(c);
    }
    inv[i].comp_orbit = len;
  }
  return inv;
}

bool full_check(const CompLattice& a, const CompLattice& b, const std::vector<int>& map) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    if (b.comp(map[i]) != map[a.comp(i)]) return false;
    for (int j = i; j < n; ++j) {
      if (b.meet(map[i], map[j]) != map[a.meet(i, j)]) return false;
      if (b.join(map[i], map[j]) != map[a.join(i, j)]) return false;
    }
  }
  return true;
}

// Shared backtracking core; when collect_all, every solution is reported.
void search_isomorphisms(const CompLattice& a, const CompLattice& b, bool collect_all,
                         std::vector<Isomorphism>& out) {
  const int n = a.size();
  if (b.size() != n) return;
  auto inv_a = invariants(a);
  auto inv_b = invariants(b);
  {
    auto key = [](Invariant v) {
      return std::array<int, 6>{v.height, v.depth, v.down, v.up, v.complements, v.comp_orbit};
    };
    std::multiset<std::array<int, 6>> ma, mb;
    for (int i = 0; i < n; ++i) {
      ma.insert(key(inv_a[i]));
      mb.insert(key(inv_b[i]));
    }
    if (ma != mb) return;
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) {
      if (full_check(a, b, map)) {
        out.push_back(map);
        return !collect_all;
      }
      return false;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t] || !(inv_a[i] == inv_b[t])) continue;
      bool ok = true;
      int ci = a.comp(i);
      if (ci < i && b.comp(t) != map[ci]) ok = false;
      for (int j = 0; j < i && ok; ++j) {
        if (a.leq(j, i) != b.leq(map[j], t)) ok = false;
        if (ok && a.leq(i, j) != b.leq(t, map[j])) ok = false;
        if (ok && b.meet(map[j], t) != map[a.meet(j, i)]) ok = false;  // meets are already placed
        if (ok && a.comp(j) == i && b.comp(map[j]) != t) ok = false;
      }
      if (!ok) continue;
      map[i] = t;
      used[t] = 1;
      if (place(i + 1)) return true;
      used[t] = 0;
      map[i] = -1;
    }
    return false;
  };
  place(0);
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const CompLattice& a, const CompLattice& b) {
  std::vector<Isomorphism> out;
  search_isomorphisms(a, b, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

AutGroup automorphism_group(const CompLattice& a) {
  AutGroup g;
  search_isomorphisms(a, a, true, g.all);
  g.order = static_cast<int>(g.all.size());

  auto compose = [&](const Isomorphism& f, const Isomorphism& h) {
    Isomorphism r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[h[i]];
    return r;
  };
  Isomorphism id(a.size());
  for (int i = 0; i < a.size(); ++i) id[i] = i;

  // cyclic iff some element has order |Aut|
  for (const auto& alpha : g.all) {
    Isomorphism p = alpha;
    int ord = 1;
    while (p != id) {
      p = compose(alpha, p);
      ++ord;
    }
    if (ord == g.order) {
      g.cyclic = true;
      g.generators = {alpha};
      break;
    }
  }
  if (!g.cyclic) {
    // greedy generating set
    std::set<Isomorphism> span;
    span.insert(id);
    for (const auto& alpha : g.all) {
      if (span.count(alpha)) continue;
      g.generators.push_back(alpha);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Isomorphism> frontier(span.begin(), span.end());
        for (const auto& f : frontier)
          for (const auto& gen : g.generators)
            if (span.insert(compose(gen, f)).second) grew = true;
      }
      if (static_cast<int>(span.size()) == g.order) break;
    }
  }
  return g;
}

std::vector<int> generated_subuniverse(const CompLattice& a, const std::vector<int>& seed) {
  const int n = a.size();
  std::vector<char> in(n, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(a.bottom());
  add(a.top());
  for (int s : seed) {
    if (s < 0 || s >= n) throw InputError("seed element out of range");
    add(s);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    add(a.comp(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(a.meet(x, elems[j]));
      add(a.join(x, elems[j]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<int>> all_subuniverses(const CompLattice& a, std::size_t count_cap) {
  std::set<std::vector<int>> found;
  found.insert(generated_subuniverse(a, {}));
  for (int x = 0; x < a.size(); ++x) found.insert(generated_subuniverse(a, {x}));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> both = current[i];
        both.insert(both.end(), current[j].begin(), current[j].end());
        auto closed = generated_subuniverse(a, both);
        if (found.insert(std::move(closed)).second) grew = true;
        if (found.size() > count_cap)
          throw BudgetExceeded("subuniverse family exceeds the cap");
      }
    }
  }
  return {found.begin(), found.end()};
}

Verdict check_product_subuniverse_characterization(int n, int k) {
  if (n < 3) throw BadParams("requires n >= 3");
  if (k < 0 || k > 4) throw BadParams("requires 0 <= k <= 4");
  CompLattice mn = make_mn_prime(n);
  CompLattice b = boolean_algebra(k);
  CompLattice prod = direct_product(mn, b);
  const int nb = b.size();

  auto family_brute = all_subuniverses(prod);

  // subsets of the Boolean carrier are bitmasks over nb <= 16 elements
  const unsigned limit = 1u << nb;
  auto closed_lattice0 = [&](unsigned m) {
    if (!(m & 1u)) return false;  // must contain 0
    for (int i = 0; i < nb; ++i) {
      if (!(m >> i & 1u)) continue;
      for (int j = i; j < nb; ++j) {
        if (!(m >> j & 1u)) continue;
        if (!(m >> b.meet(i, j) & 1u) || !(m >> b.join(i, j) & 1u)) return false;
      }
    }
    return true;
  };
  auto boolean_subuniverse = [&](unsigned m) {
    if (m == 0) return true;  // Y may be empty
    if (!(m & 1u) || !(m >> (nb - 1) & 1u)) return false;
    for (int i = 0; i < nb; ++i) {
      if (!(m >> i & 1u)) continue;
      if (!(m >> b.comp(i) & 1u)) return false;
      for (int j = i; j < nb; ++j) {
        if (!(m >> j & 1u)) continue;
        if (!(m >> b.meet(i, j) & 1u) || !(m >> b.join(i, j) & 1u)) return false;
      }
    }
    return true;
  };
  auto comp_image = [&](unsigned m) {
    unsigned r = 0;
    for (int i = 0; i < nb; ++i)
      if (m >> i & 1u) r |= 1u << b.comp(i);
    return r;
  };
  auto op_image = [&](unsigned mx, unsigned my, bool joins) {
    unsigned r = 0;
    for (int i = 0; i < nb; ++i)
      if (mx >> i & 1u)
        for (int j = 0; j < nb; ++j)
          if (my >> j & 1u) r |= 1u << (joins ? b.join(i, j) : b.meet(i, j));
    return r;
  };
  auto subset = [](unsigned s, unsigned t) { return (s & ~t) == 0; };

  std::set<std::vector<int>> family_xy;
  for (unsigned xm = 0; xm < limit; ++xm) {
    if (!closed_lattice0(xm)) continue;
    unsigned xc = comp_image(xm);
    for (unsigned ym = 0; ym < limit; ++ym) {
      if (!boolean_subuniverse(ym)) continue;
      if (!subset(ym, xm & xc)) continue;
      if (!subset(op_image(xm, ym, true), ym)) continue;
      if (!subset(op_image(xc, ym, false), ym)) continue;
      if (!subset(op_image(xm, xc, true), xc)) continue;
      if (!subset(op_image(xm, xc, false), xm)) continue;
      std::vector<int> z;
      for (int i = 0; i < nb; ++i) {
        if (xm >> i & 1u) z.push_back(mn.bottom() * nb + i);
        if (xc >> i & 1u) z.push_back(mn.top() * nb + i);
        if (ym >> i & 1u)
          for (int atom = 1; atom + 1 < mn.size(); ++atom) z.push_back(atom * nb + i);
      }
      std::sort(z.begin(), z.end());
      z.erase(std::unique(z.begin(), z.end()), z.end());
      family_xy.insert(std::move(z));
    }
  }

  std::set<std::vector<int>> brute(family_brute.begin(), family_brute.end());
  if (brute == family_xy) return {};
  return {false, {static_cast<int>(brute.size()), static_cast<int>(family_xy.size())}};
}

}  // namespace latcomp

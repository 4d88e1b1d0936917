#include "latcomp/algebra.hpp"

#include <algorithm>
#include <functional>

#include "latcomp/morphism.hpp"
#include "latcomp/terms.hpp"

namespace latcomp {

CompLattice::CompLattice(Lattice lattice, std::vector<int> comp)
    : lattice_(std::move(lattice)), comp_(std::move(comp)) {
  const int n = lattice_.size();
  if (static_cast<int>(comp_.size()) != n)
    throw InputError("complement table has wrong size");
  for (int a = 0; a < n; ++a) {
    int b = comp_[a];
    if (b < 0 || b >= n) throw InputError("complement table entry out of range");
    if (lattice_.join(a, b) != lattice_.top() || lattice_.meet(a, b) != lattice_.bottom())
      throw NotAComplement(lattice_.label(a));
  }
}

CompLattice attach_complementation(Lattice lattice, std::vector<int> comp) {
  return CompLattice(std::move(lattice), std::move(comp));
}

int symmetric_difference(const CompLattice& a, int x, int y) {
  return a.join(a.meet(a.comp(x), y), a.meet(x, a.comp(y)));
}

bool comp_injective(const CompLattice& a) {
  std::vector<char> seen(a.size(), 0);
  for (int i = 0; i < a.size(); ++i) {
    if (seen[a.comp(i)]) return false;
    seen[a.comp(i)] = 1;
  }
  return true;
}

bool comp_involutive(const CompLattice& a) {
  for (int i = 0; i < a.size(); ++i)
    if (a.comp(a.comp(i)) != i) return false;
  return true;
}

ClassReport classify(const CompLattice& a) {
  ClassReport r;
  r.satisfies_w = check_formula(a, builtin_formula("W")).holds;
  r.satisfies_dm = check_formula(a, builtin_formula("DM")).holds;
  r.modular = is_modular(a.lattice()).holds;
  r.weakly_orthomodular = check_formula(a, builtin_formula("WOML")).holds;
  r.dually_weakly_orthomodular = check_formula(a, builtin_formula("DWOML")).holds;
  r.comp_injective = comp_injective(a);
  r.comp_involutive = comp_involutive(a);
  r.is_boolean_algebra =
      is_distributive(a.lattice()).holds && r.comp_involutive && r.satisfies_dm;
  return r;
}

namespace {

// Sound partial filter: a pair of assigned elements already violating the
// two-premise shape of (W) cannot be repaired by later choices.
bool w_pair_violation(const Lattice& l, const std::vector<int>& comp, int i, int j) {
  if (i == j) return false;
  return l.meet(comp[i], j) == l.bottom() && l.meet(i, comp[j]) == l.bottom();
}

}  // namespace

std::vector<CompLattice> enumerate_complementations(const Lattice& l, const EnumFilters& filters) {
  const int n = l.size();
  std::vector<CompLattice> out;

  if (n == 1) {
    out.emplace_back(l, std::vector<int>{0});
    return out;
  }

  std::vector<std::vector<int>> candidates(n);
  unsigned long long space = 1;
  for (int a = 1; a + 1 < n; ++a) {
    candidates[a] = l.complements_of(a);
    if (candidates[a].empty()) return out;  // not a complemented lattice
    space *= candidates[a].size();
    if (space > filters.budget)
      throw BudgetExceeded("complementation search space exceeds the budget");
  }

  std::vector<int> comp(n, -1);
  comp[l.bottom()] = l.top();
  comp[l.top()] = l.bottom();
  std::vector<char> used(n, 0);
  used[l.bottom()] = used[l.top()] = 1;

  auto emit = [&](const std::vector<int>& table) {
    CompLattice a(l, table);
    if (filters.injective_only && !comp_injective(a)) return;
    if (filters.in_w_only && !check_formula(a, builtin_formula("W")).holds) return;
    if (filters.de_morgan_only && !check_formula(a, builtin_formula("DM")).holds) return;
    out.push_back(std::move(a));
  };

  std::function<void(int)> assign = [&](int a) {
    if (a + 1 >= n) {
      emit(comp);
      return;
    }
    for (int b : candidates[a]) {
      if (filters.injective_only && used[b]) continue;
      comp[a] = b;
      bool ok = true;
      if (filters.in_w_only) {
        for (int j = 1; j < a && ok; ++j)
          if (w_pair_violation(l, comp, a, j) || w_pair_violation(l, comp, j, a)) ok = false;
      }
      if (ok) {
        used[b] += 1;
        assign(a + 1);
        used[b] -= 1;
      }
      comp[a] = -1;
    }
  };
  assign(1);

  if (filters.up_to_iso && out.size() > 1) {
    std::vector<CompLattice> reps;
    for (auto& cand : out) {
      bool fresh = true;
      for (const auto& rep : reps)
        if (find_isomorphism(rep, cand)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(std::move(cand));
    }
    return reps;
  }
  return out;
}

NeutralEquivalence neutral_equivalence_check(const CompLattice& a, int x) {
  NeutralEquivalence r;
  r.neutral = element_profile(a.lattice(), x).neutral;
  r.unique_complement = a.lattice().complements_of(x).size() == 1;
  r.double_comp_fixed = a.comp(a.comp(x)) == x;
  return r;
}

}  // namespace latcomp

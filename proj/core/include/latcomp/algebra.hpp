#pragma once

#include <vector>

#include "latcomp/lattice.hpp"

namespace latcomp {

/// A lattice with complementation: a bounded lattice plus a designated
/// total unary operation ' with a v a' = top and a ^ a' = bottom for all a.
/// The complementation is chosen, not assumed unique or involutive.
class CompLattice {
 public:
  CompLattice(Lattice lattice, std::vector<int> comp);

  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  int comp(int a) const { return comp_[a]; }
  const std::vector<int>& comp_table() const { return comp_; }
  const std::string& label(int a) const { return lattice_.label(a); }
  int index_of(const std::string& label) const { return lattice_.index_of(label); }

 private:
  Lattice lattice_;
  std::vector<int> comp_;
};

/// Validates that `comp` maps every element to one of its complements.
CompLattice attach_complementation(Lattice lattice, std::vector<int> comp);

/// The term (a' ^ b) v (a ^ b').
int symmetric_difference(const CompLattice& a, int x, int y);

/// Membership flags for the named classes, each computed from first
/// principles by its own exhaustive check (never inferred from another).
struct ClassReport {
  bool satisfies_w = false;
  bool satisfies_dm = false;
  bool modular = false;
  bool weakly_orthomodular = false;
  bool dually_weakly_orthomodular = false;
  bool comp_injective = false;
  bool comp_involutive = false;
  bool is_boolean_algebra = false;
};

ClassReport classify(const CompLattice& a);

struct EnumFilters {
  bool injective_only = false;
  bool de_morgan_only = false;
  bool in_w_only = false;
  bool up_to_iso = false;
  unsigned long long budget = 100'000'000ULL;  // cap on the raw candidate count
};

/// All complementations on `l` passing the filters, in lexicographic order
/// of the complement table. With up_to_iso, one representative per
/// isomorphism class of the resulting algebras (the least table).
std::vector<CompLattice> enumerate_complementations(const Lattice& l, const EnumFilters& filters = {});

struct NeutralEquivalence {
  bool neutral = false;
  bool unique_complement = false;
  bool double_comp_fixed = false;  // a'' = a
};

/// The three conditions computed independently.
NeutralEquivalence neutral_equivalence_check(const CompLattice& a, int x);

bool comp_injective(const CompLattice& a);
bool comp_involutive(const CompLattice& a);

}  // namespace latcomp

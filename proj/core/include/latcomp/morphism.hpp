#pragma once

#include <optional>
#include <vector>

#include "latcomp/algebra.hpp"

namespace latcomp {

/// A bijection between carriers preserving join, meet, comp and the bounds;
/// map[i] is the image of element i.
using Isomorphism = std::vector<int>;

/// Backtracking search pruned by element invariants (height, complement
/// count, comp-orbit length, up/down-set sizes). Returns the
/// lexicographically least image sequence, or nothing.
std::optional<Isomorphism> find_isomorphism(const CompLattice& a, const CompLattice& b);

struct AutGroup {
  int order = 0;
  std::vector<Isomorphism> all;         // every automorphism, lex order
  std::vector<Isomorphism> generators;  // a single generator when cyclic
  bool cyclic = false;
};

AutGroup automorphism_group(const CompLattice& a);

/// Least subuniverse containing the seed and the constants, ascending.
std::vector<int> generated_subuniverse(const CompLattice& a, const std::vector<int>& seed);

/// Every subuniverse (contains the constants, closed under all operations),
/// as sorted element sets in lexicographic order. Computed as the closure
/// of singleton-generated subuniverses under closure-of-union.
std::vector<std::vector<int>> all_subuniverses(const CompLattice& a,
                                               std::size_t count_cap = 100000);

/// Compares the subuniverse family of the product of the width-n cyclic
/// algebra with the Boolean algebra 2^k against the family generated from
/// admissible (X, Y) pairs of Boolean subsets. Witness carries a size
/// mismatch when it fails.
Verdict check_product_subuniverse_characterization(int n, int k);

}  // namespace latcomp

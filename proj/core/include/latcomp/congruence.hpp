#pragma once

#include <optional>
#include <vector>

#include "latcomp/algebra.hpp"

namespace latcomp {

/// Whether a check concerns the whole algebra (join, meet, comp) or only
/// the lattice reduct (join, meet).
enum class Subject { Algebra, LatticeReduct };

/// A partition of the carrier in canonical form: blocks are numbered by
/// their least member, in order of first appearance.
struct Congruence {
  std::vector<int> block_of;
  int blocks = 0;

  bool same(int a, int b) const { return block_of[a] == block_of[b]; }
  bool is_identity() const { return blocks == static_cast<int>(block_of.size()); }
  bool is_full() const { return blocks == 1; }
  /// theta refines other: every block of theta lies inside a block of other.
  bool refines(const Congruence& other) const;
  /// Blocks as sorted element lists, ordered by least member.
  std::vector<std::vector<int>> block_lists() const;

  static Congruence identity(int n);
  static Congruence full(int n);
  /// Canonicalizes an arbitrary block-id labelling.
  static Congruence from_raw(const std::vector<int>& raw);
  static Congruence from_blocks(const std::vector<std::vector<int>>& blocks, int n);

  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& o) const { return block_of < o.block_of; }
};

/// Compatibility of an equivalence with the chosen operations.
bool is_congruence(const CompLattice& a, const Congruence& theta, Subject subject);
/// a'-compatibility alone (theta assumed lattice-compatible).
bool compatible_with_comp(const CompLattice& a, const Congruence& theta);

/// Least congruence of the chosen subject identifying x and y.
Congruence principal_congruence(const CompLattice& a, int x, int y, Subject subject);

/// All congruences, ordered finest to coarsest (refinement-compatible).
struct ConLattice {
  std::vector<Congruence> congruences;

  int size() const { return static_cast<int>(congruences.size()); }
  bool leq(int i, int j) const { return congruences[i].refines(congruences[j]); }
  std::vector<int> atoms() const;
  /// Least non-identity congruence, when it exists.
  std::optional<Congruence> monolith() const;
};

ConLattice congruence_lattice(const CompLattice& a, Subject subject,
                              std::size_t count_cap = 1000000);

struct SIResult {
  bool subdirectly_irreducible = false;
  std::optional<Congruence> monolith;
};

SIResult subdirect_irreducibility(const CompLattice& a);

/// Block algebra with induced operations; labels are the least members'
/// labels. Throws IncompatibleCongruence when theta is not a congruence of
/// the full algebra.
CompLattice quotient(const CompLattice& a, const Congruence& theta);

struct ReductComparison {
  bool equal = false;
  std::optional<Congruence> witness;  // a lattice congruence not preserving comp
};

ReductComparison reduct_congruence_comparison(const CompLattice& a);

struct MalcevReport {
  bool permutable = false;
  bool cong_distributive = false;
  bool regular = false;
  bool pixley_p = false;
  bool pixley_q = false;
  bool reg_terms = false;
};

MalcevReport malcev_checks(const CompLattice& a);

}  // namespace latcomp

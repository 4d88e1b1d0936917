#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latcomp/errors.hpp"

namespace latcomp {

using Bitset = boost::dynamic_bitset<>;

/// Outcome of an exhaustive check. `witness` holds the lexicographically
/// least counterexample (element indices); empty when the check holds.
struct Verdict {
  bool holds = true;
  std::vector<int> witness;
  explicit operator bool() const { return holds; }
};

/// A finite bounded lattice on elements 0..n-1. Index 0 is the bottom,
/// index n-1 the top, and indices are a linear extension of the order.
/// Meet and join are precomputed as full n x n tables; the order relation
/// is kept as per-element bitrows. Immutable after construction.
class Lattice {
 public:
  /// Builds from a cover relation (i covered-by j pairs, indices into labels).
  static Lattice from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& covers);
  /// Builds from a full reflexive order relation: leq[a][b] iff a <= b.
  static Lattice from_leq(std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq);

  int size() const { return n_; }
  int bottom() const { return 0; }
  int top() const { return n_ - 1; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of a label, or -1 when absent.
  int index_of(const std::string& label) const;

  const Bitset& upset(int a) const { return up_[a]; }
  const Bitset& downset(int a) const { return down_[a]; }

  /// Cover pairs (i,j) with i covered by j, sorted lexicographically.
  std::vector<std::pair<int, int>> covers() const;
  /// All b with a v b = top and a ^ b = bottom, ascending.
  std::vector<int> complements_of(int a) const;

 private:
  Lattice() = default;
  static Lattice build(std::vector<std::string> labels, std::vector<Bitset> up);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Bitset> up_, down_;
  std::vector<std::uint16_t> meet_, join_;
};

/// Element classification flags, each computed from its own defining
/// universally quantified equation.
struct ElementProfile {
  int element = 0;
  bool distributive = false;
  bool dually_distributive = false;
  bool standard = false;
  bool dually_standard = false;
  bool neutral = false;
  std::vector<int> complements;
};

struct LatticeProfile {
  int length = 0;  // longest chain, counted in edges
  int width = 0;   // largest antichain
  std::vector<int> atoms;
  std::vector<int> coatoms;
};

/// Modularity: x <= z implies x v (y ^ z) = (x v y) ^ z, over all triples.
Verdict is_modular(const Lattice& l);
/// Distributivity: x ^ (y v z) = (x ^ y) v (x ^ z), over all triples.
Verdict is_distributive(const Lattice& l);

ElementProfile element_profile(const Lattice& l, int a);
LatticeProfile lattice_profile(const Lattice& l);

}  // namespace latcomp

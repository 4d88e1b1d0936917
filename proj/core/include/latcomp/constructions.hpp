#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcomp/algebra.hpp"
#include "latcomp/congruence.hpp"

namespace latcomp {

inline constexpr std::size_t kDefaultCarrierCap = 4096;

/// The length-2, width-n bounded lattice; labels 0, a0..a{n-1}, 1.
Lattice make_mn(int n);
/// make_mn with the cyclic complementation a_i -> a_{i+1 mod n}.
CompLattice make_mn_prime(int n);

/// Powerset algebra on k atoms; elements are bitmasks labelled by
/// k-character bitstrings (character i is bit i).
CompLattice boolean_algebra(int k);

Lattice direct_product(const Lattice& a, const Lattice& b,
                       std::size_t cap = kDefaultCarrierCap);
CompLattice direct_product(const CompLattice& a, const CompLattice& b,
                           std::size_t cap = kDefaultCarrierCap);

/// Glues two algebras at shared bottom and top; interiors stay disjoint,
/// cross meets fall to bottom and cross joins rise to top. Both arguments
/// need at least one interior element.
CompLattice horizontal_sum(const CompLattice& a, const CompLattice& b);

/// An assignment of a complementation table on a base lattice to every
/// element of the Boolean lattice 2^k (indexed by bitmask).
struct Action {
  int k = 0;
  std::vector<std::vector<int>> comps;  // comps[mask][element of K]
};

/// The product K x 2^k with complementation (a, x) -> (S_x(a), x').
CompLattice action_extension(const Lattice& k_base, const Action& s);

/// Recovers the unique action with the given complementation on K x 2^k.
/// Throws NotActionShaped if some complement's second coordinate is not
/// the Boolean complement (which cannot happen for a valid complementation
/// on the product; the error is a falsification detector).
Action action_from_complementation(const Lattice& k_base, int k, const CompLattice& product);

/// Lattice congruences theta_0..theta_k on K x 2^k: theta_0 is the kernel
/// of (a, x) -> x, and theta_i the kernel of deleting coordinate i of x.
std::vector<Congruence> theta_projections(const Lattice& k_base, int k);

/// The intervals [0,e] and [e,1] at a neutral element, with the
/// complementations x -> x' ^ e and x -> x' v e.
std::pair<CompLattice, CompLattice> interval_algebra(const CompLattice& a, int e);

struct FreeAlgebraOptions {
  std::size_t materialize_cap = kDefaultCarrierCap;
  bool full_closure = false;               // run the tuple closure when too big
  unsigned long long closure_cap = 2'000'000ULL;
};

struct FreeAlgebra {
  int n = 0, k = 0;
  long long q = 0;                 // number of cyclic-algebra coordinates
  int r = 0;                       // number of two-element coordinates (2^k)
  unsigned long long expected_size = 0;  // (n+2)^q * 2^r
  std::optional<CompLattice> algebra;    // materialized when within the cap
  std::vector<int> generators;           // element indices when materialized
  bool shape_verified = false;     // the generators generate the whole product
  bool closure_ran = false;
  unsigned long long closure_size = 0;
};

/// Free k-generated algebra of the variety of the width-n cyclic algebra,
/// realized inside (M_n')^q x 2^(2^k) with one coordinate per orbit of
/// generating valuations. Orbit sizes are verified, never assumed.
FreeAlgebra free_algebra(int n, int k, const FreeAlgebraOptions& opts = {});

/// Verifies t(a, b, c) = c when a = b and a otherwise over all triples of
/// the width-n cyclic algebra; with use_symdiff the difference term is +.
Verdict discriminator_check(int n, bool use_symdiff = false);

CompLattice fixture(const std::string& name);
Lattice fixture_lattice(const std::string& name);
std::vector<std::string> fixture_names();
std::vector<std::string> fixture_lattice_names();

}  // namespace latcomp

#include "latcomp/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "latcomp/morphism.hpp"
#include "latcomp/terms.hpp"

namespace latcomp {

namespace {

std::string bitstring(int mask, int k) {
  if (k == 0) return "*";
  std::string s(k, '0');
  for (int i = 0; i < k; ++i)
    if (mask >> i & 1) s[i] = '1';
  return s;
}

}  // namespace

Lattice make_mn(int n) {
  if (n < 2) throw BadParams("width must be at least 2");
  std::vector<std::string> labels;
  labels.push_back("0");
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  labels.push_back("1");
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= n; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, n + 1);
  }
  return Lattice::from_covers(std::move(labels), covers);
}

CompLattice make_mn_prime(int n) {
  Lattice l = make_mn(n);
  std::vector<int> comp(n + 2);
  comp[0] = n + 1;
  comp[n + 1] = 0;
  for (int i = 0; i < n; ++i) comp[1 + i] = 1 + (i + 1) % n;
  return CompLattice(std::move(l), std::move(comp));
}

CompLattice boolean_algebra(int k) {
  if (k < 0 || (1u << k) > kDefaultCarrierCap) throw BadParams("unsupported exponent");
  const int n = 1 << k;
  std::vector<std::string> labels(n);
  for (int m = 0; m < n; ++m) labels[m] = bitstring(m, k);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = (a & ~b) == 0;
  Lattice l = Lattice::from_leq(std::move(labels), leq);
  std::vector<int> comp(n);
  for (int m = 0; m < n; ++m) comp[m] = m ^ (n - 1);
  return CompLattice(std::move(l), std::move(comp));
}

Lattice direct_product(const Lattice& a, const Lattice& b, std::size_t cap) {
  const std::size_t n = static_cast<std::size_t>(a.size()) * b.size();
  if (n > cap) throw BudgetExceeded("product carrier exceeds the cap");
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  const int nb = b.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j) {
      labels[static_cast<std::size_t>(i) * nb + j] = "(" + a.label(i) + "," + b.label(j) + ")";
      for (int p = 0; p < a.size(); ++p)
        for (int q = 0; q < nb; ++q)
          leq[static_cast<std::size_t>(i) * nb + j][static_cast<std::size_t>(p) * nb + q] =
              a.leq(i, p) && b.leq(j, q);
    }
  return Lattice::from_leq(std::move(labels), leq);
}

CompLattice direct_product(const CompLattice& a, const CompLattice& b, std::size_t cap) {
  Lattice l = direct_product(a.lattice(), b.lattice(), cap);
  const int nb = b.size();
  std::vector<int> comp(static_cast<std::size_t>(a.size()) * nb);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j)
      comp[static_cast<std::size_t>(i) * nb + j] = a.comp(i) * nb + b.comp(j);
  return CompLattice(std::move(l), std::move(comp));
}

CompLattice horizontal_sum(const CompLattice& a, const CompLattice& b) {
  if (a.size() < 3 || b.size() < 3)
    throw BadParams("horizontal sum needs interiors on both sides");
  const int ia = a.size() - 2, ib = b.size() - 2;
  const int n = 2 + ia + ib;
  std::vector<std::string> labels(n);
  labels[0] = "0";
  labels[n - 1] = "1";
  for (int i = 0; i < ia; ++i) labels[1 + i] = "a:" + a.label(1 + i);
  for (int j = 0; j < ib; ++j) labels[1 + ia + j] = "b:" + b.label(1 + j);

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    leq[x][x] = true;
    leq[0][x] = true;
    leq[x][n - 1] = true;
  }
  for (int i = 0; i < ia; ++i)
    for (int j = 0; j < ia; ++j)
      if (a.leq(1 + i, 1 + j)) leq[1 + i][1 + j] = true;
  for (int i = 0; i < ib; ++i)
    for (int j = 0; j < ib; ++j)
      if (b.leq(1 + i, 1 + j)) leq[1 + ia + i][1 + ia + j] = true;
  Lattice l = Lattice::from_leq(std::move(labels), leq);

  std::vector<int> comp(n);
  comp[0] = n - 1;
  comp[n - 1] = 0;
  // interior complements stay interior, so the A-side offsets coincide
  for (int i = 0; i < ia; ++i) comp[1 + i] = a.comp(1 + i);
  for (int j = 0; j < ib; ++j) comp[1 + ia + j] = ia + b.comp(1 + j);
  return CompLattice(std::move(l), std::move(comp));
}

CompLattice action_extension(const Lattice& k_base, const Action& s) {
  if (s.k < 0 || s.k > 12) throw BadParams("unsupported exponent");
  const int nb = 1 << s.k;
  if (static_cast<int>(s.comps.size()) != nb)
    throw InputError("action does not cover the Boolean lattice");
  for (int x = 0; x < nb; ++x) {
    if (static_cast<int>(s.comps[x].size()) != k_base.size())
      throw InputError("action table has wrong base size");
    for (int a = 0; a < k_base.size(); ++a) {
      int c = s.comps[x][a];
      if (c < 0 || c >= k_base.size() || k_base.join(a, c) != k_base.top() ||
          k_base.meet(a, c) != k_base.bottom())
        throw InvalidAction(bitstring(x, s.k), k_base.label(a));
    }
  }
  Lattice prod = direct_product(k_base, boolean_algebra(s.k).lattice());
  std::vector<int> comp(static_cast<std::size_t>(k_base.size()) * nb);
  for (int a = 0; a < k_base.size(); ++a)
    for (int x = 0; x < nb; ++x)
      comp[static_cast<std::size_t>(a) * nb + x] = s.comps[x][a] * nb + (x ^ (nb - 1));
  return CompLattice(std::move(prod), std::move(comp));
}

Action action_from_complementation(const Lattice& k_base, int k, const CompLattice& product) {
  const int nb = 1 << k;
  if (product.size() != k_base.size() * nb)
    throw InputError("product size does not match the base and exponent");
  Action s;
  s.k = k;
  s.comps.assign(nb, std::vector<int>(k_base.size(), -1));
  for (int a = 0; a < k_base.size(); ++a)
    for (int x = 0; x < nb; ++x) {
      int c = product.comp(a * nb + x);
      int az = c / nb, xz = c % nb;
      if (xz != (x ^ (nb - 1))) throw NotActionShaped(k_base.label(a), bitstring(x, k));
      s.comps[x][a] = az;
    }
  return s;
}

std::vector<Congruence> theta_projections(const Lattice& k_base, int k) {
  const int nb = 1 << k;
  const int n = k_base.size() * nb;
  std::vector<Congruence> out;
  std::vector<int> raw(n);
  for (int a = 0; a < k_base.size(); ++a)
    for (int x = 0; x < nb; ++x) raw[a * nb + x] = x;
  out.push_back(Congruence::from_raw(raw));
  for (int i = 1; i <= k; ++i) {
    const int bit = 1 << (i - 1);
    for (int a = 0; a < k_base.size(); ++a)
      for (int x = 0; x < nb; ++x) raw[a * nb + x] = a * nb + (x & ~bit);
    out.push_back(Congruence::from_raw(raw));
  }
  return out;
}

std::pair<CompLattice, CompLattice> interval_algebra(const CompLattice& a, int e) {
  if (e < 0 || e >= a.size()) throw InputError("element out of range");
  if (!element_profile(a.lattice(), e).neutral) throw NotNeutral(a.label(e));

  auto restrict = [&](const std::vector<int>& elems, bool lower) {
    const int m = static_cast<int>(elems.size());
    std::vector<int> pos(a.size(), -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<std::string> labels(m);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
      labels[i] = a.label(elems[i]);
      for (int j = 0; j < m; ++j) leq[i][j] = a.leq(elems[i], elems[j]);
    }
    Lattice l = Lattice::from_leq(std::move(labels), leq);
    std::vector<int> comp(m);
    for (int i = 0; i < m; ++i) {
      int c = lower ? a.meet(a.comp(elems[i]), e) : a.join(a.comp(elems[i]), e);
      comp[i] = pos[c];
    }
    return CompLattice(std::move(l), std::move(comp));
  };

  std::vector<int> down, up;
  for (int x = 0; x < a.size(); ++x) {
    if (a.leq(x, e)) down.push_back(x);
    if (a.leq(e, x)) up.push_back(x);
  }
  return {restrict(down, true), restrict(up, false)};
}

namespace {

unsigned long long pow_check(unsigned long long base, long long exp, unsigned long long clamp) {
  unsigned long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

// Closure of packed tuples over q cyclic-algebra coordinates followed by
// r two-element coordinates, 4 bits each. Stops as soon as the count
// reaches the full product size (the closure is contained in the product,
// so equality of counts settles it).
struct TupleClosure {
  int q, r, m;  // m = n + 2
  std::vector<std::uint8_t> mt, jt, ct;

  explicit TupleClosure(const CompLattice& mn, int q_, int r_) : q(q_), r(r_), m(mn.size()) {
    mt.resize(m * m);
    jt.resize(m * m);
    ct.resize(m);
    for (int i = 0; i < m; ++i) {
      ct[i] = static_cast<std::uint8_t>(mn.comp(i));
      for (int j = 0; j < m; ++j) {
        mt[i * m + j] = static_cast<std::uint8_t>(mn.meet(i, j));
        jt[i * m + j] = static_cast<std::uint8_t>(mn.join(i, j));
      }
    }
  }

  std::uint64_t meet(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (int c = 0; c < q; ++c) {
      unsigned x = (a >> (4 * c)) & 0xf, y = (b >> (4 * c)) & 0xf;
      out |= static_cast<std::uint64_t>(mt[x * m + y]) << (4 * c);
    }
    std::uint64_t bits_a = a >> (4 * q), bits_b = b >> (4 * q);
    out |= (bits_a & bits_b) << (4 * q);
    return out;
  }
  std::uint64_t join(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (int c = 0; c < q; ++c) {
      unsigned x = (a >> (4 * c)) & 0xf, y = (b >> (4 * c)) & 0xf;
      out |= static_cast<std::uint64_t>(jt[x * m + y]) << (4 * c);
    }
    std::uint64_t bits_a = a >> (4 * q), bits_b = b >> (4 * q);
    out |= (bits_a | bits_b) << (4 * q);
    return out;
  }
  std::uint64_t comp(std::uint64_t a) const {
    std::uint64_t out = 0;
    for (int c = 0; c < q; ++c) {
      unsigned x = (a >> (4 * c)) & 0xf;
      out |= static_cast<std::uint64_t>(ct[x]) << (4 * c);
    }
    std::uint64_t bits = a >> (4 * q);
    std::uint64_t mask = 0;
    for (int c = 0; c < r; ++c) mask |= std::uint64_t(1) << (4 * c);
    out |= (~bits & mask) << (4 * q);
    return out;
  }
};

struct TupleSet {
  std::vector<std::uint64_t> slots;
  std::size_t mask, count = 0;
  static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);

  explicit TupleSet(std::size_t want) {
    std::size_t cap = 16;
    while (cap < want * 2) cap <<= 1;
    slots.assign(cap, kEmpty);
    mask = cap - 1;
  }
  bool insert(std::uint64_t v) {
    std::size_t h = (v * 0x9e3779b97f4a7c15ULL) & mask;
    while (slots[h] != kEmpty) {
      if (slots[h] == v) return false;
      h = (h + 1) & mask;
    }
    slots[h] = v;
    ++count;
    return true;
  }
};

}  // namespace

FreeAlgebra free_algebra(int n, int k, const FreeAlgebraOptions& opts) {
  if (n < 3) throw BadParams("requires n >= 3");
  if (k < 1) throw BadParams("requires k >= 1");
  FreeAlgebra out;
  out.n = n;
  out.k = k;
  out.r = 1 << k;
  const int m = n + 2;
  CompLattice mn = make_mn_prime(n);

  // Orbits of generating valuations under the automorphisms a_i -> a_{i+j}.
  const unsigned long long val_count = pow_check(m, k, 1ULL << 40);
  if (val_count > (1ULL << 24)) throw BudgetExceeded("valuation space too large");
  auto apply_auto = [&](const std::vector<int>& v, int j) {
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      w[i] = (v[i] == 0 || v[i] == m - 1) ? v[i] : 1 + (v[i] - 1 + j) % n;
    return w;
  };
  std::set<std::vector<int>> visited;
  std::vector<std::vector<int>> reps;
  std::vector<int> v(k, 0);
  for (unsigned long long idx = 0; idx < val_count; ++idx) {
    bool generating = false;
    for (int i = 0; i < k; ++i)
      if (v[i] != 0 && v[i] != m - 1) generating = true;
    if (generating && !visited.count(v)) {
      std::set<std::vector<int>> orbit;
      for (int j = 0; j < n; ++j) orbit.insert(apply_auto(v, j));
      if (static_cast<int>(orbit.size()) != n)
        throw Error("valuation orbit of unexpected size " + std::to_string(orbit.size()));
      visited.insert(orbit.begin(), orbit.end());
      reps.push_back(v);
    }
    for (int i = k - 1; i >= 0; --i) {
      if (++v[i] < m) break;
      v[i] = 0;
    }
  }
  out.q = static_cast<long long>(reps.size());
  const long long q_formula = (static_cast<long long>(pow_check(m, k, 1ULL << 40)) -
                               static_cast<long long>(1LL << k)) /
                              n;
  if (out.q != q_formula)
    throw Error("orbit count " + std::to_string(out.q) + " does not match " +
                std::to_string(q_formula));

  unsigned long long size = pow_check(m, out.q, ~0ULL >> 2);
  unsigned long long boolpart = 1ULL << out.r;
  out.expected_size = (size > (~0ULL >> 2) / boolpart) ? 0 : size * boolpart;

  if (out.expected_size != 0 && out.expected_size <= opts.materialize_cap) {
    CompLattice p = mn;
    for (long long i = 1; i < out.q; ++i) p = direct_product(p, mn, opts.materialize_cap);
    p = direct_product(p, boolean_algebra(out.r), opts.materialize_cap);
    // generator i: coordinate per orbit representative, then the Boolean
    // element whose atoms are the valuations sending generator i to 1
    for (int g = 0; g < k; ++g) {
      unsigned long long idx = 0;
      for (const auto& rep : reps) idx = idx * m + rep[g];
      int bmask = 0;
      for (int w = 0; w < (1 << k); ++w)
        if (w >> g & 1) bmask |= 1 << w;
      idx = idx * (1ULL << out.r) + static_cast<unsigned long long>(bmask);
      out.generators.push_back(static_cast<int>(idx));
    }
    auto gen = generated_subuniverse(p, out.generators);
    out.closure_ran = true;
    out.closure_size = gen.size();
    out.shape_verified = out.closure_size == out.expected_size;
    out.algebra = std::move(p);
    return out;
  }

  if (opts.full_closure) {
    if (out.expected_size == 0 || out.expected_size > opts.closure_cap)
      throw BudgetExceeded("closure size exceeds the cap");
    if (out.q + out.r > 16 || m > 16) throw BudgetExceeded("tuple too wide to pack");
    TupleClosure tc(mn, static_cast<int>(out.q), out.r);
    TupleSet set(out.expected_size);
    std::vector<std::uint64_t> elems;
    elems.reserve(out.expected_size);
    auto add = [&](std::uint64_t t) {
      if (set.insert(t)) elems.push_back(t);
    };
    for (int g = 0; g < k; ++g) {
      std::uint64_t t = 0;
      for (std::size_t c = 0; c < reps.size(); ++c)
        t |= static_cast<std::uint64_t>(reps[c][g]) << (4 * c);
      for (int w = 0; w < (1 << k); ++w)
        if (w >> g & 1) t |= std::uint64_t(1) << (4 * (out.q + w));
      add(t);
    }
    for (std::size_t i = 0; i < elems.size() && set.count < out.expected_size; ++i) {
      std::uint64_t x = elems[i];
      add(tc.comp(x));
      for (std::size_t j = 0; j <= i && set.count < out.expected_size; ++j) {
        add(tc.meet(x, elems[j]));
        add(tc.join(x, elems[j]));
      }
    }
    out.closure_ran = true;
    out.closure_size = set.count;
    out.shape_verified = out.closure_size == out.expected_size;
  }
  return out;
}

Verdict discriminator_check(int n, bool use_symdiff) {
  if (n < 3) throw BadParams("requires n >= 3");
  CompLattice a = make_mn_prime(n);
  Term t = discriminator_term(n, use_symdiff);
  std::map<std::string, int> asg;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      for (int z = 0; z < a.size(); ++z) {
        asg["x"] = x;
        asg["y"] = y;
        asg["z"] = z;
        int got = eval_term(a, t, asg);
        int want = (x == y) ? z : x;
        if (got != want) return {false, {x, y, z}};
      }
  return {};
}

}  // namespace latcomp

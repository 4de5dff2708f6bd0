#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hk/lattice.hpp"
#include "hk/polynomial.hpp"

namespace hk {

// Degree reverse lexicographic order whose variable ranks come from a linear
// extension of the lattice: rank 1 is the bottom-most variable and the least
// variable of the order.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  explicit MonomialOrder(std::vector<int> rank_of_var)
      : rank_(std::move(rank_of_var)) {}

  int variables() const { return static_cast<int>(rank_.size()); }
  int rank(int v) const { return rank_[v]; }

  // Variable indices listed from least to greatest.
  std::vector<int> extension() const {
    std::vector<int> vars(rank_.size());
    std::iota(vars.begin(), vars.end(), 0);
    std::sort(vars.begin(), vars.end(),
              [&](int a, int b) { return rank_[a] < rank_[b]; });
    return vars;
  }

  // Strict a < b. Degrees first; on ties the monomial with the larger
  // exponent at the least differing variable is the smaller one.
  bool less(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto ranked = [&](const Monomial& m) {
      std::vector<std::pair<int, int>> out;  // (rank, exponent)
      for (const auto& [v, e] : m.factors()) out.emplace_back(rank_[v], e);
      std::sort(out.begin(), out.end());
      return out;
    };
    auto ra = ranked(a), rb = ranked(b);
    auto ia = ra.begin(), ib = rb.begin();
    while (ia != ra.end() || ib != rb.end()) {
      int rka = ia != ra.end() ? ia->first : INT32_MAX;
      int rkb = ib != rb.end() ? ib->first : INT32_MAX;
      if (rka < rkb) return true;    // a has the lower variable: a smaller
      if (rkb < rka) return false;
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia, ++ib;
    }
    return false;
  }

  bool leq(const Monomial& a, const Monomial& b) const {
    return a == b || less(a, b);
  }

  // Leading term of a nonzero polynomial.
  std::pair<Rat, Monomial> initial_term(const Polynomial& f) const {
    if (f.is_zero()) throw std::invalid_argument("initial term of zero");
    const auto* best = &f.terms()[0];
    for (const auto& t : f.terms())
      if (less(best->first, t.first)) best = &t;
    return {best->second, best->first};
  }

  Monomial initial_monomial(const Polynomial& f) const {
    return initial_term(f).second;
  }

 private:
  std::vector<int> rank_;
};

class OrderError : public std::logic_error {
 public:
  explicit OrderError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

// A compatible order keeps x_a x_b ahead of x_meet x_join for every
// incomparable pair. This is forced by degrevlex over any linear extension
// and is re-verified here; a failure is an implementation bug.
inline void verify_compatible(const Lattice& l, const MonomialOrder& ord) {
  for (int i = 0; i < l.size(); ++i)
    for (int j = i + 1; j < l.size(); ++j) {
      if (!l.incomparable(i, j)) continue;
      Monomial lead = Monomial::variable(i) * Monomial::variable(j);
      Monomial trail =
          Monomial::variable(l.meet(i, j)) * Monomial::variable(l.join(i, j));
      if (!ord.less(trail, lead))
        throw OrderError("order is not compatible at pair " + l.label(i) +
                         ", " + l.label(j));
    }
}

}  // namespace detail

// Degrevlex over an explicit linear extension, given as lattice element
// indices from bottom to top.
inline MonomialOrder order_from_extension(const Lattice& l,
                                          const std::vector<int>& extension) {
  int n = l.size();
  if (static_cast<int>(extension.size()) != n)
    throw OrderError("extension has wrong length");
  std::vector<int> rank(n, 0);
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    int v = extension[k];
    if (v < 0 || v >= n || seen[v]) throw OrderError("extension is not a permutation");
    seen[v] = true;
    rank[v] = k + 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (l.less(i, j) && rank[i] > rank[j])
        throw OrderError("extension does not extend the lattice order");
  MonomialOrder ord(std::move(rank));
  detail::verify_compatible(l, ord);
  return ord;
}

// The canonical compatible order: the lattice's own element order (for built
// lattices: cardinality, then lexicographic member labels) is a linear
// extension.
inline MonomialOrder compatible_order(const Lattice& l) {
  std::vector<int> ext(l.size());
  std::iota(ext.begin(), ext.end(), 0);
  return order_from_extension(l, ext);
}

namespace detail {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace detail

// Up to k distinct linear extensions of the lattice order, deterministic:
// the canonical extension first, then seeded random topological sorts.
inline std::vector<std::vector<int>> sample_linear_extensions(const Lattice& l,
                                                              int k) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  std::vector<int> canonical(l.size());
  std::iota(canonical.begin(), canonical.end(), 0);
  seen.insert(canonical);
  out.push_back(canonical);
  int n = l.size();
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < k && seed <= 64 * static_cast<std::uint64_t>(k) + 64;
       ++seed) {
    detail::SplitMix64 rng{seed};
    std::vector<int> ext;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      std::vector<int> ready;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
          if (!placed[u] && l.less(u, v)) ok = false;
        if (ok) ready.push_back(v);
      }
      int v = ready[rng.below(ready.size())];
      placed[v] = true;
      ext.push_back(v);
    }
    if (seen.insert(ext).second) out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace hk

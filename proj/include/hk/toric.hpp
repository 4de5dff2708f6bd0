#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

#include "hk/graph.hpp"
#include "hk/hibi.hpp"

namespace hk {

// Closed walk of even length, stored as its vertex sequence v0 .. v_{2q-1};
// edge i joins v_i to v_{i+1 mod 2q}.
struct ClosedWalk {
  std::vector<int> verts;
  int length() const { return static_cast<int>(verts.size()); }
};

// p_walk = prod of the odd-position edge variables minus prod of the
// even-position ones (1-based positions, so the walk's first edge is plus).
struct WalkBinomial {
  ClosedWalk walk;
  std::vector<int> plus, minus;  // sorted edge ids, multisets
  int degree() const { return static_cast<int>(plus.size()); }
  bool operator==(const WalkBinomial& o) const {
    return plus == o.plus && minus == o.minus;
  }
};

inline WalkBinomial binomial_of_walk(const CoCompGraph& g,
                                     std::vector<int> verts) {
  if (verts.size() % 2 != 0 || verts.size() < 4)
    throw std::invalid_argument("closed walk must have even length >= 4");
  WalkBinomial wb;
  int len = static_cast<int>(verts.size());
  for (int i = 0; i < len; ++i) {
    int e = g.edge_id(verts[i], verts[(i + 1) % len]);
    (i % 2 == 0 ? wb.plus : wb.minus).push_back(e);
  }
  std::sort(wb.plus.begin(), wb.plus.end());
  std::sort(wb.minus.begin(), wb.minus.end());
  wb.walk.verts = std::move(verts);
  return wb;
}

inline bool walk_is_valid(const CoCompGraph& g, const WalkBinomial& wb) {
  const auto& v = wb.walk.verts;
  if (v.size() % 2 != 0 || v.size() < 4) return false;
  std::vector<int> plus, minus;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int a = v[i], b = v[(i + 1) % v.size()];
    if (!g.edge_ids.count({std::min(a, b), std::max(a, b)})) return false;
    (i % 2 == 0 ? plus : minus).push_back(g.edge_id(a, b));
  }
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  return plus == wb.plus && minus == wb.minus;
}

namespace detail {

inline bool multiset_contains(const std::vector<int>& big,
                              const std::vector<int>& small) {
  auto it = big.begin();
  for (int x : small) {
    while (it != big.end() && *it < x) ++it;
    if (it == big.end() || *it != x) return false;
    ++it;
  }
  return true;
}

// Alternating Eulerian circuit through the two edge multisets (plus edges at
// even walk positions). Exists whenever the union is connected and each
// vertex meets equally many plus and minus slots; subtrails are spliced in
// Hierholzer style.
inline ClosedWalk alternating_euler_walk(const CoCompGraph& g,
                                         const std::vector<int>& plus,
                                         const std::vector<int>& minus) {
  struct Slot {
    int edge;
    bool used = false;
  };
  std::vector<Slot> slots[2];
  for (int e : plus) slots[0].push_back({e});
  for (int e : minus) slots[1].push_back({e});
  std::vector<std::vector<int>> at[2];
  at[0].assign(g.n, {});
  at[1].assign(g.n, {});
  for (int side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < slots[side].size(); ++i) {
      auto [u, v] = g.edges[slots[side][i].edge];
      at[side][u].push_back(static_cast<int>(i));
      at[side][v].push_back(static_cast<int>(i));
    }
  auto grab = [&](int side, int v) -> int {  // smallest unused slot at v
    int best = -1;
    for (int i : at[side][v])
      if (!slots[side][i].used &&
          (best < 0 || slots[side][i].edge < slots[side][best].edge))
        best = i;
    return best;
  };
  auto subtrail = [&](int start, int side0) {
    std::vector<int> seq{start};
    int cur = start, side = side0;
    for (;;) {
      int i = grab(side, cur);
      if (i < 0) break;
      slots[side][i].used = true;
      auto [u, v] = g.edges[slots[side][i].edge];
      cur = cur == u ? v : u;
      seq.push_back(cur);
      side ^= 1;
    }
    if (seq.front() != seq.back())
      throw std::logic_error("alternating trail failed to close");
    seq.pop_back();
    return seq;
  };
  int start = g.n;
  for (int e : plus) start = std::min({start, g.edges[e].first, g.edges[e].second});
  std::vector<int> walk = subtrail(start, 0);
  for (;;) {
    int pos = -1;
    for (std::size_t p = 0; p < walk.size() && pos < 0; ++p)
      if (grab(0, walk[p]) >= 0 || grab(1, walk[p]) >= 0) pos = static_cast<int>(p);
    if (pos < 0) break;
    std::vector<int> sub = subtrail(walk[pos], pos % 2);
    if (sub.size() <= 1)
      throw std::logic_error("leftover slots admit no alternating subtrail");
    // sub starts at walk[pos] and closes there, so inserting it right before
    // position pos keeps adjacency and edge parity intact.
    walk.insert(walk.begin() + pos, sub.begin(), sub.end());
  }
  ClosedWalk out;
  out.verts = std::move(walk);
  return out;
}

}  // namespace detail

class ToricBudgetError : public std::runtime_error {
 public:
  explicit ToricBudgetError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ToricGenerators {
  std::vector<WalkBinomial> gens;
  bool complete = false;  // true iff the cycle route covered everything
  int bound = 0;          // walk-length bound that applied (0 = cycles only)
};

// Generators of the toric ideal of the edge ring. Bipartite graphs get the
// full even-cycle set, which is complete. Otherwise all even closed walks of
// length <= bound are found by pairing equal-degree edge multisets
// (balanced + connected = realizable as an alternating closed walk), and the
// side-wise divisibility filter discards dominated binomials; completeness
// beyond the bound is not guaranteed and is flagged on the result.
inline ToricGenerators toric_generators(const CoCompGraph& g, int bound = 0,
                                        long budget = 20000000) {
  ToricGenerators out;
  if (auto coloring = is_bipartite(g)) {
    out.complete = true;
    for (const auto& cyc : even_cycles(g))
      out.gens.push_back(binomial_of_walk(g, cyc));
    return out;
  }
  int edge_count = static_cast<int>(g.edges.size());
  if (bound == 0) bound = 2 * edge_count;
  if (bound < 4) throw std::invalid_argument("walk-length bound must be >= 4");
  out.bound = bound;
  long seen = 0;
  std::vector<WalkBinomial> retained;
  for (int q = 2; q <= bound / 2; ++q) {
    // Two passes keep memory at one hash per monomial: the first pass finds
    // degree-vector hashes occurring twice, the second stores only those
    // monomials, grouped by the exact vector.
    std::vector<int> degs(g.n, 0);
    std::vector<int> mono;
    auto degs_hash = [&] {
      std::uint64_t h = 1469598103934665603ULL;
      for (int d : degs) {
        h ^= static_cast<std::uint64_t>(d) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
      }
      return h;
    };
    std::vector<std::uint64_t> hashes;
    auto pass1 = [&](auto&& self, int from) -> void {
      if (static_cast<int>(mono.size()) == q) {
        if (++seen > budget)
          throw ToricBudgetError(
              "edge-multiset enumeration exceeded its budget at degree " +
              std::to_string(q));
        hashes.push_back(degs_hash());
        return;
      }
      for (int e = from; e < edge_count; ++e) {
        mono.push_back(e);
        degs[g.edges[e].first]++;
        degs[g.edges[e].second]++;
        self(self, e);
        degs[g.edges[e].first]--;
        degs[g.edges[e].second]--;
        mono.pop_back();
      }
    };
    pass1(pass1, 0);
    std::sort(hashes.begin(), hashes.end());
    std::set<std::uint64_t> repeated;
    for (std::size_t i = 1; i < hashes.size(); ++i)
      if (hashes[i] == hashes[i - 1]) repeated.insert(hashes[i]);
    hashes.clear();
    hashes.shrink_to_fit();
    if (repeated.empty()) continue;
    // Retained binomials bucketed by an edge their plus side must contain,
    // smallest degrees first, so dominance scans hit quadrics early.
    std::vector<std::vector<int>> dominance_bucket(edge_count);
    for (std::size_t r = 0; r < retained.size(); ++r) {
      dominance_bucket[retained[r].plus[0]].push_back(static_cast<int>(r));
      dominance_bucket[retained[r].minus[0]].push_back(static_cast<int>(r));
    }
    std::map<std::uint64_t, std::vector<std::vector<int>>> by_hash;
    auto pass2 = [&](auto&& self, int from) -> void {
      if (static_cast<int>(mono.size()) == q) {
        std::uint64_t h = degs_hash();
        if (repeated.count(h)) by_hash[h].push_back(mono);
        return;
      }
      for (int e = from; e < edge_count; ++e) {
        mono.push_back(e);
        degs[g.edges[e].first]++;
        degs[g.edges[e].second]++;
        self(self, e);
        degs[g.edges[e].first]--;
        degs[g.edges[e].second]--;
        mono.pop_back();
      }
    };
    pass2(pass2, 0);
    // Pairs are processed fiber by fiber. Dominance can only come from a
    // strictly smaller degree (equal-degree side-wise divisibility forces
    // equality), so the retained set for this degree is order-independent;
    // a canonical sort at the end restores a stable listing.
    std::vector<int> parent(g.n), touched;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto connected_union = [&](const std::vector<int>& a,
                               const std::vector<int>& b) {
      touched.clear();
      auto touch = [&](int v) {
        if (parent[v] == -1) {
          parent[v] = v;
          touched.push_back(v);
        }
      };
      for (const auto* side : {&a, &b})
        for (int e : *side) {
          int u = g.edges[e].first, v = g.edges[e].second;
          touch(u);
          touch(v);
          int ru = find(u), rv = find(v);
          if (ru != rv) parent[ru] = rv;
        }
      int root = find(touched[0]);
      bool connected = true;
      for (int v : touched)
        if (find(v) != root) connected = false;
      for (int v : touched) parent[v] = -1;
      return connected;
    };
    parent.assign(g.n, -1);
    auto degvec = [&](const std::vector<int>& m) {
      std::vector<int> d(g.n, 0);
      for (int e : m) {
        d[g.edges[e].first]++;
        d[g.edges[e].second]++;
      }
      return d;
    };
    for (const auto& [h, monos] : by_hash) {
      std::map<std::vector<int>, std::vector<const std::vector<int>*>> exact;
      for (const auto& m : monos) exact[degvec(m)].push_back(&m);
      for (const auto& [d, group] : exact) {
        for (std::size_t i = 0; i < group.size(); ++i)
          for (std::size_t j = i + 1; j < group.size(); ++j) {
            const std::vector<int>& plus = *group[i];
            const std::vector<int>& minus = *group[j];
            if (!connected_union(plus, minus)) continue;
            // either side of a dominating binomial divides plus, so its
            // bucket edge shows up among plus's edges
            bool dominated = false;
            int last = -1;
            for (int e : plus) {
              if (e == last) continue;
              last = e;
              for (int rid : dominance_bucket[e]) {
                const WalkBinomial& r = retained[rid];
                if ((detail::multiset_contains(plus, r.plus) &&
                     detail::multiset_contains(minus, r.minus)) ||
                    (detail::multiset_contains(plus, r.minus) &&
                     detail::multiset_contains(minus, r.plus))) {
                  dominated = true;
                  break;
                }
              }
              if (dominated) break;
            }
            if (dominated) continue;
            WalkBinomial wb;
            wb.plus = plus;
            wb.minus = minus;
            wb.walk = detail::alternating_euler_walk(g, plus, minus);
            retained.push_back(std::move(wb));
          }
      }
    }
  }
  std::sort(retained.begin(), retained.end(),
            [](const WalkBinomial& a, const WalkBinomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return std::tie(a.plus, a.minus) < std::tie(b.plus, b.minus);
            });
  out.gens = std::move(retained);
  return out;
}

// Assigns the generator binomial of each edge to its variable and expands.
inline Polynomial substitute(const WalkBinomial& wb, const GeneratorSet& gs) {
  Polynomial plus = Polynomial::constant(1), minus = Polynomial::constant(1);
  for (int e : wb.plus) {
    if (e < 0 || e >= gs.size())
      throw std::invalid_argument("edge variable has no generator");
    plus = plus * gs.gens[e].f;
  }
  for (int e : wb.minus) {
    if (e < 0 || e >= gs.size())
      throw std::invalid_argument("edge variable has no generator");
    minus = minus * gs.gens[e].f;
  }
  return plus - minus;
}

// X{2,3}*X{4,6} - X{2,6}*X{3,4} with vertices printed 1-based and edges in
// canonical order.
inline std::string binomial_text(const WalkBinomial& wb, const CoCompGraph& g) {
  auto side = [&](const std::vector<int>& edges) {
    std::string out;
    for (std::size_t i = 0; i < edges.size();) {
      std::size_t j = i;
      while (j < edges.size() && edges[j] == edges[i]) ++j;
      if (i) out += "*";
      out += "X{" + std::to_string(g.edges[edges[i]].first + 1) + "," +
             std::to_string(g.edges[edges[i]].second + 1) + "}";
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  };
  return side(wb.plus) + " - " + side(wb.minus);
}

}  // namespace hk

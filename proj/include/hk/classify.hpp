#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hk/lattice.hpp"
#include "hk/poset.hpp"

namespace hk {

// True iff the family of strict downsets {D(x)} is totally ordered by
// inclusion, which is equivalent to containing no two disjoint 2-chains.
inline bool is_two_plus_two_free(const Poset& p) {
  int n = p.size();
  std::vector<std::uint64_t> d;
  for (int i = 0; i < n; ++i) d.push_back(p.down_mask(i));
  std::sort(d.begin(), d.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = detail::popcount(a), cb = detail::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::size_t i = 1; i < d.size(); ++i)
    if ((d[i - 1] & ~d[i]) != 0) return false;
  return true;
}

// True iff width <= 2, i.e. no 3-element antichain.
inline bool is_three_antichain_free(const Poset& p) {
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.incomparable(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (p.incomparable(a, c) && p.incomparable(b, c)) return false;
    }
  return true;
}

inline bool is_free_pair(const Poset& p) {
  return is_two_plus_two_free(p) && is_three_antichain_free(p);
}

// The strictly increasing downset sequence of a (2+2)-free poset, with the
// level sets L_i = {a | D(a) = D_i} and the gaps K_j = D_{j+1} \ D_j, where
// D_{m+1} is the whole ground set.
struct DownsetChain {
  std::vector<std::uint64_t> downsets;      // D_0 = {} through D_m
  std::vector<std::vector<int>> levels;     // L_0 .. L_m, element indices
  std::vector<std::vector<int>> gaps;       // K_0 .. K_m
};

inline DownsetChain downset_chain(const Poset& p) {
  if (!is_two_plus_two_free(p))
    throw PosetError("downset chain requires a (2+2)-free poset");
  DownsetChain out;
  std::set<std::uint64_t> distinct;
  for (int i = 0; i < p.size(); ++i) distinct.insert(p.down_mask(i));
  if (p.size() == 0) return out;
  out.downsets.assign(distinct.begin(), distinct.end());
  std::sort(out.downsets.begin(), out.downsets.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return detail::popcount(a) < detail::popcount(b);
            });
  std::size_t m1 = out.downsets.size();
  out.levels.resize(m1);
  out.gaps.resize(m1);
  for (int i = 0; i < p.size(); ++i) {
    auto it = std::find(out.downsets.begin(), out.downsets.end(), p.down_mask(i));
    out.levels[it - out.downsets.begin()].push_back(i);
  }
  for (std::size_t j = 0; j < m1; ++j) {
    std::uint64_t next = j + 1 < m1 ? out.downsets[j + 1] : p.full_mask();
    detail::for_each_bit(next & ~out.downsets[j],
                         [&](int x) { out.gaps[j].push_back(x); });
  }
  return out;
}

// Upper-triangular matrix of disjoint label sets; the nonempty cells
// partition the ground set and no row or column is entirely empty.
struct CompositionMatrix {
  std::vector<std::vector<std::vector<std::string>>> cells;  // sorted labels

  int size() const { return static_cast<int>(cells.size()); }

  void validate() const {
    int m = size();
    std::set<std::string> seen;
    std::vector<bool> row_used(m, false), col_used(m, false);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(cells[i].size()) != m)
        throw PosetError("composition matrix is not square");
      for (int j = 0; j < m; ++j) {
        if (cells[i][j].empty()) continue;
        if (j < i) throw PosetError("composition matrix is not upper triangular");
        row_used[i] = col_used[j] = true;
        for (const auto& lab : cells[i][j])
          if (!seen.insert(lab).second)
            throw PosetError("composition matrix repeats label: " + lab);
      }
    }
    for (int i = 0; i < m; ++i) {
      if (!row_used[i]) throw PosetError("composition matrix has an empty row");
      if (!col_used[i]) throw PosetError("composition matrix has an empty column");
    }
  }
};

// The matrix with entry (i, j) equal to the intersection of L_{i-1} and
// K_{j-1}: elements whose downset is D_{i-1} and which first appear in the
// gap after D_{j-1}.
inline CompositionMatrix composition_matrix(const Poset& p) {
  DownsetChain chain = downset_chain(p);
  int m = static_cast<int>(chain.downsets.size());
  CompositionMatrix out;
  out.cells.assign(m, std::vector<std::vector<std::string>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<std::string> cell;
      for (int a : chain.levels[i])
        if (std::find(chain.gaps[j].begin(), chain.gaps[j].end(), a) !=
            chain.gaps[j].end())
          cell.push_back(p.label(a));
      std::sort(cell.begin(), cell.end());
      out.cells[i][j] = std::move(cell);
    }
  if (m > 0) out.validate();
  return out;
}

// Inverse of composition_matrix up to isomorphism: an element in row i lies
// above exactly the union of the columns before i.
inline Poset poset_from_composition_matrix(const CompositionMatrix& m) {
  m.validate();
  int k = m.size();
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> columns(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (const auto& lab : m.cells[i][j]) {
        labels.push_back(lab);
        columns[j].push_back(lab);
      }
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (const auto& a : m.cells[i][j])
        for (int c = 0; c < i; ++c)
          for (const auto& b : columns[c]) rel.emplace_back(b, a);
  return Poset(labels, rel);
}

// ---------------------------------------------------------------------------
// Generalized snake posets. A word is a string over {L, R}; the leading
// empty letter is implicit.

inline void validate_snake_word(const std::string& word) {
  for (char c : word)
    if (c != 'L' && c != 'R') throw PosetError("snake word letter must be L or R");
}

namespace detail {

// Cover pairs of the snake lattice on indices 0..2l+3.
inline std::vector<std::pair<int, int>> snake_covers(const std::string& word) {
  std::vector<std::pair<int, int>> cov = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  int len = static_cast<int>(word.size());
  for (int l = 1; l <= len; ++l) {
    cov.emplace_back(2 * l + 1, 2 * l + 3);
    cov.emplace_back(2 * l + 2, 2 * l + 3);
    bool turn = l == 1 ? word[0] == 'L' : word[l - 1] != word[l - 2];
    cov.emplace_back(turn ? 2 * l - 1 : 2 * l, 2 * l + 2);
  }
  std::sort(cov.begin(), cov.end());
  return cov;
}

}  // namespace detail

// The generalized snake poset P(w) as a distributive lattice with element
// labels a0 .. a(2l+3) in construction order.
inline Lattice snake_poset(const std::string& word) {
  validate_snake_word(word);
  int n = 2 * static_cast<int>(word.size()) + 4;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [a, b] : detail::snake_covers(word))
    rel.emplace_back(labels[a], labels[b]);
  Poset order(labels, rel);
  // Realize each element as the ideal of join-irreducibles below it.
  std::vector<int> lower_count(n, 0);
  for (const auto& [a, b] : order.cover_pairs()) ++lower_count[b];
  std::vector<int> irr;
  for (int i = 0; i < n; ++i)
    if (lower_count[i] == 1) irr.push_back(i);
  std::vector<std::string> base_labels;
  for (int i : irr) base_labels.push_back(labels[i]);
  std::vector<std::pair<std::string, std::string>> base_rel;
  for (int a : irr)
    for (int b : irr)
      if (order.less(a, b)) base_rel.emplace_back(labels[a], labels[b]);
  Poset base(base_labels, base_rel);
  std::vector<std::uint64_t> members(n, 0);
  for (int e = 0; e < n; ++e)
    for (std::size_t k = 0; k < irr.size(); ++k)
      if (order.leq(irr[k], e)) members[e] |= std::uint64_t{1} << k;
  return Lattice(std::move(base), std::move(members), std::move(labels));
}

// Finds a word w with snake_poset(w) isomorphic to l, anchoring the bottom
// element and greedily reading the letters off the cover structure. The only
// free choice is which bottom cover plays the first chain; both labelings
// are tried in element order.
inline std::optional<std::string> recognize_snake(const Lattice& l) {
  int n = l.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  auto covers = l.covers();
  std::vector<std::vector<int>> up(n), down(n);
  for (const auto& [a, b] : covers) {
    up[a].push_back(b);
    down[b].push_back(a);
  }
  int bottom = l.bottom();
  if (up[bottom].size() != 2) return std::nullopt;
  int steps = (n - 4) / 2;

  auto attempt = [&](int a1, int a2) -> std::optional<std::string> {
    std::vector<int> phi(n, -1);  // phi[k] = lattice element playing a_k
    std::vector<bool> used(n, false);
    auto take = [&](int k, int e) {
      phi[k] = e;
      used[e] = true;
    };
    take(0, bottom);
    take(1, a1);
    take(2, a2);
    int a3 = l.join(a1, a2);
    if (used[a3]) return std::nullopt;
    take(3, a3);
    std::string word;
    for (int step = 1; step <= steps; ++step) {
      int prev_top = phi[2 * step + 1];
      // The next top is the unused upper cover with two lower covers; an
      // unused upper cover with one lower cover is a later side element.
      int next_top = -1;
      for (int c : up[prev_top])
        if (!used[c] && down[c].size() == 2) {
          if (next_top >= 0) return std::nullopt;
          next_top = c;
        }
      if (next_top < 0) return std::nullopt;
      int side = down[next_top][0] == prev_top ? down[next_top][1]
                                               : down[next_top][0];
      if (down[next_top][0] != prev_top && down[next_top][1] != prev_top)
        return std::nullopt;
      if (used[side] || down[side].size() != 1) return std::nullopt;
      int parent = down[side][0];
      char letter;
      if (parent == phi[2 * step - 1])
        letter = step == 1 ? 'L' : (word[step - 2] == 'L' ? 'R' : 'L');
      else if (parent == phi[2 * step])
        letter = step == 1 ? 'R' : word[step - 2];
      else
        return std::nullopt;
      word.push_back(letter);
      take(2 * step + 2, side);
      take(2 * step + 3, next_top);
    }
    // The element map must carry the snake covers onto l's covers exactly.
    auto expected = detail::snake_covers(word);
    std::vector<std::pair<int, int>> mapped;
    for (const auto& [a, b] : expected) mapped.emplace_back(phi[a], phi[b]);
    std::sort(mapped.begin(), mapped.end());
    std::vector<std::pair<int, int>> actual = covers;
    std::sort(actual.begin(), actual.end());
    if (mapped != actual) return std::nullopt;
    return word;
  };

  int c1 = std::min(up[bottom][0], up[bottom][1]);
  int c2 = std::max(up[bottom][0], up[bottom][1]);
  if (auto w = attempt(c1, c2)) return w;
  return attempt(c2, c1);
}

// Theorem-level prediction: true iff every ordinal-irreducible summand avoids
// both forbidden subposets. Singletons and the empty poset pass vacuously.
inline bool predict_khovanskii(const Poset& p) {
  for (const Poset& block : ordinal_decompose(p)) {
    if (block.size() <= 1) continue;
    if (!is_free_pair(block)) return false;
  }
  return true;
}

}  // namespace hk

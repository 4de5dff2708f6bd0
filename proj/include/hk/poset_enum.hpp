#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hk/poset.hpp"

namespace hk {

namespace detail {

// Smallest below-mask table over all relabelings. The minimum is attained at
// a linear extension (any below-element placed later would raise a row), so
// the search walks extensions only, prunes against the best prefix, and
// collapses interchangeable elements (equal down- and up-masks).
inline std::vector<std::uint64_t> canonical_key(const Poset& p) {
  int n = p.size();
  std::vector<std::uint64_t> best, cur(n, 0);
  std::vector<int> pos(n, -1);
  std::vector<int> placed;
  std::uint64_t used = 0, placed_mask = 0;

  auto rec = [&](auto&& self, int k, bool tight) -> void {
    if (k == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tried;
    for (int e = 0; e < n; ++e) {
      if ((used >> e) & 1) continue;
      if ((p.down_mask(e) & ~placed_mask) != 0) continue;
      auto fingerprint = std::make_pair(p.down_mask(e), p.up_mask(e));
      if (std::find(tried.begin(), tried.end(), fingerprint) != tried.end())
        continue;
      tried.push_back(fingerprint);
      std::uint64_t row = 0;
      for_each_bit(p.down_mask(e), [&](int a) {
        row |= std::uint64_t{1} << pos[a];
      });
      bool next_tight = tight;
      if (tight && !best.empty()) {
        if (row > best[k]) continue;
        if (row < best[k]) next_tight = false;
      }
      cur[k] = row;
      pos[e] = k;
      used |= std::uint64_t{1} << e;
      placed_mask |= std::uint64_t{1} << e;
      self(self, k + 1, next_tight);
      used &= ~(std::uint64_t{1} << e);
      placed_mask &= ~(std::uint64_t{1} << e);
      pos[e] = -1;
    }
  };
  rec(rec, 0, true);
  return best;
}

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return labels;
}

inline Poset poset_from_key(const std::vector<std::uint64_t>& key) {
  int n = static_cast<int>(key.size());
  std::vector<std::pair<std::string, std::string>> rel;
  auto labels = default_labels(n);
  for (int b = 0; b < n; ++b)
    for_each_bit(key[b], [&](int a) { rel.emplace_back(labels[a], labels[b]); });
  return Poset(labels, rel);
}

}  // namespace detail

// All unlabeled posets on n elements, one per isomorphism class, in a fixed
// canonical order. Built by extending each (n-1)-class with a new minimal
// element whose strict up-set runs over all filters, then deduplicating by
// canonical form.
inline std::vector<Poset> enumerate_posets(int n, int bound = 7) {
  if (n > bound) throw PosetError("poset enumeration bound exceeded");
  if (n < 0) throw PosetError("negative size");
  if (n == 0) return {};
  std::set<std::vector<std::uint64_t>> keys;
  keys.insert({0});
  for (int k = 2; k <= n; ++k) {
    std::set<std::vector<std::uint64_t>> next;
    for (const auto& key : keys) {
      Poset p = detail::poset_from_key(key);
      int m = p.size();
      std::uint64_t all = p.full_mask();
      for (std::uint64_t up = 0;; ++up) {
        // up must be an up-set of p: closed under going up.
        bool filter = true;
        detail::for_each_bit(up, [&](int a) {
          if ((p.up_mask(a) & ~up) != 0) filter = false;
        });
        if (filter) {
          auto labels = detail::default_labels(m + 1);
          std::vector<std::pair<std::string, std::string>> rel;
          for (const auto& [a, b] : p.cover_pairs())
            rel.emplace_back(labels[a], labels[b]);
          detail::for_each_bit(up, [&](int a) {
            rel.emplace_back(labels[m], labels[a]);
          });
          next.insert(detail::canonical_key(Poset(labels, rel)));
        }
        if (up == all) break;
      }
    }
    keys = std::move(next);
  }
  std::vector<Poset> out;
  for (const auto& key : keys) out.push_back(detail::poset_from_key(key));
  return out;
}

}  // namespace hk

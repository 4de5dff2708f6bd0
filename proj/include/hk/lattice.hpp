#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hk/poset.hpp"

namespace hk {

// Finite distributive lattice presented by its elements as poset ideals of a
// base poset. Order is inclusion; join is union, meet is intersection. The
// element order is whatever the constructor was handed: build_lattice uses
// the canonical (cardinality, lexicographic members) order, snake lattices
// keep their construction order, sublattices keep the parent's order.
class Lattice {
 public:
  Lattice() = default;

  Lattice(Poset base, std::vector<std::uint64_t> members,
          std::vector<std::string> labels)
      : base_(std::move(base)),
        members_(std::move(members)),
        labels_(std::move(labels)) {
    int n = size();
    if (static_cast<int>(labels_.size()) != n)
      throw PosetError("lattice label/member size mismatch");
    for (int i = 0; i < n; ++i) {
      if (!base_.is_downward_closed(members_[i]))
        throw PosetError("lattice element is not a poset ideal: " + labels_[i]);
      if (!index_.emplace(members_[i], i).second)
        throw PosetError("duplicate lattice element: " + labels_[i]);
    }
    join_.assign(n, std::vector<int>(n));
    meet_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto ju = index_.find(members_[i] | members_[j]);
        auto me = index_.find(members_[i] & members_[j]);
        if (ju == index_.end() || me == index_.end())
          throw PosetError("element set not closed under union/intersection");
        join_[i][j] = ju->second;
        meet_[i][j] = me->second;
      }
  }

  int size() const { return static_cast<int>(members_.size()); }
  const Poset& base() const { return base_; }
  std::uint64_t members(int i) const { return members_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of_members(std::uint64_t m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw PosetError("no lattice element with that member set");
    return it->second;
  }

  bool leq(int i, int j) const { return (members_[i] & ~members_[j]) == 0; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  bool incomparable(int i, int j) const { return !comparable(i, j); }
  int join(int i, int j) const { return join_[i][j]; }
  int meet(int i, int j) const { return meet_[i][j]; }

  int bottom() const {
    int b = 0;
    for (int i = 1; i < size(); ++i) b = meet_[b][i];
    return b;
  }
  int top() const {
    int t = 0;
    for (int i = 1; i < size(); ++i) t = join_[t][i];
    return t;
  }

  // Cover pairs (i, j), i covered by j, in the lattice order.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!less(i, j)) continue;
        bool cover = true;
        for (int k = 0; k < n && cover; ++k)
          if (k != i && k != j && less(i, k) && less(k, j)) cover = false;
        if (cover) out.emplace_back(i, j);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  // The lattice order as a poset on the element labels.
  Poset as_poset() const {
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (less(i, j)) rel.emplace_back(labels_[i], labels_[j]);
    return Poset(labels_, rel);
  }

  bool distributive() const {
    int n = size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]])
            return false;
    return true;
  }

 private:
  Poset base_;
  std::vector<std::uint64_t> members_;
  std::vector<std::string> labels_;
  std::map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> join_, meet_;
};

namespace detail {

inline std::string ideal_label(const Poset& p, std::uint64_t m) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : p.labels_of_mask(m)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

}  // namespace detail

// All poset ideals of p, ordered by (cardinality, lexicographic sorted member
// labels). Enumeration grows ideals one minimal element of the complement at
// a time instead of filtering all subsets.
inline Lattice build_lattice(const Poset& p) {
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::uint64_t ideal = queue[h];
    for (int x = 0; x < p.size(); ++x) {
      if ((ideal >> x) & 1) continue;
      if ((p.down_mask(x) & ~ideal) != 0) continue;  // x not minimal above ideal
      std::uint64_t next = ideal | (std::uint64_t{1} << x);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::uint64_t> members(queue.begin(), queue.end());
  std::vector<std::vector<std::string>> key(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    key[i] = p.labels_of_mask(members[i]);
  std::vector<int> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    std::size_t ca = key[a].size(), cb = key[b].size();
    if (ca != cb) return ca < cb;
    return key[a] < key[b];
  });
  std::vector<std::uint64_t> sorted;
  std::vector<std::string> labels;
  for (int i : order) {
    sorted.push_back(members[i]);
    labels.push_back(detail::ideal_label(p, members[i]));
  }
  return Lattice(p, std::move(sorted), std::move(labels));
}

// Elements covering exactly one element, with the induced order. For an
// ideal this means a unique maximal member, so the result carries the base
// labels and is isomorphic to the base poset.
inline Poset join_irreducibles(const Lattice& l) {
  std::vector<int> irr;
  std::vector<std::string> labels;
  for (int i = 0; i < l.size(); ++i) {
    std::uint64_t m = l.members(i);
    int maximal = -1, count = 0;
    detail::for_each_bit(m, [&](int x) {
      if ((l.base().up_mask(x) & m) == 0) {
        maximal = x;
        ++count;
      }
    });
    if (count == 1) {
      irr.push_back(i);
      labels.push_back(l.base().label(maximal));
    }
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t a = 0; a < irr.size(); ++a)
    for (std::size_t b = 0; b < irr.size(); ++b)
      if (l.less(irr[a], irr[b])) rel.emplace_back(labels[a], labels[b]);
  return Poset(labels, rel);
}

// Closure of seed under join and meet, as a lattice that keeps the parent's
// base, labels and relative element order.
inline Lattice minimal_sublattice(const Lattice& l, const std::vector<int>& seed) {
  if (seed.empty()) throw PosetError("empty sublattice seed");
  std::set<int> closed(seed.begin(), seed.end());
  for (;;) {
    std::vector<int> add;
    for (int a : closed)
      for (int b : closed) {
        if (!closed.count(l.join(a, b))) add.push_back(l.join(a, b));
        if (!closed.count(l.meet(a, b))) add.push_back(l.meet(a, b));
      }
    if (add.empty()) break;
    closed.insert(add.begin(), add.end());
  }
  std::vector<std::uint64_t> members;
  std::vector<std::string> labels;
  for (int i : closed) {  // std::set iterates ascending = parent order
    members.push_back(l.members(i));
    labels.push_back(l.label(i));
  }
  return Lattice(l.base(), std::move(members), std::move(labels));
}

}  // namespace hk

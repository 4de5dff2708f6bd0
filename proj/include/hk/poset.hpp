#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hk {

namespace detail {

inline int popcount(std::uint64_t m) { return std::popcount(m); }

inline int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

// Iterate set bits, lowest first.
template <typename F>
void for_each_bit(std::uint64_t m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    m &= m - 1;
    f(i);
  }
}

}  // namespace detail

class PosetError : public std::runtime_error {
 public:
  explicit PosetError(const std::string& what) : std::runtime_error(what) {}
};

// Finite poset on at most 64 elements. Elements are addressed by index in
// label order; label strings are unique. The stored cover relation is the
// transitive reduction of whatever relation pairs the constructor was given.
class Poset {
 public:
  static constexpr int kMaxSize = 64;

  Poset() = default;

  Poset(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& relations)
      : labels_(std::move(labels)) {
    int n = static_cast<int>(labels_.size());
    if (n > kMaxSize) throw PosetError("poset too large (max 64 elements)");
    for (int i = 0; i < n; ++i) {
      if (labels_[i].empty()) throw PosetError("empty label");
      if (!index_.emplace(labels_[i], i).second)
        throw PosetError("duplicate label: " + labels_[i]);
    }
    below_.assign(n, 0);
    for (const auto& [a, b] : relations) {
      int ia = index_of(a);
      int ib = index_of(b);
      if (ia == ib) throw PosetError("cycle in covers: " + a + " < " + a);
      below_[ib] |= std::uint64_t{1} << ia;
    }
    // Transitive closure; repeated until stable (n rounds suffice).
    for (;;) {
      bool changed = false;
      for (int b = 0; b < n; ++b) {
        std::uint64_t acc = below_[b];
        detail::for_each_bit(below_[b], [&](int a) { acc |= below_[a]; });
        if (acc != below_[b]) {
          below_[b] = acc;
          changed = true;
        }
      }
      if (!changed) break;
    }
    for (int i = 0; i < n; ++i)
      if (below_[i] & (std::uint64_t{1} << i))
        throw PosetError("cycle in covers involving: " + labels_[i]);
    above_.assign(n, 0);
    for (int b = 0; b < n; ++b)
      detail::for_each_bit(below_[b],
                           [&](int a) { above_[a] |= std::uint64_t{1} << b; });
    // Covers: a < b with nothing strictly between.
    for (int b = 0; b < n; ++b)
      detail::for_each_bit(below_[b], [&](int a) {
        if ((below_[b] & above_[a]) == 0) covers_.emplace_back(a, b);
      });
    std::sort(covers_.begin(), covers_.end());
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_label(const std::string& lab) const { return index_.count(lab) != 0; }

  int index_of(const std::string& lab) const {
    auto it = index_.find(lab);
    if (it == index_.end()) throw PosetError("unknown label: " + lab);
    return it->second;
  }

  bool less(int a, int b) const { return (below_[b] >> a) & 1; }
  bool leq(int a, int b) const { return a == b || less(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  bool incomparable(int a, int b) const { return !comparable(a, b); }

  // Strict down-set / up-set of one element, as an index mask.
  std::uint64_t down_mask(int a) const { return below_[a]; }
  std::uint64_t up_mask(int a) const { return above_[a]; }

  std::uint64_t full_mask() const {
    int n = size();
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  // Pairs (a, b) with a covered by b, sorted.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

  bool is_downward_closed(std::uint64_t members) const {
    bool ok = true;
    detail::for_each_bit(members, [&](int a) {
      if ((below_[a] & ~members) != 0) ok = false;
    });
    return ok;
  }

  std::vector<std::string> labels_of_mask(std::uint64_t m) const {
    std::vector<std::string> out;
    detail::for_each_bit(m, [&](int i) { out.push_back(labels_[i]); });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::uint64_t> below_;  // below_[b] = mask of a with a < b
  std::vector<std::uint64_t> above_;
  std::vector<std::pair<int, int>> covers_;
};

inline std::vector<std::string> downset(const Poset& p, const std::string& a) {
  return p.labels_of_mask(p.down_mask(p.index_of(a)));
}

inline std::vector<std::string> upset(const Poset& p, const std::string& a) {
  return p.labels_of_mask(p.up_mask(p.index_of(a)));
}

// Size of a maximum antichain, by branch-and-bound over index-increasing
// extensions.
inline int width(const Poset& p) {
  int n = p.size();
  if (n == 0) return 0;
  std::vector<std::uint64_t> incomp(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.incomparable(i, j)) incomp[i] |= std::uint64_t{1} << j;
  int best = 1;
  // candidates: indices > current that stay incomparable to everything chosen.
  auto rec = [&](auto&& self, int chosen, std::uint64_t candidates) -> void {
    if (chosen + detail::popcount(candidates) <= best) return;
    std::uint64_t rest = candidates;
    while (rest) {
      int v = detail::lowest_bit(rest);
      rest &= rest - 1;
      best = std::max(best, chosen + 1);
      self(self, chosen + 1, rest & incomp[v]);
    }
  };
  std::uint64_t all = p.full_mask();
  rec(rec, 0, all);
  return best;
}

// Stacks q entirely above p. Label sets must be disjoint.
inline Poset ordinal_sum(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels();
  for (const auto& l : q.labels()) {
    if (p.has_label(l)) throw PosetError("label collision in ordinal sum: " + l);
    labels.push_back(l);
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [a, b] : p.cover_pairs()) rel.emplace_back(p.label(a), p.label(b));
  for (const auto& [a, b] : q.cover_pairs()) rel.emplace_back(q.label(a), q.label(b));
  for (const auto& a : p.labels())
    for (const auto& b : q.labels()) rel.emplace_back(a, b);
  return Poset(labels, rel);
}

namespace detail {

inline Poset induced_subposet(const Poset& p, std::uint64_t members) {
  std::vector<std::string> labels;
  std::vector<int> idx;
  for_each_bit(members, [&](int i) {
    idx.push_back(i);
    labels.push_back(p.label(i));
  });
  std::vector<std::pair<std::string, std::string>> rel;
  for (int a : idx)
    for (int b : idx)
      if (p.less(a, b)) rel.emplace_back(p.label(a), p.label(b));
  return Poset(labels, rel);
}

}  // namespace detail

// Unique maximal factorization into ordinal-irreducible summands. The
// summands are the connected components of the incomparability graph; any
// two distinct components are fully comparable, in a consistent direction,
// so they admit a linear arrangement.
inline std::vector<Poset> ordinal_decompose(const Poset& p) {
  int n = p.size();
  if (n == 0) return {};
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (comp[u] < 0 && p.incomparable(v, u)) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  // Order components bottom-up by comparing representatives.
  std::vector<int> rep(ncomp, -1);
  for (int i = 0; i < n; ++i)
    if (rep[comp[i]] < 0) rep[comp[i]] = i;
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.less(rep[a], rep[b]); });
  std::vector<Poset> out;
  for (int c : order) {
    std::uint64_t members = 0;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) members |= std::uint64_t{1} << i;
    out.push_back(detail::induced_subposet(p, members));
  }
  return out;
}

inline bool is_ordinal_irreducible(const Poset& p) {
  return ordinal_decompose(p).size() <= 1;
}

// Order isomorphism p -> q as an index map, if one exists. Backtracking over
// assignments filtered by (down-size, up-size) signatures.
inline std::optional<std::vector<int>> find_isomorphism(const Poset& p,
                                                        const Poset& q) {
  int n = p.size();
  if (n != q.size()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  auto sig = [](const Poset& r, int i) {
    return std::pair<int, int>(detail::popcount(r.down_mask(i)),
                               detail::popcount(r.up_mask(i)));
  };
  {
    std::vector<std::pair<int, int>> sp, sq;
    for (int i = 0; i < n; ++i) sp.push_back(sig(p, i)), sq.push_back(sig(q, i));
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if ((used >> j) & 1) continue;
      if (sig(p, i) != sig(q, j)) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        if (p.less(i, k) != q.less(j, map[k])) ok = false;
        if (p.less(k, i) != q.less(map[k], j)) ok = false;
      }
      if (!ok) continue;
      map[i] = j;
      used |= std::uint64_t{1} << j;
      if (self(self, i + 1)) return true;
      used &= ~(std::uint64_t{1} << j);
      map[i] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

inline bool is_isomorphic(const Poset& p, const Poset& q) {
  return find_isomorphism(p, q).has_value();
}

// ---------------------------------------------------------------------------
// Text format:
//   poset
//   elements: a b c
//   covers: a<b, b<c
// '#' starts a comment; whitespace is insignificant. The serializer emits
// sorted labels and sorted cover pairs, so canonical files round-trip
// bit-exactly.

class PosetParseError : public std::runtime_error {
 public:
  PosetParseError(const std::string& what, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

namespace detail {

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::pair<std::string, int>> lines;  // stripped, line number
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = detail::strip(raw);
    if (!s.empty()) lines.emplace_back(s, lineno);
  }
  if (lines.empty()) throw PosetParseError("empty input", 1, 1);
  if (lines[0].first != "poset")
    throw PosetParseError("expected header 'poset'", lines[0].second, 1);
  if (lines.size() < 2 || lines[1].first.rfind("elements:", 0) != 0)
    throw PosetParseError("expected 'elements:' line",
                          lines.size() > 1 ? lines[1].second : lines[0].second, 1);
  std::vector<std::string> labels;
  {
    std::istringstream ls(lines[1].first.substr(9));
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
  }
  std::vector<std::pair<std::string, std::string>> rel;
  int cover_line = 0;
  if (lines.size() >= 3) {
    if (lines[2].first.rfind("covers:", 0) != 0)
      throw PosetParseError("expected 'covers:' line", lines[2].second, 1);
    cover_line = lines[2].second;
    std::string body = lines[2].first.substr(7);
    std::istringstream cs(body);
    std::string item;
    while (std::getline(cs, item, ',')) {
      std::string t = detail::strip(item);
      if (t.empty()) continue;
      auto lt = t.find('<');
      if (lt == std::string::npos)
        throw PosetParseError("expected 'a<b' in covers: " + t, cover_line, 1);
      std::string a = detail::strip(t.substr(0, lt));
      std::string b = detail::strip(t.substr(lt + 1));
      if (a.empty() || b.empty())
        throw PosetParseError("expected 'a<b' in covers: " + t, cover_line, 1);
      rel.emplace_back(a, b);
    }
    if (lines.size() > 3)
      throw PosetParseError("unexpected extra line", lines[3].second, 1);
  }
  std::map<std::string, int> seen;
  for (const auto& l : labels)
    if (!seen.emplace(l, 1).second)
      throw PosetParseError("duplicate label: " + l, lines[1].second, 1);
  for (const auto& [a, b] : rel) {
    if (!seen.count(a)) throw PosetParseError("dangling label: " + a, cover_line, 1);
    if (!seen.count(b)) throw PosetParseError("dangling label: " + b, cover_line, 1);
  }
  try {
    return Poset(labels, rel);
  } catch (const PosetError& e) {
    throw PosetParseError(e.what(), cover_line ? cover_line : lines[0].second, 1);
  }
}

inline std::string serialize_poset(const Poset& p) {
  std::vector<std::string> labels = p.labels();
  std::sort(labels.begin(), labels.end());
  std::string out = "poset\nelements:";
  for (const auto& l : labels) out += " " + l;
  out += "\ncovers:";
  std::vector<std::pair<std::string, std::string>> cov;
  for (const auto& [a, b] : p.cover_pairs())
    cov.emplace_back(p.label(a), p.label(b));
  std::sort(cov.begin(), cov.end());
  bool first = true;
  for (const auto& [a, b] : cov) {
    out += first ? " " : ", ";
    out += a + "<" + b;
    first = false;
  }
  out += "\n";
  return out;
}

}  // namespace hk

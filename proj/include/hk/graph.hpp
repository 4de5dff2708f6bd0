#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hk/lattice.hpp"

namespace hk {

// Simple graph on lattice-element indices; an edge joins each incomparable
// pair. Isolated vertices are kept.
struct CoCompGraph {
  int n = 0;
  std::vector<std::string> vlabels;
  std::vector<std::pair<int, int>> edges;  // sorted, u < v
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::map<std::pair<int, int>, int> edge_ids;

  int edge_id(int u, int v) const {
    auto it = edge_ids.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    if (it == edge_ids.end()) throw PosetError("no such edge");
    return it->second;
  }

  void finish() {
    std::sort(edges.begin(), edges.end());
    adj.assign(n, {});
    edge_ids.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      adj[u].push_back(v);
      adj[v].push_back(u);
      edge_ids[edges[i]] = static_cast<int>(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
  }
};

inline CoCompGraph cocomparability_graph(const Lattice& l) {
  CoCompGraph g;
  g.n = l.size();
  g.vlabels = l.labels();
  for (int u = 0; u < l.size(); ++u)
    for (int v = u + 1; v < l.size(); ++v)
      if (l.incomparable(u, v)) g.edges.emplace_back(u, v);
  g.finish();
  return g;
}

inline CoCompGraph graph_from_edges(int n, std::vector<std::pair<int, int>> edges) {
  CoCompGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.vlabels.push_back(std::to_string(i + 1));
  for (auto& [u, v] : edges)
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  g.finish();
  return g;
}

// BFS 2-coloring per component; the witness coloring is returned on success.
inline std::optional<std::vector<int>> is_bipartite(const CoCompGraph& g) {
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int u : g.adj[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// All simple cycles, each reported once as a vertex sequence starting at its
// minimal vertex with the smaller neighbor second. Rooted backtracking over
// vertices not less than the root.
inline std::vector<std::vector<int>> simple_cycles(const CoCompGraph& g,
                                                   int max_len = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> on_path(g.n, false);
  for (int root = 0; root < g.n; ++root) {
    path = {root};
    on_path.assign(g.n, false);
    on_path[root] = true;
    auto rec = [&](auto&& self, int v) -> void {
      for (int u : g.adj[v]) {
        if (u == root && path.size() >= 3) {
          if (path[1] < path.back()) out.push_back(path);
          continue;
        }
        if (u <= root || on_path[u]) continue;
        if (max_len > 0 && static_cast<int>(path.size()) >= max_len) continue;
        on_path[u] = true;
        path.push_back(u);
        self(self, u);
        path.pop_back();
        on_path[u] = false;
      }
    };
    rec(rec, root);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline std::vector<std::vector<int>> even_cycles(const CoCompGraph& g,
                                                 int max_len = 0) {
  std::vector<std::vector<int>> out;
  for (auto& c : simple_cycles(g, max_len))
    if (c.size() % 2 == 0) out.push_back(std::move(c));
  return out;
}

// Streams 4-cycles ordered by the reversed representative (min vertex, then
// its larger cycle-neighbor), which is the processing order of the checker.
// Each cycle arrives in canonical ascending orientation (v0, c, b, a) with
// c < a. The callback returns false to stop.
template <typename F>
void four_cycle_stream(const CoCompGraph& g, F&& callback) {
  std::vector<char> nb(g.n, 0);
  for (int v0 = 0; v0 < g.n; ++v0) {
    for (int a : g.adj[v0]) {
      if (a <= v0) continue;
      std::vector<std::pair<int, int>> block;  // (b, c)
      for (int b : g.adj[a]) {
        if (b <= v0 || b == a) continue;
        for (char& x : nb) x = 0;
        for (int w : g.adj[b]) nb[w] = 1;
        for (int c : g.adj[v0])
          if (c > v0 && c < a && c != b && nb[c]) block.emplace_back(b, c);
      }
      std::sort(block.begin(), block.end());
      for (auto [b, c] : block)
        if (!callback(std::vector<int>{v0, c, b, a})) return;
    }
  }
}

inline std::string to_dot(const CoCompGraph& g) {
  std::string out = "graph cocomparability {\n";
  for (int v = 0; v < g.n; ++v)
    out += "  v" + std::to_string(v + 1) + " [label=\"" + g.vlabels[v] + "\"];\n";
  for (const auto& [u, v] : g.edges)
    out += "  v" + std::to_string(u + 1) + " -- v" + std::to_string(v + 1) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace hk

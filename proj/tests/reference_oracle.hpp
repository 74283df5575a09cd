#pragma once

// Unoptimised brute force used as an independent oracle in tests. It shares
// nothing with the library solver beyond reading the edge list.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

#include "gextra/graph.hpp"

namespace ref {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const gextra::Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Component sizes of the graph restricted to `alive`.
inline std::vector<std::size_t> component_sizes(const Matrix& a, const std::vector<bool>& alive) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    std::size_t count = 0;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      ++count;
      for (std::size_t v = 0; v < n; ++v) {
        if (a[u][v] && alive[v] && !seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

inline bool qualifies(const std::vector<std::size_t>& sizes, std::size_t floor) {
  return sizes.size() >= 2 && *std::min_element(sizes.begin(), sizes.end()) >= floor;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest vertex cut with all components >= floor, lexicographically first among those.
inline std::optional<std::vector<std::size_t>> min_vertex_cut(const gextra::Graph& g, std::size_t floor) {
  const auto a = matrix_of(g);
  const std::size_t n = g.order();
  for (std::size_t k = 0; k <= n; ++k) {
    std::optional<std::vector<std::size_t>> found;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      std::vector<bool> alive(n, true);
      for (auto v : s) alive[v] = false;
      if (qualifies(component_sizes(a, alive), floor)) {
        found = s;
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// All minimum-size vertex cuts with components >= floor.
inline std::vector<std::vector<std::size_t>> all_min_vertex_cuts(const gextra::Graph& g, std::size_t floor) {
  const auto a = matrix_of(g);
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k <= n && out.empty(); ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      std::vector<bool> alive(n, true);
      for (auto v : s) alive[v] = false;
      if (qualifies(component_sizes(a, alive), floor)) out.push_back(s);
      return false;
    });
  }
  return out;
}

// Returns nullopt for Infinite.
inline std::optional<std::size_t> kappa_g(const gextra::Graph& g, std::size_t extra) {
  auto cut = min_vertex_cut(g, extra + 1);
  if (!cut) return std::nullopt;
  return cut->size();
}

inline std::optional<std::size_t> lambda_g(const gextra::Graph& g, std::size_t extra) {
  const auto edges = g.edges();
  const std::size_t n = g.order();
  const std::size_t m = edges.size();
  std::vector<bool> alive(n, true);
  for (std::size_t k = 0; k <= m; ++k) {
    bool hit = for_each_subset(m, k, [&](const std::vector<std::size_t>& s) {
      auto a = matrix_of(g);
      for (auto e : s) a[edges[e].first][edges[e].second] = a[edges[e].second][edges[e].first] = false;
      return qualifies(component_sizes(a, alive), extra + 1);
    });
    if (hit) return k;
  }
  return std::nullopt;
}

// Classical κ: nullopt when no disconnecting set exists.
inline std::optional<std::size_t> kappa(const gextra::Graph& g) { return kappa_g(g, 0); }

inline std::size_t lambda(const gextra::Graph& g) { return lambda_g(g, 0).value(); }

}  // namespace ref

#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "amply/graph.hpp"

namespace amply::testing {

// Erdos-Renyi G(n, p); may be disconnected.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// d-regular graph on n vertices: a circulant start followed by random
// degree-preserving double-edge swaps. Requires n * d even and d < n.
inline Graph random_regular(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::set<Edge> edges;
  auto key = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t s = 1; s <= d / 2; ++s) edges.insert(key(v, (v + s) % n));
    if (d % 2 == 1) edges.insert(key(v, (v + n / 2) % n));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  if (list.size() >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    for (std::size_t step = 0; step < 20 * list.size(); ++step) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      auto [a, b] = list[i];
      auto [c, e] = list[j];
      if (rng() & 1) std::swap(c, e);
      // a-b, c-e  ->  a-c, b-e
      if (a == c || b == e || edges.count(key(a, c)) || edges.count(key(b, e))) continue;
      edges.erase(list[i]);
      edges.erase(list[j]);
      list[i] = key(a, c);
      list[j] = key(b, e);
      edges.insert(list[i]);
      edges.insert(list[j]);
    }
  }
  std::vector<Edge> out(edges.begin(), edges.end());
  return Graph(n, out);
}

inline Graph random_connected_regular(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_regular(n, d, rng);
    if (is_connected(g)) return g;
  }
}

// Relabels vertices by a permutation.
inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, edges);
}

}  // namespace amply::testing

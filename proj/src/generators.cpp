#include "amply/generators.hpp"

#include <string>
#include <vector>

#include "amply/error.hpp"

namespace amply {
namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw InputError("graph with " + std::to_string(n) + " vertices exceeds the size cap of " + std::to_string(cap));
  }
}

}  // namespace

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

Graph gen_hamming(std::size_t p, std::size_t q, std::size_t size_cap) {
  if (p < 1) throw InputError("hamming: need p >= 1");
  if (q < 2) throw InputError("hamming: need q >= 2");
  std::size_t n = 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (n > size_cap / q) {
      throw InputError("hamming: " + std::to_string(q) + "^" + std::to_string(p) +
                       " vertices exceeds the size cap of " + std::to_string(size_cap));
    }
    n *= q;
  }

  // place[i] = q^(p-1-i), the weight of coordinate i.
  std::vector<std::size_t> place(p, 1);
  for (std::size_t i = p - 1; i-- > 0;) place[i] = place[i + 1] * q;

  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (Vertex v = 0; v < n; ++v) {
    std::string label = "(";
    for (std::size_t i = 0; i < p; ++i) {
      std::size_t digit = v / place[i] % q;
      if (i) label += ",";
      label += std::to_string(digit);
      for (std::size_t other = digit + 1; other < q; ++other) {
        edges.emplace_back(v, v + (other - digit) * place[i]);
      }
    }
    labels[v] = label + ")";
  }
  return Graph(n, edges).with_labels(std::move(labels));
}

Graph gen_hypercube(std::size_t k, std::size_t size_cap) { return gen_hamming(k, 2, size_cap); }

Graph gen_paley(std::size_t q, std::size_t size_cap) {
  if (!is_prime(q)) throw InputError("paley: " + std::to_string(q) + " is not prime");
  if (q % 4 != 1) throw InputError("paley: " + std::to_string(q) + " is not 1 mod 4");
  check_cap(q, size_cap);
  std::vector<bool> residue(q, false);
  for (std::size_t a = 1; a < q; ++a) residue[a * a % q] = true;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < q; ++u) {
    for (Vertex v = u + 1; v < q; ++v) {
      if (residue[(v - u) % q]) edges.emplace_back(u, v);
    }
  }
  return Graph(q, edges);
}

Graph gen_shrikhande() {
  constexpr int kSteps[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> edges;
  std::vector<std::string> labels(16);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      Vertex u = 4 * a + b;
      labels[u] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (auto [da, db] : kSteps) {
        Vertex v = 4 * ((a + da) % 4) + (b + db) % 4;
        if (u < v) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(16, edges).with_labels(std::move(labels));
}

Graph gen_cocktail(std::size_t m, std::size_t size_cap) {
  if (m < 2) throw InputError("cocktail: need m >= 2");
  check_cap(2 * m, size_cap);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 2 * m; ++u) {
    for (Vertex v = u + 1; v < 2 * m; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return Graph(2 * m, edges);
}

Graph gen_complete(std::size_t n, std::size_t size_cap) {
  if (n < 2) throw InputError("complete: need n >= 2");
  check_cap(n, size_cap);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph gen_cycle(std::size_t n, std::size_t size_cap) {
  if (n < 3) throw InputError("cycle: need n >= 3");
  check_cap(n, size_cap);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

}  // namespace amply

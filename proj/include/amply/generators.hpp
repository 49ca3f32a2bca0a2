#pragma once

#include <cstddef>

#include "amply/graph.hpp"

namespace amply {

inline constexpr std::size_t kDefaultSizeCap = 100000;

// Hamming graph H(p, q): p-tuples over {0..q-1} in lexicographic index order,
// adjacent when they differ in exactly one coordinate.
Graph gen_hamming(std::size_t p, std::size_t q, std::size_t size_cap = kDefaultSizeCap);
// Q_k = H(k, 2).
Graph gen_hypercube(std::size_t k, std::size_t size_cap = kDefaultSizeCap);
// Paley graph on Z_q for a prime q = 1 (mod 4).
Graph gen_paley(std::size_t q, std::size_t size_cap = kDefaultSizeCap);
// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph gen_shrikhande();
// Cocktail-party graph K_{m x 2}; vertices 2i and 2i+1 are the non-adjacent pairs.
Graph gen_cocktail(std::size_t m, std::size_t size_cap = kDefaultSizeCap);
Graph gen_complete(std::size_t n, std::size_t size_cap = kDefaultSizeCap);
Graph gen_cycle(std::size_t n, std::size_t size_cap = kDefaultSizeCap);

bool is_prime(std::size_t q);

}  // namespace amply

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "amply/error.hpp"
#include "amply/generators.hpp"
#include "amply/matching.hpp"
#include "amply/witness.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace amply;

namespace {

Bipartite complete_bipartite(std::size_t n) {
  std::vector<BiEdge> edges;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r) edges.emplace_back(l, r);
  return Bipartite(n, n, edges);
}

// Even cycle of length 2n as a bipartite graph: l_i ~ r_i, r_{i+1}.
Bipartite bipartite_cycle(std::size_t n) {
  std::vector<BiEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back(i, (i + 1) % n);
  }
  return Bipartite(n, n, edges);
}

Bipartite random_bipartite(std::size_t l, std::size_t r, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<BiEdge> edges;
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Bipartite(l, r, edges);
}

// Random k-regular bipartite graph: k distinct cyclic shifts under random
// relabelings of both sides.
Bipartite random_regular_bipartite(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> left(n), right(n), shifts(n);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), 0);
  std::iota(shifts.begin(), shifts.end(), 0);
  std::shuffle(left.begin(), left.end(), rng);
  std::shuffle(right.begin(), right.end(), rng);
  std::shuffle(shifts.begin(), shifts.end(), rng);
  std::vector<BiEdge> edges;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(left[i], right[(i + shifts[s]) % n]);
  return Bipartite(n, n, edges);
}

std::vector<std::vector<std::size_t>> adjacency(const Bipartite& b) {
  std::vector<std::vector<std::size_t>> adj(b.left_size());
  for (std::size_t l = 0; l < b.left_size(); ++l) adj[l].assign(b.neighbors(l).begin(), b.neighbors(l).end());
  return adj;
}

}  // namespace

TEST_CASE("maximum matching examples") {
  CHECK(max_matching(complete_bipartite(3)).size() == 3);
  std::vector<BiEdge> star{{0, 0}, {1, 0}};
  CHECK(max_matching(Bipartite(2, 1, star)).size() == 1);
  Bipartite c6 = bipartite_cycle(3);
  Matching m = max_matching(c6);
  CHECK(m.size() == 3);
  CHECK(m.is_perfect_for(c6));
}

TEST_CASE("maximum matching equals brute force and leaves no augmenting path") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t l = 1 + rng() % 8, r = 1 + rng() % 8;
    Bipartite b = random_bipartite(l, r, 0.1 + 0.05 * (trial % 10), rng);
    Matching m = max_matching(b);
    REQUIRE(m.is_valid_for(b));
    REQUIRE_FALSE(has_augmenting_path(b, m));
    REQUIRE(m.size() == testing::brute_force_matching_size(adjacency(b), r));
  }
}

TEST_CASE("augmenting path detection") {
  Bipartite c6 = bipartite_cycle(3);
  Matching partial(3, 3);
  partial.add(0, 0);
  CHECK(has_augmenting_path(c6, partial));
}

TEST_CASE("Hall violator") {
  CHECK_FALSE(hall_violator(complete_bipartite(2)).has_value());
  std::vector<BiEdge> star{{0, 0}, {1, 0}};
  auto v = hall_violator(Bipartite(2, 2, star));
  REQUIRE(v.has_value());
  CHECK(v->set == std::vector<std::size_t>{0, 1});
  CHECK(v->neighborhood == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(hall_violator(Bipartite(2, 3, star)), InputError);
}

TEST_CASE("Hall violator certifies exactly the graphs without perfect matchings") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 7;
    Bipartite b = random_bipartite(n, n, 0.3, rng);
    bool perfect = max_matching(b).size() == n;
    auto v = hall_violator(b);
    REQUIRE(v.has_value() != perfect);
    if (v) {
      std::set<std::size_t> gamma;
      for (std::size_t l : v->set)
        for (std::size_t r : b.neighbors(l)) gamma.insert(r);
      REQUIRE(std::vector<std::size_t>(gamma.begin(), gamma.end()) == v->neighborhood);
      REQUIRE(gamma.size() < v->set.size());
    }
  }
}

TEST_CASE("König decomposition") {
  CHECK(konig_decomposition(complete_bipartite(3)).size() == 3);
  auto c8 = konig_decomposition(bipartite_cycle(4));
  CHECK(c8.size() == 2);

  Graph oct = gen_cocktail(3);
  auto params = require_amply_params(oct);
  auto h = build_transport_bipartite(oct, 0, 2, params);
  CHECK(h.graph.left_size() == 4);
  CHECK(konig_decomposition(h.graph).size() == 3);

  std::vector<BiEdge> irregular{{0, 0}, {0, 1}, {1, 1}};
  CHECK_THROWS_AS(konig_decomposition(Bipartite(2, 2, irregular)), InputError);
}

TEST_CASE("König decomposition partitions the edges of random regular bipartite graphs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 12;
    std::size_t k = 1 + rng() % n;
    Bipartite b = random_regular_bipartite(n, k, rng);
    auto classes = konig_decomposition(b);
    REQUIRE(classes.size() == k);
    std::multiset<BiEdge> covered;
    for (const auto& m : classes) {
      REQUIRE(m.is_perfect_for(b));
      for (auto e : m.pairs()) covered.insert(e);
    }
    auto edges = b.edges();
    REQUIRE(std::vector<BiEdge>(covered.begin(), covered.end()) == edges);
  }
}

TEST_CASE("matching through a prescribed edge") {
  Matching m = matching_through_edge(complete_bipartite(2), {0, 1});
  CHECK(m.pairs() == std::vector<BiEdge>{{0, 1}, {1, 0}});

  Bipartite c6 = bipartite_cycle(3);
  Matching a = matching_through_edge(c6, {0, 0});
  CHECK(a.pairs() == std::vector<BiEdge>{{0, 0}, {1, 1}, {2, 2}});
  Matching b = matching_through_edge(c6, {0, 1});
  CHECK(b.pairs() == std::vector<BiEdge>{{0, 1}, {1, 2}, {2, 0}});

  Graph h23 = gen_hamming(2, 3);
  auto h = build_transport_bipartite(h23, 0, 1, require_amply_params(h23));
  Matching whole = matching_through_edge(h.graph, {h.first_z(), h.first_z()});
  CHECK(whole.pairs() == h.graph.edges());

  CHECK_THROWS_AS(matching_through_edge(c6, {0, 2}), InputError);
}

TEST_CASE("every edge of a regular bipartite graph lies in some perfect matching") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 8;
    Bipartite b = random_regular_bipartite(n, 1 + rng() % n, rng);
    for (auto e : b.edges()) {
      Matching m = matching_through_edge(b, e);
      REQUIRE(m.is_perfect_for(b));
      REQUIRE(m.contains(e.first, e.second));
    }
  }
}

TEST_CASE("dense perfect matching") {
  CHECK(dense_perfect_matching(complete_bipartite(2)).size() == 2);
  std::vector<BiEdge> two_cycles{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  CHECK(dense_perfect_matching(Bipartite(4, 4, two_cycles)).size() == 4);
  CHECK(dense_perfect_matching(complete_bipartite(1)).size() == 1);
  std::vector<BiEdge> sparse{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(dense_perfect_matching(Bipartite(4, 4, sparse)), InputError);
}

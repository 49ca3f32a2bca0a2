#include "amply/error.hpp"
#include "amply/generators.hpp"
#include "amply/graph.hpp"
#include "doctest.h"

using namespace amply;

TEST_CASE("hamming") {
  Graph q3 = gen_hamming(3, 2);
  CHECK(require_amply_params(q3).str() == "(8,3,0,2)");
  CHECK(q3.edges() == gen_hypercube(3).edges());
  CHECK(require_amply_params(gen_hamming(2, 3)).str() == "(9,4,1,2)");
  Graph rook = gen_hamming(2, 4);
  CHECK(require_amply_params(rook).str() == "(16,6,2,2)");
  CHECK(rook.size() == 48);
  CHECK_THROWS_AS(gen_hamming(0, 3), InputError);
  CHECK_THROWS_AS(gen_hamming(2, 1), InputError);
  CHECK_THROWS_AS(gen_hamming(20, 10, 1000), InputError);
}

TEST_CASE("hypercube") {
  Graph q3 = gen_hypercube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.size() == 12);
  CHECK(require_amply_params(gen_hypercube(4)).str() == "(16,4,0,2)");
  Graph q1 = gen_hypercube(1);
  CHECK(q1.order() == 2);
  CHECK(q1.size() == 1);
}

TEST_CASE("paley") {
  Graph p13 = gen_paley(13);
  CHECK(require_amply_params(p13).str() == "(13,6,2,3)");
  CHECK(require_amply_params(gen_paley(17)).str() == "(17,8,3,4)");
  Graph p5 = gen_paley(5);
  CHECK(p5.edges() == gen_cycle(5).edges());
  CHECK(p5.adjacent(0, 1));
  CHECK(p5.adjacent(0, 4));
  CHECK_FALSE(p5.adjacent(0, 2));
  CHECK(require_amply_params(p5).str() == "(5,2,0,1)");
  CHECK_THROWS_AS(gen_paley(12), InputError);
  CHECK_THROWS_AS(gen_paley(7), InputError);
  for (std::size_t q : {5u, 13u, 17u, 29u, 37u}) CHECK(gen_paley(q).size() == q * (q - 1) / 4);
}

TEST_CASE("shrikhande") {
  Graph s = gen_shrikhande();
  CHECK(require_amply_params(s).str() == "(16,6,2,2)");
  CHECK(s.size() == 48);
}

TEST_CASE("cocktail party") {
  CHECK(require_amply_params(gen_cocktail(3)).str() == "(6,4,2,4)");
  CHECK(require_amply_params(gen_cocktail(4)).str() == "(8,6,4,6)");
  Graph c4 = gen_cocktail(2);
  CHECK(c4.size() == 4);
  CHECK(require_amply_params(c4).str() == "(4,2,0,2)");
  CHECK_THROWS_AS(gen_cocktail(1), InputError);
}

TEST_CASE("complete and cycle") {
  CHECK(gen_complete(4).size() == 6);
  auto c6 = require_amply_params(gen_cycle(6));
  CHECK(c6.d == 2);
  CHECK(c6.alpha == 0);
  CHECK(c6.beta == 1u);
  CHECK_THROWS_AS(gen_cycle(2), InputError);
  CHECK_THROWS_AS(gen_complete(1), InputError);
}

TEST_CASE("generators are deterministic") {
  CHECK(gen_paley(29).edges() == gen_paley(29).edges());
  CHECK(gen_hamming(3, 3).edges() == gen_hamming(3, 3).edges());
  CHECK(gen_shrikhande().edges() == gen_shrikhande().edges());
}

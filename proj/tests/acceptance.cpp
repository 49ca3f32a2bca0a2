// Acceptance suite. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (no arguments runs all ten)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amply/curvature.hpp"
#include "amply/generators.hpp"
#include "amply/graph.hpp"
#include "amply/search.hpp"
#include "amply/spectral.hpp"
#include "amply/witness.hpp"
#include "support/random_graphs.hpp"

using namespace amply;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    note("FAILED " + why);
    pass = false;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Named {
  std::string name;
  Graph g;
};

std::string edge_str(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

Rational frac(std::size_t a, std::size_t b) {
  return Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

// Exact curvature equality on every edge.
void expect_all_edges(Outcome& o, const Named& item, const Rational& want) {
  for (auto [x, y] : item.g.edges()) {
    Rational got = lly_curvature(item.g, x, y);
    if (got != want) {
      o.fail(item.name + " edge " + edge_str({x, y}) + ": kappa " + got.str() + " != " + want.str());
      return;
    }
  }
  o.note(item.name + " " + std::to_string(item.g.size()) + " edges = " + want.str());
}

Outcome criterion1() {
  Outcome o;
  expect_all_edges(o, {"Shrikhande", gen_shrikhande()}, Rational(1, 3));
  expect_all_edges(o, {"H(2,4)", gen_hamming(2, 4)}, Rational(2, 3));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::size_t k : {3u, 4u, 5u}) expect_all_edges(o, {"Q" + std::to_string(k), gen_hypercube(k)}, frac(2, k));
  return o;
}

Outcome criterion3() {
  Outcome o;
  expect_all_edges(o, {"H(2,3)", gen_hamming(2, 3)}, Rational(3, 4));
  expect_all_edges(o, {"H(3,3)", gen_hamming(3, 3)}, Rational(1, 2));
  return o;
}

std::optional<Graph> searched_instance() { return search_amply(8, 5, 2, 4); }

Outcome criterion4() {
  Outcome o;
  std::vector<Named> graphs{{"Q3", gen_hypercube(3)}, {"octahedron", gen_cocktail(3)}, {"cocktail(4)", gen_cocktail(4)}};
  auto searched = searched_instance();
  if (searched) graphs.push_back({"searched (8,5,2,4)", *searched});
  for (const auto& item : graphs) {
    auto params = require_amply_params(item.g);
    Rational want = frac(2 + params.alpha, params.d);
    bool ok = true;
    for (auto [x, y] : item.g.edges()) {
      auto cert = dense_matching_certificate(item.g, x, y, params);
      if (!cert.matching.is_perfect_for(cert.e1_graph)) {
        o.fail(item.name + " edge " + edge_str({x, y}) + ": no perfect matching of the exclusive-neighbour graph");
        ok = false;
        break;
      }
      if (cert.kappa != want || !cert.agrees()) {
        o.fail(item.name + " edge " + edge_str({x, y}) + ": certificate " + cert.kappa.str() + ", exact " + cert.lly.str());
        ok = false;
        break;
      }
    }
    if (ok) o.note(item.name + " = " + want.str());
  }
  if (!searched) {
    // Every 5-regular graph on 8 vertices is the complement of a 2-regular
    // one: C8, 2C4 or C3+C5. Report what those actually are.
    std::vector<std::vector<Edge>> two_regular(3);
    for (Vertex v = 0; v < 8; ++v) two_regular[0].emplace_back(v, (v + 1) % 8);
    for (Vertex v = 0; v < 4; ++v) {
      two_regular[1].emplace_back(v, (v + 1) % 4);
      two_regular[1].emplace_back(4 + v, 4 + (v + 1) % 4);
    }
    for (Vertex v = 0; v < 3; ++v) two_regular[2].emplace_back(v, (v + 1) % 3);
    for (Vertex v = 0; v < 5; ++v) two_regular[2].emplace_back(3 + v, 3 + (v + 1) % 5);
    std::size_t amply = 0;
    for (const auto& edges : two_regular) {
      std::vector<Edge> complement;
      Graph c(8, edges);
      for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = u + 1; v < 8; ++v)
          if (!c.adjacent(u, v)) complement.emplace_back(u, v);
      amply += detect_amply_params(Graph(8, complement)).amply_regular();
    }
    o.fail("exhaustive search found no connected amply regular graph with parameters (8,5,2,4); " +
           std::to_string(amply) + " of the 3 complements of C8, 2C4, C3+C5 are amply regular");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<Named> graphs{{"Paley(13)", gen_paley(13)}, {"octahedron", gen_cocktail(3)}, {"cocktail(4)", gen_cocktail(4)}};
  for (const auto& item : graphs) {
    auto params = require_amply_params(item.g);
    const auto d = static_cast<std::int64_t>(params.d);
    std::size_t chains = 0;
    for (auto [x, y] : item.g.edges()) {
      auto cert = witness_curvature_bound(item.g, x, y, params);
      std::string where = item.name + " edge " + edge_str({x, y}) + ": ";
      if (!cert.regularity.pass) {
        o.fail(where + "H is not (beta-1)-regular");
        break;
      }
      if (cert.decomposition.size() != *params.beta - 1) {
        o.fail(where + "decomposition has " + std::to_string(cert.decomposition.size()) + " classes");
        break;
      }
      bool classes_ok = true;
      for (const auto& cc : cert.class_checks) {
        classes_ok = classes_ok && cc.bijective && cc.chains_passed == cc.chains;
        chains += cc.chains;
      }
      if (!classes_ok) {
        o.fail(where + "a class has a non-bijective map or a failing chain distance");
        break;
      }
      if (cert.pi0_cost > Rational(d - 2, d + 1)) {
        o.fail(where + "cost(pi0) " + cert.pi0_cost.str() + " exceeds (d-2)/(d+1)");
        break;
      }
      if (cert.kappa_lb < Rational(3, d) || cert.kappa_lb > cert.kappa) {
        o.fail(where + "kappa_lb " + cert.kappa_lb.str() + " outside [3/d, kappa]");
        break;
      }
    }
    o.note(item.name + " " + std::to_string(item.g.size()) + " edges, " + std::to_string(chains) + " chains");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto check = [&](const std::string& name, const Graph& g, int want, int bound, bool exact_bound) {
    int diam = diameter(g);
    if (diam != want) return o.fail(name + " diameter " + std::to_string(diam) + " != " + std::to_string(want));
    if (exact_bound ? diam != bound : diam > bound) {
      return o.fail(name + " diameter " + std::to_string(diam) + " vs bound " + std::to_string(bound));
    }
    o.note(name + " diam " + std::to_string(diam) + (exact_bound ? " = " : " <= ") + std::to_string(bound));
  };
  check("H(2,3)", gen_hamming(2, 3), 2, 2 * 4 / 3, true);
  check("H(3,3)", gen_hamming(3, 3), 3, 2 * 6 / 3, false);
  check("Shrikhande", gen_shrikhande(), 2, 6, false);
  return o;
}

std::vector<Named> verified_graphs() {
  std::vector<Named> out{{"Shrikhande", gen_shrikhande()}, {"H(2,4)", gen_hamming(2, 4)}, {"Q3", gen_hypercube(3)},
                         {"Q4", gen_hypercube(4)},         {"Q5", gen_hypercube(5)},     {"H(2,3)", gen_hamming(2, 3)},
                         {"H(3,3)", gen_hamming(3, 3)},    {"octahedron", gen_cocktail(3)},
                         {"cocktail(4)", gen_cocktail(4)}, {"Paley(13)", gen_paley(13)}, {"Paley(17)", gen_paley(17)}};
  if (auto s = searched_instance()) out.push_back({"searched (8,5,2,4)", *s});
  return out;
}

Outcome criterion7() {
  Outcome o;
  constexpr double tol = 1e-9;
  auto check_sigma = [&](const std::string& name, const Graph& g, double want) {
    double sigma = second_largest(g);
    if (std::abs(sigma - want) > tol) return o.fail(name + " sigma_{n-1} " + std::to_string(sigma));
    o.note(name + " sigma_{n-1} = " + std::to_string(static_cast<int>(want)));
  };
  check_sigma("H(2,3)", gen_hamming(2, 3), 4 - 3);
  check_sigma("H(3,3)", gen_hamming(3, 3), 6 - 3);
  check_sigma("H(3,2)", gen_hamming(3, 2), 3 - 2);
  check_sigma("H(4,2)", gen_hamming(4, 2), 4 - 2);
  std::size_t checked = 0;
  for (const auto& item : verified_graphs()) {
    double l1 = lambda1(item.g);
    Rational kmin = curvature_all_edges(item.g).min;
    if (l1 < kmin.to_double() - tol) {
      o.fail(item.name + " lambda1 " + std::to_string(l1) + " < kappa_min " + kmin.str());
    }
    ++checked;
  }
  o.note("lambda1 >= kappa_min on " + std::to_string(checked) + " graphs");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t edges = 0;
  auto compare = [&](const std::string& name, const Graph& g) {
    const auto d = static_cast<std::int64_t>(*regular_degree(g));
    const Rational p(1, d + 1);
    for (auto [x, y] : g.edges()) {
      Rational flow = wasserstein(g, mu_p(g, x, p), mu_p(g, y, p)).value;
      Rational assignment = assignment_wasserstein(g, x, y).value;
      ++edges;
      if (flow != assignment) {
        o.fail(name + " edge " + edge_str({x, y}) + ": flow " + flow.str() + " vs assignment " + assignment.str());
        return;
      }
    }
  };
  for (const auto& item : verified_graphs()) {
    if (item.name != "Paley(17)") compare(item.name, item.g);
  }
  std::mt19937_64 rng(20240601);
  std::size_t random_graphs = 0;
  while (random_graphs < 200) {
    std::size_t n = 3 + rng() % 14;
    std::size_t d = 2 + rng() % (n - 2);
    if (n * d % 2) continue;
    Graph g = testing::random_connected_regular(n, d, rng);
    compare("random #" + std::to_string(random_graphs), g);
    ++random_graphs;
  }
  o.note(std::to_string(edges) + " edges, including " + std::to_string(random_graphs) + " random regular graphs");
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const Named& item : {Named{"H(2,3)", gen_hamming(2, 3)}, Named{"Shrikhande", gen_shrikhande()},
                            Named{"octahedron", gen_cocktail(3)}}) {
    const auto d = static_cast<std::int64_t>(*regular_degree(item.g));
    bool ok = true;
    for (auto [x, y] : item.g.edges()) {
      Rational kappa = lly_curvature(item.g, x, y);
      for (const Rational& p : {Rational(1, d + 1), Rational(d, d + 1)}) {
        Rational kp = ollivier_kappa_p(item.g, x, y, p);
        if (kp != (Rational(1) - p) * kappa) {
          o.fail(item.name + " edge " + edge_str({x, y}) + " p=" + p.str() + ": kappa_p " + kp.str());
          ok = false;
        }
      }
      if (!ok) break;
    }
    if (ok) o.note(item.name + " linear");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (std::size_t q : {13u, 17u}) {
    Graph g = gen_paley(q);
    auto params = require_amply_params(g);
    const std::size_t gamma = params.beta.value();
    if (params.n != 4 * gamma + 1 || params.d != 2 * gamma || params.alpha + 1 != gamma) {
      o.fail("Paley(" + std::to_string(q) + ") is not a conference graph: " + params.str());
      continue;
    }
    Rational bound = frac(3, 2 * gamma);
    Rational conjectured = Rational(1, 2) + frac(1, 2 * gamma);
    auto table = curvature_all_edges(g);
    for (const auto& row : table.rows) {
      if (row.kappa < bound) o.fail("Paley(" + std::to_string(q) + ") edge " + edge_str(row.edge) + " below 3/(2 gamma)");
    }
    o.note("Paley(" + std::to_string(q) + ") kappa_min " + table.min.str() + " >= " + bound.str() + " (conjectured " +
           conjectured.str() + ")");
  }
  return o;
}

struct Criterion {
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"curvature of Shrikhande (1/3) and H(2,4) (2/3)", 5, criterion1},
      {"curvature 2/d on Q3, Q4, Q5", 5, criterion2},
      {"curvature 3/d on H(2,3) and H(3,3)", 30, criterion3},
      {"dense matching certificate (2+alpha)/d", 10, criterion4},
      {"witness pipeline on Paley(13), octahedron, cocktail(4)", 10, criterion5},
      {"diameter bounds", 5, criterion6},
      {"spectral equality cases and lambda1 >= kappa_min", 30, criterion7},
      {"min-cost flow and assignment routes agree", 60, criterion8},
      {"kappa_p linear on [1/(d+1), 1]", 10, criterion9},
      {"conference graph lower bound 3/(2 gamma)", 10, criterion10},
  };
  return all;
}

bool run_one(std::size_t index) {
  const Criterion& c = criteria().at(index - 1);
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > c.limit_seconds) o.fail("took longer than the limit");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, c.limit_seconds);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << c.title << " [" << timing << "] "
            << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    std::size_t index = 0;
    try {
      index = std::stoul(argv[i]);
    } catch (const std::exception&) {
    }
    if (index < 1 || index > criteria().size()) {
      std::cerr << "unknown criterion '" << argv[i] << "'\n";
      return 2;
    }
    selected.push_back(index);
  }
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria().size(); ++i) selected.push_back(i);
  bool all = true;
  for (std::size_t index : selected) all = run_one(index) && all;
  return all ? 0 : 1;
}

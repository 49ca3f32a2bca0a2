#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "amply/graph.hpp"
#include "amply/rational.hpp"

namespace amply {

// Finitely supported probability measure; zero masses are never stored.
class ProbMeasure {
 public:
  ProbMeasure() = default;
  // Throws InputError unless all masses are positive and sum to exactly 1.
  explicit ProbMeasure(std::map<Vertex, Rational> masses);

  const std::map<Vertex, Rational>& masses() const { return masses_; }
  Rational operator[](Vertex v) const;
  std::size_t support_size() const { return masses_.size(); }

  friend bool operator==(const ProbMeasure&, const ProbMeasure&) = default;

 private:
  std::map<Vertex, Rational> masses_;
};

ProbMeasure dirac(Vertex v);

// Sparse coupling (source, target) -> mass.
using TransportPlan = std::map<std::pair<Vertex, Vertex>, Rational>;

// Marginals of `plan` equal mu1 (rows) and mu2 (columns) exactly and every
// entry is positive.
bool is_coupling(const TransportPlan& plan, const ProbMeasure& mu1, const ProbMeasure& mu2);

// mass p at x and (1-p)/deg(x) on each neighbour.
ProbMeasure mu_p(const Graph& g, Vertex x, const Rational& p);

// Sum of d(v, w) * plan(v, w). Throws InputError for negative entries, a
// total mass other than 1, or an entry between disconnected vertices.
Rational plan_cost(const Graph& g, const TransportPlan& plan);

struct TransportResult {
  Rational value;
  TransportPlan plan;
};

// Exact W1 distance: masses scaled to integers by the common denominator,
// then min-cost flow with successive shortest paths on BFS distances.
TransportResult wasserstein(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2);

// W(mu_x, mu_y) at idleness 1/(d+1) on a d-regular graph, computed as an
// optimal bijection between the closed neighbourhoods of x and y.
TransportResult assignment_wasserstein(const Graph& g, Vertex x, Vertex y);

struct Assignment {
  std::int64_t cost = 0;
  std::vector<std::size_t> column_of_row;
};

// Hungarian method on a dense n x n row-major integer cost matrix.
Assignment min_cost_assignment(std::span<const std::int64_t> cost, std::size_t n);

Rational ollivier_kappa_p(const Graph& g, Vertex x, Vertex y, const Rational& p);

// Lin-Lu-Yau curvature of an edge of a regular graph, (d+1)/d * kappa_{1/(d+1)}.
// Both the flow and the assignment routes are evaluated and must agree.
Rational lly_curvature(const Graph& g, Vertex x, Vertex y);

struct CurvatureRow {
  Edge edge;
  Rational kappa;
};

struct CurvatureTable {
  std::vector<CurvatureRow> rows;  // sorted by edge
  Rational min;
  Rational max;
};

// threads == 0 picks the hardware concurrency.
CurvatureTable curvature_all_edges(const Graph& g, unsigned threads = 1);

}  // namespace amply

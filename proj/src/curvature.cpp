#include "amply/curvature.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "amply/error.hpp"
#include "amply/parallel.hpp"

namespace amply {
namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in transport scaling");
  return out;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in transport cost");
  return out;
}

void require_edge(const Graph& g, Vertex x, Vertex y) {
  if (x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
    throw InputError("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not an edge");
  }
}

std::size_t require_regular(const Graph& g) {
  auto d = regular_degree(g);
  if (!d || *d == 0) throw HypothesisError("graph is not regular");
  return *d;
}

// Successive-shortest-path min-cost flow on a small dense network.
// Dijkstra runs in O(V^2) and always settles the lowest-index vertex among
// ties, which keeps the resulting plan deterministic.
class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t nodes) : head_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    std::size_t id = arcs_.size();
    arcs_.push_back({to, cap, cost});
    arcs_.push_back({from, 0, -cost});
    head_[from].push_back(id);
    head_[to].push_back(id + 1);
    return id;
  }

  std::int64_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

  // Pushes up to `want` units from s to t; returns the amount sent.
  std::int64_t run(std::size_t s, std::size_t t, std::int64_t want) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    const std::size_t n = head_.size();
    std::vector<std::int64_t> potential(n, 0);
    std::vector<std::int64_t> dist(n);
    std::vector<std::size_t> via(n);
    std::vector<bool> done(n);
    std::int64_t sent = 0;
    while (sent < want) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(done.begin(), done.end(), false);
      dist[s] = 0;
      for (;;) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (!done[v] && dist[v] != kInf && (u == n || dist[v] < dist[u])) u = v;
        }
        if (u == n) break;
        done[u] = true;
        for (std::size_t id : head_[u]) {
          const Arc& a = arcs_[id];
          if (a.cap == 0) continue;
          std::int64_t nd = dist[u] + a.cost + potential[u] - potential[a.to];
          if (nd < dist[a.to]) {
            dist[a.to] = nd;
            via[a.to] = id;
          }
        }
      }
      if (dist[t] == kInf) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] != kInf) potential[v] += dist[v];
      }
      std::int64_t push = want - sent;
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      sent += push;
    }
    return sent;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<std::vector<std::size_t>> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

ProbMeasure::ProbMeasure(std::map<Vertex, Rational> masses) : masses_(std::move(masses)) {
  Rational total;
  for (const auto& [v, m] : masses_) {
    if (m <= Rational(0)) throw InputError("probability measure with non-positive mass at " + std::to_string(v));
    total += m;
  }
  if (total != Rational(1)) throw InputError("probability measure has total mass " + total.str());
}

Rational ProbMeasure::operator[](Vertex v) const {
  auto it = masses_.find(v);
  return it == masses_.end() ? Rational(0) : it->second;
}

ProbMeasure dirac(Vertex v) { return ProbMeasure({{v, Rational(1)}}); }

bool is_coupling(const TransportPlan& plan, const ProbMeasure& mu1, const ProbMeasure& mu2) {
  std::map<Vertex, Rational> rows, cols;
  for (const auto& [key, mass] : plan) {
    if (mass <= Rational(0)) return false;
    rows[key.first] += mass;
    cols[key.second] += mass;
  }
  return rows == mu1.masses() && cols == mu2.masses();
}

ProbMeasure mu_p(const Graph& g, Vertex x, const Rational& p) {
  if (x >= g.order()) throw InputError("vertex " + std::to_string(x) + " out of range");
  if (p < Rational(0) || p > Rational(1)) throw InputError("idleness " + p.str() + " outside [0, 1]");
  std::map<Vertex, Rational> masses;
  if (!p.is_zero()) masses[x] = p;
  if (p != Rational(1)) {
    if (g.degree(x) == 0) throw InputError("isolated vertex " + std::to_string(x) + " with idleness below 1");
    Rational share = (Rational(1) - p) / Rational(static_cast<std::int64_t>(g.degree(x)));
    for (Vertex v : g.neighbors(x)) masses[v] = share;
  }
  return ProbMeasure(std::move(masses));
}

Rational plan_cost(const Graph& g, const TransportPlan& plan) {
  Rational total_mass, cost;
  for (const auto& [key, mass] : plan) {
    if (mass < Rational(0)) throw InputError("transport plan has a negative entry");
    auto d = distance(g, key.first, key.second);
    if (!d) throw InputError("transport plan moves mass between disconnected vertices");
    total_mass += mass;
    cost += mass * Rational(*d);
  }
  if (total_mass != Rational(1)) throw InputError("transport plan has total mass " + total_mass.str());
  return cost;
}

TransportResult wasserstein(const Graph& g, const ProbMeasure& mu1, const ProbMeasure& mu2) {
  std::vector<std::pair<Vertex, Rational>> sources(mu1.masses().begin(), mu1.masses().end());
  std::vector<std::pair<Vertex, Rational>> sinks(mu2.masses().begin(), mu2.masses().end());
  if (sources.empty() || sinks.empty()) throw InputError("wasserstein: empty measure");

  std::int64_t scale = 1;
  for (const auto& [v, m] : sources) scale = checked_lcm(scale, m.den());
  for (const auto& [v, m] : sinks) scale = checked_lcm(scale, m.den());

  const std::size_t a = sources.size();
  const std::size_t b = sinks.size();
  const std::size_t s = a + b;
  const std::size_t t = s + 1;
  MinCostFlow flow(a + b + 2);
  for (std::size_t i = 0; i < a; ++i) {
    flow.add_arc(s, i, mul_checked(sources[i].second.num(), scale / sources[i].second.den()), 0);
  }
  for (std::size_t j = 0; j < b; ++j) {
    flow.add_arc(a + j, t, mul_checked(sinks[j].second.num(), scale / sinks[j].second.den()), 0);
  }
  std::vector<std::size_t> arc_id(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    auto row = g.distances_from(sources[i].first);
    for (std::size_t j = 0; j < b; ++j) {
      int d = row[sinks[j].first];
      if (d < 0) throw InputError("wasserstein: measures are supported in different components");
      arc_id[i * b + j] = flow.add_arc(i, a + j, scale, d);
    }
  }
  if (flow.run(s, t, scale) != scale) throw ConsistencyError("wasserstein: flow did not saturate");

  TransportResult result;
  std::int64_t scaled_cost = 0;
  for (std::size_t i = 0; i < a; ++i) {
    auto row = g.distances_from(sources[i].first);
    for (std::size_t j = 0; j < b; ++j) {
      std::int64_t units = flow.flow_on(arc_id[i * b + j]);
      if (units == 0) continue;
      result.plan[{sources[i].first, sinks[j].first}] = Rational(units, scale);
      scaled_cost = add_checked(scaled_cost, mul_checked(units, row[sinks[j].first]));
    }
  }
  result.value = Rational(scaled_cost, scale);
  if (!is_coupling(result.plan, mu1, mu2) || plan_cost(g, result.plan) != result.value) {
    throw ConsistencyError("wasserstein: optimal plan failed validation");
  }
  return result;
}

Assignment min_cost_assignment(std::span<const std::int64_t> cost, std::size_t n) {
  if (cost.size() != n * n) throw InputError("assignment: cost matrix is not n x n");
  Assignment out;
  if (n == 0) return out;
  // Shortest augmenting path form of the Hungarian method with row/column
  // potentials u, v; 1-based with column 0 as the virtual start.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> row_of_col(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      std::size_t i0 = row_of_col[j0], j1 = 0;
      std::int64_t delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  out.column_of_row.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.column_of_row[row_of_col[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) out.cost = add_checked(out.cost, cost[i * n + out.column_of_row[i]]);
  return out;
}

TransportResult assignment_wasserstein(const Graph& g, Vertex x, Vertex y) {
  const std::size_t d = require_regular(g);
  require_edge(g, x, y);
  auto ball = [&](Vertex c) {
    std::vector<Vertex> out{c};
    auto nbrs = g.neighbors(c);
    out.insert(out.end(), nbrs.begin(), nbrs.end());
    return out;
  };
  const auto from = ball(x);
  const auto to = ball(y);
  const std::size_t n = d + 1;
  std::vector<std::int64_t> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = g.distances_from(from[i]);
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = row[to[j]];
  }
  Assignment best = min_cost_assignment(cost, n);

  const Rational share(1, static_cast<std::int64_t>(n));
  TransportResult result;
  for (std::size_t i = 0; i < n; ++i) result.plan[{from[i], to[best.column_of_row[i]]}] += share;
  result.value = Rational(best.cost, static_cast<std::int64_t>(n));
  return result;
}

Rational ollivier_kappa_p(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  if (x == y) throw InputError("ollivier_kappa_p: x and y must differ");
  auto d = distance(g, x, y);
  if (!d) throw InputError("ollivier_kappa_p: x and y are in different components");
  auto w = wasserstein(g, mu_p(g, x, p), mu_p(g, y, p)).value;
  return Rational(1) - w / Rational(*d);
}

Rational lly_curvature(const Graph& g, Vertex x, Vertex y) {
  const auto d = static_cast<std::int64_t>(require_regular(g));
  require_edge(g, x, y);
  const Rational idle(1, d + 1);
  const Rational factor(d + 1, d);
  Rational by_flow = factor * ollivier_kappa_p(g, x, y, idle);
  Rational by_assignment = factor * (Rational(1) - assignment_wasserstein(g, x, y).value);
  if (by_flow != by_assignment) {
    throw ConsistencyError("curvature routes disagree on (" + std::to_string(x) + ", " + std::to_string(y) +
                           "): flow " + by_flow.str() + " vs assignment " + by_assignment.str());
  }
  return by_flow;
}

CurvatureTable curvature_all_edges(const Graph& g, unsigned threads) {
  require_regular(g);
  if (!is_connected(g)) throw InputError("graph is disconnected");
  const auto edges = g.edges();
  CurvatureTable table;
  table.rows.resize(edges.size());
  if (threads != 1) g.warm_distances();
  parallel_for(edges.size(), threads, [&](std::size_t i) {
    table.rows[i] = {edges[i], lly_curvature(g, edges[i].first, edges[i].second)};
  });
  if (!table.rows.empty()) {
    table.min = table.max = table.rows.front().kappa;
    for (const auto& row : table.rows) {
      table.min = std::min(table.min, row.kappa);
      table.max = std::max(table.max, row.kappa);
    }
  }
  return table;
}

}  // namespace amply

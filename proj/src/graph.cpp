#include "amply/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <mutex>
#include <ostream>
#include <queue>
#include <sstream>

#include "amply/error.hpp"

namespace amply {

struct DistanceCache {
  std::mutex mutex;
  std::vector<std::unique_ptr<std::vector<int>>> rows;
};

namespace {

std::vector<int> bfs(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
  }
}

}  // namespace

Graph::Graph() : cache_(std::make_shared<DistanceCache>()) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : adjacency_(n), cache_(std::make_shared<DistanceCache>()) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
  cache_->rows.resize(n);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != order()) throw InputError("label count does not match vertex count");
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::span<const int> Graph::distances_from(Vertex source) const {
  if (source >= order()) check_vertex(*this, source);
  std::lock_guard lock(cache_->mutex);
  auto& row = cache_->rows[source];
  if (!row) row = std::make_unique<std::vector<int>>(bfs(adjacency_, source));
  // Rows are never replaced once built, so the span outlives the lock.
  return *row;
}

void Graph::warm_distances() const {
  for (Vertex v = 0; v < order(); ++v) distances_from(v);
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& what) -> void {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  auto parse_pair = [&](std::string_view text) {
    std::istringstream fields{std::string(text)};
    long long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) fail("expected two integers, got '" + std::string(text) + "'");
    if (a < 0 || b < 0) fail("negative value");
    return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto [a, b] = parse_pair(line);
    if (!header) {
      header.emplace(a, b);
      edges.reserve(b);
      continue;
    }
    if (a >= header->first || b >= header->first) {
      fail("index out of range: edge " + std::to_string(a) + " " + std::to_string(b) + " with n = " +
           std::to_string(header->first));
    }
    if (a == b) fail("loop edge at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  if (!header) throw InputError("missing 'n m' header");
  // The declared m is a size hint: duplicate lines collapse, so the line
  // count need not equal the final edge count.
  return Graph(header->first, edges);
}

Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  int d = g.distances_from(u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto row = g.distances_from(0);
  return std::none_of(row.begin(), row.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw InputError("diameter of a disconnected graph");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = g.distances_from(v);
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const std::size_t n = g.order();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> queue;
    dist[s] = 0;
    parent[s] = s;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      if (best && 2 * dist[u] >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          int cycle = dist[u] + dist[w] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InputError("common_neighbors needs two distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::string AmplyParams::str() const {
  std::string out = "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(alpha) + ",";
  out += beta ? std::to_string(*beta) : std::string("-");
  return out + ")";
}

std::string AmplyViolation::str() const {
  std::string pair = "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
  switch (kind) {
    case Kind::NotRegular:
      return "not regular: vertex " + std::to_string(v) + " has degree " + std::to_string(found) +
             ", vertex " + std::to_string(u) + " has degree " + std::to_string(expected);
    case Kind::AdjacentCount:
      return "adjacent pair " + pair + " has " + std::to_string(found) + " common neighbours, expected " +
             std::to_string(expected);
    case Kind::DistanceTwoCount:
      return "distance-2 pair " + pair + " has " + std::to_string(found) + " common neighbours, expected " +
             std::to_string(expected);
  }
  return "violation";
}

AmplyDetection detect_amply_params(const Graph& g) {
  if (g.order() == 0) throw InputError("empty graph");
  if (!is_connected(g)) throw InputError("graph is disconnected");
  AmplyDetection result;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) {
      result.violation = AmplyViolation{AmplyViolation::Kind::NotRegular, 0, v, d, g.degree(v)};
      return result;
    }
  }

  std::optional<std::pair<Edge, std::size_t>> alpha_ref, beta_ref;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto row = g.distances_from(u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (row[v] != 1 && row[v] != 2) continue;
      std::size_t count = common_neighbors(g, u, v).size();
      auto& ref = row[v] == 1 ? alpha_ref : beta_ref;
      if (!ref) {
        ref.emplace(Edge{u, v}, count);
      } else if (ref->second != count) {
        auto kind = row[v] == 1 ? AmplyViolation::Kind::AdjacentCount : AmplyViolation::Kind::DistanceTwoCount;
        result.violation = AmplyViolation{kind, u, v, ref->second, count};
        return result;
      }
    }
  }

  AmplyParams params;
  params.n = g.order();
  params.d = d;
  params.alpha = alpha_ref ? alpha_ref->second : 0;
  if (beta_ref) params.beta = beta_ref->second;
  params.girth = girth(g);
  params.connected = true;
  result.params = params;
  return result;
}

AmplyParams require_amply_params(const Graph& g) {
  auto detection = detect_amply_params(g);
  if (!detection.params) throw HypothesisError("not amply regular: " + detection.violation->str());
  return *detection.params;
}

EdgeNeighborhoodPartition edge_partition(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (!g.adjacent(x, y)) {
    throw InputError("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not an edge");
  }
  EdgeNeighborhoodPartition part;
  part.x = x;
  part.y = y;
  for (Vertex v : g.neighbors(x)) {
    if (v == y) continue;
    (g.adjacent(v, y) ? part.delta : part.nx).push_back(v);
  }
  for (Vertex v : g.neighbors(y)) {
    if (v != x && !g.adjacent(v, x)) part.ny.push_back(v);
  }
  return part;
}

}  // namespace amply

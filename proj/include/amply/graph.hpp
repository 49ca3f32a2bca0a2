#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amply {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

struct DistanceCache;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency lists are sorted and duplicate-free. BFS distances are computed
// lazily per source and cached; the cache is internally synchronized and
// shared between copies, so a Graph can be read from several threads.
class Graph {
 public:
  Graph();
  // Builds from an edge list; duplicates collapse. Throws InputError on
  // loops or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Optional human-readable vertex labels (e.g. Hamming tuples).
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  // BFS distance row from `source`; -1 marks unreachable vertices.
  std::span<const int> distances_from(Vertex source) const;
  // Fills the cache for every source (before fanning out to threads).
  void warm_distances() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
  std::shared_ptr<DistanceCache> cache_;
};

// Edge list text: "n m" header, then lines "u v"; '#' lines are comments.
// Duplicate edges collapse; m is not enforced against the line count.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
bool is_connected(const Graph& g);
// Throws InputError on a disconnected graph.
int diameter(const Graph& g);
// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);
// Degree when all degrees agree.
std::optional<std::size_t> regular_degree(const Graph& g);

// Detected amply-regular parameters (n, d, alpha, beta).
// beta is absent when the graph has no pair at distance 2.
struct AmplyParams {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t alpha = 0;
  std::optional<std::size_t> beta;
  std::optional<int> girth;
  bool connected = true;

  // b1 = d - alpha - 1: neighbours of one endpoint outside the other's ball.
  std::size_t b1() const { return d - alpha - 1; }
  std::string str() const;
  friend bool operator==(const AmplyParams&, const AmplyParams&) = default;
};

struct AmplyViolation {
  enum class Kind { NotRegular, AdjacentCount, DistanceTwoCount };
  Kind kind;
  // The first pair that disagrees with the reference pair, and both counts
  // (degrees for NotRegular, common-neighbour counts otherwise).
  Vertex u = 0, v = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
  std::string str() const;
};

struct AmplyDetection {
  std::optional<AmplyParams> params;
  std::optional<AmplyViolation> violation;
  bool amply_regular() const { return params.has_value(); }
};

// Throws InputError on a disconnected graph; a parameter violation is a
// value, not an error.
AmplyDetection detect_amply_params(const Graph& g);
// Convenience: throws HypothesisError carrying the violation.
AmplyParams require_amply_params(const Graph& g);

struct EdgeNeighborhoodPartition {
  Vertex x = 0, y = 0;
  std::vector<Vertex> delta;  // common neighbours of x and y
  std::vector<Vertex> nx;     // neighbours of x only (excluding y)
  std::vector<Vertex> ny;     // neighbours of y only (excluding x)
};

EdgeNeighborhoodPartition edge_partition(const Graph& g, Vertex x, Vertex y);

}  // namespace amply

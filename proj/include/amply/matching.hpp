#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace amply {

using BiEdge = std::pair<std::size_t, std::size_t>;  // (left, right)

// Bipartite graph with left vertices 0..left_n-1 and right vertices
// 0..right_n-1. Neighbour lists are sorted right indices.
class Bipartite {
 public:
  Bipartite() = default;
  Bipartite(std::size_t left_n, std::size_t right_n, std::span<const BiEdge> edges);

  std::size_t left_size() const { return left_n_; }
  std::size_t right_size() const { return right_n_; }
  std::size_t edge_count() const;

  std::span<const std::size_t> neighbors(std::size_t left) const { return adj_.at(left); }
  bool has_edge(std::size_t left, std::size_t right) const;
  std::size_t left_degree(std::size_t left) const { return adj_.at(left).size(); }
  std::vector<std::size_t> right_degrees() const;
  // Sorted (left, right) pairs.
  std::vector<BiEdge> edges() const;

  // k when every vertex on both sides has degree k.
  std::optional<std::size_t> regular_degree() const;

  void remove_edge(std::size_t left, std::size_t right);

  friend bool operator==(const Bipartite&, const Bipartite&) = default;

 private:
  std::size_t left_n_ = 0;
  std::size_t right_n_ = 0;
  std::vector<std::vector<std::size_t>> adj_;
};

// Partial injection left -> right.
class Matching {
 public:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  Matching() = default;
  Matching(std::size_t left_n, std::size_t right_n) : mate_left_(left_n, kFree), mate_right_(right_n, kFree) {}

  std::size_t size() const;
  std::size_t mate_of_left(std::size_t left) const { return mate_left_.at(left); }
  std::size_t mate_of_right(std::size_t right) const { return mate_right_.at(right); }
  bool contains(std::size_t left, std::size_t right) const {
    return left < mate_left_.size() && mate_left_[left] == right;
  }
  // Sorted by left index.
  std::vector<BiEdge> pairs() const;

  // Both endpoints must be free.
  void add(std::size_t left, std::size_t right);
  void assign(std::size_t left, std::size_t right);  // overwrites, used by augmenting paths

  bool is_valid_for(const Bipartite& b) const;
  bool is_perfect_for(const Bipartite& b) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
};

// Maximum-cardinality matching (Hopcroft-Karp). Deterministic for a given
// input: neighbours are scanned in increasing order.
Matching max_matching(const Bipartite& b);

// True when `m` admits an augmenting path in `b` (i.e. is not maximum).
bool has_augmenting_path(const Bipartite& b, const Matching& m);

struct HallViolator {
  std::vector<std::size_t> set;           // S, left vertices
  std::vector<std::size_t> neighborhood;  // Gamma(S), right vertices; smaller than S
};

// nullopt when a perfect matching exists. Requires equal side sizes.
std::optional<HallViolator> hall_violator(const Bipartite& b);

// Splits a k-regular bipartite graph into k edge-disjoint perfect matchings.
// Each class is the matching found on what remains after removing the
// previous classes. The partition property is checked before returning.
std::vector<Matching> konig_decomposition(const Bipartite& b);

// A perfect matching of a regular bipartite graph that uses the given edge.
Matching matching_through_edge(const Bipartite& b, BiEdge edge);

// Perfect matching under the minimum-degree condition deg >= n/2 on both
// sides; throws InputError when the condition fails.
Matching dense_perfect_matching(const Bipartite& b);

}  // namespace amply

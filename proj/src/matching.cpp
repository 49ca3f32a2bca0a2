#include "amply/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "amply/error.hpp"

namespace amply {

Bipartite::Bipartite(std::size_t left_n, std::size_t right_n, std::span<const BiEdge> edges)
    : left_n_(left_n), right_n_(right_n), adj_(left_n) {
  for (auto [l, r] : edges) {
    if (l >= left_n || r >= right_n) {
      throw InputError("bipartite edge (" + std::to_string(l) + ", " + std::to_string(r) + ") out of range");
    }
    adj_[l].push_back(r);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw InputError("duplicate bipartite edge");
  }
}

std::size_t Bipartite::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.size();
  return total;
}

bool Bipartite::has_edge(std::size_t left, std::size_t right) const {
  if (left >= left_n_) return false;
  return std::binary_search(adj_[left].begin(), adj_[left].end(), right);
}

std::vector<std::size_t> Bipartite::right_degrees() const {
  std::vector<std::size_t> deg(right_n_, 0);
  for (const auto& row : adj_) {
    for (std::size_t r : row) ++deg[r];
  }
  return deg;
}

std::vector<BiEdge> Bipartite::edges() const {
  std::vector<BiEdge> out;
  for (std::size_t l = 0; l < left_n_; ++l) {
    for (std::size_t r : adj_[l]) out.emplace_back(l, r);
  }
  return out;
}

std::optional<std::size_t> Bipartite::regular_degree() const {
  if (left_n_ == 0 || left_n_ != right_n_) return std::nullopt;
  std::size_t k = adj_[0].size();
  for (const auto& row : adj_) {
    if (row.size() != k) return std::nullopt;
  }
  for (std::size_t deg : right_degrees()) {
    if (deg != k) return std::nullopt;
  }
  return k;
}

void Bipartite::remove_edge(std::size_t left, std::size_t right) {
  auto& row = adj_.at(left);
  auto it = std::lower_bound(row.begin(), row.end(), right);
  if (it == row.end() || *it != right) {
    throw InputError("no bipartite edge (" + std::to_string(left) + ", " + std::to_string(right) + ")");
  }
  row.erase(it);
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(std::count_if(mate_left_.begin(), mate_left_.end(), [](std::size_t r) { return r != kFree; }));
}

std::vector<BiEdge> Matching::pairs() const {
  std::vector<BiEdge> out;
  for (std::size_t l = 0; l < mate_left_.size(); ++l) {
    if (mate_left_[l] != kFree) out.emplace_back(l, mate_left_[l]);
  }
  return out;
}

void Matching::add(std::size_t left, std::size_t right) {
  if (mate_left_.at(left) != kFree || mate_right_.at(right) != kFree) {
    throw InputError("matching: vertex already covered");
  }
  assign(left, right);
}

void Matching::assign(std::size_t left, std::size_t right) {
  mate_left_.at(left) = right;
  mate_right_.at(right) = left;
}

bool Matching::is_valid_for(const Bipartite& b) const {
  if (mate_left_.size() != b.left_size() || mate_right_.size() != b.right_size()) return false;
  std::size_t covered_right = 0;
  for (std::size_t l = 0; l < mate_left_.size(); ++l) {
    std::size_t r = mate_left_[l];
    if (r == kFree) continue;
    if (!b.has_edge(l, r) || mate_right_[r] != l) return false;
    ++covered_right;
  }
  std::size_t mates = static_cast<std::size_t>(
      std::count_if(mate_right_.begin(), mate_right_.end(), [](std::size_t l) { return l != kFree; }));
  return mates == covered_right;
}

bool Matching::is_perfect_for(const Bipartite& b) const {
  return b.left_size() == b.right_size() && is_valid_for(b) && size() == b.left_size();
}

Matching max_matching(const Bipartite& b) {
  const std::size_t nl = b.left_size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  Matching m(nl, b.right_size());
  std::vector<std::size_t> layer(nl);
  std::vector<std::size_t> next_edge(nl);

  auto bfs = [&] {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t l = 0; l < nl; ++l) {
      if (m.mate_of_left(l) == Matching::kFree) {
        layer[l] = 0;
        queue.push(l);
      } else {
        layer[l] = kInf;
      }
    }
    while (!queue.empty()) {
      std::size_t l = queue.front();
      queue.pop();
      for (std::size_t r : b.neighbors(l)) {
        std::size_t mate = m.mate_of_right(r);
        if (mate == Matching::kFree) {
          found = true;
        } else if (layer[mate] == kInf) {
          layer[mate] = layer[l] + 1;
          queue.push(mate);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  auto augment = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    std::vector<std::size_t> via;  // right vertex used to leave stack[i]
    while (!stack.empty()) {
      std::size_t l = stack.back();
      auto nbrs = b.neighbors(l);
      bool advanced = false;
      while (next_edge[l] < nbrs.size()) {
        std::size_t r = nbrs[next_edge[l]];
        std::size_t mate = m.mate_of_right(r);
        if (mate == Matching::kFree) {
          via.push_back(r);
          for (std::size_t i = 0; i < stack.size(); ++i) m.assign(stack[i], via[i]);
          return true;
        }
        if (layer[mate] == layer[l] + 1) {
          via.push_back(r);
          stack.push_back(mate);
          advanced = true;
          break;
        }
        ++next_edge[l];
      }
      if (advanced) continue;
      layer[l] = kInf;
      stack.pop_back();
      if (!via.empty()) {
        via.pop_back();
        ++next_edge[stack.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(next_edge.begin(), next_edge.end(), 0);
    for (std::size_t l = 0; l < nl; ++l) {
      if (m.mate_of_left(l) == Matching::kFree) augment(l);
    }
  }
  return m;
}

bool has_augmenting_path(const Bipartite& b, const Matching& m) {
  std::vector<bool> seen_left(b.left_size(), false);
  std::vector<bool> seen_right(b.right_size(), false);
  std::queue<std::size_t> queue;
  for (std::size_t l = 0; l < b.left_size(); ++l) {
    if (m.mate_of_left(l) == Matching::kFree) {
      seen_left[l] = true;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    std::size_t l = queue.front();
    queue.pop();
    for (std::size_t r : b.neighbors(l)) {
      if (seen_right[r] || m.mate_of_left(l) == r) continue;
      seen_right[r] = true;
      std::size_t mate = m.mate_of_right(r);
      if (mate == Matching::kFree) return true;
      if (!seen_left[mate]) {
        seen_left[mate] = true;
        queue.push(mate);
      }
    }
  }
  return false;
}

std::optional<HallViolator> hall_violator(const Bipartite& b) {
  if (b.left_size() != b.right_size()) throw InputError("hall_violator: side sizes differ");
  Matching m = max_matching(b);
  if (m.size() == b.left_size()) return std::nullopt;

  // Left vertices reachable from free left vertices by alternating paths.
  std::vector<bool> in_s(b.left_size(), false);
  std::vector<bool> in_gamma(b.right_size(), false);
  std::queue<std::size_t> queue;
  for (std::size_t l = 0; l < b.left_size(); ++l) {
    if (m.mate_of_left(l) == Matching::kFree) {
      in_s[l] = true;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    std::size_t l = queue.front();
    queue.pop();
    for (std::size_t r : b.neighbors(l)) {
      if (in_gamma[r]) continue;
      in_gamma[r] = true;
      std::size_t mate = m.mate_of_right(r);
      if (mate == Matching::kFree) throw ConsistencyError("hall_violator: matching was not maximum");
      if (!in_s[mate]) {
        in_s[mate] = true;
        queue.push(mate);
      }
    }
  }
  HallViolator out;
  for (std::size_t l = 0; l < in_s.size(); ++l) {
    if (in_s[l]) out.set.push_back(l);
  }
  for (std::size_t r = 0; r < in_gamma.size(); ++r) {
    if (in_gamma[r]) out.neighborhood.push_back(r);
  }
  if (out.neighborhood.size() >= out.set.size()) throw ConsistencyError("hall_violator: certificate not deficient");
  return out;
}

std::vector<Matching> konig_decomposition(const Bipartite& b) {
  if (b.left_size() != b.right_size()) throw InputError("konig_decomposition: side sizes differ");
  auto k = b.regular_degree();
  if (!k || *k == 0) throw InputError("konig_decomposition: graph is not k-regular with k >= 1");

  std::vector<Matching> classes;
  Bipartite rest = b;
  for (std::size_t i = 0; i < *k; ++i) {
    Matching m = max_matching(rest);
    if (!m.is_perfect_for(rest)) throw ConsistencyError("konig_decomposition: regular remainder without perfect matching");
    for (auto [l, r] : m.pairs()) rest.remove_edge(l, r);
    classes.push_back(std::move(m));
  }

  // Partition check: every edge of b in exactly one class, nothing else.
  if (rest.edge_count() != 0) throw ConsistencyError("konig_decomposition: edges left over");
  std::vector<BiEdge> all;
  for (const auto& m : classes) {
    if (!m.is_perfect_for(b)) throw ConsistencyError("konig_decomposition: class is not a perfect matching of b");
    auto p = m.pairs();
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  if (all != b.edges()) throw ConsistencyError("konig_decomposition: classes do not partition the edge set");
  return classes;
}

Matching matching_through_edge(const Bipartite& b, BiEdge edge) {
  if (!b.has_edge(edge.first, edge.second)) {
    throw InputError("matching_through_edge: (" + std::to_string(edge.first) + ", " + std::to_string(edge.second) +
                     ") is not an edge");
  }
  for (auto& m : konig_decomposition(b)) {
    if (m.contains(edge.first, edge.second)) return m;
  }
  throw ConsistencyError("matching_through_edge: no decomposition class holds the edge");
}

Matching dense_perfect_matching(const Bipartite& b) {
  const std::size_t n = b.left_size();
  if (n != b.right_size()) throw InputError("dense_perfect_matching: side sizes differ");
  if (n == 0) throw InputError("dense_perfect_matching: empty graph");
  for (std::size_t l = 0; l < n; ++l) {
    if (2 * b.left_degree(l) < n) {
      throw InputError("dense_perfect_matching: left vertex " + std::to_string(l) + " has degree below n/2");
    }
  }
  auto rdeg = b.right_degrees();
  for (std::size_t r = 0; r < n; ++r) {
    if (2 * rdeg[r] < n) {
      throw InputError("dense_perfect_matching: right vertex " + std::to_string(r) + " has degree below n/2");
    }
  }
  Matching m = max_matching(b);
  if (!m.is_perfect_for(b)) throw ConsistencyError("dense_perfect_matching: degree condition held but no perfect matching");
  return m;
}

}  // namespace amply

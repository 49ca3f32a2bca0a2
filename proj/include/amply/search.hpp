#pragma once

#include <cstddef>
#include <optional>

#include "amply/graph.hpp"

namespace amply {

inline constexpr std::size_t kSearchMaxOrder = 10;

// Exhaustive backtracking over d-regular graphs on n <= 10 vertices for a
// connected amply regular graph with exactly the given parameters. Vertex 0
// is fixed adjacent to 1..d. Returns the first hit in search order.
std::optional<Graph> search_amply(std::size_t n, std::size_t d, std::size_t alpha, std::size_t beta);

}  // namespace amply

#include "amply/search.hpp"

#include <array>
#include <vector>

#include "amply/error.hpp"

namespace amply {
namespace {

class RegularSearch {
 public:
  RegularSearch(std::size_t n, std::size_t d, std::size_t alpha, std::size_t beta)
      : n_(n), d_(d), alpha_(alpha), beta_(beta) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) pairs_.push_back({i, j});
    }
  }

  std::optional<Graph> run() {
    found_.reset();
    extend(0);
    return found_;
  }

 private:
  void set(std::size_t i, std::size_t j, bool value) {
    adj_[i][j] = adj_[j][i] = value;
    if (value) {
      ++deg_[i];
      ++deg_[j];
    }
  }
  void unset(std::size_t i, std::size_t j) {
    if (adj_[i][j]) {
      --deg_[i];
      --deg_[j];
    }
    adj_[i][j] = adj_[j][i] = false;
  }

  // Rows 0..row are complete; check every pair that involves them.
  bool row_consistent(std::size_t row) const {
    if (deg_[row] != d_) return false;
    for (std::size_t u = 0; u <= row; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) {
        // With both rows complete every column is known; otherwise only
        // the columns of completed rows are.
        const std::size_t known = v <= row ? n_ : row + 1;
        std::size_t common = 0;
        for (std::size_t w = 0; w < known; ++w) common += adj_[u][w] && adj_[v][w];
        if (v <= row) {
          if (adj_[u][v] ? common != alpha_ : (common != 0 && common != beta_)) return false;
        } else if (common > (adj_[u][v] ? alpha_ : beta_)) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t k) {
    if (found_) return;
    if (k == pairs_.size()) {
      accept();
      return;
    }
    auto [i, j] = pairs_[k];
    const bool row_ends = j + 1 == n_;
    for (bool value : {true, false}) {
      if (i == 0 && value != (j <= d_)) continue;
      if (value && (deg_[i] >= d_ || deg_[j] >= d_)) continue;
      // Row i cannot reach degree d with the slots that remain.
      if (!value && deg_[i] + (n_ - 1 - j) < d_) continue;
      set(i, j, value);
      if (!row_ends || row_consistent(i)) extend(k + 1);
      unset(i, j);
      if (found_) return;
    }
  }

  void accept() {
    if (n_ >= 1 && !row_consistent(n_ - 1)) return;
    std::vector<Edge> edges;
    for (auto [i, j] : pairs_) {
      if (adj_[i][j]) edges.emplace_back(i, j);
    }
    Graph g(n_, edges);
    if (!is_connected(g)) return;
    auto detected = detect_amply_params(g);
    if (!detected.params) return;
    const auto& p = *detected.params;
    if (p.d == d_ && p.alpha == alpha_ && p.beta == beta_) found_ = std::move(g);
  }

  std::size_t n_, d_, alpha_, beta_;
  std::vector<std::array<std::size_t, 2>> pairs_;
  std::array<std::array<bool, kSearchMaxOrder>, kSearchMaxOrder> adj_{};
  std::array<std::size_t, kSearchMaxOrder> deg_{};
  std::optional<Graph> found_;
};

}  // namespace

std::optional<Graph> search_amply(std::size_t n, std::size_t d, std::size_t alpha, std::size_t beta) {
  if (n > kSearchMaxOrder) {
    throw InputError("search: n = " + std::to_string(n) + " exceeds the exhaustive limit of " +
                     std::to_string(kSearchMaxOrder));
  }
  if (n < 2 || d == 0 || d >= n || (n * d) % 2 != 0) return std::nullopt;
  return RegularSearch(n, d, alpha, beta).run();
}

}  // namespace amply

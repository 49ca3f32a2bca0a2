#include "amply/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amply/error.hpp"

namespace amply {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

Spectrum symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw InputError("symmetric_eigenvalues: matrix is not n x n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i * n + j] != a[j * n + i]) throw InputError("symmetric_eigenvalues: matrix is not symmetric");
  constexpr int kMaxSweeps = 100;
  double scale = 0.0;
  for (double v : a) scale += v * v;
  scale = std::sqrt(scale);
  const double target = 1e-14 * std::max(scale, 1.0);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = a[p * n + r] = c * arp - s * arq;
          a[r * n + q] = a[q * n + r] = s * arp + c * arq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
  }

  Spectrum out;
  out.n = n;
  out.residual = off_diagonal_norm(a, n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues.push_back(a[i * n + i]);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  if (out.residual >= 1e-10 * static_cast<double>(std::max<std::size_t>(n, 1))) {
    throw ConsistencyError("Jacobi iteration did not converge (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

Spectrum adjacency_spectrum(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) {
    throw InputError("spectrum: " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap));
  }
  std::vector<double> a(n * n, 0.0);
  for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
  return symmetric_eigenvalues(std::move(a), n);
}

double second_largest(const Spectrum& spectrum) {
  if (spectrum.eigenvalues.size() < 2) throw InputError("second_largest: fewer than two eigenvalues");
  return spectrum.eigenvalues[spectrum.eigenvalues.size() - 2];
}

double second_largest(const Graph& g, std::size_t cap) {
  if (!is_connected(g)) throw InputError("graph is disconnected");
  if (!regular_degree(g)) throw HypothesisError("graph is not regular");
  return second_largest(adjacency_spectrum(g, cap));
}

double lambda1(const Graph& g, std::size_t cap) {
  if (!is_connected(g)) throw InputError("graph is disconnected");
  auto d = regular_degree(g);
  if (!d || *d == 0) throw HypothesisError("lambda1 needs a regular graph");
  return 1.0 - second_largest(adjacency_spectrum(g, cap)) / static_cast<double>(*d);
}

}  // namespace amply

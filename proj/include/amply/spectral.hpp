#pragma once

#include <cstddef>
#include <vector>

#include "amply/graph.hpp"

namespace amply {

inline constexpr std::size_t kDefaultSpectrumCap = 4096;
inline constexpr double kSpectralTolerance = 1e-9;

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::size_t n = 0;
  double residual = 0.0;  // off-diagonal Frobenius norm at termination
};

// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
// Jacobi rotations.
Spectrum symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

Spectrum adjacency_spectrum(const Graph& g, std::size_t cap = kDefaultSpectrumCap);

// sigma_{n-1}: the second largest adjacency eigenvalue of a connected regular graph.
double second_largest(const Graph& g, std::size_t cap = kDefaultSpectrumCap);
double second_largest(const Spectrum& spectrum);

// First nonzero normalised-Laplacian eigenvalue of a connected d-regular
// graph: 1 - sigma_{n-1}/d.
double lambda1(const Graph& g, std::size_t cap = kDefaultSpectrumCap);

}  // namespace amply

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amply/curvature.hpp"
#include "amply/graph.hpp"
#include "amply/matching.hpp"
#include "amply/rational.hpp"

namespace amply {

// Roles of the vertices of the transport-bipartite graph H of an edge xy.
// Left side: N_x, the common neighbours z_i, and beta-alpha-1 copies of x.
// Right side: N_y, primed copies z_i', and primed copies of x.
enum class HRole { Nx, Delta, XCopy, Ny, DeltaPrime, XCopyPrime };

std::string to_string(HRole role);

struct HVertex {
  HRole role;
  // Host vertex for N_x, N_y, Delta and Delta'. Copies of x get synthetic
  // ids n + i, which never index into the host graph.
  Vertex host;
};

// Edge classes E1..E8, stored 0-based.
inline constexpr std::size_t kEdgeClasses = 8;

// H is laid out so that mirrored roles share an index: left index a + i is
// z_i and right index a + i is z_i' (a = |N_x|); x-copies follow at
// a + alpha + i on both sides.
struct TransportBipartite {
  Edge host_edge;
  AmplyParams params;
  EdgeNeighborhoodPartition partition;
  std::vector<HVertex> left;
  std::vector<HVertex> right;
  Bipartite graph;
  std::array<std::vector<BiEdge>, kEdgeClasses> classes;

  std::size_t exclusive_count() const { return partition.nx.size(); }
  std::size_t delta_count() const { return partition.delta.size(); }
  std::size_t copy_count() const { return left.size() - exclusive_count() - delta_count(); }
  // Index of z_1 on the left and z_1' on the right.
  std::size_t first_z() const { return exclusive_count(); }
  std::string label(bool left_side, std::size_t index) const;
};

// Requires xy an edge, beta present and beta > alpha >= 1 (HypothesisError
// names the failing condition). The common neighbours are numbered in
// increasing host order, so z_1 is the smallest.
TransportBipartite build_transport_bipartite(const Graph& g, Vertex x, Vertex y, const AmplyParams& params);

struct DegreeCheck {
  bool pass = true;
  std::size_t expected = 0;
  std::vector<std::size_t> left_degrees;
  std::vector<std::size_t> right_degrees;
  // First vertex whose degree differs from expected.
  struct Offender {
    bool left_side;
    std::size_t index;
    std::size_t degree;
  };
  std::optional<Offender> offender;
};

// Every vertex of H must have degree beta - 1.
DegreeCheck check_h_regular(const TransportBipartite& h, const AmplyParams& params);

// v0 in N_x, t_1..t_j over Delta and the x-copies, w0 in N_y (H indices).
struct ReachableChain {
  std::size_t v0 = 0;
  std::vector<std::size_t> interior;
  std::size_t w0 = 0;
  std::size_t rho = 0;  // 1 + j: left-side vertices of the chain
  std::size_t k = 0;    // x-copies among the interior
};

// Follows matched edges from each v in N_x until the walk lands in N_y.
// One chain per N_x vertex, in N_x order. Throws InputError when `m` is not
// a perfect matching of H and ConsistencyError if the induced map
// N_x -> N_y is not a bijection.
std::vector<ReachableChain> reachable_map(const TransportBipartite& h, const Matching& m);

bool is_bijection(const TransportBipartite& h, const std::vector<ReachableChain>& chains);

struct ChainCheck {
  ReachableChain chain;
  Vertex v0_host = 0;
  Vertex w0_host = 0;
  int distance = 0;
  bool pass = false;  // distance <= rho - k
};

std::vector<ChainCheck> check_chain_distances(const Graph& g, const TransportBipartite& h, const Matching& m);

// The plan that keeps mass 1/(d+1) in place on Delta, x and y and moves each
// v in N_x to its chain endpoint. Requires z_1 z_1' in `m`.
TransportPlan build_pi0(const Graph& g, Vertex x, Vertex y, const TransportBipartite& h, const Matching& m);

struct ClassCheck {
  bool bijective = false;
  std::size_t chains = 0;
  std::size_t chains_passed = 0;
};

struct WitnessCertificate {
  TransportBipartite h;
  DegreeCheck regularity;
  std::vector<Matching> decomposition;
  std::vector<ClassCheck> class_checks;  // one per decomposition class
  std::size_t chosen_class = 0;          // the class holding z_1 z_1'
  std::vector<ChainCheck> chains;        // for the chosen class
  std::size_t rho_sum = 0;
  std::size_t k_total = 0;
  bool sum_bound_holds = false;  // rho_sum <= d + k_total - 2
  TransportPlan pi0;
  Rational pi0_cost;
  Rational cost_bound;  // (d-2)/(d+1)
  Rational kappa_lb;    // (d+1)/d * (1 - cost(pi0))
  Rational kappa;       // exact curvature
  bool lb_at_least_3_over_d = false;
  bool lb_at_most_kappa = false;

  bool decomposition_size_ok() const;
  bool all_classes_pass() const;
  bool holds() const;
};

// Runs the whole pipeline for one edge. Construction failures throw;
// every inequality is recorded in the certificate.
WitnessCertificate witness_curvature_bound(const Graph& g, Vertex x, Vertex y, const AmplyParams& params);
WitnessCertificate witness_curvature_bound(const Graph& g, Vertex x, Vertex y);

struct DenseMatchingCertificate {
  Bipartite e1_graph;  // (N_x, N_y) with the host edges between them
  std::vector<Vertex> nx;
  std::vector<Vertex> ny;
  std::size_t min_degree = 0;
  Matching matching;
  Rational kappa;  // (2 + alpha)/d
  Rational lly;    // exact curvature for comparison
  bool agrees() const { return kappa == lly; }
};

// Certificate that kappa = (2+alpha)/d when 2 beta - alpha >= d + 1: a
// perfect matching between N_x and N_y inside the host graph.
DenseMatchingCertificate dense_matching_certificate(const Graph& g, Vertex x, Vertex y, const AmplyParams& params);

}  // namespace amply

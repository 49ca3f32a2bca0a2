#include "amply/witness.hpp"

#include <algorithm>
#include <string>

#include "amply/error.hpp"

namespace amply {
namespace {

std::size_t classify(HRole l, HRole r, std::size_t li, std::size_t ri) {
  if (l == HRole::Nx && r == HRole::Ny) return 0;
  if (l == HRole::Nx && r == HRole::DeltaPrime) return 1;
  if (l == HRole::Delta && r == HRole::Ny) return 2;
  if (l == HRole::Delta && r == HRole::DeltaPrime) return li == ri ? 3 : 4;
  if (l == HRole::XCopy && r == HRole::DeltaPrime) return 5;
  if (l == HRole::Delta && r == HRole::XCopyPrime) return 6;
  if (l == HRole::XCopy && r == HRole::XCopyPrime) return 7;
  throw ConsistencyError("edge between roles with no class");
}

const std::size_t& require_beta(const AmplyParams& params) {
  if (!params.beta) throw HypothesisError("beta is undefined (no pair at distance 2)");
  return *params.beta;
}

}  // namespace

std::string to_string(HRole role) {
  switch (role) {
    case HRole::Nx: return "Nx";
    case HRole::Delta: return "Delta";
    case HRole::XCopy: return "xcopy";
    case HRole::Ny: return "Ny";
    case HRole::DeltaPrime: return "Delta'";
    case HRole::XCopyPrime: return "xcopy'";
  }
  return "?";
}

std::string TransportBipartite::label(bool left_side, std::size_t index) const {
  const HVertex& v = left_side ? left.at(index) : right.at(index);
  const std::size_t a = exclusive_count();
  const std::size_t alpha = delta_count();
  switch (v.role) {
    case HRole::Nx:
    case HRole::Ny: return std::to_string(v.host);
    case HRole::Delta: return "z" + std::to_string(index - a + 1) + "=" + std::to_string(v.host);
    case HRole::DeltaPrime: return "z" + std::to_string(index - a + 1) + "'";
    case HRole::XCopy: return "x" + std::to_string(index - a - alpha + 1);
    case HRole::XCopyPrime: return "x" + std::to_string(index - a - alpha + 1) + "'";
  }
  return "?";
}

TransportBipartite build_transport_bipartite(const Graph& g, Vertex x, Vertex y, const AmplyParams& params) {
  const std::size_t beta = require_beta(params);
  if (params.alpha < 1) throw HypothesisError("alpha >= 1 fails (alpha = 0)");
  if (beta <= params.alpha) {
    throw HypothesisError("beta > alpha fails (alpha = " + std::to_string(params.alpha) +
                          ", beta = " + std::to_string(beta) + ")");
  }

  TransportBipartite h;
  h.host_edge = {x, y};
  h.params = params;
  h.partition = edge_partition(g, x, y);
  const auto& part = h.partition;
  if (part.delta.size() != params.alpha) {
    throw HypothesisError("edge has " + std::to_string(part.delta.size()) + " common neighbours, alpha is " +
                          std::to_string(params.alpha));
  }
  if (part.nx.size() != part.ny.size()) throw HypothesisError("|N_x| != |N_y|: graph is not regular");

  const std::size_t a = part.nx.size();
  const std::size_t alpha = params.alpha;
  const std::size_t copies = beta - alpha - 1;
  for (Vertex v : part.nx) h.left.push_back({HRole::Nx, v});
  for (Vertex z : part.delta) h.left.push_back({HRole::Delta, z});
  for (std::size_t i = 0; i < copies; ++i) h.left.push_back({HRole::XCopy, g.order() + i});
  for (Vertex w : part.ny) h.right.push_back({HRole::Ny, w});
  for (Vertex z : part.delta) h.right.push_back({HRole::DeltaPrime, z});
  for (std::size_t i = 0; i < copies; ++i) h.right.push_back({HRole::XCopyPrime, g.order() + i});

  std::vector<BiEdge> edges;
  // Host adjacency between N_x u Delta and N_y u Delta' (classes 1, 2, 3, 5)
  // plus the diagonal z_i z_i' (class 4).
  for (std::size_t l = 0; l < a + alpha; ++l) {
    for (std::size_t r = 0; r < a + alpha; ++r) {
      bool diagonal = l >= a && l == r;
      if (diagonal || g.adjacent(h.left[l].host, h.right[r].host)) edges.emplace_back(l, r);
    }
  }
  // x-copies: complete to Delta' / Delta and to each other (classes 6, 7, 8).
  for (std::size_t i = 0; i < copies; ++i) {
    for (std::size_t j = 0; j < alpha; ++j) {
      edges.emplace_back(a + alpha + i, a + j);
      edges.emplace_back(a + j, a + alpha + i);
    }
    for (std::size_t j = 0; j < copies; ++j) edges.emplace_back(a + alpha + i, a + alpha + j);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [l, r] : edges) h.classes[classify(h.left[l].role, h.right[r].role, l, r)].emplace_back(l, r);
  h.graph = Bipartite(h.left.size(), h.right.size(), edges);
  return h;
}

DegreeCheck check_h_regular(const TransportBipartite& h, const AmplyParams& params) {
  DegreeCheck out;
  out.expected = require_beta(params) - 1;
  for (std::size_t l = 0; l < h.graph.left_size(); ++l) out.left_degrees.push_back(h.graph.left_degree(l));
  out.right_degrees = h.graph.right_degrees();
  for (std::size_t l = 0; l < out.left_degrees.size() && !out.offender; ++l) {
    if (out.left_degrees[l] != out.expected) out.offender = DegreeCheck::Offender{true, l, out.left_degrees[l]};
  }
  for (std::size_t r = 0; r < out.right_degrees.size() && !out.offender; ++r) {
    if (out.right_degrees[r] != out.expected) out.offender = DegreeCheck::Offender{false, r, out.right_degrees[r]};
  }
  out.pass = !out.offender;
  return out;
}

std::vector<ReachableChain> reachable_map(const TransportBipartite& h, const Matching& m) {
  if (!m.is_perfect_for(h.graph)) throw InputError("reachable_map: matching is not perfect on H");
  const std::size_t a = h.exclusive_count();
  std::vector<ReachableChain> chains;
  chains.reserve(a);
  for (std::size_t v = 0; v < a; ++v) {
    ReachableChain chain;
    chain.v0 = v;
    std::size_t r = m.mate_of_left(v);
    // Mirrored indices: landing on z_i' or x_i' continues from z_i or x_i.
    while (r >= a) {
      if (chain.interior.size() >= h.left.size()) throw ConsistencyError("reachable_map: chain does not terminate");
      chain.interior.push_back(r);
      if (h.left[r].role == HRole::XCopy) ++chain.k;
      r = m.mate_of_left(r);
    }
    chain.w0 = r;
    chain.rho = 1 + chain.interior.size();
    chains.push_back(std::move(chain));
  }
  if (!is_bijection(h, chains)) throw ConsistencyError("reachable_map: induced map N_x -> N_y is not a bijection");
  return chains;
}

bool is_bijection(const TransportBipartite& h, const std::vector<ReachableChain>& chains) {
  const std::size_t a = h.exclusive_count();
  if (chains.size() != a) return false;
  std::vector<bool> hit(a, false);
  for (const auto& c : chains) {
    if (c.w0 >= a || hit[c.w0]) return false;
    hit[c.w0] = true;
  }
  return true;
}

std::vector<ChainCheck> check_chain_distances(const Graph& g, const TransportBipartite& h, const Matching& m) {
  std::vector<ChainCheck> out;
  for (auto& chain : reachable_map(h, m)) {
    ChainCheck check;
    check.v0_host = h.left[chain.v0].host;
    check.w0_host = h.right[chain.w0].host;
    auto d = distance(g, check.v0_host, check.w0_host);
    if (!d) throw InputError("chain endpoints are disconnected");
    check.distance = *d;
    check.pass = chain.rho >= chain.k && static_cast<std::size_t>(check.distance) <= chain.rho - chain.k;
    check.chain = std::move(chain);
    out.push_back(std::move(check));
  }
  return out;
}

TransportPlan build_pi0(const Graph& g, Vertex x, Vertex y, const TransportBipartite& h, const Matching& m) {
  if (h.host_edge != Edge{x, y}) throw InputError("build_pi0: H was built for a different edge");
  const std::size_t z1 = h.first_z();
  if (z1 >= h.left.size() || !m.contains(z1, z1)) throw InputError("build_pi0: matching does not contain z1 z1'");
  const auto d = static_cast<std::int64_t>(g.degree(x));
  const Rational share(1, d + 1);

  TransportPlan plan;
  plan[{x, x}] = share;
  plan[{y, y}] = share;
  for (Vertex z : h.partition.delta) plan[{z, z}] = share;
  for (const auto& chain : reachable_map(h, m)) plan[{h.left[chain.v0].host, h.right[chain.w0].host}] += share;

  if (!is_coupling(plan, mu_p(g, x, share), mu_p(g, y, share))) {
    throw ConsistencyError("build_pi0: marginals do not match the idle measures");
  }
  return plan;
}

bool WitnessCertificate::decomposition_size_ok() const {
  return h.params.beta && decomposition.size() == *h.params.beta - 1;
}

bool WitnessCertificate::all_classes_pass() const {
  return std::all_of(class_checks.begin(), class_checks.end(),
                     [](const ClassCheck& c) { return c.bijective && c.chains == c.chains_passed; });
}

bool WitnessCertificate::holds() const {
  bool chains_ok = std::all_of(chains.begin(), chains.end(), [](const ChainCheck& c) { return c.pass; });
  return regularity.pass && decomposition_size_ok() && all_classes_pass() && chains_ok && sum_bound_holds &&
         pi0_cost <= cost_bound && lb_at_least_3_over_d && lb_at_most_kappa;
}

WitnessCertificate witness_curvature_bound(const Graph& g, Vertex x, Vertex y, const AmplyParams& params) {
  WitnessCertificate cert;
  cert.h = build_transport_bipartite(g, x, y, params);
  cert.regularity = check_h_regular(cert.h, params);
  if (!cert.regularity.pass) {
    // No decomposition exists without regularity; report what we have.
    return cert;
  }
  cert.decomposition = konig_decomposition(cert.h.graph);

  const std::size_t z1 = cert.h.first_z();
  bool found = false;
  for (std::size_t i = 0; i < cert.decomposition.size(); ++i) {
    const Matching& m = cert.decomposition[i];
    ClassCheck cc;
    auto checks = check_chain_distances(g, cert.h, m);
    std::vector<ReachableChain> chains;
    for (const auto& c : checks) chains.push_back(c.chain);
    cc.bijective = is_bijection(cert.h, chains);
    cc.chains = checks.size();
    cc.chains_passed = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.pass; }));
    cert.class_checks.push_back(cc);
    if (!found && m.contains(z1, z1)) {
      found = true;
      cert.chosen_class = i;
      cert.chains = std::move(checks);
    }
  }
  if (!found) throw ConsistencyError("no decomposition class holds z1 z1'");

  const Matching& m = cert.decomposition[cert.chosen_class];
  const std::size_t d = params.d;
  for (const auto& c : cert.chains) {
    cert.rho_sum += c.chain.rho;
    cert.k_total += c.chain.k;
  }
  cert.sum_bound_holds = cert.rho_sum + 2 <= d + cert.k_total;

  const auto dd = static_cast<std::int64_t>(d);
  cert.pi0 = build_pi0(g, x, y, cert.h, m);
  cert.pi0_cost = plan_cost(g, cert.pi0);
  cert.cost_bound = Rational(dd - 2, dd + 1);
  cert.kappa_lb = Rational(dd + 1, dd) * (Rational(1) - cert.pi0_cost);
  cert.kappa = lly_curvature(g, x, y);
  cert.lb_at_least_3_over_d = cert.kappa_lb >= Rational(3, dd);
  cert.lb_at_most_kappa = cert.kappa_lb <= cert.kappa;
  return cert;
}

WitnessCertificate witness_curvature_bound(const Graph& g, Vertex x, Vertex y) {
  return witness_curvature_bound(g, x, y, require_amply_params(g));
}

DenseMatchingCertificate dense_matching_certificate(const Graph& g, Vertex x, Vertex y, const AmplyParams& params) {
  const std::size_t beta = require_beta(params);
  if (2 * beta < params.alpha + params.d + 1) {
    throw HypothesisError("2 beta - alpha >= d + 1 fails for " + params.str());
  }
  auto part = edge_partition(g, x, y);
  if (part.nx.size() != part.ny.size()) throw HypothesisError("|N_x| != |N_y|: graph is not regular");

  DenseMatchingCertificate cert;
  cert.nx = part.nx;
  cert.ny = part.ny;
  const std::size_t a = part.nx.size();
  std::vector<BiEdge> edges;
  for (std::size_t l = 0; l < a; ++l) {
    for (std::size_t r = 0; r < a; ++r) {
      if (g.adjacent(part.nx[l], part.ny[r])) edges.emplace_back(l, r);
    }
  }
  cert.e1_graph = Bipartite(a, a, edges);

  if (a > 0) {
    std::size_t min_deg = cert.e1_graph.left_degree(0);
    for (std::size_t l = 0; l < a; ++l) min_deg = std::min(min_deg, cert.e1_graph.left_degree(l));
    for (std::size_t deg : cert.e1_graph.right_degrees()) min_deg = std::min(min_deg, deg);
    cert.min_degree = min_deg;
    if (min_deg + params.alpha + 1 < beta || 2 * min_deg < a) {
      throw ConsistencyError("exclusive-neighbour graph of (" + std::to_string(x) + ", " + std::to_string(y) +
                             ") has minimum degree " + std::to_string(min_deg) + " below the guaranteed bound");
    }
    cert.matching = dense_perfect_matching(cert.e1_graph);
  } else {
    cert.matching = Matching(0, 0);
  }

  const auto d = static_cast<std::int64_t>(params.d);
  cert.kappa = Rational(2 + static_cast<std::int64_t>(params.alpha), d);
  cert.lly = lly_curvature(g, x, y);
  return cert;
}

}  // namespace amply

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amply/graph.hpp"
#include "amply/rational.hpp"

namespace amply {

// One curvature claim on one edge: kappa <relation> bound.
struct EdgeCheck {
  std::string name;
  std::string relation;  // "=", ">=", "<="
  Rational bound;
  bool pass = false;
  friend bool operator==(const EdgeCheck&, const EdgeCheck&) = default;
};

struct EdgeRow {
  Edge edge;
  Rational kappa;
  std::vector<EdgeCheck> checks;
  bool pass = true;
  friend bool operator==(const EdgeRow&, const EdgeRow&) = default;
};

// A bound on a scalar quantity. Comparison rows are printed, never asserted.
struct BoundRow {
  std::string name;
  bool applicable = false;
  bool asserted = false;
  std::string bound;  // textual, exact
  bool holds = false;
  std::string note;
  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct WitnessSummary {
  bool run = false;
  std::size_t edges_checked = 0;
  std::size_t h_regular = 0;            // H is (beta-1)-regular
  std::size_t decomposition_sizes_ok = 0;  // exactly beta-1 classes
  std::size_t classes_checked = 0;
  std::size_t classes_bijective = 0;
  std::size_t chains_checked = 0;
  std::size_t chains_passed = 0;
  std::size_t sum_bounds_passed = 0;
  std::size_t cost_bounds_passed = 0;  // cost(pi0) <= (d-2)/(d+1)
  std::size_t lower_bounds_passed = 0;  // 3/d <= kappa_lb <= kappa
  std::optional<Rational> max_pi0_cost;
  std::optional<Rational> min_kappa_lb;
  bool pass = true;
  friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

struct DenseMatchingSummary {
  bool run = false;
  std::size_t edges_checked = 0;
  std::size_t perfect_matchings = 0;
  std::size_t agreements = 0;  // (2+alpha)/d equals the exact curvature
  bool pass = true;
  friend bool operator==(const DenseMatchingSummary&, const DenseMatchingSummary&) = default;
};

struct ConferenceRow {
  bool applicable = false;
  std::size_t gamma = 0;
  Rational lower_bound;   // 3/(2 gamma), asserted per edge
  Rational conjectured;   // 1/2 + 1/(2 gamma), reported only
  bool matches_conjecture = false;
  friend bool operator==(const ConferenceRow&, const ConferenceRow&) = default;
};

struct VerificationReport {
  std::string graph_id;
  AmplyParams params;
  std::vector<std::string> notes;
  std::vector<EdgeRow> edges;
  std::optional<Rational> kappa_min;
  std::optional<Rational> kappa_max;
  int diameter = 0;
  std::vector<BoundRow> diameter_bounds;
  double sigma_second = 0.0;  // rounded to 12 significant digits
  double sigma_top = 0.0;
  double lambda1 = 0.0;
  double spectral_residual = 0.0;
  std::vector<BoundRow> spectral_bounds;
  WitnessSummary witness;
  DenseMatchingSummary dense_matching;
  ConferenceRow conference;
  bool pass = true;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::size_t spectrum_cap = 4096;
};

// Checks every curvature, diameter and eigenvalue claim that applies to the
// detected parameter regime. Throws HypothesisError when the graph is not
// amply regular and InputError when it is disconnected.
VerificationReport verify_graph(const Graph& g, const std::string& graph_id, const VerifyOptions& options = {});

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);
void write_report_text(std::ostream& out, const VerificationReport& report);

// Rounds to 12 significant digits, the precision used in reports.
double round_report_double(double value);
std::string format_report_double(double value);

}  // namespace amply

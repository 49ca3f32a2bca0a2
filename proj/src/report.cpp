#include "amply/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "amply/curvature.hpp"
#include "amply/error.hpp"
#include "amply/parallel.hpp"
#include "amply/spectral.hpp"
#include "amply/witness.hpp"
#include "json.hpp"

namespace amply {
namespace {

using Json = nlohmann::ordered_json;

Rational ratio(std::size_t a, std::size_t b) {
  return Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

EdgeCheck make_check(std::string name, const Rational& kappa, std::string relation, Rational bound) {
  bool pass = relation == "=" ? kappa == bound : relation == ">=" ? kappa >= bound : kappa <= bound;
  return {std::move(name), std::move(relation), bound, pass};
}

BoundRow asserted_row(std::string name, bool applicable, std::string bound, bool holds, std::string note = {}) {
  return {std::move(name), applicable, true, applicable ? std::move(bound) : std::string(), applicable && holds,
          std::move(note)};
}

BoundRow comparison_row(std::string name, bool applicable, std::string bound, bool holds, std::string note) {
  return {std::move(name), applicable, false, applicable ? std::move(bound) : std::string(), applicable && holds,
          std::move(note)};
}

bool rows_pass(const std::vector<BoundRow>& rows) {
  for (const auto& r : rows) {
    if (r.asserted && r.applicable && !r.holds) return false;
  }
  return true;
}

}  // namespace

double round_report_double(double value) { return std::strtod(format_report_double(value).c_str(), nullptr); }

std::string format_report_double(double value) {
  if (value == 0.0) value = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

VerificationReport verify_graph(const Graph& g, const std::string& graph_id, const VerifyOptions& options) {
  VerificationReport report;
  report.graph_id = graph_id;
  report.params = require_amply_params(g);
  const AmplyParams& p = report.params;
  const std::size_t d = p.d;
  const std::size_t alpha = p.alpha;
  const std::optional<std::size_t> beta = p.beta;
  const bool girth3_main = beta && *beta > alpha && alpha >= 1;
  const bool dense = beta && 2 * *beta >= alpha + d + 1;
  if (!beta) report.notes.push_back("beta undefined (no pair at distance 2); beta-dependent claims not applicable");

  if (beta && *beta >= 2 && 4 * *beta + 1 == p.n && d == 2 * *beta && alpha + 1 == *beta) {
    const std::size_t gamma = *beta;
    report.conference.applicable = true;
    report.conference.gamma = gamma;
    report.conference.lower_bound = ratio(3, 2 * gamma);
    report.conference.conjectured = Rational(1, 2) + ratio(1, 2 * gamma);
  }

  // Curvature, per edge.
  CurvatureTable table = curvature_all_edges(g, options.threads);
  report.kappa_min = table.min;
  report.kappa_max = table.max;
  for (const auto& row : table.rows) {
    EdgeRow er{row.edge, row.kappa, {}, true};
    const Rational& k = row.kappa;
    if (beta) er.checks.push_back(make_check("upper_bound", k, "<=", ratio(2 + alpha, d)));
    if (alpha == 0 && beta && *beta >= 2) er.checks.push_back(make_check("girth4_exact", k, "=", ratio(2, d)));
    if (alpha == 1 && beta && *beta > 1) er.checks.push_back(make_check("alpha1_exact", k, "=", ratio(3, d)));
    if (alpha >= 1 && beta && *beta == alpha + 1) {
      er.checks.push_back(make_check("alpha_beta_minus_one_lower", k, ">=", ratio(2, d)));
    }
    if (beta && alpha == *beta && alpha > 1) er.checks.push_back(make_check("alpha_eq_beta_lower", k, ">=", ratio(2, d)));
    if (girth3_main) er.checks.push_back(make_check("girth3_lower", k, ">=", ratio(3, d)));
    if (dense) er.checks.push_back(make_check("dense_matching_exact", k, "=", ratio(2 + alpha, d)));
    if (report.conference.applicable) {
      er.checks.push_back(make_check("conference_lower", k, ">=", report.conference.lower_bound));
    }
    for (const auto& c : er.checks) er.pass = er.pass && c.pass;
    report.edges.push_back(std::move(er));
  }
  if (report.conference.applicable) {
    report.conference.matches_conjecture = table.min == report.conference.conjectured &&
                                           table.max == report.conference.conjectured;
  }

  const auto edges = g.edges();
  if (girth3_main) {
    std::vector<WitnessCertificate> certs(edges.size());
    parallel_for(edges.size(), options.threads, [&](std::size_t i) {
      certs[i] = witness_curvature_bound(g, edges[i].first, edges[i].second, p);
    });
    WitnessSummary& w = report.witness;
    w.run = true;
    for (const auto& c : certs) {
      ++w.edges_checked;
      w.h_regular += c.regularity.pass;
      w.decomposition_sizes_ok += c.decomposition_size_ok();
      w.classes_checked += c.class_checks.size();
      for (const auto& cc : c.class_checks) {
        w.classes_bijective += cc.bijective;
        w.chains_checked += cc.chains;
        w.chains_passed += cc.chains_passed;
      }
      w.sum_bounds_passed += c.sum_bound_holds;
      w.cost_bounds_passed += c.pi0_cost <= c.cost_bound;
      w.lower_bounds_passed += c.lb_at_least_3_over_d && c.lb_at_most_kappa;
      if (!w.max_pi0_cost || c.pi0_cost > *w.max_pi0_cost) w.max_pi0_cost = c.pi0_cost;
      if (!w.min_kappa_lb || c.kappa_lb < *w.min_kappa_lb) w.min_kappa_lb = c.kappa_lb;
      w.pass = w.pass && c.holds();
    }
  }
  if (dense) {
    std::vector<DenseMatchingCertificate> certs(edges.size());
    parallel_for(edges.size(), options.threads, [&](std::size_t i) {
      certs[i] = dense_matching_certificate(g, edges[i].first, edges[i].second, p);
    });
    DenseMatchingSummary& s = report.dense_matching;
    s.run = true;
    for (const auto& c : certs) {
      ++s.edges_checked;
      bool perfect = c.matching.is_perfect_for(c.e1_graph) || c.nx.empty();
      s.perfect_matchings += perfect;
      s.agreements += c.agrees();
      s.pass = s.pass && perfect && c.agrees();
    }
  }

  // Diameter.
  report.diameter = diameter(g);
  const int diam = report.diameter;
  const auto di = static_cast<long long>(d);
  {
    bool app = beta && *beta != 1 && *beta >= alpha;
    report.diameter_bounds.push_back(asserted_row("diam_le_d", app, std::to_string(d), diam <= di));
  }
  {
    long long bound = static_cast<long long>(2 * d / 3);
    report.diameter_bounds.push_back(
        asserted_row("diam_le_floor_two_thirds_d", girth3_main, std::to_string(bound), diam <= bound));
  }
  {
    // Discrete Bonnet-Myers: diam <= 2/kappa_min for positive curvature.
    bool app = table.min > Rational(0);
    Rational bound = app ? Rational(2) / table.min : Rational(0);
    report.diameter_bounds.push_back(asserted_row("diam_le_2_over_kappa_min", app, bound.str(), Rational(diam) <= bound));
  }
  if (beta) {
    const auto b = static_cast<long long>(*beta);
    const auto a = static_cast<long long>(alpha);
    bool app3 = d >= 3 && b != 1 && b > a;
    report.diameter_bounds.push_back(comparison_row("diam_le_d_minus_beta_plus_2", app3, std::to_string(di - b + 2),
                                                    diam <= di - b + 2,
                                                    "comparison only; distance-regular hypothesis not verified"));
    bool app4 = b != 1 && b >= a && diam >= 4;
    report.diameter_bounds.push_back(comparison_row("diam_le_d_minus_2beta_plus_4", app4, std::to_string(di - 2 * b + 4),
                                                    diam <= di - 2 * b + 4, "comparison only; needs diam >= 4"));
    bool app5 = b >= std::max<long long>(3, a) && diam >= 6;
    Rational rhs = (Rational(3) - Rational(2, b)) * Rational(b - 3 + diam / 2);
    report.diameter_bounds.push_back(comparison_row("d_ge_degree_bound_from_diameter", app5, rhs.str(),
                                                    Rational(di) >= rhs,
                                                    "comparison only; needs beta >= max(3, alpha) and diam >= 6"));
  }

  // Spectrum.
  if (g.order() <= options.spectrum_cap) {
    Spectrum spec = adjacency_spectrum(g, options.spectrum_cap);
    const double sigma = second_largest(spec);
    const double top = spec.eigenvalues.back();
    const double l1 = 1.0 - sigma / static_cast<double>(d);
    report.sigma_second = round_report_double(sigma);
    report.sigma_top = round_report_double(top);
    report.lambda1 = round_report_double(l1);
    report.spectral_residual = round_report_double(spec.residual);
    const double dd = static_cast<double>(d);
    report.spectral_bounds.push_back(
        asserted_row("top_eigenvalue_eq_d", true, std::to_string(d), std::abs(top - dd) <= kSpectralTolerance));
    bool app2 = beta && *beta != 1 && *beta >= alpha;
    report.spectral_bounds.push_back(
        asserted_row("sigma_le_d_minus_2", app2, std::to_string(di - 2), sigma <= dd - 2 + kSpectralTolerance));
    report.spectral_bounds.push_back(
        asserted_row("sigma_le_d_minus_3", girth3_main, std::to_string(di - 3), sigma <= dd - 3 + kSpectralTolerance));
    report.spectral_bounds.push_back(asserted_row("lambda1_ge_kappa_min", true, table.min.str(),
                                                  l1 >= table.min.to_double() - kSpectralTolerance));
  } else {
    report.notes.push_back("spectrum skipped: graph exceeds the spectrum size cap");
  }

  report.pass = rows_pass(report.diameter_bounds) && rows_pass(report.spectral_bounds) && report.witness.pass &&
                report.dense_matching.pass;
  for (const auto& e : report.edges) report.pass = report.pass && e.pass;
  return report;
}

namespace {

Json opt_rational(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }
std::optional<Rational> parse_opt_rational(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational::parse(j.get<std::string>());
}

Json bound_rows_json(const std::vector<BoundRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"name", r.name}, {"applicable", r.applicable}, {"asserted", r.asserted}, {"bound", r.bound},
                   {"holds", r.holds}, {"note", r.note}});
  }
  return out;
}

std::vector<BoundRow> bound_rows_from(const Json& j) {
  std::vector<BoundRow> out;
  for (const auto& r : j) {
    out.push_back({r.at("name").get<std::string>(), r.at("applicable").get<bool>(), r.at("asserted").get<bool>(),
                   r.at("bound").get<std::string>(), r.at("holds").get<bool>(), r.at("note").get<std::string>()});
  }
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  Json j;
  j["graph"] = r.graph_id;
  const auto& p = r.params;
  j["params"] = {{"n", p.n},
                 {"d", p.d},
                 {"alpha", p.alpha},
                 {"beta", p.beta ? Json(*p.beta) : Json(nullptr)},
                 {"girth", p.girth ? Json(*p.girth) : Json(nullptr)},
                 {"connected", p.connected}};
  j["notes"] = r.notes;
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    Json checks = Json::array();
    for (const auto& c : e.checks) {
      checks.push_back({{"name", c.name}, {"relation", c.relation}, {"bound", c.bound.str()}, {"pass", c.pass}});
    }
    edges.push_back({{"edge", {e.edge.first, e.edge.second}}, {"kappa", e.kappa.str()}, {"checks", checks}, {"pass", e.pass}});
  }
  j["edges"] = edges;
  j["kappa_min"] = opt_rational(r.kappa_min);
  j["kappa_max"] = opt_rational(r.kappa_max);
  j["diameter"] = {{"value", r.diameter}, {"bounds", bound_rows_json(r.diameter_bounds)}};
  j["spectrum"] = {{"sigma_second", format_report_double(r.sigma_second)},
                   {"sigma_top", format_report_double(r.sigma_top)},
                   {"lambda1", format_report_double(r.lambda1)},
                   {"residual", format_report_double(r.spectral_residual)},
                   {"bounds", bound_rows_json(r.spectral_bounds)}};
  const auto& w = r.witness;
  j["witness"] = {{"run", w.run},
                  {"edges_checked", w.edges_checked},
                  {"h_regular", w.h_regular},
                  {"decomposition_sizes_ok", w.decomposition_sizes_ok},
                  {"classes_checked", w.classes_checked},
                  {"classes_bijective", w.classes_bijective},
                  {"chains_checked", w.chains_checked},
                  {"chains_passed", w.chains_passed},
                  {"sum_bounds_passed", w.sum_bounds_passed},
                  {"cost_bounds_passed", w.cost_bounds_passed},
                  {"lower_bounds_passed", w.lower_bounds_passed},
                  {"max_pi0_cost", opt_rational(w.max_pi0_cost)},
                  {"min_kappa_lb", opt_rational(w.min_kappa_lb)},
                  {"pass", w.pass}};
  const auto& s = r.dense_matching;
  j["dense_matching"] = {{"run", s.run},
                         {"edges_checked", s.edges_checked},
                         {"perfect_matchings", s.perfect_matchings},
                         {"agreements", s.agreements},
                         {"pass", s.pass}};
  const auto& c = r.conference;
  j["conference"] = {{"applicable", c.applicable},
                     {"gamma", c.gamma},
                     {"lower_bound", c.lower_bound.str()},
                     {"conjectured", c.conjectured.str()},
                     {"matches_conjecture", c.matches_conjecture}};
  j["pass"] = r.pass;
  return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
  try {
    VerificationReport r;
    r.graph_id = j.at("graph").get<std::string>();
    const auto& p = j.at("params");
    r.params.n = p.at("n").get<std::size_t>();
    r.params.d = p.at("d").get<std::size_t>();
    r.params.alpha = p.at("alpha").get<std::size_t>();
    if (!p.at("beta").is_null()) r.params.beta = p.at("beta").get<std::size_t>();
    if (!p.at("girth").is_null()) r.params.girth = p.at("girth").get<int>();
    r.params.connected = p.at("connected").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      EdgeRow row;
      row.edge = {e.at("edge").at(0).get<Vertex>(), e.at("edge").at(1).get<Vertex>()};
      row.kappa = Rational::parse(e.at("kappa").get<std::string>());
      for (const auto& c : e.at("checks")) {
        row.checks.push_back({c.at("name").get<std::string>(), c.at("relation").get<std::string>(),
                              Rational::parse(c.at("bound").get<std::string>()), c.at("pass").get<bool>()});
      }
      row.pass = e.at("pass").get<bool>();
      r.edges.push_back(std::move(row));
    }
    r.kappa_min = parse_opt_rational(j.at("kappa_min"));
    r.kappa_max = parse_opt_rational(j.at("kappa_max"));
    r.diameter = j.at("diameter").at("value").get<int>();
    r.diameter_bounds = bound_rows_from(j.at("diameter").at("bounds"));
    const auto& sp = j.at("spectrum");
    auto num = [&](const char* key) { return std::strtod(sp.at(key).get<std::string>().c_str(), nullptr); };
    r.sigma_second = num("sigma_second");
    r.sigma_top = num("sigma_top");
    r.lambda1 = num("lambda1");
    r.spectral_residual = num("residual");
    r.spectral_bounds = bound_rows_from(sp.at("bounds"));
    const auto& w = j.at("witness");
    r.witness.run = w.at("run").get<bool>();
    r.witness.edges_checked = w.at("edges_checked").get<std::size_t>();
    r.witness.h_regular = w.at("h_regular").get<std::size_t>();
    r.witness.decomposition_sizes_ok = w.at("decomposition_sizes_ok").get<std::size_t>();
    r.witness.classes_checked = w.at("classes_checked").get<std::size_t>();
    r.witness.classes_bijective = w.at("classes_bijective").get<std::size_t>();
    r.witness.chains_checked = w.at("chains_checked").get<std::size_t>();
    r.witness.chains_passed = w.at("chains_passed").get<std::size_t>();
    r.witness.sum_bounds_passed = w.at("sum_bounds_passed").get<std::size_t>();
    r.witness.cost_bounds_passed = w.at("cost_bounds_passed").get<std::size_t>();
    r.witness.lower_bounds_passed = w.at("lower_bounds_passed").get<std::size_t>();
    r.witness.max_pi0_cost = parse_opt_rational(w.at("max_pi0_cost"));
    r.witness.min_kappa_lb = parse_opt_rational(w.at("min_kappa_lb"));
    r.witness.pass = w.at("pass").get<bool>();
    const auto& s = j.at("dense_matching");
    r.dense_matching.run = s.at("run").get<bool>();
    r.dense_matching.edges_checked = s.at("edges_checked").get<std::size_t>();
    r.dense_matching.perfect_matchings = s.at("perfect_matchings").get<std::size_t>();
    r.dense_matching.agreements = s.at("agreements").get<std::size_t>();
    r.dense_matching.pass = s.at("pass").get<bool>();
    const auto& c = j.at("conference");
    r.conference.applicable = c.at("applicable").get<bool>();
    r.conference.gamma = c.at("gamma").get<std::size_t>();
    r.conference.lower_bound = Rational::parse(c.at("lower_bound").get<std::string>());
    r.conference.conjectured = Rational::parse(c.at("conjectured").get<std::string>());
    r.conference.matches_conjecture = c.at("matches_conjecture").get<bool>();
    r.pass = j.at("pass").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("report JSON missing or mistyped field: ") + e.what());
  }
}

void write_report_text(std::ostream& out, const VerificationReport& r) {
  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  out << "graph " << r.graph_id << "  params " << r.params.str() << "  girth "
      << (r.params.girth ? std::to_string(*r.params.girth) : std::string("-")) << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';

  out << "\ncurvature (" << r.edges.size() << " edges)";
  if (r.kappa_min) out << "  min " << r.kappa_min->str() << "  max " << r.kappa_max->str();
  out << '\n';
  for (const auto& e : r.edges) {
    out << "  " << e.edge.first << ' ' << e.edge.second << "  kappa " << e.kappa.str();
    for (const auto& c : e.checks) {
      out << "  [" << c.name << ' ' << c.relation << ' ' << c.bound.str() << (c.pass ? "" : " FAIL") << ']';
    }
    out << "  " << verdict(e.pass) << '\n';
  }

  auto bounds = [&](const std::vector<BoundRow>& rows) {
    for (const auto& b : rows) {
      out << "  " << b.name << ": ";
      if (!b.applicable) {
        out << "not applicable";
      } else {
        out << "bound " << b.bound << "  " << (b.asserted ? verdict(b.holds) : (b.holds ? "holds" : "does not hold"));
      }
      if (!b.note.empty()) out << "  (" << b.note << ')';
      out << '\n';
    }
  };
  out << "\ndiameter " << r.diameter << '\n';
  bounds(r.diameter_bounds);
  out << "\nspectrum  sigma_{n-1} " << format_report_double(r.sigma_second) << "  sigma_n "
      << format_report_double(r.sigma_top) << "  lambda1 " << format_report_double(r.lambda1) << "  residual "
      << format_report_double(r.spectral_residual) << '\n';
  bounds(r.spectral_bounds);

  if (r.witness.run) {
    const auto& w = r.witness;
    out << "\nwitness pipeline  edges " << w.edges_checked << "  H regular " << w.h_regular << "  class counts ok "
        << w.decomposition_sizes_ok << "  bijective classes " << w.classes_bijective << '/' << w.classes_checked
        << "  chains " << w.chains_passed << '/' << w.chains_checked << "  sum bounds " << w.sum_bounds_passed
        << "  cost bounds " << w.cost_bounds_passed << "  lower bounds " << w.lower_bounds_passed;
    if (w.max_pi0_cost) out << "  max cost(pi0) " << w.max_pi0_cost->str() << "  min kappa_lb " << w.min_kappa_lb->str();
    out << "  " << verdict(w.pass) << '\n';
  }
  if (r.dense_matching.run) {
    const auto& s = r.dense_matching;
    out << "\ndense matching certificate  edges " << s.edges_checked << "  perfect " << s.perfect_matchings
        << "  agree " << s.agreements << "  " << verdict(s.pass) << '\n';
  }
  if (r.conference.applicable) {
    const auto& c = r.conference;
    out << "\nconference graph  gamma " << c.gamma << "  asserted lower bound " << c.lower_bound.str()
        << "  conjectured " << c.conjectured.str() << " (not asserted; computed "
        << (c.matches_conjecture ? "matches" : "differs") << ")\n";
  }
  out << "\noverall " << verdict(r.pass) << '\n';
}

}  // namespace amply

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "amply/curvature.hpp"
#include "amply/error.hpp"
#include "amply/generators.hpp"
#include "amply/graph.hpp"
#include "amply/report.hpp"
#include "amply/search.hpp"
#include "amply/spectral.hpp"
#include "amply/witness.hpp"
#include "json.hpp"

namespace amply::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  unsigned threads = 1;
  std::uint64_t seed = 0;  // reserved; nothing here is randomised
  std::size_t size_cap = kDefaultSizeCap;
};

Graph read_graph(const std::string& path, std::istream& in) {
  if (path == "-") return load_edge_list(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return load_edge_list(file);
}

std::string graph_id(const std::string& path) {
  return path == "-" ? std::string("stdin") : std::filesystem::path(path).filename().string();
}

std::size_t to_size(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-') {
    throw InputError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

Graph generate(const std::string& family, const std::vector<std::string>& args, std::size_t cap) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n) {
      throw InputError("gen " + family + " takes " + std::to_string(n) + " argument(s), got " +
                       std::to_string(args.size()));
    }
  };
  auto arg = [&](std::size_t i) { return to_size(args[i], family.c_str()); };
  if (family == "hamming") {
    arity(2);
    return gen_hamming(arg(0), arg(1), cap);
  }
  if (family == "hypercube") {
    arity(1);
    return gen_hypercube(arg(0), cap);
  }
  if (family == "paley") {
    arity(1);
    return gen_paley(arg(0), cap);
  }
  if (family == "shrikhande") {
    arity(0);
    return gen_shrikhande();
  }
  if (family == "cocktail") {
    arity(1);
    return gen_cocktail(arg(0), cap);
  }
  if (family == "complete") {
    arity(1);
    return gen_complete(arg(0), cap);
  }
  if (family == "cycle") {
    arity(1);
    return gen_cycle(arg(0), cap);
  }
  throw InputError("unknown family '" + family + "' (hamming, hypercube, paley, shrikhande, cocktail, complete, cycle)");
}

Json params_json(const AmplyParams& p) {
  return {{"n", p.n},
          {"d", p.d},
          {"alpha", p.alpha},
          {"beta", p.beta ? Json(*p.beta) : Json(nullptr)},
          {"girth", p.girth ? Json(*p.girth) : Json(nullptr)}};
}

int cmd_params(const Graph& g, const Globals& opt, std::ostream& out) {
  auto detection = detect_amply_params(g);
  if (!detection.params) {
    const auto& v = *detection.violation;
    if (opt.format == "json") {
      out << Json{{"amply_regular", false}, {"violation", v.str()}, {"u", v.u}, {"v", v.v}}.dump(2) << '\n';
    } else {
      out << "violation: " << v.str() << '\n';
    }
    return kInputError;
  }
  const auto& p = *detection.params;
  if (opt.format == "json") {
    Json j = params_json(p);
    j["amply_regular"] = true;
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "n,d,alpha,beta,girth\n"
        << p.n << ',' << p.d << ',' << p.alpha << ',' << (p.beta ? std::to_string(*p.beta) : "") << ','
        << (p.girth ? std::to_string(*p.girth) : "") << '\n';
  } else {
    out << p.str() << '\n';
  }
  return kPass;
}

int cmd_curvature(const Graph& g, const Globals& opt, const std::vector<std::size_t>& edge, bool all,
                  const std::string& idleness, std::ostream& out) {
  if (edge.empty() == !all) throw InputError("curvature: give exactly one of --edge U V or --all");
  std::optional<Rational> p;
  if (!idleness.empty()) p = Rational::parse(idleness);

  std::vector<CurvatureRow> rows;
  std::optional<Rational> lo, hi;
  if (all) {
    if (p) {
      for (auto [u, v] : g.edges()) rows.push_back({{u, v}, ollivier_kappa_p(g, u, v, *p)});
    } else {
      auto table = curvature_all_edges(g, opt.threads);
      rows = std::move(table.rows);
    }
    for (const auto& r : rows) {
      if (!lo || r.kappa < *lo) lo = r.kappa;
      if (!hi || r.kappa > *hi) hi = r.kappa;
    }
  } else {
    Vertex u = edge[0], v = edge[1];
    rows.push_back({{u, v}, p ? ollivier_kappa_p(g, u, v, *p) : lly_curvature(g, u, v)});
  }

  const char* column = p ? "kappa_p" : "kappa";
  if (opt.format == "json") {
    Json j;
    if (p) j["p"] = p->str();
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"u", r.edge.first}, {"v", r.edge.second}, {column, r.kappa.str()}});
    j["rows"] = arr;
    if (lo) {
      j["min"] = lo->str();
      j["max"] = hi->str();
    }
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "u,v," << column << '\n';
    for (const auto& r : rows) out << r.edge.first << ',' << r.edge.second << ',' << r.kappa.str() << '\n';
  } else if (!all) {
    out << rows.front().kappa.str() << '\n';
  } else {
    for (const auto& r : rows) out << r.edge.first << ' ' << r.edge.second << ' ' << r.kappa.str() << '\n';
    if (lo) out << "min " << lo->str() << "\nmax " << hi->str() << '\n';
  }
  return kPass;
}

int cmd_verify(const Graph& g, const Globals& opt, const std::string& id, std::ostream& out) {
  VerifyOptions vo;
  vo.threads = opt.threads;
  auto report = verify_graph(g, id, vo);
  if (opt.format == "json") {
    out << report_to_json(report) << '\n';
  } else if (opt.format == "csv") {
    out << "u,v,kappa,pass\n";
    for (const auto& e : report.edges) {
      out << e.edge.first << ',' << e.edge.second << ',' << e.kappa.str() << ',' << (e.pass ? "pass" : "fail") << '\n';
    }
  } else {
    write_report_text(out, report);
  }
  return report.pass ? kPass : kAssertionFailure;
}

int cmd_hgraph(const Graph& g, const Globals& opt, const std::vector<std::size_t>& edge, std::ostream& out) {
  if (edge.size() != 2) throw InputError("hgraph: --edge U V is required");
  const AmplyParams params = require_amply_params(g);
  const auto cert = witness_curvature_bound(g, edge[0], edge[1], params);
  const auto& h = cert.h;

  auto pair_label = [&](const BiEdge& e) { return h.label(true, e.first) + "-" + h.label(false, e.second); };
  std::vector<std::vector<ChainCheck>> chains_by_class;
  for (const auto& m : cert.decomposition) chains_by_class.push_back(check_chain_distances(g, h, m));

  if (opt.format == "json") {
    Json j;
    j["edge"] = {edge[0], edge[1]};
    j["params"] = params_json(params);
    Json vertices = Json::array();
    for (std::size_t i = 0; i < h.left.size(); ++i) {
      vertices.push_back({{"side", "left"}, {"index", i}, {"role", to_string(h.left[i].role)}, {"label", h.label(true, i)}});
    }
    for (std::size_t i = 0; i < h.right.size(); ++i) {
      vertices.push_back({{"side", "right"}, {"index", i}, {"role", to_string(h.right[i].role)}, {"label", h.label(false, i)}});
    }
    j["vertices"] = vertices;
    Json classes = Json::object();
    for (std::size_t c = 0; c < kEdgeClasses; ++c) {
      Json list = Json::array();
      for (const auto& e : h.classes[c]) list.push_back({e.first, e.second});
      classes["E" + std::to_string(c + 1)] = list;
    }
    j["edge_classes"] = classes;
    j["regular_degree"] = cert.regularity.pass ? Json(cert.regularity.expected) : Json(nullptr);
    Json decomposition = Json::array();
    for (std::size_t i = 0; i < cert.decomposition.size(); ++i) {
      Json pairs = Json::array();
      for (const auto& e : cert.decomposition[i].pairs()) pairs.push_back({e.first, e.second});
      Json chains = Json::array();
      for (const auto& c : chains_by_class[i]) {
        chains.push_back({{"v0", c.v0_host}, {"interior", c.chain.interior}, {"w0", c.w0_host}, {"rho", c.chain.rho},
                          {"k", c.chain.k}, {"distance", c.distance}, {"pass", c.pass}});
      }
      decomposition.push_back({{"matching", pairs}, {"chains", chains}, {"chosen", i == cert.chosen_class}});
    }
    j["decomposition"] = decomposition;
    j["pi0_cost"] = cert.pi0_cost.str();
    j["cost_bound"] = cert.cost_bound.str();
    j["kappa_lb"] = cert.kappa_lb.str();
    j["kappa"] = cert.kappa.str();
    j["holds"] = cert.holds();
    out << j.dump(2) << '\n';
  } else {
    out << "transport-bipartite graph of edge " << edge[0] << ' ' << edge[1] << "  params " << params.str() << '\n';
    out << "left  :";
    for (std::size_t i = 0; i < h.left.size(); ++i) out << ' ' << h.label(true, i) << '[' << to_string(h.left[i].role) << ']';
    out << "\nright :";
    for (std::size_t i = 0; i < h.right.size(); ++i) out << ' ' << h.label(false, i) << '[' << to_string(h.right[i].role) << ']';
    out << '\n';
    for (std::size_t c = 0; c < kEdgeClasses; ++c) {
      out << "E" << c + 1 << " (" << h.classes[c].size() << "):";
      for (const auto& e : h.classes[c]) out << ' ' << pair_label(e);
      out << '\n';
    }
    out << "degree check: " << (cert.regularity.pass ? "regular of degree " + std::to_string(cert.regularity.expected)
                                                     : std::string("NOT regular"))
        << '\n';
    for (std::size_t i = 0; i < cert.decomposition.size(); ++i) {
      out << "class " << i + 1 << (i == cert.chosen_class ? " (holds z1-z1')" : "") << ":";
      for (const auto& e : cert.decomposition[i].pairs()) out << ' ' << pair_label(e);
      out << '\n';
      for (const auto& c : chains_by_class[i]) {
        out << "  chain " << c.v0_host;
        for (std::size_t t : c.chain.interior) out << " -> " << h.label(true, t);
        out << " -> " << c.w0_host << "  rho " << c.chain.rho << "  k " << c.chain.k << "  d " << c.distance
            << (c.pass ? "" : "  FAIL") << '\n';
      }
    }
    out << "cost(pi0) " << cert.pi0_cost.str() << " <= " << cert.cost_bound.str() << '\n';
    out << "kappa_lb " << cert.kappa_lb.str() << "  kappa " << cert.kappa.str() << '\n';
    out << (cert.holds() ? "PASS" : "FAIL") << '\n';
  }
  return cert.holds() ? kPass : kAssertionFailure;
}

int cmd_spectrum(const Graph& g, const Globals& opt, std::ostream& out) {
  auto spec = adjacency_spectrum(g);
  if (opt.format == "json") {
    Json values = Json::array();
    for (double v : spec.eigenvalues) values.push_back(format_report_double(v));
    out << Json{{"n", spec.n}, {"eigenvalues", values}, {"residual", format_report_double(spec.residual)}}.dump(2)
        << '\n';
  } else if (opt.format == "csv") {
    out << "index,eigenvalue\n";
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
      out << i + 1 << ',' << format_report_double(spec.eigenvalues[i]) << '\n';
    }
  } else {
    for (double v : spec.eigenvalues) out << format_report_double(v) << '\n';
    out << "residual " << format_report_double(spec.residual) << '\n';
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lin-Lu-Yau curvature and amply regular graph verification"};
  app.name("amply");
  app.require_subcommand(1);
  app.fallthrough();
  Globals opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", opt.threads, "Worker threads for per-edge work (0 = all cores)");
  app.add_option("--seed", opt.seed, "Reserved; has no effect on results");
  app.add_option("--size-cap", opt.size_cap, "Maximum vertex count for generators");

  std::string family;
  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "Write a named graph as an edge list");
  gen->add_option("family", family, "hamming, hypercube, paley, shrikhande, cocktail, complete, cycle")->required();
  gen->add_option("args", gen_args, "Family arguments");

  std::string path = "-";
  auto* params = app.add_subcommand("params", "Detect amply regular parameters (n,d,alpha,beta)");
  params->add_option("file", path, "Edge-list file or - for stdin")->required();

  std::vector<std::size_t> edge;
  bool all = false;
  std::string idleness;
  auto* curvature = app.add_subcommand("curvature", "Exact Lin-Lu-Yau curvature (or kappa_p with --p)");
  curvature->add_option("file", path, "Edge-list file or - for stdin")->required();
  curvature->add_option("--edge", edge, "Edge endpoints U V")->expected(2);
  curvature->add_flag("--all", all, "Every edge");
  curvature->add_option("--p", idleness, "Idleness as num/den");

  std::string id;
  auto* verify = app.add_subcommand("verify", "Check every applicable curvature, diameter and eigenvalue claim");
  verify->add_option("file", path, "Edge-list file or - for stdin")->required();
  verify->add_option("--id", id, "Graph name used in the report");

  auto* hgraph = app.add_subcommand("hgraph", "Dump the transport-bipartite graph of an edge");
  hgraph->add_option("file", path, "Edge-list file or - for stdin")->required();
  hgraph->add_option("--edge", edge, "Edge endpoints U V")->expected(2)->required();

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues");
  spectrum->add_option("file", path, "Edge-list file or - for stdin")->required();

  auto* diam = app.add_subcommand("diameter", "Graph diameter");
  diam->add_option("file", path, "Edge-list file or - for stdin")->required();

  std::vector<std::size_t> search_params;
  auto* search = app.add_subcommand("search", "Exhaustive search for an amply regular graph on n <= 10 vertices");
  search->add_option("params", search_params, "N D ALPHA BETA")->expected(4)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*gen) {
      write_edge_list(out, generate(family, gen_args, opt.size_cap));
      return kPass;
    }
    if (*search) {
      auto found = search_amply(search_params[0], search_params[1], search_params[2], search_params[3]);
      if (!found) {
        out << "none\n";
      } else {
        write_edge_list(out, *found);
      }
      return kPass;
    }
    Graph g = read_graph(path, in);
    if (*params) return cmd_params(g, opt, out);
    if (*curvature) return cmd_curvature(g, opt, edge, all, idleness, out);
    if (*verify) return cmd_verify(g, opt, id.empty() ? graph_id(path) : id, out);
    if (*hgraph) return cmd_hgraph(g, opt, edge, out);
    if (*spectrum) return cmd_spectrum(g, opt, out);
    if (*diam) {
      out << diameter(g) << '\n';
      return kPass;
    }
  } catch (const ConsistencyError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kAssertionFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace amply::cli

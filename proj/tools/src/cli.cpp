#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abcover/enumerate.hpp"
#include "abcover/generators.hpp"
#include "abcover/graph_json.hpp"
#include "abcover/predictor.hpp"
#include "abcover/taut_complex.hpp"
#include "abcover/verify.hpp"

namespace abcover::cli {

using nlohmann::json;
using graph::ColoredGraph;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ColoredGraph load(const std::string& path) { return graph::graph_from_json(read_file(path)); }

json edge_ids(const ColoredGraph& g, const std::vector<int>& edges) {
  json out = json::array();
  for (int e : edges) out.push_back(g.edge(e).id);
  return out;
}

json violations_json(const std::vector<graph::Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"kind", v.kind}, {"where", v.where}, {"detail", v.detail}});
  return out;
}

// Domain-invalid graphs stop here with exit code 1.
struct InvalidGraph : std::runtime_error {
  json violations;
  explicit InvalidGraph(json v) : std::runtime_error("graph is not a valid G-coloring"), violations(std::move(v)) {}
};

ColoredGraph load_valid(const std::string& path) {
  auto g = load(path);
  auto vs = graph::validate(g);
  if (!vs.empty()) throw InvalidGraph(violations_json(vs));
  return g;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  void emit(const json& doc) const { out << doc.dump(2) << "\n"; }
  void note(const std::string& line) const {
    if (!quiet) err << line << "\n";
  }
};

int cmd_validate(Context& cx, const std::string& file) {
  auto g = load(file);
  auto vs = graph::validate(g);
  cx.emit({{"command", "validate"}, {"file", file}, {"valid", vs.empty()}, {"violations", violations_json(vs)}});
  cx.note(vs.empty() ? "valid" : "invalid: " + std::to_string(vs.size()) + " violation(s)");
  return vs.empty() ? kOk : kInvalid;
}

int cmd_invariants(Context& cx, const std::string& file) {
  auto g = load_valid(file);
  const auto b = graph::betti(g);
  json doc{{"command", "invariants"}, {"file", file}, {"d", g.d()}, {"b0", b.b0}, {"b1", b.b1}};
  json per_h = json::array();
  for (const auto& h : ring::Character::all(g.d())) {
    const auto sub = graph::gamma_H(g, h);
    per_h.push_back({{"H", h.to_string()},
                     {"edges", sub.edges.size()},
                     {"components", graph::betti(g, sub.edges).b0}});
  }
  doc["gamma_h"] = std::move(per_h);
  doc["unsplittable"] = graph::is_unsplittable(g);
  json special = json::array();
  for (const auto& s : graph::special_circuits(g))
    special.push_back({{"H", s.h.to_string()}, {"length", s.circuit.edges.size()}, {"edges", edge_ids(g, s.circuit.edges)}});
  doc["special_circuits"] = std::move(special);
  complex::GraphComplex gc(g);
  json levels = json::object();
  for (int k = 1; k <= g.d(); ++k) levels[std::to_string(k)] = complex::is_k_taut(gc, k);
  doc["taut_levels"] = std::move(levels);
  doc["taut"] = g.d() >= 2 ? complex::is_taut(gc) : complex::is_k_taut(gc, 1);
  cx.emit(doc);
  cx.note("b1=" + std::to_string(b.b1) + (doc["unsplittable"].get<bool>() ? ", unsplittable" : ", splittable"));
  return kOk;
}

int cmd_gamma_h(Context& cx, const std::string& file, const std::string& mask) {
  auto g = load_valid(file);
  ring::Character h;
  try {
    h = ring::Character::from_string(mask);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --char: ") + e.what());
  }
  if (h.d != g.d()) throw UsageError("--char length must equal d = " + std::to_string(g.d()));
  const auto sub = graph::gamma_H(g, h);
  const auto b = graph::betti(g, sub.edges);
  cx.emit({{"command", "gamma-h"}, {"H", h.to_string()}, {"edges", edge_ids(g, sub.edges)}, {"b0", b.b0}, {"b1", b.b1}});
  cx.note("Gamma_H has " + std::to_string(sub.edges.size()) + " edges in " + std::to_string(b.b0) + " circle(s)");
  return kOk;
}

int cmd_complex(Context& cx, const std::string& file, int k, const std::string& chain_file) {
  auto g = load_valid(file);
  if (k < 1 || k > g.d()) throw UsageError("--k must lie in [1, d]");
  complex::GraphComplex gc(g);
  const auto& lv = gc.level(k);
  const auto bk = complex::betti_gk(gc, k);
  const auto report = complex::taut_report(gc, k);
  json doc{{"command", "complex"},
           {"k", k},
           {"cells", {{"0", gc.cells(0).size()}, {"1", gc.cells(1).size()}}},
           {"dim_c0", lv.c0.dim()},
           {"dim_c1", lv.c1.dim()},
           {"b0", bk.b0},
           {"b1", bk.b1},
           {"chi_expected", complex::expected_chi_k(g, k)},
           {"euler_ok", complex::euler_check(gc, k)},
           {"taut", report.by_dimension},
           {"expected_b1_if_taut", report.expected_b1}};
  if (!chain_file.empty()) {
    auto chain = complex::chain_from_json(gc, read_file(chain_file));
    json c{{"dim", chain.dim}};
    if (chain.dim == 0) {
      const bool admissible = lv.c0.contains(chain.coords);
      c["admissible"] = admissible;
      if (admissible) {
        auto bc = complex::bounding_chain(gc, chain, k);
        c["bounds"] = bc.has_value();
        if (bc) c["bounding_chain"] = json::parse(complex::chain_to_json(gc, *bc));
      }
    } else {
      c["admissible"] = lv.c1.contains(chain.coords);
      complex::ConstrainedChain bd{k, 0, gc.boundary(chain.coords)};
      c["boundary"] = json::parse(complex::chain_to_json(gc, bd));
    }
    doc["chain"] = std::move(c);
  }
  cx.emit(doc);
  cx.note("b(Gamma|" + std::to_string(k) + ") = (" + std::to_string(bk.b0) + ", " + std::to_string(bk.b1) + ")");
  return kOk;
}

int cmd_predict(Context& cx, const std::string& file) {
  auto g = load_valid(file);
  try {
    auto p = predict::predict(g);
    cx.emit(json::parse(p.to_json()));
    cx.note("Theorem " + p.theorem + ": coker = " + p.coker.to_string());
    return kOk;
  } catch (const predict::HypothesesUnmet& e) {
    cx.emit({{"command", "predict"}, {"error", "hypotheses unmet"}, {"reasons", e.reasons}});
    cx.note(e.what());
    return kUnmet;
  }
}

int cmd_generate(Context& cx, const std::string& family, const graph::FamilyParams& params) {
  ColoredGraph g;
  try {
    g = graph::generate(family, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  cx.out << graph::graph_to_json(g, 2) << "\n";
  cx.note(family + ": " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges");
  return kOk;
}

int cmd_enumerate(Context& cx, const std::string& file, int d, bool up_to_symmetry) {
  auto shape = load(file);
  std::vector<ColoredGraph> found;
  try {
    found = graph::enumerate_colorings(shape, d, up_to_symmetry);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  json list = json::array();
  for (const auto& g : found) list.push_back(json::parse(graph::graph_to_json(g)));
  cx.emit({{"command", "enumerate"}, {"d", d}, {"up_to_symmetry", up_to_symmetry}, {"count", found.size()},
           {"colorings", std::move(list)}});
  cx.note(std::to_string(found.size()) + " coloring(s)");
  return kOk;
}

int cmd_verify(Context& cx, const std::string& suite, const verify::Bounds& bounds) {
  const auto names = verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite " + suite);
  verify::SuiteReport report;
  try {
    report = verify::run_suite(suite, bounds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cx.out << report.to_json(2) << "\n";
  cx.note(suite + ": " + std::to_string(report.checks.size() - report.failures()) + "/" +
          std::to_string(report.checks.size()) + " checks passed");
  return report.passed() ? kOk : kInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored trivalent graphs and the homology of their abelian branched covers"};
  app.require_subcommand(1);
  Context cx{out, err};
  app.add_flag("-q,--quiet", cx.quiet, "Suppress the summary on stderr");

  std::string file, mask, family, suite, chain_file;
  int k = 0, d = 0;
  bool sym = false;
  graph::FamilyParams params;
  verify::Bounds bounds;

  auto* validate = app.add_subcommand("validate", "Check the coloring rules");
  validate->add_option("file", file, "Graph JSON ('-' for stdin)")->required();
  auto* invariants = app.add_subcommand("invariants", "Betti numbers, Gamma_H, circuits, taut levels");
  invariants->add_option("file", file)->required();
  auto* gamma = app.add_subcommand("gamma-h", "The sub-cycle Gamma_H");
  gamma->add_option("file", file)->required();
  gamma->add_option("--char", mask, "Character as a bit string over x1..xd")->required();
  auto* cplx = app.add_subcommand("complex", "The constrained complex at one level");
  cplx->add_option("file", file)->required();
  cplx->add_option("--k", k, "Level")->required();
  cplx->add_option("--chain", chain_file, "Chain JSON to test against the complex");
  auto* pred = app.add_subcommand("predict", "Cokernel prediction");
  pred->add_option("file", file)->required();
  auto* gen = app.add_subcommand("generate", "Emit a catalogue graph");
  gen->add_option("family", family)->required();
  gen->add_option("--n", params.n);
  gen->add_option("--m", params.m);
  gen->add_option("--b", params.b);
  gen->add_option("--k", params.k);
  gen->add_option("--variant", params.variant);
  auto* en = app.add_subcommand("enumerate", "All colorings of a trivalent graph (input colors ignored)");
  en->add_option("file", file)->required();
  en->add_option("--d", d)->required();
  en->add_flag("--up-to-symmetry", sym);
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite)->required();
  ver->add_option("--d", bounds.d);
  ver->add_option("--n-max", bounds.n_max);
  ver->add_option("--m-max", bounds.m_max);
  ver->add_option("--family", bounds.family);
  ver->add_option("--seed", bounds.seed);
  ver->add_option("--samples", bounds.samples);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(cx, file);
    if (*invariants) return cmd_invariants(cx, file);
    if (*gamma) return cmd_gamma_h(cx, file, mask);
    if (*cplx) return cmd_complex(cx, file, k, chain_file);
    if (*pred) return cmd_predict(cx, file);
    if (*gen) return cmd_generate(cx, family, params);
    if (*en) return cmd_enumerate(cx, file, d, sym);
    if (*ver) return cmd_verify(cx, suite, bounds);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const graph::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidGraph& e) {
    cx.emit({{"error", e.what()}, {"violations", e.violations}});
    err << "invalid graph\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace abcover::cli

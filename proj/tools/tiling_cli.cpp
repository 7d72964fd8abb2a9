// Command-line front end for the clique-tiling toolkit: materializes the
// extremal construction families, evaluates the piecewise density envelope,
// runs the exact tiling-number and extremal-edge-count solvers, computes
// rank packings with their classification and edge-bound audit, and drives
// the numeric verifiers.
//
// Reports are JSON on stdout (or --output FILE). Wall time goes to stderr so
// that identical configs produce identical output bytes. Exit codes:
//   0  success
//   1  a verification or audited bound failed
//   2  usage error (bad flags, undefined construction, malformed input)
//   3  resource limit exceeded (graph too large, search budget blown)

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tiling/constructions.hpp"
#include "tiling/graph.hpp"
#include "tiling/opt.hpp"
#include "tiling/packing.hpp"
#include "tiling/solver.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "1.0.0";

ordered_json base_doc(const std::string& command) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  return doc;
}

// Options shared by every subcommand.
struct CommonOpts {
  std::string output;
  int threads = 0;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--output", opts.output,
                  "Write the report to this file instead of stdout");
  cmd->add_option("--threads", opts.threads,
                  "Worker threads (overrides TILING_THREADS; results never "
                  "depend on the count)")
      ->check(CLI::PositiveNumber);
}

void apply_threads(const CommonOpts& opts) {
  if (opts.threads > 0) {
    setenv("TILING_THREADS", std::to_string(opts.threads).c_str(), 1);
  }
}

// Payload must be newline-terminated; usage errors are thrown before any
// byte is written.
void emit(const std::string& payload, const CommonOpts& opts) {
  if (opts.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + opts.output);
  }
  out << payload;
}

void emit_json(const ordered_json& doc, const CommonOpts& opts) {
  emit(doc.dump(2) + "\n", opts);
}

// A graph argument: either a construction (--family ...) or a graph6 string
// (--graph6 or stdin).
struct GraphSource {
  std::string family;
  long long n = 0;
  long long k = 0;
  int r = 4;
  int j = 0;
  int partition_seed = 0;
  std::string graph6;
  CLI::Option* family_opt = nullptr;
  CLI::Option* j_opt = nullptr;
};

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "E1", "E2", "E3", "E4", "E5", "GEN_A", "GEN_B", "GEN_R", "T3"};
  return names;
}

void add_graph_options(CLI::App* cmd, GraphSource& src, bool with_r) {
  src.family_opt =
      cmd->add_option("--family", src.family,
                      "Construction family; omit to read a graph6 string "
                      "from --graph6 or stdin")
          ->check(CLI::IsMember(family_names()));
  cmd->add_option("--n", src.n, "Vertex count (T3: the parameter h)")
      ->needs(src.family_opt);
  cmd->add_option("--k", src.k, "Tiling parameter (T3: the parameter alpha)")
      ->needs(src.family_opt);
  if (with_r) {
    cmd->add_option("--r", src.r,
                    "Clique size (GEN_A/GEN_B/GEN_R; 4 for E1..E5)");
  }
  src.j_opt = cmd->add_option(
      "--j", src.j,
      "Family offset (E5/GEN_R) or subfamily index (GEN_A/GEN_B); "
      "E5 defaults to the smallest valid offset");
  cmd->add_option("--partition-seed", src.partition_seed,
                  "Rotates the balanced part assignment where it is "
                  "underdetermined");
  cmd->add_option("--graph6", src.graph6, "Graph as a graph6 string");
}

tiling::ConstructionSpec spec_of(const GraphSource& src) {
  auto family = tiling::family_from_name(src.family);
  if (!family) throw std::invalid_argument("unknown family: " + src.family);
  tiling::ConstructionSpec spec;
  spec.family = *family;
  spec.n = src.n;
  spec.k = src.k;
  spec.r = src.r;
  spec.j = src.j;
  spec.partition_seed = src.partition_seed;
  if (spec.family == tiling::Family::E5 && src.j_opt->count() == 0) {
    int j = tiling::default_e5_offset(spec.n, spec.k);
    if (j >= 0) spec.j = j;
  }
  return spec;
}

tiling::Graph resolve_graph(const GraphSource& src, ordered_json& config) {
  if (src.family_opt->count() > 0) {
    tiling::ConstructionSpec spec = spec_of(src);
    config["source"] = "construction";
    config["family"] = tiling::family_name(spec.family);
    config["n"] = spec.n;
    config["k"] = spec.k;
    config["r"] = spec.r;
    config["j"] = spec.j;
    config["partition_seed"] = spec.partition_seed;
    return tiling::build(spec);
  }
  std::string text = src.graph6;
  if (text.empty()) {
    std::cin >> text;
  }
  if (text.empty()) {
    throw std::invalid_argument(
        "no graph given: pass --family, --graph6, or a graph6 string on "
        "stdin");
  }
  config["source"] = "graph6";
  config["graph6"] = text;
  return tiling::from_graph6(text);
}

// Accepts "3/13" or any decimal literal.
double parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    double value = std::stod(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument("malformed number: " + text);
    }
    return value;
  }
  double num = std::stod(text.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("malformed number: " + text);
  const std::string den_text = text.substr(slash + 1);
  double den = std::stod(den_text, &used);
  if (used != den_text.size() || den == 0.0) {
    throw std::invalid_argument("malformed ratio: " + text);
  }
  return num / den;
}

ordered_json stage_json(const std::vector<tiling::VertexSet>& members) {
  ordered_json out = ordered_json::array();
  for (tiling::VertexSet m : members) out.push_back(tiling::set_vertices(m));
  return out;
}

ordered_json profile_json(const tiling::Profile& pr) {
  ordered_json out;
  out["a1"] = pr.a1;
  out["a2"] = pr.a2;
  out["a3"] = pr.a3;
  out["a4"] = pr.a4;
  out["a5"] = pr.a5;
  out["a6"] = pr.a6;
  out["b"] = pr.b;
  out["c"] = pr.c;
  out["d"] = pr.d;
  return out;
}

ordered_json classes_json(const tiling::Classification& cls) {
  using tiling::AClass;
  ordered_json out;
  for (AClass c : {AClass::kA1, AClass::kA2_1, AClass::kA2_2, AClass::kA2_3,
                   AClass::kA3_1, AClass::kA3_2, AClass::kA4_1, AClass::kA4_2,
                   AClass::kA5, AClass::kA6}) {
    long long count = 0;
    for (AClass assigned : cls.assignment) count += assigned == c;
    out[tiling::a_class_name(c)] = count;
  }
  return out;
}

ordered_json assignment_json(const tiling::Classification& cls) {
  ordered_json out = ordered_json::array();
  for (tiling::AClass c : cls.assignment) {
    out.push_back(tiling::a_class_name(c));
  }
  return out;
}

ordered_json bounds_json(const tiling::BoundReport& report) {
  ordered_json out = ordered_json::array();
  for (const tiling::BoundEntry& e : report.entries) {
    ordered_json row;
    row["name"] = e.name;
    row["lhs"] = e.lhs;
    row["rhs"] = e.rhs;
    row["slack"] = e.slack;
    row["pass"] = e.pass;
    out.push_back(row);
  }
  return out;
}

ordered_json verify_json(const tiling::VerifyReport& report) {
  ordered_json out;
  out["prop"] = report.prop;
  out["domain"] = report.domain;
  out["samples"] = report.samples;
  out["max_violation"] = report.max_violation;
  out["argmax"] = report.argmax;
  out["tolerance"] = report.tolerance;
  out["pass"] = report.pass;
  return out;
}

// -------------------------------------------------------------------------
// Subcommands
// -------------------------------------------------------------------------

struct ConstructOpts {
  GraphSource src;
  std::string format = "json";
  bool catalog = false;
  double catalog_n = 260.0;
  CommonOpts common;
};

int run_construct(const ConstructOpts& opts) {
  if (opts.catalog) {
    ordered_json doc = base_doc("construct");
    doc["config"] = {{"catalog", true}, {"n", opts.catalog_n}};
    ordered_json rows = ordered_json::array();
    for (int i = 1; i <= 5; ++i) {
      tiling::ExtremalRange range =
          tiling::extremal_range(i, opts.catalog_n);
      ordered_json row;
      row["family"] = "E" + std::to_string(i);
      row["k_lo"] = range.lo;
      row["k_hi"] = range.hi;
      row["k_lo_over_n"] = range.lo / opts.catalog_n;
      row["k_hi_over_n"] = range.hi / opts.catalog_n;
      rows.push_back(row);
    }
    doc["result"] = {{"n", opts.catalog_n}, {"families", rows}};
    emit_json(doc, opts.common);
    return 0;
  }
  if (opts.src.family_opt->count() == 0) {
    throw std::invalid_argument("construct requires --family (or --catalog)");
  }
  tiling::ConstructionSpec spec = spec_of(opts.src);
  tiling::Construction built = tiling::build_construction(spec);
  if (opts.format == "graph6") {
    emit(tiling::to_graph6(built.graph) + "\n", opts.common);
    return 0;
  }
  if (opts.format == "text") {
    emit(tiling::to_edge_list(built.graph), opts.common);
    return 0;
  }
  ordered_json doc = base_doc("construct");
  ordered_json config;
  config["family"] = tiling::family_name(spec.family);
  config["n"] = spec.n;
  config["k"] = spec.k;
  config["r"] = spec.r;
  config["j"] = spec.j;
  config["partition_seed"] = spec.partition_seed;
  doc["config"] = config;
  ordered_json parts = ordered_json::array();
  for (const auto& [name, size] : built.parts) {
    parts.push_back({{"name", name}, {"size", size}});
  }
  ordered_json result;
  result["graph6"] = tiling::to_graph6(built.graph);
  result["n"] = built.graph.vertex_count();
  result["edge_count"] = built.graph.edge_count();
  result["edge_count_formula"] = tiling::edge_count_formula(spec);
  result["parts"] = parts;
  doc["result"] = result;
  emit_json(doc, opts.common);
  return 0;
}

struct XiOpts {
  double n = 1.0;
  double k = 0.0;
  CommonOpts common;
};

int run_xi(const XiOpts& opts) {
  tiling::XiValue value = tiling::xi(opts.n, opts.k);
  ordered_json doc = base_doc("xi");
  doc["config"] = {{"n", opts.n}, {"k", opts.k}};
  ordered_json result;
  result["value"] = value.value;
  result["regime"] = value.regime;
  result["breakpoints"] = value.breakpoints;
  if (opts.n > 0) result["density"] = value.value / (opts.n * opts.n);
  doc["result"] = result;
  emit_json(doc, opts.common);
  return 0;
}

struct NuOpts {
  GraphSource src;
  CommonOpts common;
};

int run_nu(const NuOpts& opts) {
  ordered_json config;
  tiling::Graph g = resolve_graph(opts.src, config);
  long long value = tiling::nu(g, opts.src.r);
  ordered_json doc = base_doc("nu");
  config["clique_size"] = opts.src.r;
  doc["config"] = config;
  doc["result"] = {{"n", g.vertex_count()}, {"r", opts.src.r},
                   {"value", value}};
  emit_json(doc, opts.common);
  return 0;
}

struct ExOpts {
  long long n = 0;
  long long k = 0;
  int r = 4;
  CommonOpts common;
};

int run_ex(const ExOpts& opts) {
  tiling::ExResult result = tiling::bruteforce_ex(opts.n, opts.k, opts.r);
  ordered_json doc = base_doc("ex");
  doc["config"] = {{"n", opts.n}, {"k", opts.k}, {"r", opts.r}};
  ordered_json payload;
  payload["n"] = result.n;
  payload["k"] = result.k;
  payload["r"] = result.r;
  payload["value"] = result.value;
  payload["witness_graph6"] = tiling::to_graph6(result.witness);
  payload["levels_searched"] = result.levels_searched;
  doc["result"] = payload;
  emit_json(doc, opts.common);
  return 0;
}

// Shared by packing / classify / audit.
struct PackingRun {
  tiling::Graph graph = tiling::Graph::empty(1);
  tiling::RankPacking packing;
  tiling::Classification classification;
  tiling::Profile profile;
  ordered_json config;
};

PackingRun run_packing_pipeline(const GraphSource& src) {
  PackingRun run;
  run.graph = resolve_graph(src, run.config);
  run.packing = tiling::lex_max_rank_packing(run.graph);
  run.classification = tiling::classify(run.graph, run.packing);
  run.profile = tiling::profile_of(run.packing, run.classification);
  return run;
}

struct GraphCmdOpts {
  GraphSource src;
  CommonOpts common;
};

int run_packing(const GraphCmdOpts& opts) {
  PackingRun run = run_packing_pipeline(opts.src);
  tiling::BoundReport report =
      tiling::audit_bounds(run.graph, run.packing, run.classification);
  ordered_json doc = base_doc("packing");
  doc["config"] = run.config;
  ordered_json result;
  result["n"] = run.profile.n;
  result["k"] = run.profile.k;
  result["truncated"] = run.packing.truncated;
  ordered_json stages;
  stages["quads"] = stage_json(run.packing.quads);
  stages["triples"] = stage_json(run.packing.triples);
  stages["pairs"] = stage_json(run.packing.pairs);
  stages["singles"] = stage_json(run.packing.singles);
  result["stages"] = stages;
  result["assignment"] = assignment_json(run.classification);
  result["peel_order"] = run.classification.peel_order;
  result["classes"] = classes_json(run.classification);
  result["profile"] = profile_json(run.profile);
  result["bounds"] = bounds_json(report);
  result["all_pass"] = report.all_pass;
  doc["result"] = result;
  emit_json(doc, opts.common);
  return 0;
}

int run_classify(const GraphCmdOpts& opts) {
  PackingRun run = run_packing_pipeline(opts.src);
  ordered_json doc = base_doc("classify");
  doc["config"] = run.config;
  ordered_json result;
  result["n"] = run.profile.n;
  result["k"] = run.profile.k;
  result["assignment"] = assignment_json(run.classification);
  result["peel_order"] = run.classification.peel_order;
  result["classes"] = classes_json(run.classification);
  result["profile"] = profile_json(run.profile);
  doc["result"] = result;
  emit_json(doc, opts.common);
  return 0;
}

int run_audit(const GraphCmdOpts& opts) {
  PackingRun run = run_packing_pipeline(opts.src);
  tiling::BoundReport report =
      tiling::audit_bounds(run.graph, run.packing, run.classification);
  ordered_json doc = base_doc("audit");
  doc["config"] = run.config;
  ordered_json result;
  result["n"] = run.profile.n;
  result["k"] = run.profile.k;
  result["profile"] = profile_json(run.profile);
  result["classes"] = classes_json(run.classification);
  result["bounds"] = bounds_json(report);
  result["all_pass"] = report.all_pass;
  doc["result"] = result;
  emit_json(doc, opts.common);
  return report.all_pass ? 0 : 1;
}

struct VerifyOptOpts {
  std::string prop;
  std::string k_text;
  long long resolution = 200;
  long long samples = 100000;
  bool list = false;
  CommonOpts common;
};

int run_verify_opt(const VerifyOptOpts& opts) {
  ordered_json doc = base_doc("verify-opt");
  if (opts.list) {
    doc["config"] = {{"list", true}};
    doc["result"] = {{"props", tiling::phi_proposition_ids()}};
    emit_json(doc, opts.common);
    return 0;
  }
  if (opts.k_text.empty()) {
    throw std::invalid_argument("verify-opt requires --k (or --list)");
  }
  const double k = parse_rational(opts.k_text);
  std::vector<tiling::VerifyReport> reports;
  if (opts.prop.empty() || opts.prop == "all") {
    reports =
        tiling::verify_phi_propositions(k, opts.resolution, opts.samples);
  } else {
    reports.push_back(tiling::verify_phi_proposition(
        opts.prop, k, opts.resolution, opts.samples));
  }
  ordered_json config;
  config["prop"] = opts.prop.empty() ? "all" : opts.prop;
  config["k"] = opts.k_text;
  config["resolution"] = opts.resolution;
  config["samples"] = opts.samples;
  doc["config"] = config;
  bool all_pass = true;
  ordered_json rows = ordered_json::array();
  for (const tiling::VerifyReport& r : reports) {
    rows.push_back(verify_json(r));
    all_pass = all_pass && r.pass;
  }
  doc["result"] = {{"reports", rows}, {"all_pass", all_pass}};
  emit_json(doc, opts.common);
  return all_pass ? 0 : 1;
}

struct VerifyAppendixOpts {
  double gamma = 0.0;
  double b = 0.0;
  double resolution = 0.0;  // 0 = gamma / 40
  CommonOpts common;
};

int run_verify_appendix(const VerifyAppendixOpts& opts) {
  const double resolution =
      opts.resolution > 0 ? opts.resolution : opts.gamma / 40.0;
  tiling::VerifyReport eta =
      tiling::verify_eta_bound(opts.gamma, opts.b, resolution);
  tiling::VerifyReport a2 =
      tiling::verify_prop_A2(opts.gamma, opts.b, resolution);
  ordered_json doc = base_doc("verify-appendix");
  doc["config"] = {{"gamma", opts.gamma},
                   {"b", opts.b},
                   {"resolution", resolution}};
  const bool all_pass = eta.pass && a2.pass;
  doc["result"] = {
      {"reports", ordered_json::array({verify_json(eta), verify_json(a2)})},
      {"all_pass", all_pass}};
  emit_json(doc, opts.common);
  return all_pass ? 0 : 1;
}

struct SweepOpts {
  long long n = 260;
  long long step = 1;
  CommonOpts common;
};

int run_sweep(const SweepOpts& opts) {
  if (opts.n < 4) throw std::invalid_argument("sweep requires --n >= 4");
  if (opts.step < 1) throw std::invalid_argument("sweep requires --step >= 1");
  using tiling::Family;
  const double n2 = static_cast<double>(opts.n) * static_cast<double>(opts.n);
  ordered_json rows = ordered_json::array();
  // Rows run over the k where capping the tiling number constrains anything:
  // once 4(k+1) > n no graph fits k+1 disjoint quads, the complete graph is
  // trivially extremal, and the construction families deliberately end.
  for (long long k = 0; 4 * (k + 1) <= opts.n; k += opts.step) {
    long long best = -1;
    Family best_family = Family::E1;
    for (Family f : {Family::E1, Family::E2, Family::E3, Family::E4,
                     Family::E5}) {
      if (!tiling::family_defined(f, opts.n, k)) continue;
      const long long edges = tiling::family_edge_formula(f, opts.n, k);
      if (edges > best) {
        best = edges;
        best_family = f;
      }
    }
    const double xi_density =
        tiling::xi(static_cast<double>(opts.n), static_cast<double>(k)).value /
        n2;
    ordered_json row;
    row["k"] = k;
    row["k_over_n"] = static_cast<double>(k) / static_cast<double>(opts.n);
    row["best_family"] = tiling::family_name(best_family);
    row["best_density"] = static_cast<double>(best) / n2;
    row["xi_density"] = xi_density;
    row["gap"] = static_cast<double>(best) / n2 - xi_density;
    rows.push_back(row);
  }
  ordered_json doc = base_doc("sweep");
  doc["config"] = {{"n", opts.n}, {"step", opts.step}};
  doc["result"] = {{"n", opts.n}, {"rows", rows}};
  emit_json(doc, opts.common);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Clique-tiling toolkit: extremal constructions, exact tiling numbers, "
      "rank packings with edge-bound audits, and numeric verification of "
      "the piecewise density envelope."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("tiling ") + kToolVersion);

  ConstructOpts construct_opts;
  CLI::App* construct =
      app.add_subcommand("construct", "Materialize an extremal construction");
  add_graph_options(construct, construct_opts.src, /*with_r=*/true);
  construct
      ->add_option("--format", construct_opts.format,
                   "Output format: json, graph6, or text edge list")
      ->check(CLI::IsMember({"json", "graph6", "text"}));
  construct->add_flag("--catalog", construct_opts.catalog,
                      "Print the k-ranges where each four-clique family has "
                      "the most edges");
  construct->add_option("--catalog-n", construct_opts.catalog_n,
                        "Vertex count the --catalog ranges are computed at "
                        "(default 260)");
  add_common_options(construct, construct_opts.common);

  XiOpts xi_opts;
  CLI::App* xi_cmd = app.add_subcommand(
      "xi", "Evaluate the piecewise quadratic density envelope");
  xi_cmd->add_option("--n", xi_opts.n, "Scale (default 1)");
  xi_cmd->add_option("--k", xi_opts.k, "Tiling parameter in [0, n/4]")
      ->required();
  add_common_options(xi_cmd, xi_opts.common);

  NuOpts nu_opts;
  CLI::App* nu_cmd =
      app.add_subcommand("nu", "Exact clique-tiling number of a graph");
  add_graph_options(nu_cmd, nu_opts.src, /*with_r=*/true);
  add_common_options(nu_cmd, nu_opts.common);

  ExOpts ex_opts;
  CLI::App* ex_cmd = app.add_subcommand(
      "ex", "Exhaustive extremal edge count subject to a tiling-number cap");
  ex_cmd->add_option("--n", ex_opts.n, "Vertex count")->required();
  ex_cmd->add_option("--k", ex_opts.k, "Tiling-number cap")->required();
  ex_cmd->add_option("--r", ex_opts.r, "Clique size (default 4)");
  add_common_options(ex_cmd, ex_opts.common);

  GraphCmdOpts packing_opts;
  CLI::App* packing_cmd = app.add_subcommand(
      "packing",
      "Lexicographically maximal rank-4 packing with classification and "
      "edge-bound audit");
  add_graph_options(packing_cmd, packing_opts.src, /*with_r=*/false);
  add_common_options(packing_cmd, packing_opts.common);

  GraphCmdOpts classify_opts;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Classify the quads of the maximal rank-4 packing");
  add_graph_options(classify_cmd, classify_opts.src, /*with_r=*/false);
  add_common_options(classify_cmd, classify_opts.common);

  GraphCmdOpts audit_opts;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit",
      "Audit the edge-count bounds on a graph's packing profile; exits 1 on "
      "any violation");
  add_graph_options(audit_cmd, audit_opts.src, /*with_r=*/false);
  add_common_options(audit_cmd, audit_opts.common);

  VerifyOptOpts verify_opt_opts;
  CLI::App* verify_opt_cmd = app.add_subcommand(
      "verify-opt",
      "Verify the quadratic-bound propositions against the density envelope");
  verify_opt_cmd->add_option("--prop", verify_opt_opts.prop,
                             "Proposition id (default: all whose window "
                             "contains --k)");
  verify_opt_cmd->add_option("--k", verify_opt_opts.k_text,
                             "Scaled position k/n, decimal or ratio like "
                             "3/13");
  verify_opt_cmd->add_option("--res", verify_opt_opts.resolution,
                             "Boundary-search grid resolution");
  verify_opt_cmd->add_option("--samples", verify_opt_opts.samples,
                             "Random interior samples");
  verify_opt_cmd->add_flag("--list", verify_opt_opts.list,
                           "List the proposition ids and exit");
  add_common_options(verify_opt_cmd, verify_opt_opts.common);

  VerifyAppendixOpts verify_appendix_opts;
  CLI::App* verify_appendix_cmd = app.add_subcommand(
      "verify-appendix",
      "Verify the auxiliary nine-variable and two-variable quadratic bounds");
  verify_appendix_cmd
      ->add_option("--gamma", verify_appendix_opts.gamma, "Scale parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_appendix_cmd
      ->add_option("--b", verify_appendix_opts.b, "Second parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_appendix_cmd->add_option("--res", verify_appendix_opts.resolution,
                                  "Grid step (default gamma/40)");
  add_common_options(verify_appendix_cmd, verify_appendix_opts.common);

  SweepOpts sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep",
      "Tabulate best-construction density against the envelope over a "
      "k-sweep");
  sweep_cmd->add_option("--n", sweep_opts.n, "Vertex count (default 260)");
  sweep_cmd->add_option("--step", sweep_opts.step, "k increment (default 1)");
  add_common_options(sweep_cmd, sweep_opts.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (construct->parsed()) {
      apply_threads(construct_opts.common);
      rc = run_construct(construct_opts);
    } else if (xi_cmd->parsed()) {
      apply_threads(xi_opts.common);
      rc = run_xi(xi_opts);
    } else if (nu_cmd->parsed()) {
      apply_threads(nu_opts.common);
      rc = run_nu(nu_opts);
    } else if (ex_cmd->parsed()) {
      apply_threads(ex_opts.common);
      rc = run_ex(ex_opts);
    } else if (packing_cmd->parsed()) {
      apply_threads(packing_opts.common);
      rc = run_packing(packing_opts);
    } else if (classify_cmd->parsed()) {
      apply_threads(classify_opts.common);
      rc = run_classify(classify_opts);
    } else if (audit_cmd->parsed()) {
      apply_threads(audit_opts.common);
      rc = run_audit(audit_opts);
    } else if (verify_opt_cmd->parsed()) {
      apply_threads(verify_opt_opts.common);
      rc = run_verify_opt(verify_opt_opts);
    } else if (verify_appendix_cmd->parsed()) {
      apply_threads(verify_appendix_opts.common);
      rc = run_verify_appendix(verify_appendix_opts);
    } else if (sweep_cmd->parsed()) {
      apply_threads(sweep_opts.common);
      rc = run_sweep(sweep_opts);
    }
  } catch (const tiling::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "wall_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                   .count()
            << "\n";
  return rc;
}

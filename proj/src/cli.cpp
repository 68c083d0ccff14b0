// Copyright 2026 The catclust Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catclust/cli.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "catclust/column_outliers.hpp"
#include "catclust/constrained.hpp"
#include "catclust/feature_selection.hpp"
#include "catclust/gadgets.hpp"
#include "catclust/generators.hpp"
#include "catclust/io.hpp"
#include "catclust/lowrank.hpp"
#include "catclust/oracles.hpp"
#include "json.hpp"

namespace catclust {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Config {
  std::string input;
  std::string relations;
  std::string sets;
  std::string solution;
  std::string output;
  std::string problem;
  int k = 1;
  int budget = 0;
  int outliers = 0;
  int alphabet = 0;
  std::string mode = "direct";
  long trials = 0;
  bool use_trials = false;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  double work_ceiling = DefaultWorkCeiling();
  double oracle_limit = 1e8;
  std::string format = "json";
  int threads = 0;
  bool verbose = false;
  std::string semantics = "gf";
  int rank = 1;
  int rows = 4;
  int cols = 6;
  int noise = 0;
  int outlier_count = 0;
  int t = 1;
  int q = 0;
  bool no_augment = false;
  int vertices = 0;
  double edge_prob = 0.5;
};

SearchMode ToSearchMode(const std::string& mode) {
  return mode == "hypergraph" ? SearchMode::kHypergraph : SearchMode::kDirect;
}

SolverOptions ToSolverOptions(const Config& cfg) {
  return SolverOptions{ToSearchMode(cfg.mode), cfg.work_ceiling, cfg.threads};
}

OracleLimits ToLimits(const Config& cfg) {
  return OracleLimits{cfg.oracle_limit};
}

Json Indices(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

Json Parts(const std::vector<std::vector<int>>& parts) {
  Json a = Json::array();
  for (const auto& p : parts) a.push_back(Indices(p));
  return a;
}

Json Vectors(const std::vector<SymbolVector>& vectors) {
  Json a = Json::array();
  for (const auto& v : vectors) {
    Json row = Json::array();
    for (Symbol s : v) row.push_back(static_cast<int>(s));
    a.push_back(std::move(row));
  }
  return a;
}

Json MatrixRows(const CategoricalMatrix& matrix) {
  std::vector<SymbolVector> rows;
  for (int h = 0; h < matrix.rows(); ++h) {
    auto r = matrix.Row(h);
    rows.emplace_back(r.begin(), r.end());
  }
  return Vectors(rows);
}

class Report {
 public:
  Report(const Config& cfg, std::string problem, std::string mode)
      : cfg_(cfg), start_(Clock::now()) {
    json_["schema"] = 1;
    json_["problem"] = std::move(problem);
    json_["decision"] = "infeasible";
    json_["cost"] = nullptr;
    json_["outliers"] = Json::array();
    json_["clusters"] = Json::array();
    json_["centers"] = Json::array();
    json_["elapsed_ms"] = 0;
    json_["mode"] = std::move(mode);
    json_["seed"] = cfg.seed;
  }

  Json& operator[](const char* key) { return json_[key]; }

  void Feasible(std::int64_t cost, const std::vector<int>& outliers,
                const std::vector<std::vector<int>>& clusters,
                const std::vector<SymbolVector>& centers) {
    json_["decision"] = "feasible";
    json_["cost"] = cost;
    json_["outliers"] = Indices(outliers);
    json_["clusters"] = Parts(clusters);
    json_["centers"] = Vectors(centers);
  }

  int Emit(std::ostream& out, std::ostream& err) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        Clock::now() - start_)
                        .count();
    json_["elapsed_ms"] = std::round(us / 10.0) / 100.0;
    if (cfg_.format == "tsv") {
      Flatten("", json_, out);
    } else {
      out << json_.dump(2) << "\n";
    }
    if (cfg_.verbose) {
      err << "[catclust] " << json_["problem"].get<std::string>() << " "
          << json_["decision"].get<std::string>() << " in "
          << json_["elapsed_ms"].dump() << " ms\n";
    }
    const std::string decision = json_["decision"].get<std::string>();
    return decision == "infeasible" ? kExitInfeasible : kExitFeasible;
  }

 private:
  static std::string Cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_array()) return v.dump();
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += v[i].is_array() ? ";" : ",";
      s += Cell(v[i]);
    }
    return s;
  }

  static void Flatten(const std::string& prefix, const Json& v,
                      std::ostream& out) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      const std::string key = prefix + it.key();
      if (it->is_object()) {
        Flatten(key + ".", *it, out);
      } else {
        out << key << "\t" << Cell(*it) << "\n";
      }
    }
  }

  const Config& cfg_;
  Clock::time_point start_;
  Json json_;
};

void Log(const Config& cfg, std::ostream& err, const std::string& msg) {
  if (cfg.verbose) err << "[catclust] " << msg << "\n";
}

CategoricalMatrix LoadMatrix(const Config& cfg) {
  return ParseMatrixCsv(ReadFile(cfg.input), cfg.alphabet);
}

std::string Dims(const CategoricalMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
         " matrix over " + std::to_string(a.alphabet().size()) + " symbols";
}

int FeatureSelect(const Config& cfg, std::ostream& out, std::ostream& err) {
  FeatureSelectionInstance inst{LoadMatrix(cfg), cfg.k, cfg.budget,
                                cfg.outliers};
  inst.Validate();
  Log(cfg, err, Dims(inst.matrix));
  Report report(cfg, "feature-select", cfg.mode);
  std::optional<FeatureSelectionSolution> sol;
  if (cfg.mode == "oracle") {
    sol = OracleFeatureSelection(inst, ToLimits(cfg));
  } else if (auto o = SolveFeatureSelection(inst, ToSolverOptions(cfg))) {
    sol = o->solution;
  }
  if (sol) {
    report.Feasible(sol->cost, sol->removed_features, sol->point_clusters,
                    sol->centers);
  }
  return report.Emit(out, err);
}

ConstrainedInstance LoadConstrained(const Config& cfg) {
  if (cfg.relations.empty()) {
    throw ContractViolation("--relations is required");
  }
  CategoricalMatrix a = LoadMatrix(cfg);
  RelationSet rel =
      ParseRelations(ReadFile(cfg.relations), cfg.k, a.rows(), a.alphabet());
  ConstrainedInstance inst{std::move(a), cfg.k, cfg.budget, cfg.outliers,
                           std::move(rel)};
  inst.Validate();
  return inst;
}

int ConstrainedCluster(const Config& cfg, std::ostream& out,
                       std::ostream& err) {
  ConstrainedInstance inst = LoadConstrained(cfg);
  Log(cfg, err, Dims(inst.matrix));
  Report report(cfg, "constrained-cluster", cfg.mode);
  std::optional<ClusteringSolution> sol;
  if (cfg.mode == "oracle") {
    sol = OracleConstrained(inst, ToLimits(cfg));
  } else if (auto o = SolveConstrained(inst, ToSolverOptions(cfg))) {
    Log(cfg, err,
        std::to_string(o->candidates) + " candidate center tuples scored");
    sol = o->solution;
  }
  if (sol) report.Feasible(sol->cost, sol->outliers, sol->clusters,
                           sol->centers);
  return report.Emit(out, err);
}

int ColumnOutliers(const Config& cfg, std::ostream& out, std::ostream& err) {
  CategoricalMatrix a = LoadMatrix(cfg);
  Log(cfg, err, Dims(a));
  Report report(cfg, "column-outliers", cfg.mode);
  std::optional<ClusteringSolution> sol;
  if (cfg.mode == "oracle") {
    sol = OracleColumnOutliers(a, cfg.k, cfg.budget, cfg.outliers,
                               ToLimits(cfg));
  } else {
    ColumnOutliersOptions opts;
    opts.exhaustive = !cfg.use_trials;
    opts.trials = cfg.trials;
    opts.seed = cfg.seed;
    opts.mode = ToSearchMode(cfg.mode);
    opts.work_ceiling = cfg.work_ceiling;
    opts.threads = cfg.threads;
    report["search"] = opts.exhaustive ? "exhaustive" : "trials";
    if (!opts.exhaustive) {
      report["trials"] =
          opts.trials > 0 ? opts.trials : DefaultTrials(cfg.budget);
    }
    if (auto o = SolveColumnOutliers(a, cfg.k, cfg.budget, cfg.outliers,
                                     opts)) {
      sol = o->solution;
    }
  }
  if (sol) report.Feasible(sol->cost, sol->outliers, sol->clusters,
                           sol->centers);
  return report.Emit(out, err);
}

LowRankInstance LoadLowRank(const Config& cfg) {
  LowRankInstance inst{LoadMatrix(cfg), cfg.rank, cfg.budget, cfg.outliers,
                       cfg.semantics == "bool" ? RankSemantics::kBoolean
                                               : RankSemantics::kField};
  inst.Validate();
  return inst;
}

int LowRank(const Config& cfg, std::ostream& out, std::ostream& err) {
  LowRankInstance inst = LoadLowRank(cfg);
  Log(cfg, err, Dims(inst.matrix));
  Report report(cfg, "lowrank", cfg.mode);
  report["semantics"] = cfg.semantics;
  report["rank"] = cfg.rank;
  std::optional<ClusteringSolution> sol;
  if (cfg.mode == "oracle") {
    sol = OracleLowRank(inst, ToLimits(cfg));
  } else if (auto o = SolveLowRank(inst, ToSolverOptions(cfg))) {
    sol = o->reduced_solution;
  }
  if (sol) {
    report.Feasible(sol->cost, sol->outliers, sol->clusters, sol->centers);
    const LowRankFactors f = ReconstructFactors(inst, *sol);
    Json factors;
    factors["generators"] = MatrixRows(f.generators);
    factors["coefficients"] = Vectors(f.coefficients);
    factors["residual"] = ResidualWeight(inst, f.approx, f.outliers);
    report["factors"] = std::move(factors);
  }
  return report.Emit(out, err);
}

int Restricted(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.sets.empty()) throw ContractViolation("--sets is required");
  CategoricalMatrix a = LoadMatrix(cfg);
  auto sets = ParseRestrictedSets(ReadFile(cfg.sets), a);
  Log(cfg, err, Dims(a) + ", " + std::to_string(sets.size()) + " sets");
  Report report(cfg, "restricted", cfg.mode);
  report["chosen"] = Json::array();
  std::optional<RestrictedSolution> sol;
  if (cfg.mode == "oracle") {
    sol = OracleRestricted(sets, cfg.budget, a.alphabet().size(),
                           ToLimits(cfg));
  } else {
    sol = SolveRestricted(sets, cfg.budget, a.alphabet().size(),
                          ToSearchMode(cfg.mode), cfg.work_ceiling);
  }
  if (sol) {
    report.Feasible(sol->cost, {}, {}, {sol->center});
    report["chosen"] = Indices(sol->chosen);
  }
  return report.Emit(out, err);
}

int Oracle(Config cfg, std::ostream& out, std::ostream& err) {
  cfg.mode = "oracle";
  if (cfg.problem == "fs") return FeatureSelect(cfg, out, err);
  if (cfg.problem == "cc") return ConstrainedCluster(cfg, out, err);
  if (cfg.problem == "kcco") return ColumnOutliers(cfg, out, err);
  if (cfg.problem == "lowrank") return LowRank(cfg, out, err);
  if (cfg.problem == "restricted") return Restricted(cfg, out, err);
  CategoricalMatrix a = LoadMatrix(cfg);
  Report report(cfg, "vanilla", cfg.mode);
  if (auto sol = OracleVanillaClustering(a, cfg.k, cfg.budget,
                                         ToLimits(cfg))) {
    report.Feasible(sol->cost, sol->outliers, sol->clusters, sol->centers);
  }
  return report.Emit(out, err);
}

void RequireOutput(const Config& cfg) {
  if (cfg.output.empty()) throw ContractViolation("--output is required");
}

Json InstanceJson(const CategoricalMatrix& a, int k, int budget,
                  int outlier_cap) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["alphabet"] = a.alphabet().size();
  j["k"] = k;
  j["budget"] = budget;
  j["outlier_cap"] = outlier_cap;
  return j;
}

int GenPlanted(const Config& cfg, std::ostream& out, std::ostream& err) {
  RequireOutput(cfg);
  const int alphabet = cfg.alphabet > 0 ? cfg.alphabet : 2;
  PlantedSpec spec{cfg.rows,  cfg.cols,          cfg.k,   alphabet,
                   cfg.noise, cfg.outlier_count, cfg.seed};
  Report report(cfg, "gen-planted", cfg.problem);
  if (cfg.problem == "fs") {
    PlantedFeatureSelection p = GeneratePlantedFeatureSelection(spec);
    WriteFile(cfg.output, FormatMatrixCsv(p.instance.matrix));
    report.Feasible(p.planted.cost, p.planted.removed_features,
                    p.planted.point_clusters, p.planted.centers);
    report["instance"] =
        InstanceJson(p.instance.matrix, p.instance.k, p.instance.budget,
                     p.instance.outlier_cap);
  } else {
    PlantedColumnOutliers p = GeneratePlantedColumnOutliers(spec);
    WriteFile(cfg.output, FormatMatrixCsv(p.matrix));
    report.Feasible(p.planted.cost, p.planted.outliers, p.planted.clusters,
                    p.planted.centers);
    report["instance"] = InstanceJson(p.matrix, p.k, p.budget, p.outlier_cap);
  }
  return report.Emit(out, err);
}

Graph LoadGraph(const Config& cfg) {
  if (!cfg.input.empty()) return ParseGraph(ReadFile(cfg.input));
  if (cfg.vertices < 1) {
    throw ContractViolation("give a graph file or --vertices");
  }
  return RandomGraph(cfg.vertices, cfg.edge_prob, cfg.seed);
}

int GenGadget(const Config& cfg, bool cover, std::ostream& out,
              std::ostream& err) {
  RequireOutput(cfg);
  const Graph g = LoadGraph(cfg);
  const FeatureSelectionInstance inst =
      cover ? GadgetPartialVertexCover(g, cfg.t, cfg.q)
            : GadgetIndependentSet(g, cfg.t, !cfg.no_augment);
  WriteFile(cfg.output, FormatMatrixCsv(inst.matrix));
  Report report(cfg, cover ? "gen-gadget-pvc" : "gen-gadget-is", "gadget");
  report["decision"] = "generated";
  report["instance"] =
      InstanceJson(inst.matrix, inst.k, inst.budget, inst.outlier_cap);
  report["graph"] = FormatGraph(g);
  return report.Emit(out, err);
}

std::vector<int> FromIndices(const Json& a) {
  std::vector<int> v;
  for (const auto& x : a) v.push_back(x.get<int>() - 1);
  return v;
}

std::vector<std::vector<int>> FromParts(const Json& a) {
  std::vector<std::vector<int>> v;
  for (const auto& p : a) v.push_back(FromIndices(p));
  return v;
}

std::vector<SymbolVector> FromVectors(const Json& a) {
  std::vector<SymbolVector> v;
  for (const auto& row : a) {
    SymbolVector s;
    for (const auto& x : row) {
      const int sym = x.get<int>();
      if (sym < 0 || sym >= kMaxAlphabetSize) {
        throw InvalidSolution("center symbol out of range");
      }
      s.push_back(static_cast<Symbol>(sym));
    }
    v.push_back(std::move(s));
  }
  return v;
}

int Verify(const Config& cfg, std::ostream& out, std::ostream&) {
  if (cfg.solution.empty()) throw ContractViolation("--solution is required");
  const Json report = Json::parse(ReadFile(cfg.solution));
  if (report.at("decision").get<std::string>() != "feasible") {
    throw InvalidSolution("report does not carry a feasible solution");
  }
  ClusteringSolution sol{FromIndices(report.at("outliers")),
                         FromParts(report.at("clusters")),
                         FromVectors(report.at("centers")),
                         report.at("cost").get<std::int64_t>()};
  Verdict v;
  if (cfg.problem == "fs") {
    FeatureSelectionInstance inst{LoadMatrix(cfg), cfg.k, cfg.budget,
                                  cfg.outliers};
    inst.Validate();
    v = VerifyFeatureSelection(
        inst, FeatureSelectionSolution{sol.outliers, sol.clusters,
                                       sol.centers, sol.cost});
  } else if (cfg.problem == "cc") {
    v = VerifyConstrained(LoadConstrained(cfg), sol);
  } else if (cfg.problem == "lowrank") {
    LowRankInstance inst = LoadLowRank(cfg);
    v = VerifyConstrained(BuildLowRankRelations(inst, cfg.work_ceiling), sol);
    if (v.ok()) {
      const LowRankFactors f = ReconstructFactors(inst, sol);
      if (ResidualWeight(inst, f.approx, f.outliers) != sol.cost) {
        v = Verdict::Fail(VerifyCode::kCostMismatch,
                          "residual weight differs from the recorded cost");
      }
    }
  } else {
    v = VerifyClustering(LoadMatrix(cfg), cfg.k, cfg.budget, cfg.outliers,
                         sol);
  }
  Json j;
  j["schema"] = 1;
  j["problem"] = "verify";
  j["verdict"] = VerifyCodeName(v.code);
  j["detail"] = v.detail;
  out << j.dump(2) << "\n";
  return v.ok() ? kExitFeasible : kExitInfeasible;
}

void AddInstanceFlags(CLI::App* sub, Config& cfg) {
  sub->add_option("input", cfg.input, "Matrix CSV file")->required();
  sub->add_option("-k", cfg.k, "Number of clusters")
      ->check(CLI::PositiveNumber);
  sub->add_option("-B,--budget", cfg.budget, "Cost budget")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("-l,--outliers", cfg.outliers, "Outlier cap")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--alphabet", cfg.alphabet,
                  "Alphabet size (default: largest symbol + 1, at least 2)")
      ->check(CLI::Range(1, kMaxAlphabetSize));
}

void AddSolverFlags(CLI::App* sub, Config& cfg) {
  sub->add_option("--mode", cfg.mode, "direct, hypergraph or oracle")
      ->check(CLI::IsMember({"direct", "hypergraph", "oracle"}));
  sub->add_option("--work-ceiling", cfg.work_ceiling,
                  "Search-space ceiling (env CATCLUST_WORK_CEILING)");
  sub->add_option("--oracle-limit", cfg.oracle_limit,
                  "Oracle state limit");
  sub->add_option("--threads", cfg.threads, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", cfg.seed, "Random seed");
}

void AddLowRankFlags(CLI::App* sub, Config& cfg) {
  sub->add_option("--semantics", cfg.semantics, "gf or bool")
      ->check(CLI::IsMember({"gf", "bool"}));
  sub->add_option("--rank", cfg.rank, "Target rank")
      ->check(CLI::PositiveNumber);
}

void AddColumnOutlierFlags(CLI::App* sub, Config& cfg) {
  auto* trials = sub->add_option(
      "--trials", cfg.trials,
      "Use random colorings; 0 picks the default trial count");
  trials->check(CLI::NonNegativeNumber);
  sub->add_flag("--exhaustive", cfg.exhaustive,
                "Enumerate every composite layout (default)")
      ->excludes(trials);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact categorical clustering toolkit", "catclust"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("-v,--verbose", cfg.verbose, "Log progress to stderr");
  app.set_version_flag("--version", "catclust 1.0.0");

  auto* fs = app.add_subcommand("feature-select",
                                "Remove up to l rows, then cluster columns");
  AddInstanceFlags(fs, cfg);
  AddSolverFlags(fs, cfg);

  auto* cc = app.add_subcommand("constrained-cluster",
                                "Clustering with per-row center relations");
  AddInstanceFlags(cc, cfg);
  AddSolverFlags(cc, cfg);
  cc->add_option("--relations", cfg.relations, "Relations file")->required();

  auto* co = app.add_subcommand("column-outliers",
                                "k-clustering with up to l outlier columns");
  AddInstanceFlags(co, cfg);
  AddSolverFlags(co, cfg);
  AddColumnOutlierFlags(co, cfg);

  auto* lr = app.add_subcommand("lowrank",
                                "Low-rank approximation with outlier columns");
  AddInstanceFlags(lr, cfg);
  AddSolverFlags(lr, cfg);
  AddLowRankFlags(lr, cfg);

  auto* rs = app.add_subcommand("restricted",
                                "Pick one column per set plus one center");
  AddInstanceFlags(rs, cfg);
  AddSolverFlags(rs, cfg);
  rs->add_option("--sets", cfg.sets, "Restricted sets file")->required();

  auto* orc = app.add_subcommand("oracle", "Exhaustive reference solver");
  AddInstanceFlags(orc, cfg);
  AddSolverFlags(orc, cfg);
  AddLowRankFlags(orc, cfg);
  orc->add_option("--problem", cfg.problem,
                  "fs, cc, kcco, lowrank, restricted or vanilla")
      ->required()
      ->check(CLI::IsMember(
          {"fs", "cc", "kcco", "lowrank", "restricted", "vanilla"}));
  orc->add_option("--relations", cfg.relations, "Relations file (cc)");
  orc->add_option("--sets", cfg.sets, "Restricted sets file (restricted)");

  auto* vf = app.add_subcommand("verify", "Check a JSON report");
  AddInstanceFlags(vf, cfg);
  AddLowRankFlags(vf, cfg);
  vf->add_option("--problem", cfg.problem, "fs, cc, kcco or lowrank")
      ->required()
      ->check(CLI::IsMember({"fs", "cc", "kcco", "lowrank"}));
  vf->add_option("--relations", cfg.relations, "Relations file (cc)");
  vf->add_option("--solution", cfg.solution, "JSON report to check")
      ->required();
  vf->add_option("--work-ceiling", cfg.work_ceiling, "Search-space ceiling");

  auto* gp = app.add_subcommand("gen-planted", "Write a planted instance");
  cfg.problem = "kcco";
  gp->add_option("--problem", cfg.problem, "kcco or fs")
      ->check(CLI::IsMember({"kcco", "fs"}));
  gp->add_option("-m,--rows", cfg.rows, "Rows")->check(CLI::PositiveNumber);
  gp->add_option("-n,--cols", cfg.cols, "Columns")
      ->check(CLI::PositiveNumber);
  gp->add_option("-k", cfg.k, "Clusters")->check(CLI::PositiveNumber);
  gp->add_option("--alphabet", cfg.alphabet, "Alphabet size")
      ->check(CLI::Range(1, kMaxAlphabetSize));
  gp->add_option("--noise", cfg.noise, "Single-cell edits")
      ->check(CLI::NonNegativeNumber);
  gp->add_option("--outlier-count", cfg.outlier_count,
                 "Random outlier columns (kcco) or rows (fs)")
      ->check(CLI::NonNegativeNumber);
  gp->add_option("--seed", cfg.seed, "Random seed");
  gp->add_option("-o,--output", cfg.output, "Matrix CSV to write")
      ->required();

  auto add_gadget = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->add_option("input", cfg.input, "Graph file (p N header, u v lines)");
    g->add_option("--vertices", cfg.vertices, "Random graph size")
        ->check(CLI::PositiveNumber);
    g->add_option("--edge-prob", cfg.edge_prob, "Random edge probability")
        ->check(CLI::Range(0.0, 1.0));
    g->add_option("--seed", cfg.seed, "Random seed");
    g->add_option("-t", cfg.t, "Solution size")->check(CLI::NonNegativeNumber);
    g->add_option("-o,--output", cfg.output, "Matrix CSV to write")
        ->required();
    return g;
  };
  auto* gis = add_gadget("gen-gadget-is", "Independent-set gadget instance");
  gis->add_flag("--no-augment", cfg.no_augment, "Skip the clique augment");
  cfg.t = 1;
  auto* gpvc =
      add_gadget("gen-gadget-pvc", "Partial-vertex-cover gadget instance");
  gpvc->add_option("-q", cfg.q, "Edges to cover")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"catclust"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitFeasible : kExitError;
  }

  try {
    if (fs->parsed()) return FeatureSelect(cfg, out, err);
    if (cc->parsed()) return ConstrainedCluster(cfg, out, err);
    if (co->parsed()) {
      cfg.use_trials = co->count("--trials") > 0;
      return ColumnOutliers(cfg, out, err);
    }
    if (lr->parsed()) return LowRank(cfg, out, err);
    if (rs->parsed()) return Restricted(cfg, out, err);
    if (orc->parsed()) return Oracle(cfg, out, err);
    if (vf->parsed()) return Verify(cfg, out, err);
    if (gp->parsed()) return GenPlanted(cfg, out, err);
    if (gis->parsed()) return GenGadget(cfg, false, out, err);
    if (gpvc->parsed()) return GenGadget(cfg, true, out, err);
  } catch (const OracleSizeExceeded& e) {
    err << "error: oracle size guard exceeded: " << e.what() << "\n";
    return kExitError;
  } catch (const WorkCeilingExceeded& e) {
    err << "error: work ceiling exceeded: " << e.what() << "\n";
    return kExitError;
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const ContractViolation& e) {
    err << "error: invalid instance: " << e.what() << "\n";
    return kExitError;
  } catch (const InvalidSolution& e) {
    err << "error: invalid solution: " << e.what() << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed report JSON: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "error: no subcommand\n";
  return kExitError;
}

}  // namespace catclust

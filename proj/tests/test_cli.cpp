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

#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "catclust/cli.hpp"
#include "catclust/io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace catclust {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Exec(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(CATCLUST_TEST_DATA) + "/" + name;
}

fs::path Scratch() {
  static const fs::path dir = [] {
    std::random_device rd;
    fs::path p = fs::temp_directory_path() /
                 ("catclust_cli_" + std::to_string(rd()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string Temp(const std::string& name) { return (Scratch() / name).string(); }

std::string WithoutElapsed(const std::string& report) {
  Json j = Json::parse(report);
  j.erase("elapsed_ms");
  return j.dump();
}

std::vector<int> Ints(const Json& a) {
  std::vector<int> v;
  for (const auto& x : a) v.push_back(x.get<int>());
  return v;
}

TEST_SUITE("cli") {
  TEST_CASE("c5 gadget through feature-select") {
    const Result r = Exec({"feature-select", "-k", "3", "-B", "0", "-l", "3",
                           Data("c5_incidence.csv"), "--mode", "direct"});
    REQUIRE(r.code == kExitFeasible);
    const Json j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["decision"] == "feasible");
    CHECK(j["cost"] == 0);
    CHECK(Ints(j["outliers"]) == std::vector<int>{1, 3, 5});
    for (const char* key : {"decision", "cost", "outliers", "clusters",
                            "centers", "elapsed_ms", "mode", "seed"}) {
      CHECK(j.contains(key));
    }
  }

  TEST_CASE("report round-trips through verify") {
    struct Case {
      std::vector<std::string> solve;
      std::vector<std::string> verify;
    };
    const std::vector<Case> cases = {
        {{"feature-select", Data("c5_incidence.csv"), "-k", "3", "-B", "0", "-l", "3"},
         {"verify", "--problem", "fs", Data("c5_incidence.csv"), "-k", "3", "-B", "0",
          "-l", "3"}},
        {{"constrained-cluster", Data("toy.csv"), "-k", "2", "-B", "3", "-l",
          "1", "--relations", Data("toy_relations.txt")},
         {"verify", "--problem", "cc", Data("toy.csv"), "-k", "2", "-B", "3",
          "-l", "1", "--relations", Data("toy_relations.txt")}},
        {{"column-outliers", Data("toy.csv"), "-k", "2", "-B", "2", "-l", "1"},
         {"verify", "--problem", "kcco", Data("toy.csv"), "-k", "2", "-B", "2",
          "-l", "1"}},
        {{"column-outliers", Data("toy.csv"), "-k", "2", "-B", "2", "-l", "1",
          "--trials", "0", "--seed", "4"},
         {"verify", "--problem", "kcco", Data("toy.csv"), "-k", "2", "-B", "2",
          "-l", "1"}},
        {{"lowrank", Data("rank.csv"), "--rank", "1", "-B", "1", "-l", "0"},
         {"verify", "--problem", "lowrank", Data("rank.csv"), "--rank", "1",
          "-B", "1", "-l", "0"}},
        {{"lowrank", Data("rank.csv"), "--rank", "2", "--semantics", "bool",
          "-B", "0", "-l", "0"},
         {"verify", "--problem", "lowrank", Data("rank.csv"), "--rank", "2",
          "--semantics", "bool", "-B", "0", "-l", "0"}},
    };
    int index = 0;
    for (const Case& c : cases) {
      CAPTURE(index);
      const Result r = Exec(c.solve);
      REQUIRE(r.code == kExitFeasible);
      const std::string path = Temp("report" + std::to_string(index++) + ".json");
      WriteFile(path, r.out);
      auto args = c.verify;
      args.push_back("--solution");
      args.push_back(path);
      const Result v = Exec(args);
      CHECK(v.code == kExitFeasible);
      CHECK(Json::parse(v.out)["verdict"] == "pass");
    }
  }

  TEST_CASE("verify reports a tampered solution") {
    const Result r = Exec({"column-outliers", Data("toy.csv"), "-k", "2", "-B",
                           "2", "-l", "1"});
    REQUIRE(r.code == kExitFeasible);
    Json j = Json::parse(r.out);
    j["cost"] = 1;
    const std::string path = Temp("tampered.json");
    WriteFile(path, j.dump());
    const Result v = Exec({"verify", "--problem", "kcco", Data("toy.csv"), "-k",
                           "2", "-B", "2", "-l", "1", "--solution", path});
    CHECK(v.code == kExitInfeasible);
    CHECK(Json::parse(v.out)["verdict"] == "cost-mismatch");
  }

  TEST_CASE("infeasible instances exit with 2") {
    const Result r = Exec({"column-outliers", Data("toy.csv"), "-k", "1", "-B",
                           "0", "-l", "0"});
    CHECK(r.code == kExitInfeasible);
    const Json j = Json::parse(r.out);
    CHECK(j["decision"] == "infeasible");
    CHECK(j["cost"].is_null());
  }

  TEST_CASE("input errors have distinct messages and exit 1") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases =
        {
            {{"constrained-cluster", Data("toy.csv"), "-k", "2", "--relations",
              Data("empty_relation.txt")},
             "empty relation at line 2"},
            {{"constrained-cluster", Data("toy.csv"), "-k", "2", "--relations",
              Data("arity_mismatch.txt")},
             "relation arity mismatch at line 2"},
            {{"column-outliers", Data("bad_cell.csv"), "-k", "1"},
             "non-integer cell 'x'"},
            {{"column-outliers", Data("ragged.csv"), "-k", "1"}, "ragged row"},
            {{"column-outliers", Data("big_symbol.csv"), "-k", "1",
              "--alphabet", "2"},
             "is not below the alphabet size 2"},
            {{"constrained-cluster", Data("toy.csv"), "-k", "2", "-B", "3",
              "--relations", Data("toy_relations.txt"), "--work-ceiling", "5"},
             "work ceiling exceeded"},
            {{"column-outliers", Data("missing.csv"), "-k", "1"},
             "cannot open"},
        };
    std::set<std::string> messages;
    for (const auto& [args, needle] : cases) {
      const Result r = Exec(args);
      CAPTURE(needle);
      CHECK(r.code == kExitError);
      CHECK(r.err.find(needle) != std::string::npos);
      messages.insert(r.err);
    }
    CHECK(messages.size() == cases.size());
  }

  TEST_CASE("bad flags exit 1 and help exits 0") {
    CHECK(Exec({"column-outliers", Data("toy.csv"), "--bogus"}).code ==
          kExitError);
    CHECK(Exec({"column-outliers", Data("toy.csv"), "-B", "-1"}).code ==
          kExitError);
    CHECK(Exec({}).code == kExitError);
    CHECK(Exec({"--help"}).code == kExitFeasible);
  }

  TEST_CASE("equal config and seed give equal reports") {
    const std::vector<std::string> base{
        "constrained-cluster", Data("toy.csv"), "-k", "2", "-B", "3", "-l",
        "1", "--relations", Data("toy_relations.txt"), "--mode", "hypergraph"};
    std::set<std::string> reports;
    for (const char* threads : {"1", "2", "8"}) {
      for (int run = 0; run < 3; ++run) {
        auto args = base;
        args.push_back("--threads");
        args.push_back(threads);
        const Result r = Exec(args);
        REQUIRE(r.code == kExitFeasible);
        reports.insert(WithoutElapsed(r.out));
      }
    }
    CHECK(reports.size() == 1);
  }

  TEST_CASE("tsv output") {
    const Result r = Exec({"--format", "tsv", "column-outliers",
                           Data("toy.csv"), "-k", "2", "-B", "2", "-l", "1"});
    REQUIRE(r.code == kExitFeasible);
    CHECK(r.out.find("decision\tfeasible\n") != std::string::npos);
    CHECK(r.out.find("cost\t2\n") != std::string::npos);
    CHECK(r.out.find("outliers\t5\n") != std::string::npos);
  }

  TEST_CASE("restricted and oracle subcommands") {
    const Result r = Exec({"restricted", Data("toy.csv"), "--sets",
                           Data("sets.txt"), "-B", "3"});
    REQUIRE(r.code == kExitFeasible);
    const Json j = Json::parse(r.out);
    const Result o = Exec({"oracle", "--problem", "restricted", Data("toy.csv"),
                           "--sets", Data("sets.txt"), "-B", "3"});
    REQUIRE(o.code == kExitFeasible);
    const Json jo = Json::parse(o.out);
    CHECK(j["cost"] == jo["cost"]);
    CHECK(j["chosen"] == jo["chosen"]);
    CHECK(jo["mode"] == "oracle");

    for (const char* problem : {"kcco", "vanilla"}) {
      const Result q = Exec({"oracle", "--problem", problem, Data("toy.csv"),
                             "-k", "2", "-B", "4"});
      CHECK(q.code == kExitFeasible);
      CHECK(Json::parse(q.out)["cost"] == 4);
    }
  }

  TEST_CASE("generators write instances the solvers accept") {
    const std::string planted = Temp("planted.csv");
    const Result g = Exec({"gen-planted", "-m", "4", "-n", "6", "-k", "2",
                           "--noise", "1", "--outlier-count", "1", "--seed",
                           "3", "-o", planted});
    REQUIRE(g.code == kExitFeasible);
    const Json gj = Json::parse(g.out);
    CHECK(gj["cost"].get<int>() <= 1);
    const Result s = Exec({"column-outliers", planted, "-k", "2", "-B", "1",
                           "-l", "1"});
    CHECK(s.code == kExitFeasible);
    CHECK(WithoutElapsed(Exec({"gen-planted", "-m", "4", "-n", "6", "-k", "2",
                               "--noise", "1", "--outlier-count", "1",
                               "--seed", "3", "-o", planted})
                             .out) == WithoutElapsed(g.out));

    const std::string is = Temp("is.csv");
    const Result gi = Exec({"gen-gadget-is", Data("c5.graph"), "-t", "2",
                            "--no-augment", "-o", is});
    REQUIRE(gi.code == kExitFeasible);
    CHECK(ReadFile(is) == ReadFile(Data("c5_incidence.csv")).substr(
                              ReadFile(Data("c5_incidence.csv")).find('\n') + 1));
    const Json ij = Json::parse(gi.out);
    const Result fo = Exec({"oracle", "--problem", "fs", is, "-k",
                            std::to_string(ij["instance"]["k"].get<int>()),
                            "-l",
                            std::to_string(
                                ij["instance"]["outlier_cap"].get<int>())});
    CHECK(fo.code == kExitFeasible);

    const std::string pvc = Temp("pvc.csv");
    CHECK(Exec({"gen-gadget-pvc", Data("c5.graph"), "-t", "2", "-q", "4",
                "-o", pvc})
              .code == kExitFeasible);
    CHECK(Exec({"gen-gadget-pvc", Data("c5.graph"), "-t", "2", "-q", "9",
                "-o", pvc})
              .code == kExitError);
    CHECK(Exec({"gen-gadget-is", "--vertices", "4", "--seed", "2", "-t", "1",
                "-o", is})
              .code == kExitFeasible);
  }

  TEST_CASE("oracle and hypergraph modes agree on planted instances") {
    for (int seed = 0; seed < 50; ++seed) {
      const std::string path = Temp("fs" + std::to_string(seed) + ".csv");
      const std::string noise = std::to_string(seed % 3);
      const std::string irrelevant = std::to_string(seed % 2);
      REQUIRE(Exec({"gen-planted", "--problem", "fs", "-m", "4", "-n", "5",
                    "-k", "2", "--noise", noise, "--outlier-count", irrelevant,
                    "--seed", std::to_string(seed), "-o", path})
                  .code == kExitFeasible);
      const std::vector<std::string> flags{path, "-k", "2", "-B", noise, "-l",
                                           irrelevant};
      std::vector<std::string> oracle{"oracle", "--problem", "fs"};
      oracle.insert(oracle.end(), flags.begin(), flags.end());
      std::vector<std::string> solve{"feature-select", "--mode", "hypergraph"};
      solve.insert(solve.end(), flags.begin(), flags.end());
      const Result a = Exec(oracle);
      const Result b = Exec(solve);
      CAPTURE(seed);
      REQUIRE(a.code == b.code);
      const Json ja = Json::parse(a.out);
      const Json jb = Json::parse(b.out);
      CHECK(ja["decision"] == jb["decision"]);
      CHECK(ja["cost"] == jb["cost"]);
    }
  }
}

}  // namespace
}  // namespace catclust

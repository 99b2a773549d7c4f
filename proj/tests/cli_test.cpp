// Copyright 2026 The lmgsum Authors
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
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lmgsum/generators.hpp"
#include "lmgsum/io.hpp"

namespace lmgsum {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
};

std::string slurp(const fs::path &p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::path(LMGSUM_TMP_DIR) / info->name();
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        // Planted graph with two labels, written by node name.
        PlantedConfig cfg;
        cfg.cliques = cfg.in_stars = cfg.out_stars = 2;
        auto pg = planted_graph(cfg);
        std::ofstream edges(dir_ / "g.tsv"), labels(dir_ / "labels.tsv");
        edges << "# planted\n";
        for (const auto &e : pg.graph.edges()) edges << 'v' << e.src << '\t' << 'v' << e.dst << '\t' << e.mult << '\n';
        for (NodeId v = 0; v < pg.graph.node_count(); ++v) labels << 'v' << v << '\t' << (v % 2 ? "odd" : "even") << '\n';
    }

    Result run(const std::string &args) const {
        const auto out = dir_ / "stdout.txt";
        const std::string cmd = std::string(LMGSUM_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
    }

    std::string p(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(Cli, SummarizeThenVerify) {
    auto r = run("summarize -i " + p("g.tsv") + " -l " + p("labels.tsv") + " --json " + p("s.json") +
                 " --corrections " + p("c.txt") + " --report " + p("r.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("compression"), std::string::npos);
    auto report = Json::parse(slurp(dir_ / "r.json"));
    EXPECT_GT(report["compression_ratio"].get<double>(), 0.0);
    r = run("verify -i " + p("g.tsv") + " -l " + p("labels.tsv") + " --summary " + p("s.json") + " --corrections " +
            p("c.txt"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("OK"), std::string::npos);
}

TEST_F(Cli, TamperedSummaryFailsVerify) {
    ASSERT_EQ(run("summarize -i " + p("g.tsv") + " --json " + p("s.json") + " --corrections " + p("c.txt")).code, 0);
    auto j = Json::parse(slurp(dir_ / "s.json"));
    bool changed = false;
    for (auto &v : j["super_nodes"])
        if (v["members"].size() > 1 && !changed) {
            v["rep_mult"] = v["rep_mult"].get<int>() + 1;
            changed = true;
        }
    ASSERT_TRUE(changed);
    std::ofstream(dir_ / "t.json") << j.dump();
    auto r = run("verify -i " + p("g.tsv") + " --summary " + p("t.json") + " --corrections " + p("c.txt"));
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("first divergence"), std::string::npos);
}

TEST_F(Cli, MissingCorrectionsIsUsageError) {
    ASSERT_EQ(run("summarize -i " + p("g.tsv") + " --json " + p("s.json")).code, 0);
    EXPECT_EQ(run("verify -i " + p("g.tsv") + " --summary " + p("s.json") + " --corrections " + p("nope.txt")).code, 2);
    EXPECT_EQ(run("verify -i " + p("g.tsv") + " --summary " + p("s.json")).code, 2);
}

TEST_F(Cli, CheckpointDotFiles) {
    auto r = run("summarize -i " + p("g.tsv") + " -r 8 -b 10 --checkpoints 2,5,10 --dot " + p("dot"));
    ASSERT_EQ(r.code, 0) << r.out;
    for (int b : {2, 5, 10}) {
        const auto f = dir_ / "dot" / ("summary_b" + std::to_string(b) + ".dot");
        ASSERT_TRUE(fs::exists(f)) << f;
        EXPECT_EQ(slurp(f).rfind("digraph", 0), 0u);
    }
}

TEST_F(Cli, SeedIsReproducible) {
    ASSERT_EQ(run("summarize -i " + p("g.tsv") + " --seed 7 --json " + p("a.json")).code, 0);
    ASSERT_EQ(run("summarize -i " + p("g.tsv") + " --seed 7 --json " + p("b.json")).code, 0);
    EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json"));
    const std::string env = "LMGSUM_SEED=7 ";
    const std::string cmd = env + LMGSUM_CLI_PATH + " summarize -i " + p("g.tsv") + " --json " + p("c.json");
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "c.json"));
}

TEST_F(Cli, UndirectedFlag) {
    std::ofstream(dir_ / "u.tsv") << "a\tb\t2\n";
    ASSERT_EQ(run("summarize --undirected -i " + p("u.tsv") + " --json " + p("u.json")).code, 0);
    auto j = Json::parse(slurp(dir_ / "u.json"));
    EXPECT_EQ(j["node_count"], 2);
    ASSERT_EQ(run("summarize --undirected -i " + p("u.tsv") + " --corrections " + p("u.txt")).code, 0);
    const auto text = slurp(dir_ / "u.txt");
    const bool both = text.find("a\tb\t2") != std::string::npos && text.find("b\ta\t2") != std::string::npos;
    const bool merged = text.find('+') == std::string::npos;  // a 2-clique reproduces both edges
    EXPECT_TRUE(both || merged) << text;
}

TEST_F(Cli, EvalLabels) {
    auto r = run("eval-labels --replay 0.28,0.32");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("5.6"), std::string::npos) << r.out;
    r = run("eval-labels -i " + p("g.tsv") + " -l " + p("labels.tsv") + " --shuffles 3");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("3 shuffles"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("normalized gain"), std::string::npos) << r.out;
    EXPECT_EQ(run("eval-labels -i " + p("g.tsv") + " --shuffles 2").code, 2);
    std::string same = slurp(dir_ / "labels.tsv");
    for (auto pos = same.find("odd"); pos != std::string::npos; pos = same.find("odd")) same.replace(pos, 3, "even");
    std::ofstream(dir_ / "one.tsv") << same;
    r = run("eval-labels -i " + p("g.tsv") + " -l " + p("one.tsv"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("single-label"), std::string::npos) << r.out;
}

TEST_F(Cli, BenchCsv) {
    auto r = run("bench --sizes 200,400 --k 3 --csv " + p("b.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream csv(slurp(dir_ / "b.csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "nodes,edges,seconds,ratio");
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    EXPECT_EQ(rows, 2);
    r = run("bench -i " + p("g.tsv") + " --fractions 0.5,1.0");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST_F(Cli, ErrorsAndExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("summarize").code, 2);
    EXPECT_EQ(run("summarize -i " + p("g.tsv") + " -r 0").code, 2);
    EXPECT_EQ(run("summarize -i " + p("missing.tsv")).code, 3);
    std::ofstream(dir_ / "bad.tsv") << "a\tb\tzero\n";
    auto r = run("summarize -i " + p("bad.tsv"));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find(":1:"), std::string::npos) << r.out;
    EXPECT_EQ(run("summarize -i " + p("g.tsv") + " --checkpoints 20").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
}  // namespace lmgsum

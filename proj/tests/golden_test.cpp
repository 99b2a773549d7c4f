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

#include <fstream>

#include "support/golden_cases.hpp"

namespace lmgsum {
namespace {

Json load(const std::string &name) {
    std::ifstream is(std::string(LMGSUM_GOLDEN_DIR) + "/" + name);
    if (!is) throw Error("missing golden file " + name);
    return Json::parse(is);
}

void expect_same(const Json &got, const Json &want) {
    ASSERT_EQ(got.size(), want.size());
    for (auto it = want.begin(); it != want.end(); ++it) {
        ASSERT_TRUE(got.contains(it.key())) << it.key();
        const auto &g = got[it.key()];
        if (it->is_number_float()) {
            EXPECT_NEAR(g.get<double>(), it->get<double>(), 1e-6) << it.key();
        } else if (it->is_object() && it.key() == "summary") {
            EXPECT_EQ(summary_from_json(g), summary_from_json(*it));
            if (it->contains("cost")) {
                for (const char *k : {"summary_bits", "correction_bits", "total_bits"}) {
                    EXPECT_NEAR(g["cost"][k].get<double>(), (*it)["cost"][k].get<double>(), 1e-6) << k;
                }
            }
        } else {
            EXPECT_EQ(g, *it) << it.key();
        }
    }
}

TEST(Golden, Toy) {
    const auto got = testing::golden_toy();
    expect_same(got, load("toy.json"));
    EXPECT_NEAR(got["oracle_total_bits"].get<double>(), got["summary"]["cost"]["total_bits"].get<double>(), 1e-9);
    EXPECT_LT(got["oracle_total_bits"].get<double>(), got["baseline_bits"].get<double>());
}

TEST(Golden, PlantedRun) { expect_same(testing::golden_planted_run(), load("planted_run.json")); }

TEST(Golden, PlantedGroundTruth) {
    const auto got = testing::golden_ground_truth();
    expect_same(got, load("planted_truth.json"));
    EXPECT_NEAR(got["oracle_total_bits"].get<double>(), got["summary"]["cost"]["total_bits"].get<double>(), 1e-9);
}

TEST(Golden, RunComesCloseToGroundTruth) {
    const auto run = load("planted_run.json");
    const auto truth = load("planted_truth.json");
    // Greedy leaves a few nodes out of their groups; it should still land within 10% of the
    // planted description.
    EXPECT_LT(run["bits_after"].get<double>(), 1.10 * truth["oracle_total_bits"].get<double>());
}

}  // namespace
}  // namespace lmgsum

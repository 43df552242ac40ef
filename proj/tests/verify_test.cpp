// Copyright 2026 The nichekit Authors
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

#include "nichekit/verify.hpp"

#include "gtest/gtest.h"

namespace nichekit {
namespace {

TEST(Verify, EveryCheckPassesAtSixVertices) {
    for (auto id : kTheoremIds) {
        auto r = verify(id, {.max_n = 6, .threads = 2});
        EXPECT_TRUE(r.passed) << id << ": " << r.summary << " / " << r.first_failure;
        EXPECT_EQ(r.id, id);
        EXPECT_GT(r.checked, 0u) << id;
        EXPECT_EQ(r.failures, 0u) << id;
    }
}

TEST(Verify, UnknownIdIsAnInputError) { EXPECT_THROW(verify("thm9.9", {}), InputError); }

TEST(Verify, SweepCountsEveryOrientation) {
    // n = 3: [1,1,1] has 8 orientations; n = 4 with k = 3: [2,1,1] has 32
    auto c = sweep_orientations({.max_n = 4, .threads = 1}, 3, 3, 0);
    EXPECT_EQ(c.tournaments, 40u);
    auto d = sweep_orientations({.max_n = 4, .threads = 3}, 3, 4, 0);
    EXPECT_EQ(d.tournaments, 40u + 64u);
}

TEST(Verify, ConnectedTriangleFreeClassCounts) {
    // independent counts (graph atlas): 1, 1, 3, 6, 19 for n = 2..6
    const std::size_t expect[] = {0, 1, 1, 1, 3, 6, 19};
    for (std::size_t n = 1; n <= 6; ++n) {
        auto gs = connected_triangle_free_graphs(n);
        EXPECT_EQ(gs.size(), expect[n]) << n;
        for (auto& g : gs) {
            EXPECT_TRUE(is_connected(g));
            EXPECT_FALSE(has_triangle(g));
        }
    }
    EXPECT_THROW(connected_triangle_free_graphs(9), GuardError);
}

TEST(Verify, PathSummaryListsTheRealizablePairs) {
    auto r = verify("lem4.3", {.max_n = 6, .threads = 1});
    EXPECT_NE(r.summary.find("{(3,3), (4,3), (4,4), (5,3)}"), std::string::npos) << r.summary;
}

} // namespace
} // namespace nichekit

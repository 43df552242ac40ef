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

#include "nichekit/properties.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "nichekit/realizability.hpp"
#include "test_support.hpp"

namespace nichekit {
namespace {

using testing::brute_canonical;
using testing::brute_isomorphic;

const Graph kEmpty3(3, std::span<const Edge>{});

/// Every labelled graph on n vertices, by edge mask.
std::vector<Graph> AllGraphs(std::size_t n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        std::vector<Edge> e;
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if ((m >> j) & 1u) e.push_back(pairs[j]);
        out.emplace_back(n, e);
    }
    return out;
}

TEST(Components, Examples) {
    EXPECT_EQ(components(kEmpty3).size(), 3u);
    EXPECT_EQ(components(path_graph(4)).size(), 1u);
    auto g = testing::disjoint_union(complete_graph(2), path_graph(3));
    EXPECT_EQ(components(g), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3, 4}}));
    EXPECT_FALSE(is_connected(g));
    EXPECT_FALSE(is_connected(Graph(0, std::span<const Edge>{})));
}

TEST(Components, WorksBeyondSixtyFourVertices) {
    auto g = testing::disjoint_union(path_graph(70), path_graph(3));
    EXPECT_EQ(components(g).size(), 2u);
}

TEST(Stability, Examples) {
    EXPECT_EQ(stability_number(cycle_graph(5)), 2u);
    EXPECT_EQ(stability_number(kEmpty3), 3u);
    EXPECT_EQ(stability_number(complete_graph(6)), 1u);
    EXPECT_EQ(stability_number(path_graph(7)), 4u);
}

TEST(Stability, AgreesWithSubsetScan) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
        std::uniform_int_distribution<std::size_t> nd(1, 16);
        std::uniform_real_distribution<double> pd(0.05, 0.9);
        auto g = testing::random_graph(rng, nd(rng), pd(rng));
        ASSERT_EQ(stability_number(g), testing::naive_stability(g)) << i;
    }
}

TEST(Stability, GuardAboveSixtyFour) { EXPECT_THROW(stability_number(path_graph(65)), GuardError); }

TEST(Diameter, Examples) {
    EXPECT_EQ(diameter(path_graph(6)), 5u);
    EXPECT_EQ(diameter(cycle_graph(6)), 3u);
    EXPECT_EQ(diameter(complete_graph(4)), 1u);
    EXPECT_EQ(diameter(Graph(1, std::span<const Edge>{})), 0u);
    EXPECT_FALSE(diameter(kEmpty3).has_value());
}

TEST(Diameter, AgreesWithFloydWarshall) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        auto g = testing::random_graph(rng, 9, 0.3);
        const std::size_t n = g.order(), inf = 1000;
        std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
        for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
        for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
        std::size_t best = 0;
        for (auto& row : d)
            for (auto x : row) best = std::max(best, x);
        if (best == inf) EXPECT_FALSE(diameter(g).has_value());
        else EXPECT_EQ(diameter(g), best);
    }
}

TEST(Triangle, Examples) {
    EXPECT_TRUE(has_triangle(complete_graph(3)));
    EXPECT_FALSE(has_triangle(cycle_graph(5)));
    EXPECT_FALSE(has_triangle(testing::complete_bipartite(3, 3)));
}

TEST(InducedP6, Examples) {
    EXPECT_FALSE(is_p6_free(path_graph(6)));
    EXPECT_TRUE(is_p6_free(cycle_graph(6)));
    EXPECT_FALSE(is_p6_free(cycle_graph(7)));
    EXPECT_TRUE(is_p6_free(path_graph(5)));
    EXPECT_TRUE(is_p6_free(complete_graph(8)));
}

TEST(InducedP6, AgreesWithSixSubsetScan) {
    std::mt19937_64 rng(13);
    std::size_t with_p6 = 0;
    for (int i = 0; i < 600; ++i) {
        std::uniform_int_distribution<std::size_t> nd(6, 10);
        std::uniform_real_distribution<double> pd(0.15, 0.5);
        auto g = testing::random_graph(rng, nd(rng), pd(rng));
        bool naive = testing::naive_has_induced_p6(g);
        ASSERT_EQ(is_p6_free(g), !naive) << i;
        with_p6 += naive;
    }
    EXPECT_GT(with_p6, 50u);
}

TEST(DisjointCliques, Recognition) {
    auto g = testing::disjoint_union(testing::disjoint_union(Graph(1, std::span<const Edge>{}), complete_graph(2)),
                                     complete_graph(5));
    EXPECT_EQ(recognize_disjoint_cliques(g), (std::vector<std::size_t>{5, 2, 1}));
    EXPECT_FALSE(recognize_disjoint_cliques(testing::disjoint_union(path_graph(3), complete_graph(1))));
}

TEST(Isomorphism, NamedPairs) {
    EXPECT_TRUE(isomorphic(cycle_graph(5), Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
    EXPECT_FALSE(isomorphic(cycle_graph(5), path_graph(5)));
    EXPECT_FALSE(isomorphic(path_graph(4), Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST(Isomorphism, G4AndG5AreCompleteBipartite) {
    EXPECT_TRUE(brute_isomorphic(named_graph(Named::G4), testing::complete_bipartite(2, 3)));
    EXPECT_TRUE(brute_isomorphic(named_graph(Named::G5), testing::complete_bipartite(3, 3)));
    EXPECT_TRUE(isomorphic(named_graph(Named::G4), testing::complete_bipartite(2, 3)));
    EXPECT_TRUE(isomorphic(named_graph(Named::G5), testing::complete_bipartite(3, 3)));
}

TEST(Isomorphism, ReturnedMapIsAnIsomorphism) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto g = testing::random_graph(rng, 10, 0.4);
        std::vector<Vertex> perm(10);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> e;
        for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
        Graph h(10, e);
        auto map = isomorphic(g, h);
        ASSERT_TRUE(map);
        for (Vertex u = 0; u < 10; ++u)
            for (Vertex v = u + 1; v < 10; ++v) ASSERT_EQ(g.adjacent(u, v), h.adjacent((*map)[u], (*map)[v]));
    }
}

TEST(Isomorphism, GuardAboveTwelve) {
    EXPECT_THROW(isomorphic(path_graph(13), path_graph(13)), GuardError);
    EXPECT_THROW(canonical_form(path_graph(13)), GuardError);
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto all = AllGraphs(n);
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = i; j < all.size(); j += 5)
                ASSERT_EQ(isomorphic(all[i], all[j]).has_value(), brute_isomorphic(all[i], all[j]));
    }
}

TEST(CanonicalForm, ElevenClassesOnFourVertices) {
    std::set<CanonicalForm> forms;
    std::set<std::vector<bool>> oracle;
    for (const auto& g : AllGraphs(4)) {
        forms.insert(canonical_form(g));
        oracle.insert(brute_canonical(g));
    }
    EXPECT_EQ(oracle.size(), 11u);
    EXPECT_EQ(forms.size(), 11u);
}

TEST(CanonicalForm, ClassCountsMatchPermutationOracle) {
    // graphs up to isomorphism: 1, 2, 4, 11, 34, 156
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<CanonicalForm> forms;
        std::set<std::vector<bool>> oracle;
        for (const auto& g : AllGraphs(n)) {
            forms.insert(canonical_form(g));
            if (n <= 5) oracle.insert(brute_canonical(g));
        }
        if (n <= 5) {
            EXPECT_EQ(forms.size(), oracle.size()) << n;
        }
        EXPECT_EQ(forms.size(), (std::array<std::size_t, 7>{0, 1, 2, 4, 11, 34, 156})[n]) << n;
    }
}

TEST(CanonicalForm, EqualIffIsomorphicOnFiveVertices) {
    auto all = AllGraphs(5);
    std::vector<CanonicalForm> forms;
    for (auto& g : all) forms.push_back(canonical_form(g));
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 3)
            ASSERT_EQ(forms[i] == forms[j], brute_isomorphic(all[i], all[j])) << i << " " << j;
}

TEST(CanonicalForm, InvariantUnderRelabellingAndRoundTrips) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        std::uniform_int_distribution<std::size_t> nd(1, 12);
        auto n = nd(rng);
        auto g = testing::random_graph(rng, n, 0.45);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> e;
        for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
        auto cf = canonical_form(g);
        ASSERT_EQ(cf, canonical_form(Graph(n, e)));
        ASSERT_EQ(cf.order(), n);
        ASSERT_TRUE(isomorphic(cf.graph(), g));
        ASSERT_EQ(canonical_form(cf.graph()), cf);
    }
}

TEST(CanonicalForm, RegularGraphsAreSeparated) {
    // both 3-regular on 6 vertices: the prism and K_{3,3}
    Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_NE(canonical_form(prism), canonical_form(testing::complete_bipartite(3, 3)));
    EXPECT_NE(canonical_form(cycle_graph(6)),
              canonical_form(testing::disjoint_union(cycle_graph(3), cycle_graph(3))));
}

} // namespace
} // namespace nichekit

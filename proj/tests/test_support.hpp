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

#ifndef NICHEKIT_TESTS_TEST_SUPPORT_HPP
#define NICHEKIT_TESTS_TEST_SUPPORT_HPP

// Reference oracles for the test suites. Nothing here calls into the search
// routines it is used to check.

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <vector>

#include "nichekit/graph.hpp"

namespace nichekit::testing {

/// Isomorphism by trying every vertex permutation.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!h.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Lexicographically smallest adjacency string over every permutation.
inline std::vector<bool> brute_canonical(const Graph& g) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        for (Vertex i = 0; i < g.order(); ++i)
            for (Vertex j = i + 1; j < g.order(); ++j) code.push_back(g.adjacent(perm[i], perm[j]));
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Largest stable set by scanning every vertex subset.
inline std::size_t naive_stability(const Graph& g) {
    const auto n = g.order();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool stable = true;
        for (auto [u, v] : g.edges())
            if (((s >> u) & 1u) && ((s >> v) & 1u)) {
                stable = false;
                break;
            }
        if (stable) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
    return best;
}

/// Induced P6 by scanning every 6-subset: the induced subgraph must be
/// connected with 5 edges and maximum degree 2.
inline bool naive_has_induced_p6(const Graph& g) {
    const auto n = g.order();
    if (n < 6) return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - 6, pick.end(), true);
    do {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v]) s.push_back(v);
        std::size_t edges = 0, max_deg = 0;
        for (auto u : s) {
            std::size_t d = 0;
            for (auto v : s)
                if (u != v && g.adjacent(u, v)) ++d;
            edges += d;
            max_deg = std::max(max_deg, d);
        }
        edges /= 2;
        if (edges != 5 || max_deg > 2) continue;
        // 5 edges, 6 vertices, max degree 2: a path iff connected
        std::vector<Vertex> stack{s[0]};
        std::vector<bool> seen(n, false);
        seen[s[0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : s)
                if (!seen[v] && g.adjacent(u, v)) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached == 6) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

/// Uniform random part sizes (k parts, n vertices) and a uniform orientation.
inline MultipartiteTournament random_tournament(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> sizes(k, 1);
    std::uniform_int_distribution<std::size_t> which(0, k - 1);
    for (std::size_t i = k; i < n; ++i) ++sizes[which(rng)];
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < k; ++i) part_of.insert(part_of.end(), sizes[i], i);
    std::bernoulli_distribution coin(0.5);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) arcs.push_back(coin(rng) ? Arc{u, v} : Arc{v, u});
    return MultipartiteTournament(sizes, arcs);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph(a + b, e);
}

} // namespace nichekit::testing

#endif // NICHEKIT_TESTS_TEST_SUPPORT_HPP

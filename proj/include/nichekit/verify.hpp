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

#ifndef NICHEKIT_VERIFY_HPP
#define NICHEKIT_VERIFY_HPP

/// \file verify.hpp
/// \brief Exhaustive re-verification of the structural results at desk scale.
///
/// Each check enumerates every orientation of every complete multipartite
/// graph in range (or every small graph of a family) and counts
/// counterexamples. A check passes only with zero counterexamples.

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "nichekit/enumeration.hpp"
#include "nichekit/realizability.hpp"

namespace nichekit {

struct VerifyOptions {
    std::size_t max_n = 6;
    std::size_t threads = 1;
};

struct Report {
    std::string id;
    bool passed = false;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string summary;
    std::string first_failure;
};

inline constexpr std::array<std::string_view, 10> kTheoremIds{"thm2.1", "thm2.2", "cor2.1", "thm3.1", "thm3.2",
                                                              "thm4.1", "thm4.2", "lem4.3", "lem4.5", "thm4.3"};

// ---------------------------------------------------------------------------
// Orientation sweep

enum SweepCheck : unsigned {
    kCheckConnectedK4 = 1u << 0, // k >= 4: niche connected
    kCheckStability = 1u << 1,   // alpha <= 3
    kCheckComponents = 1u << 2,  // at most 3 components
    kCheckP6 = 1u << 3,          // induced-P6-free
    kCheckDiameter = 1u << 4,    // every component has diameter <= 4
    kCheckThreeCliques = 1u << 5,
    kCheckExpansion = 1u << 6,
};

struct SweepCounters {
    std::uint64_t tournaments = 0;
    std::uint64_t tournaments_k4 = 0;
    std::uint64_t disconnected_k4 = 0;
    std::uint64_t stability_over_3 = 0;
    std::uint64_t components_over_3 = 0;
    std::uint64_t induced_p6 = 0;
    std::uint64_t diameter_over_4 = 0;
    std::uint64_t three_component = 0;
    std::uint64_t three_component_failures = 0;
    std::uint64_t two_component = 0;
    std::uint64_t two_component_failures = 0;
    std::string first_failure;

    void add(const SweepCounters& o) {
        tournaments += o.tournaments;
        tournaments_k4 += o.tournaments_k4;
        disconnected_k4 += o.disconnected_k4;
        stability_over_3 += o.stability_over_3;
        components_over_3 += o.components_over_3;
        induced_p6 += o.induced_p6;
        diameter_over_4 += o.diameter_over_4;
        three_component += o.three_component;
        three_component_failures += o.three_component_failures;
        two_component += o.two_component;
        two_component_failures += o.two_component_failures;
        if (first_failure.empty()) first_failure = o.first_failure;
    }
};

inline std::string describe_orientation(const std::vector<std::size_t>& parts, std::uint64_t index) {
    std::ostringstream os;
    os << "parts [";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "] index " << index;
    return os.str();
}

/// Visits every orientation of every partition of n into k parts for
/// 3 <= n <= max_n and k in [k_min, k_max], running the selected checks.
inline SweepCounters sweep_orientations(const VerifyOptions& opt, std::size_t k_min, std::size_t k_max,
                                        unsigned checks) {
    SweepCounters total;
    for (std::size_t n = 3; n <= opt.max_n; ++n)
        for (std::size_t k = std::max<std::size_t>(k_min, 3); k <= std::min(k_max, n); ++k)
            for (const auto& p : partitions(n, k)) {
                OrientationSpace space(p);
                const auto threads = std::max<std::size_t>(opt.threads, 1);
                std::vector<SweepCounters> partial(threads);
                parallel_chunks(space.all(), threads, 1u << 13, [&](IndexRange r, std::size_t w) {
                    auto& c = partial[w];
                    std::array<std::uint64_t, 64> rows{};
                    auto fail = [&](std::uint64_t& counter, std::uint64_t index, std::string_view what) {
                        ++counter;
                        if (c.first_failure.empty())
                            c.first_failure = std::string(what) + " at " + describe_orientation(p.sizes(), index);
                    };
                    for (auto i = r.begin; i < r.end; ++i) {
                        ++c.tournaments;
                        space.niche_rows(i, rows.data());
                        AdjacencyView g{n, std::span<const std::uint64_t>(rows.data(), n)};
                        auto comps = component_masks(g);
                        if ((checks & kCheckConnectedK4) && k >= 4) {
                            ++c.tournaments_k4;
                            if (comps.size() != 1) fail(c.disconnected_k4, i, "disconnected niche graph with k>=4");
                        }
                        if ((checks & kCheckComponents) && comps.size() > 3)
                            fail(c.components_over_3, i, "more than three components");
                        if ((checks & kCheckStability) && stability_number(g) > 3)
                            fail(c.stability_over_3, i, "stability number above 3");
                        if ((checks & kCheckP6) && !is_p6_free(g)) fail(c.induced_p6, i, "induced P6");
                        if (checks & kCheckDiameter)
                            for (auto comp : comps)
                                if (component_diameter(g, comp) > 4) {
                                    fail(c.diameter_over_4, i, "component of diameter above 4");
                                    break;
                                }
                        if (k == 3 && comps.size() == 3 && (checks & kCheckThreeCliques)) {
                            ++c.three_component;
                            auto sizes = recognize_disjoint_cliques(Graph::from_rows(n, g.rows));
                            if (!sizes || sizes->size() != 3)
                                fail(c.three_component_failures, i, "three components that are not all cliques");
                        }
                        if (k == 3 && comps.size() == 2 && (checks & kCheckExpansion)) {
                            ++c.two_component;
                            if (!recognize_expansion_p3_k1(Graph::from_rows(n, g.rows)))
                                fail(c.two_component_failures, i, "two components that are not a P3+K1 expansion");
                        }
                    }
                });
                for (auto& c : partial) total.add(c);
            }
    return total;
}

// ---------------------------------------------------------------------------
// Individual checks

namespace detail {

inline Report finish(std::string id, std::uint64_t checked, std::uint64_t failures, std::string summary,
                     std::string first_failure = {}) {
    Report r;
    r.id = std::move(id);
    r.checked = checked;
    r.failures = failures;
    r.passed = failures == 0;
    r.summary = std::move(summary);
    r.first_failure = std::move(first_failure);
    return r;
}

inline std::string pair_list(const std::set<std::pair<std::size_t, std::size_t>>& s) {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : s) {
        out += (first ? "(" : ", (") + std::to_string(a) + "," + std::to_string(b) + ")";
        first = false;
    }
    return out + "}";
}

/// Compositions of `total` into `parts` positive integers.
inline void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (parts == 0) {
        if (total == 0) fn(cur);
        return;
    }
    for (std::size_t s = 1; s + (parts - 1) <= total; ++s) {
        cur.push_back(s);
        compositions(total - s, parts - 1, cur, fn);
        cur.pop_back();
    }
}

} // namespace detail

inline Report verify_connectivity(const VerifyOptions& opt) {
    auto c = sweep_orientations(opt, 4, opt.max_n, kCheckConnectedK4);
    return detail::finish("thm2.1", c.tournaments_k4, c.disconnected_k4,
                          std::to_string(c.disconnected_k4) + " disconnected niche graphs across " +
                              std::to_string(c.tournaments_k4) + " orientations with k>=4",
                          c.first_failure);
}

inline Report verify_stability(const VerifyOptions& opt) {
    auto c = sweep_orientations(opt, 3, opt.max_n, kCheckStability);
    return detail::finish("thm2.2", c.tournaments, c.stability_over_3,
                          std::to_string(c.stability_over_3) + " niche graphs with stability number above 3 across " +
                              std::to_string(c.tournaments) + " orientations",
                          c.first_failure);
}

inline Report verify_components(const VerifyOptions& opt) {
    auto c = sweep_orientations(opt, 3, opt.max_n, kCheckComponents);
    return detail::finish("cor2.1", c.tournaments, c.components_over_3,
                          std::to_string(c.components_over_3) + " niche graphs with more than three components across " +
                              std::to_string(c.tournaments) + " orientations",
                          c.first_failure);
}

inline Report verify_p6(const VerifyOptions& opt) {
    auto c = sweep_orientations(opt, 3, opt.max_n, kCheckP6 | kCheckDiameter);
    return detail::finish("thm4.2", c.tournaments, c.induced_p6 + c.diameter_over_4,
                          std::to_string(c.induced_p6) + " induced P6 found across all orientations (" +
                              std::to_string(c.tournaments) + " checked; " + std::to_string(c.diameter_over_4) +
                              " components of diameter above 4)",
                          c.first_failure);
}

inline Report verify_three_cliques(const VerifyOptions& opt) {
    auto c = sweep_orientations(opt, 3, 3, kCheckThreeCliques);
    std::uint64_t built = 0, bad = 0;
    std::string first = c.first_failure;
    for (std::size_t total = 3; total <= opt.max_n; ++total) {
        std::vector<std::size_t> cur;
        detail::compositions(total, 3, cur, [&](const std::vector<std::size_t>& s) {
            ++built;
            auto sizes = recognize_disjoint_cliques(niche_graph(construct_three_cliques(s[0], s[1], s[2])));
            auto want = s;
            std::sort(want.begin(), want.end(), std::greater<>{});
            if (!sizes || *sizes != want) {
                ++bad;
                if (first.empty()) first = "construction (" + std::to_string(s[0]) + "," + std::to_string(s[1]) +
                                           "," + std::to_string(s[2]) + ") misses K_p+K_q+K_r";
            }
        });
    }
    return detail::finish("thm3.1", c.three_component + built, c.three_component_failures + bad,
                          std::to_string(c.three_component_failures) + " of " + std::to_string(c.three_component) +
                              " three-component niche graphs are not three cliques; " + std::to_string(bad) + " of " +
                              std::to_string(built) + " constructions fail",
                          first);
}

inline Report verify_expansions(const VerifyOptions& opt) {
    auto c = sweep_orientations(opt, 3, 3, kCheckExpansion);
    std::uint64_t built = 0, bad = 0;
    std::string first = c.first_failure;
    for (std::size_t total = 4; total <= opt.max_n; ++total) {
        std::vector<std::size_t> cur;
        detail::compositions(total, 4, cur, [&](const std::vector<std::size_t>& s) {
            ++built;
            auto target = expand(ExpansionSpec(p3_plus_k1(), s));
            auto witness = construct_expansion_witness(s);
            if (witness.parts() != 3 || !isomorphic(niche_graph(witness), target)) {
                ++bad;
                if (first.empty()) first = "expansion witness fails for sizes " + describe_orientation(s, 0);
            }
        });
    }
    return detail::finish("thm3.2", c.two_component + built, c.two_component_failures + bad,
                          std::to_string(c.two_component_failures) + " of " + std::to_string(c.two_component) +
                              " two-component niche graphs are not P3+K1 expansions; " + std::to_string(bad) + " of " +
                              std::to_string(built) + " constructions fail",
                          first);
}

inline Report verify_complete(const VerifyOptions& opt) {
    std::uint64_t checked = 0, bad = 0;
    std::string first;
    std::set<std::pair<std::size_t, std::size_t>> yes;
    for (std::size_t n = 3; n <= opt.max_n; ++n)
        for (std::size_t k = 3; k <= n; ++k) {
            ++checked;
            auto g = complete_graph(n);
            auto verdict = decide(g, k, {.guard = std::max(opt.max_n, kDefaultRealizeGuard), .threads = opt.threads});
            auto oracle = brute_force_realize(g, k, {.guard = opt.max_n, .threads = opt.threads});
            bool expect = complete_realizable(n, k);
            bool ok = (verdict.answer == Answer::Yes) == expect && oracle.has_value() == expect &&
                      verdict.answer != Answer::Unknown;
            if (verdict.witness && !is_connected(niche_graph(*verdict.witness))) ok = false;
            if (verdict.witness && niche_graph(*verdict.witness).size() != n * (n - 1) / 2) ok = false;
            if (oracle) yes.insert({n, k});
            if (!ok) {
                ++bad;
                if (first.empty()) first = "(K_" + std::to_string(n) + ", " + std::to_string(k) + ")";
            }
        }
    return detail::finish("thm4.1", checked, bad,
                          std::to_string(bad) + " mismatches; realizable pairs " + detail::pair_list(yes), first);
}

namespace detail {

inline Report verify_family(std::string id, std::size_t min_n, std::size_t max_n, Graph (*make)(std::size_t),
                            const std::set<std::pair<std::size_t, std::size_t>>& expected, std::size_t threads) {
    std::uint64_t checked = 0, bad = 0;
    std::string first;
    std::set<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t n = min_n; n <= max_n; ++n)
        for (std::size_t k = 3; k <= n; ++k) {
            ++checked;
            auto w = brute_force_realize(make(n), k, {.guard = max_n, .threads = threads});
            if (w) found.insert({n, k});
            bool listed = expected.contains({n, k});
            auto verdict = decide(make(n), k, {.guard = max_n, .threads = threads});
            if (w.has_value() != listed || (verdict.answer == Answer::Yes) != listed) {
                ++bad;
                if (first.empty()) first = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    return finish(std::move(id), checked, bad,
                  std::to_string(bad) + " mismatches; realizable pairs " + pair_list(found), first);
}

} // namespace detail

inline const std::set<std::pair<std::size_t, std::size_t>> kPathRealizable{{3, 3}, {4, 3}, {4, 4}, {5, 3}};
inline const std::set<std::pair<std::size_t, std::size_t>> kCycleRealizable{{5, 3}, {5, 4}, {5, 5}, {6, 3}};

inline Report verify_paths(const VerifyOptions& opt) {
    return detail::verify_family("lem4.3", 3, opt.max_n, path_graph, kPathRealizable, opt.threads);
}

inline Report verify_cycles(const VerifyOptions& opt) {
    return detail::verify_family("lem4.5", 3, opt.max_n, cycle_graph, kCycleRealizable, opt.threads);
}

/// Representatives of the isomorphism classes of connected triangle-free
/// graphs on n vertices (edge-set enumeration, canonical dedup).
inline std::vector<Graph> connected_triangle_free_graphs(std::size_t n) {
    if (n > 8) throw GuardError("connected_triangle_free_graphs enumerates at most 8 vertices");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<CanonicalForm> seen;
    std::vector<Graph> out;
    std::array<std::uint64_t, 64> rows{};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
        rows.fill(0);
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if ((mask >> j) & 1u) {
                rows[pairs[j].first] |= std::uint64_t{1} << pairs[j].second;
                rows[pairs[j].second] |= std::uint64_t{1} << pairs[j].first;
            }
        AdjacencyView g{n, std::span<const std::uint64_t>(rows.data(), n)};
        if (has_triangle(g) || component_masks(g).size() != 1) continue;
        if (seen.insert(canonical_form(g)).second) out.push_back(Graph::from_rows(n, g.rows));
    }
    return out;
}

/// Expected realizable part counts for a connected triangle-free graph.
inline std::vector<std::size_t> triangle_free_table(const Graph& g) {
    for (auto t : kAllNamed) {
        auto h = named_graph(t);
        if (h.order() == g.order() && isomorphic(g, h)) return realizable_part_counts(t);
    }
    return {};
}

inline Report verify_triangle_free(const VerifyOptions& opt) {
    std::uint64_t checked = 0, bad = 0;
    std::string first;
    std::size_t classes = 0;
    for (std::size_t n = 3; n <= opt.max_n; ++n)
        for (const auto& g : connected_triangle_free_graphs(n)) {
            ++classes;
            auto table = triangle_free_table(g);
            for (std::size_t k = 3; k <= n; ++k) {
                ++checked;
                bool listed = std::find(table.begin(), table.end(), k) != table.end();
                auto verdict = decide(g, k, {.guard = opt.max_n, .threads = opt.threads});
                auto oracle = brute_force_realize(g, k, {.guard = opt.max_n, .threads = opt.threads});
                if ((verdict.answer == Answer::Yes) != listed || oracle.has_value() != listed ||
                    verdict.answer == Answer::Unknown) {
                    ++bad;
                    if (first.empty()) {
                        std::ostringstream os;
                        os << "graph on " << n << " vertices with " << g.size() << " edges, k=" << k;
                        first = os.str();
                    }
                }
            }
        }
    return detail::finish("thm4.3", checked, bad,
                          std::to_string(bad) + " disagreements over " + std::to_string(classes) +
                              " connected triangle-free graphs (" + std::to_string(checked) + " (G,k) pairs)",
                          first);
}

/// Runs one check by id ("thm2.1", ..., "thm4.3").
inline Report verify(std::string_view id, const VerifyOptions& opt) {
    if (id == "thm2.1") return verify_connectivity(opt);
    if (id == "thm2.2") return verify_stability(opt);
    if (id == "cor2.1") return verify_components(opt);
    if (id == "thm3.1") return verify_three_cliques(opt);
    if (id == "thm3.2") return verify_expansions(opt);
    if (id == "thm4.1") return verify_complete(opt);
    if (id == "thm4.2") return verify_p6(opt);
    if (id == "lem4.3") return verify_paths(opt);
    if (id == "lem4.5") return verify_cycles(opt);
    if (id == "thm4.3") return verify_triangle_free(opt);
    throw InputError("unknown theorem id '" + std::string(id) + "'");
}

} // namespace nichekit

#endif // NICHEKIT_VERIFY_HPP

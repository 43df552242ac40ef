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

#ifndef NICHEKIT_REALIZABILITY_HPP
#define NICHEKIT_REALIZABILITY_HPP

/// \file realizability.hpp
/// \brief Deciding whether (G, k) is niche-realizable for k >= 3.
///
/// decide() walks a fixed ladder: order check, component count, complete
/// graphs, connected triangle-free graphs, then the stability-number and
/// induced-P6 screens before falling back to exhaustive search. Every Yes
/// carries a witness tournament that is re-checked against G before it is
/// returned.

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "nichekit/enumeration.hpp"
#include "nichekit/graph.hpp"
#include "nichekit/niche.hpp"
#include "nichekit/properties.hpp"
#include "nichekit/witness_tables.hpp"

namespace nichekit {

/// Identifiers of the results a verdict can rest on.
namespace citation {
inline constexpr std::string_view kThreeCliques = "Thm3.1";
inline constexpr std::string_view kExpansion = "Thm3.2";
inline constexpr std::string_view kComplete = "Thm4.1(complete)";
inline constexpr std::string_view kConnectivity = "Thm2.1(connectivity)";
inline constexpr std::string_view kComponents = "Cor2.1(components)";
inline constexpr std::string_view kStability = "Thm2.2(stability)";
inline constexpr std::string_view kP6 = "Thm4.2(P6)";
inline constexpr std::string_view kPath = "Lem4.3(path)";
inline constexpr std::string_view kCycle = "Lem4.5(cycle)";
inline constexpr std::string_view kTriangleFree = "Thm4.3(triangle-free)";
inline constexpr std::string_view kOracle = "Oracle";

inline constexpr std::array<std::string_view, 11> kAll{kThreeCliques, kExpansion, kComplete, kConnectivity,
                                                       kComponents,   kStability, kP6,       kPath,
                                                       kCycle,        kTriangleFree, kOracle};

/// "Thm4.1(complete)" -> "Theorem 4.1"
inline std::string display(std::string_view id) {
    if (id == kOracle) return "exhaustive search";
    auto base = id.substr(0, id.find('('));
    std::string out;
    if (base.starts_with("Thm")) out = "Theorem ";
    else if (base.starts_with("Lem")) out = "Lemma ";
    else if (base.starts_with("Cor")) out = "Corollary ";
    return out + std::string(base.substr(3));
}
} // namespace citation

enum class Answer { Yes, No, Unknown };

inline std::string_view to_string(Answer a) {
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
    }
    return "unknown";
}

struct Verdict {
    Answer answer = Answer::Unknown;
    std::optional<MultipartiteTournament> witness; // iff Yes
    std::string citation;                          // iff Yes or No
    std::string reason;                            // iff Unknown

    static Verdict yes(MultipartiteTournament w, std::string_view cite) {
        return {Answer::Yes, std::move(w), std::string(cite), {}};
    }
    static Verdict no(std::string_view cite) { return {Answer::No, std::nullopt, std::string(cite), {}}; }
    static Verdict unknown(std::string why) { return {Answer::Unknown, std::nullopt, {}, std::move(why)}; }
};

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

/// Tournament from a block-level arc pattern: every vertex of block a beats
/// every vertex of block b for each (a, b) in `pattern`. Blocks are laid out
/// consecutively; `part_of_block` groups them into parts.
inline MultipartiteTournament from_block_pattern(const std::vector<std::size_t>& block_sizes,
                                                 const std::vector<std::size_t>& part_of_block,
                                                 std::span<const std::pair<std::size_t, std::size_t>> pattern) {
    std::vector<Vertex> start(block_sizes.size() + 1, 0);
    for (std::size_t b = 0; b < block_sizes.size(); ++b) start[b + 1] = start[b] + block_sizes[b];
    std::vector<std::size_t> parts;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        if (part_of_block[b] >= parts.size()) parts.resize(part_of_block[b] + 1, 0);
        parts[part_of_block[b]] += block_sizes[b];
    }
    std::vector<Arc> arcs;
    for (auto [a, b] : pattern)
        for (Vertex u = start[a]; u < start[a + 1]; ++u)
            for (Vertex v = start[b]; v < start[b + 1]; ++v) arcs.emplace_back(u, v);
    return MultipartiteTournament(std::move(parts), arcs);
}

} // namespace detail

/// Parts X, Y, Z of sizes p, q, r with X -> Y -> Z -> X. The niche graph is
/// K_p ∪ K_q ∪ K_r.
inline MultipartiteTournament construct_three_cliques(std::size_t p, std::size_t q, std::size_t r) {
    if (p == 0 || q == 0 || r == 0) throw InputError("clique sizes must be positive");
    static constexpr std::pair<std::size_t, std::size_t> pattern[] = {{0, 1}, {1, 2}, {2, 0}};
    return detail::from_block_pattern({p, q, r}, {0, 1, 2}, pattern);
}

/// Witness for an expansion of P3 ∪ K1 with block sizes ordered as in
/// recognize_expansion_p3_k1: (isolated, end, middle, end).
///
/// Internally the blocks are X1 = isolated, X2 = middle, X3 and X4 = the ends,
/// with parts (X1 ∪ X2, X3, X4) and block arcs X1->X3, X2->X4, X3->X2,
/// X3->X4, X4->X1.
inline MultipartiteTournament construct_expansion_witness(std::span<const std::size_t> sizes) {
    if (sizes.size() != 4) throw InputError("expansion witness needs exactly 4 block sizes");
    for (auto s : sizes)
        if (s == 0) throw InputError("block sizes must be positive");
    static constexpr std::pair<std::size_t, std::size_t> pattern[] = {{0, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 0}};
    return detail::from_block_pattern({sizes[0], sizes[2], sizes[1], sizes[3]}, {0, 0, 1, 2}, pattern);
}

/// Which completion rule fills arcs the complete-graph construction leaves
/// free. The niche graph is K_n for every completion.
using ArcChooser = std::function<bool(Vertex, Vertex)>; // true: lower -> higher

inline bool complete_realizable(std::size_t n, std::size_t k) {
    return k >= 3 && n >= k && ((n == 4 && k == 4) || n >= 5);
}

/// Witness with niche graph K_n and k parts, for (n, k) = (4, 4) or n >= 5.
/// With k = 3 the parts are {v1}, {v2, v3}, {v4..vn}; with k >= 4 they are
/// {v1}, ..., {v_{k-1}}, {v_k..v_n} (1-based names, vertex i-1 here).
inline MultipartiteTournament construct_complete(std::size_t n, std::size_t k, const ArcChooser& free_arc = {}) {
    if (!complete_realizable(n, k))
        throw InputError("(K_" + std::to_string(n) + ", " + std::to_string(k) + ") is not niche-realizable");
    std::vector<std::size_t> parts;
    std::vector<Arc> forced;
    auto arc = [&](std::size_t a, std::size_t b) { forced.emplace_back(a - 1, b - 1); };
    if (k == 3) {
        parts = {1, 2, n - 3};
        for (std::size_t i = 2; i <= n; ++i) arc(1, i);
        arc(2, 4), arc(4, 3), arc(3, 5), arc(5, 2);
        for (std::size_t i = 6; i <= n; ++i) arc(i, 2);
    } else {
        parts.assign(k - 1, 1);
        parts.push_back(n - k + 1);
        for (std::size_t i = 2; i <= n; ++i) arc(1, i);
        for (std::size_t i = 2; i <= k - 2; ++i) arc(i, i + 1);
        for (std::size_t i = k; i <= n; ++i) arc(k - 1, i), arc(i, 2);
    }

    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
    std::vector<std::vector<bool>> fixed(n, std::vector<bool>(n, false));
    for (auto [u, v] : forced) fixed[u][v] = fixed[v][u] = true;
    std::vector<Arc> arcs = forced;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v] && !fixed[u][v]) {
                if (!free_arc || free_arc(u, v)) arcs.emplace_back(u, v);
                else arcs.emplace_back(v, u);
            }
    return MultipartiteTournament(std::move(parts), arcs);
}

enum class Named { P3, P4, P5, C5, C6, G4, G5 };

inline constexpr std::array<Named, 7> kAllNamed{Named::P3, Named::P4, Named::P5, Named::C5,
                                                Named::C6, Named::G4, Named::G5};

inline std::string_view name_of(Named t) {
    static constexpr std::string_view names[] = {"P3", "P4", "P5", "C5", "C6", "G4", "G5"};
    return names[static_cast<std::size_t>(t)];
}

inline std::optional<Named> parse_named(std::string_view s) {
    for (auto t : kAllNamed)
        if (name_of(t) == s) return t;
    return std::nullopt;
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

/// The named connected triangle-free targets. G4 and G5 keep the usual
/// labelling x1..x5 (x1..x6) shifted to 0..4 (0..5).
inline Graph named_graph(Named t) {
    switch (t) {
    case Named::P3: return path_graph(3);
    case Named::P4: return path_graph(4);
    case Named::P5: return path_graph(5);
    case Named::C5: return cycle_graph(5);
    case Named::C6: return cycle_graph(6);
    case Named::G4: return Graph(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    case Named::G5:
        return Graph(6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 0}});
    }
    throw InputError("unknown named graph");
}

/// Part counts k for which each named target is realizable.
inline std::vector<std::size_t> realizable_part_counts(Named t) {
    switch (t) {
    case Named::P4: return {3, 4};
    case Named::C5: return {3, 4, 5};
    default: return {3};
    }
}

inline bool named_realizable(Named t, std::size_t k) {
    auto ks = realizable_part_counts(t);
    return std::find(ks.begin(), ks.end(), k) != ks.end();
}

/// Orientation of K_{2,2,2} on v0..v5 where v_i beats v_{i+1} and v_{i+2}
/// (indices mod 6). Parts {v0,v3}, {v1,v4}, {v2,v5} are laid out as blocks,
/// so v0,v3,v1,v4,v2,v5 become vertices 0..5.
inline MultipartiteTournament construct_c6_witness() {
    static constexpr std::size_t block_of[6] = {0, 2, 4, 1, 3, 5};
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < 6; ++i) {
        arcs.emplace_back(block_of[i], block_of[(i + 1) % 6]);
        arcs.emplace_back(block_of[i], block_of[(i + 2) % 6]);
    }
    return MultipartiteTournament({2, 2, 2}, arcs);
}

/// Witness with k parts whose niche graph is isomorphic to the named target.
inline MultipartiteTournament construct_named(Named t, std::size_t k) {
    if (!named_realizable(t, k))
        throw InputError("(" + std::string(name_of(t)) + ", " + std::to_string(k) + ") is not niche-realizable");
    if (t == Named::C6) return construct_c6_witness();
    for (const auto& w : witness_tables::kNamedWitnesses)
        if (w.target == name_of(t) && w.parts == k)
            return MultipartiteTournament(std::vector<std::size_t>(w.part_sizes.begin(), w.part_sizes.end()),
                                          std::span<const Arc>(w.arcs.begin(), w.arcs.end()));
    throw InputError("no stored witness for " + std::string(name_of(t)));
}

// ---------------------------------------------------------------------------
// Isomorphism check usable beyond the generic size guard

/// G ≅ H, decided on the true-twin quotients with class sizes as colours when
/// the graphs are too large for direct search.
inline bool same_up_to_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.order() <= kIsomorphismLimit) return isomorphic(g, h).has_value();

    auto quotient = [](const Graph& x, std::vector<std::size_t>& colour) {
        auto tc = twin_classes_graph(x);
        std::vector<Edge> e;
        for (std::size_t a = 0; a < tc.count(); ++a) {
            colour.push_back(tc.classes[a].size());
            for (std::size_t b = a + 1; b < tc.count(); ++b)
                if (x.adjacent(tc.classes[a].front(), tc.classes[b].front())) e.emplace_back(a, b);
        }
        return Graph(tc.count(), e);
    };
    std::vector<std::size_t> cg, ch;
    auto qg = quotient(g, cg), qh = quotient(h, ch);
    if (qg.order() != qh.order() || qg.order() > 64) {
        if (qg.order() != qh.order()) return false;
        throw GuardError("twin quotient too large to compare");
    }
    return isomorphic_coloured(qg, cg, qh, ch).has_value();
}

// ---------------------------------------------------------------------------
// Decision procedure

struct DecideOptions {
    std::size_t guard = kDefaultRealizeGuard;
    std::size_t threads = 1;
};

/// Default brute-force guard, overridable through NICHEKIT_GUARD.
inline std::size_t default_guard() {
    if (const char* env = std::getenv("NICHEKIT_GUARD")) {
        char* end = nullptr;
        auto v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultRealizeGuard;
}

namespace detail {

inline bool is_path(const Graph& g) {
    if (g.order() == 0 || g.size() + 1 != g.order() || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

inline bool is_cycle(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - (g.order() ? 1 : 0)); }

inline Verdict checked_yes(const Graph& g, MultipartiteTournament w, std::string_view cite) {
    if (!same_up_to_isomorphism(niche_graph(w), g))
        throw std::logic_error("witness for " + std::string(cite) + " does not reproduce the queried graph");
    return Verdict::yes(std::move(w), cite);
}

inline Verdict decide_triangle_free(const Graph& g, std::size_t k) {
    for (auto t : kAllNamed) {
        auto h = named_graph(t);
        if (h.order() != g.order() || !isomorphic(g, h)) continue;
        if (!named_realizable(t, k)) break;
        auto cite = is_path(g) ? citation::kPath : is_cycle(g) ? citation::kCycle : citation::kTriangleFree;
        return checked_yes(g, construct_named(t, k), cite);
    }
    if (g.order() <= 64 && !is_p6_free(g)) return Verdict::no(citation::kP6);
    if (is_path(g)) return Verdict::no(citation::kPath);
    if (is_cycle(g)) return Verdict::no(citation::kCycle);
    return Verdict::no(citation::kTriangleFree);
}

} // namespace detail

/// Realizability of (g, k) for k >= 3.
inline Verdict decide(const Graph& g, std::size_t k, const DecideOptions& opt = {}) {
    if (k < 3) throw InputError("decide covers k >= 3 only");
    const auto n = g.order();

    // a k-partite tournament has at least k vertices
    if (n < k) return Verdict::no(citation::kOracle);

    auto comps = components(g);
    if (comps.size() >= 4) return Verdict::no(citation::kComponents);
    if (comps.size() >= 2 && k >= 4) return Verdict::no(citation::kConnectivity);
    if (comps.size() == 3) {
        auto sizes = recognize_disjoint_cliques(g);
        if (!sizes) return Verdict::no(citation::kThreeCliques);
        return detail::checked_yes(g, construct_three_cliques((*sizes)[0], (*sizes)[1], (*sizes)[2]),
                                   citation::kThreeCliques);
    }
    if (comps.size() == 2) {
        auto spec = recognize_expansion_p3_k1(g);
        if (!spec) return Verdict::no(citation::kExpansion);
        return detail::checked_yes(g, construct_expansion_witness(spec->sizes()), citation::kExpansion);
    }

    if (detail::is_complete(g)) {
        if (!complete_realizable(n, k)) return Verdict::no(citation::kComplete);
        return detail::checked_yes(g, construct_complete(n, k), citation::kComplete);
    }

    if (!has_triangle(g)) return detail::decide_triangle_free(g, k);

    if (n > 64) return Verdict::unknown("graph too large for the stability and induced-P6 screens");
    if (stability_number(g) > 3) return Verdict::no(citation::kStability);
    if (!is_p6_free(g)) return Verdict::no(citation::kP6);
    if (n > opt.guard)
        return Verdict::unknown("connected, non-complete graph with a triangle on " + std::to_string(n) +
                                " vertices exceeds the exhaustive-search guard of " + std::to_string(opt.guard));
    try {
        auto w = brute_force_realize(g, k, {.guard = opt.guard, .threads = opt.threads});
        if (!w) return Verdict::no(citation::kOracle);
        return detail::checked_yes(g, std::move(*w), citation::kOracle);
    } catch (const GuardError& e) {
        return Verdict::unknown(e.what());
    }
}

} // namespace nichekit

#endif // NICHEKIT_REALIZABILITY_HPP

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

#ifndef NICHEKIT_NICHE_HPP
#define NICHEKIT_NICHE_HPP

/// \file niche.hpp
/// \brief The niche-graph operator, true twins, and clique expansions.

#include <map>
#include <optional>
#include <vector>

#include "nichekit/graph.hpp"

namespace nichekit {

namespace detail {

/// Niche rows for a digraph on at most 64 vertices given as out/in masks.
/// Writes n rows into `niche`.
inline void niche_rows(std::size_t n, const std::uint64_t* out, const std::uint64_t* in, std::uint64_t* niche) {
    for (std::size_t u = 0; u < n; ++u) niche[u] = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if ((out[u] & out[v]) | (in[u] & in[v])) {
                niche[u] |= std::uint64_t{1} << v;
                niche[v] |= std::uint64_t{1} << u;
            }
}

} // namespace detail

/// u and v are adjacent iff they share an out-neighbour or an in-neighbour.
inline Graph niche_graph(const Digraph& d) {
    const auto n = d.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (detail::rows_intersect(d.out_row(u), d.out_row(v)) ||
                detail::rows_intersect(d.in_row(u), d.in_row(v)))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph niche_graph(const MultipartiteTournament& d) { return niche_graph(d.digraph()); }

/// Partition of 0..n-1 into groups; each group sorted, groups ordered by
/// least member.
struct TwinClasses {
    std::vector<std::vector<Vertex>> classes;

    std::size_t count() const { return classes.size(); }

    /// class index of every vertex
    std::vector<std::size_t> membership(std::size_t n) const {
        std::vector<std::size_t> of(n);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c]) of[v] = c;
        return of;
    }

    friend bool operator==(const TwinClasses&, const TwinClasses&) = default;
};

namespace detail {

template <class Key>
TwinClasses group_by(std::size_t n, Key key) {
    std::map<decltype(key(Vertex{})), std::size_t> first;
    TwinClasses tc;
    for (Vertex v = 0; v < n; ++v) {
        auto [it, fresh] = first.try_emplace(key(v), tc.classes.size());
        if (fresh) tc.classes.emplace_back();
        tc.classes[it->second].push_back(v);
    }
    return tc;
}

inline std::vector<std::uint64_t> copy_row(std::span<const std::uint64_t> r) { return {r.begin(), r.end()}; }

} // namespace detail

/// Groups vertices with identical open out- and in-neighbourhoods.
inline TwinClasses twin_classes_digraph(const Digraph& d) {
    return detail::group_by(d.order(), [&](Vertex v) {
        return std::make_pair(detail::copy_row(d.out_row(v)), detail::copy_row(d.in_row(v)));
    });
}

inline TwinClasses twin_classes_digraph(const MultipartiteTournament& d) {
    return twin_classes_digraph(d.digraph());
}

/// Groups vertices with identical closed neighbourhoods. Two isolated
/// vertices are never twins here.
inline TwinClasses twin_classes_graph(const Graph& g) {
    return detail::group_by(g.order(), [&](Vertex v) {
        auto r = detail::copy_row(g.row(v));
        r[v / 64] |= std::uint64_t{1} << (v % 64);
        return r;
    });
}

/// A base graph together with one clique size per base vertex.
class ExpansionSpec {
public:
    ExpansionSpec(Graph base, std::vector<std::size_t> sizes) : base_(std::move(base)), sizes_(std::move(sizes)) {
        if (sizes_.size() != base_.order())
            throw InputError("expansion needs one size per base vertex");
        for (auto s : sizes_)
            if (s == 0) throw InputError("expansion sizes must be positive");
    }

    const Graph& base() const { return base_; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }

private:
    Graph base_;
    std::vector<std::size_t> sizes_;
};

/// Replaces base vertex i by a clique of sizes[i] vertices; blocks follow
/// base-vertex order and adjacent base vertices give completely joined blocks.
inline Graph expand(const ExpansionSpec& spec) {
    const auto& base = spec.base();
    std::vector<Vertex> start(base.order() + 1, 0);
    for (Vertex b = 0; b < base.order(); ++b) start[b + 1] = start[b] + spec.sizes()[b];
    std::vector<Edge> edges;
    for (Vertex a = 0; a < base.order(); ++a) {
        for (Vertex u = start[a]; u < start[a + 1]; ++u)
            for (Vertex v = u + 1; v < start[a + 1]; ++v) edges.emplace_back(u, v);
        for (Vertex b = a + 1; b < base.order(); ++b)
            if (base.adjacent(a, b))
                for (Vertex u = start[a]; u < start[a + 1]; ++u)
                    for (Vertex v = start[b]; v < start[b + 1]; ++v) edges.emplace_back(u, v);
    }
    return Graph(start.back(), edges);
}

/// P3 ∪ K1 labelled as: 0 isolated, 1-2-3 a path with 2 in the middle.
inline Graph p3_plus_k1() { return Graph(4, {{1, 2}, {2, 3}}); }

/// Recognises expansions of P3 ∪ K1 through the true-twin quotient.
/// Returned sizes are ordered (isolated block, end, middle, end).
inline std::optional<ExpansionSpec> recognize_expansion_p3_k1(const Graph& g) {
    auto tc = twin_classes_graph(g);
    if (tc.count() != 4) return std::nullopt;

    // quotient adjacency via class representatives
    std::vector<Vertex> rep;
    for (auto& c : tc.classes) rep.push_back(c.front());
    auto qadj = [&](std::size_t a, std::size_t b) { return g.adjacent(rep[a], rep[b]); };
    std::vector<std::size_t> deg(4, 0);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (a != b && qadj(a, b)) ++deg[a];

    std::optional<std::size_t> isolated, middle;
    std::vector<std::size_t> ends;
    for (std::size_t a = 0; a < 4; ++a) {
        if (deg[a] == 0 && !isolated) isolated = a;
        else if (deg[a] == 2 && !middle) middle = a;
        else if (deg[a] == 1) ends.push_back(a);
        else return std::nullopt;
    }
    if (!isolated || !middle || ends.size() != 2) return std::nullopt;
    if (!qadj(*middle, ends[0]) || !qadj(*middle, ends[1])) return std::nullopt;

    return ExpansionSpec(p3_plus_k1(), {tc.classes[*isolated].size(), tc.classes[ends[0]].size(),
                                        tc.classes[*middle].size(), tc.classes[ends[1]].size()});
}

} // namespace nichekit

#endif // NICHEKIT_NICHE_HPP

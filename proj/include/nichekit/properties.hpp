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

#ifndef NICHEKIT_PROPERTIES_HPP
#define NICHEKIT_PROPERTIES_HPP

/// \file properties.hpp
/// \brief Exact structural predicates on small graphs.
///
/// The bit-parallel routines take an AdjacencyView (n <= 64); the Graph
/// overloads forward to them. Isomorphism and canonical forms are plain
/// backtracking searches sized for graphs of a dozen vertices.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nichekit/graph.hpp"

namespace nichekit {

inline constexpr std::size_t kIsomorphismLimit = 12;

namespace detail {

inline std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }
inline std::size_t lowest(std::uint64_t m) { return static_cast<std::size_t>(std::countr_zero(m)); }
inline std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

inline std::uint64_t reach(AdjacencyView g, std::size_t s, std::uint64_t within) {
    std::uint64_t seen = bit(s), frontier = bit(s);
    while (frontier) {
        std::uint64_t next = 0;
        for (auto m = frontier; m; m &= m - 1) next |= g.rows[lowest(m)];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Greedy clique cover of `p`; its size bounds the stability number of G[p].
inline std::size_t clique_cover_size(AdjacencyView g, std::uint64_t p) {
    std::size_t cliques = 0;
    while (p) {
        auto u = lowest(p);
        p &= ~bit(u);
        auto cand = p & g.rows[u];
        while (cand) {
            auto w = lowest(cand);
            p &= ~bit(w);
            cand &= g.rows[w] & ~bit(w);
        }
        ++cliques;
    }
    return cliques;
}

inline void stable_search(AdjacencyView g, std::uint64_t p, std::size_t size, std::size_t& best) {
    // vertices with no neighbour left in p belong to some maximum stable set
    for (auto m = p; m; m &= m - 1) {
        auto v = lowest(m);
        if ((g.rows[v] & p) == 0) {
            p &= ~bit(v);
            ++size;
        }
    }
    if (!p) {
        best = std::max(best, size);
        return;
    }
    if (size + clique_cover_size(g, p) <= best) return;
    std::size_t pivot = lowest(p), pivot_deg = 0;
    for (auto m = p; m; m &= m - 1) {
        auto v = lowest(m);
        auto d = popcount(g.rows[v] & p);
        if (d > pivot_deg) pivot = v, pivot_deg = d;
    }
    stable_search(g, p & ~g.rows[pivot] & ~bit(pivot), size + 1, best);
    stable_search(g, p & ~bit(pivot), size, best);
}

inline bool extend_induced_path(AdjacencyView g, std::uint64_t on_path, std::uint64_t blocked, std::size_t last,
                                std::size_t length, std::size_t target) {
    if (length == target) return true;
    auto cand = g.rows[last] & ~on_path & ~blocked;
    for (; cand; cand &= cand - 1) {
        auto w = lowest(cand);
        if (extend_induced_path(g, on_path | bit(w), blocked | g.rows[last], w, length + 1, target)) return true;
    }
    return false;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Components, distances, small substructures

/// Component vertex masks ordered by least vertex.
inline std::vector<std::uint64_t> component_masks(AdjacencyView g) {
    std::vector<std::uint64_t> out;
    auto left = g.all();
    while (left) {
        auto c = detail::reach(g, detail::lowest(left), g.all());
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

/// Connected components, each sorted, listed by least vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
    const auto n = g.order();
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (Vertex v = 0; v < n; ++v)
                if (!seen[v] && g.adjacent(u, v)) {
                    seen[v] = true;
                    comp.push_back(v);
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

/// Maximum size of a set of pairwise non-adjacent vertices.
inline std::size_t stability_number(AdjacencyView g) {
    std::size_t best = 0;
    detail::stable_search(g, g.all(), 0, best);
    return best;
}

inline std::size_t stability_number(const Graph& g) {
    if (g.order() > 64) throw GuardError("stability_number supports at most 64 vertices");
    return stability_number(g.view());
}

/// Largest eccentricity inside the component `within` (BFS layers).
inline std::size_t component_diameter(AdjacencyView g, std::uint64_t within) {
    std::size_t diam = 0;
    for (auto m = within; m; m &= m - 1) {
        auto s = detail::lowest(m);
        std::uint64_t seen = detail::bit(s), frontier = seen;
        std::size_t ecc = 0;
        while (true) {
            std::uint64_t next = 0;
            for (auto f = frontier; f; f &= f - 1) next |= g.rows[detail::lowest(f)];
            next &= within & ~seen;
            if (!next) break;
            seen |= next;
            frontier = next;
            ++ecc;
        }
        diam = std::max(diam, ecc);
    }
    return diam;
}

/// Maximum eccentricity; nullopt stands for infinity (disconnected or empty).
inline std::optional<std::size_t> diameter(const Graph& g) {
    const auto n = g.order();
    if (n == 0) return std::nullopt;
    if (n <= 64) {
        auto v = g.view();
        auto comps = component_masks(v);
        if (comps.size() != 1) return std::nullopt;
        return component_diameter(v, comps.front());
    }
    std::size_t diam = 0;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, SIZE_MAX);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (Vertex w = 0; w < n; ++w)
                if (dist[w] == SIZE_MAX && g.adjacent(u, w)) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        if (queue.size() != n) return std::nullopt;
        diam = std::max(diam, dist[queue.back()]);
    }
    return diam;
}

inline bool has_triangle(AdjacencyView g) {
    for (std::size_t u = 0; u < g.n; ++u)
        for (auto m = g.rows[u] & ~((detail::bit(u) << 1) - 1); m; m &= m - 1)
            if (g.rows[u] & g.rows[detail::lowest(m)]) return true;
    return false;
}

inline bool has_triangle(const Graph& g) {
    if (g.order() <= 64) return has_triangle(g.view());
    for (auto [u, v] : g.edges())
        if (detail::rows_intersect(g.row(u), g.row(v))) return true;
    return false;
}

/// True iff no induced path on `vertices` vertices exists.
inline bool is_induced_path_free(AdjacencyView g, std::size_t vertices) {
    if (vertices == 0) return g.n == 0;
    for (std::size_t s = 0; s < g.n; ++s)
        if (detail::extend_induced_path(g, detail::bit(s), 0, s, 1, vertices)) return false;
    return true;
}

inline bool is_p6_free(AdjacencyView g) { return is_induced_path_free(g, 6); }

inline bool is_p6_free(const Graph& g) {
    if (g.order() > 64) throw GuardError("is_p6_free supports at most 64 vertices");
    return is_p6_free(g.view());
}

/// Component sizes in nonincreasing order if every component is a clique.
inline std::optional<std::vector<std::size_t>> recognize_disjoint_cliques(const Graph& g) {
    std::vector<std::size_t> sizes;
    for (auto& comp : components(g)) {
        for (auto v : comp)
            if (g.degree(v) != comp.size() - 1) return std::nullopt;
        sizes.push_back(comp.size());
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>{});
    return sizes;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

/// Per-vertex invariant: colour, degree, sorted neighbour degrees.
inline std::vector<std::vector<std::size_t>> vertex_invariants(AdjacencyView g, std::span<const std::size_t> colour) {
    std::vector<std::vector<std::size_t>> inv(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
        std::vector<std::size_t> nd;
        for (auto m = g.rows[v]; m; m &= m - 1) nd.push_back(popcount(g.rows[lowest(m)]));
        std::sort(nd.begin(), nd.end());
        inv[v] = {colour.empty() ? 0 : colour[v], popcount(g.rows[v])};
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    return inv;
}

class IsoSearch {
public:
    IsoSearch(AdjacencyView g, AdjacencyView h, std::span<const std::size_t> cg, std::span<const std::size_t> ch)
        : g_(g), h_(h), inv_g_(vertex_invariants(g, cg)), inv_h_(vertex_invariants(h, ch)) {}

    std::optional<std::vector<Vertex>> run() {
        if (g_.n != h_.n) return std::nullopt;
        auto a = inv_g_, b = inv_h_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;

        // connectivity-first order: each next vertex has most neighbours already placed
        std::uint64_t placed = 0;
        for (std::size_t i = 0; i < g_.n; ++i) {
            std::size_t pick = g_.n, score = 0;
            for (std::size_t v = 0; v < g_.n; ++v) {
                if (placed & bit(v)) continue;
                auto s = popcount(g_.rows[v] & placed) * 64 + popcount(g_.rows[v]);
                if (pick == g_.n || s > score) pick = v, score = s;
            }
            order_.push_back(pick);
            placed |= bit(pick);
        }
        map_.assign(g_.n, g_.n);
        if (!extend(0, 0)) return std::nullopt;
        return map_;
    }

private:
    bool extend(std::size_t depth, std::uint64_t used) {
        if (depth == order_.size()) return true;
        auto v = order_[depth];
        for (std::size_t w = 0; w < h_.n; ++w) {
            if ((used & bit(w)) || inv_g_[v] != inv_h_[w]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                auto u = order_[i];
                ok = static_cast<bool>(g_.rows[v] & bit(u)) == static_cast<bool>(h_.rows[w] & bit(map_[u]));
            }
            if (!ok) continue;
            map_[v] = w;
            if (extend(depth + 1, used | bit(w))) return true;
        }
        map_[v] = g_.n;
        return false;
    }

    AdjacencyView g_, h_;
    std::vector<std::vector<std::size_t>> inv_g_, inv_h_;
    std::vector<std::size_t> order_;
    std::vector<Vertex> map_;
};

} // namespace detail

/// Colour-preserving isomorphism search without the size guard; both graphs
/// must fit in 64 vertices.
inline std::optional<std::vector<Vertex>> isomorphic_coloured(const Graph& g, std::span<const std::size_t> cg,
                                                              const Graph& h, std::span<const std::size_t> ch) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    return detail::IsoSearch(g.view(), h.view(), cg, ch).run();
}

/// A bijection `map` with uv in E(g) iff map[u]map[v] in E(h), if one exists.
inline std::optional<std::vector<Vertex>> isomorphic(const Graph& g, const Graph& h) {
    if (g.order() > kIsomorphismLimit || h.order() > kIsomorphismLimit)
        throw GuardError("isomorphic supports at most " + std::to_string(kIsomorphismLimit) + " vertices");
    return isomorphic_coloured(g, {}, h, {});
}

// ---------------------------------------------------------------------------
// Canonical form

/// Isomorphism-invariant byte encoding: vertex count followed by the
/// upper-triangle adjacency bits under a canonical vertex order.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    std::size_t order() const { return bytes.empty() ? 0 : bytes.front(); }

    /// Rebuilds the canonically labelled representative.
    Graph graph() const {
        const auto n = order();
        std::vector<Edge> edges;
        std::size_t k = 0;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j, ++k)
                if ((bytes[1 + k / 8] >> (7 - k % 8)) & 1u) edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string s;
        for (auto b : bytes) {
            s += digits[b >> 4];
            s += digits[b & 15];
        }
        return s;
    }

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

/// Individualisation-refinement search. Cells are refined by neighbour counts
/// into each cell; the smallest encoding over all discrete leaves wins.
class Canonizer {
public:
    explicit Canonizer(AdjacencyView g) : g_(g) {}

    CanonicalForm run() {
        std::vector<std::vector<std::size_t>> cells;
        if (g_.n > 0) {
            cells.emplace_back();
            for (std::size_t v = 0; v < g_.n; ++v) cells.back().push_back(v);
        }
        search(refine(std::move(cells)));
        if (!best_) best_ = encode({});
        return *best_;
    }

private:
    using Cells = std::vector<std::vector<std::size_t>>;

    Cells refine(Cells cells) const {
        while (true) {
            std::vector<std::uint64_t> masks;
            for (auto& c : cells) {
                std::uint64_t m = 0;
                for (auto v : c) m |= bit(v);
                masks.push_back(m);
            }
            Cells next;
            for (auto& c : cells) {
                if (c.size() == 1) {
                    next.push_back(c);
                    continue;
                }
                std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
                for (auto v : c) {
                    std::vector<std::size_t> sig;
                    for (auto m : masks) sig.push_back(popcount(g_.rows[v] & m));
                    keyed.emplace_back(std::move(sig), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                    next.back().push_back(keyed[i].second);
                }
            }
            // splitting only ever adds cells, so an unchanged count is a fixpoint
            bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable) return cells;
        }
    }

    bool twins(std::size_t u, std::size_t v) const {
        auto mask = ~(bit(u) | bit(v));
        return (g_.rows[u] & mask) == (g_.rows[v] & mask);
    }

    void search(const Cells& cells) {
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<std::size_t> order;
            for (auto& c : cells) order.push_back(c.front());
            auto form = encode(order);
            if (!best_ || form < *best_) best_ = std::move(form);
            return;
        }
        std::vector<std::size_t> tried;
        for (auto v : *target) {
            // swapping twins is an automorphism fixing every individualised vertex
            if (std::any_of(tried.begin(), tried.end(), [&](auto t) { return twins(t, v); })) continue;
            tried.push_back(v);
            Cells split;
            for (auto it = cells.begin(); it != cells.end(); ++it) {
                if (it != target) {
                    split.push_back(*it);
                    continue;
                }
                split.push_back({v});
                split.emplace_back();
                for (auto w : *it)
                    if (w != v) split.back().push_back(w);
            }
            search(refine(std::move(split)));
        }
    }

    CanonicalForm encode(const std::vector<std::size_t>& order) const {
        const auto n = order.size();
        CanonicalForm f;
        f.bytes.assign(1 + (n * (n - (n ? 1 : 0)) / 2 + 7) / 8, 0);
        f.bytes[0] = static_cast<std::uint8_t>(n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++k)
                if (g_.rows[order[i]] & bit(order[j])) f.bytes[1 + k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
        return f;
    }

    AdjacencyView g_;
    std::optional<CanonicalForm> best_;
};

} // namespace detail

inline CanonicalForm canonical_form(AdjacencyView g) { return detail::Canonizer(g).run(); }

inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kIsomorphismLimit)
        throw GuardError("canonical_form supports at most " + std::to_string(kIsomorphismLimit) + " vertices");
    return canonical_form(g.view());
}

} // namespace nichekit

template <>
struct std::hash<nichekit::CanonicalForm> {
    std::size_t operator()(const nichekit::CanonicalForm& f) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto b : f.bytes) h = (h ^ b) * 1099511628211ull;
        return h;
    }
};

#endif // NICHEKIT_PROPERTIES_HPP

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

#ifndef NICHEKIT_GRAPH_HPP
#define NICHEKIT_GRAPH_HPP

/// \file graph.hpp
/// \brief Immutable graph, digraph and multipartite tournament value types.
///
/// Every type here is validated on construction and never mutated afterwards,
/// so values can be shared freely between threads. Adjacency is kept twice:
/// as a sorted pair list and as per-vertex bit rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nichekit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using Arc = std::pair<Vertex, Vertex>;

/// Raised for any input that violates a type invariant or an operation's
/// precondition (malformed edge lists, illegal arcs, size guards).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine would exceed its configured size guard.
class GuardError : public InputError {
public:
    using InputError::InputError;
};

namespace detail {

inline std::size_t words_for(std::size_t n) { return n == 0 ? 1 : (n + 63) / 64; }

/// Bit rows, one row of `words` 64-bit words per vertex.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

    std::size_t order() const { return n_; }
    std::size_t words() const { return words_; }

    bool test(Vertex u, Vertex v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u; }
    void set(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + v * words_, words_};
    }

    std::size_t row_count(Vertex v) const {
        std::size_t c = 0;
        for (auto w : row(v)) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> bits_;
};

inline bool rows_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace detail

/// Lightweight view of a graph on at most 64 vertices: row v is the
/// neighbourhood bitmask of v. Most exact predicates run on this form.
struct AdjacencyView {
    std::size_t n = 0;
    std::span<const std::uint64_t> rows;

    std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() : Graph(0, std::span<const Edge>{}) {}

    /// Validating constructor. Duplicate pairs (in either orientation) collapse.
    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint out of range for n=" + std::to_string(n));
            if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
            adj_.set(u, v);
            adj_.set(v, u);
        }
        rebuild_edges();
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from symmetric, loop-free single-word rows (n <= 64) without
    /// revalidation.
    static Graph from_rows(std::size_t n, std::span<const std::uint64_t> rows) {
        Graph g;
        g.adj_ = detail::BitMatrix(n);
        for (Vertex u = 0; u < n; ++u)
            for (auto m = rows[u]; m; m &= m - 1) g.adj_.set(u, static_cast<Vertex>(std::countr_zero(m)));
        g.rebuild_edges();
        return g;
    }

    std::size_t order() const { return adj_.order(); }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_.test(u, v); }
    std::size_t degree(Vertex v) const { return adj_.row_count(v); }
    std::span<const std::uint64_t> row(Vertex v) const { return adj_.row(v); }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex u = 0; u < order(); ++u)
            if (adj_.test(v, u)) out.push_back(u);
        return out;
    }

    /// Single-word neighbourhood masks; requires order() <= 64.
    AdjacencyView view() const {
        if (order() > 64) throw GuardError("graph has more than 64 vertices");
        return {order(), rows64_};
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    void rebuild_edges() {
        edges_.clear();
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = u + 1; v < order(); ++v)
                if (adj_.test(u, v)) edges_.emplace_back(u, v);
        rows64_.clear();
        if (order() <= 64) {
            rows64_.resize(order());
            for (Vertex v = 0; v < order(); ++v) rows64_[v] = adj_.row(v)[0];
        }
    }

    detail::BitMatrix adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> rows64_;
};

/// Loop-free directed graph on vertices 0..n-1. Digons are allowed here.
class Digraph {
public:
    Digraph() : Digraph(0, std::span<const Arc>{}) {}

    Digraph(std::size_t n, std::span<const Arc> arcs) : out_(n), in_(n) {
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n)
                throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint out of range for n=" + std::to_string(n));
            if (u == v) throw InputError("loop arc at vertex " + std::to_string(u));
            out_.set(u, v);
            in_.set(v, u);
        }
        rebuild_arcs();
    }

    Digraph(std::size_t n, std::initializer_list<Arc> arcs)
        : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    std::size_t order() const { return out_.order(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(Vertex u, Vertex v) const { return out_.test(u, v); }
    std::size_t out_degree(Vertex v) const { return out_.row_count(v); }
    std::size_t in_degree(Vertex v) const { return in_.row_count(v); }
    std::span<const std::uint64_t> out_row(Vertex v) const { return out_.row(v); }
    std::span<const std::uint64_t> in_row(Vertex v) const { return in_.row(v); }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.order() == b.order() && a.arcs_ == b.arcs_;
    }

private:
    friend struct TournamentAccess;
    Digraph(detail::BitMatrix out, detail::BitMatrix in) : out_(std::move(out)), in_(std::move(in)) {
        rebuild_arcs();
    }

    void rebuild_arcs() {
        arcs_.clear();
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = 0; v < order(); ++v)
                if (out_.test(u, v)) arcs_.emplace_back(u, v);
    }

    detail::BitMatrix out_;
    detail::BitMatrix in_;
    std::vector<Arc> arcs_;
};

/// Multiset of positive part sizes, stored nonincreasing.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
        if (sizes_.empty()) throw InputError("partition must have at least one part");
        for (auto s : sizes_)
            if (s == 0) throw InputError("partition parts must be positive");
        std::sort(sizes_.begin(), sizes_.end(), std::greater<>{});
    }

    Partition(std::initializer_list<std::size_t> sizes) : Partition(std::vector<std::size_t>(sizes)) {}

    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t parts() const { return sizes_.size(); }
    std::size_t total() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

    /// Number of inter-part vertex pairs, sum over i<j of n_i * n_j.
    std::size_t cross_pairs() const {
        std::size_t m = 0, seen = 0;
        for (auto s : sizes_) {
            m += seen * s;
            seen += s;
        }
        return m;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> sizes_;
};

/// Orientation of a complete k-partite graph (k >= 2). Part i occupies the
/// consecutive vertex block after parts 0..i-1.
class MultipartiteTournament {
public:
    MultipartiteTournament() = default;

    MultipartiteTournament(std::vector<std::size_t> part_sizes, std::span<const Arc> arcs)
        : part_sizes_(std::move(part_sizes)) {
        index_parts();
        const std::size_t n = part_of_.size();
        detail::BitMatrix out(n), in(n);
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n)
                throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint out of range for n=" + std::to_string(n));
            if (u == v) throw InputError("loop arc at vertex " + std::to_string(u));
            if (part_of_[u] == part_of_[v])
                throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") joins two vertices of part " + std::to_string(part_of_[u]));
            if (out.test(v, u))
                throw InputError("digon between " + std::to_string(u) + " and " + std::to_string(v));
            out.set(u, v);
            in.set(v, u);
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (part_of_[u] != part_of_[v] && !out.test(u, v) && !out.test(v, u))
                    throw InputError("missing arc between " + std::to_string(u) + " and " +
                                     std::to_string(v));
        digraph_ = Digraph(n, arcs);
    }

    MultipartiteTournament(std::vector<std::size_t> part_sizes, std::initializer_list<Arc> arcs)
        : MultipartiteTournament(std::move(part_sizes), std::span<const Arc>(arcs.begin(), arcs.size())) {}

    const Digraph& digraph() const { return digraph_; }
    std::size_t order() const { return digraph_.order(); }
    const std::vector<std::size_t>& part_sizes() const { return part_sizes_; }
    std::size_t parts() const { return part_sizes_.size(); }
    std::size_t part_of(Vertex v) const { return part_of_[v]; }
    const std::vector<Arc>& arcs() const { return digraph_.arcs(); }
    bool has_arc(Vertex u, Vertex v) const { return digraph_.has_arc(u, v); }

    /// First vertex of part i.
    Vertex part_begin(std::size_t i) const {
        return std::accumulate(part_sizes_.begin(), part_sizes_.begin() + static_cast<std::ptrdiff_t>(i),
                               Vertex{0});
    }

    friend bool operator==(const MultipartiteTournament& a, const MultipartiteTournament& b) {
        return a.part_sizes_ == b.part_sizes_ && a.digraph_ == b.digraph_;
    }

private:
    friend struct TournamentAccess;

    void index_parts() {
        if (part_sizes_.size() < 2) throw InputError("a multipartite tournament needs at least 2 parts");
        part_of_.clear();
        for (std::size_t i = 0; i < part_sizes_.size(); ++i) {
            if (part_sizes_[i] == 0) throw InputError("part sizes must be positive");
            part_of_.insert(part_of_.end(), part_sizes_[i], i);
        }
    }

    std::vector<std::size_t> part_sizes_;
    std::vector<std::size_t> part_of_;
    Digraph digraph_;
};

/// Unchecked construction for generators that produce valid tournaments by
/// construction (orientation enumeration, witness builders).
struct TournamentAccess {
    static MultipartiteTournament from_rows(std::vector<std::size_t> part_sizes,
                                            std::span<const std::uint64_t> out_rows) {
        MultipartiteTournament t;
        t.part_sizes_ = std::move(part_sizes);
        t.index_parts();
        const std::size_t n = t.part_of_.size();
        detail::BitMatrix out(n), in(n);
        for (Vertex u = 0; u < n; ++u)
            for (auto m = out_rows[u]; m; m &= m - 1) {
                auto v = static_cast<Vertex>(std::countr_zero(m));
                out.set(u, v);
                in.set(v, u);
            }
        t.digraph_ = Digraph(std::move(out), std::move(in));
        return t;
    }
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

inline MultipartiteTournament build_tournament(std::vector<std::size_t> part_sizes, std::span<const Arc> arcs) {
    return MultipartiteTournament(std::move(part_sizes), arcs);
}

/// Same parts, every arc reversed.
inline MultipartiteTournament converse(const MultipartiteTournament& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return MultipartiteTournament(d.part_sizes(), arcs);
}

inline Digraph converse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return Digraph(d.order(), arcs);
}

/// Restriction of d to the vertex set s, relabelled to 0..|s|-1 in increasing
/// order. Parts left empty are dropped.
inline MultipartiteTournament induced_subtournament(const MultipartiteTournament& d, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto v : s)
        if (v >= d.order()) throw InputError("vertex " + std::to_string(v) + " out of range");

    std::vector<std::size_t> counts(d.parts(), 0);
    for (auto v : s) ++counts[d.part_of(v)];
    std::vector<std::size_t> sizes;
    for (auto c : counts)
        if (c > 0) sizes.push_back(c);
    if (sizes.size() < 2) throw InputError("induced subtournament would have fewer than 2 nonempty parts");

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (d.has_arc(s[i], s[j])) arcs.emplace_back(i, j);
    return MultipartiteTournament(std::move(sizes), arcs);
}

} // namespace nichekit

#endif // NICHEKIT_GRAPH_HPP

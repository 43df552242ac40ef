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

#ifndef NICHEKIT_ENUMERATION_HPP
#define NICHEKIT_ENUMERATION_HPP

/// \file enumeration.hpp
/// \brief Exhaustive orientation enumeration and the brute-force oracle.
///
/// The m cross pairs (u,v), u < v in different parts, are listed
/// lexicographically. In orientation `index`, bit j clear means u -> v for
/// pair j, bit j set means v -> u. Complementing all m bits gives the
/// converse tournament.

#include <array>
#include <atomic>
#include <iterator>
#include <map>
#include <optional>
#include <unordered_map>

#include "nichekit/graph.hpp"
#include "nichekit/niche.hpp"
#include "nichekit/parallel.hpp"
#include "nichekit/properties.hpp"

namespace nichekit {

inline constexpr std::size_t kDefaultCrossPairGuard = 28;
inline constexpr std::size_t kDefaultRealizeGuard = 8;

/// All multisets of k positive integers summing to n, each nonincreasing,
/// listed in decreasing lexicographic order.
inline std::vector<Partition> partitions(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw InputError("partitions needs 1 <= k <= n");
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t left, std::size_t parts, std::size_t cap) -> void {
        if (parts == 0) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        // each remaining part needs at least 1
        for (std::size_t s = std::min(cap, left - (parts - 1)); s >= 1; --s) {
            if (s * parts < left) break;
            cur.push_back(s);
            self(self, left - s, parts - 1, s);
            cur.pop_back();
        }
    };
    rec(rec, n, k, n);
    return out;
}

/// The 2^m orientations of a complete multipartite graph with the given
/// part sizes (block vertex layout, sizes kept in the order given).
class OrientationSpace {
public:
    explicit OrientationSpace(std::vector<std::size_t> part_sizes, std::size_t guard = kDefaultCrossPairGuard)
        : part_sizes_(std::move(part_sizes)) {
        if (part_sizes_.size() < 2) throw InputError("orientations need at least 2 parts");
        std::vector<std::size_t> part_of;
        for (std::size_t i = 0; i < part_sizes_.size(); ++i) {
            if (part_sizes_[i] == 0) throw InputError("part sizes must be positive");
            part_of.insert(part_of.end(), part_sizes_[i], i);
        }
        n_ = part_of.size();
        if (n_ > 64) throw GuardError("orientation enumeration supports at most 64 vertices");
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (part_of[u] != part_of[v]) pairs_.emplace_back(u, v);
        if (pairs_.size() > guard || pairs_.size() > 63)
            throw GuardError("orientation space has " + std::to_string(pairs_.size()) +
                             " cross pairs, above the guard of " + std::to_string(guard));
    }

    explicit OrientationSpace(const Partition& p, std::size_t guard = kDefaultCrossPairGuard)
        : OrientationSpace(p.sizes(), guard) {}

    const std::vector<std::size_t>& part_sizes() const { return part_sizes_; }
    std::size_t order() const { return n_; }
    const std::vector<Edge>& cross_pairs() const { return pairs_; }
    std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
    IndexRange all() const { return {0, size()}; }

    /// Index of the converse orientation.
    std::uint64_t converse_index(std::uint64_t index) const { return ~index & (size() - 1); }

    /// Out/in masks of orientation `index` into caller buffers of order() words.
    void rows(std::uint64_t index, std::uint64_t* out, std::uint64_t* in) const {
        for (std::size_t v = 0; v < n_; ++v) out[v] = in[v] = 0;
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            auto [u, v] = pairs_[j];
            if ((index >> j) & 1u) std::swap(u, v);
            out[u] |= std::uint64_t{1} << v;
            in[v] |= std::uint64_t{1} << u;
        }
    }

    /// Niche-graph rows of orientation `index`.
    void niche_rows(std::uint64_t index, std::uint64_t* niche) const {
        std::array<std::uint64_t, 64> out{}, in{};
        rows(index, out.data(), in.data());
        detail::niche_rows(n_, out.data(), in.data(), niche);
    }

    MultipartiteTournament at(std::uint64_t index) const {
        if (index >= size()) throw InputError("orientation index out of range");
        std::array<std::uint64_t, 64> out{}, in{};
        rows(index, out.data(), in.data());
        return TournamentAccess::from_rows(part_sizes_, std::span<const std::uint64_t>(out.data(), n_));
    }

    /// Forward iteration over an index range, yielding tournaments.
    class Cursor {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = MultipartiteTournament;
        using difference_type = std::ptrdiff_t;

        Cursor() = default;
        Cursor(const OrientationSpace* space, std::uint64_t index) : space_(space), index_(index) {}

        MultipartiteTournament operator*() const { return space_->at(index_); }
        std::uint64_t index() const { return index_; }
        Cursor& operator++() {
            ++index_;
            return *this;
        }
        Cursor operator++(int) {
            auto c = *this;
            ++index_;
            return c;
        }
        friend bool operator==(const Cursor& a, const Cursor& b) { return a.index_ == b.index_; }

    private:
        const OrientationSpace* space_ = nullptr;
        std::uint64_t index_ = 0;
    };

    Cursor begin() const { return {this, 0}; }
    Cursor end() const { return {this, size()}; }

    struct Slice {
        Cursor first, last;
        Cursor begin() const { return first; }
        Cursor end() const { return last; }
    };

    Slice slice(IndexRange r) const {
        if (r.end > size() || r.begin > r.end) throw InputError("orientation range out of bounds");
        return {{this, r.begin}, {this, r.end}};
    }

private:
    std::vector<std::size_t> part_sizes_;
    std::size_t n_ = 0;
    std::vector<Edge> pairs_;
};

inline OrientationSpace orientations(const Partition& p, std::size_t guard = kDefaultCrossPairGuard) {
    return OrientationSpace(p, guard);
}

// ---------------------------------------------------------------------------
// Niche spectrum

using Spectrum = std::map<CanonicalForm, std::uint64_t>;

struct SpectrumOptions {
    std::size_t guard = kDefaultCrossPairGuard;
    std::size_t threads = 1;
    /// Restrict to a sub-range of orientation indices (whole space if unset).
    std::optional<IndexRange> range = std::nullopt;
    /// Visit only index <= converse index and count each visit twice.
    bool converse_filter = false;
};

namespace detail {

/// Canonical forms keyed by labelled niche graphs; many orientations share
/// a labelled niche graph.
class CanonicalCache {
public:
    const CanonicalForm& get(std::size_t n, const std::uint64_t* rows) {
        Key key{};
        std::size_t k = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v, ++k)
                if ((rows[u] >> v) & 1u) key[k / 64] |= std::uint64_t{1} << (k % 64);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, canonical_form(AdjacencyView{n, std::span<const std::uint64_t>(rows, n)})).first;
        return it->second;
    }

private:
    // 12 vertices give 66 pair bits
    using Key = std::array<std::uint64_t, 2>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return std::hash<std::uint64_t>{}(k[0] * 31 + k[1]); }
    };
    std::unordered_map<Key, CanonicalForm, KeyHash> cache_;
};

} // namespace detail

inline void merge_into(Spectrum& into, const Spectrum& from) {
    for (auto& [form, count] : from) into[form] += count;
}

/// Multiset of canonical niche graphs over all (or a range of) orientations.
inline Spectrum niche_spectrum(const std::vector<std::size_t>& part_sizes, const SpectrumOptions& opt = {}) {
    OrientationSpace space(part_sizes, opt.guard);
    if (space.order() > kIsomorphismLimit)
        throw GuardError("niche_spectrum supports at most " + std::to_string(kIsomorphismLimit) + " vertices");
    auto whole = opt.range.value_or(space.all());
    if (whole.end > space.size() || whole.begin > whole.end) throw InputError("spectrum range out of bounds");

    const auto threads = std::max<std::size_t>(opt.threads, 1);
    std::vector<Spectrum> partial(threads);
    std::vector<detail::CanonicalCache> caches(threads);
    parallel_chunks(whole, threads, 1u << 12, [&](IndexRange r, std::size_t w) {
        std::array<std::uint64_t, 64> niche{};
        for (auto i = r.begin; i < r.end; ++i) {
            std::uint64_t weight = 1;
            if (opt.converse_filter) {
                // the converse has the same niche graph; fold it into the lower index
                auto c = space.converse_index(i);
                if (c >= whole.begin && c < whole.end) {
                    if (i > c) continue;
                    weight = 2;
                }
            }
            space.niche_rows(i, niche.data());
            partial[w][caches[w].get(space.order(), niche.data())] += weight;
        }
    });
    Spectrum out;
    for (auto& s : partial) merge_into(out, s);
    return out;
}

inline Spectrum niche_spectrum(const Partition& p, const SpectrumOptions& opt = {}) {
    return niche_spectrum(p.sizes(), opt);
}

// ---------------------------------------------------------------------------
// Brute-force oracle

struct RealizeOptions {
    std::size_t guard = kDefaultRealizeGuard;
    std::size_t cross_pair_guard = kDefaultCrossPairGuard;
    std::size_t threads = 1;
};

/// Searches every orientation of every k-part partition of n = g.order() for a
/// tournament whose niche graph is isomorphic to g. The result is the first hit
/// in partition order, then index order, regardless of thread count.
inline std::optional<MultipartiteTournament> brute_force_realize(const Graph& g, std::size_t k,
                                                                 const RealizeOptions& opt = {}) {
    const auto n = g.order();
    if (k < 2 || n < k) throw InputError("brute_force_realize needs n >= k >= 2");
    if (n > opt.guard)
        throw GuardError("graph has " + std::to_string(n) + " vertices, above the brute-force guard of " +
                         std::to_string(opt.guard));

    auto target = g.view();
    std::vector<std::size_t> target_degrees(n);
    for (Vertex v = 0; v < n; ++v) target_degrees[v] = g.degree(v);
    std::sort(target_degrees.begin(), target_degrees.end());
    const auto target_edges = g.size();

    for (const auto& p : partitions(n, k)) {
        OrientationSpace space(p, opt.cross_pair_guard);
        std::atomic<std::uint64_t> best{space.size()};
        parallel_chunks(space.all(), opt.threads, 1u << 14, [&](IndexRange r, std::size_t) {
            std::array<std::uint64_t, 64> niche{};
            std::vector<std::size_t> degrees(n);
            for (auto i = r.begin; i < r.end && i < best.load(std::memory_order_relaxed); ++i) {
                space.niche_rows(i, niche.data());
                std::size_t edges2 = 0;
                for (std::size_t v = 0; v < n; ++v) edges2 += detail::popcount(niche[v]);
                if (edges2 != 2 * target_edges) continue;
                for (std::size_t v = 0; v < n; ++v) degrees[v] = detail::popcount(niche[v]);
                std::sort(degrees.begin(), degrees.end());
                if (degrees != target_degrees) continue;
                AdjacencyView cand{n, std::span<const std::uint64_t>(niche.data(), n)};
                if (detail::IsoSearch(cand, target, {}, {}).run()) {
                    auto cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        });
        if (best.load() < space.size()) return space.at(best.load());
    }
    return std::nullopt;
}

} // namespace nichekit

#endif // NICHEKIT_ENUMERATION_HPP

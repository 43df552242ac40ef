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

#ifndef NICHEKIT_PARALLEL_HPP
#define NICHEKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nichekit {

/// Half-open index range [begin, end).
struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Splits [0, total) into `pieces` contiguous ranges of near-equal size.
inline std::vector<IndexRange> split_range(IndexRange whole, std::size_t pieces) {
    pieces = std::max<std::size_t>(pieces, 1);
    std::vector<IndexRange> out;
    const auto n = whole.size();
    for (std::size_t i = 0; i < pieces; ++i) {
        auto b = whole.begin + n * i / pieces;
        auto e = whole.begin + n * (i + 1) / pieces;
        if (b < e) out.push_back({b, e});
    }
    return out;
}

/// Runs body(range, worker) over chunks of `whole` on `threads` workers.
/// Chunks are handed out in increasing order. The first exception thrown by a
/// worker is rethrown after all workers join.
template <class Body>
void parallel_chunks(IndexRange whole, std::size_t threads, std::uint64_t chunk, Body&& body) {
    threads = std::max<std::size_t>(threads, 1);
    chunk = std::max<std::uint64_t>(chunk, 1);
    if (threads == 1) {
        for (auto b = whole.begin; b < whole.end; b += std::min(chunk, whole.end - b))
            body(IndexRange{b, b + std::min(chunk, whole.end - b)}, std::size_t{0});
        return;
    }
    std::atomic<std::uint64_t> next{whole.begin};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                while (true) {
                    auto b = next.fetch_add(chunk);
                    if (b >= whole.end) break;
                    body(IndexRange{b, std::min(b + chunk, whole.end)}, w);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = whole.end;
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace nichekit

#endif // NICHEKIT_PARALLEL_HPP

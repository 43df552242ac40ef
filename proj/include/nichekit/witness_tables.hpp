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

#ifndef NICHEKIT_WITNESS_TABLES_HPP
#define NICHEKIT_WITNESS_TABLES_HPP

/// \file witness_tables.hpp
/// \brief Frozen witnesses for the named triangle-free targets.
///
/// Each entry is the first hit of brute_force_realize(named_graph(target), k)
/// in partition/index order; the regeneration test re-derives every entry and
/// prints a replacement row on mismatch. C6 is built from its closed formula
/// instead.

#include <string_view>
#include <utility>
#include <vector>

namespace nichekit::witness_tables {

struct NamedWitness {
    std::string_view target;
    std::size_t parts;
    std::vector<std::size_t> part_sizes;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

// clang-format off
inline const std::vector<NamedWitness> kNamedWitnesses = {
    {"P3", 3, {1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}},
    {"P4", 3, {2, 1, 1}, {{0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}}},
    {"P4", 4, {1, 1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}}},
    {"P5", 3, {2, 2, 1}, {{0, 3}, {1, 2}, {1, 3}, {2, 0}, {2, 4}, {3, 4}, {4, 0}, {4, 1}}},
    {"C5", 3, {3, 1, 1}, {{1, 3}, {2, 3}, {2, 4}, {3, 0}, {3, 4}, {4, 0}, {4, 1}}},
    {"C5", 4, {2, 1, 1, 1}, {{0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 0}, {3, 4}, {4, 0}, {4, 1}}},
    {"C5", 5, {1, 1, 1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 0}, {3, 4}, {4, 0}, {4, 1}}},
    {"G4", 3, {2, 2, 1}, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 1}, {3, 4}, {4, 0}, {4, 2}}},
    {"G5", 3, {2, 2, 2}, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 1}, {2, 5}, {3, 4}, {3, 5}, {4, 0}, {4, 2}, {5, 0}, {5, 1}}},
};
// clang-format on

} // namespace nichekit::witness_tables

#endif // NICHEKIT_WITNESS_TABLES_HPP

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

#ifndef NICHEKIT_NICHEKIT_HPP
#define NICHEKIT_NICHEKIT_HPP

#include "nichekit/enumeration.hpp"
#include "nichekit/graph.hpp"
#include "nichekit/io.hpp"
#include "nichekit/niche.hpp"
#include "nichekit/parallel.hpp"
#include "nichekit/properties.hpp"
#include "nichekit/realizability.hpp"
#include "nichekit/verify.hpp"

#endif // NICHEKIT_NICHEKIT_HPP

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

#include "nichekit/io.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace nichekit {
namespace {

std::size_t LineOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

TEST(ParseGraph, CommentsAndBlankLines) {
    auto g = parse_graph("# a path\n\ngraph 3\ne 0 1   # first\n\ne 1 2\n");
    EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
    EXPECT_EQ(LineOf([] { parse_graph("graph 3\ne 0 1\ne 0 7\n"); }), 3u);
    EXPECT_EQ(LineOf([] { parse_graph("graph 3\ne 1 1\n"); }), 2u);
    EXPECT_EQ(LineOf([] { parse_graph("# hi\ngraph x\n"); }), 2u);
    EXPECT_EQ(LineOf([] { parse_graph("graph 3\nq 0 1\n"); }), 2u);
    EXPECT_EQ(LineOf([] { parse_graph("graph 3\ne 0\n"); }), 2u);
    EXPECT_EQ(LineOf([] { parse_graph("tournament 3\n"); }), 1u);
    EXPECT_EQ(LineOf([] { parse_graph(""); }), 1u);
    try {
        parse_graph("graph 2\ne 0 5\n", "bad.graph");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("bad.graph:2:", 0), 0u) << e.what();
    }
}

TEST(ParseTournament, Example) {
    auto t = parse_tournament("tournament 3\nparts 2 1 1\na 0 2\na 2 1\na 1 3\na 3 0\na 2 3\n");
    EXPECT_EQ(t, MultipartiteTournament({2, 1, 1}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {2, 3}}));
}

TEST(ParseTournament, Errors) {
    EXPECT_EQ(LineOf([] { parse_tournament("tournament 3\nparts 1 1\n"); }), 2u);
    EXPECT_EQ(LineOf([] { parse_tournament("tournament 2\n\nparts 1 1\na 0 1\na 1 0\n"); }), 3u);
    EXPECT_EQ(LineOf([] { parse_tournament("tournament 2\nparts 1 1\na 0 9\n"); }), 3u);
    EXPECT_EQ(LineOf([] { parse_tournament("tournament 2\na 0 1\n"); }), 2u);
    EXPECT_THROW(parse_tournament("tournament 2\nparts 1 1\n"), ParseError);
}

TEST(Write, GraphTournamentAndDot) {
    Graph g(3, {{1, 2}, {0, 1}});
    EXPECT_EQ(write_graph(g), "graph 3\ne 0 1\ne 1 2\n");
    EXPECT_EQ(write_dot(g), "graph niche {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    MultipartiteTournament t({1, 1}, {{1, 0}});
    EXPECT_EQ(write_tournament(t), "tournament 2\nparts 1 1\na 1 0\n");
}

TEST(RoundTrip, TextAndJson) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<std::size_t> nd(2, 12);
        auto n = nd(rng);
        auto g = testing::random_graph(rng, n, 0.4);
        EXPECT_EQ(parse_graph(write_graph(g)), g);
        EXPECT_EQ(read_graph(to_json(g).dump()), g);
        std::uniform_int_distribution<std::size_t> kd(2, n);
        auto t = testing::random_tournament(rng, n, kd(rng));
        EXPECT_EQ(parse_tournament(write_tournament(t)), t);
        EXPECT_EQ(read_tournament(to_json(t).dump()), t);
    }
}

TEST(Json, Shapes) {
    EXPECT_EQ(to_json(Graph(2, {{0, 1}})), Json::parse(R"({"n":2,"edges":[[0,1]]})"));
    EXPECT_EQ(to_json(MultipartiteTournament({1, 1}, {{1, 0}})), Json::parse(R"({"parts":[1,1],"arcs":[[1,0]]})"));
    auto no = to_json(Verdict::no("Thm4.1(complete)"));
    EXPECT_EQ(no, Json::parse(R"j({"answer":"no","citation":"Thm4.1(complete)","witness":null,"reason":null})j"));
    auto unk = to_json(Verdict::unknown("too big"));
    EXPECT_EQ(unk["answer"], "unknown");
    EXPECT_EQ(unk["reason"], "too big");
    auto yes = to_json(Verdict::yes(MultipartiteTournament({1, 1}, {{0, 1}}), "Oracle"));
    EXPECT_EQ(yes["witness"]["parts"], Json::parse("[1,1]"));
}

TEST(Json, MalformedInputIsAnInputError) {
    EXPECT_THROW(read_graph("{\"n\": 3}"), InputError);
    EXPECT_THROW(read_graph("{\"n\": 3, \"edges\": [[0, 5]]}"), InputError);
    EXPECT_THROW(read_graph("{nope"), InputError);
    EXPECT_THROW(read_tournament("{\"parts\": [1, 1], \"arcs\": []}"), InputError);
}

TEST(Slurp, MissingFile) { EXPECT_THROW(slurp("/nonexistent/nichekit.graph"), InputError); }

} // namespace
} // namespace nichekit

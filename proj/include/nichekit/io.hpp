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

#ifndef NICHEKIT_IO_HPP
#define NICHEKIT_IO_HPP

/// \file io.hpp
/// \brief Line-based text formats, JSON mirrors and DOT export.
///
/// Graph file:      `graph <n>` then `e <u> <v>` lines (u < v on output).
/// Tournament file: `tournament <k>`, `parts <s1> ... <sk>`, then `a <u> <v>`.
/// `#` starts a comment; blank lines are ignored.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nichekit/graph.hpp"
#include "nichekit/realizability.hpp"

namespace nichekit {

/// Parse failure carrying the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

inline std::size_t to_count(const std::string& source, const Line& line, const std::string& tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(source, line.number, "expected a nonnegative integer, got '" + tok + "'");
    return v;
}

inline void expect_arity(const std::string& source, const Line& line, std::size_t n) {
    if (line.tokens.size() != n)
        throw ParseError(source, line.number,
                         "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " arguments");
}

} // namespace detail

inline Graph parse_graph(std::string_view text, const std::string& source = "<graph>") {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(source, 1, "empty input, expected 'graph <n>'");
    auto& head = lines.front();
    if (head.tokens[0] != "graph") throw ParseError(source, head.number, "expected header 'graph <n>'");
    detail::expect_arity(source, head, 2);
    auto n = detail::to_count(source, head, head.tokens[1]);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto& l = lines[i];
        if (l.tokens[0] != "e") throw ParseError(source, l.number, "unknown directive '" + l.tokens[0] + "'");
        detail::expect_arity(source, l, 3);
        Edge e{detail::to_count(source, l, l.tokens[1]), detail::to_count(source, l, l.tokens[2])};
        if (e.first >= n || e.second >= n)
            throw ParseError(source, l.number, "edge endpoint out of range for n=" + std::to_string(n));
        if (e.first == e.second) throw ParseError(source, l.number, "loop edge");
        edges.push_back(e);
    }
    return Graph(n, edges);
}

inline MultipartiteTournament parse_tournament(std::string_view text, const std::string& source = "<tournament>") {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(source, 1, "empty input, expected 'tournament <k>'");
    auto& head = lines.front();
    if (head.tokens[0] != "tournament") throw ParseError(source, head.number, "expected header 'tournament <k>'");
    detail::expect_arity(source, head, 2);
    auto k = detail::to_count(source, head, head.tokens[1]);
    if (lines.size() < 2 || lines[1].tokens[0] != "parts")
        throw ParseError(source, lines.size() < 2 ? head.number : lines[1].number, "expected 'parts <s1> ... <sk>'");
    auto& pl = lines[1];
    detail::expect_arity(source, pl, k + 1);
    std::vector<std::size_t> parts;
    for (std::size_t i = 1; i < pl.tokens.size(); ++i) parts.push_back(detail::to_count(source, pl, pl.tokens[i]));
    std::size_t n = 0;
    for (auto s : parts) n += s;

    std::vector<Arc> arcs;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        auto& l = lines[i];
        if (l.tokens[0] != "a") throw ParseError(source, l.number, "unknown directive '" + l.tokens[0] + "'");
        detail::expect_arity(source, l, 3);
        Arc a{detail::to_count(source, l, l.tokens[1]), detail::to_count(source, l, l.tokens[2])};
        if (a.first >= n || a.second >= n)
            throw ParseError(source, l.number, "arc endpoint out of range for n=" + std::to_string(n));
        if (a.first == a.second) throw ParseError(source, l.number, "loop arc");
        arcs.push_back(a);
    }
    try {
        return MultipartiteTournament(parts, arcs);
    } catch (const InputError& err) {
        throw ParseError(source, pl.number, err.what());
    }
}

inline std::string write_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string write_tournament(const MultipartiteTournament& t) {
    std::string out = "tournament " + std::to_string(t.parts()) + "\nparts";
    for (auto s : t.part_sizes()) out += " " + std::to_string(s);
    out += "\n";
    for (auto [u, v] : t.arcs()) out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Undirected DOT with plain node ids 0..n-1.
inline std::string write_dot(const Graph& g) {
    std::string out = "graph niche {\n";
    for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::json;

inline Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

inline Json to_json(const MultipartiteTournament& t) {
    Json arcs = Json::array();
    for (auto [u, v] : t.arcs()) arcs.push_back({u, v});
    return {{"parts", t.part_sizes()}, {"arcs", arcs}};
}

inline Json to_json(const Verdict& v) {
    Json j{{"answer", to_string(v.answer)}};
    j["citation"] = v.citation.empty() ? Json(nullptr) : Json(v.citation);
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    j["reason"] = v.reason.empty() ? Json(nullptr) : Json(v.reason);
    return j;
}

inline Graph graph_from_json(const Json& j) {
    try {
        auto n = j.at("n").get<std::size_t>();
        auto edges = j.at("edges").get<std::vector<std::pair<std::size_t, std::size_t>>>();
        return Graph(n, edges);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
}

inline MultipartiteTournament tournament_from_json(const Json& j) {
    try {
        auto parts = j.at("parts").get<std::vector<std::size_t>>();
        auto arcs = j.at("arcs").get<std::vector<std::pair<std::size_t, std::size_t>>>();
        return MultipartiteTournament(parts, arcs);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed tournament JSON: ") + e.what());
    }
}

namespace detail {
inline bool looks_like_json(std::string_view text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string_view::npos && text[p] == '{';
}

inline Json parse_json(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}
} // namespace detail

/// Text or JSON, chosen by the first non-blank character.
inline Graph read_graph(std::string_view text, const std::string& source = "<graph>") {
    if (detail::looks_like_json(text)) return graph_from_json(detail::parse_json(text, source));
    return parse_graph(text, source);
}

inline MultipartiteTournament read_tournament(std::string_view text, const std::string& source = "<tournament>") {
    if (detail::looks_like_json(text)) return tournament_from_json(detail::parse_json(text, source));
    return parse_tournament(text, source);
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace nichekit

#endif // NICHEKIT_IO_HPP

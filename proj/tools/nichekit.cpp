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

// nichekit: niche graphs of multipartite tournaments from the command line.
//
//   nichekit niche <tournament-file> [--dot] [--json]
//   nichekit realize <graph-file> --k K [--guard N] [--threads T] [--json]
//   nichekit enumerate --parts 2,1,1 [--count-only]
//   nichekit spectrum (--parts 2,1,1 | --n N --k K) [--threads T] [--json]
//   nichekit verify <id>|all [--max-n N] [--threads T]
//
// Exit codes: 0 success/yes/pass, 1 no, 2 unknown, 3 input error, 4 fail.

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nichekit/nichekit.hpp"

namespace {

using namespace nichekit;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;
constexpr int kExitFail = 4;

std::vector<std::size_t> parse_parts(const std::string& csv) {
    std::vector<std::size_t> parts;
    std::stringstream ss(csv);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size() || v == 0)
            throw InputError("--parts expects positive integers separated by commas, got '" + csv + "'");
        parts.push_back(v);
    }
    if (parts.size() < 2) throw InputError("--parts needs at least two parts");
    return parts;
}

void print_spectrum(std::ostream& os, const Spectrum& s, bool json) {
    if (json) {
        Json arr = Json::array();
        for (auto& [form, count] : s)
            arr.push_back({{"count", count}, {"form", form.hex()}, {"graph", to_json(form.graph())}});
        os << arr.dump(2) << "\n";
        return;
    }
    for (auto& [form, count] : s) {
        auto g = form.graph();
        os << count << "\t" << form.hex() << "\tn=" << g.order() << " edges=";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            os << (first ? "" : ",") << u << "-" << v;
            first = false;
        }
        if (first) os << "none";
        os << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Niche graphs of multipartite tournaments"};
    app.require_subcommand(1);

    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());

    auto* niche_cmd = app.add_subcommand("niche", "Print the niche graph of a tournament file");
    std::string niche_file;
    bool niche_dot = false, niche_json = false;
    niche_cmd->add_option("file", niche_file, "tournament file (text or JSON)")->required();
    niche_cmd->add_flag("--dot", niche_dot, "emit Graphviz DOT");
    niche_cmd->add_flag("--json", niche_json, "emit JSON");

    auto* realize_cmd = app.add_subcommand("realize", "Decide niche-realizability of (G, k)");
    std::string realize_file;
    std::size_t realize_k = 0;
    std::size_t realize_guard = default_guard();
    bool realize_json = false;
    realize_cmd->add_option("file", realize_file, "graph file (text or JSON)")->required();
    realize_cmd->add_option("--k", realize_k, "number of partite sets (>= 3)")->required();
    realize_cmd->add_option("--guard", realize_guard, "largest n for exhaustive search (env NICHEKIT_GUARD)");
    realize_cmd->add_option("--threads", threads, "worker threads");
    realize_cmd->add_flag("--json", realize_json, "emit the verdict as JSON");

    auto* enum_cmd = app.add_subcommand("enumerate", "List every orientation of a complete multipartite graph");
    std::string enum_parts;
    bool count_only = false;
    std::size_t enum_guard = kDefaultCrossPairGuard;
    enum_cmd->add_option("--parts", enum_parts, "part sizes, e.g. 2,1,1")->required();
    enum_cmd->add_flag("--count-only", count_only, "print only the number of orientations");
    enum_cmd->add_option("--guard", enum_guard, "largest number of cross pairs");

    auto* spec_cmd = app.add_subcommand("spectrum", "Canonical niche graphs with multiplicities");
    std::string spec_parts;
    std::size_t spec_n = 0, spec_k = 0;
    std::size_t spec_guard = kDefaultCrossPairGuard;
    bool spec_json = false, spec_converse = false;
    auto* parts_opt = spec_cmd->add_option("--parts", spec_parts, "part sizes, e.g. 2,1,1");
    auto* n_opt = spec_cmd->add_option("--n", spec_n, "vertex count (all partitions into --k parts)");
    auto* k_opt = spec_cmd->add_option("--k", spec_k, "number of parts");
    parts_opt->excludes(n_opt)->excludes(k_opt);
    n_opt->needs(k_opt);
    k_opt->needs(n_opt);
    spec_cmd->add_option("--guard", spec_guard, "largest number of cross pairs");
    spec_cmd->add_option("--threads", threads, "worker threads");
    spec_cmd->add_flag("--converse-filter", spec_converse, "visit one of each converse pair");
    spec_cmd->add_flag("--json", spec_json, "emit JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively re-check a structural result");
    std::string verify_id;
    VerifyOptions vopt;
    verify_cmd->add_option("id", verify_id, "thm2.1 thm2.2 cor2.1 thm3.1 thm3.2 thm4.1 thm4.2 lem4.3 lem4.5 thm4.3 | all")
        ->required();
    verify_cmd->add_option("--max-n", vopt.max_n, "largest vertex count")->check(CLI::Range(3, 8));
    verify_cmd->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*niche_cmd) {
            auto g = niche_graph(read_tournament(slurp(niche_file), niche_file));
            if (niche_json) std::cout << to_json(g).dump() << "\n";
            else if (niche_dot) std::cout << write_dot(g);
            else std::cout << write_graph(g);
            return kExitOk;
        }

        if (*realize_cmd) {
            auto g = read_graph(slurp(realize_file), realize_file);
            auto v = decide(g, realize_k, {.guard = realize_guard, .threads = threads});
            if (realize_json) std::cout << to_json(v).dump(2) << "\n";
            switch (v.answer) {
            case Answer::Yes:
                if (!realize_json) std::cout << "YES (" << citation::display(v.citation) << ")\n" << write_tournament(*v.witness);
                return kExitOk;
            case Answer::No:
                if (!realize_json) std::cout << "NO (" << citation::display(v.citation) << ")\n";
                return kExitNo;
            case Answer::Unknown:
                if (!realize_json) std::cout << "UNKNOWN: " << v.reason << "\n";
                return kExitUnknown;
            }
        }

        if (*enum_cmd) {
            OrientationSpace space(parse_parts(enum_parts), enum_guard);
            if (count_only) {
                std::cout << space.size() << "\n";
                return kExitOk;
            }
            for (auto it = space.begin(); it != space.end(); ++it)
                std::cout << "# orientation " << it.index() << "\n" << write_tournament(*it);
            return kExitOk;
        }

        if (*spec_cmd) {
            SpectrumOptions sopt{.guard = spec_guard, .threads = threads, .converse_filter = spec_converse};
            Spectrum s;
            if (!spec_parts.empty()) {
                s = niche_spectrum(parse_parts(spec_parts), sopt);
            } else if (spec_n > 0) {
                if (spec_k < 2 || spec_k > spec_n) throw InputError("spectrum needs 2 <= k <= n");
                for (const auto& p : partitions(spec_n, spec_k)) merge_into(s, niche_spectrum(p, sopt));
            } else {
                throw InputError("spectrum needs --parts or --n/--k");
            }
            print_spectrum(std::cout, s, spec_json);
            return kExitOk;
        }

        if (*verify_cmd) {
            vopt.threads = threads;
            std::vector<std::string_view> ids;
            if (verify_id == "all") ids.assign(kTheoremIds.begin(), kTheoremIds.end());
            else ids.push_back(verify_id);
            bool all_passed = true;
            for (auto id : ids) {
                auto r = verify(id, vopt);
                std::cout << "[" << r.id << "] " << (r.passed ? "PASS" : "FAIL") << ": " << r.summary << "\n";
                if (!r.passed && !r.first_failure.empty()) std::cout << "    first failure: " << r.first_failure << "\n";
                all_passed = all_passed && r.passed;
            }
            return all_passed ? kExitOk : kExitFail;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

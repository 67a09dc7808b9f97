/*
   Copyright 2026 the finring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/dsl.hpp"
#include "finring/harness.hpp"
#include "finring/properties.hpp"

namespace {

using namespace finring;

// exit codes: 0 holds/certified (or all cases pass), 1 fails, 2 usage or
// parse error, 3 budget exhausted, 4 internal inconsistency (audit)
constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitContradiction = 4;

void print_usage() {
    std::cout << R"(finring - finite ring construction and property checking

Usage: finring <command> [arguments] [flags]

Commands:
  eval <expr>                  Summarize a ring (order, center, counts)
  check <expr> <property>      Decide one property; JSON report on stdout
  profile <expr>               Run every checker plus the implication audit
  verify-paper                 Run the built-in verification suite
  search                       Sweep a ring family for a target property
  properties                   List known property names
  help                         Show this message

Flags:
  --degree <d>       Bound for degree-limited checks (default 2)
  --budget <n>       Max candidate tuples per sweep (default 1e9)
  --time-cap <ms>    Wall-clock cap per sweep (default unlimited)
  --threads <n>      Worker threads for suite/search runs (default: cores)
  --cap <n>          Enumeration cap on ring order (default 65536)
  --json             Machine-readable output where optional
  --witness          Include witness details in human-readable output
  --out <path>       Write the run report to a file (verify-paper)
  --cache <path>     Result cache file (verify-paper, search)
  --filter <glob>    Case-id filter for verify-paper (e.g. 'ex-2.7-*')

Search flags:
  --family <f>       tnk | triv | polymod | mat | ut | prod
  --base <expr>      Base ring (repeatable)
  --n <list>         n values, e.g. '3..5' or '2,4'
  --k <list>         k values for tnk (default 1..n-1)
  --property <p>     Target property
  --negate           Hit on 'fails' instead of 'holds'
  --stop-after <n>   Stop after n hits

Ring expression grammar (case-sensitive):
  expr := "Z(" int ")" | "Prod(" expr ("," expr)+ ")" | "Mat(" expr "," int ")"
        | "UT(" expr "," int ")" | "Tnk(" expr "," int "," int ")"
        | "Triv(" expr ")" | "PolyMod(" expr "," int ")"
)";
}

struct Options {
    harness::Config config;
    bool json_output = false;
    bool show_witness = false;
    std::string out_path;
    std::string cache_path;
    std::string filter;
    harness::SearchSpec spec;
    std::vector<std::string> positional;
};

std::vector<std::uint32_t> parse_range(const std::string& text) {
    std::vector<std::uint32_t> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        std::uint32_t lo = std::uint32_t(std::stoul(text.substr(0, dots)));
        std::uint32_t hi = std::uint32_t(std::stoul(text.substr(dots + 2)));
        for (std::uint32_t v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::uint32_t(std::stoul(text.substr(pos, comma - pos))));
        pos = comma + 1;
    }
    return out;
}

Options parse_options(int argc, char** argv, int first) {
    Options opt;
    for (int i = first; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) throw InvalidParameter("flag " + arg + " needs a value");
            return argv[++i];
        };
        if (arg == "--degree") opt.config.degree = std::uint32_t(std::stoul(next()));
        else if (arg == "--budget") opt.config.budget.max_pairs_examined = std::stoull(next());
        else if (arg == "--time-cap") opt.config.budget.elapsed_cap_ms = std::stoull(next());
        else if (arg == "--threads") opt.config.threads = std::uint32_t(std::stoul(next()));
        else if (arg == "--cap") opt.config.caps.enum_cap = std::uint32_t(std::stoul(next()));
        else if (arg == "--json") opt.json_output = true;
        else if (arg == "--witness") opt.show_witness = true;
        else if (arg == "--out") opt.out_path = next();
        else if (arg == "--cache") opt.cache_path = next();
        else if (arg == "--filter") opt.filter = next();
        else if (arg == "--family") opt.spec.family = next();
        else if (arg == "--base") opt.spec.base_exprs.push_back(next());
        else if (arg == "--n") opt.spec.n_values = parse_range(next());
        else if (arg == "--k") opt.spec.k_values = parse_range(next());
        else if (arg == "--property") opt.spec.property = next();
        else if (arg == "--negate") opt.spec.negate = true;
        else if (arg == "--stop-after") opt.spec.stop_after = std::uint32_t(std::stoul(next()));
        else if (!arg.empty() && arg[0] == '-') throw InvalidParameter("unknown flag " + arg);
        else opt.positional.push_back(arg);
    }
    return opt;
}

int verdict_exit(const PropertyReport& rep) {
    switch (rep.verdict) {
        case Verdict::holds:
        case Verdict::certified_up_to_degree: return kExitOk;
        case Verdict::fails: return kExitFails;
        case Verdict::inconclusive: return kExitBudget;
    }
    return kExitUsage;
}

int cmd_eval(const Options& opt) {
    if (opt.positional.empty()) throw InvalidParameter("eval needs a ring expression");
    RingPtr ring = dsl::eval_expr(opt.positional[0], opt.config.caps);
    json out{{"ring", ring->name()},
             {"order", ring->order()},
             {"zero", ring->repr(ring->zero())},
             {"one", ring->repr(ring->one())},
             {"tabled", ring->tabled()},
             {"center_size", center_of(*ring).size()},
             {"idempotents", idempotents_of(*ring).size()},
             {"nilpotents", nilpotents_of(*ring).size()}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_check(const Options& opt) {
    if (opt.positional.size() < 2)
        throw InvalidParameter("check needs a ring expression and a property");
    RingPtr ring = dsl::eval_expr(opt.positional[0], opt.config.caps);
    PropertyReport rep =
        check_property(ring, opt.positional[1], opt.config.degree, opt.config.budget);
    json out = report_json(*ring, rep);
    out["ring"] = ring->name();
    std::cout << out.dump(2) << "\n";
    return verdict_exit(rep);
}

int cmd_profile(const Options& opt) {
    if (opt.positional.empty()) throw InvalidParameter("profile needs a ring expression");
    RingPtr ring = dsl::eval_expr(opt.positional[0], opt.config.caps);
    auto profile = property_profile(ring, opt.config.degree, opt.config.budget);
    AuditResult audit = implication_audit(profile);
    json reports = json::array();
    for (const auto& rep : profile) reports.push_back(report_json(*ring, rep));
    json out{{"ring", ring->name()},
             {"order", ring->order()},
             {"degree", opt.config.degree},
             {"profile", reports},
             {"audit", audit_json(audit)}};
    std::cout << out.dump(2) << "\n";
    return audit.consistent ? kExitOk : kExitContradiction;
}

int cmd_verify_paper(const Options& opt) {
    std::unique_ptr<harness::ResultCache> cache;
    if (!opt.cache_path.empty()) cache = std::make_unique<harness::ResultCache>(opt.cache_path);
    harness::RunReport report = harness::verify_paper(opt.config, opt.filter, cache.get());
    if (!opt.out_path.empty()) harness::emit_report(report, opt.out_path);
    if (opt.json_output) {
        std::cout << harness::report_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.cases) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  [" << c.anchor << "]  "
                      << c.ring_text << "  " << c.property << ": expected " << c.expected
                      << ", observed " << c.observed << (c.from_cache ? " (cached)" : "")
                      << "\n";
            if (opt.show_witness && !c.witness.is_null())
                std::cout << "      witness: " << c.witness.dump() << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << "  " << report.cases.size()
                  << " case(s)\n";
    }
    return report.pass ? kExitOk : kExitFails;
}

int cmd_search(const Options& opt) {
    if (opt.spec.family.empty() || opt.spec.property.empty())
        throw InvalidParameter("search needs --family and --property");
    harness::SearchSpec spec = opt.spec;
    spec.degree = opt.config.degree;
    std::unique_ptr<harness::ResultCache> cache;
    if (!opt.cache_path.empty()) cache = std::make_unique<harness::ResultCache>(opt.cache_path);
    auto results = harness::search(spec, opt.config, cache.get());
    if (opt.json_output) {
        std::cout << harness::search_json(results).dump(2) << "\n";
    } else {
        std::size_t hits = 0;
        for (const auto& r : results) {
            if (r.hit) ++hits;
            std::cout << (r.hit ? "HIT " : "    ") << r.ring_text << "  " << r.verdict << "\n";
            if (opt.show_witness && r.hit && r.report.contains("witness"))
                std::cout << "      witness: " << r.report["witness"].dump() << "\n";
        }
        std::cout << hits << " hit(s) over " << results.size() << " instance(s)\n";
    }
    return kExitOk;
}

int cmd_properties() {
    for (const auto& p : known_properties()) std::cout << p << "\n";
    return kExitOk;
}

json error_json(const char* kind, const std::string& message, int line = -1, int col = -1) {
    json out{{"error", kind}, {"message", message}};
    if (line >= 0) {
        out["line"] = line;
        out["col"] = col;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        print_usage();
        return kExitUsage;
    }
    std::string command = argv[1];
    try {
        Options opt = parse_options(argc, argv, 2);
        if (command == "help" || command == "--help" || command == "-h") {
            print_usage();
            return kExitOk;
        }
        if (command == "eval") return cmd_eval(opt);
        if (command == "check") return cmd_check(opt);
        if (command == "profile") return cmd_profile(opt);
        if (command == "verify-paper") return cmd_verify_paper(opt);
        if (command == "search") return cmd_search(opt);
        if (command == "properties") return cmd_properties();
        std::cerr << error_json("usage", "unknown command " + command).dump(2) << "\n";
        return kExitUsage;
    } catch (const dsl::ParseError& e) {
        json out = error_json("parse", e.what(), e.line, e.col);
        out["expected"] = e.expected;
        std::cout << out.dump(2) << "\n";
        return kExitUsage;
    } catch (const BudgetExhausted& e) {
        std::cout << error_json("budget", e.what()).dump(2) << "\n";
        return kExitBudget;
    } catch (const ContradictionFound& e) {
        std::cout << error_json("contradiction", e.what()).dump(2) << "\n";
        return kExitContradiction;
    } catch (const InvalidParameter& e) {
        std::cout << error_json("invalid-parameter", e.what(), e.line, e.col).dump(2) << "\n";
        return kExitUsage;
    } catch (const OrderOverflow& e) {
        std::cout << error_json("order-overflow", e.what(), e.line, e.col).dump(2) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump(2) << "\n";
        return kExitUsage;
    }
}

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

#ifndef FINRING_HARNESS_HPP
#define FINRING_HARNESS_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "finring/properties.hpp"

namespace finring::harness {

inline constexpr const char* kToolVersion = "0.1.0";

struct Config {
    Caps caps;
    AnnPairBudget budget;
    std::uint32_t threads = 0;  // 0 = hardware concurrency
    std::uint32_t degree = 2;   // bound for degree-limited checks
};

/// The fixed ring set quantified over by the suite-wide consistency cases.
const std::vector<std::string>& corpus_rings();

/// Memoizing wrapper around dsl::eval_expr; rings are immutable and shared.
RingPtr built_ring(const std::string& expr, const Caps& caps);

struct CaseOutcome {
    std::string observed;
    RingPtr ring;  // may be null for cache hits
    std::optional<Witness> witness;
    std::uint64_t work = 0;
    double ms = 0.0;
    std::string note;
    bool extra_failed = false;  // a case-specific witness validation failed
};

struct SuiteCase {
    std::string id;
    std::string anchor;      // statement label the case exercises
    std::string ring_text;
    std::string property;
    int degree = 0;
    std::string expected;    // verdict string
    std::function<CaseOutcome(const Config&)> run;
};

/// The full built-in verification suite, in registration order.
std::vector<SuiteCase> paper_suite();

struct CaseResult {
    std::string id;
    std::string ring_text;
    std::string property;
    int degree = 0;
    std::string expected;
    std::string observed;
    json witness;  // null when absent
    std::uint64_t work = 0;
    double ms = 0.0;
    std::string anchor;
    bool pass = false;
    std::string note;
    bool from_cache = false;
};

struct RunReport {
    std::string version;
    Config config;
    std::vector<CaseResult> cases;
    bool pass = true;
};

/// Append-only JSON-lines store keyed by (ring text, property, degree,
/// tool version). Lookups never change a verdict: hits replay the stored
/// observation and witness.
class ResultCache {
  public:
    explicit ResultCache(std::string path);

    std::optional<json> lookup(const std::string& ring_text, const std::string& property,
                               int degree) const;
    void remember(const std::string& ring_text, const std::string& property, int degree,
                  json value);
    void flush();  // appends fresh entries to the backing file
    std::size_t size() const;

  private:
    static std::string key_of(const std::string& ring_text, const std::string& property,
                              int degree);
    std::string path_;
    std::map<std::string, json> entries_;
    std::vector<std::pair<std::string, json>> fresh_;
    mutable std::mutex mu_;
};

/// Runs the (glob-filtered) suite; cases execute independently, results are
/// reported in case-id order, overall pass iff every observed verdict
/// matches its expectation.
RunReport verify_paper(const Config& config, const std::string& filter = "",
                       ResultCache* cache = nullptr);

struct SearchSpec {
    std::string family;  // tnk | triv | polymod | mat | ut | prod
    std::vector<std::string> base_exprs;
    std::vector<std::uint32_t> n_values;
    std::vector<std::uint32_t> k_values;  // tnk only; empty = 1..n-1
    std::string property;
    std::uint32_t degree = 2;
    bool negate = false;        // hit on "fails" instead of pass
    std::uint32_t stop_after = 0;  // stop after N hits; 0 = unbounded
};

struct SearchResult {
    std::string ring_text;
    std::string verdict;  // verdict string, or "skipped"
    bool hit = false;
    json report;  // property report or skip note
};

/// Enumerates the family in deterministic parameter order (bases in the
/// given order, then n, then k ascending), checks the target property and
/// records hits. Overflowing instances are skipped with a note.
std::vector<SearchResult> search(const SearchSpec& spec, const Config& config,
                                 ResultCache* cache = nullptr);

json report_json(const RunReport& report, bool include_timestamp = true);
json search_json(const std::vector<SearchResult>& results);

/// Writes the report JSON (stable key order, UTF-8, trailing newline).
void emit_report(const RunReport& report, const std::string& path);

/// Glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

}  // namespace finring::harness

#endif  // FINRING_HARNESS_HPP

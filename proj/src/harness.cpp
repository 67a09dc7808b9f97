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

#include "finring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include "finring/constructions.hpp"
#include "finring/dsl.hpp"

namespace finring::harness {

const std::vector<std::string>& corpus_rings() {
    static const std::vector<std::string> corpus = {
        "Z(1)",
        "Z(2)",
        "Z(3)",
        "Z(4)",
        "Z(6)",
        "Z(8)",
        "Prod(Z(2), Z(2))",
        "Prod(Z(2), Z(3))",
        "Mat(Z(2), 2)",
        "UT(Z(2), 2)",
        "Triv(Z(2))",
        "Triv(Z(4))",
        "Triv(Z(8))",
        "PolyMod(Z(2), 2)",
        "PolyMod(Z(2), 3)",
        "Tnk(Z(2), 3, 1)",
        "Tnk(Z(2), 3, 2)",
        "Tnk(Z(4), 3, 1)",
        "Tnk(Z(2), 4, 2)",
        "Tnk(Z(6), 2, 1)",
        "Triv(Mat(Z(2), 2))",
    };
    return corpus;
}

RingPtr built_ring(const std::string& expr, const Caps& caps) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> memo;
    std::string key = expr + "#" + std::to_string(caps.table_cap) + "#" +
                      std::to_string(caps.enum_cap);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    RingPtr r = dsl::eval_expr(expr, caps);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(key, std::move(r)).first->second;
}

bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t pi = 0, ti = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (ti < text.size()) {
        if (pi < pattern.size() && (pattern[pi] == '?' || pattern[pi] == text[ti])) {
            ++pi;
            ++ti;
        } else if (pi < pattern.size() && pattern[pi] == '*') {
            star = pi++;
            mark = ti;
        } else if (star != std::string_view::npos) {
            pi = star + 1;
            ti = ++mark;
        } else {
            return false;
        }
    }
    while (pi < pattern.size() && pattern[pi] == '*') ++pi;
    return pi == pattern.size();
}

namespace {

std::string slug(const std::string& text) {
    std::string out;
    bool dash = false;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (dash && !out.empty()) out += '-';
            dash = false;
            out += char(std::tolower(static_cast<unsigned char>(c)));
        } else {
            dash = true;
        }
    }
    return out;
}

using WitnessValidator = std::function<bool(const Ring&, const Witness&)>;

CaseOutcome outcome_of(const RingPtr& ring, const PropertyReport& rep,
                       const WitnessValidator& validator) {
    CaseOutcome out;
    out.observed = rep.verdict_str();
    out.ring = ring;
    out.witness = rep.witness;
    out.work = rep.work;
    out.ms = rep.ms;
    out.note = rep.note;
    if (validator) {
        if (!rep.witness || !validator(*ring, *rep.witness)) {
            out.extra_failed = true;
            out.note += out.note.empty() ? "" : "; ";
            out.note += "witness validation failed";
        }
    }
    return out;
}

SuiteCase simple_case(std::string id, std::string anchor, std::string expr,
                      std::string property, int degree, std::string expected,
                      WitnessValidator validator = nullptr) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = std::move(expr);
    c.property = std::move(property);
    c.degree = degree;
    c.expected = std::move(expected);
    c.run = [ring_text = c.ring_text, property = c.property, degree,
             validator = std::move(validator)](const Config& cfg) {
        RingPtr ring = built_ring(ring_text, cfg.caps);
        PropertyReport rep =
            check_property(ring, property, std::uint32_t(degree ? degree : 1), cfg.budget);
        return outcome_of(ring, rep, validator);
    };
    return c;
}

// Validates the linear witness of the trivial extension of Z(2^n): the
// offending coefficient product must be the pair (0, 2^(n-1)).
WitnessValidator triv_halved_product_validator() {
    return [](const Ring& ring, const Witness& w) {
        auto a0 = w.find("a0");
        auto b1 = w.find("b1");
        if (!a0 || !b1) return false;
        auto base_order = std::uint32_t(std::lround(std::sqrt(double(ring.order()))));
        if (base_order * base_order != ring.order() || base_order % 2 != 0) return false;
        // (0, B/2) has dense index B/2
        return ring.mul(*a0, *b1) == base_order / 2;
    };
}

// Validates that the square-zero pair is the constructive banded one:
// a scalar square-zero diagonal and the sum of the top-row free units.
WitnessValidator banded_pair_validator() {
    return [](const Ring& ring, const Witness& w) {
        if (w.kind != "square-zero-pair") return false;
        auto info = banded_info(ring);
        if (!info) return false;
        const Ring& base = *info->base;
        ElemIndex a0 = 0;
        for (ElemIndex a = 1; a < base.order(); ++a)
            if (base.mul(a, a) == 0) {
                a0 = a;
                break;
            }
        if (a0 == 0) return false;
        std::vector<ElemIndex> pa(info->param_count, 0);
        pa[0] = a0;
        std::vector<ElemIndex> pb(info->param_count, 0);
        for (std::uint32_t j = 0; j < info->n - info->k; ++j) pb[info->k + j] = base.one();
        return w.find("a") == std::optional<ElemIndex>(tnk_element(ring, pa)) &&
               w.find("b") == std::optional<ElemIndex>(tnk_element(ring, pb)) &&
               recheck_witness(ring, w);
    };
}

WitnessValidator kind_validator(std::string kind) {
    return [kind = std::move(kind)](const Ring& ring, const Witness& w) {
        return w.kind == kind && recheck_witness(ring, w);
    };
}

SuiteCase vnr_equivalence_case(std::string id, std::string anchor, std::string expr) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = std::move(expr);
    c.property = "vnr-equivalence";
    c.degree = 2;
    c.expected = "holds";
    c.run = [expr = c.ring_text](const Config& cfg) {
        RingPtr ring = built_ring(expr, cfg.caps);
        CaseOutcome out;
        out.ring = ring;
        PropertyReport vnr = is_von_neumann_regular(ring);
        std::vector<PropertyReport> five;
        five.push_back(is_armendariz_up_to(ring, 2, cfg.budget));
        five.push_back(is_reduced(ring));
        five.push_back(is_central_linear_armendariz(ring, cfg.budget));
        five.push_back(is_linear_armendariz(ring, cfg.budget));
        five.push_back(is_semicommutative(ring));
        out.work = vnr.work;
        std::string detail = "von-neumann-regular=" + vnr.verdict_str();
        bool all_equal = true;
        for (const auto& rep : five) {
            out.work += rep.work;
            detail += ", " + rep.property + "=" + rep.verdict_str();
            if (rep.passed() != five.front().passed()) all_equal = false;
        }
        out.note = detail + " (armendariz proxied at degree 2)";
        out.observed = (vnr.passed() && all_equal) ? "holds" : "fails";
        return out;
    };
    return c;
}

SuiteCase implication_case(std::string id, std::string anchor, std::string expr,
                           std::string property, std::string antecedent_a,
                           std::string antecedent_b, std::string consequent) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = std::move(expr);
    c.property = std::move(property);
    c.degree = 1;
    c.expected = "holds";
    c.run = [expr = c.ring_text, antecedent_a, antecedent_b, consequent](const Config& cfg) {
        RingPtr ring = built_ring(expr, cfg.caps);
        CaseOutcome out;
        out.ring = ring;
        auto eval = [&](const std::string& p) {
            PropertyReport rep = check_property(ring, p, 1, cfg.budget);
            out.work += rep.work;
            out.note += (out.note.empty() ? "" : ", ") + p + "=" + rep.verdict_str();
            return rep;
        };
        PropertyReport a = eval(antecedent_a);
        bool hypothesis = a.passed();
        if (!antecedent_b.empty() && hypothesis) {
            PropertyReport b = eval(antecedent_b);
            hypothesis = hypothesis && b.passed();
        }
        if (!hypothesis) {
            out.observed = "holds";
            out.note += " (hypothesis not satisfied)";
            return out;
        }
        PropertyReport cons = eval(consequent);
        out.observed = cons.passed() ? "holds" : "fails";
        if (!cons.passed()) out.witness = cons.witness;
        return out;
    };
    return c;
}

SuiteCase product_iff_case(std::string id, std::string anchor, std::string f1,
                           std::string f2) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = "Prod(" + f1 + ", " + f2 + ")";
    c.property = "cla-product-iff";
    c.degree = 1;
    c.expected = "holds";
    c.run = [prod = c.ring_text, f1, f2](const Config& cfg) {
        CaseOutcome out;
        RingPtr p = built_ring(prod, cfg.caps);
        RingPtr r1 = built_ring(f1, cfg.caps);
        RingPtr r2 = built_ring(f2, cfg.caps);
        out.ring = p;
        PropertyReport cp = is_central_linear_armendariz(p, cfg.budget);
        PropertyReport c1 = is_central_linear_armendariz(r1, cfg.budget);
        PropertyReport c2 = is_central_linear_armendariz(r2, cfg.budget);
        out.work = cp.work + c1.work + c2.work;
        out.note = "cla(product)=" + cp.verdict_str() + ", cla(" + f1 + ")=" + c1.verdict_str() +
                   ", cla(" + f2 + ")=" + c2.verdict_str();
        out.observed = (cp.passed() == (c1.passed() && c2.passed())) ? "holds" : "fails";
        return out;
    };
    return c;
}

SuiteCase quotient_lift_case(std::string id, std::string anchor, std::string base_expr,
                             std::vector<ElemIndex> gens) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = base_expr;
    c.property = "quotient-lift-cla";
    c.degree = 1;
    c.expected = "holds";
    c.run = [base_expr, gens](const Config& cfg) {
        CaseOutcome out;
        RingPtr base = built_ring(base_expr, cfg.caps);
        out.ring = base;
        auto ideal = ideal_closure_of(*base, gens);
        bool ideal_reduced = true;
        for (ElemIndex m : ideal)
            if (m != 0 && is_nilpotent(*base, m)) {
                ideal_reduced = false;
                break;
            }
        RingPtr quot = quotient_ring(base, ideal, cfg.caps);
        PropertyReport cq = is_central_linear_armendariz(quot, cfg.budget);
        out.work += cq.work;
        out.note = "ideal size " + std::to_string(ideal.size()) +
                   ", ideal reduced=" + (ideal_reduced ? "yes" : "no") +
                   ", cla(quotient)=" + cq.verdict_str();
        if (!ideal_reduced || !cq.passed()) {
            out.observed = "holds";
            out.note += " (hypothesis not satisfied)";
            return out;
        }
        PropertyReport cr = is_central_linear_armendariz(base, cfg.budget);
        out.work += cr.work;
        out.note += ", cla(base)=" + cr.verdict_str();
        out.observed = cr.passed() ? "holds" : "fails";
        if (!cr.passed()) out.witness = cr.witness;
        return out;
    };
    return c;
}

SuiteCase top_band_iff_case(std::string id, std::string anchor, std::string base_expr,
                            std::string t_expr) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = t_expr;
    c.property = "top-band-cla-iff-central-reduced";
    c.degree = 1;
    c.expected = "holds";
    c.run = [base_expr, t_expr](const Config& cfg) {
        CaseOutcome out;
        RingPtr base = built_ring(base_expr, cfg.caps);
        RingPtr t = built_ring(t_expr, cfg.caps);
        out.ring = t;
        PropertyReport sp = is_semiprime(base);
        PropertyReport cr = is_central_reduced(base);
        PropertyReport cla = is_central_linear_armendariz(t, cfg.budget);
        out.work = sp.work + cr.work + cla.work;
        out.note = "semiprime(base)=" + sp.verdict_str() +
                   ", central-reduced(base)=" + cr.verdict_str() + ", cla=" + cla.verdict_str();
        if (!sp.passed()) {
            out.observed = "holds";
            out.note += " (semiprime hypothesis not satisfied)";
            return out;
        }
        out.observed = (cr.passed() == cla.passed()) ? "holds" : "fails";
        return out;
    };
    return c;
}

SuiteCase audit_case(std::string id, std::string anchor, std::string expr) {
    SuiteCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.ring_text = std::move(expr);
    c.property = "implication-audit";
    c.degree = 2;
    c.expected = "holds";
    c.run = [expr = c.ring_text](const Config& cfg) {
        CaseOutcome out;
        RingPtr ring = built_ring(expr, cfg.caps);
        out.ring = ring;
        auto profile = property_profile(ring, cfg.degree, cfg.budget);
        AuditResult audit = implication_audit(profile);
        for (const auto& rep : profile) out.work += rep.work;
        out.observed = audit.consistent ? "holds" : "fails";
        if (!audit.consistent) {
            std::string detail;
            for (const auto& v : audit.violations)
                detail += (detail.empty() ? "" : "; ") + v.rule + " (" + v.left + " vs " +
                          v.right + ")";
            out.note = detail;
        }
        return out;
    };
    return c;
}

}  // namespace

std::vector<SuiteCase> paper_suite() {
    std::vector<SuiteCase> cases;

    // non-abelian matrix rings are not central linear
    cases.push_back(simple_case("ex-2.3-mat-abelian", "Example 2.3", "Mat(Z(2), 2)", "abelian",
                                0, "fails", kind_validator("noncentral-idempotent")));
    cases.push_back(simple_case("ex-2.3-mat-cla", "Example 2.3", "Mat(Z(2), 2)",
                                "central-linear-armendariz", 1, "fails"));
    cases.push_back(simple_case("ex-2.3-ut-abelian", "Example 2.3", "UT(Z(2), 2)", "abelian", 0,
                                "fails", kind_validator("noncentral-idempotent")));
    cases.push_back(simple_case("ex-2.3-ut-cla", "Example 2.3", "UT(Z(2), 2)",
                                "central-linear-armendariz", 1, "fails"));

    // trivial extension of Z(2^n): central linear but neither linear nor right p.p.
    for (std::uint32_t n : {2u, 3u}) {
        std::string base = "Z(" + std::to_string(1u << n) + ")";
        std::string expr = "Triv(" + base + ")";
        std::string tag = "ex-2.7-z" + std::to_string(1u << n);
        std::string anchor = "Example 2.7 (n=" + std::to_string(n) + ")";
        cases.push_back(simple_case(tag + "-cla", anchor, expr, "central-linear-armendariz", 1,
                                    "holds"));
        cases.push_back(simple_case(tag + "-la", anchor, expr, "linear-armendariz", 1, "fails",
                                    triv_halved_product_validator()));
        cases.push_back(simple_case(tag + "-pp", anchor, expr, "right-pp", 0, "fails",
                                    kind_validator("pp-failure")));
    }

    // banded rings over a non-reduced base fail via the constructive pair
    for (auto [n, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {4, 1}, {4, 2}}) {
        std::string expr = "Tnk(Z(4), " + std::to_string(n) + ", " + std::to_string(k) + ")";
        cases.push_back(simple_case(
            "thm-2.9-neg-z4-n" + std::to_string(n) + "-k" + std::to_string(k),
            "Theorem 2.9, negative direction", expr, "central-linear-armendariz", 1, "fails",
            banded_pair_validator()));
    }

    // banded rings over reduced bases stay central linear
    cases.push_back(simple_case("thm-2.9-pos-z2-n3-k1", "Theorem 2.9, positive direction",
                                "Tnk(Z(2), 3, 1)", "central-linear-armendariz", 1, "holds"));
    cases.push_back(simple_case("thm-2.9-pos-z2-n4-k1", "Theorem 2.9, positive direction",
                                "Tnk(Z(2), 4, 1)", "central-linear-armendariz", 1, "holds"));
    cases.push_back(simple_case("thm-2.9-pos-z2-n4-k2", "Theorem 2.9, positive direction",
                                "Tnk(Z(2), 4, 2)", "central-linear-armendariz", 1, "holds"));
    cases.push_back(simple_case("thm-2.10-z2-n3-armendariz", "Theorem 2.10", "Tnk(Z(2), 3, 1)",
                                "armendariz", 2, "certified-up-to-degree(2)"));

    // von Neumann regular rings: the five conditions coincide
    for (const char* expr : {"Mat(Z(2), 2)", "Prod(Z(2), Z(2))", "Prod(Z(2), Z(3))", "Z(2)",
                             "Z(3)"}) {
        cases.push_back(
            vnr_equivalence_case("thm-2.4-" + slug(expr), "Theorem 2.4", expr));
    }

    // central linear forces abelian, on the whole corpus
    for (const auto& expr : corpus_rings()) {
        cases.push_back(implication_case("lemma-2.2-" + slug(expr), "Lemma 2.2", expr,
                                         "cla-implies-abelian", "central-linear-armendariz", "",
                                         "abelian"));
    }

    // a central idempotent splits the condition across the factors
    cases.push_back(product_iff_case("lemma-2.5-prod-z2-z2", "Lemma 2.5", "Z(2)", "Z(2)"));
    cases.push_back(product_iff_case("lemma-2.5-prod-z2-z3", "Lemma 2.5", "Z(2)", "Z(3)"));

    // right p.p. + central linear forces linear, on the whole corpus
    for (const auto& expr : corpus_rings()) {
        cases.push_back(implication_case("thm-2.6-" + slug(expr), "Theorem 2.6 converse", expr,
                                         "pp-cla-implies-la", "right-pp",
                                         "central-linear-armendariz", "linear-armendariz"));
    }

    // lifting along a reduced ideal
    cases.push_back(quotient_lift_case("thm-2.11-z6-i2", "Theorem 2.11", "Z(6)", {2}));
    cases.push_back(quotient_lift_case("thm-2.11-z4-i2", "Theorem 2.11", "Z(4)", {2}));
    cases.push_back(quotient_lift_case("thm-2.11-trivz2-i01", "Theorem 2.11", "Triv(Z(2))", {1}));

    // central reduced without being reduced
    cases.push_back(simple_case("ex-2.16-polymod-central-reduced", "Example 2.16",
                                "PolyMod(Z(2), 2)", "central-reduced", 0, "holds"));
    cases.push_back(simple_case("ex-2.16-polymod-reduced", "Example 2.16", "PolyMod(Z(2), 2)",
                                "reduced", 0, "fails", kind_validator("square-zero-element")));
    cases.push_back(simple_case("thm-2.17-polymod-cla", "Theorem 2.17", "PolyMod(Z(2), 2)",
                                "central-linear-armendariz", 1, "holds"));
    for (const auto& expr : corpus_rings()) {
        cases.push_back(implication_case("thm-2.17-" + slug(expr), "Theorem 2.17", expr,
                                         "central-reduced-implies-cla", "central-reduced", "",
                                         "central-linear-armendariz"));
    }

    // top-band rings characterize central reduced over semiprime bases
    cases.push_back(simple_case("thm-2.19-triv-m2-cla", "Theorem 2.19 (n=2)",
                                "Triv(Mat(Z(2), 2))", "central-linear-armendariz", 1, "fails",
                                kind_validator("square-zero-pair")));
    cases.push_back(top_band_iff_case("thm-2.19-n2-m2", "Theorem 2.19 (n=2)", "Mat(Z(2), 2)",
                                      "Triv(Mat(Z(2), 2))"));
    cases.push_back(top_band_iff_case("thm-2.19-n2-z6", "Theorem 2.19 (n=2)", "Z(6)",
                                      "Tnk(Z(6), 2, 1)"));
    cases.push_back(top_band_iff_case("thm-2.19-n3-z2", "Theorem 2.19 (n=3)", "Z(2)",
                                      "Tnk(Z(2), 3, 2)"));

    // whole-profile consistency on the corpus
    for (const auto& expr : corpus_rings()) {
        cases.push_back(audit_case("audit-" + slug(expr), "implication audit", expr));
    }

    return cases;
}

// --- cache ----------------------------------------------------------------------

std::string ResultCache::key_of(const std::string& ring_text, const std::string& property,
                                int degree) {
    return ring_text + "\x1f" + property + "\x1f" + std::to_string(degree) + "\x1f" +
           kToolVersion;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json entry = json::parse(line, nullptr, false);
        if (entry.is_discarded() || !entry.contains("key") || !entry.contains("value")) continue;
        entries_[entry["key"].get<std::string>()] = entry["value"];
    }
}

std::optional<json> ResultCache::lookup(const std::string& ring_text,
                                        const std::string& property, int degree) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key_of(ring_text, property, degree));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::remember(const std::string& ring_text, const std::string& property,
                           int degree, json value) {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = key_of(ring_text, property, degree);
    if (entries_.count(key)) return;
    entries_[key] = value;
    fresh_.emplace_back(std::move(key), std::move(value));
}

void ResultCache::flush() {
    std::lock_guard<std::mutex> lock(mu_);
    if (fresh_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot append to cache file " + path_);
    for (const auto& [key, value] : fresh_) {
        json line{{"key", key}, {"value", value}};
        out << line.dump() << "\n";
    }
    fresh_.clear();
}

std::size_t ResultCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

// --- runners --------------------------------------------------------------------

namespace {

CaseResult run_case(const SuiteCase& c, const Config& cfg, ResultCache* cache) {
    CaseResult res;
    res.id = c.id;
    res.ring_text = c.ring_text;
    res.property = c.property;
    res.degree = c.degree;
    res.expected = c.expected;
    res.anchor = c.anchor;
    res.witness = json(nullptr);

    if (cache) {
        if (auto hit = cache->lookup(c.ring_text, c.property, c.degree)) {
            res.observed = hit->value("observed", "");
            res.witness = hit->contains("witness") ? (*hit)["witness"] : json(nullptr);
            res.work = hit->value("work", std::uint64_t(0));
            res.note = hit->value("note", "");
            res.from_cache = true;
            res.pass = res.observed == res.expected && !hit->value("extra_failed", false);
            return res;
        }
    }

    try {
        std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
        CaseOutcome out = c.run(cfg);
        res.observed = out.observed;
        res.work = out.work;
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
        res.note = out.note;
        if (out.witness && out.ring) res.witness = witness_json(*out.ring, *out.witness);
        res.pass = res.observed == res.expected && !out.extra_failed;
        if (cache) {
            json value{{"observed", res.observed},
                       {"witness", res.witness},
                       {"work", res.work},
                       {"note", res.note},
                       {"extra_failed", out.extra_failed}};
            cache->remember(c.ring_text, c.property, c.degree, std::move(value));
        }
    } catch (const std::exception& e) {
        res.observed = "error";
        res.note = e.what();
        res.pass = false;
    }
    return res;
}

}  // namespace

RunReport verify_paper(const Config& config, const std::string& filter, ResultCache* cache) {
    std::vector<SuiteCase> cases = paper_suite();
    if (!filter.empty()) {
        cases.erase(std::remove_if(cases.begin(), cases.end(),
                                   [&](const SuiteCase& c) { return !glob_match(filter, c.id); }),
                    cases.end());
    }
    std::sort(cases.begin(), cases.end(),
              [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });

    RunReport report;
    report.version = kToolVersion;
    report.config = config;
    report.cases.resize(cases.size());

    unsigned hw = std::thread::hardware_concurrency();
    unsigned threads = config.threads ? config.threads : (hw ? hw : 1);
    threads = std::min<unsigned>(threads, std::max<std::size_t>(cases.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) break;
            report.cases[i] = run_case(cases[i], config, cache);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& cr : report.cases) report.pass = report.pass && cr.pass;
    if (cache) cache->flush();
    return report;
}

std::vector<SearchResult> search(const SearchSpec& spec, const Config& config,
                                 ResultCache* cache) {
    std::vector<std::string> instances;
    auto canonical = [&](const std::string& expr) { return dsl::pretty(dsl::parse(expr)); };
    if (spec.base_exprs.empty()) throw InvalidParameter("search needs at least one base ring");

    if (spec.family == "prod") {
        if (spec.base_exprs.size() < 2)
            throw InvalidParameter("prod search needs at least two base rings");
        std::string expr = "Prod(";
        for (std::size_t i = 0; i < spec.base_exprs.size(); ++i) {
            if (i) expr += ", ";
            expr += canonical(spec.base_exprs[i]);
        }
        instances.push_back(expr + ")");
    } else {
        for (const auto& raw : spec.base_exprs) {
            std::string base = canonical(raw);
            if (spec.family == "triv") {
                instances.push_back("Triv(" + base + ")");
            } else if (spec.family == "polymod" || spec.family == "mat" || spec.family == "ut") {
                std::string head = spec.family == "polymod" ? "PolyMod"
                                   : spec.family == "mat"   ? "Mat"
                                                            : "UT";
                for (std::uint32_t n : spec.n_values)
                    instances.push_back(head + "(" + base + ", " + std::to_string(n) + ")");
            } else if (spec.family == "tnk") {
                for (std::uint32_t n : spec.n_values) {
                    std::vector<std::uint32_t> ks = spec.k_values;
                    if (ks.empty())
                        for (std::uint32_t k = 1; k + 1 <= n; ++k) ks.push_back(k);
                    for (std::uint32_t k : ks) {
                        if (k < 1 || k + 1 > n) continue;  // out of range for this n
                        instances.push_back("Tnk(" + base + ", " + std::to_string(n) + ", " +
                                            std::to_string(k) + ")");
                    }
                }
            } else {
                throw InvalidParameter("unknown search family " + spec.family);
            }
        }
    }

    std::vector<SearchResult> results;
    std::uint32_t hits = 0;
    for (const auto& expr : instances) {
        SearchResult sr;
        sr.ring_text = expr;
        try {
            if (cache) {
                if (auto hit = cache->lookup(expr, spec.property, int(spec.degree))) {
                    sr.verdict = hit->value("observed", "");
                    sr.report = *hit;
                    sr.hit = spec.negate ? sr.verdict == "fails"
                                         : (sr.verdict == "holds" ||
                                            sr.verdict.rfind("certified", 0) == 0);
                    results.push_back(std::move(sr));
                    if (results.back().hit && spec.stop_after && ++hits >= spec.stop_after) break;
                    continue;
                }
            }
            RingPtr ring = built_ring(expr, config.caps);
            PropertyReport rep = check_property(ring, spec.property, spec.degree, config.budget);
            sr.verdict = rep.verdict_str();
            sr.hit = spec.negate ? rep.verdict == Verdict::fails : rep.passed();
            sr.report = report_json(*ring, rep);
            if (cache) {
                json value{{"observed", sr.verdict},
                           {"witness", rep.witness ? witness_json(*ring, *rep.witness)
                                                   : json(nullptr)},
                           {"work", rep.work},
                           {"note", rep.note},
                           {"extra_failed", false}};
                cache->remember(expr, spec.property, int(spec.degree), std::move(value));
            }
        } catch (const OrderOverflow& e) {
            sr.verdict = "skipped";
            sr.report = json{{"note", std::string("order overflow: ") + e.what()}};
        } catch (const InvalidParameter& e) {
            sr.verdict = "skipped";
            sr.report = json{{"note", std::string("invalid parameters: ") + e.what()}};
        }
        results.push_back(std::move(sr));
        if (results.back().hit && spec.stop_after && ++hits >= spec.stop_after) break;
    }
    if (cache) cache->flush();
    return results;
}

// --- serialization ----------------------------------------------------------------

namespace {

json config_json(const Config& c) {
    return json{{"caps",
                 {{"table_cap", c.caps.table_cap},
                  {"enum_cap", c.caps.enum_cap},
                  {"axiom_cap", c.caps.axiom_cap}}},
                {"budgets",
                 {{"max_pairs_examined", c.budget.max_pairs_examined},
                  {"elapsed_cap_ms", c.budget.elapsed_cap_ms}}},
                {"threads", c.threads},
                {"degree", c.degree}};
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

}  // namespace

json report_json(const RunReport& report, bool include_timestamp) {
    json out;
    out["version"] = report.version;
    if (include_timestamp) out["timestamp"] = timestamp_utc();
    out["config"] = config_json(report.config);
    json cases = json::array();
    for (const auto& c : report.cases) {
        json jc{{"id", c.id},
                {"ring", c.ring_text},
                {"property", c.property},
                {"degree", c.degree},
                {"expected", c.expected},
                {"observed", c.observed}};
        if (!c.witness.is_null()) jc["witness"] = c.witness;
        jc["work"] = c.work;
        jc["ms"] = c.ms;
        jc["anchor"] = c.anchor;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        if (c.from_cache) jc["cached"] = true;
        cases.push_back(std::move(jc));
    }
    out["cases"] = std::move(cases);
    out["pass"] = report.pass;
    return out;
}

json search_json(const std::vector<SearchResult>& results) {
    json out = json::array();
    for (const auto& r : results) {
        out.push_back(json{{"ring", r.ring_text},
                           {"verdict", r.verdict},
                           {"hit", r.hit},
                           {"report", r.report}});
    }
    return out;
}

void emit_report(const RunReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write report to " + path);
    out << report_json(report).dump(2) << "\n";
    if (!out) throw Error("failed while writing report to " + path);
}

}  // namespace finring::harness

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

#ifndef FINRING_PROPERTIES_HPP
#define FINRING_PROPERTIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "finring/poly.hpp"
#include "finring/ring.hpp"

namespace finring {

enum class Verdict {
    holds,
    fails,
    certified_up_to_degree,  // degree-bounded pass; never an unbounded claim
    inconclusive,            // budget exhausted before a verdict
};

/// Canonical verdict text: "holds", "fails", "certified-up-to-degree(d)",
/// "inconclusive".
std::string verdict_text(Verdict v, int degree = 0);

/// Witness element roles are named so the recheck recipe can refer to them.
struct NamedElement {
    std::string name;
    ElemIndex index = 0;
};

/// One re-executable condition over the named elements.
struct RecheckStep {
    std::string check;              // e.g. "product_noncentral", "conv_zero"
    std::vector<std::string> lhs;   // element names
    std::vector<std::string> rhs;   // element names (second operand list)
    std::optional<ElemIndex> expect;  // expected index for "product_is"
};

struct Witness {
    std::string kind;  // "noncentral-idempotent", "square-zero-pair", ...
    std::vector<NamedElement> elements;
    std::vector<RecheckStep> recipe;

    std::optional<ElemIndex> find(const std::string& name) const;
};

/// Re-evaluates every recipe step with ring arithmetic only.
bool recheck_witness(const Ring& r, const Witness& w);

struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::holds;
    int degree = 0;  // certification bound for degree-bounded checks
    std::optional<Witness> witness;
    std::uint64_t work = 0;  // tuples / pairs / elements examined
    double ms = 0.0;
    std::string note;

    bool passed() const { return verdict == Verdict::holds || verdict == Verdict::certified_up_to_degree; }
    std::string verdict_str() const { return verdict_text(verdict, degree); }
};

json witness_json(const Ring& r, const Witness& w);
json report_json(const Ring& r, const PropertyReport& rep);

// --- checkers ---------------------------------------------------------------
// Each reports holds/fails with a re-checkable witness on failure; the
// witness is the lexicographically least one in canonical enumeration order.

PropertyReport is_commutative(const RingPtr& r);
PropertyReport is_reduced(const RingPtr& r);
PropertyReport is_central_reduced(const RingPtr& r);
PropertyReport is_abelian(const RingPtr& r);
PropertyReport is_semicommutative(const RingPtr& r);
PropertyReport is_von_neumann_regular(const RingPtr& r);
PropertyReport is_right_pp(const RingPtr& r);
PropertyReport is_semiprime(const RingPtr& r);

PropertyReport is_linear_armendariz(const RingPtr& r, const AnnPairBudget& budget = {});
PropertyReport is_central_linear_armendariz(const RingPtr& r, const AnnPairBudget& budget = {},
                                            bool use_prefilter = true);
PropertyReport is_weak_linear_armendariz(const RingPtr& r, const AnnPairBudget& budget = {});
PropertyReport is_armendariz_up_to(const RingPtr& r, std::uint32_t d,
                                   const AnnPairBudget& budget = {});

/// Searches for a pair a, b with a^2 = b^2 = 0, ab = ba and ab non-central.
/// Such a pair certifies the failure of the central linear condition via the
/// annihilating pair (a + bx, a - bx); the sweep-based checker still provides
/// completeness. Verdict `fails` means a pair was found (witness attached);
/// `holds` means no such pair exists.
PropertyReport square_zero_noncentral_witness(const RingPtr& r);

/// Runs every checker in a fixed order (cheap structural checks first, the
/// square-zero search before the full central-linear sweep) and appends the
/// degree-bounded coefficient check at bound `degree`.
std::vector<PropertyReport> property_profile(const RingPtr& r, std::uint32_t degree = 2,
                                             const AnnPairBudget& budget = {});

/// Dispatch by canonical property name ("commutative", "reduced",
/// "central-reduced", "abelian", "semicommutative", "von-neumann-regular",
/// "right-pp", "semiprime", "linear-armendariz", "central-linear-armendariz",
/// "weak-linear-armendariz", "armendariz", "square-zero-prefilter").
PropertyReport check_property(const RingPtr& r, const std::string& property,
                              std::uint32_t degree = 2, const AnnPairBudget& budget = {});
std::vector<std::string> known_properties();

// --- implication audit -------------------------------------------------------

struct AuditViolation {
    std::string rule;
    std::string left;   // "property = verdict" of the antecedent side
    std::string right;  // conflicting report
};

struct AuditResult {
    bool consistent = true;
    std::vector<AuditViolation> violations;
    std::vector<std::string> rules_checked;
};

/// Cross-checks one ring's profile against the implication chain between
/// the checked classes. A violation always signals an implementation bug.
AuditResult implication_audit(const std::vector<PropertyReport>& profile);

/// Throws ContradictionFound describing the first violation.
void require_consistent(const AuditResult& audit);

json audit_json(const AuditResult& audit);

}  // namespace finring

#endif  // FINRING_PROPERTIES_HPP

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

#include "finring/properties.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "finring/constructions.hpp"

namespace finring {

std::string verdict_text(Verdict v, int degree) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::certified_up_to_degree:
            return "certified-up-to-degree(" + std::to_string(degree) + ")";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::optional<ElemIndex> Witness::find(const std::string& name) const {
    for (const auto& e : elements)
        if (e.name == name) return e.index;
    return std::nullopt;
}

namespace {

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Memoized per-element centrality (the sweep is O(order) per element).
class CentralityOracle {
  public:
    explicit CentralityOracle(const Ring& r) : r_(r), memo_(r.order(), -1) {}

    bool central(ElemIndex a) {
        if (memo_[a] < 0) memo_[a] = is_central(r_, a) ? 1 : 0;
        return memo_[a] == 1;
    }

  private:
    const Ring& r_;
    std::vector<signed char> memo_;
};

class NilpotencyOracle {
  public:
    explicit NilpotencyOracle(const Ring& r) : r_(r), memo_(r.order(), -1) {}

    bool nilpotent(ElemIndex a) {
        if (memo_[a] < 0) memo_[a] = is_nilpotent(r_, a) ? 1 : 0;
        return memo_[a] == 1;
    }

  private:
    const Ring& r_;
    std::vector<signed char> memo_;
};

ElemIndex least_noncommuting(const Ring& r, ElemIndex a) {
    for (ElemIndex x = 0; x < r.order(); ++x)
        if (r.mul(a, x) != r.mul(x, a)) return x;
    throw Error("internal: element is central, no witness partner exists");
}

RecheckStep step(std::string check, std::vector<std::string> lhs,
                 std::vector<std::string> rhs = {}, std::optional<ElemIndex> expect = {}) {
    return RecheckStep{std::move(check), std::move(lhs), std::move(rhs), expect};
}

PropertyReport finish_report(PropertyReport rep, const RingPtr& r, const Timer& t) {
    rep.ms = t.ms();
    if (rep.witness && !recheck_witness(*r, *rep.witness))
        throw Error("internal: witness for " + rep.property + " on " + r->name() +
                    " failed its own recheck");
    return rep;
}

}  // namespace

bool recheck_witness(const Ring& r, const Witness& w) {
    std::map<std::string, ElemIndex> env;
    for (const auto& e : w.elements) env[e.name] = e.index;
    auto get = [&](const std::string& name) -> ElemIndex {
        auto it = env.find(name);
        if (it == env.end()) throw Error("recheck refers to unknown element " + name);
        return it->second;
    };

    for (const auto& s : w.recipe) {
        bool ok = false;
        if (s.check == "nonzero") {
            ok = get(s.lhs.at(0)) != 0;
        } else if (s.check == "square_zero") {
            ElemIndex x = get(s.lhs.at(0));
            ok = r.mul(x, x) == 0;
        } else if (s.check == "idempotent") {
            ElemIndex x = get(s.lhs.at(0));
            ok = r.mul(x, x) == x;
        } else if (s.check == "nilpotent") {
            ok = is_nilpotent(r, get(s.lhs.at(0)));
        } else if (s.check == "commute") {
            ElemIndex a = get(s.lhs.at(0)), b = get(s.rhs.at(0));
            ok = r.mul(a, b) == r.mul(b, a);
        } else if (s.check == "not_commute") {
            ElemIndex a = get(s.lhs.at(0)), b = get(s.rhs.at(0));
            ok = r.mul(a, b) != r.mul(b, a);
        } else if (s.check == "product_zero") {
            ok = r.mul(get(s.lhs.at(0)), get(s.rhs.at(0))) == 0;
        } else if (s.check == "product_nonzero") {
            ok = r.mul(get(s.lhs.at(0)), get(s.rhs.at(0))) != 0;
        } else if (s.check == "product_is") {
            ok = s.expect && r.mul(get(s.lhs.at(0)), get(s.rhs.at(0))) == *s.expect;
        } else if (s.check == "product_noncentral") {
            ElemIndex p = r.mul(get(s.lhs.at(0)), get(s.lhs.at(1)));
            ElemIndex x = get(s.rhs.at(0));
            ok = r.mul(p, x) != r.mul(x, p);
        } else if (s.check == "product_not_nilpotent") {
            ok = !is_nilpotent(r, r.mul(get(s.lhs.at(0)), get(s.rhs.at(0))));
        } else if (s.check == "sandwich_nonzero") {
            ElemIndex a = get(s.lhs.at(0)), x = get(s.lhs.at(1)), b = get(s.lhs.at(2));
            ok = r.mul(r.mul(a, x), b) != 0;
        } else if (s.check == "sandwich_all_zero") {
            ElemIndex a = get(s.lhs.at(0));
            ok = true;
            for (ElemIndex x = 0; x < r.order() && ok; ++x)
                if (r.mul(r.mul(a, x), a) != 0) ok = false;
        } else if (s.check == "no_inner_inverse") {
            ElemIndex a = get(s.lhs.at(0));
            ok = true;
            for (ElemIndex x = 0; x < r.order() && ok; ++x)
                if (r.mul(r.mul(a, x), a) == a) ok = false;
        } else if (s.check == "rann_not_principal") {
            ElemIndex a = get(s.lhs.at(0));
            auto ann = right_annihilator_of(r, a);
            ok = true;
            for (ElemIndex e = 0; e < r.order() && ok; ++e) {
                if (r.mul(e, e) != e) continue;
                std::vector<ElemIndex> er;
                for (ElemIndex x = 0; x < r.order(); ++x) er.push_back(r.mul(e, x));
                std::sort(er.begin(), er.end());
                er.erase(std::unique(er.begin(), er.end()), er.end());
                if (er == ann) ok = false;
            }
        } else if (s.check == "conv_zero") {
            std::vector<ElemIndex> f, g;
            for (const auto& n : s.lhs) f.push_back(get(n));
            for (const auto& n : s.rhs) g.push_back(get(n));
            std::vector<ElemIndex> c(f.size() + g.size() - 1, 0);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j)
                    c[i + j] = r.add(c[i + j], r.mul(f[i], g[j]));
            ok = std::all_of(c.begin(), c.end(), [](ElemIndex v) { return v == 0; });
        } else {
            throw Error("unknown recheck step " + s.check);
        }
        if (!ok) return false;
    }
    return true;
}

// --- structural checkers -----------------------------------------------------

PropertyReport is_commutative(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "commutative"};
    for (ElemIndex a = 0; a < r->order(); ++a) {
        for (ElemIndex b = 0; b < r->order(); ++b) {
            ++rep.work;
            if (r->mul(a, b) != r->mul(b, a)) {
                rep.verdict = Verdict::fails;
                rep.witness = Witness{"noncommuting-pair",
                                      {{"a", a}, {"b", b}},
                                      {step("not_commute", {"a"}, {"b"})}};
                return finish_report(std::move(rep), r, t);
            }
        }
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_reduced(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "reduced"};
    // a nonzero nilpotent exists iff a nonzero square-zero element exists
    for (ElemIndex a = 1; a < r->order(); ++a) {
        ++rep.work;
        if (r->mul(a, a) == 0) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"square-zero-element",
                                  {{"a", a}},
                                  {step("nonzero", {"a"}), step("square_zero", {"a"})}};
            return finish_report(std::move(rep), r, t);
        }
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_central_reduced(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "central-reduced"};
    for (ElemIndex a = 0; a < r->order(); ++a) {
        ++rep.work;
        if (!is_nilpotent(*r, a) || is_central(*r, a)) continue;
        ElemIndex x = least_noncommuting(*r, a);
        rep.verdict = Verdict::fails;
        rep.witness = Witness{"nilpotent-noncentral",
                              {{"a", a}, {"r", x}},
                              {step("nilpotent", {"a"}), step("not_commute", {"a"}, {"r"})}};
        return finish_report(std::move(rep), r, t);
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_abelian(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "abelian"};
    for (ElemIndex e = 0; e < r->order(); ++e) {
        ++rep.work;
        if (r->mul(e, e) != e || is_central(*r, e)) continue;
        ElemIndex x = least_noncommuting(*r, e);
        rep.verdict = Verdict::fails;
        rep.witness = Witness{"noncentral-idempotent",
                              {{"e", e}, {"r", x}},
                              {step("idempotent", {"e"}), step("not_commute", {"e"}, {"r"})}};
        return finish_report(std::move(rep), r, t);
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_semicommutative(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "semicommutative"};
    for (ElemIndex a = 0; a < r->order(); ++a) {
        for (ElemIndex b = 0; b < r->order(); ++b) {
            if (r->mul(a, b) != 0) continue;
            for (ElemIndex x = 0; x < r->order(); ++x) {
                ++rep.work;
                if (r->mul(r->mul(a, x), b) == 0) continue;
                rep.verdict = Verdict::fails;
                rep.witness = Witness{"semicomm-violation",
                                      {{"a", a}, {"r", x}, {"b", b}},
                                      {step("product_zero", {"a"}, {"b"}),
                                       step("sandwich_nonzero", {"a", "r", "b"})}};
                return finish_report(std::move(rep), r, t);
            }
        }
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_von_neumann_regular(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "von-neumann-regular"};
    for (ElemIndex a = 0; a < r->order(); ++a) {
        bool regular = false;
        for (ElemIndex x = 0; x < r->order() && !regular; ++x) {
            ++rep.work;
            if (r->mul(r->mul(a, x), a) == a) regular = true;
        }
        if (!regular) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"vnr-failure", {{"a", a}}, {step("no_inner_inverse", {"a"})}};
            return finish_report(std::move(rep), r, t);
        }
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_right_pp(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "right-pp"};
    std::vector<std::vector<ElemIndex>> principal;  // eR for each idempotent e
    for (ElemIndex e = 0; e < r->order(); ++e) {
        if (r->mul(e, e) != e) continue;
        std::vector<ElemIndex> er;
        er.reserve(r->order());
        for (ElemIndex x = 0; x < r->order(); ++x) er.push_back(r->mul(e, x));
        std::sort(er.begin(), er.end());
        er.erase(std::unique(er.begin(), er.end()), er.end());
        principal.push_back(std::move(er));
    }
    for (ElemIndex a = 0; a < r->order(); ++a) {
        auto ann = right_annihilator_of(*r, a);
        bool matched = false;
        for (const auto& er : principal) {
            ++rep.work;
            if (er == ann) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"pp-failure", {{"a", a}}, {step("rann_not_principal", {"a"})}};
            return finish_report(std::move(rep), r, t);
        }
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_semiprime(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "semiprime"};
    for (ElemIndex a = 1; a < r->order(); ++a) {
        bool crushed = true;
        for (ElemIndex x = 0; x < r->order() && crushed; ++x) {
            ++rep.work;
            if (r->mul(r->mul(a, x), a) != 0) crushed = false;
        }
        if (crushed) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"semiprime-failure",
                                  {{"a", a}},
                                  {step("nonzero", {"a"}), step("sandwich_all_zero", {"a"})}};
            return finish_report(std::move(rep), r, t);
        }
    }
    return finish_report(std::move(rep), r, t);
}

// --- coefficient-condition checkers ------------------------------------------

namespace {

// Inside the linear sweep a0*b0 and a1*b1 vanish by construction and the
// cross terms are mutual negatives, so a0*b1 carries all the information.
Witness linear_pair_witness(const char* kind, const LinearPair& p, const RecheckStep& extra) {
    Witness w{kind,
              {{"a0", p.a0}, {"a1", p.a1}, {"b0", p.b0}, {"b1", p.b1}},
              {step("conv_zero", {"a0", "a1"}, {"b0", "b1"})}};
    w.recipe.push_back(extra);
    return w;
}

PropertyReport inconclusive_report(PropertyReport rep, const BudgetExhausted& e) {
    rep.verdict = Verdict::inconclusive;
    rep.work = e.examined;
    rep.note = e.what();
    return rep;
}

}  // namespace

PropertyReport is_linear_armendariz(const RingPtr& r, const AnnPairBudget& budget) {
    Timer t;
    PropertyReport rep{.property = "linear-armendariz"};
    try {
        auto stats = for_each_annihilating_linear_pair(*r, budget, [&](const LinearPair& p) {
            if (r->mul(p.a0, p.b1) == 0) return true;
            rep.verdict = Verdict::fails;
            rep.witness =
                linear_pair_witness("annihilating-pair-violation", p,
                                    step("product_nonzero", {"a0"}, {"b1"}));
            rep.note = "a0*b1 != 0";
            return false;
        });
        rep.work = stats.examined;
    } catch (const BudgetExhausted& e) {
        return finish_report(inconclusive_report(std::move(rep), e), r, t);
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_weak_linear_armendariz(const RingPtr& r, const AnnPairBudget& budget) {
    Timer t;
    PropertyReport rep{.property = "weak-linear-armendariz"};
    NilpotencyOracle nil(*r);
    try {
        auto stats = for_each_annihilating_linear_pair(*r, budget, [&](const LinearPair& p) {
            if (nil.nilpotent(r->mul(p.a0, p.b1))) return true;
            rep.verdict = Verdict::fails;
            rep.witness =
                linear_pair_witness("annihilating-pair-violation", p,
                                    step("product_not_nilpotent", {"a0"}, {"b1"}));
            rep.note = "a0*b1 not nilpotent";
            return false;
        });
        rep.work = stats.examined;
    } catch (const BudgetExhausted& e) {
        return finish_report(inconclusive_report(std::move(rep), e), r, t);
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport square_zero_noncentral_witness(const RingPtr& r) {
    Timer t;
    PropertyReport rep{.property = "square-zero-prefilter"};
    CentralityOracle central(*r);

    auto build = [&](ElemIndex a, ElemIndex b) {
        ElemIndex x = least_noncommuting(*r, r->mul(a, b));
        Witness w{"square-zero-pair",
                  {{"a", a}, {"b", b}, {"nb", r->neg(b)}, {"r", x}},
                  {step("square_zero", {"a"}), step("square_zero", {"b"}),
                   step("commute", {"a"}, {"b"}), step("product_noncentral", {"a", "b"}, {"r"}),
                   step("conv_zero", {"a", "b"}, {"a", "nb"})}};
        return w;
    };

    // Banded matrix rings carry a constructive candidate family: a scalar
    // square-zero diagonal paired with the top-row sum of free matrix units.
    if (auto info = banded_info(*r)) {
        const Ring& base = *info->base;
        for (ElemIndex a = 1; a < base.order(); ++a) {
            ++rep.work;
            if (base.mul(a, a) != 0) continue;
            std::vector<ElemIndex> pa(info->param_count, 0);
            pa[0] = a;
            std::vector<ElemIndex> pb(info->param_count, 0);
            for (std::uint32_t j = 0; j < info->n - info->k; ++j)
                pb[info->k + j] = base.one();
            ElemIndex A = tnk_element(*r, pa);
            ElemIndex B = tnk_element(*r, pb);
            ElemIndex AB = r->mul(A, B);
            if (r->mul(A, A) != 0 || r->mul(B, B) != 0) continue;
            if (AB != r->mul(B, A) || central.central(AB)) continue;
            rep.verdict = Verdict::fails;
            rep.witness = build(A, B);
            rep.note = "constructive banded candidate";
            return finish_report(std::move(rep), r, t);
        }
    }

    std::vector<ElemIndex> square_zero;
    for (ElemIndex a = 0; a < r->order(); ++a)
        if (r->mul(a, a) == 0) square_zero.push_back(a);
    for (ElemIndex a : square_zero) {
        for (ElemIndex b : square_zero) {
            ++rep.work;
            ElemIndex ab = r->mul(a, b);
            if (ab != r->mul(b, a) || central.central(ab)) continue;
            rep.verdict = Verdict::fails;
            rep.witness = build(a, b);
            return finish_report(std::move(rep), r, t);
        }
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_central_linear_armendariz(const RingPtr& r, const AnnPairBudget& budget,
                                            bool use_prefilter) {
    Timer t;
    PropertyReport rep{.property = "central-linear-armendariz"};
    if (use_prefilter) {
        PropertyReport pre = square_zero_noncentral_witness(r);
        rep.work += pre.work;
        if (pre.verdict == Verdict::fails) {
            rep.verdict = Verdict::fails;
            rep.witness = std::move(pre.witness);
            rep.note = "refuted by square-zero prefilter";
            return finish_report(std::move(rep), r, t);
        }
    }
    CentralityOracle central(*r);
    try {
        auto stats = for_each_annihilating_linear_pair(*r, budget, [&](const LinearPair& p) {
            ElemIndex prod = r->mul(p.a0, p.b1);
            if (central.central(prod)) return true;
            ElemIndex x = least_noncommuting(*r, prod);
            rep.verdict = Verdict::fails;
            rep.witness =
                linear_pair_witness("annihilating-pair-violation", p,
                                    step("product_noncentral", {"a0", "b1"}, {"r"}));
            rep.witness->elements.push_back({"r", x});
            rep.note = "a0*b1 not central";
            return false;
        });
        rep.work += stats.examined;
    } catch (const BudgetExhausted& e) {
        return finish_report(inconclusive_report(std::move(rep), e), r, t);
    }
    return finish_report(std::move(rep), r, t);
}

PropertyReport is_armendariz_up_to(const RingPtr& r, std::uint32_t d,
                                   const AnnPairBudget& budget) {
    if (d < 1) throw InvalidParameter("armendariz check needs degree >= 1");
    Timer t;
    PropertyReport rep{.property = "armendariz", .degree = int(d)};
    for (std::uint32_t deg = 1; deg <= d; ++deg) {
        AnnPairBudget remaining = budget;
        if (budget.max_pairs_examined) {
            if (rep.work >= budget.max_pairs_examined)
                return finish_report(
                    inconclusive_report(std::move(rep),
                                        BudgetExhausted("tuple budget exhausted", rep.work)),
                    r, t);
            remaining.max_pairs_examined = budget.max_pairs_examined - rep.work;
        }
        bool failed = false;
        try {
            auto stats = for_each_annihilating_pair_degree(
                *r, deg, remaining,
                [&](std::span<const ElemIndex> a, std::span<const ElemIndex> b) {
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        for (std::size_t j = 0; j < b.size(); ++j) {
                            if (r->mul(a[i], b[j]) == 0) continue;
                            Witness w{"annihilating-pair-violation", {}, {}};
                            std::vector<std::string> an, bn;
                            for (std::size_t q = 0; q < a.size(); ++q) {
                                an.push_back("a" + std::to_string(q));
                                w.elements.push_back({an.back(), a[q]});
                            }
                            for (std::size_t q = 0; q < b.size(); ++q) {
                                bn.push_back("b" + std::to_string(q));
                                w.elements.push_back({bn.back(), b[q]});
                            }
                            w.recipe.push_back(step("conv_zero", an, bn));
                            w.recipe.push_back(step("product_nonzero", {an[i]}, {bn[j]}));
                            rep.verdict = Verdict::fails;
                            rep.witness = std::move(w);
                            rep.note = "a" + std::to_string(i) + "*b" + std::to_string(j) +
                                       " != 0 at degree " + std::to_string(deg);
                            failed = true;
                            return false;
                        }
                    }
                    return true;
                });
            rep.work += stats.examined;
        } catch (const BudgetExhausted& e) {
            rep.work += e.examined;
            return finish_report(
                inconclusive_report(std::move(rep), BudgetExhausted(e.what(), rep.work)), r, t);
        }
        if (failed) return finish_report(std::move(rep), r, t);
    }
    rep.verdict = Verdict::certified_up_to_degree;
    return finish_report(std::move(rep), r, t);
}

// --- profile and audit --------------------------------------------------------

std::vector<PropertyReport> property_profile(const RingPtr& r, std::uint32_t degree,
                                             const AnnPairBudget& budget) {
    std::vector<PropertyReport> out;
    out.push_back(is_commutative(r));
    out.push_back(is_reduced(r));
    out.push_back(is_central_reduced(r));
    out.push_back(is_abelian(r));
    out.push_back(is_semicommutative(r));
    out.push_back(is_von_neumann_regular(r));
    out.push_back(is_right_pp(r));
    out.push_back(is_semiprime(r));

    PropertyReport pre = square_zero_noncentral_witness(r);
    out.push_back(pre);
    out.push_back(is_linear_armendariz(r, budget));
    if (pre.verdict == Verdict::fails) {
        Timer t;
        PropertyReport cla{.property = "central-linear-armendariz"};
        cla.verdict = Verdict::fails;
        cla.witness = pre.witness;
        cla.work = pre.work;
        cla.note = "refuted by square-zero prefilter";
        cla.ms = t.ms();
        out.push_back(std::move(cla));
    } else {
        out.push_back(is_central_linear_armendariz(r, budget, /*use_prefilter=*/false));
    }
    out.push_back(is_weak_linear_armendariz(r, budget));
    out.push_back(is_armendariz_up_to(r, degree, budget));
    return out;
}

PropertyReport check_property(const RingPtr& r, const std::string& property,
                              std::uint32_t degree, const AnnPairBudget& budget) {
    if (property == "commutative") return is_commutative(r);
    if (property == "reduced") return is_reduced(r);
    if (property == "central-reduced") return is_central_reduced(r);
    if (property == "abelian") return is_abelian(r);
    if (property == "semicommutative") return is_semicommutative(r);
    if (property == "von-neumann-regular") return is_von_neumann_regular(r);
    if (property == "right-pp") return is_right_pp(r);
    if (property == "semiprime") return is_semiprime(r);
    if (property == "linear-armendariz") return is_linear_armendariz(r, budget);
    if (property == "central-linear-armendariz")
        return is_central_linear_armendariz(r, budget);
    if (property == "weak-linear-armendariz") return is_weak_linear_armendariz(r, budget);
    if (property == "armendariz") return is_armendariz_up_to(r, degree, budget);
    if (property == "square-zero-prefilter") return square_zero_noncentral_witness(r);
    throw InvalidParameter("unknown property " + property);
}

std::vector<std::string> known_properties() {
    return {"commutative",       "reduced",
            "central-reduced",   "abelian",
            "semicommutative",   "von-neumann-regular",
            "right-pp",          "semiprime",
            "linear-armendariz", "central-linear-armendariz",
            "weak-linear-armendariz", "armendariz",
            "square-zero-prefilter"};
}

namespace {

struct VerdictView {
    bool known = false;
    bool pass = false;  // holds or certified
};

VerdictView view(const std::vector<PropertyReport>& profile, const std::string& name) {
    for (const auto& rep : profile) {
        if (rep.property != name) continue;
        if (rep.verdict == Verdict::inconclusive) return {false, false};
        return {true, rep.passed()};
    }
    return {false, false};
}

std::string describe(const std::vector<PropertyReport>& profile, const std::string& name) {
    for (const auto& rep : profile)
        if (rep.property == name) return name + " = " + rep.verdict_str();
    return name + " = missing";
}

}  // namespace

AuditResult implication_audit(const std::vector<PropertyReport>& profile) {
    AuditResult out;
    auto imply = [&](const std::string& rule, std::initializer_list<const char*> antecedents,
                     const char* consequent) {
        std::vector<VerdictView> ants;
        for (const char* a : antecedents) ants.push_back(view(profile, a));
        VerdictView cons = view(profile, consequent);
        if (!cons.known ||
            std::any_of(ants.begin(), ants.end(), [](const VerdictView& v) { return !v.known; }))
            return;
        out.rules_checked.push_back(rule);
        bool all = std::all_of(ants.begin(), ants.end(),
                               [](const VerdictView& v) { return v.pass; });
        if (all && !cons.pass) {
            std::string lhs;
            for (const char* a : antecedents) {
                if (!lhs.empty()) lhs += ", ";
                lhs += describe(profile, a);
            }
            out.violations.push_back({rule, lhs, describe(profile, consequent)});
        }
    };

    imply("armendariz=>linear-armendariz", {"armendariz"}, "linear-armendariz");
    imply("linear-armendariz=>central-linear-armendariz", {"linear-armendariz"},
          "central-linear-armendariz");
    imply("central-linear-armendariz=>abelian", {"central-linear-armendariz"}, "abelian");
    imply("commutative=>central-linear-armendariz", {"commutative"},
          "central-linear-armendariz");
    imply("reduced=>central-reduced", {"reduced"}, "central-reduced");
    imply("central-reduced=>central-linear-armendariz", {"central-reduced"},
          "central-linear-armendariz");
    imply("linear-armendariz=>weak-linear-armendariz", {"linear-armendariz"},
          "weak-linear-armendariz");
    imply("right-pp&central-linear-armendariz=>linear-armendariz",
          {"right-pp", "central-linear-armendariz"}, "linear-armendariz");
    imply("reduced&weak-linear-armendariz=>central-linear-armendariz",
          {"reduced", "weak-linear-armendariz"}, "central-linear-armendariz");

    // a found square-zero pair refutes the central linear condition
    VerdictView pre = view(profile, "square-zero-prefilter");
    VerdictView cla = view(profile, "central-linear-armendariz");
    if (pre.known && cla.known) {
        out.rules_checked.push_back("square-zero-pair=>not-central-linear-armendariz");
        if (!pre.pass && cla.pass)
            out.violations.push_back({"square-zero-pair=>not-central-linear-armendariz",
                                      describe(profile, "square-zero-prefilter"),
                                      describe(profile, "central-linear-armendariz")});
    }

    out.consistent = out.violations.empty();
    return out;
}

void require_consistent(const AuditResult& audit) {
    if (audit.consistent) return;
    const auto& v = audit.violations.front();
    throw ContradictionFound("implication audit: rule " + v.rule + " violated (" + v.left +
                             " vs " + v.right + ")");
}

// --- serialization -------------------------------------------------------------

json witness_json(const Ring& r, const Witness& w) {
    json elems = json::array();
    for (const auto& e : w.elements) {
        elems.push_back(json{{"name", e.name},
                             {"index", e.index},
                             {"repr", r.repr(e.index)},
                             {"value", r.payload(e.index)}});
    }
    json recipe = json::array();
    for (const auto& s : w.recipe) {
        json jstep{{"check", s.check}, {"lhs", s.lhs}, {"rhs", s.rhs}};
        if (s.expect) jstep["expect"] = *s.expect;
        recipe.push_back(jstep);
    }
    return json{{"kind", w.kind}, {"elements", elems}, {"recipe", recipe}};
}

json report_json(const Ring& r, const PropertyReport& rep) {
    json out{{"property", rep.property},
             {"verdict", rep.verdict_str()},
             {"degree", rep.degree},
             {"work", rep.work},
             {"ms", rep.ms}};
    if (rep.witness) out["witness"] = witness_json(r, *rep.witness);
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

json audit_json(const AuditResult& audit) {
    json violations = json::array();
    for (const auto& v : audit.violations)
        violations.push_back(json{{"rule", v.rule}, {"left", v.left}, {"right", v.right}});
    return json{{"consistent", audit.consistent},
                {"rules_checked", audit.rules_checked},
                {"violations", violations}};
}

}  // namespace finring

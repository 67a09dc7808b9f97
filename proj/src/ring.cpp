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

#include "finring/ring.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace finring {

void Ring::init_tables(const Caps& caps) {
    one_ = one_impl();
    if (order_ > caps.table_cap) return;
    const std::size_t n = order_;
    add_tab_.resize(n * n);
    mul_tab_.resize(n * n);
    neg_tab_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        neg_tab_[a] = std::uint16_t(neg_impl(ElemIndex(a)));
        for (std::size_t b = 0; b < n; ++b) {
            add_tab_[a * n + b] = std::uint16_t(add_impl(ElemIndex(a), ElemIndex(b)));
            mul_tab_[a * n + b] = std::uint16_t(mul_impl(ElemIndex(a), ElemIndex(b)));
        }
    }
}

namespace {

void require_same_ring(const Element& a, const Element& b) {
    if (a.ring.get() != b.ring.get())
        throw MixedRings("elements of " + a.ring->name() + " and " + b.ring->name() +
                         " cannot be combined");
}

}  // namespace

Element add(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element{a.ring, a.ring->add(a.index, b.index)};
}

Element mul(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element{a.ring, a.ring->mul(a.index, b.index)};
}

Element neg(const Element& a) { return Element{a.ring, a.ring->neg(a.index)}; }

bool Subset::contains(ElemIndex i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

bool is_nilpotent(const Ring& r, ElemIndex a) {
    // Powers preceding the first zero are pairwise distinct, so a^k = 0
    // happens within order steps if it happens at all.
    ElemIndex p = a;
    for (std::uint32_t k = 0; k < r.order(); ++k) {
        if (p == 0) return true;
        p = r.mul(p, a);
    }
    return p == 0;
}

bool is_idempotent(const Ring& r, ElemIndex a) { return r.mul(a, a) == a; }

bool is_central(const Ring& r, ElemIndex a) {
    for (ElemIndex x = 0; x < r.order(); ++x)
        if (r.mul(a, x) != r.mul(x, a)) return false;
    return true;
}

std::vector<ElemIndex> center_of(const Ring& r) {
    std::vector<ElemIndex> out;
    for (ElemIndex a = 0; a < r.order(); ++a)
        if (is_central(r, a)) out.push_back(a);
    return out;
}

std::vector<ElemIndex> right_annihilator_of(const Ring& r, ElemIndex a) {
    std::vector<ElemIndex> out;
    for (ElemIndex b = 0; b < r.order(); ++b)
        if (r.mul(a, b) == 0) out.push_back(b);
    return out;
}

std::vector<ElemIndex> left_annihilator_of(const Ring& r, ElemIndex a) {
    std::vector<ElemIndex> out;
    for (ElemIndex b = 0; b < r.order(); ++b)
        if (r.mul(b, a) == 0) out.push_back(b);
    return out;
}

std::vector<ElemIndex> idempotents_of(const Ring& r) {
    std::vector<ElemIndex> out;
    for (ElemIndex a = 0; a < r.order(); ++a)
        if (is_idempotent(r, a)) out.push_back(a);
    return out;
}

std::vector<ElemIndex> nilpotents_of(const Ring& r) {
    std::vector<ElemIndex> out;
    for (ElemIndex a = 0; a < r.order(); ++a)
        if (is_nilpotent(r, a)) out.push_back(a);
    return out;
}

namespace {

// Closure of `start` under x -> x + g for every generator g. In a finite
// additive group this yields the subgroup generated by `start`.
std::vector<ElemIndex> additive_closure(const Ring& r, const std::vector<ElemIndex>& gens) {
    std::vector<char> seen(r.order(), 0);
    std::deque<ElemIndex> work;
    seen[0] = 1;
    work.push_back(0);
    for (ElemIndex g : gens) {
        if (!seen[g]) {
            seen[g] = 1;
            work.push_back(g);
        }
    }
    while (!work.empty()) {
        ElemIndex x = work.front();
        work.pop_front();
        for (ElemIndex g : gens) {
            ElemIndex y = r.add(x, g);
            if (!seen[y]) {
                seen[y] = 1;
                work.push_back(y);
            }
        }
    }
    std::vector<ElemIndex> out;
    for (ElemIndex i = 0; i < r.order(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

}  // namespace

std::vector<ElemIndex> ideal_closure_of(const Ring& r, const std::vector<ElemIndex>& gens) {
    if (gens.empty()) throw InvalidParameter("ideal_closure needs at least one generator");
    for (ElemIndex g : gens)
        if (g >= r.order()) throw InvalidParameter("generator index out of range");

    std::vector<ElemIndex> current = gens;
    while (true) {
        std::vector<ElemIndex> closed = additive_closure(r, current);
        std::vector<ElemIndex> next = closed;
        std::vector<char> member(r.order(), 0);
        for (ElemIndex m : closed) member[m] = 1;
        bool grew = false;
        for (ElemIndex m : closed) {
            for (ElemIndex x = 0; x < r.order(); ++x) {
                ElemIndex l = r.mul(x, m);
                ElemIndex rt = r.mul(m, x);
                if (!member[l]) {
                    member[l] = 1;
                    next.push_back(l);
                    grew = true;
                }
                if (!member[rt]) {
                    member[rt] = 1;
                    next.push_back(rt);
                    grew = true;
                }
            }
        }
        if (!grew) {
            std::sort(closed.begin(), closed.end());
            return closed;
        }
        current = std::move(next);
    }
}

std::vector<ElemIndex> subring_closure_of(const Ring& r, const std::vector<ElemIndex>& gens) {
    std::vector<char> member(r.order(), 0);
    std::vector<ElemIndex> elems;
    std::deque<ElemIndex> work;
    auto push = [&](ElemIndex x) {
        if (!member[x]) {
            member[x] = 1;
            elems.push_back(x);
            work.push_back(x);
        }
    };
    push(0);
    push(r.one());
    for (ElemIndex g : gens) {
        if (g >= r.order()) throw InvalidParameter("generator index out of range");
        push(g);
    }
    while (!work.empty()) {
        ElemIndex x = work.front();
        work.pop_front();
        push(r.neg(x));
        // elems may grow while iterating; index loop keeps it safe
        for (std::size_t i = 0; i < elems.size(); ++i) {
            ElemIndex y = elems[i];
            push(r.add(x, y));
            push(r.mul(x, y));
            push(r.mul(y, x));
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

Subset center(const RingPtr& r) { return Subset{r, center_of(*r)}; }
Subset right_annihilator(const Element& a) {
    return Subset{a.ring, right_annihilator_of(*a.ring, a.index)};
}
Subset left_annihilator(const Element& a) {
    return Subset{a.ring, left_annihilator_of(*a.ring, a.index)};
}
Subset idempotents(const RingPtr& r) { return Subset{r, idempotents_of(*r)}; }
Subset nilpotents(const RingPtr& r) { return Subset{r, nilpotents_of(*r)}; }
Subset ideal_closure(const RingPtr& r, const std::vector<ElemIndex>& gens) {
    return Subset{r, ideal_closure_of(*r, gens)};
}

namespace {

class QuotientRing final : public Ring {
  public:
    QuotientRing(RingPtr base, std::vector<ElemIndex> reps, std::vector<ElemIndex> coset_of,
                 std::string name)
        : Ring(std::uint32_t(reps.size()), std::move(name)),
          base_(std::move(base)),
          reps_(std::move(reps)),
          coset_of_(std::move(coset_of)) {}

    std::string repr(ElemIndex a) const override { return "[" + base_->repr(reps_[a]) + "]"; }
    json payload(ElemIndex a) const override {
        return json{{"coset_of", base_->payload(reps_[a])}};
    }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        return coset_of_[base_->add(reps_[a], reps_[b])];
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        return coset_of_[base_->mul(reps_[a], reps_[b])];
    }
    ElemIndex neg_impl(ElemIndex a) const override { return coset_of_[base_->neg(reps_[a])]; }
    ElemIndex one_impl() const override { return coset_of_[base_->one()]; }

  private:
    RingPtr base_;
    std::vector<ElemIndex> reps_;      // coset index -> least base index in the coset
    std::vector<ElemIndex> coset_of_;  // base index -> coset index
};

class SubRing final : public Ring {
  public:
    SubRing(RingPtr base, std::vector<ElemIndex> members, std::string name)
        : Ring(std::uint32_t(members.size()), std::move(name)),
          base_(std::move(base)),
          members_(std::move(members)),
          pos_(base_->order(), 0) {
        for (std::size_t i = 0; i < members_.size(); ++i) pos_[members_[i]] = ElemIndex(i);
    }

    std::string repr(ElemIndex a) const override { return base_->repr(members_[a]); }
    json payload(ElemIndex a) const override { return base_->payload(members_[a]); }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        return pos_[base_->add(members_[a], members_[b])];
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        return pos_[base_->mul(members_[a], members_[b])];
    }
    ElemIndex neg_impl(ElemIndex a) const override { return pos_[base_->neg(members_[a])]; }
    ElemIndex one_impl() const override { return pos_[base_->one()]; }

  private:
    RingPtr base_;
    std::vector<ElemIndex> members_;  // sorted base indices
    std::vector<ElemIndex> pos_;      // base index -> subring index (valid on members)
};

class TableRing final : public Ring {
  public:
    TableRing(std::string name, std::uint32_t order, std::vector<ElemIndex> add,
              std::vector<ElemIndex> mul, std::vector<ElemIndex> neg, ElemIndex one)
        : Ring(order, std::move(name)),
          add_(std::move(add)),
          mul_(std::move(mul)),
          negs_(std::move(neg)),
          one_(one) {}

    std::string repr(ElemIndex a) const override {
        std::ostringstream os;
        os << "#" << a;
        return os.str();
    }
    json payload(ElemIndex a) const override { return json(a); }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        return add_[std::size_t(a) * order() + b];
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        return mul_[std::size_t(a) * order() + b];
    }
    ElemIndex neg_impl(ElemIndex a) const override { return negs_[a]; }
    ElemIndex one_impl() const override { return one_; }

  private:
    std::vector<ElemIndex> add_;
    std::vector<ElemIndex> mul_;
    std::vector<ElemIndex> negs_;
    ElemIndex one_;
};

std::string index_list(const std::vector<ElemIndex>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

void validate_ideal(const Ring& r, const std::vector<ElemIndex>& members) {
    if (members.empty()) throw NotAnIdeal("an ideal contains at least 0");
    std::vector<char> in(r.order(), 0);
    for (ElemIndex m : members) {
        if (m >= r.order()) throw NotAnIdeal("member index out of range");
        in[m] = 1;
    }
    if (!in[0]) throw NotAnIdeal("ideal does not contain 0");
    for (ElemIndex a : members) {
        if (!in[r.neg(a)]) throw NotAnIdeal("ideal not closed under negation at " + r.repr(a));
        for (ElemIndex b : members)
            if (!in[r.add(a, b)])
                throw NotAnIdeal("ideal not closed under addition at " + r.repr(a) + " + " +
                                 r.repr(b));
    }
    for (ElemIndex x = 0; x < r.order(); ++x) {
        for (ElemIndex a : members) {
            if (!in[r.mul(x, a)])
                throw NotAnIdeal("ideal not closed under left multiplication at " + r.repr(x) +
                                 " * " + r.repr(a));
            if (!in[r.mul(a, x)])
                throw NotAnIdeal("ideal not closed under right multiplication at " + r.repr(a) +
                                 " * " + r.repr(x));
        }
    }
}

}  // namespace

RingPtr quotient_ring(const RingPtr& r, const std::vector<ElemIndex>& ideal_members,
                      const Caps& caps) {
    std::vector<ElemIndex> members = ideal_members;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    validate_ideal(*r, members);
    if (r->order() % members.size() != 0)
        throw NotAnIdeal("ideal size does not divide the ring order");

    const ElemIndex unassigned = r->order();
    std::vector<ElemIndex> coset_of(r->order(), unassigned);
    std::vector<ElemIndex> reps;
    for (ElemIndex i = 0; i < r->order(); ++i) {
        if (coset_of[i] != unassigned) continue;
        ElemIndex c = ElemIndex(reps.size());
        reps.push_back(i);
        for (ElemIndex m : members) coset_of[r->add(i, m)] = c;
    }
    std::string name = "Quot(" + r->name() + ", " + index_list(members) + ")";
    auto out = std::make_shared<QuotientRing>(r, std::move(reps), std::move(coset_of),
                                              std::move(name));
    out->init_tables(caps);
    return out;
}

RingPtr subring_generated(const RingPtr& r, const std::vector<ElemIndex>& gens,
                          const Caps& caps) {
    std::vector<ElemIndex> members = subring_closure_of(*r, gens);
    std::string name = "Sub(" + r->name() + ", " + index_list(gens) + ")";
    auto out = std::make_shared<SubRing>(r, std::move(members), std::move(name));
    out->init_tables(caps);
    return out;
}

RingPtr make_table_ring(std::string name, std::vector<ElemIndex> add_table,
                        std::vector<ElemIndex> mul_table, std::vector<ElemIndex> neg_table,
                        ElemIndex one, const Caps& caps) {
    const std::size_t n = neg_table.size();
    if (n == 0 || add_table.size() != n * n || mul_table.size() != n * n)
        throw InvalidParameter("table ring requires n*n add/mul tables and an n-entry neg table");
    auto out = std::make_shared<TableRing>(std::move(name), std::uint32_t(n),
                                           std::move(add_table), std::move(mul_table),
                                           std::move(neg_table), one);
    out->init_tables(caps);
    return out;
}

namespace {

void check_triple(const Ring& r, ElemIndex a, ElemIndex b, ElemIndex c) {
    auto fail = [&](const char* law) {
        std::ostringstream os;
        os << law << " violated in " << r.name() << " at (" << r.repr(a) << ", " << r.repr(b)
           << ", " << r.repr(c) << ")";
        throw AxiomViolation(os.str());
    };
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("additive associativity");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("multiplicative associativity");
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("left distributivity");
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) fail("right distributivity");
    if (r.add(a, b) != r.add(b, a)) fail("additive commutativity");
    if (r.add(a, 0) != a) fail("additive identity");
    if (r.add(a, r.neg(a)) != 0) fail("additive inverse");
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) fail("multiplicative identity");
}

}  // namespace

AxiomCheck check_axioms(const Ring& r, AxiomMode mode, std::uint32_t sample_size,
                        std::uint64_t seed, const Caps& caps) {
    AxiomCheck out{mode, 0};
    if (mode == AxiomMode::exhaustive) {
        if (r.order() > caps.axiom_cap)
            throw InvalidParameter("exhaustive axiom check limited to order <= " +
                                   std::to_string(caps.axiom_cap));
        for (ElemIndex a = 0; a < r.order(); ++a)
            for (ElemIndex b = 0; b < r.order(); ++b)
                for (ElemIndex c = 0; c < r.order(); ++c) {
                    check_triple(r, a, b, c);
                    ++out.triples_checked;
                }
        return out;
    }
    std::mt19937_64 gen(seed);
    for (std::uint32_t i = 0; i < sample_size; ++i) {
        ElemIndex a = ElemIndex(gen() % r.order());
        ElemIndex b = ElemIndex(gen() % r.order());
        ElemIndex c = ElemIndex(gen() % r.order());
        check_triple(r, a, b, c);
        ++out.triples_checked;
    }
    return out;
}

}  // namespace finring

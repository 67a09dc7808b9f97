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

#ifndef FINRING_RING_HPP
#define FINRING_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace finring {

using json = nlohmann::ordered_json;

/// Dense index of an element inside its ring, in 0..order-1. Index 0 is
/// always the zero element.
using ElemIndex = std::uint32_t;

/// Size/enumeration limits shared by all builders.
struct Caps {
    std::uint32_t table_cap = 4096;   // cache add/mul tables iff order <= table_cap
    std::uint32_t enum_cap = 65536;   // hard cap on ring order
    std::uint32_t axiom_cap = 64;     // exhaustive axiom sweeps iff order <= axiom_cap
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class MixedRings : public Error {
  public:
    using Error::Error;
};

class InvalidParameter : public Error {
  public:
    explicit InvalidParameter(const std::string& msg, int line = -1, int col = -1)
        : Error(msg), line(line), col(col) {}
    int line;
    int col;
};

class OrderOverflow : public Error {
  public:
    explicit OrderOverflow(const std::string& msg, int line = -1, int col = -1)
        : Error(msg), line(line), col(col) {}
    int line;
    int col;
};

class NotAnIdeal : public Error {
  public:
    using Error::Error;
};

class AxiomViolation : public Error {
  public:
    using Error::Error;
};

class BudgetExhausted : public Error {
  public:
    BudgetExhausted(const std::string& msg, std::uint64_t examined)
        : Error(msg), examined(examined) {}
    std::uint64_t examined;
};

class ContradictionFound : public Error {
  public:
    using Error::Error;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A concrete finite unital associative ring. Elements are addressed by
/// dense index; structured payloads are recovered on demand. Instances are
/// immutable after construction and safe to share across threads.
class Ring {
  public:
    virtual ~Ring() = default;

    std::uint32_t order() const { return order_; }
    const std::string& name() const { return name_; }
    ElemIndex zero() const { return 0; }
    ElemIndex one() const { return one_; }
    bool tabled() const { return !mul_tab_.empty(); }

    ElemIndex add(ElemIndex a, ElemIndex b) const {
        return add_tab_.empty() ? add_impl(a, b)
                                : ElemIndex(add_tab_[std::size_t(a) * order_ + b]);
    }
    ElemIndex mul(ElemIndex a, ElemIndex b) const {
        return mul_tab_.empty() ? mul_impl(a, b)
                                : ElemIndex(mul_tab_[std::size_t(a) * order_ + b]);
    }
    ElemIndex neg(ElemIndex a) const {
        return neg_tab_.empty() ? neg_impl(a) : ElemIndex(neg_tab_[a]);
    }
    ElemIndex sub(ElemIndex a, ElemIndex b) const { return add(a, neg(b)); }

    /// Human-readable rendering of the element's structured value.
    virtual std::string repr(ElemIndex a) const = 0;
    /// Structured value as JSON (nested per construction).
    virtual json payload(ElemIndex a) const = 0;

    /// Builds the cached op tables when the order is within caps.table_cap
    /// and resolves the identity. Builders call this exactly once right
    /// after construction; the object is immutable afterwards.
    void init_tables(const Caps& caps);

  protected:
    Ring(std::uint32_t order, std::string name)
        : order_(order), name_(std::move(name)) {}

    virtual ElemIndex add_impl(ElemIndex a, ElemIndex b) const = 0;
    virtual ElemIndex mul_impl(ElemIndex a, ElemIndex b) const = 0;
    virtual ElemIndex neg_impl(ElemIndex a) const = 0;
    virtual ElemIndex one_impl() const = 0;

  private:
    std::uint32_t order_;
    std::string name_;
    ElemIndex one_ = 0;
    std::vector<std::uint16_t> add_tab_;
    std::vector<std::uint16_t> mul_tab_;
    std::vector<std::uint16_t> neg_tab_;
};

/// A ring element as a value: owning handle plus dense index. Two elements
/// are equal iff they live in the same ring object and share an index.
struct Element {
    RingPtr ring;
    ElemIndex index = 0;

    std::string repr() const { return ring->repr(index); }
    json payload() const { return ring->payload(index); }

    friend bool operator==(const Element& x, const Element& y) {
        return x.ring.get() == y.ring.get() && x.index == y.index;
    }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
};

inline Element element(RingPtr ring, ElemIndex i) { return Element{std::move(ring), i}; }

Element add(const Element& a, const Element& b);   // throws MixedRings
Element mul(const Element& a, const Element& b);   // throws MixedRings
Element neg(const Element& a);

/// An ordered subset of a ring: sorted unique dense indices.
struct Subset {
    RingPtr ring;
    std::vector<ElemIndex> members;

    std::size_t size() const { return members.size(); }
    bool contains(ElemIndex i) const;
};

// --- structural queries -----------------------------------------------------

bool is_nilpotent(const Ring& r, ElemIndex a);
bool is_idempotent(const Ring& r, ElemIndex a);
bool is_central(const Ring& r, ElemIndex a);

std::vector<ElemIndex> center_of(const Ring& r);
std::vector<ElemIndex> right_annihilator_of(const Ring& r, ElemIndex a);
std::vector<ElemIndex> left_annihilator_of(const Ring& r, ElemIndex a);
std::vector<ElemIndex> idempotents_of(const Ring& r);
std::vector<ElemIndex> nilpotents_of(const Ring& r);
std::vector<ElemIndex> ideal_closure_of(const Ring& r, const std::vector<ElemIndex>& gens);
std::vector<ElemIndex> subring_closure_of(const Ring& r, const std::vector<ElemIndex>& gens);

Subset center(const RingPtr& r);
Subset right_annihilator(const Element& a);
Subset left_annihilator(const Element& a);
Subset idempotents(const RingPtr& r);
Subset nilpotents(const RingPtr& r);
Subset ideal_closure(const RingPtr& r, const std::vector<ElemIndex>& gens);

/// Ring of cosets modulo a validated two-sided ideal. Coset representatives
/// are the least dense index in each coset; the coset of zero gets index 0.
RingPtr quotient_ring(const RingPtr& r, const std::vector<ElemIndex>& ideal_members,
                      const Caps& caps = {});

/// Smallest subring containing the generators and 1, packaged with its own
/// dense enumeration (sorted base indices).
RingPtr subring_generated(const RingPtr& r, const std::vector<ElemIndex>& gens,
                          const Caps& caps = {});

/// Test-support backend: a ring defined by explicit op tables. Used for
/// negative controls (deliberately corrupted tables) and synthetic fixtures.
RingPtr make_table_ring(std::string name, std::vector<ElemIndex> add_table,
                        std::vector<ElemIndex> mul_table, std::vector<ElemIndex> neg_table,
                        ElemIndex one, const Caps& caps = {});

enum class AxiomMode { exhaustive, sampled };

struct AxiomCheck {
    AxiomMode mode;
    std::uint64_t triples_checked = 0;
};

/// Verifies associativity, distributivity and identity laws (and the
/// additive group laws) over all triples, or over seeded random triples in
/// sampled mode. Throws AxiomViolation naming the offending triple.
AxiomCheck check_axioms(const Ring& r, AxiomMode mode, std::uint32_t sample_size = 10000,
                        std::uint64_t seed = 0, const Caps& caps = {});

}  // namespace finring

#endif  // FINRING_RING_HPP

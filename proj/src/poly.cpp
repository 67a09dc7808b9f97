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

#include "finring/poly.hpp"

#include <chrono>
#include <unordered_map>

namespace finring {

BoundedPoly make_poly(RingPtr ring, std::vector<ElemIndex> coeffs) {
    if (coeffs.empty()) throw InvalidParameter("a bounded polynomial has at least one coefficient");
    for (ElemIndex c : coeffs)
        if (c >= ring->order()) throw InvalidParameter("coefficient index out of range");
    return BoundedPoly{std::move(ring), std::move(coeffs)};
}

BoundedPoly conv_mul(const BoundedPoly& f, const BoundedPoly& g) {
    if (f.ring.get() != g.ring.get())
        throw MixedRings("conv_mul over mixed rings " + f.ring->name() + " and " + g.ring->name());
    const Ring& r = *f.ring;
    std::vector<ElemIndex> out(f.coeffs.size() + g.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(f.coeffs[i], g.coeffs[j]));
    return BoundedPoly{f.ring, std::move(out)};
}

namespace {

// Right-annihilator lists, precomputed for small rings and memoized for
// large ones (large sweeps are expected to hit the budget anyway).
class RightAnnProvider {
  public:
    explicit RightAnnProvider(const Ring& r) : r_(r) {
        if (r.order() <= 4096) {
            all_.resize(r.order());
            for (ElemIndex a = 0; a < r.order(); ++a) all_[a] = right_annihilator_of(r, a);
        }
    }

    const std::vector<ElemIndex>& get(ElemIndex a) {
        if (!all_.empty()) return all_[a];
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(a, right_annihilator_of(r_, a)).first->second;
    }

  private:
    const Ring& r_;
    std::vector<std::vector<ElemIndex>> all_;
    std::unordered_map<ElemIndex, std::vector<ElemIndex>> memo_;
};

class BudgetMeter {
  public:
    explicit BudgetMeter(const AnnPairBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void tick(std::uint64_t& examined) {
        ++examined;
        if (budget_.max_pairs_examined && examined > budget_.max_pairs_examined)
            throw BudgetExhausted("tuple budget exhausted after " + std::to_string(examined - 1) +
                                      " candidates",
                                  examined - 1);
        if (budget_.elapsed_cap_ms && (examined & 0xFFFF) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (std::uint64_t(ms) > budget_.elapsed_cap_ms)
                throw BudgetExhausted("time budget exhausted after " + std::to_string(examined) +
                                          " candidates",
                                      examined);
        }
    }

  private:
    AnnPairBudget budget_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

PairStats for_each_annihilating_linear_pair(const Ring& r, const AnnPairBudget& budget,
                                            const std::function<bool(const LinearPair&)>& visit) {
    PairStats stats;
    RightAnnProvider rann(r);
    BudgetMeter meter(budget);
    for (ElemIndex a0 = 0; a0 < r.order(); ++a0) {
        const auto& ann0 = rann.get(a0);
        for (ElemIndex a1 = 0; a1 < r.order(); ++a1) {
            const auto& ann1 = rann.get(a1);
            for (ElemIndex b0 : ann0) {
                // cross coefficient: a0 b1 + a1 b0 must vanish
                const ElemIndex target = r.neg(r.mul(a1, b0));
                for (ElemIndex b1 : ann1) {
                    meter.tick(stats.examined);
                    if (r.mul(a0, b1) != target) continue;
                    ++stats.yielded;
                    if (!visit(LinearPair{a0, a1, b0, b1})) {
                        stats.completed = false;
                        return stats;
                    }
                }
            }
        }
    }
    return stats;
}

PairStats for_each_annihilating_pair_degree(
    const Ring& r, std::uint32_t d, const AnnPairBudget& budget,
    const std::function<bool(std::span<const ElemIndex>, std::span<const ElemIndex>)>& visit) {
    if (d < 1) throw InvalidParameter("degree bound must be >= 1");
    PairStats stats;
    RightAnnProvider rann(r);
    BudgetMeter meter(budget);
    const std::uint32_t len = d + 1;
    std::vector<ElemIndex> a(len, 0), b(len, 0);

    // Chooses b[j] for j = pos..d given a and b[0..pos-1]; every convolution
    // coefficient is checked as soon as its last term is fixed.
    std::function<bool(std::uint32_t)> descend = [&](std::uint32_t pos) -> bool {
        const bool last = pos == d;
        const std::vector<ElemIndex>* candidates = nullptr;
        if (pos == 0) candidates = &rann.get(a[0]);
        else if (last) candidates = &rann.get(a[d]);
        auto try_one = [&](ElemIndex v) -> bool {
            meter.tick(stats.examined);
            b[pos] = v;
            // conv coefficient `pos` is now determined
            ElemIndex c = 0;
            for (std::uint32_t i = 0; i <= pos; ++i) c = r.add(c, r.mul(a[i], b[pos - i]));
            if (c != 0) return true;
            if (!last) return descend(pos + 1);
            // remaining coefficients d+1 .. 2d (2d vanishes by the
            // annihilator constraint on b[d])
            for (std::uint32_t m = d + 1; m < 2 * d; ++m) {
                ElemIndex cm = 0;
                for (std::uint32_t i = m - d; i <= d; ++i) cm = r.add(cm, r.mul(a[i], b[m - i]));
                if (cm != 0) return true;
            }
            ++stats.yielded;
            return visit(std::span<const ElemIndex>(a), std::span<const ElemIndex>(b));
        };
        if (candidates) {
            for (ElemIndex v : *candidates)
                if (!try_one(v)) return false;
        } else {
            for (ElemIndex v = 0; v < r.order(); ++v)
                if (!try_one(v)) return false;
        }
        return true;
    };

    // odometer over a-vectors, first coefficient most significant
    while (true) {
        if (!descend(0)) {
            stats.completed = false;
            return stats;
        }
        std::size_t i = len;
        while (i-- > 0) {
            if (++a[i] < r.order()) break;
            a[i] = 0;
            if (i == 0) return stats;
        }
    }
}

std::vector<LinearPair> annihilating_linear_pairs(const Ring& r, const AnnPairBudget& budget) {
    std::vector<LinearPair> out;
    for_each_annihilating_linear_pair(r, budget, [&](const LinearPair& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<std::pair<std::vector<ElemIndex>, std::vector<ElemIndex>>> annihilating_pairs_degree(
    const Ring& r, std::uint32_t d, const AnnPairBudget& budget) {
    std::vector<std::pair<std::vector<ElemIndex>, std::vector<ElemIndex>>> out;
    for_each_annihilating_pair_degree(
        r, d, budget, [&](std::span<const ElemIndex> a, std::span<const ElemIndex> b) {
            out.emplace_back(std::vector<ElemIndex>(a.begin(), a.end()),
                             std::vector<ElemIndex>(b.begin(), b.end()));
            return true;
        });
    return out;
}

}  // namespace finring

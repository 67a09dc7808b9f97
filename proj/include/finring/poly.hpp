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

#ifndef FINRING_POLY_HPP
#define FINRING_POLY_HPP

#include <functional>
#include <span>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// Polynomial of bounded degree: coefficient indices, constant term first.
struct BoundedPoly {
    RingPtr ring;
    std::vector<ElemIndex> coeffs;  // length >= 1
};

BoundedPoly make_poly(RingPtr ring, std::vector<ElemIndex> coeffs);

/// Full convolution product, degree deg(f) + deg(g); no truncation.
BoundedPoly conv_mul(const BoundedPoly& f, const BoundedPoly& g);  // throws MixedRings

/// Work limits for annihilating-pair sweeps. Tuple counts include pruned
/// partial candidates; 0 elapsed cap means no time limit.
struct AnnPairBudget {
    std::uint64_t max_pairs_examined = 1'000'000'000;
    std::uint64_t elapsed_cap_ms = 0;
};

struct LinearPair {
    ElemIndex a0, a1, b0, b1;
};

struct PairStats {
    std::uint64_t examined = 0;
    std::uint64_t yielded = 0;
    bool completed = true;  // false when the visitor stopped the sweep
};

/// Yields exactly the quadruples with (a0 + a1 x)(b0 + b1 x) = 0, in
/// lexicographic order of (a0, a1, b0, b1). Pruning: b0 ranges over the
/// right annihilator of a0, b1 over that of a1, then the cross term is
/// filtered. The visitor returns false to stop. Throws BudgetExhausted.
PairStats for_each_annihilating_linear_pair(const Ring& r, const AnnPairBudget& budget,
                                            const std::function<bool(const LinearPair&)>& visit);

/// Degree-d generalization: all coefficient-vector pairs (a_0..a_d,
/// b_0..b_d) with zero full convolution, lexicographic on the concatenated
/// index vector. Same pruning idea: b_0 and b_d are annihilator-constrained
/// and every convolution coefficient is checked as soon as it is determined.
PairStats for_each_annihilating_pair_degree(
    const Ring& r, std::uint32_t d, const AnnPairBudget& budget,
    const std::function<bool(std::span<const ElemIndex>, std::span<const ElemIndex>)>& visit);

/// Collecting variants (test and CLI convenience).
std::vector<LinearPair> annihilating_linear_pairs(const Ring& r, const AnnPairBudget& budget = {});
std::vector<std::pair<std::vector<ElemIndex>, std::vector<ElemIndex>>> annihilating_pairs_degree(
    const Ring& r, std::uint32_t d, const AnnPairBudget& budget = {});

}  // namespace finring

#endif  // FINRING_POLY_HPP

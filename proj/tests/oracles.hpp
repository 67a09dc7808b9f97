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

// Test-side reference implementations, kept independent of the library code
// paths they are used to check.

#ifndef FINRING_TESTS_ORACLES_HPP
#define FINRING_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "finring/poly.hpp"
#include "finring/ring.hpp"

namespace oracles {

using finring::ElemIndex;
using finring::Ring;

// plain modular arithmetic
inline std::uint64_t zn_add(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return (a + b) % n;
}
inline std::uint64_t zn_mul(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return (a * b) % n;
}
inline std::uint64_t zn_neg(std::uint64_t a, std::uint64_t n) { return (n - a % n) % n; }

// k x k matrices over Z_n, flat row-major vectors
inline std::vector<std::uint64_t> mat_mul(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b, std::size_t k,
                                          std::uint64_t n) {
    std::vector<std::uint64_t> c(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t)
                c[i * k + j] = (c[i * k + j] + a[i * k + t] * b[t * k + j]) % n;
    return c;
}

// trivial extension over Z_n: (r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2)
inline std::pair<std::uint64_t, std::uint64_t> triv_mul(std::uint64_t r1, std::uint64_t m1,
                                                        std::uint64_t r2, std::uint64_t m2,
                                                        std::uint64_t n) {
    return {(r1 * r2) % n, (r1 * m2 + m1 * r2) % n};
}

// full convolution with ring ops; stops early at the first nonzero slot
inline bool conv_is_zero(const Ring& r, const std::vector<ElemIndex>& f,
                         const std::vector<ElemIndex>& g) {
    for (std::size_t t = 0; t < f.size() + g.size() - 1; ++t) {
        ElemIndex c = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (t < i || t - i >= g.size()) continue;
            c = r.add(c, r.mul(f[i], g[t - i]));
        }
        if (c != 0) return false;
    }
    return true;
}

// every annihilating pair of degree <= d, by unpruned nested enumeration
inline std::vector<std::pair<std::vector<ElemIndex>, std::vector<ElemIndex>>>
naive_annihilating_pairs(const Ring& r, std::uint32_t d) {
    std::vector<std::pair<std::vector<ElemIndex>, std::vector<ElemIndex>>> out;
    const std::uint32_t len = d + 1;
    std::vector<ElemIndex> a(len, 0), b(len, 0);
    auto bump = [&](std::vector<ElemIndex>& v) {
        std::size_t i = len;
        while (i-- > 0) {
            if (++v[i] < r.order()) return true;
            v[i] = 0;
            if (i == 0) return false;
        }
        return false;
    };
    do {
        std::fill(b.begin(), b.end(), 0);
        do {
            if (conv_is_zero(r, a, b)) out.emplace_back(a, b);
        } while (bump(b));
    } while (bump(a));
    return out;
}

inline std::vector<finring::LinearPair> naive_linear_pairs(const Ring& r) {
    std::vector<finring::LinearPair> out;
    for (auto& [a, b] : naive_annihilating_pairs(r, 1))
        out.push_back(finring::LinearPair{a[0], a[1], b[0], b[1]});
    return out;
}

}  // namespace oracles

#endif  // FINRING_TESTS_ORACLES_HPP

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

#ifndef FINRING_CONSTRUCTIONS_HPP
#define FINRING_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// Integers mod n, elements are residues 0..n-1. n = 1 gives the zero ring.
RingPtr make_zn(std::uint32_t n, const Caps& caps = {});

/// Direct product with componentwise operations; enumeration is
/// lexicographic with the first factor most significant.
RingPtr make_product(std::vector<RingPtr> factors, const Caps& caps = {});

/// Full n x n matrices over `base`, row-major lexicographic enumeration.
RingPtr make_matrix(RingPtr base, std::uint32_t n, const Caps& caps = {});

/// Upper triangular n x n matrices over `base`.
RingPtr make_upper_triangular(RingPtr base, std::uint32_t n, const Caps& caps = {});

/// The banded subring of upper triangular n x n matrices whose first k
/// diagonals are constant (Toeplitz values x_1..x_k, x_1 on the main
/// diagonal) and whose remaining entries a_{j,s} (row j = 1..n-k, columns
/// s = k+j..n) are free. Enumeration is lexicographic over the parameter
/// vector (x_1..x_k, then free entries row-major).
RingPtr make_tnk(RingPtr base, std::uint32_t n, std::uint32_t k, const Caps& caps = {});

/// Pairs (r, m) with (r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2); the module
/// part is the base ring acting on itself.
RingPtr make_trivial_extension(RingPtr base, const Caps& caps = {});

/// Truncated polynomials of degree < n over `base`; multiplication is
/// convolution with terms of degree >= n discarded. Coefficient vectors
/// are enumerated lexicographically, constant term most significant.
RingPtr make_poly_mod(RingPtr base, std::uint32_t n, const Caps& caps = {});

/// Opposite ring: same carrier, multiplication reversed. Test support for
/// mirror-symmetry properties.
RingPtr make_opposite(RingPtr base);

// --- structured element builders -------------------------------------------
// Encode a structured value into its dense index. Each validates that the
// value belongs to the ring (entry ranges, band pattern, triangularity).

ElemIndex zn_element(const Ring& zn, std::uint64_t residue);
ElemIndex product_element(const Ring& prod, const std::vector<ElemIndex>& components);
ElemIndex matrix_element(const Ring& mat, const std::vector<std::vector<ElemIndex>>& entries);
ElemIndex pair_element(const Ring& triv, ElemIndex r, ElemIndex m);
ElemIndex poly_element(const Ring& polymod, const std::vector<ElemIndex>& coeffs);
/// Parameter-vector form for the banded matrix ring (x_1..x_k, then free
/// entries row-major).
ElemIndex tnk_element(const Ring& tnk, const std::vector<ElemIndex>& params);

/// Full n x n entry grid of a matrix-kind element (base-ring indices).
std::vector<std::vector<ElemIndex>> matrix_entries(const Ring& mat, ElemIndex a);

/// Shape of a banded matrix ring, when `r` is one.
struct BandedInfo {
    RingPtr base;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t param_count = 0;
};
std::optional<BandedInfo> banded_info(const Ring& r);

}  // namespace finring

#endif  // FINRING_CONSTRUCTIONS_HPP

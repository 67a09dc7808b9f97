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

#include "finring/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace finring {

namespace {

std::uint32_t checked_power_order(std::uint64_t base, std::uint64_t exponent,
                                  const Caps& caps, const std::string& what) {
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        order *= base;
        if (order > caps.enum_cap)
            throw OrderOverflow(what + " would have more than " +
                                std::to_string(caps.enum_cap) + " elements");
        if (order == 0) throw InvalidParameter(what + ": zero-order factor");
    }
    return std::uint32_t(order);
}

class ZnRing final : public Ring {
  public:
    explicit ZnRing(std::uint32_t n) : Ring(n, "Z(" + std::to_string(n) + ")"), n_(n) {}

    std::string repr(ElemIndex a) const override { return std::to_string(a); }
    json payload(ElemIndex a) const override { return json(a); }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        return ElemIndex((std::uint64_t(a) + b) % n_);
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        return ElemIndex((std::uint64_t(a) * b) % n_);
    }
    ElemIndex neg_impl(ElemIndex a) const override { return ElemIndex((n_ - std::uint64_t(a)) % n_); }
    ElemIndex one_impl() const override { return n_ == 1 ? 0 : 1; }

  private:
    std::uint32_t n_;
};

class ProductRing final : public Ring {
  public:
    ProductRing(std::vector<RingPtr> factors, std::uint32_t order, std::string name)
        : Ring(order, std::move(name)), factors_(std::move(factors)) {
        strides_.resize(factors_.size());
        std::uint64_t s = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            strides_[i] = std::uint32_t(s);
            s *= factors_[i]->order();
        }
    }

    std::vector<ElemIndex> decode(ElemIndex a) const {
        std::vector<ElemIndex> c(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            c[i] = (a / strides_[i]) % factors_[i]->order();
        return c;
    }
    ElemIndex encode(const std::vector<ElemIndex>& c) const {
        ElemIndex a = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) a += c[i] * strides_[i];
        return a;
    }
    const std::vector<RingPtr>& factors() const { return factors_; }

    std::string repr(ElemIndex a) const override {
        auto c = decode(a);
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ", ";
            out += factors_[i]->repr(c[i]);
        }
        return out + ")";
    }
    json payload(ElemIndex a) const override {
        auto c = decode(a);
        json out = json::array();
        for (std::size_t i = 0; i < c.size(); ++i) out.push_back(factors_[i]->payload(c[i]));
        return out;
    }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        auto ca = decode(a), cb = decode(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->add(ca[i], cb[i]);
        return encode(ca);
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        auto ca = decode(a), cb = decode(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->mul(ca[i], cb[i]);
        return encode(ca);
    }
    ElemIndex neg_impl(ElemIndex a) const override {
        auto ca = decode(a);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = factors_[i]->neg(ca[i]);
        return encode(ca);
    }
    ElemIndex one_impl() const override {
        std::vector<ElemIndex> c(factors_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = factors_[i]->one();
        return encode(c);
    }

  private:
    std::vector<RingPtr> factors_;
    std::vector<std::uint32_t> strides_;
};

// Shared backend for full, upper triangular and banded matrix rings. An
// element is a parameter vector (band values x_1..x_k first, then the free
// entry slots row-major); indices are the mixed-radix value of that vector,
// first parameter most significant.
class MatrixKindRing final : public Ring {
  public:
    enum class Shape { full, upper, banded };

    MatrixKindRing(RingPtr base, std::uint32_t n, std::uint32_t k, Shape shape,
                   std::uint32_t order, std::string name)
        : Ring(order, std::move(name)),
          base_(std::move(base)),
          n_(n),
          band_(k),
          shape_(shape),
          slot_at_(std::size_t(n) * n, -1) {
        for (std::uint32_t r = 0; r < n_; ++r) {
            for (std::uint32_t c = 0; c < n_; ++c) {
                if (shape_ != Shape::full && c < r) continue;  // below diagonal
                if (band_ > 0 && c >= r && c - r < band_) continue;  // Toeplitz band
                slot_at_[r * n_ + c] = int(band_ + slots_.size());
                slots_.emplace_back(r, c);
            }
        }
        param_count_ = band_ + std::uint32_t(slots_.size());
    }

    std::uint32_t dim() const { return n_; }
    std::uint32_t band() const { return band_; }
    std::uint32_t param_count() const { return param_count_; }

    std::vector<ElemIndex> decode_params(ElemIndex a) const {
        std::vector<ElemIndex> p(param_count_);
        const std::uint32_t b = base_->order();
        std::uint64_t v = a;
        for (std::size_t i = param_count_; i-- > 0;) {
            p[i] = ElemIndex(v % b);
            v /= b;
        }
        return p;
    }
    ElemIndex encode_params(const std::vector<ElemIndex>& p) const {
        const std::uint32_t b = base_->order();
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < param_count_; ++i) v = v * b + p[i];
        return ElemIndex(v);
    }

    std::vector<ElemIndex> to_grid(const std::vector<ElemIndex>& p) const {
        std::vector<ElemIndex> g(std::size_t(n_) * n_, 0);
        for (std::uint32_t t = 0; t < band_; ++t)
            for (std::uint32_t r = 0; r + t < n_; ++r) g[r * n_ + (r + t)] = p[t];
        for (std::size_t s = 0; s < slots_.size(); ++s)
            g[slots_[s].first * n_ + slots_[s].second] = p[band_ + s];
        return g;
    }

    // Reads a parameter vector back off a grid, insisting the grid matches
    // the ring's entry pattern (zeros below the diagonal, consistent band).
    std::vector<ElemIndex> from_grid(const std::vector<ElemIndex>& g) const {
        std::vector<ElemIndex> p(param_count_);
        for (std::uint32_t t = 0; t < band_; ++t) p[t] = g[t];  // row 0, columns 0..k-1
        for (std::size_t s = 0; s < slots_.size(); ++s)
            p[band_ + s] = g[slots_[s].first * n_ + slots_[s].second];
        for (std::uint32_t r = 0; r < n_; ++r) {
            for (std::uint32_t c = 0; c < n_; ++c) {
                ElemIndex got = g[r * n_ + c];
                if (shape_ != Shape::full && c < r) {
                    if (got != 0)
                        throw InvalidParameter(name() + ": nonzero entry below the diagonal");
                } else if (band_ > 0 && c >= r && c - r < band_) {
                    if (got != p[c - r])
                        throw InvalidParameter(name() + ": band entries are not constant");
                }
            }
        }
        return p;
    }

    const RingPtr& base() const { return base_; }

    std::string repr(ElemIndex a) const override {
        auto g = to_grid(decode_params(a));
        std::string out = "[";
        for (std::uint32_t r = 0; r < n_; ++r) {
            if (r) out += ", ";
            out += "[";
            for (std::uint32_t c = 0; c < n_; ++c) {
                if (c) out += ", ";
                out += base_->repr(g[r * n_ + c]);
            }
            out += "]";
        }
        return out + "]";
    }

    json payload(ElemIndex a) const override {
        auto p = decode_params(a);
        auto g = to_grid(p);
        json matrix = json::array();
        for (std::uint32_t r = 0; r < n_; ++r) {
            json row = json::array();
            for (std::uint32_t c = 0; c < n_; ++c) row.push_back(base_->payload(g[r * n_ + c]));
            matrix.push_back(row);
        }
        if (shape_ != Shape::banded) return matrix;
        json params = json::array();
        for (ElemIndex v : p) params.push_back(base_->payload(v));
        return json{{"params", params}, {"matrix", matrix}};
    }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        auto pa = decode_params(a);
        auto pb = decode_params(b);
        for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = base_->add(pa[i], pb[i]);
        return encode_params(pa);
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        auto ga = to_grid(decode_params(a));
        auto gb = to_grid(decode_params(b));
        std::vector<ElemIndex> gc(std::size_t(n_) * n_, 0);
        for (std::uint32_t r = 0; r < n_; ++r) {
            for (std::uint32_t c = 0; c < n_; ++c) {
                ElemIndex acc = 0;
                for (std::uint32_t t = 0; t < n_; ++t)
                    acc = base_->add(acc, base_->mul(ga[r * n_ + t], gb[t * n_ + c]));
                gc[r * n_ + c] = acc;
            }
        }
        return encode_params(from_grid(gc));
    }
    ElemIndex neg_impl(ElemIndex a) const override {
        auto p = decode_params(a);
        for (auto& v : p) v = base_->neg(v);
        return encode_params(p);
    }
    ElemIndex one_impl() const override {
        std::vector<ElemIndex> g(std::size_t(n_) * n_, 0);
        for (std::uint32_t r = 0; r < n_; ++r) g[r * n_ + r] = base_->one();
        return encode_params(from_grid(g));
    }

  private:
    RingPtr base_;
    std::uint32_t n_;
    std::uint32_t band_;  // number of Toeplitz diagonals (0 for full/upper)
    Shape shape_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots_;  // free entries, row-major
    std::vector<int> slot_at_;
    std::uint32_t param_count_ = 0;
};

class TrivialExtensionRing final : public Ring {
  public:
    TrivialExtensionRing(RingPtr base, std::uint32_t order, std::string name)
        : Ring(order, std::move(name)), base_(std::move(base)), b_(base_->order()) {}

    const RingPtr& base() const { return base_; }
    ElemIndex encode(ElemIndex r, ElemIndex m) const { return r * b_ + m; }
    std::pair<ElemIndex, ElemIndex> decode(ElemIndex a) const { return {a / b_, a % b_}; }

    std::string repr(ElemIndex a) const override {
        auto [r, m] = decode(a);
        return "(" + base_->repr(r) + ", " + base_->repr(m) + ")";
    }
    json payload(ElemIndex a) const override {
        auto [r, m] = decode(a);
        return json::array({base_->payload(r), base_->payload(m)});
    }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        auto [r1, m1] = decode(a);
        auto [r2, m2] = decode(b);
        return encode(base_->add(r1, r2), base_->add(m1, m2));
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        auto [r1, m1] = decode(a);
        auto [r2, m2] = decode(b);
        return encode(base_->mul(r1, r2),
                      base_->add(base_->mul(r1, m2), base_->mul(m1, r2)));
    }
    ElemIndex neg_impl(ElemIndex a) const override {
        auto [r, m] = decode(a);
        return encode(base_->neg(r), base_->neg(m));
    }
    ElemIndex one_impl() const override { return encode(base_->one(), 0); }

  private:
    RingPtr base_;
    std::uint32_t b_;
};

class PolyModRing final : public Ring {
  public:
    PolyModRing(RingPtr base, std::uint32_t n, std::uint32_t order, std::string name)
        : Ring(order, std::move(name)), base_(std::move(base)), n_(n) {}

    const RingPtr& base() const { return base_; }
    std::uint32_t degree_bound() const { return n_; }

    std::vector<ElemIndex> decode(ElemIndex a) const {
        std::vector<ElemIndex> c(n_);
        const std::uint32_t b = base_->order();
        std::uint64_t v = a;
        for (std::size_t i = n_; i-- > 0;) {
            c[i] = ElemIndex(v % b);
            v /= b;
        }
        return c;
    }
    ElemIndex encode(const std::vector<ElemIndex>& c) const {
        const std::uint32_t b = base_->order();
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < n_; ++i) v = v * b + c[i];
        return ElemIndex(v);
    }

    std::string repr(ElemIndex a) const override {
        auto c = decode(a);
        std::string out = "[";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ", ";
            out += base_->repr(c[i]);
        }
        return out + "]";
    }
    json payload(ElemIndex a) const override {
        auto c = decode(a);
        json out = json::array();
        for (ElemIndex v : c) out.push_back(base_->payload(v));
        return out;
    }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override {
        auto ca = decode(a), cb = decode(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = base_->add(ca[i], cb[i]);
        return encode(ca);
    }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override {
        auto ca = decode(a), cb = decode(b);
        std::vector<ElemIndex> out(n_, 0);
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; i + j < n_; ++j)
                out[i + j] = base_->add(out[i + j], base_->mul(ca[i], cb[j]));
        return encode(out);
    }
    ElemIndex neg_impl(ElemIndex a) const override {
        auto c = decode(a);
        for (auto& v : c) v = base_->neg(v);
        return encode(c);
    }
    ElemIndex one_impl() const override {
        std::vector<ElemIndex> c(n_, 0);
        c[0] = base_->one();
        return encode(c);
    }

  private:
    RingPtr base_;
    std::uint32_t n_;
};

class OppositeRing final : public Ring {
  public:
    explicit OppositeRing(RingPtr base)
        : Ring(base->order(), "Op(" + base->name() + ")"), base_(std::move(base)) {}

    std::string repr(ElemIndex a) const override { return base_->repr(a); }
    json payload(ElemIndex a) const override { return base_->payload(a); }

  protected:
    ElemIndex add_impl(ElemIndex a, ElemIndex b) const override { return base_->add(a, b); }
    ElemIndex mul_impl(ElemIndex a, ElemIndex b) const override { return base_->mul(b, a); }
    ElemIndex neg_impl(ElemIndex a) const override { return base_->neg(a); }
    ElemIndex one_impl() const override { return base_->one(); }

  private:
    RingPtr base_;
};

}  // namespace

RingPtr make_zn(std::uint32_t n, const Caps& caps) {
    if (n == 0) throw InvalidParameter("Z(n) requires n >= 1");
    if (n > caps.enum_cap)
        throw OrderOverflow("Z(" + std::to_string(n) + ") exceeds the enumeration cap");
    auto r = std::make_shared<ZnRing>(n);
    r->init_tables(caps);
    return r;
}

RingPtr make_product(std::vector<RingPtr> factors, const Caps& caps) {
    if (factors.empty()) throw InvalidParameter("Prod requires at least one factor");
    std::uint64_t order = 1;
    std::string name = "Prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        order *= factors[i]->order();
        if (order > caps.enum_cap)
            throw OrderOverflow("Prod would exceed the enumeration cap");
        if (i) name += ", ";
        name += factors[i]->name();
    }
    name += ")";
    auto r = std::make_shared<ProductRing>(std::move(factors), std::uint32_t(order),
                                           std::move(name));
    r->init_tables(caps);
    return r;
}

namespace {

RingPtr make_matrix_kind(RingPtr base, std::uint32_t n, std::uint32_t k,
                         MatrixKindRing::Shape shape, std::string name, const Caps& caps) {
    std::uint64_t params = 0;
    switch (shape) {
        case MatrixKindRing::Shape::full: params = std::uint64_t(n) * n; break;
        case MatrixKindRing::Shape::upper: params = std::uint64_t(n) * (n + 1) / 2; break;
        case MatrixKindRing::Shape::banded:
            params = k + std::uint64_t(n - k) * (n - k + 1) / 2;
            break;
    }
    if (params > 1'000'000) throw InvalidParameter(name + ": dimension too large");
    std::uint32_t order = checked_power_order(base->order(), params, caps, name);
    auto r = std::make_shared<MatrixKindRing>(std::move(base), n, k, shape, order,
                                              std::move(name));
    r->init_tables(caps);
    return r;
}

}  // namespace

RingPtr make_matrix(RingPtr base, std::uint32_t n, const Caps& caps) {
    if (n == 0) throw InvalidParameter("Mat requires n >= 1");
    std::string name = "Mat(" + base->name() + ", " + std::to_string(n) + ")";
    return make_matrix_kind(std::move(base), n, 0, MatrixKindRing::Shape::full,
                            std::move(name), caps);
}

RingPtr make_upper_triangular(RingPtr base, std::uint32_t n, const Caps& caps) {
    if (n == 0) throw InvalidParameter("UT requires n >= 1");
    std::string name = "UT(" + base->name() + ", " + std::to_string(n) + ")";
    return make_matrix_kind(std::move(base), n, 0, MatrixKindRing::Shape::upper,
                            std::move(name), caps);
}

RingPtr make_tnk(RingPtr base, std::uint32_t n, std::uint32_t k, const Caps& caps) {
    if (n < 2) throw InvalidParameter("Tnk requires n >= 2");
    if (k < 1 || k > n - 1) throw InvalidParameter("Tnk requires 1 <= k <= n-1");
    std::string name = "Tnk(" + base->name() + ", " + std::to_string(n) + ", " +
                       std::to_string(k) + ")";
    return make_matrix_kind(std::move(base), n, k, MatrixKindRing::Shape::banded,
                            std::move(name), caps);
}

RingPtr make_trivial_extension(RingPtr base, const Caps& caps) {
    std::string name = "Triv(" + base->name() + ")";
    std::uint32_t order = checked_power_order(base->order(), 2, caps, name);
    auto r = std::make_shared<TrivialExtensionRing>(std::move(base), order, std::move(name));
    r->init_tables(caps);
    return r;
}

RingPtr make_poly_mod(RingPtr base, std::uint32_t n, const Caps& caps) {
    if (n == 0) throw InvalidParameter("PolyMod requires n >= 1");
    std::string name = "PolyMod(" + base->name() + ", " + std::to_string(n) + ")";
    std::uint32_t order = checked_power_order(base->order(), n, caps, name);
    auto r = std::make_shared<PolyModRing>(std::move(base), n, order, std::move(name));
    r->init_tables(caps);
    return r;
}

RingPtr make_opposite(RingPtr base) {
    auto r = std::make_shared<OppositeRing>(std::move(base));
    r->init_tables(Caps{0, 65536, 64});  // delegate to the base ring's tables
    return r;
}

namespace {

const MatrixKindRing& as_matrix_kind(const Ring& r) {
    const auto* m = dynamic_cast<const MatrixKindRing*>(&r);
    if (!m) throw InvalidParameter(r.name() + " is not a matrix-kind ring");
    return *m;
}

}  // namespace

ElemIndex zn_element(const Ring& zn, std::uint64_t residue) {
    const auto* z = dynamic_cast<const ZnRing*>(&zn);
    if (!z) throw InvalidParameter(zn.name() + " is not a Z(n) ring");
    return ElemIndex(residue % zn.order());
}

ElemIndex product_element(const Ring& prod, const std::vector<ElemIndex>& components) {
    const auto* p = dynamic_cast<const ProductRing*>(&prod);
    if (!p) throw InvalidParameter(prod.name() + " is not a product ring");
    if (components.size() != p->factors().size())
        throw InvalidParameter("component count mismatch for " + prod.name());
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i] >= p->factors()[i]->order())
            throw InvalidParameter("component out of range for " + prod.name());
    return p->encode(components);
}

ElemIndex matrix_element(const Ring& mat, const std::vector<std::vector<ElemIndex>>& entries) {
    const auto& m = as_matrix_kind(mat);
    if (entries.size() != m.dim()) throw InvalidParameter("entry grid must be n x n");
    std::vector<ElemIndex> g;
    g.reserve(std::size_t(m.dim()) * m.dim());
    for (const auto& row : entries) {
        if (row.size() != m.dim()) throw InvalidParameter("entry grid must be n x n");
        for (ElemIndex v : row) {
            if (v >= m.base()->order()) throw InvalidParameter("entry out of range");
            g.push_back(v);
        }
    }
    return m.encode_params(m.from_grid(g));
}

ElemIndex pair_element(const Ring& triv, ElemIndex r, ElemIndex m) {
    const auto* t = dynamic_cast<const TrivialExtensionRing*>(&triv);
    if (!t) throw InvalidParameter(triv.name() + " is not a trivial extension");
    if (r >= t->base()->order() || m >= t->base()->order())
        throw InvalidParameter("pair component out of range");
    return t->encode(r, m);
}

ElemIndex poly_element(const Ring& polymod, const std::vector<ElemIndex>& coeffs) {
    const auto* p = dynamic_cast<const PolyModRing*>(&polymod);
    if (!p) throw InvalidParameter(polymod.name() + " is not a truncated polynomial ring");
    if (coeffs.size() != p->degree_bound())
        throw InvalidParameter("coefficient vector must have length n");
    for (ElemIndex v : coeffs)
        if (v >= p->base()->order()) throw InvalidParameter("coefficient out of range");
    return p->encode(coeffs);
}

ElemIndex tnk_element(const Ring& tnk, const std::vector<ElemIndex>& params) {
    const auto& m = as_matrix_kind(tnk);
    if (params.size() != m.param_count())
        throw InvalidParameter("parameter vector must have length " +
                               std::to_string(m.param_count()));
    for (ElemIndex v : params)
        if (v >= m.base()->order()) throw InvalidParameter("parameter out of range");
    return m.encode_params(params);
}

std::vector<std::vector<ElemIndex>> matrix_entries(const Ring& mat, ElemIndex a) {
    const auto& m = as_matrix_kind(mat);
    auto g = m.to_grid(m.decode_params(a));
    std::vector<std::vector<ElemIndex>> out(m.dim(), std::vector<ElemIndex>(m.dim()));
    for (std::uint32_t r = 0; r < m.dim(); ++r)
        for (std::uint32_t c = 0; c < m.dim(); ++c) out[r][c] = g[r * m.dim() + c];
    return out;
}

std::optional<BandedInfo> banded_info(const Ring& r) {
    const auto* m = dynamic_cast<const MatrixKindRing*>(&r);
    if (!m || m->band() == 0) return std::nullopt;
    return BandedInfo{m->base(), m->dim(), m->band(), m->param_count()};
}

}  // namespace finring

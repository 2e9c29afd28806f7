/*
   Copyright 2026 The tamecurves Authors

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

#ifndef TAMECURVES_POLY_HPP
#define TAMECURVES_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "field.hpp"

namespace tamecurves {

/// Dense univariate polynomial over a Field, lowest degree first, no trailing zeros.
/// The field must outlive the polynomial.
class Poly {
   public:
    Poly() = default;
    explicit Poly(const Field* F) : F_(F) {}
    Poly(const Field* F, std::vector<Elem> c) : F_(F), c_(std::move(c)) { trim(); }

    static Poly constant(const Field* F, Elem a) { return Poly(F, {a}); }
    static Poly one(const Field* F) { return constant(F, 1); }
    static Poly x(const Field* F) { return monomial(F, 1, 1); }
    static Poly monomial(const Field* F, Elem a, std::size_t n) {
        std::vector<Elem> c(n + 1, 0);
        c[n] = a;
        return Poly(F, std::move(c));
    }

    const Field* field() const noexcept { return F_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) noexcept { return a.c_ != b.c_; }
    /// Canonical order: by degree, then coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b) noexcept {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Field* F = a.F_ ? a.F_ : b.F_;
        std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add(a[i], b[i]);
        return Poly(F, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        const Field* F = a.F_ ? a.F_ : b.F_;
        std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->sub(a[i], b[i]);
        return Poly(F, std::move(r));
    }
    Poly operator-() const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->neg(c_[i]);
        return Poly(F_, std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const Field* F = a.F_ ? a.F_ : b.F_;
        if (a.is_zero() || b.is_zero()) return Poly(F);
        std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j]) r[i + j] = F->add(r[i + j], F->mul(a.c_[i], b.c_[j]));
        }
        return Poly(F, std::move(r));
    }
    Poly scale(Elem s) const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->mul(c_[i], s);
        return Poly(F_, std::move(r));
    }
    Poly shift(std::size_t n) const {
        if (is_zero()) return *this;
        std::vector<Elem> r(n, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(F_, std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// (quotient, remainder); throws ZeroPolynomial on division by zero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw ZeroPolynomial("polynomial division by zero");
        if (degree() < d.degree()) return {Poly(F_ ? F_ : d.F_), *this};
        const Field* F = d.F_;
        std::vector<Elem> r = c_, q(c_.size() - d.c_.size() + 1, 0);
        const Elem li = F->inv(d.lead());
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t i = r.size(); i-- > dd;) {
            Elem c = r[i];
            if (!c) continue;
            c = F->mul(c, li);
            q[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = F->sub(r[i - dd + j], F->mul(c, d.c_[j]));
        }
        r.resize(dd);
        return {Poly(F, std::move(q)), Poly(F, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scale(F_->inv(lead()));
    }
    Poly derivative() const {
        if (c_.size() <= 1) return Poly(F_);
        std::vector<Elem> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<std::int64_t>(i)));
        return Poly(F_, std::move(r));
    }
    Elem eval(Elem a) const {
        Elem acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, a), c_[i]);
        return acc;
    }
    /// this(g(x)).
    Poly compose(const Poly& g) const {
        Poly acc(g.F_ ? g.F_ : F_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(acc.F_, c_[i]);
        return acc;
    }
    Poly pow(std::uint64_t e) const {
        Poly r = one(F_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }
    Poly powmod(std::uint64_t e, const Poly& m) const {
        Poly r = one(F_) % m, b = *this % m;
        while (e) {
            if (e & 1) r = (r * b) % m;
            e >>= 1;
            if (e) b = (b * b) % m;
        }
        return r;
    }
    /// g with g^p = this; requires all exponents divisible by p.
    Poly pth_root() const {
        const std::uint32_t p = F_->characteristic();
        std::vector<Elem> r(c_.empty() ? 0 : (c_.size() - 1) / p + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            if (i % p) throw NotASquare("polynomial is not a p-th power");
            r[i / p] = F_->inv_frobenius(c_[i]);
        }
        return Poly(F_, std::move(r));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* F_ = nullptr;
    std::vector<Elem> c_;
};

/// Monic gcd; gcd(0,0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic lcm.
inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field() ? a.field() : b.field());
    return ((a * b) / gcd(a, b)).monic();
}

/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    const Field* F = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b, s0 = Poly::one(F), s1(F), t0(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem li = F->inv(r0.lead());
    return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

using Factorization = std::vector<std::pair<Poly, int>>;

namespace detail {

inline Factorization squarefree(const Poly& f) {
    const Field* F = f.field();
    Factorization out;
    Poly df = f.derivative();
    Poly c = gcd(f, df);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        const int p = static_cast<int>(F->characteristic());
        for (auto& [g, e] : squarefree(c.monic().pth_root())) out.push_back({g, e * p});
    }
    return out;
}

inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    const Field* F = f.field();
    std::vector<std::pair<Poly, int>> out;
    const Poly X = Poly::x(F);
    Poly h = X;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = h.powmod(F->size(), f);
        Poly g = gcd(h - X, f);
        if (g.degree() > 0) {
            out.push_back({g, d});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
    return out;
}

inline void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field* F = f.field();
    const std::uint64_t q = F->size();
    std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
    for (;;) {
        std::vector<Elem> rc(static_cast<std::size_t>(f.degree()));
        for (auto& c : rc) c = pick(rng);
        Poly a(F, std::move(rc));
        if (a.degree() < 1) continue;
        Poly t;
        if (F->characteristic() == 2) {
            // trace map a + a^2 + ... + a^{2^{md-1}}
            const std::uint32_t k = F->degree() * static_cast<std::uint32_t>(d);
            Poly cur = a % f;
            t = cur;
            for (std::uint32_t i = 1; i < k; ++i) {
                cur = (cur * cur) % f;
                t += cur;
            }
        } else {
            // a^{(q^d-1)/2} = (a^{1+q+...+q^{d-1}})^{(q-1)/2}
            Poly cur = a % f, nrm = cur;
            for (int i = 1; i < d; ++i) {
                cur = cur.powmod(q, f);
                nrm = (nrm * cur) % f;
            }
            t = nrm.powmod((q - 1) / 2, f) - Poly::one(F);
        }
        Poly g = gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Monic irreducible factors with multiplicities, in canonical order.
/// The result does not depend on the seed.
inline Factorization factor(const Poly& f, std::uint64_t seed = 0x5eed) {
    if (f.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    Factorization out;
    std::mt19937_64 rng(seed);
    for (auto& [s, e] : detail::squarefree(f.monic())) {
        for (auto& [g, d] : detail::distinct_degree(s)) {
            std::vector<Poly> parts;
            detail::equal_degree(g, d, rng, parts);
            for (auto& h : parts) out.push_back({h, e});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    // merge equal factors that arose from different squarefree layers
    Factorization merged;
    for (auto& pe : out) {
        if (!merged.empty() && merged.back().first == pe.first)
            merged.back().second += pe.second;
        else
            merged.push_back(pe);
    }
    return merged;
}

/// Distinct roots in the coefficient field, ascending by handle.
inline std::vector<Elem> roots(const Poly& f) {
    std::vector<Elem> r;
    if (f.degree() <= 0) return r;
    const Field* F = f.field();
    // restrict to the product of linear factors first
    Poly sf = f.monic();
    Poly g = gcd(Poly::x(F).powmod(F->size(), sf) - Poly::x(F), sf);
    if (g.degree() <= 0) return r;
    for (auto& [h, e] : factor(g)) r.push_back(F->neg(h[0]));
    std::sort(r.begin(), r.end());
    return r;
}

/// GF(q^d) over k with the embedding sending the generator of k to the
/// smallest root of its modulus; cached inside k.
inline const Extension& extension(const Field& k, std::uint32_t d) {
    std::lock_guard<std::mutex> lock(k.extension_mutex());
    auto& cache = k.extension_cache();
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
    auto ext = std::make_shared<Extension>();
    ext->base = &k;
    ext->degree = d;
    if (d == 1) {
        ext->field = k.self_handle();
        ext->root = k.gen();
    } else {
        const std::uint64_t M = std::uint64_t{k.degree()} * d;
        if (M > 63) throw InvalidField("residue field of degree " + std::to_string(d) + " is too large");
        FieldPtr L = Field::make(k.characteristic(), static_cast<std::uint32_t>(M), std::nullopt,
                                 k.generator_name() + "_" + std::to_string(d));
        std::vector<Elem> mc(k.modulus().begin(), k.modulus().end());
        auto rs = roots(Poly(L.get(), mc));
        if (rs.empty()) throw InvalidField("embedding failed");
        ext->field = L;
        ext->root = rs.front();
        std::vector<Elem> powers;
        Elem acc = 1;
        for (std::uint32_t i = 0; i < k.degree(); ++i) {
            powers.push_back(acc);
            acc = L->mul(acc, ext->root);
        }
        ext->base_span = PrimeSpan(L.get(), powers);
    }
    auto& slot = cache[d];
    slot = std::move(ext);
    return *slot;
}

/// Trace from GF(q^d) down to the base, returned as a base handle.
inline Elem relative_trace(const Extension& ext, Elem c) {
    const Field& L = *ext.field;
    const std::uint64_t q = ext.base->size();
    Elem t = 0, cur = c;
    for (std::uint32_t i = 0; i < ext.degree; ++i) {
        t = L.add(t, cur);
        cur = L.pow(cur, static_cast<std::int64_t>(q));
    }
    return ext.restrict(t);
}

/// Embeds a polynomial over k into GF(q^d)[x].
inline Poly embed_poly(const Extension& ext, const Poly& f) {
    std::vector<Elem> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ext.embed(f[i]);
    return Poly(ext.field.get(), std::move(c));
}

}  // namespace tamecurves

#endif  // TAMECURVES_POLY_HPP

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

#ifndef TAMECURVES_RATFUNC_HPP
#define TAMECURVES_RATFUNC_HPP

#include <optional>
#include <utility>

#include "poly.hpp"

namespace tamecurves {

/// Element of k(x) in lowest terms with a monic denominator; zero is 0/1.
class RatFunc {
   public:
    RatFunc() = default;
    explicit RatFunc(const Field* F) : num_(F), den_(Poly::one(F)) {}
    RatFunc(Poly n) : num_(std::move(n)), den_(Poly::one(num_.field())) {}  // NOLINT(implicit)
    RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc constant(const Field* F, Elem a) { return RatFunc(Poly::constant(F, a)); }
    static RatFunc x(const Field* F) { return RatFunc(Poly::x(F)); }

    const Field* field() const noexcept { return num_.field() ? num_.field() : den_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    /// deg num - deg den (the order of the pole at infinity); undefined for zero.
    int degree() const noexcept { return num_.degree() - den_.degree(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) noexcept { return !(a == b); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
        // cross-cancel first to keep degrees small
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return RatFunc((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }
    RatFunc scale(Elem c) const { return RatFunc(num_.scale(c), den_); }
    RatFunc pow(std::int64_t e) const {
        if (e < 0) return inv().pow(-e);
        return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)), true);
    }
    /// d/dx.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }
    /// Value at a point of k; nullopt at a pole.
    std::optional<Elem> eval(Elem a) const {
        Elem d = den_.eval(a);
        if (d == 0) return std::nullopt;
        return field()->div(num_.eval(a), d);
    }
    /// this(g) for g in k(x).
    RatFunc compose(const RatFunc& g) const {
        RatFunc acc(field());
        for (std::size_t i = num_.coeffs().size(); i-- > 0;) acc = acc * g + constant(field(), num_[i]);
        RatFunc bcc(field());
        for (std::size_t i = den_.coeffs().size(); i-- > 0;) bcc = bcc * g + constant(field(), den_[i]);
        return acc / bcc;
    }

   private:
    RatFunc(Poly n, Poly d, bool /*already reduced*/) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize() {
        if (den_.is_zero()) throw ZeroPolynomial("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one(den_.field());
            num_ = Poly(den_.field());
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Elem l = den_.lead();
        if (l != 1) {
            Elem li = den_.field()->inv(l);
            num_ = num_.scale(li);
            den_ = den_.scale(li);
        }
    }
    Poly num_, den_;
};

/// Square root in k(x) for characteristic 2; throws NotASquare otherwise.
inline RatFunc sqrt_ratfunc(const RatFunc& f) {
    const Field* F = f.field();
    if (F->characteristic() != 2) throw CharacteristicMismatch("sqrt_ratfunc needs characteristic 2");
    return RatFunc(f.num().pth_root(), f.den().pth_root());
}

/// Valuation of a polynomial at a monic irreducible pi.
inline int poly_valuation(Poly f, const Poly& pi) {
    if (f.is_zero()) throw ZeroPolynomial("valuation of zero");
    int v = 0;
    for (;;) {
        auto [q, r] = f.divmod(pi);
        if (!r.is_zero()) return v;
        f = std::move(q);
        ++v;
    }
}

}  // namespace tamecurves

#endif  // TAMECURVES_RATFUNC_HPP

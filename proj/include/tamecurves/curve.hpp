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

#ifndef TAMECURVES_CURVE_HPP
#define TAMECURVES_CURVE_HPP

#include <memory>
#include <mutex>
#include <string>

#include "ratfunc.hpp"

namespace tamecurves {

enum class CurveKind { P1, Ordinary, Supersingular, ShortW };

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

struct PlaceCache;  // defined in place.hpp

/// A curve over k: the projective line, or an elliptic curve in the
/// Weierstrass form y^2 + h(x) y = F(x) with h = a1 x + a3 and
/// F = x^3 + a2 x^2 + a4 x + a6.
///
///   Ordinary (char 2):       y^2 + x y = x^3 + a x^2 + b,  b != 0
///   Supersingular (char 2):  y^2 + y   = x^3 + a x + b
///   ShortW (char >= 5):      y^2       = x^3 + A x + B,  4A^3 + 27B^2 != 0
class Curve {
   public:
    static CurvePtr p1(FieldPtr k) { return CurvePtr(new Curve(std::move(k), CurveKind::P1, 0, 0)); }
    static CurvePtr ordinary(FieldPtr k, Elem a, Elem b) {
        if (k->characteristic() != 2) throw CharacteristicMismatch("ordinary model needs characteristic 2");
        if (b == 0) throw InvalidCurve("ordinary model needs b != 0");
        return CurvePtr(new Curve(std::move(k), CurveKind::Ordinary, a, b));
    }
    static CurvePtr supersingular(FieldPtr k, Elem a, Elem b) {
        if (k->characteristic() != 2) throw CharacteristicMismatch("supersingular model needs characteristic 2");
        return CurvePtr(new Curve(std::move(k), CurveKind::Supersingular, a, b));
    }
    static CurvePtr short_weierstrass(FieldPtr k, Elem A, Elem B) {
        if (k->characteristic() < 5) throw CharacteristicMismatch("short Weierstrass model needs characteristic >= 5");
        const Field& F = *k;
        Elem disc = F.add(F.mul(F.from_int(4), F.pow(A, 3)), F.mul(F.from_int(27), F.mul(B, B)));
        if (disc == 0) throw InvalidCurve("singular curve: 4A^3 + 27B^2 = 0");
        return CurvePtr(new Curve(std::move(k), CurveKind::ShortW, A, B));
    }

    CurveKind kind() const noexcept { return kind_; }
    bool is_p1() const noexcept { return kind_ == CurveKind::P1; }
    int genus() const noexcept { return is_p1() ? 0 : 1; }
    const FieldPtr& field_ptr() const noexcept { return k_; }
    const Field& field() const noexcept { return *k_; }
    const Field* k() const noexcept { return k_.get(); }
    /// Model parameters (a, b) or (A, B).
    Elem param_a() const noexcept { return a_; }
    Elem param_b() const noexcept { return b_; }
    /// h and F of y^2 + h y = F (both zero on P1).
    const Poly& h() const noexcept { return h_; }
    const Poly& F() const noexcept { return F_; }
    /// dy/dx = dydx_u + dydx_v * y.
    const RatFunc& dydx_u() const noexcept { return dydx_u_; }
    const RatFunc& dydx_v() const noexcept { return dydx_v_; }

    bool same_model(const Curve& o) const noexcept {
        return kind_ == o.kind_ && a_ == o.a_ && b_ == o.b_ && *k_ == *o.k_;
    }

    /// Lazily created per-curve place data; see place.hpp.
    std::shared_ptr<PlaceCache> place_cache() const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return cache_;
    }
    void set_place_cache(std::shared_ptr<PlaceCache> c) const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!cache_) cache_ = std::move(c);
    }
    std::mutex& cache_mutex() const { return build_mutex_; }

   private:
    Curve(FieldPtr k, CurveKind kind, Elem a, Elem b) : k_(std::move(k)), kind_(kind), a_(a), b_(b) {
        const Field* K = k_.get();
        h_ = Poly(K);
        F_ = Poly(K);
        switch (kind_) {
            case CurveKind::P1: break;
            case CurveKind::Ordinary:
                h_ = Poly::x(K);
                F_ = Poly(K, {b, 0, a, 1});
                break;
            case CurveKind::Supersingular:
                h_ = Poly::one(K);
                F_ = Poly(K, {b, a, 0, 1});
                break;
            case CurveKind::ShortW: F_ = Poly(K, {b, a, 0, 1}); break;
        }
        dydx_u_ = RatFunc(K);
        dydx_v_ = RatFunc(K);
        if (kind_ == CurveKind::P1) return;
        if (K->characteristic() == 2) {
            // h y' + h' y = F'
            dydx_u_ = RatFunc(F_.derivative(), h_);
            dydx_v_ = RatFunc(h_.derivative(), h_);
        } else {
            // 2 y y' = F'  =>  y' = F' y / (2F)
            dydx_v_ = RatFunc(F_.derivative(), F_.scale(K->from_int(2)));
        }
    }

    FieldPtr k_;
    CurveKind kind_;
    Elem a_, b_;
    Poly h_, F_;
    RatFunc dydx_u_, dydx_v_;
    mutable std::mutex cache_mutex_;
    mutable std::mutex build_mutex_;
    mutable std::shared_ptr<PlaceCache> cache_;
};

/// Element u + v*y of the function field of a curve (v = 0 on P1).
class FuncElem {
   public:
    FuncElem() = default;
    explicit FuncElem(CurvePtr X) : X_(std::move(X)), u_(X_->k()), v_(X_->k()) {}
    FuncElem(CurvePtr X, RatFunc u) : X_(std::move(X)), u_(std::move(u)), v_(X_->k()) {}
    FuncElem(CurvePtr X, RatFunc u, RatFunc v) : X_(std::move(X)), u_(std::move(u)), v_(std::move(v)) {
        if (X_->is_p1() && !v_.is_zero()) throw DomainError("y is not defined on P1");
    }

    static FuncElem constant(const CurvePtr& X, Elem c) { return FuncElem(X, RatFunc::constant(X->k(), c)); }
    static FuncElem x(const CurvePtr& X) { return FuncElem(X, RatFunc::x(X->k())); }
    static FuncElem y(const CurvePtr& X) {
        if (X->is_p1()) throw DomainError("y is not defined on P1");
        return FuncElem(X, RatFunc(X->k()), RatFunc::constant(X->k(), 1));
    }

    const CurvePtr& curve() const noexcept { return X_; }
    const Field* k() const noexcept { return X_->k(); }
    const RatFunc& u() const noexcept { return u_; }
    const RatFunc& v() const noexcept { return v_; }
    bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }
    bool is_constant() const noexcept { return v_.is_zero() && u_.is_constant(); }
    bool is_rational() const noexcept { return v_.is_zero(); }

    friend bool operator==(const FuncElem& a, const FuncElem& b) noexcept { return a.u_ == b.u_ && a.v_ == b.v_; }
    friend bool operator!=(const FuncElem& a, const FuncElem& b) noexcept { return !(a == b); }

    friend FuncElem operator+(const FuncElem& a, const FuncElem& b) {
        return FuncElem(a.X_, a.u_ + b.u_, a.v_ + b.v_, 0);
    }
    friend FuncElem operator-(const FuncElem& a, const FuncElem& b) {
        return FuncElem(a.X_, a.u_ - b.u_, a.v_ - b.v_, 0);
    }
    FuncElem operator-() const { return FuncElem(X_, -u_, -v_, 0); }
    friend FuncElem operator*(const FuncElem& a, const FuncElem& b) {
        if (a.v_.is_zero() && b.v_.is_zero()) return FuncElem(a.X_, a.u_ * b.u_, a.v_, 0);
        if (a.v_.is_zero()) return FuncElem(a.X_, a.u_ * b.u_, a.u_ * b.v_, 0);
        if (b.v_.is_zero()) return FuncElem(a.X_, a.u_ * b.u_, a.v_ * b.u_, 0);
        // y^2 = F - h y
        const RatFunc H(a.X_->h()), F(a.X_->F());
        RatFunc vv = a.v_ * b.v_;
        return FuncElem(a.X_, a.u_ * b.u_ + vv * F, a.u_ * b.v_ + a.v_ * b.u_ - vv * H, 0);
    }
    friend FuncElem operator/(const FuncElem& a, const FuncElem& b) { return a * b.inv(); }
    FuncElem& operator+=(const FuncElem& o) { return *this = *this + o; }
    FuncElem& operator-=(const FuncElem& o) { return *this = *this - o; }
    FuncElem& operator*=(const FuncElem& o) { return *this = *this * o; }
    FuncElem& operator/=(const FuncElem& o) { return *this = *this / o; }

    /// u^2 - u v h - v^2 F, the norm to k(x).
    RatFunc norm() const {
        if (v_.is_zero()) return u_ * u_;
        const RatFunc H(X_->h()), F(X_->F());
        return u_ * u_ - u_ * v_ * H - v_ * v_ * F;
    }
    FuncElem inv() const {
        if (is_zero()) throw DomainError("inverse of zero function");
        if (v_.is_zero()) return FuncElem(X_, u_.inv(), v_, 0);
        const RatFunc H(X_->h());
        RatFunc n = norm().inv();
        return FuncElem(X_, (u_ - v_ * H) * n, -(v_ * n), 0);
    }
    FuncElem pow(std::int64_t e) const {
        if (e < 0) return inv().pow(-e);
        FuncElem r = constant(X_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }
    FuncElem scale(Elem c) const { return FuncElem(X_, u_.scale(c), v_.scale(c), 0); }

    /// d/dx using dy/dx from the curve equation.
    FuncElem derivative() const {
        FuncElem r(X_, u_.derivative(), v_.derivative(), 0);
        if (!v_.is_zero()) r += FuncElem(X_, v_) * FuncElem(X_, X_->dydx_u(), X_->dydx_v(), 0);
        return r;
    }
    /// Nonzero derivative, i.e. a separating element.
    bool is_separating() const { return !derivative().is_zero(); }

    /// Square root in characteristic 2; throws NotASquare.
    FuncElem sqrt() const {
        if (k()->characteristic() != 2) throw CharacteristicMismatch("square roots need characteristic 2");
        if (v_.is_zero()) return FuncElem(X_, sqrt_ratfunc(u_), v_, 0);
        // (s + t y)^2 = s^2 + t^2 F + t^2 h y
        RatFunc t2 = v_ / RatFunc(X_->h());
        RatFunc t = sqrt_ratfunc(t2);
        RatFunc s = sqrt_ratfunc(u_ + t2 * RatFunc(X_->F()));
        return FuncElem(X_, s, t, 0);
    }
    /// Fourth power map, used by the group action.
    FuncElem fourth() const {
        FuncElem s = *this * *this;
        return s * s;
    }

   private:
    FuncElem(CurvePtr X, RatFunc u, RatFunc v, int /*trusted*/) : X_(std::move(X)), u_(std::move(u)), v_(std::move(v)) {}
    CurvePtr X_;
    RatFunc u_, v_;
};

/// Differential h dx in normal form.
class Differential {
   public:
    Differential() = default;
    explicit Differential(FuncElem h) : h_(std::move(h)) {}
    /// df = f' dx.
    static Differential d(const FuncElem& f) { return Differential(f.derivative()); }

    const FuncElem& coeff() const noexcept { return h_; }
    bool is_zero() const noexcept { return h_.is_zero(); }
    friend bool operator==(const Differential& a, const Differential& b) { return a.h_ == b.h_; }
    friend bool operator!=(const Differential& a, const Differential& b) { return !(a == b); }
    friend Differential operator+(const Differential& a, const Differential& b) { return Differential(a.h_ + b.h_); }
    friend Differential operator-(const Differential& a, const Differential& b) { return Differential(a.h_ - b.h_); }
    friend Differential operator*(const FuncElem& f, const Differential& w) { return Differential(f * w.h_); }

   private:
    FuncElem h_;
};

}  // namespace tamecurves

#endif  // TAMECURVES_CURVE_HPP

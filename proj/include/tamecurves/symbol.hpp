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

#ifndef TAMECURVES_SYMBOL_HPP
#define TAMECURVES_SYMBOL_HPP

#include <vector>

#include "place.hpp"

namespace tamecurves {

namespace detail {

inline void require_char2(const FuncElem& f, const char* what) {
    if (f.k()->characteristic() != 2) throw CharacteristicMismatch(std::string(what) + " needs characteristic 2");
}

inline FuncElem separating_derivative(const FuncElem& f, const char* name) {
    FuncElem d = f.derivative();
    if (d.is_zero()) throw NotSeparating(std::string(name) + " is not separating");
    return d;
}

}  // namespace detail

/// [[a, b], [c, d]] acting by f -> (a^4 f + b^4) / (c^4 f + d^4).
struct GammaElem {
    FuncElem a, b, c, d;

    static GammaElem identity(const CurvePtr& X) {
        return {FuncElem::constant(X, 1), FuncElem(X), FuncElem(X), FuncElem::constant(X, 1)};
    }
    static GammaElem scaling(const FuncElem& t) {
        const CurvePtr& X = t.curve();
        return {t, FuncElem(X), FuncElem(X), FuncElem::constant(X, 1)};
    }
    static GammaElem translation(const FuncElem& t) {
        const CurvePtr& X = t.curve();
        return {FuncElem::constant(X, 1), t, FuncElem(X), FuncElem::constant(X, 1)};
    }
    static GammaElem inversion(const CurvePtr& X) {
        return {FuncElem(X), FuncElem::constant(X, 1), FuncElem::constant(X, 1), FuncElem(X)};
    }

    FuncElem det() const { return a * d - b * c; }
    bool degenerate() const { return det().is_zero(); }
    bool is_identity() const {
        // projectively: b = c = 0 and a = d
        return b.is_zero() && c.is_zero() && a == d;
    }
};

inline FuncElem gamma_apply(const GammaElem& g, const FuncElem& f) {
    detail::require_char2(f, "the Gamma action");
    if (g.degenerate()) throw DegenerateGamma("ad + bc = 0");
    FuncElem num = g.a.fourth() * f + g.b.fourth();
    FuncElem den = g.c.fourth() * f + g.d.fourth();
    if (den.is_zero()) throw DegenerateGamma("denominator vanishes identically");
    return num / den;
}

/// f = f0^4 + f1^4 g + f2^4 g^2 + f3^4 g^3.
struct QuarticDecomp {
    FuncElem f0, f1, f2, f3, g;

    FuncElem recompose() const {
        FuncElem g2 = g * g;
        return f0.fourth() + f1.fourth() * g + f2.fourth() * g2 + f3.fourth() * g2 * g;
    }
};

inline QuarticDecomp quartic_decompose(const FuncElem& f, const FuncElem& g) {
    detail::require_char2(f, "quartic decomposition");
    const FuncElem df = detail::separating_derivative(f, "f");
    const FuncElem dg = detail::separating_derivative(g, "g");
    auto ddg = [&](const FuncElem& h) { return h.derivative() / dg; };
    QuarticDecomp q;
    q.g = g;
    FuncElem r = (df / dg).sqrt();
    q.f3 = ddg(r).sqrt();
    q.f1 = (r + q.f3 * q.f3 * g).sqrt();
    FuncElem s = (f + r * r * g).sqrt();
    q.f2 = ddg(s).sqrt();
    q.f0 = (s + q.f2 * q.f2 * g).sqrt();
    return q;
}

/// SY(f, g) = ((f1 f3 + f2^2) / (f1^2 + f3^2 g))^2 dg in normal form h dx.
inline Differential sy(const FuncElem& f, const FuncElem& g) {
    QuarticDecomp q = quartic_decompose(f, g);
    FuncElem num = q.f1 * q.f3 + q.f2 * q.f2;
    if (num.is_zero()) return Differential(FuncElem(f.curve()));
    FuncElem den = q.f1 * q.f1 + q.f3 * q.f3 * g;
    FuncElem ratio = num / den;
    return Differential(ratio * ratio * g.derivative());
}

inline bool same_orbit(const FuncElem& f, const FuncElem& g) { return sy(f, g).is_zero(); }

/// An element of the orbit of f with valuation exactly 1 at P.
inline FuncElem orbit_uniformizer_at(const FuncElem& f, const Place& P) {
    detail::require_char2(f, "orbit uniformizers");
    if (f.derivative().is_zero()) throw NotPseudotame("a square is not pseudotame");
    const Field& L = P.residue_field();
    const FuncElem& t = P.uniformizer();
    FuncElem g = f;
    int v = valuation(g, P);
    if (v < 0) {
        g = g.inv();
        v = -v;
    } else if (v == 0) {
        Elem c = chart_expand(g, P, 1).coeff(0);
        g = g - P.lift(L.inv_frobenius(L.inv_frobenius(c))).fourth();
        v = valuation(g, P);
    }
    while (v % 4 == 0) {
        Elem c = local_expand(g, P, v + 1).coeff(v);
        FuncElem h = P.lift(L.inv_frobenius(L.inv_frobenius(c))) * t.pow(v / 4);
        g = g - h.fourth();
        v = valuation(g, P);
    }
    if (v % 4 == 2) throw NotPseudotame("even index obstruction at the place");
    if (v % 4 == 3) {
        g = g.inv();
        v = -v;
    }
    // v = 1 mod 4
    return g * t.pow(-(v - 1) / 4).fourth();
}

/// sum over P in S of Res_P(g1 df).
inline Elem residue_pairing(const FuncElem& g1, const FuncElem& f, const std::vector<Place>& S) {
    const Field& k = f.curve()->field();
    const Differential w = g1 * Differential::d(f);
    Elem acc = 0;
    for (const Place& P : S) acc = k.add(acc, residue(w, P));
    return acc;
}

}  // namespace tamecurves

#endif  // TAMECURVES_SYMBOL_HPP

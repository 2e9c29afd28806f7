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

#ifndef TAMECURVES_CONIC_HPP
#define TAMECURVES_CONIC_HPP

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "tame.hpp"

namespace tamecurves {

/// T1 T3 + T2^2 + b (T1^2 + g T3^2) = 0 over k(X).
struct ConicFiber {
    FuncElem g, b;
};

struct ConicPoint {
    FuncElem t1, t2, t3;
};

inline FuncElem conic_form(const ConicFiber& C, const ConicPoint& p) {
    return p.t1 * p.t3 + p.t2 * p.t2 + C.b * (p.t1 * p.t1 + C.g * p.t3 * p.t3);
}

inline bool conic_contains(const ConicFiber& C, const ConicPoint& p) {
    if (p.t1.is_zero() && p.t2.is_zero() && p.t3.is_zero()) return false;
    return conic_form(C, p).is_zero();
}

/// b with b^2 = a / g.
inline ConicFiber conic_fiber(const FuncElem& g, const FuncElem& a) {
    detail::require_char2(g, "conic fibers");
    return {g, (a / g).sqrt()};
}

/// The conic whose points give solutions of SY(f, g) = da: b^2 = da/dg.
inline ConicFiber symbol_conic(const FuncElem& g, const FuncElem& a) {
    detail::require_char2(g, "conic fibers");
    const FuncElem dg = detail::separating_derivative(g, "g");
    return {g, (a.derivative() / dg).sqrt()};
}

// ---------------------------------------------------------------------------
// z^2 + z = w in k(X)

struct AsSolution {
    std::optional<FuncElem> z;
    bool conclusive = false;  // absence means no solution anywhere in k(X)
    Divisor forced;           // every solution lies in L(forced)
};

namespace detail {

/// Coefficient vector of F = U + V y after clearing the common denominator.
inline std::vector<Elem> function_coords(const FuncElem& F, const Poly& den, std::size_t len) {
    std::vector<Elem> out(2 * len, 0);
    auto put = [&](const RatFunc& r, std::size_t off) {
        if (r.is_zero()) return;
        Poly p = r.num() * (den / r.den());
        if (p.degree() >= static_cast<int>(len)) throw DomainError("coordinate length exceeded");
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[off + i] = p[i];
    };
    put(F.u(), 0);
    put(F.v(), len);
    return out;
}

inline bool canonical_less(const FuncElem& a, const FuncElem& b) {
    auto key = [](const FuncElem& f) {
        return std::make_tuple(f.u().num().coeffs(), f.u().den().coeffs(), f.v().num().coeffs(), f.v().den().coeffs());
    };
    return key(a) < key(b);
}

}  // namespace detail

/// Solves z^2 + z = w with z in L(D); D defaults to the forced pole divisor.
inline AsSolution as_solve_funcfield(const FuncElem& w, std::optional<Divisor> D = std::nullopt) {
    detail::require_char2(w, "Artin-Schreier equations");
    const CurvePtr& X = w.curve();
    const Field& k = X->field();
    AsSolution res;
    if (w.is_zero()) {
        res.z = FuncElem(X);
        res.conclusive = true;
        return res;
    }
    for (const auto& [P, n] : pole_divisor(w)) {
        if (n % 2) {
            res.conclusive = true;  // an odd pole order is never of the form z^2 + z
            return res;
        }
        res.forced[P] = n / 2;
    }
    Divisor E = res.forced;
    if (D) {
        res.conclusive = true;
        for (const auto& [P, n] : res.forced) {
            auto it = D->find(P);
            const long dn = it == D->end() ? 0 : it->second;
            if (dn < n) res.conclusive = false;
            E[P] = std::min(n, dn);
        }
        for (const auto& [P, n] : *D)
            if (!res.forced.count(P) && n < 0) E[P] = n;
    } else {
        res.conclusive = true;
    }

    // GF(2)-linear system: sum gamma_ij ((w^j phi_i)^2 + w^j phi_i) = w
    const std::vector<FuncElem> basis = riemann_roch_space(X, E);
    const std::size_t m = k.degree();
    std::vector<FuncElem> gens, imgs;
    std::vector<Elem> powers{1};  // GF(2)-basis of k
    for (std::size_t j = 1; j < m; ++j) powers.push_back(k.mul(powers.back(), k.gen()));
    for (const FuncElem& phi : basis) {
        for (Elem c : powers) {
            FuncElem t = phi.scale(c);
            gens.push_back(t);
            imgs.push_back(t * t + t);
        }
    }
    Poly den = Poly::one(X->k());
    auto absorb = [&](const FuncElem& F) {
        den = lcm(den, F.u().den());
        den = lcm(den, F.v().den());
    };
    absorb(w);
    for (const auto& f : imgs) absorb(f);
    std::size_t len = 1;
    auto span = [&](const FuncElem& F) {
        for (const RatFunc* r : {&F.u(), &F.v()})
            if (!r->is_zero()) len = std::max<std::size_t>(len, static_cast<std::size_t>((r->num() * (den / r->den())).degree() + 1));
    };
    span(w);
    for (const auto& f : imgs) span(f);

    FieldPtr gf2 = Field::make(2, 1);
    auto bits = [&](const std::vector<Elem>& v) {
        std::vector<Elem> out;
        for (Elem e : v)
            for (auto d : k.digits(e)) out.push_back(d);
        return out;
    };
    const std::vector<Elem> rhs = bits(detail::function_coords(w, den, len));
    Matrix A(rhs.size(), std::vector<Elem>(imgs.size(), 0));
    for (std::size_t c = 0; c < imgs.size(); ++c) {
        auto col = bits(detail::function_coords(imgs[c], den, len));
        for (std::size_t r = 0; r < col.size(); ++r) A[r][c] = col[r];
    }
    auto sol = solve(*gf2, A, rhs, imgs.size());
    if (!sol) return res;
    FuncElem z(X);
    for (std::size_t c = 0; c < gens.size(); ++c)
        if ((*sol)[c]) z += gens[c];
    FuncElem z1 = z + FuncElem::constant(X, 1);
    res.z = detail::canonical_less(z1, z) ? z1 : z;
    return res;
}

// ---------------------------------------------------------------------------
// Points

using UvPair = std::pair<FuncElem, FuncElem>;

struct ConicSearchOptions {
    std::optional<Divisor> bound;
    std::uint64_t seed = 1;
    int fallback_trials = 200;
};

namespace detail {

inline std::optional<ConicPoint> try_uv(const ConicFiber& C, const FuncElem& u, const FuncElem& v,
                                        const std::optional<Divisor>& bound) {
    const CurvePtr& X = C.g.curve();
    const FuncElem one = FuncElem::constant(X, 1);
    const FuncElem w1 = C.b + u * u;
    const FuncElem w2 = C.b * C.g + v * v;
    ConicPoint pt;
    if (w1.is_zero()) {
        pt = {one, u, FuncElem(X)};
    } else {
        AsSolution s = as_solve_funcfield(w1 * w2, bound);
        if (!s.z) return std::nullopt;
        FuncElem t1 = *s.z / w1;
        pt = {t1, u * t1 + v, one};
    }
    if (!conic_contains(C, pt)) throw DomainError("reconstructed point is off the conic");
    return pt;
}

}  // namespace detail

/// Default (u, v) choices for the curve of C.
inline std::vector<UvPair> default_uv_list(const ConicFiber& C) {
    const CurvePtr& X = C.g.curve();
    const Field& k = X->field();
    const FuncElem zero(X), one = FuncElem::constant(X, 1), x = FuncElem::x(X);
    std::vector<UvPair> out{{zero, zero}};
    if (X->kind() == CurveKind::Ordinary) {
        Elem B = X->param_b();
        for (int i = 0; i < 3; ++i) B = k.inv_frobenius(B);
        out.emplace_back(one, FuncElem::constant(X, B));
        out.emplace_back(one, x.scale(k.inv(B)));
    }
    if (X->kind() == CurveKind::Supersingular) {
        FuncElem c = C.b - x;
        if (c.is_constant()) {
            Elem cc = c.u().num()[0];
            Elem c4 = k.inv_frobenius(k.inv_frobenius(cc));
            out.emplace_back(zero, x + FuncElem::constant(X, k.add(cc, c4)));
        }
    }
    return out;
}

inline std::optional<ConicPoint> conic_point_search(const ConicFiber& C, const std::vector<UvPair>& uv_list,
                                                    const ConicSearchOptions& opt = {}) {
    detail::require_char2(C.g, "conic point search");
    const CurvePtr& X = C.g.curve();
    const FuncElem zero(X), one = FuncElem::constant(X, 1);
    if (C.b.is_zero()) return ConicPoint{zero, zero, one};
    for (const auto& [u, v] : uv_list)
        if (auto pt = detail::try_uv(C, u, v, opt.bound)) return pt;
    // seeded search over (u, v) drawn from L(n infinity), n <= 4
    const Field& k = X->field();
    std::mt19937_64 rng(opt.seed);
    const auto basis = riemann_roch_basis(X, 4);
    auto draw = [&]() {
        const std::size_t n = 1 + rng() % basis.size();
        FuncElem r(X);
        for (std::size_t i = 0; i < n; ++i)
            if (rng() % 2) r += basis[i].scale(static_cast<Elem>(rng() % k.size()));
        return r;
    };
    for (int t = 0; t < opt.fallback_trials; ++t) {
        FuncElem u = draw(), v = draw();
        if (auto pt = detail::try_uv(C, u, v, opt.bound)) return pt;
    }
    throw SearchExhausted("no conic point found");
}

inline std::optional<ConicPoint> conic_point_search(const ConicFiber& C, const ConicSearchOptions& opt = {}) {
    const CurvePtr& X = C.g.curve();
    if (X->kind() == CurveKind::Supersingular && C.g == FuncElem::x(X) && !opt.bound) {
        // b = x + c: the point (c^(1/2) : c^(1/4) : 1) of T1 T3 + T2^2 + x T1^2 + c x T3^2, mapped back
        const FuncElem c = C.b - C.g;
        if (c.is_constant()) {
            const Field& k = X->field();
            const Elem cc = c.u().num()[0];
            const Elem c2 = k.inv_frobenius(cc), c4 = k.inv_frobenius(c2);
            const ConicPoint pt{FuncElem::constant(X, c2), C.g + FuncElem::constant(X, k.add(c4, cc)),
                                FuncElem::constant(X, 1)};
            if (conic_contains(C, pt)) return pt;
        }
    }
    return conic_point_search(C, default_uv_list(C), opt);
}

/// f = f1^4 g + f2^4 g^2 + f3^4 g^3 from a point (f1 : f2 : f3).
inline FuncElem point_to_function(const ConicFiber& C, const ConicPoint& p) {
    const FuncElem& g = C.g;
    FuncElem g2 = g * g;
    return p.t1.fourth() * g + p.t2.fourth() * g2 + p.t3.fourth() * g2 * g;
}

/// An f with SY(f, g) = da, verified exactly.
inline FuncElem symbol_solve(const FuncElem& g, const FuncElem& a, const ConicSearchOptions& opt = {}) {
    detail::require_char2(g, "symbol_solve");
    detail::separating_derivative(g, "g");
    const Differential da = Differential::d(a);
    if (da.is_zero()) return g;
    const ConicFiber C = symbol_conic(g, a);
    auto pt = conic_point_search(C, opt);
    if (!pt) throw SearchExhausted("no conic point found");
    FuncElem f = point_to_function(C, *pt);
    if (sy(f, g) != da) throw DomainError("symbol_solve verification failed");
    return f;
}

// ---------------------------------------------------------------------------
// Elliptic curve analyses

struct EcReport {
    bool symbol_ok = false;
    bool decomposition_ok = true;  // ordinary only
    bool split_ok = false;
    bool regular_ok = false;
    bool conic_ok = false;
    bool point_ok = false;
    bool simplified_ok = true;  // supersingular only
    std::vector<int> traces;    // Tr(a), Tr(b), Tr(a + b) for ordinary curves
    std::optional<int> uv_index;
    Differential symbol;
    ConicFiber conic;
    std::optional<ConicPoint> point;
    std::optional<FuncElem> pseudotame;
    std::optional<FuncElem> tame;
    bool tame_ok = false;
};

namespace detail {

inline Elem root_2k(const Field& k, Elem a, int times) {
    for (int i = 0; i < times; ++i) a = k.inv_frobenius(a);
    return a;
}

/// True when every pole of w lies where pred holds.
template <class Pred>
bool poles_only_where(const Differential& w, Pred pred) {
    if (w.is_zero()) return true;
    for (const Place& P : poles_of(w))
        if (!pred(P)) return false;
    return true;
}

inline void finish_tame(EcReport& r, bool lift, const TameLiftOptions& opt) {
    if (!r.pseudotame || !lift) return;
    r.tame = pseudotame_to_tame(*r.pseudotame, opt);
    r.tame_ok = is_tame(*r.tame) && same_orbit(*r.pseudotame, *r.tame) && riemann_hurwitz_check(*r.tame).holds;
}

}  // namespace detail

/// y^2 + xy = x^3 + a x^2 + b.
inline EcReport ec_ordinary_analysis(const FieldPtr& kp, Elem a, Elem b, bool lift = true,
                                     const TameLiftOptions& opt = {}) {
    const CurvePtr X = Curve::ordinary(kp, a, b);
    const Field& k = *kp;
    const Elem A = detail::root_2k(k, a, 2), B = detail::root_2k(k, b, 3);
    const Elem B2 = k.mul(B, B), B4 = k.mul(B2, B2);
    const FuncElem x = FuncElem::x(X), y = FuncElem::y(X), one = FuncElem::constant(X, 1);
    auto cst = [&](Elem c) { return FuncElem::constant(X, c); };
    EcReport r;

    const FuncElem f = x / (y + cst(B4));
    r.symbol = sy(f, x);
    const FuncElem ratio = (x * x + x.scale(B) + cst(B4)) / (x * (x + cst(B2)));
    r.symbol_ok = r.symbol == Differential(ratio * ratio);

    QuarticDecomp q = quartic_decompose((y + cst(B4)) * x.pow(3), x);
    const Elem AA = k.add(k.mul(A, A), A);
    r.decomposition_ok = q.f0 == y + x.scale(AA) + cst(B4) && q.f1 == x && q.f2 == x + cst(B2) && q.f3 == cst(B);

    const Differential partU((x * x + cst(B4)) / (x * x));
    const Differential partV(cst(B2) / (x * x + cst(B4)));
    r.split_ok = partU + partV == r.symbol;
    // U = X - {inf, Q}; V = where f is regular and pseudotame
    const bool u_reg = detail::poles_only_where(partU, [&](const Place& P) {
        return P.is_infinity() || (P.minpoly() == Poly::x(X->k()) && P.degree() == 1);
    });
    const bool v_reg = detail::poles_only_where(partV, [&](const Place& P) {
        return valuation(f, P) < 0 || !pseudotame_at(f, P);
    });
    r.regular_ok = u_reg && v_reg;

    r.conic = symbol_conic(x, x + cst(B4) / x);
    r.conic_ok = r.conic.b == one + cst(B2) / x && r.conic.b * r.conic.g == x + cst(B2);

    r.traces = {static_cast<int>(k.trace_to_prime(a)), static_cast<int>(k.trace_to_prime(b)),
                static_cast<int>(k.trace_to_prime(k.add(a, b)))};
    const auto uv = default_uv_list(r.conic);
    for (std::size_t i = 0; i < uv.size() && !r.point; ++i) {
        if (auto pt = detail::try_uv(r.conic, uv[i].first, uv[i].second, std::nullopt)) {
            r.point = pt;
            r.uv_index = static_cast<int>(i);
        }
    }
    if (r.point) {
        r.point_ok = conic_contains(r.conic, *r.point);
        FuncElem g = point_to_function(r.conic, *r.point);
        if (sy(g, x) == Differential::d(x + cst(B4) / x)) r.pseudotame = g;
        detail::finish_tame(r, lift, opt);
    }
    return r;
}

/// y^2 + y = x^3 + a x + b with the conic family parameter c.
inline EcReport ec_supersingular_analysis(const FieldPtr& kp, Elem a, Elem b, Elem c, bool lift = true,
                                         const TameLiftOptions& opt = {}) {
    const CurvePtr X = Curve::supersingular(kp, a, b);
    const Field& k = *kp;
    const FuncElem x = FuncElem::x(X), y = FuncElem::y(X);
    auto cst = [&](Elem e) { return FuncElem::constant(X, e); };
    const Elem a2 = k.inv_frobenius(a), a4 = k.inv_frobenius(a2);
    const Elem b2 = k.inv_frobenius(b);
    const Elem c2 = k.inv_frobenius(c), c4 = k.inv_frobenius(c2);
    EcReport r;

    const FuncElem f = y / (x * x);
    r.symbol = sy(f, x);
    const FuncElem ratio = (x.scale(a4) + y * y + cst(k.add(b2, b))) / (x * (x + cst(a2)));
    r.symbol_ok = r.symbol == Differential(ratio * ratio);

    const Differential partU(x * x + cst(a));
    const Differential partV((x * x.scale(a2) + y + x.pow(3) + x.scale(a)) / (x * x * (x * x + cst(a))));
    r.split_ok = partU + partV == r.symbol;
    const bool u_reg = detail::poles_only_where(partU, [](const Place& P) { return P.is_infinity(); });
    const bool v_reg = detail::poles_only_where(partV, [&](const Place& P) {
        if (valuation(f, P) < 0) return true;
        return valuation(f - P.lift(chart_expand(f, P, 1).coeff(0)), P) != 1;
    });
    r.regular_ok = u_reg && v_reg;

    const FuncElem target = x.pow(3) + x.scale(k.mul(c, c));
    r.conic = symbol_conic(x, target);
    r.conic_ok = r.conic.b == x + cst(c) && r.conic.b * r.conic.g == x * x + x.scale(c);
    // T2 -> T2 + c^(1/2) T1 + x T3 turns C into T1 T3 + T2^2 + x T1^2 + c x T3^2
    const ConicFiber simplified{cst(c), x};  // b' = x, g' = c
    const ConicPoint ps{cst(c2), cst(c4), cst(1)};
    r.simplified_ok = conic_contains(simplified, ps) && r.conic.b + cst(c) == simplified.b &&
                      r.conic.b * r.conic.g + x * x == simplified.b * simplified.g;
    const ConicPoint pt{ps.t1, ps.t2 + ps.t1.scale(c2) + x * ps.t3, ps.t3};
    r.point = pt;
    r.point_ok = conic_contains(r.conic, pt);
    FuncElem g = point_to_function(r.conic, pt);
    if (sy(g, x) == Differential::d(target)) r.pseudotame = g;
    detail::finish_tame(r, lift, opt);
    return r;
}

}  // namespace tamecurves

#endif  // TAMECURVES_CONIC_HPP

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

#ifndef TAMECURVES_TAME_HPP
#define TAMECURVES_TAME_HPP

#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "symbol.hpp"

namespace tamecurves {

struct RamificationEntry {
    Place place;
    long e = 1;
    bool wild = false;
    Place image;  // on the target line
};

struct RamificationProfile {
    long degree = 0;
    std::vector<RamificationEntry> entries;  // ramified places only
    CurvePtr target;
};

/// Degree of f as a map to the line: the degree of its pole divisor.
inline long function_degree(const FuncElem& f) {
    long d = 0;
    for (const auto& [P, n] : pole_divisor(f)) d += n * static_cast<long>(P.degree());
    return d;
}

/// Minimal polynomial over k of an element of the residue field of P.
inline Poly value_minpoly(const Place& P, Elem c) {
    const Extension& ext = P.extension();
    const Field& L = *ext.field;
    const Field* k = ext.base;
    const auto q = static_cast<std::int64_t>(k->size());
    Poly m = Poly::one(&L);
    Elem cur = c;
    do {
        m *= Poly(&L, {L.neg(cur), 1});
        cur = L.pow(cur, q);
    } while (cur != c);
    std::vector<Elem> out;
    for (Elem a : m.coeffs()) out.push_back(ext.restrict(a));
    return Poly(k, std::move(out));
}

namespace detail {

inline FuncElem require_separating(const FuncElem& f) {
    FuncElem d = f.derivative();
    if (d.is_zero()) throw NotSeparating("f has zero derivative");
    return d;
}

/// Chart expansion of f - f(P) (or 1/f at a pole), known through s^prec - 1.
inline Series centered_expansion(const FuncElem& f, const Place& P, int prec) {
    const bool pole = valuation(f, P) < 0;
    const FuncElem g = pole ? f.inv() : f;
    Series s = chart_expand(g, P, prec);
    Elem c0 = s.coeff(0);
    if (c0) s = s - Series::constant(s.field(), c0, Series::kExact);
    return s;
}

}  // namespace detail

inline RamificationProfile ramification_profile(const FuncElem& f) {
    const CurvePtr& X = f.curve();
    const FuncElem df = detail::require_separating(f);
    RamificationProfile prof;
    prof.target = Curve::p1(X->field_ptr());
    const Place target_inf = infinity_place(prof.target);
    const Divisor ddf = differential_divisor(Differential(df));
    const Divisor poles = pole_divisor(f);
    for (const auto& [P, n] : poles) prof.degree += n * static_cast<long>(P.degree());
    const long p = X->field().characteristic();

    std::vector<Place> cand;
    for (const auto& [P, n] : ddf)
        if (n > 0) cand.push_back(P);
    for (const auto& [P, n] : poles) cand.push_back(P);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    for (const Place& P : cand) {
        RamificationEntry en;
        en.place = P;
        auto pit = poles.find(P);
        if (pit != poles.end()) {
            en.e = pit->second;
            en.image = target_inf;
        } else {
            auto it = ddf.find(P);
            const int vdf = it == ddf.end() ? 0 : static_cast<int>(it->second);
            // f - f(P) has a nonzero coefficient at some index <= v(df) + 1
            Series s = chart_expand(f, P, vdf + 2);
            const Elem c = s.coeff(0);
            if (c) s = s - Series::constant(s.field(), c, Series::kExact);
            if (s.is_zero()) throw PrecisionExhausted("ramification index not determined");
            en.e = s.val();
            en.image = places_over(prof.target, value_minpoly(P, c)).front();
        }
        if (en.e <= 1) continue;
        en.wild = en.e % p == 0;
        prof.entries.push_back(en);
    }
    return prof;
}

inline RamificationProfile ramification_profile(const FuncElem& f, const CurvePtr& /*X*/) {
    return ramification_profile(f);
}

inline bool is_tame(const FuncElem& f) {
    for (const auto& en : ramification_profile(f).entries)
        if (en.wild) return false;
    return true;
}

inline bool is_simply_ramified(const FuncElem& f) {
    for (const auto& en : ramification_profile(f).entries)
        if (en.e > 2) return false;
    return true;
}

/// Index criterion: the first i >= 1 with a_i != 0 and 4 not dividing i is odd.
inline bool pseudotame_at(const FuncElem& f, const Place& P) {
    if (f.k()->characteristic() != 2) throw CharacteristicMismatch("pseudotameness is defined in characteristic 2");
    // a non-separating f is a square, so every index is even
    if (f.derivative().is_zero()) return false;
    return with_precision(8, [&](int N) {
        Series s = detail::centered_expansion(f, P, N);
        for (int i = std::max(1, s.is_zero() ? N : s.val()); i < N; ++i) {
            if (i % 4 == 0 || s.coeff(i) == 0) continue;
            return i % 2 == 1;
        }
        throw PrecisionExhausted("no index outside 4Z found");
    });
}

inline bool is_pseudotame(const FuncElem& f) {
    if (f.k()->characteristic() != 2) throw CharacteristicMismatch("pseudotameness is defined in characteristic 2");
    if (f.derivative().is_zero()) return false;
    for (const auto& en : ramification_profile(f).entries)
        if (en.wild && !pseudotame_at(f, en.place)) return false;
    return true;
}

struct RiemannHurwitz {
    bool holds = false;
    long lhs = 0;  // 2g - 2
    long rhs = 0;  // -2 deg f + sum (e - 1) deg P
    std::optional<Divisor> D;  // sum (e - 1)/2 [P] when f is tame with odd indices
    std::optional<std::string> d_error;
};

inline RiemannHurwitz riemann_hurwitz_check(const FuncElem& f) {
    const CurvePtr& X = f.curve();
    RamificationProfile prof = ramification_profile(f);
    RiemannHurwitz r;
    r.lhs = 2L * X->genus() - 2;
    r.rhs = -2 * prof.degree;
    bool tame = true, odd = true;
    for (const auto& en : prof.entries) {
        r.rhs += (en.e - 1) * static_cast<long>(en.place.degree());
        tame = tame && !en.wild;
        odd = odd && en.e % 2 == 1;
    }
    r.holds = r.lhs == r.rhs;
    if (tame && odd) {
        Divisor D;
        for (const auto& en : prof.entries) D[en.place] = (en.e - 1) / 2;
        r.D = D;
    } else {
        r.d_error = tame ? "OddIndexRequired" : "OddIndexRequired: f is wild";
    }
    return r;
}

/// Image places of the ramified places, on the target line.
inline std::vector<Place> branch_locus(const FuncElem& f) {
    std::vector<Place> out;
    for (const auto& en : ramification_profile(f).entries) out.push_back(en.image);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Pseudotame to tame

struct TameLiftOptions {
    std::uint64_t seed = 1;
    int attempts = 256;
    int max_e = 24;
};

namespace detail {

inline int pole_order_at_infinity(const FuncElem& f) {
    if (f.is_zero()) return 0;
    return std::max(0, -valuation(f, infinity_place(f.curve())));
}

/// Element of R with pole order exactly j at infinity, when one exists.
inline std::optional<FuncElem> rr_monomial(const CurvePtr& X, int j) {
    if (j < 0 || (!X->is_p1() && j == 1)) return std::nullopt;
    auto basis = riemann_roch_basis(X, j);
    return basis.back();
}

inline Elem fourth_root(const Field& F, Elem a) { return F.inv_frobenius(F.inv_frobenius(a)); }

/// Cancels pole orders divisible by 4 with fourth powers from R.
/// Returns (F + H^4, H) once the pole order is odd, nullopt otherwise.
inline std::optional<std::pair<FuncElem, FuncElem>> odd_pole_order(FuncElem F) {
    const CurvePtr& X = F.curve();
    const Field& k = X->field();
    const Place inf = infinity_place(X);
    FuncElem H(X);
    int N = pole_order_at_infinity(F);
    while (N > 0 && N % 4 == 0) {
        auto phi = rr_monomial(X, N / 4);
        if (!phi) return std::nullopt;
        const Elem c = local_expand(F, inf, -N + 1).coeff(-N);
        const Elem l = local_expand(*phi, inf, -N / 4 + 1).coeff(-N / 4);
        const Elem lam = k.div(fourth_root(k, c), l);
        FuncElem h = phi->scale(lam);
        F = F + h.fourth();
        H = H + h;
        N = pole_order_at_infinity(F);
    }
    if (N % 2 == 0) return std::nullopt;
    return std::make_pair(F, H);
}

/// Finite places where f or df vanishes.
inline std::vector<Place> exceptional_set(const FuncElem& f) {
    std::vector<Place> Y;
    for (const auto& [P, n] : principal_divisor(f))
        if (n > 0 && !P.is_infinity()) Y.push_back(P);
    for (const auto& [P, n] : differential_divisor(Differential::d(f)))
        if (n > 0 && !P.is_infinity()) Y.push_back(P);
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    return Y;
}

/// Smallest-pole-order element of R meeting the jet conditions added by fill.
template <class Fill>
std::optional<FuncElem> interpolate(const CurvePtr& X, int max_order, Fill fill) {
    for (int J = 0; J <= max_order; ++J) {
        if (!X->is_p1() && J == 1) continue;
        JetSystem sys(X, riemann_roch_basis(X, J));
        fill(sys);
        if (auto h = sys.solve()) return h;
    }
    return std::nullopt;
}

}  // namespace detail

/// Tame element of the orbit of a pseudotame f (characteristic 2).
inline FuncElem pseudotame_to_tame(const FuncElem& f, const TameLiftOptions& opt = {}) {
    const CurvePtr& X = f.curve();
    const Field& k = X->field();
    if (k.characteristic() != 2) throw CharacteristicMismatch("the tame lift needs characteristic 2");
    // a square is never pseudotame
    if (f.derivative().is_zero()) throw NotPseudotame("f has zero derivative");
    if (is_tame(f)) return f;
    if (!is_pseudotame(f)) throw NotPseudotame("f is not pseudotame");
    const int g = X->genus();

    // f1 = delta^4 f lies in R
    Poly delta = Poly::one(X->k());
    for (const auto& [pi, e] : factor(lcm(f.u().den(), f.v().den())))
        for (int i = 0; i < (e + 3) / 4; ++i) delta = delta * pi;
    const FuncElem f1 = FuncElem(X, RatFunc(delta)).fourth() * f;

    // f2 = f1^(2 e1 + 1) + h2^4 with odd pole order at infinity
    std::optional<FuncElem> f2;
    {
        FuncElem pw = f1, f1sq = f1 * f1;
        for (int e1 = 0; e1 <= opt.max_e && !f2; ++e1, pw *= f1sq)
            if (auto r = detail::odd_pole_order(pw)) f2 = r->first;
    }
    if (!f2) throw NotPseudotame("no odd pole order reachable at infinity");
    const int n2 = detail::pole_order_at_infinity(*f2);
    const std::vector<Place> Y = detail::exceptional_set(*f2);
    long ydeg = 0;
    for (const Place& P : Y) ydeg += P.degree();

    std::mt19937_64 rng(opt.seed);
    bool too_large = false;
    for (int attempt = 0; attempt < opt.attempts; ++attempt) try {
        // values of h3 on Y: nonzero where f2 vanishes, zero elsewhere
        std::vector<Elem> vals;
        for (const Place& P : Y) {
            const Field& L = P.residue_field();
            const bool zero = valuation(*f2, P) > 0;
            Elem v = 0;
            if (zero) v = attempt == 0 ? 1 : 1 + rng() % (L.size() - 1);
            vals.push_back(v);
        }
        auto h3 = detail::interpolate(X, static_cast<int>(ydeg) + 2 * g + 2, [&](JetSystem& sys) {
            for (std::size_t i = 0; i < Y.size(); ++i) sys.prescribe(Y[i], {vals[i]});
        });
        if (!h3) continue;
        const int dh3 = detail::pole_order_at_infinity(*h3);
        const FuncElem h3_4 = h3->fourth();

        FuncElem f2sq = *f2 * *f2, pw = *f2;
        for (int e2 = 0; e2 <= opt.max_e; ++e2, pw *= f2sq) {
            const long deg3 = static_cast<long>(2 * e2 + 1) * n2;
            if (deg3 <= std::max<long>(12L * g - 2, 4L * dh3)) continue;
            const FuncElem f3 = pw + h3_4;
            // congruence conditions for h4 at each point of Y
            std::vector<std::pair<Place, std::vector<Elem>>> jets;
            for (const Place& P : Y) {
                const Field& L = P.residue_field();
                const int m = with_precision(8, [&](int N) {
                    Series d = chart_expand(f3, P, N).derivative();
                    if (d.is_zero()) throw PrecisionExhausted("order of df3 not determined");
                    return d.val();
                });
                const int J = m / 4;
                if (J == 0) continue;
                Series s3 = chart_expand(f3, P, 4 * J + 1).pow(3);
                std::vector<Elem> b;
                for (int j = 1; j <= J; ++j) b.push_back(detail::fourth_root(L, s3.coeff(4 * j)));
                jets.emplace_back(P, std::move(b));
            }
            const int max_h4 = static_cast<int>((3 * deg3 - 1) / 4);
            auto h4 = detail::interpolate(X, max_h4, [&](JetSystem& sys) {
                for (const auto& [P, b] : jets) sys.prescribe(P, b, 1);
            });
            if (!h4) continue;
            const FuncElem f4 = f3 * f3 * f3 + h4->fourth();
            if (is_tame(f4) && same_orbit(f, f4)) return f4;
            break;  // this value assignment failed; try another
        }
    } catch (const InvalidField&) {
        too_large = true;  // some place of the candidate exceeds the residue field limit
    }
    throw SearchExhausted(too_large ? "no tame lift found whose places fit the residue field limit"
                                    : "no tame lift found within the attempt budget");
}

}  // namespace tamecurves

#endif  // TAMECURVES_TAME_HPP

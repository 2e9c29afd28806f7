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

#ifndef TAMECURVES_PLACE_HPP
#define TAMECURVES_PLACE_HPP

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "curve.hpp"
#include "linalg.hpp"
#include "series.hpp"

namespace tamecurves {

/// How x behaves at a place: split/inert (x - x0 is a local parameter)
/// or ramified (y - y0 is).
enum class FiberKind { Split, Ramified, Inert };

/// Which local parameter s the chart expansions use.
enum class ChartKind { P1Finite, P1Infinity, XParam, YParam, EllInfinity };

/// Expansions of x and y in the chart parameter s, over the residue field.
struct Chart {
    Series x, y;
};

struct PlaceData {
    CurvePtr X;
    bool infinity = false;
    Poly pi;  // monic minimal polynomial of x over k (finite places)
    FiberKind fiber = FiberKind::Split;
    std::uint32_t degree = 1;
    const Extension* ext = nullptr;  // residue field
    Elem x0 = 0, y0 = 0;            // representative over the residue field
    ChartKind chart = ChartKind::P1Finite;
    FuncElem uniformizer;
    bool chart_is_uniformizer = false;
    PrimeSpan lift_span;  // basis w^j x0^i y0^eps of the residue field over GF(p)
    std::size_t lift_len = 1;   // number of (i, eps) slots
    int x_order = 1;            // ramification index of x at the place

    mutable std::mutex chart_mutex;
    mutable std::map<int, Chart> charts;
};

/// A closed point of a curve, represented by one point of its Galois orbit.
class Place {
   public:
    Place() = default;
    explicit Place(std::shared_ptr<const PlaceData> d) : d_(std::move(d)) {}

    const PlaceData& data() const { return *d_; }
    const CurvePtr& curve() const { return d_->X; }
    bool is_infinity() const { return d_->infinity; }
    std::uint32_t degree() const { return d_->degree; }
    const Poly& minpoly() const { return d_->pi; }
    FiberKind fiber() const { return d_->fiber; }
    const Field& residue_field() const { return *d_->ext->field; }
    const Extension& extension() const { return *d_->ext; }
    Elem x0() const { return d_->x0; }
    Elem y0() const { return d_->y0; }
    const FuncElem& uniformizer() const { return d_->uniformizer; }
    /// v_P(x - x0), or -v_P(x) at infinity.
    int x_order() const { return d_->x_order; }

    /// Canonical order: finite places by minimal polynomial, then representative; infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.d_ == b.d_) return false;
        if (a.d_->infinity != b.d_->infinity) return b.d_->infinity;
        if (a.d_->infinity) return false;
        if (a.d_->pi != b.d_->pi) return a.d_->pi < b.d_->pi;
        return a.d_->y0 < b.d_->y0;
    }
    friend bool operator==(const Place& a, const Place& b) { return !(a < b) && !(b < a); }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    /// GF(p)-coordinates of a residue field element expressed over k in the
    /// basis x0^i y0^eps; one k-element per basis slot.
    std::vector<Elem> k_coords(Elem a) const {
        const PlaceData& d = *d_;
        const Field& k = d.X->field();
        if (d.infinity) return {d.ext->restrict(a)};
        auto c = d.lift_span.coords(a);
        if (!c) throw DomainError("value outside the residue field");
        std::vector<Elem> out(d.lift_len);
        const std::size_t m = k.degree();
        for (std::size_t s = 0; s < d.lift_len; ++s) {
            std::vector<std::uint32_t> dg(c->begin() + static_cast<std::ptrdiff_t>(s * m),
                                          c->begin() + static_cast<std::ptrdiff_t>((s + 1) * m));
            out[s] = k.from_digits(dg);
        }
        return out;
    }
    /// A function in k[x] + k[x] y whose value at the representative is a.
    FuncElem lift(Elem a) const {
        const PlaceData& d = *d_;
        const Field* k = d.X->k();
        auto c = k_coords(a);
        if (d.infinity) return FuncElem::constant(d.X, c[0]);
        const std::size_t n = static_cast<std::size_t>(d.pi.degree());
        std::vector<Elem> u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
        FuncElem r(d.X, RatFunc(Poly(k, u)));
        if (d.lift_len > n) {
            std::vector<Elem> v(c.begin() + static_cast<std::ptrdiff_t>(n), c.end());
            r = r + FuncElem(d.X, RatFunc(k), RatFunc(Poly(k, v)));
        }
        return r;
    }

   private:
    std::shared_ptr<const PlaceData> d_;
};

using Divisor = std::map<Place, long>;

inline long divisor_degree(const Divisor& D) {
    long s = 0;
    for (const auto& [P, n] : D) s += n * static_cast<long>(P.degree());
    return s;
}
inline Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [P, n] : b)
        if ((a[P] += n) == 0) a.erase(P);
    return a;
}
inline Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [P, n] : b)
        if ((a[P] -= n) == 0) a.erase(P);
    return a;
}

/// Per-curve cache of constructed places.
struct PlaceCache {
    std::mutex mutex;
    std::map<std::vector<Elem>, std::vector<Place>> over;
    std::map<std::uint32_t, std::vector<Place>> by_degree;
    std::optional<Place> infinity;
};

namespace detail {

inline std::shared_ptr<PlaceCache> cache_of(const CurvePtr& X) {
    auto c = X->place_cache();
    if (!c) {
        X->set_place_cache(std::make_shared<PlaceCache>());
        c = X->place_cache();
    }
    return c;
}

// Newton iteration from init (known to init.prec()) up to precision N.
inline Series newton(Series y, int N, const std::function<Series(const Series&)>& G,
                     const std::function<Series(const Series&)>& dG) {
    const Field* L = y.field();
    while (y.prec() < N) {
        const int np = std::min(2 * std::max(y.prec(), 1), N);
        Series ye = y.is_zero() ? Series::zero(L, np) : Series(L, y.val(), y.coeffs(), np);
        Series g = G(ye), dg = dG(ye);
        y = (ye - g / dg).truncate(np);
        if (y.prec() < np) throw PrecisionExhausted("Newton step lost precision");
    }
    return y;
}

inline void finish_place(PlaceData& d) {
    const CurvePtr& X = d.X;
    const Field& k = X->field();
    const Field& L = *d.ext->field;
    if (d.infinity) {
        d.lift_len = 1;
        if (X->is_p1()) {
            d.chart = ChartKind::P1Infinity;
            d.uniformizer = FuncElem::x(X).inv();
            d.x_order = 1;
        } else {
            d.chart = ChartKind::EllInfinity;
            d.uniformizer = FuncElem::x(X) / FuncElem::y(X);
            d.x_order = 2;
        }
        d.chart_is_uniformizer = true;
        return;
    }
    const std::size_t n = static_cast<std::size_t>(d.pi.degree());
    d.lift_len = d.fiber == FiberKind::Inert ? 2 * n : n;
    std::vector<Elem> family;
    for (std::size_t s = 0; s < d.lift_len; ++s) {
        const std::size_t i = s % n;
        Elem base = L.pow(d.x0, static_cast<std::int64_t>(i));
        if (s >= n) base = L.mul(base, d.y0);
        Elem wj = 1;
        for (std::uint32_t j = 0; j < k.degree(); ++j) {
            family.push_back(L.mul(base, d.ext->embed(wj)));
            wj = k.mul(wj, k.gen());
        }
    }
    d.lift_span = PrimeSpan(&L, family);
    if (X->is_p1()) {
        d.chart = ChartKind::P1Finite;
        d.uniformizer = FuncElem(X, RatFunc(d.pi));
        d.chart_is_uniformizer = n == 1;
        d.x_order = 1;
        return;
    }
    if (d.fiber == FiberKind::Ramified) {
        d.chart = ChartKind::YParam;
        d.x_order = 2;
        Place tmp(std::shared_ptr<const PlaceData>(std::shared_ptr<const PlaceData>{}, &d));
        FuncElem Y = tmp.lift(d.y0);
        d.uniformizer = FuncElem::y(X) - Y;
        d.chart_is_uniformizer = n == 1;
    } else {
        d.chart = ChartKind::XParam;
        d.x_order = 1;
        d.uniformizer = FuncElem(X, RatFunc(d.pi));
        d.chart_is_uniformizer = n == 1;
    }
}

inline Place make_place(std::shared_ptr<PlaceData> d) {
    finish_place(*d);
    return Place(std::move(d));
}

}  // namespace detail

/// The place at infinity.
inline Place infinity_place(const CurvePtr& X) {
    auto cache = detail::cache_of(X);
    std::lock_guard<std::mutex> lock(cache->mutex);
    if (cache->infinity) return *cache->infinity;
    auto d = std::make_shared<PlaceData>();
    d->X = X;
    d->infinity = true;
    d->degree = 1;
    d->ext = &extension(X->field(), 1);
    d->fiber = X->is_p1() ? FiberKind::Split : FiberKind::Ramified;
    cache->infinity = detail::make_place(d);
    return *cache->infinity;
}

/// All places lying over the zero set of a monic irreducible pi in k[x].
inline std::vector<Place> places_over(const CurvePtr& X, const Poly& pi_in) {
    const Poly pi = pi_in.monic();
    auto cache = detail::cache_of(X);
    {
        std::lock_guard<std::mutex> lock(cache->mutex);
        auto it = cache->over.find(pi.coeffs());
        if (it != cache->over.end()) return it->second;
    }
    const Field& k = X->field();
    const std::uint32_t e = static_cast<std::uint32_t>(pi.degree());
    auto base_place = [&](std::uint32_t deg) {
        auto d = std::make_shared<PlaceData>();
        d->X = X;
        d->pi = pi;
        d->degree = deg;
        d->ext = &extension(k, deg);
        d->x0 = roots(embed_poly(*d->ext, pi)).front();
        return d;
    };
    std::vector<Place> out;
    if (X->is_p1()) {
        auto d = base_place(e);
        d->fiber = FiberKind::Split;
        out.push_back(detail::make_place(d));
    } else {
        auto d = base_place(e);
        const Field& L = *d->ext->field;
        const Elem h0 = embed_poly(*d->ext, X->h()).eval(d->x0);
        const Elem F0 = embed_poly(*d->ext, X->F()).eval(d->x0);
        auto inert = [&]() {
            auto di = base_place(2 * e);
            const Field& L2 = *di->ext->field;
            const Elem h2 = embed_poly(*di->ext, X->h()).eval(di->x0);
            const Elem F2 = embed_poly(*di->ext, X->F()).eval(di->x0);
            di->fiber = FiberKind::Inert;
            if (k.characteristic() == 2) {
                auto t = L2.artin_schreier(L2.div(F2, L2.mul(h2, h2)));
                di->y0 = L2.mul(h2, *t);
            } else {
                Elem disc = L2.add(L2.mul(h2, h2), L2.mul(L2.from_int(4), F2));
                Elem r = *L2.sqrt(disc);
                di->y0 = L2.div(L2.sub(r, h2), L2.from_int(2));
            }
            out.push_back(detail::make_place(di));
        };
        if (k.characteristic() == 2) {
            if (h0 == 0) {
                d->fiber = FiberKind::Ramified;
                d->y0 = L.inv_frobenius(F0);
                out.push_back(detail::make_place(d));
            } else if (auto t = L.artin_schreier(L.div(F0, L.mul(h0, h0)))) {
                Elem ya = L.mul(h0, *t), yb = L.add(ya, h0);
                for (Elem y : {std::min(ya, yb), std::max(ya, yb)}) {
                    auto ds = base_place(e);
                    ds->fiber = FiberKind::Split;
                    ds->y0 = y;
                    out.push_back(detail::make_place(ds));
                }
            } else {
                inert();
            }
        } else {
            Elem disc = L.add(L.mul(h0, h0), L.mul(L.from_int(4), F0));
            if (disc == 0) {
                d->fiber = FiberKind::Ramified;
                d->y0 = L.div(L.neg(h0), L.from_int(2));
                out.push_back(detail::make_place(d));
            } else if (auto r = L.sqrt(disc)) {
                Elem ya = L.div(L.sub(*r, h0), L.from_int(2));
                Elem yb = L.div(L.sub(L.neg(*r), h0), L.from_int(2));
                for (Elem y : {std::min(ya, yb), std::max(ya, yb)}) {
                    auto ds = base_place(e);
                    ds->fiber = FiberKind::Split;
                    ds->y0 = y;
                    out.push_back(detail::make_place(ds));
                }
            } else {
                inert();
            }
        }
    }
    std::lock_guard<std::mutex> lock(cache->mutex);
    auto [it, inserted] = cache->over.emplace(pi.coeffs(), out);
    return it->second;
}

/// Monic irreducible polynomials of degree e over k, in canonical order.
inline std::vector<Poly> irreducibles_of_degree(const Field& k, std::uint32_t e) {
    const Extension& ext = extension(k, e);
    const Field& L = *ext.field;
    if (L.size() > (std::uint64_t{1} << 24)) throw DomainError("too many closed points to enumerate");
    std::vector<bool> seen(L.size(), false);
    std::vector<Poly> out;
    for (Elem a = 0; a < L.size(); ++a) {
        if (seen[a]) continue;
        std::vector<Elem> orbit{a};
        seen[a] = true;
        for (Elem c = L.pow(a, static_cast<std::int64_t>(k.size())); c != a; c = L.pow(c, static_cast<std::int64_t>(k.size()))) {
            orbit.push_back(c);
            seen[c] = true;
        }
        if (orbit.size() != e) continue;
        Poly mp = Poly::one(&L);
        for (Elem c : orbit) mp *= Poly(&L, {L.neg(c), 1});
        std::vector<Elem> kc(mp.coeffs().size());
        for (std::size_t i = 0; i < kc.size(); ++i) kc[i] = ext.restrict(mp[i]);
        out.push_back(Poly(&k, kc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closed points of residue degree exactly d, in canonical order.
inline std::vector<Place> places_of_degree(const CurvePtr& X, std::uint32_t d) {
    if (d == 0) throw DomainError("degree must be positive");
    auto cache = detail::cache_of(X);
    {
        std::lock_guard<std::mutex> lock(cache->mutex);
        auto it = cache->by_degree.find(d);
        if (it != cache->by_degree.end()) return it->second;
    }
    std::vector<Place> out;
    for (const Poly& pi : irreducibles_of_degree(X->field(), d))
        for (const Place& P : places_over(X, pi))
            if (P.degree() == d) out.push_back(P);
    if (!X->is_p1() && d % 2 == 0)
        for (const Poly& pi : irreducibles_of_degree(X->field(), d / 2))
            for (const Place& P : places_over(X, pi))
                if (P.degree() == d) out.push_back(P);
    if (d == 1) out.push_back(infinity_place(X));
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(cache->mutex);
    cache->by_degree.emplace(d, out);
    return out;
}

/// The place of the representative determined by a point (x0, y0) over
/// GF(q^d); convenience for tests and the CLI.
inline std::optional<Place> place_from_minpoly(const CurvePtr& X, const Poly& pi, std::optional<Elem> y0 = {}) {
    for (const Place& P : places_over(X, pi))
        if (!y0 || P.y0() == *y0) return P;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Local expansions

/// x(s), y(s) at working precision N.
inline Chart chart_at(const Place& P, int N) {
    const PlaceData& d = P.data();
    {
        std::lock_guard<std::mutex> lock(d.chart_mutex);
        auto it = d.charts.lower_bound(N);
        if (it != d.charts.end()) return it->second;
    }
    const CurvePtr& X = d.X;
    const Extension& ext = *d.ext;
    const Field* L = ext.field.get();
    const Poly H = embed_poly(ext, X->h()), F = embed_poly(ext, X->F());
    const Poly dH = H.derivative(), dF = F.derivative();
    Chart c;
    switch (d.chart) {
        case ChartKind::P1Finite:
            c.x = Series(L, 0, {d.x0, 1}, N);
            break;
        case ChartKind::P1Infinity:
            c.x = Series(L, -1, {1}, N);
            break;
        case ChartKind::XParam: {
            c.x = Series(L, 0, {d.x0, 1}, N);
            const Series Hx = Series::eval_poly(H, c.x), Fx = Series::eval_poly(F, c.x);
            c.y = detail::newton(
                Series(L, 0, {d.y0}, 1), N, [&](const Series& y) { return y * y + Hx * y - Fx; },
                [&](const Series& y) { return y.scale(L->from_int(2)) + Hx; });
            break;
        }
        case ChartKind::YParam: {
            c.y = Series(L, 0, {d.y0, 1}, N);
            const Series& y = c.y;
            c.x = detail::newton(
                Series(L, 0, {d.x0}, 1), N,
                [&](const Series& x) { return y * y + Series::eval_poly(H, x) * y - Series::eval_poly(F, x); },
                [&](const Series& x) { return Series::eval_poly(dH, x) * y - Series::eval_poly(dF, x); });
            break;
        }
        case ChartKind::EllInfinity: {
            // w = 1/y, s = x/y:  w + a1 s w + a3 w^2 = s^3 + a2 s^2 w + a4 s w^2 + a6 w^3
            const Elem a1 = H[1], a3 = H[0], a2 = F[2], a4 = F[1], a6 = F[0];
            const Series s = Series::param(L, Series::kExact);
            const Series s2 = s * s, s3 = s2 * s;
            Series w = detail::newton(
                Series::zero(L, 3), N + 3,
                [&](const Series& w) {
                    Series w2 = w * w;
                    return w + (s * w).scale(a1) + w2.scale(a3) - s3 - (s2 * w).scale(a2) - (s * w2).scale(a4) -
                           (w2 * w).scale(a6);
                },
                [&](const Series& w) {
                    return Series::constant(L, 1, Series::kExact) + s.scale(a1) + w.scale(L->mul(2 % L->characteristic(), a3)) -
                           s2.scale(a2) - (s * w).scale(L->mul(2 % L->characteristic(), a4)) -
                           (w * w).scale(L->mul(3 % L->characteristic(), a6));
                });
            Series wi = w.inv();
            c.x = s * wi;
            c.y = wi;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(d.chart_mutex);
    d.charts.emplace(N, c);
    return c;
}

namespace detail {

inline Series eval_ratfunc(const RatFunc& r, const Series& x, const Extension& ext) {
    Series n = Series::eval_poly(embed_poly(ext, r.num()), x);
    if (r.den().degree() == 0) return n;  // denominators are monic
    Series dn = Series::eval_poly(embed_poly(ext, r.den()), x);
    return n / dn;
}

}  // namespace detail

/// Expansion of f in the chart parameter s at working precision N.
inline Series chart_series(const FuncElem& f, const Place& P, int N) {
    const Chart c = chart_at(P, N);
    const Extension& ext = P.extension();
    Series r = detail::eval_ratfunc(f.u(), c.x, ext);
    if (!f.v().is_zero()) r = r + detail::eval_ratfunc(f.v(), c.x, ext) * c.y;
    return r;
}

inline constexpr int kMaxPrecision = 1 << 12;

/// Runs fn(N) for N = max(8, 2*request), doubling on PrecisionExhausted up to the cap.
template <class Fn>
auto with_precision(int request, Fn fn) {
    int N = std::max(8, 2 * std::abs(request));
    for (;;) {
        try {
            return fn(N);
        } catch (const PrecisionExhausted&) {
            if (N >= kMaxPrecision) throw;
            N = std::min(2 * N, kMaxPrecision);
        }
    }
}

/// Chart expansion known at least up to (excluding) s^prec.
inline Series chart_expand(const FuncElem& f, const Place& P, int prec) {
    return with_precision(prec, [&](int N) {
        Series s = chart_series(f, P, N);
        if (s.prec() < prec) throw PrecisionExhausted("chart expansion too short");
        return s;
    });
}

inline constexpr int kInfiniteValuation = INT_MAX;

/// Order of vanishing of f at P (kInfiniteValuation for f = 0).
inline int valuation(const FuncElem& f, const Place& P) {
    if (f.is_zero()) return kInfiniteValuation;
    const PlaceData& d = P.data();
    if (f.v().is_zero()) {
        const RatFunc& u = f.u();
        if (d.infinity) return -d.x_order * u.degree();
        int vn = u.num().degree() > 0 ? poly_valuation(u.num(), d.pi) : 0;
        int vd = u.den().degree() > 0 ? poly_valuation(u.den(), d.pi) : 0;
        return d.x_order * (vn - vd);
    }
    return with_precision(8, [&](int N) {
        Series s = chart_series(f, P, N);
        if (s.is_zero()) throw PrecisionExhausted("valuation not determined");
        return s.val();
    });
}

/// Laurent expansion of f in the stored uniformizer, correct below s^precision.
inline Series local_expand(const FuncElem& f, const Place& P, int precision) {
    const PlaceData& d = P.data();
    if (d.chart_is_uniformizer) return chart_expand(f, P, precision).truncate(precision);
    return with_precision(precision, [&](int N) {
        Series fs = chart_series(f, P, N);
        Series ts = chart_series(d.uniformizer, P, N);
        if (ts.is_zero() || ts.val() != 1) throw PrecisionExhausted("uniformizer expansion too short");
        Series st = ts.reverse();  // s as a series in t
        Series out;
        if (fs.is_zero()) {
            out = Series::zero(fs.field(), fs.prec());
        } else {
            Series unit(fs.field(), 0, fs.coeffs(), fs.prec() - fs.val());
            out = st.pow(fs.val()) * unit.compose(st);
        }
        if (out.prec() < precision) throw PrecisionExhausted("expansion too short");
        return out.truncate(precision);
    });
}

/// Res_P(omega), traced down to k.
inline Elem residue(const Differential& w, const Place& P) {
    if (w.is_zero()) return 0;
    const Series s = with_precision(2, [&](int N) {
        const Chart c = chart_at(P, N);
        Series r = chart_series(w.coeff(), P, N) * c.x.derivative();
        if (r.prec() < 0) throw PrecisionExhausted("residue not determined");
        return r;
    });
    return relative_trace(P.extension(), s.coeff(-1));
}

// ---------------------------------------------------------------------------
// Divisors

namespace detail {

inline void add_places_over_factors(const CurvePtr& X, const Poly& f, std::vector<Place>& out) {
    if (f.degree() <= 0) return;
    for (const auto& [g, e] : factor(f))
        for (const Place& P : places_over(X, g)) out.push_back(P);
}

}  // namespace detail

/// Places where f may have a zero or a pole (a superset of its support).
inline std::vector<Place> candidate_places(const FuncElem& f) {
    const CurvePtr& X = f.curve();
    std::vector<Place> out;
    Poly dens = f.u().den() * f.v().den();
    if (f.v().is_zero())
        detail::add_places_over_factors(X, f.u().num() * f.u().den(), out);
    else
        detail::add_places_over_factors(X, f.norm().num() * dens, out);
    out.push_back(infinity_place(X));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// div(f) for f != 0.
inline Divisor principal_divisor(const FuncElem& f) {
    if (f.is_zero()) throw DomainError("divisor of zero");
    Divisor D;
    for (const Place& P : candidate_places(f)) {
        int v = valuation(f, P);
        if (v) D[P] = v;
    }
    return D;
}

/// The function whose divisor equals div(dx): 1 on P1 (with -2 infinity added
/// separately) and 2y + h on elliptic curves, whose divisor is that of dx.
inline FuncElem dx_divisor_function(const CurvePtr& X) {
    if (X->is_p1()) return FuncElem::constant(X, 1);
    const Field* k = X->k();
    return FuncElem::y(X).scale(k->from_int(2)) + FuncElem(X, RatFunc(X->h()));
}

/// div(omega) for omega != 0.
inline Divisor differential_divisor(const Differential& w) {
    const CurvePtr& X = w.coeff().curve();
    Divisor D = principal_divisor(w.coeff() * dx_divisor_function(X));
    if (X->is_p1()) D = D + Divisor{{infinity_place(X), -2}};
    return D;
}

/// Places where omega has a pole.
inline std::vector<Place> poles_of(const Differential& w) {
    std::vector<Place> out;
    for (const auto& [P, n] : differential_divisor(w))
        if (n < 0) out.push_back(P);
    return out;
}

/// Poles of f (places with negative valuation) with their orders.
inline Divisor pole_divisor(const FuncElem& f) {
    Divisor D;
    for (const auto& [P, n] : principal_divisor(f))
        if (n < 0) D[P] = -n;
    return D;
}

// ---------------------------------------------------------------------------
// Riemann-Roch spaces

/// Basis of L(n*infinity), ordered by pole order at infinity.
inline std::vector<FuncElem> riemann_roch_basis(const CurvePtr& X, int n) {
    std::vector<FuncElem> out;
    if (n < 0) return out;
    const FuncElem x = FuncElem::x(X);
    if (X->is_p1()) {
        FuncElem m = FuncElem::constant(X, 1);
        for (int i = 0; i <= n; ++i, m *= x) out.push_back(m);
        return out;
    }
    const FuncElem y = FuncElem::y(X);
    for (int ord = 0; ord <= n; ++ord) {
        if (ord == 1) continue;
        if (ord % 2 == 0)
            out.push_back(x.pow(ord / 2));
        else
            out.push_back(x.pow((ord - 3) / 2) * y);
    }
    return out;
}

/// Pole order at infinity of the i-th element of riemann_roch_basis.
inline int rr_pole_order(const CurvePtr& X, std::size_t i) {
    if (X->is_p1()) return static_cast<int>(i);
    return i == 0 ? 0 : static_cast<int>(i) + 1;
}

/// Linear conditions over k on coefficient vectors of a fixed family.
class JetSystem {
   public:
    JetSystem(const CurvePtr& X, std::vector<FuncElem> family) : X_(X), family_(std::move(family)) {}

    /// Requires coeff_{s^r}(sum c_i phi_i) = target for r in [0, values.size()) at P (chart parameter).
    void prescribe(const Place& P, const std::vector<Elem>& values, int offset = 0) {
        if (values.empty()) return;
        const int prec = offset + static_cast<int>(values.size());
        std::vector<Series> ex;
        for (const auto& phi : family_) ex.push_back(chart_expand(phi, P, prec));
        for (std::size_t r = 0; r < values.size(); ++r) {
            const int e = offset + static_cast<int>(r);
            std::vector<std::vector<Elem>> cols;
            for (const auto& s : ex) cols.push_back(P.k_coords(s.coeff(e)));
            auto rhs = P.k_coords(values[r]);
            for (std::size_t slot = 0; slot < rhs.size(); ++slot) {
                std::vector<Elem> row(family_.size());
                for (std::size_t i = 0; i < family_.size(); ++i) row[i] = cols[i][slot];
                rows_.push_back(std::move(row));
                rhs_.push_back(rhs[slot]);
            }
        }
    }
    /// Requires vanishing to order >= m at P.
    void vanish(const Place& P, int m) {
        if (m <= 0) return;
        prescribe(P, std::vector<Elem>(static_cast<std::size_t>(m), 0));
    }

    std::optional<FuncElem> solve() const {
        const Field& k = X_->field();
        auto sol = tamecurves::solve(k, rows_, rhs_, family_.size());
        if (!sol) return std::nullopt;
        return combine(*sol);
    }
    std::vector<FuncElem> kernel_basis() const {
        const Field& k = X_->field();
        std::vector<FuncElem> out;
        for (const auto& v : tamecurves::kernel(k, rows_, family_.size())) out.push_back(combine(v));
        return out;
    }
    FuncElem combine(const std::vector<Elem>& c) const {
        FuncElem r(X_);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) r += family_[i].scale(c[i]);
        return r;
    }
    const std::vector<FuncElem>& family() const { return family_; }

   private:
    CurvePtr X_;
    std::vector<FuncElem> family_;
    Matrix rows_;
    std::vector<Elem> rhs_;
};

/// Basis of L(D) = {f : div(f) + D >= 0}.
inline std::vector<FuncElem> riemann_roch_space(const CurvePtr& X, const Divisor& D) {
    const Field* k = X->k();
    const Place inf = infinity_place(X);
    long n_inf = 0;
    std::map<std::vector<Elem>, long> need;  // pi -> exponent in Delta
    for (const auto& [P, n] : D) {
        if (P.is_infinity()) {
            n_inf = n;
            continue;
        }
        if (n > 0) {
            long c = (n + P.x_order() - 1) / P.x_order();
            long& slot = need[P.minpoly().coeffs()];
            slot = std::max(slot, c);
        }
    }
    Poly Delta = Poly::one(k);
    for (const auto& [pc, c] : need) Delta *= Poly(k, pc).pow(static_cast<std::uint64_t>(c));
    const int ex = inf.x_order();
    const long N = n_inf + ex * Delta.degree();
    if (N < 0) return {};
    std::vector<FuncElem> fam = riemann_roch_basis(X, static_cast<int>(N));
    JetSystem sys(X, fam);
    const FuncElem DeltaF(X, RatFunc(Delta));
    std::vector<Place> conds;
    for (const auto& [P, n] : D)
        if (!P.is_infinity()) conds.push_back(P);
    for (const auto& [pc, c] : need)
        for (const Place& P : places_over(X, Poly(k, pc))) conds.push_back(P);
    std::sort(conds.begin(), conds.end());
    conds.erase(std::unique(conds.begin(), conds.end()), conds.end());
    for (const Place& P : conds) {
        auto it = D.find(P);
        const long nP = it == D.end() ? 0 : it->second;
        const long m = valuation(DeltaF, P) - nP;
        sys.vanish(P, static_cast<int>(m));
    }
    std::vector<FuncElem> out;
    for (const auto& f : sys.kernel_basis()) out.push_back(f / DeltaF);
    return out;
}

}  // namespace tamecurves

#endif  // TAMECURVES_PLACE_HPP

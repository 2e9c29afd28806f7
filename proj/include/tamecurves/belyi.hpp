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

#ifndef TAMECURVES_BELYI_HPP
#define TAMECURVES_BELYI_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "conic.hpp"
#include "sieve.hpp"

namespace tamecurves {

struct BelyiOptions {
    std::uint64_t seed = 1;
    long max_degree = 600;       // cap on deg f0 * (q' - 1)
    int candidate_trials = 400;  // fallback search budget
    int max_pole_order = 12;
};

struct BelyiResult {
    FuncElem map;
    FuncElem base;  // the tame f0
    std::uint64_t q_prime = 0;
    std::vector<Place> branch;
    bool tame = false;
    bool base_from_search = false;
};

namespace detail {

/// Smallest s such that every branch point of f0 is GF(q^s)-rational.
inline std::uint32_t branch_field_degree(const FuncElem& f0) {
    std::uint32_t s = 1;
    for (const Place& Q : branch_locus(f0))
        if (!Q.is_infinity()) s = std::lcm(s, Q.degree());
    return s;
}

/// q^s, or nullopt past the 64-bit range.
inline std::optional<std::uint64_t> field_power(std::uint64_t q, std::uint32_t s) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        if (r > UINT64_MAX / q) return std::nullopt;
        r *= q;
    }
    return r;
}

inline std::optional<long> composed_degree(const FuncElem& f0, std::uint64_t qp) {
    const long d = function_degree(f0);
    if (qp - 1 > static_cast<std::uint64_t>(LONG_MAX / std::max(1L, d))) return std::nullopt;
    return d * static_cast<long>(qp - 1);
}

inline bool on_zero_one_infinity(const std::vector<Place>& branch) {
    for (const Place& Q : branch) {
        if (Q.is_infinity()) continue;
        if (Q.degree() != 1) return false;
        const Poly& m = Q.minpoly();
        const Elem r = m.field()->neg(m[0]);
        if (r != 0 && r != 1) return false;
    }
    return true;
}

/// A tame f0 from the construction for the characteristic of X.
inline std::optional<FuncElem> pipeline_base(const CurvePtr& X, const BelyiOptions& opt) {
    const Field& k = X->field();
    if (X->is_p1()) return FuncElem::x(X);
    if (k.characteristic() == 2) {
        std::optional<FuncElem> t;
        if (X->kind() == CurveKind::Ordinary)
            t = ec_ordinary_analysis(X->field_ptr(), X->param_a(), X->param_b(), true).tame;
        else
            t = ec_supersingular_analysis(X->field_ptr(), X->param_a(), X->param_b(), 0, true).tame;
        if (!t) return std::nullopt;
        return FuncElem(X, t->u(), t->v());
    }
    for (int n = 4; n <= 8; ++n) {
        SieveOptions so;
        so.seed = opt.seed + static_cast<std::uint64_t>(n);
        auto [f, st] = random_simply_ramified_search(X, n, 200, so);
        if (f) return f;
    }
    return std::nullopt;
}

/// Seeded search over small elements of L(n inf) for a tame f0 whose
/// composition degree is minimal.
inline std::optional<FuncElem> searched_base(const CurvePtr& X, const BelyiOptions& opt) {
    const Field& k = X->field();
    std::mt19937_64 rng(opt.seed);
    std::optional<FuncElem> best;
    long best_deg = LONG_MAX;
    const std::vector<FuncElem> basis = riemann_roch_basis(X, opt.max_pole_order);
    // pole orders prime to p, so infinity is tamely ramified
    std::vector<int> orders;
    for (int n = 1; n <= opt.max_pole_order; ++n)
        if (n % static_cast<int>(k.characteristic()) != 0 && (X->is_p1() || n != 1)) orders.push_back(n);
    if (orders.empty()) return std::nullopt;
    for (int t = 0; t < opt.candidate_trials; ++t) {
        // pole order grows with the trial index
        const int n = orders[static_cast<std::size_t>(t) * orders.size() / static_cast<std::size_t>(opt.candidate_trials)];
        FuncElem f(X);
        for (std::size_t i = 0; i < basis.size() && rr_pole_order(X, i) <= n; ++i) {
            Elem c = rng() % k.size();
            if (rr_pole_order(X, i) == n && c == 0) c = 1 + rng() % (k.size() - 1);
            f += basis[i].scale(c);
        }
        if (f.is_constant() || f.derivative().is_zero()) continue;
        try {
            if (!is_tame(f)) continue;
            auto qp = field_power(k.size(), branch_field_degree(f));
            if (!qp) continue;
            auto d = composed_degree(f, *qp);
            if (d && *d < best_deg) {
                best = f;
                best_deg = *d;
            }
        } catch (const InvalidField&) {
            continue;
        }
    }
    if (best && best_deg <= opt.max_degree) return best;
    return std::nullopt;
}

}  // namespace detail

/// x^(q'-1) o f0 with q' the least power of q over which all branch points of
/// f0 are rational.
inline FuncElem belyi_from(const FuncElem& f0) {
    const std::uint64_t q = f0.curve()->field().size();
    auto qp = detail::field_power(q, detail::branch_field_degree(f0));
    if (!qp) throw SearchExhausted("branch field too large");
    return f0.pow(static_cast<std::int64_t>(*qp - 1));
}

inline BelyiResult belyi_construct(const CurvePtr& X, const BelyiOptions& opt = {}) {
    BelyiResult r{FuncElem(X), FuncElem(X)};
    const std::uint64_t q = X->field().size();
    std::optional<FuncElem> f0;
    try {
        f0 = detail::pipeline_base(X, opt);
    } catch (const SearchExhausted&) {
        f0.reset();
    }
    if (f0) {
        auto qp = detail::field_power(q, detail::branch_field_degree(*f0));
        auto d = qp ? detail::composed_degree(*f0, *qp) : std::nullopt;
        if (!d || *d > opt.max_degree) f0.reset();
    }
    if (!f0) {
        f0 = detail::searched_base(X, opt);
        r.base_from_search = true;
    }
    if (!f0) throw SearchExhausted("no tame base map with a small enough branch field");
    r.base = *f0;
    r.q_prime = *detail::field_power(q, detail::branch_field_degree(*f0));
    r.map = f0->pow(static_cast<std::int64_t>(r.q_prime - 1));
    r.branch = branch_locus(r.map);
    r.tame = is_tame(r.map);
    if (!r.tame || !detail::on_zero_one_infinity(r.branch))
        throw SearchExhausted("composed map failed verification");
    return r;
}

/// Tame f with branch locus in {0, 1, inf}.
inline FuncElem belyi_map(const CurvePtr& X, const BelyiOptions& opt = {}) { return belyi_construct(X, opt).map; }

}  // namespace tamecurves

#endif  // TAMECURVES_BELYI_HPP

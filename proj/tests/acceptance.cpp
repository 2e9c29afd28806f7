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

// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"

namespace tc = tamecurves;
using namespace testsupport;
using tc::Elem;
using tc::FuncElem;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

FuncElem cst(const tc::CurvePtr& X, Elem c) { return FuncElem::constant(X, c); }

Elem root(const tc::Field& k, Elem a, int times) {
    for (int i = 0; i < times; ++i) a = k.inv_frobenius(a);
    return a;
}

FuncElem nonzero_function(const tc::CurvePtr& X, std::mt19937_64& rng, int deg) {
    for (;;) {
        FuncElem t = random_function(X, rng, deg);
        if (!t.is_zero()) return t;
    }
}

/// One of the three generators of the action, with random entries.
tc::GammaElem random_generator(const tc::CurvePtr& X, std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: return tc::GammaElem::scaling(nonzero_function(X, rng, 2));
        case 1: return tc::GammaElem::translation(random_function(X, rng, 2));
        default: return tc::GammaElem::inversion(X);
    }
}

/// Order of the differential h dx at P.
int differential_order(const FuncElem& h, const tc::Place& P) {
    const tc::Divisor dx = tc::differential_divisor(tc::Differential(cst(h.curve(), 1)));
    auto it = dx.find(P);
    return tc::valuation(h, P) + (it == dx.end() ? 0 : static_cast<int>(it->second));
}

// 1
Verdict symbol_axioms() {
    Verdict v;
    long checked = 0;
    auto run = [&](const tc::CurvePtr& X, int count, int deg, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            FuncElem f = random_separating(X, rng, deg), g = random_separating(X, rng, deg),
                     h = random_separating(X, rng, deg);
            const tc::Differential fg = tc::sy(f, g);
            bool ok = fg == tc::sy(g, f);
            ok = ok && (fg + tc::sy(g, h) + tc::sy(h, f)).is_zero();
            for (int j = 0; j < 3 && ok; ++j) {
                const FuncElem gf = tc::gamma_apply(random_generator(X, rng), f);
                ok = tc::sy(gf, g) == fg;
            }
            if (!ok) {
                v.ok = false;
                v.detail = "failed on f = " + tc::to_string(f) + ", g = " + tc::to_string(g);
                return;
            }
            ++checked;
        }
    };
    run(curve("GF(4)", "P1"), 200, 5, 101);
    if (v.ok) run(curve("GF(2)", "ES(a=0,b=1)"), 50, 2, 102);
    if (v.ok) v.detail = std::to_string(checked) + " triples";
    return v;
}

// 2
Verdict orbit_criterion() {
    Verdict v;
    auto X = curve("GF(4)", "P1");
    std::mt19937_64 rng(201);
    int zero = 0, nonzero = 0;
    for (int i = 0; i < 100; ++i) {
        FuncElem f = random_separating(X, rng, 4), gf = f;
        const int steps = 1 + static_cast<int>(rng() % 4);
        for (int s = 0; s < steps; ++s) gf = tc::gamma_apply(random_generator(X, rng), gf);
        if (tc::sy(f, gf).is_zero()) ++zero;
    }
    // low-degree functions often share an orbit (all of degree 1 do), so generic pairs have exact degree 5
    auto generic = [&]() {
        for (;;) {
            const FuncElem f(X, tc::RatFunc(random_poly(X->k(), 5, rng), random_poly(X->k(), 4, rng, true)));
            if (f.is_separating() && tc::function_degree(f) == 5) return f;
        }
    };
    for (int i = 0; i < 100; ++i) {
        const FuncElem f = generic(), g = generic();
        if (!tc::sy(f, g).is_zero()) ++nonzero;
    }
    v.ok = zero == 100 && nonzero == 100;
    v.detail = "orbit pairs with SY = 0: " + std::to_string(zero) + "/100, generic pairs with SY != 0: " +
               std::to_string(nonzero) + "/100";
    return v;
}

// 3
Verdict quartic_decomposition() {
    Verdict v;
    const std::vector<std::pair<const char*, const char*>> models{
        {"GF(2)", "P1"}, {"GF(4)", "P1"}, {"GF(2)", "EO(a=0,b=1)"}, {"GF(2)", "ES(a=0,b=1)"}, {"GF(8)", "EO(a=w,b=w^2)"}};
    int ok = 0;
    std::mt19937_64 rng(301);
    for (int i = 0; i < 500; ++i) {
        auto X = curve(models[static_cast<std::size_t>(i) % models.size()].first,
                       models[static_cast<std::size_t>(i) % models.size()].second);
        FuncElem f = random_separating(X, rng, 3), g = random_separating(X, rng, 3);
        auto q = tc::quartic_decompose(f, g);
        FuncElem s = q.f1 * q.f1 + q.f3 * q.f3 * g;
        if (q.recompose() == f && s * s == f.derivative() / g.derivative()) ++ok;
    }
    int golden = 0;
    for (const char* F : {"GF(2)", "GF(4)", "GF(8)"}) {
        auto k = tc::parse_field(F);
        for (int i = 0; i < 10; ++i) {
            const Elem a = random_elem(*k, rng), b = random_nonzero(*k, rng);
            auto X = tc::Curve::ordinary(k, a, b);
            const Elem A = root(*k, a, 2), B = root(*k, b, 3);
            const FuncElem x = FuncElem::x(X), y = FuncElem::y(X), B4 = cst(X, k->pow(B, 4));
            auto q = tc::quartic_decompose((y + B4) * x.pow(3), x);
            if (q.f0 == y + x.scale(k->add(k->mul(A, A), A)) + B4 && q.f1 == x && q.f2 == x + cst(X, k->mul(B, B)) &&
                q.f3 == cst(X, B))
                ++golden;
        }
    }
    v.ok = ok == 500 && golden == 30;
    v.detail = std::to_string(ok) + "/500 decompositions, " + std::to_string(golden) + "/30 golden cases";
    return v;
}

// 4
Verdict pseudotame_regular() {
    Verdict v;
    std::mt19937_64 rng(401);
    int agree = 0, pseudo = 0;
    const std::vector<std::pair<const char*, const char*>> models{
        {"GF(2)", "P1"}, {"GF(4)", "P1"}, {"GF(2)", "EO(a=0,b=1)"}, {"GF(2)", "ES(a=0,b=1)"}};
    for (int i = 0; i < 50; ++i) {
        const auto& [F, M] = models[static_cast<std::size_t>(i) % models.size()];
        auto X = curve(F, M);
        std::vector<tc::Place> places = tc::places_of_degree(X, 1);
        for (const auto& P : tc::places_of_degree(X, 2)) places.push_back(P);
        const tc::Place P = places[rng() % places.size()];
        const FuncElem t = P.uniformizer();
        // f = r^4 + t^j s mixes pseudotame and non-pseudotame behaviour at P
        FuncElem f(X);
        while (!f.is_separating()) {
            const FuncElem r = random_function(X, rng, 2), s = nonzero_function(X, rng, 2);
            f = r.fourth() + t.pow(1 + static_cast<std::int64_t>(rng() % 7)) * s;
        }
        const bool by_index = tc::pseudotame_at(f, P);
        const tc::Differential w = tc::sy(f, t);
        const bool regular = w.is_zero() || differential_order(w.coeff(), P) >= 0;
        if (by_index == regular) ++agree;
        else v.detail = "disagreement at " + tc::to_string(P) + " for " + tc::to_string(f) + "; ";
        pseudo += by_index;
    }
    v.ok = agree == 50;
    v.detail += std::to_string(agree) + "/50 agree (" + std::to_string(pseudo) + " pseudotame, " +
                std::to_string(50 - pseudo) + " not)";
    return v;
}

// 5
Verdict tame_lift() {
    Verdict v;
    std::vector<FuncElem> inputs;
    auto P12 = curve("GF(2)", "P1");
    auto P14 = curve("GF(4)", "P1");
    for (const char* s : {"x^4+x^5", "x^5+x^4+x", "x^3+1/x^4+1/x"}) inputs.push_back(fn(P12, s));
    for (const char* s : {"x^5+w*x^4", "x^5+w*x^4+x", "x^4+x^5+w"}) inputs.push_back(fn(P14, s));
    // symbol_solve outputs with target x^3 + c^2 x on supersingular models; over GF(2) the pair a = c = 1
    // is left out because its lift needs places beyond the residue field limit
    for (const char* F : {"GF(2)", "GF(4)"}) {
        auto k = tc::parse_field(F);
        for (Elem a = 0; a < (k->size() == 2 ? 2u : 1u); ++a)
            for (Elem b = 0; b < 2; ++b)
                for (Elem c = 0; c < k->size(); ++c) {
                    if (k->size() == 2 && a == 1 && c == 1) continue;
                    auto X = tc::Curve::supersingular(k, a, b);
                    const FuncElem x = FuncElem::x(X);
                    inputs.push_back(tc::symbol_solve(x, x.pow(3) + x.scale(k->mul(c, c))));
                }
    }
    int ok = 0;
    for (const FuncElem& f : inputs) {
        if (!tc::is_pseudotame(f)) {
            v.detail += "input not pseudotame: " + tc::to_string(f) + "; ";
            continue;
        }
        try {
            const FuncElem g = tc::pseudotame_to_tame(f);
            const auto rh = tc::riemann_hurwitz_check(g);
            if (tc::is_tame(g) && tc::same_orbit(f, g) && rh.holds) ++ok;
            else v.detail += "lift check failed for " + tc::to_string(f) + "; ";
        } catch (const tc::Error& e) {
            v.detail += std::string(e.what()) + " for " + tc::to_string(f) + " on " + tc::curve_literal(*f.curve()) + "; ";
        }
    }
    v.ok = ok == static_cast<int>(inputs.size()) && inputs.size() == 20;
    v.detail += std::to_string(ok) + "/" + std::to_string(inputs.size()) + " lifts verified";
    return v;
}

// 6
Verdict ordinary_closed_form() {
    Verdict v;
    int ok = 0, total = 0;
    for (const char* F : {"GF(2)", "GF(4)", "GF(8)"}) {
        auto k = tc::parse_field(F);
        std::mt19937_64 rng(601);
        for (int i = 0; i < 20; ++i, ++total) {
            const Elem a = random_elem(*k, rng), b = random_nonzero(*k, rng);
            auto r = tc::ec_ordinary_analysis(k, a, b, false);
            // the conic displayed as (1 + B^2/x) T1^2 + (x + B^2) T3^2
            const Elem B2 = root(*k, b, 2);
            auto X = r.conic.g.curve();
            const FuncElem x = FuncElem::x(X);
            const bool conic = r.conic.g == x && r.conic.b == cst(X, 1) + cst(X, B2) / x &&
                               r.conic.b * r.conic.g == x + cst(X, B2);
            if (r.symbol_ok && r.split_ok && r.regular_ok && r.conic_ok && conic) ++ok;
        }
    }
    v.ok = ok == total;
    v.detail = std::to_string(ok) + "/" + std::to_string(total) + " parameter pairs";
    return v;
}

// 7
Verdict supersingular_points() {
    Verdict v;
    int ok = 0, total = 0;
    for (const char* F : {"GF(2)", "GF(4)", "GF(8)"}) {
        auto k = tc::parse_field(F);
        std::mt19937_64 rng(701);
        for (int i = 0; i < 20; ++i, ++total) {
            const Elem a = random_elem(*k, rng), b = random_elem(*k, rng), c = random_elem(*k, rng);
            auto r = tc::ec_supersingular_analysis(k, a, b, c, false);
            auto X = tc::Curve::supersingular(k, a, b);
            const FuncElem x = FuncElem::x(X);
            const FuncElem target = x.pow(3) + x.scale(k->mul(c, c));
            // (c^(1/2) : c^(1/4) : 1) on T1 T3 + T2^2 + x T1^2 + c x T3^2
            const tc::ConicFiber simplified{cst(X, c), x};
            const bool on_simplified =
                tc::conic_contains(simplified, {cst(X, root(*k, c, 1)), cst(X, root(*k, c, 2)), cst(X, 1)});
            const FuncElem f = tc::symbol_solve(x, target);
            const bool solved = tc::sy(f, x) == tc::Differential::d(target);
            if (on_simplified && r.simplified_ok && r.point_ok && r.conic_ok && solved && r.pseudotame) ++ok;
        }
    }
    v.ok = ok == total;
    v.detail = std::to_string(ok) + "/" + std::to_string(total) + " parameter triples";
    return v;
}

// 8
Verdict trace_trichotomy() {
    Verdict v;
    long pairs = 0, trich = 0, analysed = 0;
    for (std::uint32_t m = 1; m <= 4; ++m) {
        auto k = tc::Field::make(2, m);
        for (Elem a = 0; a < k->size(); ++a)
            for (Elem b = 1; b < k->size(); ++b) {
                ++pairs;
                if (k->trace_to_prime(a) == 0 || k->trace_to_prime(b) == 0 || k->trace_to_prime(k->add(a, b)) == 0) ++trich;
                auto r = tc::ec_ordinary_analysis(k, a, b, false);
                if (r.point && r.point_ok && r.pseudotame) ++analysed;
            }
    }
    v.ok = trich == pairs && analysed == pairs;
    v.detail = std::to_string(trich) + "/" + std::to_string(pairs) + " pairs with a vanishing trace, " +
               std::to_string(analysed) + " analyses succeeded";
    return v;
}

// 9
Verdict sieve_density() {
    Verdict v;
    auto k3 = tc::parse_field("GF(3)");
    const std::uint64_t bad = tc::bad_jet_count(*k3);
    auto X3 = curve("GF(3)", "P1");
    const tc::Rational exact = tc::exhaustive_simple_fraction(X3, 2);
    tc::SieveOptions o3;
    o3.seed = 901;
    auto [f3, s3] = tc::random_simply_ramified_search(X3, 2, 20000, o3);
    const double p3 = static_cast<double>(exact), e3 = static_cast<double>(s3.empirical);
    const double sig3 = std::sqrt(p3 * (1 - p3) / 20000.0);
    auto X5 = curve("GF(5)", "P1");
    tc::SieveOptions o5;
    o5.seed = 902;
    auto [f5, s5] = tc::random_simply_ramified_search(X5, 3, 20000, o5);
    const double p5 = static_cast<double>(tc::predicted_density(X5, 2)), e5 = static_cast<double>(s5.empirical);
    const double sig5 = std::sqrt(p5 * (1 - p5) / 20000.0);
    const bool i = bad == 2 * 81 - 9;
    const bool ii = std::abs(e3 - p3) <= 3 * sig3;
    const bool iii = std::abs(e5 - p5) <= std::max(0.03, 3 * sig5);
    v.ok = i && ii && iii;
    std::ostringstream d;
    d << "bad jets " << bad << "; GF(3) n=2 exact " << exact << " (" << p3 << ") vs " << e3 << " (3 sigma "
      << 3 * sig3 << "); GF(5) n=3 predicted " << p5 << " vs " << e5;
    v.detail = d.str();
    return v;
}

// 10
Verdict belyi() {
    Verdict v;
    int ok = 0, total = 0;
    for (const auto& [F, M] : std::vector<std::pair<const char*, const char*>>{
             {"GF(2)", "P1"}, {"GF(3)", "P1"}, {"GF(4)", "P1"}, {"GF(2)", "ES(a=0,b=1)"}, {"GF(2)", "EO(a=0,b=1)"}}) {
        ++total;
        auto X = curve(F, M);
        try {
            const FuncElem f = tc::belyi_map(X);
            bool good = tc::is_tame(f);
            for (const auto& Q : tc::branch_locus(f)) {
                if (Q.is_infinity()) continue;
                const Elem c = Q.residue_field().neg(Q.minpoly()[0]);
                good = good && Q.degree() == 1 && (c == 0 || c == 1);
            }
            if (good) ++ok;
            else v.detail += std::string("bad map on ") + M + "/" + F + "; ";
        } catch (const tc::Error& e) {
            v.detail += std::string(e.what()) + " on " + M + "/" + F + "; ";
        }
    }
    int wild = 0;
    for (const char* F : {"GF(2)", "GF(3)", "GF(5)"}) {
        auto X = curve(F, "P1");
        const auto p = static_cast<std::int64_t>(X->field().characteristic());
        const FuncElem f = FuncElem::x(X).pow(p) + FuncElem::x(X).inv();
        if (names(tc::branch_locus(f)) == std::vector<std::string>{"inf"}) ++wild;
    }
    v.ok = ok == total && wild == 3;
    v.detail += std::to_string(ok) + "/" + std::to_string(total) + " Belyi maps verified, " + std::to_string(wild) +
                "/3 wild fixtures branched only over inf";
    return v;
}

// 11
Verdict residue_theorem() {
    Verdict v;
    int ok = 0, total = 0;
    for (const auto& [F, M] : std::vector<std::pair<const char*, const char*>>{{"GF(2)", "P1"},
                                                                             {"GF(3)", "P1"},
                                                                             {"GF(2)", "EO(a=0,b=1)"},
                                                                             {"GF(4)", "ES(a=w,b=1)"},
                                                                             {"GF(5)", "W(A=1,B=1)"}}) {
        auto X = curve(F, M);
        std::mt19937_64 rng(1101);
        for (int i = 0; i < 100; ++i, ++total) {
            const tc::Differential w(nonzero_function(X, rng, 3));
            Elem sum = 0;
            for (const auto& P : tc::poles_of(w)) sum = X->field().add(sum, tc::residue(w, P));
            if (sum == 0) ++ok;
        }
    }
    v.ok = ok == total;
    v.detail = std::to_string(ok) + "/" + std::to_string(total) + " differentials";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;  // 0: no stated limit
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "symbol axioms", 60, symbol_axioms},
        {2, "orbit criterion", 30, orbit_criterion},
        {3, "quartic decomposition", 0, quartic_decomposition},
        {4, "pseudotame versus regular symbol", 0, pseudotame_regular},
        {5, "tame lift", 300, tame_lift},
        {6, "ordinary closed form", 0, ordinary_closed_form},
        {7, "supersingular conic point", 0, supersingular_points},
        {8, "trace trichotomy", 120, trace_trichotomy},
        {9, "sieve density", 180, sieve_density},
        {10, "Belyi maps", 300, belyi},
        {11, "residue theorem", 60, residue_theorem},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = v.ok && in_time;
        failures += !pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << v.detail << "; "
             << std::fixed;
        line.precision(1);
        line << secs << " s";
        if (c.limit_seconds > 0) line << " (limit " << c.limit_seconds << " s)";
        std::cout << line.str() << std::endl;
    }
    return failures ? 1 : 0;
}

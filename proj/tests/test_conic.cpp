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

#include <gtest/gtest.h>

#include "support.hpp"

namespace tc = tamecurves;
using namespace testsupport;
using tc::Elem;
using tc::FuncElem;

namespace {

FuncElem cst(const tc::CurvePtr& X, Elem c) { return FuncElem::constant(X, c); }

Elem root(const tc::Field& k, Elem a, int times) {
    for (int i = 0; i < times; ++i) a = k.inv_frobenius(a);
    return a;
}

}  // namespace

TEST(Conic, FiberExamples) {
    auto k = tc::parse_field("GF(8)");
    Elem b = k->gen(), B = root(*k, b, 3), c = k->add(k->gen(), 1);
    auto EO = tc::Curve::ordinary(k, 1, b);
    FuncElem x = FuncElem::x(EO);
    auto C = tc::conic_fiber(x, x + cst(EO, k->pow(B, 4)) / x);
    EXPECT_EQ(C.b, cst(EO, 1) + cst(EO, k->mul(B, B)) / x);
    auto ES = tc::Curve::supersingular(k, 0, 1);
    FuncElem xs = FuncElem::x(ES);
    auto D = tc::conic_fiber(xs, xs.pow(3) + xs.scale(k->mul(c, c)));
    EXPECT_EQ(D.b, xs + cst(ES, c));
    EXPECT_EQ(D.b * D.g, xs * xs + xs.scale(c));
    EXPECT_THROW(tc::conic_fiber(xs, xs * xs), tc::NotASquare);
}

TEST(Conic, ContainsExamples) {
    auto k = tc::parse_field("GF(8)");
    auto X = tc::Curve::supersingular(k, 0, 1);
    for (Elem c = 0; c < 8; ++c) {
        tc::ConicFiber simplified{cst(X, c), FuncElem::x(X)};
        EXPECT_TRUE(tc::conic_contains(simplified, {cst(X, root(*k, c, 1)), cst(X, root(*k, c, 2)), cst(X, 1)}));
    }
    auto C = tc::conic_fiber(FuncElem::x(X), fn(X, "x^3+x"));
    EXPECT_FALSE(tc::conic_contains(C, {cst(X, 1), FuncElem(X), FuncElem(X)}));
}

TEST(Conic, ArtinSchreierExamples) {
    auto P1 = curve("GF(2)", "P1");
    auto s = tc::as_solve_funcfield(fn(P1, "x^2+x"), tc::parse_divisor(P1, "2*inf"));
    ASSERT_TRUE(s.z.has_value());
    EXPECT_EQ(*s.z, fn(P1, "x"));
    auto n = tc::as_solve_funcfield(fn(P1, "x"), tc::parse_divisor(P1, "3*inf"));
    EXPECT_FALSE(n.z.has_value());
    EXPECT_TRUE(n.conclusive);
}

TEST(Conic, ArtinSchreierOrdinary) {
    auto k = tc::parse_field("GF(8)");
    for (Elem a = 0; a < 8; ++a) {
        if (k->trace_to_prime(a) != 0) continue;
        for (Elem b = 1; b < 8; ++b) {
            auto X = tc::Curve::ordinary(k, a, b);
            Elem A = root(*k, a, 2), B = root(*k, b, 3);
            FuncElem x = FuncElem::x(X);
            FuncElem w = x + cst(X, k->pow(B, 4)) / x + cst(X, k->pow(A, 4));
            auto s = tc::as_solve_funcfield(w);
            ASSERT_TRUE(s.z.has_value());
            EXPECT_EQ(*s.z * *s.z + *s.z, w);
            EXPECT_FALSE(s.z->v().is_zero());
        }
    }
}

TEST(Conic, PointSearchChoices) {
    auto k = tc::parse_field("GF(8)");
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 1; b < 8; ++b) {
            auto r = tc::ec_ordinary_analysis(k, a, b, false);
            ASSERT_TRUE(r.uv_index.has_value());
            if (k->trace_to_prime(a) == 0) EXPECT_EQ(*r.uv_index, 0);
            else if (k->trace_to_prime(b) == 0) EXPECT_EQ(*r.uv_index, 1);
            else EXPECT_EQ(*r.uv_index, 2);
        }
}

TEST(Conic, DegenerateConic) {
    auto X = curve("GF(2)", "P1");
    tc::ConicFiber C{fn(X, "x"), FuncElem(X)};
    auto pt = tc::conic_point_search(C);
    ASSERT_TRUE(pt.has_value());
    EXPECT_TRUE(pt->t1.is_zero());
    EXPECT_TRUE(pt->t2.is_zero());
    EXPECT_EQ(pt->t3, cst(X, 1));
    EXPECT_TRUE(tc::conic_contains(C, *pt));
}

TEST(Conic, SymbolSolveExamples) {
    auto X = curve("GF(2)", "ES(a=0,b=1)");
    EXPECT_EQ(tc::symbol_solve(fn(X, "x"), cst(X, 1)), fn(X, "x"));
    auto k = tc::parse_field("GF(8)");
    auto Y = tc::Curve::supersingular(k, k->gen(), 1);
    FuncElem x = FuncElem::x(Y);
    for (Elem c = 0; c < 8; ++c) {
        FuncElem a = x.pow(3) + x.scale(k->mul(c, c));
        FuncElem f = tc::symbol_solve(x, a);
        EXPECT_EQ(tc::sy(f, x), tc::Differential::d(a));
        // the simplified-conic point gives f = x^6 + x^3 + (c + c^4) x^2 + c^2 x
        FuncElem expect = x.pow(6) + x.pow(3) + (x * x).scale(k->add(c, k->pow(c, 4))) + x.scale(k->mul(c, c));
        EXPECT_EQ(f, expect);
        auto r = tc::ec_supersingular_analysis(k, k->gen(), 1, c, false);
        ASSERT_TRUE(r.pseudotame.has_value());
        EXPECT_EQ(*r.pseudotame, expect);
    }
}

TEST(Conic, SymbolSolveErrors) {
    auto X = curve("GF(2)", "P1");
    EXPECT_THROW(tc::symbol_solve(fn(X, "x^2"), fn(X, "x")), tc::NotSeparating);
    EXPECT_THROW(tc::symbol_solve(fn(curve("GF(3)", "P1"), "x"), fn(curve("GF(3)", "P1"), "x^2")),
                 tc::CharacteristicMismatch);
}

TEST(Conic, OrdinaryAnalysisOverGF2) {
    auto r = tc::ec_ordinary_analysis(tc::parse_field("GF(2)"), 0, 1);
    EXPECT_TRUE(r.symbol_ok && r.decomposition_ok && r.split_ok && r.regular_ok && r.conic_ok && r.point_ok);
    EXPECT_EQ(r.traces, (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(r.uv_index, 0);
    ASSERT_TRUE(r.pseudotame.has_value());
    EXPECT_TRUE(tc::is_pseudotame(*r.pseudotame));
    ASSERT_TRUE(r.tame.has_value());
    EXPECT_TRUE(r.tame_ok);
}

TEST(Conic, OrdinaryDiagonal) {
    auto k = tc::parse_field("GF(16)");
    for (Elem a = 1; a < 16; ++a) {
        auto r = tc::ec_ordinary_analysis(k, a, a, false);
        EXPECT_EQ(r.traces[2], 0);
        EXPECT_TRUE(r.point_ok);
        EXPECT_TRUE(r.pseudotame.has_value());
    }
}

TEST(Conic, SupersingularAnalysis) {
    auto k = tc::parse_field("GF(8)");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        Elem a = random_elem(*k, rng), b = random_elem(*k, rng), c = random_elem(*k, rng);
        auto r = tc::ec_supersingular_analysis(k, a, b, c, false);
        EXPECT_TRUE(r.symbol_ok && r.split_ok && r.regular_ok && r.conic_ok && r.simplified_ok && r.point_ok);
        EXPECT_TRUE(r.pseudotame.has_value());
    }
    // c = 0: (0 : 0 : 1) on the simplified conic, (0 : x : 1) on the original one
    auto z = tc::ec_supersingular_analysis(k, 1, 1, 0, false);
    auto X = tc::Curve::supersingular(k, 1, 1);
    EXPECT_TRUE(tc::conic_contains(tc::ConicFiber{FuncElem(X), FuncElem::x(X)}, {FuncElem(X), FuncElem(X), cst(X, 1)}));
    ASSERT_TRUE(z.point.has_value());
    EXPECT_TRUE(z.point->t1.is_zero());
    EXPECT_EQ(z.point->t2, FuncElem::x(z.point->t2.curve()));
    EXPECT_TRUE(z.simplified_ok);
    EXPECT_TRUE(z.point_ok);
}

TEST(Conic, CyclicCoverIsTame) {
    auto k = tc::parse_field("GF(8)");
    for (Elem b = 0; b < 8; ++b) {
        auto X = tc::Curve::supersingular(k, 0, b);
        EXPECT_TRUE(tc::is_tame(FuncElem::y(X)));
    }
}

// Properties

TEST(ConicProperties, PointsGiveSolutions) {
    for (const char* F : {"GF(2)", "GF(4)", "GF(8)"}) {
        auto k = tc::parse_field(F);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 6; ++i) {
            auto X = tc::Curve::ordinary(k, random_elem(*k, rng), random_nonzero(*k, rng));
            FuncElem g = FuncElem::x(X);
            FuncElem a = random_function(X, rng, 2);
            if (tc::Differential::d(a).is_zero()) continue;
            try {
                FuncElem f = tc::symbol_solve(g, a);
                ASSERT_EQ(tc::sy(f, g), tc::Differential::d(a));
            } catch (const tc::NotASquare&) {
                // a / g is not a square here
            } catch (const tc::SearchExhausted&) {
            }
        }
    }
}

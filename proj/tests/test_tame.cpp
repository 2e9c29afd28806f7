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
using tc::FuncElem;

namespace {

struct Index {
    std::string place;
    long e;
    bool wild;
    std::string image;
};

std::vector<Index> profile(const FuncElem& f) {
    std::vector<Index> out;
    for (const auto& en : tc::ramification_profile(f).entries)
        out.push_back({tc::to_string(en.place), en.e, en.wild, tc::to_string(en.image)});
    return out;
}

void expect_tame_lift(const FuncElem& f) {
    FuncElem g = tc::pseudotame_to_tame(f);
    EXPECT_TRUE(tc::is_tame(g)) << tc::to_string(g);
    EXPECT_TRUE(tc::same_orbit(f, g));
    auto rh = tc::riemann_hurwitz_check(g);
    EXPECT_TRUE(rh.holds) << rh.lhs << " vs " << rh.rhs;
}

}  // namespace

TEST(Tame, ProfileExamples) {
    auto X3 = curve("GF(3)", "P1");
    auto p = profile(fn(X3, "x^2"));
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].place, "(x; 0)");
    EXPECT_EQ(p[0].e, 2);
    EXPECT_FALSE(p[0].wild);
    EXPECT_EQ(p[1].place, "inf");
    EXPECT_EQ(p[1].e, 2);
    EXPECT_EQ(tc::ramification_profile(fn(X3, "x^2")).degree, 2);

    auto X2 = curve("GF(2)", "P1");
    auto q = profile(fn(X2, "x^3+x"));
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0].place, "(x+1; 1)");
    EXPECT_EQ(q[0].e, 2);
    EXPECT_TRUE(q[0].wild);
    EXPECT_EQ(q[0].image, "(x; 0)");
    EXPECT_EQ(q[1].place, "inf");
    EXPECT_EQ(q[1].e, 3);
    EXPECT_FALSE(q[1].wild);
    EXPECT_EQ(tc::ramification_profile(fn(X2, "x^3+x")).degree, 3);
}

TEST(Tame, TameAndSimple) {
    auto X3 = curve("GF(3)", "P1");
    EXPECT_TRUE(tc::is_tame(fn(X3, "x^2")));
    EXPECT_TRUE(tc::is_simply_ramified(fn(X3, "x^2")));
    auto X2 = curve("GF(2)", "P1");
    EXPECT_TRUE(tc::is_tame(fn(X2, "x^3")));
    EXPECT_FALSE(tc::is_simply_ramified(fn(X2, "x^3")));
    // purely inseparable maps have no ramification profile
    EXPECT_THROW(tc::is_tame(fn(X2, "x^2")), tc::NotSeparating);
    EXPECT_THROW(tc::riemann_hurwitz_check(fn(X2, "x^2")), tc::NotSeparating);
}

TEST(Tame, PseudotameExamples) {
    auto X = curve("GF(2)", "P1");
    auto P0 = tc::parse_place(X, "(x; 0)");
    EXPECT_TRUE(tc::pseudotame_at(fn(X, "x^3+x^6"), P0));
    EXPECT_FALSE(tc::pseudotame_at(fn(X, "x^2"), P0));
    EXPECT_TRUE(tc::pseudotame_at(fn(X, "x^4+x^5"), P0));
    EXPECT_TRUE(tc::is_pseudotame(fn(X, "x^4+x^5")));
    EXPECT_FALSE(tc::is_tame(fn(X, "x^4+x^5")));
    EXPECT_FALSE(tc::is_pseudotame(fn(X, "x^2")));
    EXPECT_TRUE(tc::is_pseudotame(fn(X, "x^3")));
    EXPECT_THROW(tc::is_pseudotame(fn(curve("GF(3)", "P1"), "x")), tc::CharacteristicMismatch);
}

TEST(Tame, RiemannHurwitzExamples) {
    auto r = tc::riemann_hurwitz_check(fn(curve("GF(3)", "P1"), "x^2"));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, -2);
    EXPECT_EQ(r.rhs, -2);
    EXPECT_FALSE(r.D.has_value());
    auto w = tc::riemann_hurwitz_check(fn(curve("GF(2)", "P1"), "x^3+x"));
    EXPECT_FALSE(w.holds);
    auto t = tc::riemann_hurwitz_check(fn(curve("GF(2)", "P1"), "x^3"));
    EXPECT_TRUE(t.holds);
    ASSERT_TRUE(t.D.has_value());
    EXPECT_EQ(tc::divisor_degree(*t.D), 2);
}

TEST(Tame, BranchLocusExamples) {
    EXPECT_EQ(names(tc::branch_locus(fn(curve("GF(3)", "P1"), "x^2"))), (std::vector<std::string>{"(x; 0)", "inf"}));
    for (const char* F : {"GF(2)", "GF(3)", "GF(5)"}) {
        auto X = curve(F, "P1");
        const int p = static_cast<int>(X->field().characteristic());
        FuncElem f = FuncElem::x(X).pow(p) + FuncElem::x(X).inv();
        EXPECT_EQ(names(tc::branch_locus(f)), std::vector<std::string>{"inf"}) << F;
        EXPECT_FALSE(tc::is_tame(f));
    }
    // (x + w)^3 ramifies over 0 and infinity
    auto X4 = curve("GF(4; mod=w^2+w+1; gen=w)", "P1");
    EXPECT_EQ(names(tc::branch_locus(fn(X4, "(x+w)^3"))), (std::vector<std::string>{"(x; 0)", "inf"}));
}

TEST(Tame, LiftPassesTameThrough) {
    auto X = curve("GF(2)", "P1");
    EXPECT_EQ(tc::pseudotame_to_tame(fn(X, "x")), fn(X, "x"));
}

TEST(Tame, LiftRejectsNonPseudotame) {
    auto X = curve("GF(2)", "P1");
    EXPECT_THROW(tc::pseudotame_to_tame(fn(X, "x^2")), tc::NotPseudotame);
    EXPECT_THROW(tc::pseudotame_to_tame(fn(X, "x^3+x")), tc::NotPseudotame);
}

TEST(Tame, LiftOnP1) {
    auto X = curve("GF(2)", "P1");
    expect_tame_lift(fn(X, "x^4+x^5"));
    expect_tame_lift(fn(curve("GF(4)", "P1"), "x^5+w*x^4+x"));
    expect_tame_lift(fn(curve("GF(4)", "P1"), "x^5+w*x^4"));
}

TEST(Tame, LiftOfSupersingularSolution) {
    auto X = curve("GF(2)", "ES(a=0,b=1)");
    FuncElem x = fn(X, "x");
    FuncElem f = tc::symbol_solve(x, fn(X, "x^3+x"));
    EXPECT_TRUE(tc::is_pseudotame(f));
    expect_tame_lift(f);
}

TEST(Tame, LiftIsSeedDeterministic) {
    auto X = curve("GF(2)", "P1");
    tc::TameLiftOptions opt;
    opt.seed = 9;
    EXPECT_EQ(tc::pseudotame_to_tame(fn(X, "x^4+x^5"), opt), tc::pseudotame_to_tame(fn(X, "x^4+x^5"), opt));
}

// Properties

TEST(TameProperties, TameImpliesPseudotameAndRiemannHurwitz) {
    for (const char* model : {"P1", "EO(a=0,b=1)", "ES(a=0,b=1)"}) {
        auto X = curve("GF(2)", model);
        std::mt19937_64 rng(31);
        int tame = 0;
        for (int i = 0; i < 40 && tame < 8; ++i) {
            FuncElem f = random_separating(X, rng, 2);
            if (f.is_constant() || !tc::is_tame(f)) continue;
            ++tame;
            ASSERT_TRUE(tc::is_pseudotame(f)) << tc::to_string(f);
            ASSERT_TRUE(tc::riemann_hurwitz_check(f).holds) << tc::to_string(f);
        }
        EXPECT_GT(tame, 0) << model;
    }
}

TEST(TameProperties, OddCharacteristicRiemannHurwitz) {
    for (const auto& [F, model] : std::vector<std::pair<const char*, const char*>>{{"GF(5)", "P1"}, {"GF(5)", "W(A=1,B=1)"}}) {
        auto X = curve(F, model);
        std::mt19937_64 rng(37);
        for (int i = 0; i < 10; ++i) {
            FuncElem f = random_separating(X, rng, 2);
            if (f.is_constant()) continue;
            auto prof = tc::ramification_profile(f);
            bool wild = false;
            for (const auto& en : prof.entries) wild = wild || en.wild;
            ASSERT_EQ(tc::riemann_hurwitz_check(f).holds, !wild) << tc::to_string(f);
        }
    }
}

TEST(TameProperties, PseudotameIsOrbitInvariant) {
    auto X = curve("GF(2)", "P1");
    std::mt19937_64 rng(41);
    auto places = tc::places_of_degree(X, 1);
    for (int i = 0; i < 20; ++i) {
        FuncElem f = random_separating(X, rng, 3);
        FuncElem t = random_function(X, rng, 1);
        FuncElem g = (f + t.pow(4)).inv();
        for (const auto& P : places) ASSERT_EQ(tc::pseudotame_at(f, P), tc::pseudotame_at(g, P));
    }
}

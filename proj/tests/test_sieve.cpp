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

#include <cmath>

#include "support.hpp"

namespace tc = tamecurves;
using namespace testsupport;
using tc::Rational;

namespace {

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace

TEST(Sieve, PerPlaceProbability) {
    auto X = curve("GF(3)", "P1");
    EXPECT_EQ(tc::per_place_simple_probability(tc::places_of_degree(X, 1).front()), Rational(64, 81));
    EXPECT_EQ(tc::per_place_simple_probability(tc::places_of_degree(X, 2).front()), Rational(6400, 6561));
}

TEST(Sieve, BadJetCount) {
    auto k = tc::parse_field("GF(3)");
    EXPECT_EQ(tc::bad_jet_count(*k), 153u);
    EXPECT_EQ(Rational(729 - 153, 729), Rational(64, 81));
}

TEST(Sieve, PredictedDensity) {
    auto X = curve("GF(3)", "P1");
    EXPECT_EQ(tc::predicted_density(X, 0), Rational(1));
    Rational p = Rational(64, 81);
    EXPECT_EQ(tc::predicted_density(X, 1), p * p * p * p);
    auto Y = curve("GF(5)", "P1");
    double d4 = to_double(tc::predicted_density(Y, 4)), z = to_double(tc::zeta_inv_sq(Y));
    EXPECT_LT(std::abs(d4 - z) / z, 0.02);
    EXPECT_THROW(tc::predicted_density(Y, 40), tc::DomainError);
}

TEST(Sieve, Errors) {
    EXPECT_THROW(tc::random_simply_ramified_search(curve("GF(2)", "P1"), 3, 10), tc::OddCharacteristicOnly);
    EXPECT_THROW(tc::random_simply_ramified_search(curve("GF(3)", "P1"), 0, 10), tc::DimensionTooSmall);
    EXPECT_THROW(tc::random_simply_ramified_search(curve("GF(5)", "W(A=1,B=1)"), 1, 10), tc::DimensionTooSmall);
}

TEST(Sieve, MonteCarloOnP1) {
    auto X = curve("GF(5)", "P1");
    tc::SieveOptions opt;
    opt.seed = 4;
    auto [f, st] = tc::random_simply_ramified_search(X, 3, 2000, opt);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(tc::is_simply_ramified(*f));
    EXPECT_EQ(tc::function_degree(*f), 3);
    EXPECT_EQ(st.trials, 2000u);
    EXPECT_EQ(st.predicted, tc::predicted_density(X, 2));
    const double p = to_double(st.predicted), sigma = std::sqrt(p * (1 - p) / 2000.0);
    EXPECT_LT(std::abs(to_double(st.empirical) - p), std::max(0.03, 3 * sigma));
}

TEST(Sieve, WorkersDoNotChangeResults) {
    auto X = curve("GF(3)", "P1");
    tc::SieveOptions one, four;
    one.seed = four.seed = 12;
    four.workers = 4;
    auto [f1, s1] = tc::random_simply_ramified_search(X, 3, 300, one);
    auto [f4, s4] = tc::random_simply_ramified_search(X, 3, 300, four);
    EXPECT_EQ(s1.successes, s4.successes);
    ASSERT_EQ(f1.has_value(), f4.has_value());
    if (f1) EXPECT_EQ(*f1, *f4);
}

TEST(Sieve, EllipticSearch) {
    auto X = curve("GF(5)", "W(A=1,B=1)");
    tc::SieveOptions opt;
    opt.seed = 2;
    auto [f, st] = tc::random_simply_ramified_search(X, 4, 200, opt);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(tc::is_simply_ramified(*f));
    EXPECT_TRUE(tc::riemann_hurwitz_check(*f).holds);
    EXPECT_GT(st.successes, 0u);
}

TEST(Sieve, ExhaustiveAgreesWithSearchOnP1) {
    auto X = curve("GF(3)", "P1");
    Rational exact = tc::exhaustive_simple_fraction(X, 2);
    EXPECT_GT(exact, 0);
    EXPECT_LT(exact, 1);
    tc::SieveOptions opt;
    opt.seed = 99;
    auto [f, st] = tc::random_simply_ramified_search(X, 2, 4000, opt);
    const double p = to_double(exact), sigma = std::sqrt(p * (1 - p) / 4000.0);
    EXPECT_LT(std::abs(to_double(st.empirical) - p), 3 * sigma);
}

TEST(SieveProperties, ProbabilitiesAreInUnitInterval) {
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u}) {
        Rational r = tc::per_place_simple_probability(q);
        EXPECT_GT(r, 0);
        EXPECT_LT(r, 1);
        Rational s = 1 - Rational(1, q * q);
        EXPECT_EQ(r, s * s);
    }
}

TEST(SieveProperties, DensityDecreasesTowardZetaLimit) {
    auto X = curve("GF(3)", "P1");
    Rational prev = 1, z = tc::zeta_inv_sq(X);
    for (int e = 1; e <= 6; ++e) {
        Rational d = tc::predicted_density(X, e);
        EXPECT_LT(d, prev);
        EXPECT_GT(d, z);
        prev = d;
    }
}

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

#ifndef TAMECURVES_SIEVE_HPP
#define TAMECURVES_SIEVE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tame.hpp"

namespace tamecurves {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Zeta function data

/// q-power and trace of Frobenius: #X(GF(q)) = q + 1 - a.
struct FrobeniusData {
    std::uint64_t q = 0;
    long a = 0;
    int genus = 0;
};

inline FrobeniusData frobenius_data(const CurvePtr& X) {
    FrobeniusData fd;
    fd.q = X->field().size();
    fd.genus = X->genus();
    if (fd.genus == 0) return fd;
    const long n1 = static_cast<long>(places_of_degree(X, 1).size());
    fd.a = static_cast<long>(fd.q) + 1 - n1;
    return fd;
}

/// #X(GF(q^m)) from the L-polynomial 1 - a T + q T^2.
inline BigInt point_count(const FrobeniusData& fd, unsigned m) {
    BigInt qm = boost::multiprecision::pow(BigInt(fd.q), m);
    if (fd.genus == 0) return qm + 1;
    // s_m = alpha^m + beta^m with s_0 = 2, s_1 = a, s_m = a s_{m-1} - q s_{m-2}
    BigInt s0 = 2, s1 = fd.a;
    for (unsigned i = 1; i < m; ++i) {
        BigInt s2 = fd.a * s1 - BigInt(fd.q) * s0;
        s0 = s1;
        s1 = s2;
    }
    return qm + 1 - (m == 0 ? s0 : s1);
}

/// Number of closed points of degree d.
inline BigInt place_count(const FrobeniusData& fd, unsigned d) {
    auto mobius = [](unsigned n) {
        int r = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
        return n > 1 ? -r : r;
    };
    BigInt acc = 0;
    for (unsigned j = 1; j <= d; ++j)
        if (d % j == 0) acc += mobius(d / j) * point_count(fd, j);
    return acc / d;
}

/// zeta_X(2)^(-2), exact.
inline Rational zeta_inv_sq(const CurvePtr& X) {
    const FrobeniusData fd = frobenius_data(X);
    const Rational q{BigInt(fd.q)};
    const Rational t = 1 / (q * q);
    // 1/zeta(2) = (1 - q^-2)(1 - q^-1) / L(q^-2)
    Rational inv = (1 - t) * (1 - 1 / q);
    if (fd.genus == 1) inv /= 1 - Rational(fd.a) * t + q * t * t;
    return inv * inv;
}

// ---------------------------------------------------------------------------
// Densities

inline Rational per_place_simple_probability(std::uint64_t residue_size) {
    const Rational k{BigInt(residue_size)};
    const Rational f = 1 - 1 / (k * k);
    return f * f;
}

inline Rational per_place_simple_probability(const Place& P) {
    const BigInt size = boost::multiprecision::pow(BigInt(P.curve()->field().size()), P.degree());
    const Rational f = 1 - Rational(1) / Rational(size * size);
    return f * f;
}

namespace detail {

inline Rational rational_pow(const Rational& r, unsigned n) {
    return Rational(boost::multiprecision::pow(numerator(r), n), boost::multiprecision::pow(denominator(r), n));
}

}  // namespace detail

/// Largest q^e accepted by predicted_density.
inline constexpr std::uint64_t kMaxDensityCutoff = 1u << 16;

/// Product of per-place probabilities over places of degree <= e.
inline Rational predicted_density(const CurvePtr& X, int e) {
    if (e < 0) throw DomainError("cutoff degree must be nonnegative");
    const FrobeniusData fd = frobenius_data(X);
    Rational acc = 1;
    BigInt qd = 1;
    for (int d = 1; d <= e; ++d) {
        qd *= fd.q;
        if (qd > kMaxDensityCutoff) throw DomainError("cutoff degree too large for this field");
        const BigInt n = place_count(fd, static_cast<unsigned>(d));
        const Rational f = 1 - Rational(1) / Rational(qd * qd);
        acc *= detail::rational_pow(f * f, static_cast<unsigned>(n));
    }
    return acc;
}

/// Number of 2-jet pairs (s0, s1) at a rational point over GF(p) that fail
/// to be simply ramified there: base point, or s0' s1 - s0 s1' vanishing to order 2.
inline std::uint64_t bad_jet_count(const Field& k) {
    const Elem q = k.size();
    std::uint64_t bad = 0;
    for (Elem a0 = 0; a0 < q; ++a0)
        for (Elem a1 = 0; a1 < q; ++a1)
            for (Elem a2 = 0; a2 < q; ++a2)
                for (Elem b0 = 0; b0 < q; ++b0)
                    for (Elem b1 = 0; b1 < q; ++b1)
                        for (Elem b2 = 0; b2 < q; ++b2) {
                            if (a0 == 0 && b0 == 0) {
                                ++bad;
                                continue;
                            }
                            const Elem w0 = k.sub(k.mul(a1, b0), k.mul(a0, b1));
                            const Elem w1 = k.sub(k.mul(a2, b0), k.mul(a0, b2));
                            if (w0 == 0 && w1 == 0) ++bad;
                        }
    return bad;
}

// ---------------------------------------------------------------------------
// Search

struct SieveStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    Rational empirical = 0;
    Rational predicted = 1;
    Rational zeta_limit = 0;
    int cutoff = 2;
};

struct SieveOptions {
    std::uint64_t seed = 1;
    unsigned workers = 1;
    int cutoff = 2;
};

namespace detail {

/// Trial outcome for coefficient vectors on P1: simply ramified with no base point.
inline bool p1_simply_ramified(const Poly& s0, const Poly& s1, int n) {
    if (s1.is_zero()) return false;
    if (std::max(s0.degree(), s1.degree()) < n) return false;  // common zero at infinity
    if (gcd(s0, s1).degree() > 0) return false;
    const Poly W = s0.derivative() * s1 - s0 * s1.derivative();
    if (W.is_zero()) return false;
    if (W.degree() < 2 * n - 3) return false;  // order >= 2 at infinity
    return gcd(W, W.derivative()).degree() == 0;
}

/// Generic trial on any supported curve.
inline bool generic_simply_ramified(const FuncElem& s0, const FuncElem& s1, int n) {
    if (s1.is_zero()) return false;
    const CurvePtr& X = s0.curve();
    const Place inf = infinity_place(X);
    if (-valuation(s1, inf) < n && (s0.is_zero() || -valuation(s0, inf) < n)) return false;
    if (s0.is_zero()) return false;
    const FuncElem f = s0 / s1;
    if (f.derivative().is_zero()) return false;
    // a common finite zero is a place where both vanish
    for (const auto& [P, v] : principal_divisor(s1))
        if (v > 0 && valuation(s0, P) > 0) return false;
    return is_simply_ramified(f);
}

inline std::vector<Elem> random_coeffs(const Field& k, std::size_t len, std::mt19937_64& rng) {
    std::vector<Elem> c(len);
    for (auto& e : c) e = rng() % k.size();
    return c;
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace detail

/// Samples (s0, s1) uniformly from L(n inf)^2 and tests f = s0/s1.
inline std::pair<std::optional<FuncElem>, SieveStats> random_simply_ramified_search(const CurvePtr& X, int n,
                                                                                   std::uint64_t trials,
                                                                                   const SieveOptions& opt = {}) {
    const Field& k = X->field();
    if (k.characteristic() == 2) throw OddCharacteristicOnly("the sieve needs odd characteristic");
    const std::vector<FuncElem> basis = riemann_roch_basis(X, n);
    if (basis.size() < 2) throw DimensionTooSmall("L(n inf) has dimension < 2");

    struct Outcome {
        std::uint64_t successes = 0;
        std::optional<std::uint64_t> first;
    };
    auto run_trial = [&](std::uint64_t t) {
        std::mt19937_64 rng = detail::trial_rng(opt.seed, t);
        auto c0 = detail::random_coeffs(k, basis.size(), rng);
        auto c1 = detail::random_coeffs(k, basis.size(), rng);
        if (X->is_p1()) return detail::p1_simply_ramified(Poly(X->k(), c0), Poly(X->k(), c1), n);
        FuncElem s0(X), s1(X);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            s0 += basis[i].scale(c0[i]);
            s1 += basis[i].scale(c1[i]);
        }
        return detail::generic_simply_ramified(s0, s1, n);
    };
    const unsigned W = std::max(1u, opt.workers);
    std::vector<Outcome> parts(W);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = trials * w / W, hi = trials * (w + 1) / W;
        for (std::uint64_t t = lo; t < hi; ++t)
            if (run_trial(t)) {
                ++parts[w].successes;
                if (!parts[w].first) parts[w].first = t;
            }
    };
    if (W == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < W; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    SieveStats st;
    st.trials = trials;
    st.cutoff = opt.cutoff;
    std::optional<std::uint64_t> first;
    for (const auto& o : parts) {
        st.successes += o.successes;
        if (!first && o.first) first = o.first;
    }
    st.empirical = trials ? Rational(BigInt(st.successes), BigInt(trials)) : Rational(0);
    st.predicted = predicted_density(X, opt.cutoff);
    st.zeta_limit = zeta_inv_sq(X);

    std::optional<FuncElem> found;
    if (first) {
        std::mt19937_64 rng = detail::trial_rng(opt.seed, *first);
        auto c0 = detail::random_coeffs(k, basis.size(), rng);
        auto c1 = detail::random_coeffs(k, basis.size(), rng);
        FuncElem s0(X), s1(X);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            s0 += basis[i].scale(c0[i]);
            s1 += basis[i].scale(c1[i]);
        }
        found = s0 / s1;
    }
    return {found, st};
}

/// Exact simply ramified fraction over all pairs in L(n inf)^2 (tiny P1 cases only).
inline Rational exhaustive_simple_fraction(const CurvePtr& X, int n) {
    const Field& k = X->field();
    if (k.characteristic() == 2) throw OddCharacteristicOnly("the sieve needs odd characteristic");
    if (!X->is_p1()) throw DomainError("exhaustive enumeration is implemented for P1");
    if (n < 1) throw DimensionTooSmall("L(n inf) has dimension < 2");
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    const std::uint64_t q = k.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (total > (std::uint64_t{1} << 20)) throw DomainError("enumeration too large");
        total *= q;
    }
    auto decode = [&](std::uint64_t idx) {
        std::vector<Elem> c(len);
        for (auto& e : c) {
            e = idx % q;
            idx /= q;
        }
        return Poly(X->k(), c);
    };
    std::vector<Poly> all;
    all.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) all.push_back(decode(i));
    std::uint64_t good = 0;
    for (const Poly& s0 : all)
        for (const Poly& s1 : all)
            if (detail::p1_simply_ramified(s0, s1, n)) ++good;
    return Rational(BigInt(good), BigInt(total) * BigInt(total));
}

}  // namespace tamecurves

#endif  // TAMECURVES_SIEVE_HPP

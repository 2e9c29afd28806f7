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

#ifndef TAMECURVES_TESTS_SUPPORT_HPP
#define TAMECURVES_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "tamecurves/tamecurves.hpp"

namespace testsupport {

namespace tc = tamecurves;

inline tc::CurvePtr curve(const std::string& field, const std::string& model) {
    return tc::parse_curve(tc::parse_field(field), model);
}

inline tc::FuncElem fn(const tc::CurvePtr& X, const std::string& s) { return tc::parse_function(X, s); }

inline tc::Elem random_elem(const tc::Field& k, std::mt19937_64& rng) { return rng() % k.size(); }

inline tc::Elem random_nonzero(const tc::Field& k, std::mt19937_64& rng) { return 1 + rng() % (k.size() - 1); }

/// Random polynomial of exact degree deg.
inline tc::Poly random_poly(const tc::Field* k, int deg, std::mt19937_64& rng, bool monic = false) {
    std::vector<tc::Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& e : c) e = random_elem(*k, rng);
    c.back() = monic ? 1 : random_nonzero(*k, rng);
    return tc::Poly(k, c);
}

/// Random rational function with numerator and denominator degrees at most max_deg.
inline tc::RatFunc random_ratfunc(const tc::Field* k, int max_deg, std::mt19937_64& rng) {
    const int dn = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    const int dd = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    return tc::RatFunc(random_poly(k, dn, rng), random_poly(k, dd, rng, true));
}

inline tc::FuncElem random_function(const tc::CurvePtr& X, std::mt19937_64& rng, int max_deg = 3) {
    tc::RatFunc u = random_ratfunc(X->k(), max_deg, rng);
    if (X->is_p1()) return tc::FuncElem(X, u);
    return tc::FuncElem(X, u, random_ratfunc(X->k(), max_deg - 1, rng));
}

/// Random separating function.
inline tc::FuncElem random_separating(const tc::CurvePtr& X, std::mt19937_64& rng, int max_deg = 3) {
    for (;;) {
        tc::FuncElem f = random_function(X, rng, max_deg);
        if (f.is_separating()) return f;
    }
}

inline std::vector<std::string> names(const std::vector<tc::Place>& ps) {
    std::vector<std::string> out;
    for (const auto& P : ps) out.push_back(tc::to_string(P));
    return out;
}

}  // namespace testsupport

namespace tamecurves {

// readable failure messages
inline void PrintTo(const FuncElem& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const Differential& w, std::ostream* os) { *os << to_string(w); }
inline void PrintTo(const Place& P, std::ostream* os) { *os << to_string(P); }

}  // namespace tamecurves

#endif  // TAMECURVES_TESTS_SUPPORT_HPP

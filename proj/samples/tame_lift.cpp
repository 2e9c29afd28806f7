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

// A pseudotame function on the line over GF(2) and a tame element of its orbit.

#include <iostream>

#include "tamecurves/tamecurves.hpp"

int main() {
    using namespace tamecurves;
    CurvePtr X = parse_curve(parse_field("GF(2)"), "P1");
    FuncElem f = parse_function(X, "x^4+x^5");
    std::cout << "f = " << to_string(f) << "\n";
    std::cout << std::boolalpha << "tame: " << is_tame(f) << ", pseudotame: " << is_pseudotame(f) << "\n";

    TameLiftOptions opt;
    opt.seed = 1;
    FuncElem g = pseudotame_to_tame(f, opt);
    RiemannHurwitz rh = riemann_hurwitz_check(g);
    std::cout << "g = " << to_string(g) << "\n";
    std::cout << "degree " << function_degree(g) << ", tame: " << is_tame(g) << ", same orbit: " << same_orbit(f, g)
              << "\n";
    std::cout << "2g-2 = " << rh.lhs << ", -2 deg + sum(e-1) deg = " << rh.rhs << "\n";
    for (const RamificationEntry& e : ramification_profile(g).entries)
        std::cout << "  " << to_string(e.place) << " e=" << e.e << " over " << to_string(e.image) << "\n";
}

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

// Quartic decomposition and the symbol on a supersingular curve over GF(2).

#include <iostream>

#include "tamecurves/tamecurves.hpp"

int main() {
    using namespace tamecurves;
    CurvePtr X = parse_curve(parse_field("GF(2)"), "ES(a=0, b=1)");
    FuncElem f = parse_function(X, "y/x^2");
    FuncElem g = parse_function(X, "x");

    QuarticDecomp q = quartic_decompose(f, g);
    std::cout << "f0 = " << to_string(q.f0) << "\n"
              << "f1 = " << to_string(q.f1) << "\n"
              << "f2 = " << to_string(q.f2) << "\n"
              << "f3 = " << to_string(q.f3) << "\n";

    std::cout << "SY(f, g) = " << to_string(sy(f, g)) << "\n";
    std::cout << "same orbit as f^3: " << std::boolalpha << same_orbit(f, f.pow(3)) << "\n";
    std::cout << "same orbit as g:   " << same_orbit(f, g) << "\n";
}

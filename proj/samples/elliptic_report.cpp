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

// The ordinary and supersingular analyses over GF(8).

#include <iostream>

#include "tamecurves/tamecurves.hpp"

int main() {
    using namespace tamecurves;
    FieldPtr k = parse_field("GF(2^3; mod=w^3+w+1; gen=w)");
    const Elem a = parse_elem(*k, "w").raw(), b = parse_elem(*k, "w^2+1").raw();

    EcReport o = ec_ordinary_analysis(k, a, b, /*lift=*/false);
    std::cout << "ordinary y^2 + xy = x^3 + w x^2 + (w^2+1)\n";
    std::cout << "  traces Tr(a), Tr(b), Tr(a+b): " << o.traces[0] << ", " << o.traces[1] << ", " << o.traces[2] << "\n";
    std::cout << "  symbol " << to_string(o.symbol) << "\n";
    std::cout << "  conic b = " << to_string(o.conic.b) << "\n";
    if (o.pseudotame) std::cout << "  solution f = " << to_string(*o.pseudotame) << "\n";

    const Elem c = parse_elem(*k, "w^2").raw();
    EcReport s = ec_supersingular_analysis(k, a, b, c, /*lift=*/false);
    std::cout << "supersingular y^2 + y = x^3 + w x + (w^2+1), c = w^2\n";
    std::cout << std::boolalpha << "  point on conic: " << s.point_ok << "\n";
    if (s.pseudotame) std::cout << "  solution f = " << to_string(*s.pseudotame) << "\n";
}

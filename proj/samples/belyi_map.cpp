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

// Tame maps to the line branched over {0, 1, inf}.

#include <iostream>

#include "tamecurves/tamecurves.hpp"

int main() {
    using namespace tamecurves;
    for (const char* model : {"P1", "ES(a=0, b=1)"}) {
        CurvePtr X = parse_curve(parse_field("GF(2)"), model);
        BelyiResult r = belyi_construct(X);
        std::cout << model << " over GF(2)\n";
        std::cout << "  base " << to_string(r.base) << ", q' = " << r.q_prime << "\n";
        std::cout << "  map  " << to_string(r.map) << "\n";
        std::cout << "  branch:";
        for (const Place& Q : r.branch) std::cout << " " << to_string(Q);
        std::cout << "\n";
    }
}

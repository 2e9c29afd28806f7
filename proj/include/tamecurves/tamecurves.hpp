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

#ifndef TAMECURVES_TAMECURVES_HPP
#define TAMECURVES_TAMECURVES_HPP

#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "series.hpp"
#include "linalg.hpp"
#include "curve.hpp"
#include "place.hpp"
#include "symbol.hpp"
#include "tame.hpp"
#include "conic.hpp"
#include "sieve.hpp"
#include "belyi.hpp"
#include "text.hpp"

#endif  // TAMECURVES_TAMECURVES_HPP

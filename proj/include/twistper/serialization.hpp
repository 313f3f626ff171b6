/*
   Copyright 2026 The twistper Authors

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

#ifndef TWISTPER_SERIALIZATION_HPP
#define TWISTPER_SERIALIZATION_HPP

#include "json.hpp"
#include "twistper/exact_field.hpp"
#include "twistper/polynomial.hpp"

namespace twistper {

/// {"level": M, "coords": ["p/q", ...]}
nlohmann::json to_json(const ExactNumber& x);
ExactNumber exact_from_json(const nlohmann::json& j);

/// Coefficient array, highest degree first.
nlohmann::json to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

/// "a + b*sqrt(d)" string.
nlohmann::json to_json(const QuadSurd& s);
QuadSurd surd_from_json(const nlohmann::json& j);

/// {"rational": exact, "surd": exact, "radicand": "d"} for x + y sqrt(d).
nlohmann::json to_json(const QuadExtNumber& v);
QuadExtNumber quad_ext_from_json(const nlohmann::json& j);

}  // namespace twistper

#endif  // TWISTPER_SERIALIZATION_HPP

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistper/period_formula.hpp"
#include "twistper/serialization.hpp"

using namespace twistper;

TEST_CASE("exact numbers round trip") {
    const ExactNumber x = ExactNumber(BigRational(-3, 7)) + root_of_unity(12, 5) * ExactNumber(BigRational(2, 9));
    const auto j = to_json(x);
    CHECK(j["level"] == 12);
    CHECK(exact_from_json(j) == x);
    CHECK(exact_from_json(nlohmann::json::parse(j.dump())) == x);
    CHECK(to_json(ExactNumber(5)).dump() == R"({"coords":["5"],"level":1})");
    CHECK_THROWS_AS(exact_from_json(nlohmann::json{{"level", 4}, {"coords", {"1"}}}), ValidationError);
}

TEST_CASE("polynomials serialize highest degree first") {
    const PeriodContext ctx(1, 10, 1, kronecker_character(-3));
    const ExactPolynomial p = theorem1_polynomial(ctx);
    const auto j = to_json(p);
    REQUIRE(j.size() == 10);
    CHECK(exact_from_json(j[0]) == p.coefficient(9));
    CHECK(polynomial_from_json(j) == p);
    // deterministic text
    CHECK(j.dump() == to_json(theorem1_polynomial(ctx)).dump());
}

TEST_CASE("surds and extension elements round trip") {
    const QuadSurd s(540, -12, 144169);
    CHECK(to_json(s) == "540 - 12*sqrt(144169)");
    CHECK(surd_from_json(to_json(s)) == s);
    const QuadExtNumber v(imaginary_unit(), ExactNumber(BigRational(1, 3)), 5);
    CHECK(quad_ext_from_json(to_json(v)) == v);
}

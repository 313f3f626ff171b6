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

#include "twistper/serialization.hpp"

#include <algorithm>

namespace twistper {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError("malformed JSON: " + what);
}

}  // namespace

json to_json(const ExactNumber& x) {
    // rationals are emitted at level 1 whatever field they were computed in
    if (x.is_rational()) return {{"level", 1}, {"coords", {to_string(x.constant_term())}}};
    json coords = json::array();
    for (const auto& c : x.coords()) coords.push_back(to_string(c));
    return {{"level", x.level()}, {"coords", coords}};
}

ExactNumber exact_from_json(const json& j) {
    require(j.is_object() && j.contains("level") && j.contains("coords"), "exact number needs level and coords");
    require(j.at("level").is_number_integer() && j.at("level").get<int>() >= 1, "level must be a positive integer");
    require(j.at("coords").is_array(), "coords must be an array");
    std::vector<BigRational> coords;
    for (const auto& c : j.at("coords")) {
        require(c.is_string(), "coordinates must be \"p/q\" strings");
        coords.push_back(parse_rational(c.get<std::string>()));
    }
    return ExactNumber(j.at("level").get<int>(), std::move(coords));
}

json to_json(const ExactPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.descending()) out.push_back(to_json(c));
    return out;
}

ExactPolynomial polynomial_from_json(const json& j) {
    require(j.is_array(), "polynomial must be an array of coefficients");
    std::vector<ExactNumber> coeffs;
    for (const auto& c : j) coeffs.push_back(exact_from_json(c));
    std::reverse(coeffs.begin(), coeffs.end());
    return ExactPolynomial(std::move(coeffs));
}

json to_json(const QuadSurd& s) { return to_string(s); }

QuadSurd surd_from_json(const json& j) {
    require(j.is_string(), "surd must be a string");
    return parse_quad_surd(j.get<std::string>());
}

json to_json(const QuadExtNumber& v) {
    return {{"rational", to_json(v.x)}, {"surd", to_json(v.y)}, {"radicand", v.d.get_str()}};
}

QuadExtNumber quad_ext_from_json(const json& j) {
    require(j.is_object() && j.contains("rational") && j.contains("surd") && j.contains("radicand"),
            "quadratic extension number needs rational, surd and radicand");
    require(j.at("radicand").is_string(), "radicand must be a string");
    return {exact_from_json(j.at("rational")), exact_from_json(j.at("surd")), BigInt(j.at("radicand").get<std::string>())};
}

}  // namespace twistper

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

#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "twistper/eigenforms.hpp"

namespace twistper {

namespace {

using nlohmann::json;

class LineError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw LineError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw LineError(std::string("field \"") + key + "\" has the wrong type");
    }
}

BigRational rational_field(const json& j, const char* key) { return parse_rational(field<std::string>(j, key)); }

EigenformFixture parse_eigenform(const json& j) {
    EigenformFixture fx;
    fx.name = field<std::string>(j, "name");
    fx.form.level = field<int>(j, "level");
    fx.form.weight = field<int>(j, "weight");
    const std::string parity = field<std::string>(j, "parity");
    if (parity != "odd" && parity != "even") throw LineError("parity must be \"odd\" or \"even\"");
    for (const auto& t : field<json>(j, "terms")) {
        RnTerm term{field<int>(t, "n"), parse_quad_surd(field<std::string>(t, "coeff"))};
        if ((term.n % 2 == 1) != (parity == "odd")) {
            throw LineError("R_" + std::to_string(term.n) + " does not belong to the " + parity + " basis");
        }
        fx.form.terms.push_back(std::move(term));
    }
    fx.form.validate();
    fx.conjugate_pair = j.value("conjugate_pair", false);
    if (fx.conjugate_pair != (fx.form.radicand() != 1)) {
        throw LineError("conjugate_pair must be set exactly when a coefficient involves a surd");
    }
    fx.note = j.value("note", std::string());
    return fx;
}

MatrixFixture parse_matrix(const json& j) {
    MatrixFixture fx;
    fx.name = field<std::string>(j, "name");
    fx.level = field<int>(j, "level");
    fx.weight = field<int>(j, "weight");
    fx.basis = field<std::vector<int>>(j, "basis");
    for (const auto& row : field<json>(j, "rows")) {
        std::vector<BigRational> r;
        for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
        fx.matrix.push_back(std::move(r));
    }
    if (fx.matrix.size() != fx.basis.size()) throw LineError("matrix dimension differs from the basis size");
    for (const auto& row : fx.matrix) {
        if (row.size() != fx.basis.size()) throw LineError("matrix is not square");
    }
    for (int n : fx.basis) {
        if (n <= 0 || n >= fx.weight - 2) throw LineError("basis index R_" + std::to_string(n) + " out of range");
    }
    if (j.contains("char_poly")) {
        for (const auto& c : j.at("char_poly")) fx.expected_char_poly.push_back(parse_rational(c.get<std::string>()));
    }
    if (j.contains("eigenforms")) fx.expected_eigenforms = j.at("eigenforms").get<std::vector<std::string>>();
    return fx;
}

TwistTableFixture parse_twist_table(const json& j) {
    TwistTableFixture fx;
    fx.name = field<std::string>(j, "name");
    fx.form = field<std::string>(j, "form");
    fx.m = field<int>(j, "m");
    for (const auto& r : field<json>(j, "rows")) {
        TwistTableRow row{field<std::int64_t>(r, "D"), field<std::string>(r, "text"), rational_field(r, "value")};
        if (evaluate_factored(row.text) != row.value) {
            throw LineError("D = " + std::to_string(row.D) + ": \"" + row.text + "\" does not evaluate to " +
                            to_string(row.value));
        }
        fx.rows.push_back(std::move(row));
    }
    return fx;
}

LambdaRatioFixture parse_lambda_table(const json& j) {
    LambdaRatioFixture fx;
    fx.name = field<std::string>(j, "name");
    fx.form = field<std::string>(j, "form");
    fx.character = field<std::string>(j, "character");
    for (const auto& r : field<json>(j, "rows")) {
        fx.rows.push_back({field<int>(r, "s"), parse_quad_surd(field<std::string>(r, "numerator")),
                           rational_field(r, "denominator"), field<std::int64_t>(r, "sqrt_factor")});
    }
    if (j.contains("square")) {
        fx.square_s = field<int>(j.at("square"), "s");
        fx.square_root = parse_quad_surd(field<std::string>(j.at("square"), "root"));
    }
    return fx;
}

template <class Map, class Value>
void insert_unique(Map& map, Value v) {
    const std::string name = v.name;
    if (!map.emplace(name, std::move(v)).second) throw LineError("duplicate fixture name \"" + name + "\"");
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind) {
    const auto it = map.find(name);
    if (it == map.end()) {
        std::string known;
        for (const auto& [k, _] : map) known += (known.empty() ? "" : ", ") + k;
        throw ValidationError(std::string("unknown ") + kind + " fixture \"" + name + "\" (known: " + known + ")");
    }
    return it->second;
}

}  // namespace

const EigenformFixture& FixtureRegistry::eigenform(const std::string& name) const {
    return lookup(eigenforms, name, "eigenform");
}
const MatrixFixture& FixtureRegistry::matrix(const std::string& name) const { return lookup(matrices, name, "matrix"); }
const TwistTableFixture& FixtureRegistry::twist_table(const std::string& name) const {
    return lookup(twist_tables, name, "twist_table");
}
const LambdaRatioFixture& FixtureRegistry::lambda_table(const std::string& name) const {
    return lookup(lambda_tables, name, "lambda_ratio_table");
}

std::vector<const EigenformFixture*> FixtureRegistry::forms_at(int level, int weight) const {
    std::vector<const EigenformFixture*> out;
    for (const auto& [_, fx] : eigenforms)
        if (fx.form.level == level && fx.form.weight == weight) out.push_back(&fx);
    return out;
}

FixtureRegistry parse_fixtures(std::string_view jsonl) {
    FixtureRegistry reg;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            const json j = json::parse(line);
            const std::string kind = field<std::string>(j, "kind");
            if (kind == "eigenform") {
                insert_unique(reg.eigenforms, parse_eigenform(j));
            } else if (kind == "matrix") {
                insert_unique(reg.matrices, parse_matrix(j));
            } else if (kind == "twist_table") {
                insert_unique(reg.twist_tables, parse_twist_table(j));
            } else if (kind == "lambda_ratio_table") {
                insert_unique(reg.lambda_tables, parse_lambda_table(j));
            } else {
                throw LineError("unknown kind \"" + kind + "\"");
            }
        } catch (const std::exception& e) {
            throw ValidationError("fixtures line " + std::to_string(number) + ": " + e.what());
        }
    }
    // cross references
    auto need_form = [&](const std::string& owner, const std::string& form) {
        if (!reg.eigenforms.count(form)) {
            throw ValidationError("fixture \"" + owner + "\" refers to unknown eigenform \"" + form + "\"");
        }
    };
    for (const auto& [name, m] : reg.matrices)
        for (const auto& f : m.expected_eigenforms) need_form(name, f);
    for (const auto& [name, t] : reg.twist_tables) need_form(name, t.form);
    for (const auto& [name, t] : reg.lambda_tables) need_form(name, t.form);
    return reg;
}

const FixtureRegistry& load_fixtures() {
    static const FixtureRegistry registry = parse_fixtures(embedded_fixture_text());
    return registry;
}

}  // namespace twistper

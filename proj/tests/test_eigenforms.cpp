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

#include "twistper/eigenforms.hpp"
#include "twistper/period_formula.hpp"

using namespace twistper;

namespace {

/// det(x I - A) at a rational x by cofactor expansion.
BigRational det_shift(const RationalMatrix& a, const BigRational& x) {
    const std::size_t n = a.size();
    RationalMatrix b = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = (i == j ? x : BigRational(0)) - a[i][j];
    if (n == 1) return b[0][0];
    if (n == 2) return b[0][0] * b[1][1] - b[0][1] * b[1][0];
    return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
           b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

RationalMatrix parse_matrix(std::vector<std::vector<std::string>> rows) {
    RationalMatrix out;
    for (const auto& r : rows) {
        std::vector<BigRational> row;
        for (const auto& e : r) row.push_back(parse_rational(e));
        out.push_back(row);
    }
    return out;
}

}  // namespace

TEST_CASE("characteristic polynomial agrees with cofactor expansion") {
    const auto& reg = load_fixtures();
    for (const auto& [name, fx] : reg.matrices) {
        const QPolynomial p = char_poly(fx.matrix);
        CHECK(p.degree() == static_cast<int>(fx.matrix.size()));
        for (int x = -5; x <= 5; ++x) CHECK(p.evaluate(BigRational(x)) == det_shift(fx.matrix, x));
    }
    const RationalMatrix id = parse_matrix({{"1", "0"}, {"0", "1"}});
    CHECK(char_poly(id) == QPolynomial{1, -2, 1});
}

TEST_CASE("cubic characteristic polynomial is (x + 3348)^2 (x - 6252)") {
    const auto& fx = load_fixtures().matrix("example3_T3");
    const QPolynomial expected = QPolynomial{3348, 1} * QPolynomial{3348, 1} * QPolynomial{-6252, 1};
    CHECK(char_poly(fx.matrix) == expected);
    CHECK(char_poly(fx.matrix).ascending() == fx.expected_char_poly);
}

TEST_CASE("weight 24 Hecke matrix: eigenvectors (118041, 1135193 +- 19 sqrt 144169)") {
    const auto& fx = load_fixtures().matrix("example2_T2");
    const auto pairs = eigen_decompose(fx.matrix);
    REQUIRE(pairs.size() == 2);
    const BigInt d = 144169;
    CHECK(pairs[0].value == QuadSurd(540, -12, d));
    CHECK(pairs[1].value == QuadSurd(540, 12, d));
    CHECK(pairs[0].vector == std::vector<QuadSurd>{QuadSurd(118041), QuadSurd(1135193, -19, d)});
    CHECK(pairs[1].vector == std::vector<QuadSurd>{QuadSurd(118041), QuadSurd(1135193, 19, d)});
    for (const auto& p : pairs) CHECK(is_left_eigenpair(fx.matrix, p));
}

TEST_CASE("level 2 weight 16 Hecke matrix: newform 7 R_2 + 110 R_4 + 168 R_6") {
    const auto& fx = load_fixtures().matrix("example3_T3");
    const auto pairs = eigen_decompose(fx.matrix);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].value == QuadSurd(-3348));
    CHECK(pairs[1].value == QuadSurd(-3348));
    CHECK(pairs[2].value == QuadSurd(6252));
    CHECK(pairs[2].vector == std::vector<QuadSurd>{QuadSurd(7), QuadSurd(110), QuadSurd(168)});
    for (const auto& p : pairs) CHECK(is_left_eigenpair(fx.matrix, p));
}

TEST_CASE("diagonal and triangular matrices") {
    const auto pairs = eigen_decompose(parse_matrix({{"3", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "2"}}));
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].value == QuadSurd(-1));
    CHECK(pairs[0].vector == std::vector<QuadSurd>{QuadSurd(0), QuadSurd(1), QuadSurd(0)});
    CHECK(pairs[2].vector == std::vector<QuadSurd>{QuadSurd(1), QuadSurd(0), QuadSurd(0)});
    const auto single = eigen_decompose(parse_matrix({{"5/3"}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].value == QuadSurd(BigRational(5, 3)));
    // Jordan block: one eigenvector
    CHECK(eigen_decompose(parse_matrix({{"2", "1"}, {"0", "2"}})).size() == 1);
}

TEST_CASE("unsupported spectra") {
    CHECK_THROWS_AS(eigen_decompose(parse_matrix({{"0", "1", "0"}, {"0", "0", "1"}, {"2", "0", "0"}})),
                    ComputationError);
    CHECK_THROWS_AS(eigen_decompose(parse_matrix({{"0", "-1"}, {"1", "0"}})), ComputationError);
    CHECK_THROWS_AS(char_poly(parse_matrix({{"1", "2"}})), ValidationError);
}

TEST_CASE("twisted period of a single R_n is the twisted period") {
    const auto chi = kronecker_character(-3);
    const RnCombination f{1, 12, {{1, QuadSurd(1)}}};
    const QuadExtNumber r = twisted_period_of_combination(f, chi, 1);
    CHECK(r.x == twisted_period(PeriodContext(1, 10, 1, chi), 1));
    CHECK(r.y.is_zero());
}

TEST_CASE("linearity and homogeneity") {
    const auto& f = load_fixtures().eigenform("level1_weight24_even").form;
    const auto chi = kronecker_character(5);
    const QuadExtNumber r = twisted_period_of_combination(f, chi, 3);
    const QuadExtNumber r2 = twisted_period_of_combination(f.scaled(QuadSurd(2)), chi, 3);
    CHECK(r2 == r * QuadExtNumber::from_surd(QuadSurd(2)));
    const QuadSurd s(BigRational(3, 7), 5, 144169);
    const LambdaRatio a = twisted_lambda_ratio(f, chi, 5, 11);
    const LambdaRatio b = twisted_lambda_ratio(f.scaled(s), chi, 5, 11);
    CHECK(a.value == b.value);
    CHECK(a.conjugate == b.conjugate);
}

TEST_CASE("weight 24 twisted ratios reproduce the reference quotients for both embeddings") {
    const auto& reg = load_fixtures();
    const auto& table = reg.lambda_table("example2_twists");
    const auto& f = reg.eigenform(table.form).form;
    const auto chi = parse_character(table.character);
    const LambdaRatioRow& ref = table.rows.back();
    for (const auto& row : table.rows) {
        CAPTURE(row.s);
        // table(s) / table(12): the untwisted Lambda(f, 12) and sqrt 5 cancel
        QuadExtNumber expected =
            QuadExtNumber::from_surd(row.numerator * QuadSurd(ref.denominator / row.denominator)) /
            QuadExtNumber::from_surd(ref.numerator);
        const LambdaRatio got = twisted_lambda_ratio(f, chi, row.s - 1, ref.s - 1);
        CHECK(got.value == expected);
        CHECK(got.conjugate == expected.conjugate());
    }
}

TEST_CASE("reference central value is sqrt 5 times a square") {
    const auto& t = load_fixtures().lambda_table("example2_twists");
    const auto& row = t.rows.back();
    REQUIRE(row.s == t.square_s);
    CHECK(row.numerator * QuadSurd(BigRational(1, row.sqrt_factor)) == t.square_root * t.square_root);
}

TEST_CASE("zero denominator is reported") {
    // chi mod 3 at weight 12: Lambda(Delta, chi, 6) = 0
    const RnCombination f{1, 12, {{1, QuadSurd(1)}}};
    CHECK_THROWS_AS(twisted_lambda_ratio(f, kronecker_character(-3), 1, 5), ComputationError);
    CHECK_THROWS_AS(twisted_lambda_ratio(f, kronecker_character(-3), 2, 1), ComputationError);
}

TEST_CASE("combination validation") {
    CHECK_THROWS_AS((RnCombination{1, 12, {{0, QuadSurd(1)}}}.validate()), ValidationError);
    CHECK_THROWS_AS((RnCombination{1, 12, {{1, QuadSurd(1)}, {1, QuadSurd(2)}}}.validate()), ValidationError);
    CHECK_THROWS_AS((RnCombination{1, 12, {{1, QuadSurd(0, 1, 2)}, {3, QuadSurd(0, 1, 3)}}}.validate()),
                    ValidationError);
    CHECK_THROWS_AS((RnCombination{1, 13, {{1, QuadSurd(1)}}}.validate()), ValidationError);
}

TEST_CASE("factored expressions") {
    CHECK(evaluate_factored("2(2^7*3^2)^2") == 2654208);
    CHECK(evaluate_factored("(2^6\\cdot3\\cdot15671)^2") == BigRational(BigInt("9053070004224")));
    CHECK(evaluate_factored("2^{10}/5") == BigRational(1024, 5));
    CHECK_THROWS_AS(evaluate_factored("2^"), ValidationError);
    CHECK_THROWS_AS(evaluate_factored("(3"), ValidationError);
    CHECK_THROWS_AS(evaluate_factored("3x"), ValidationError);
}

TEST_CASE("embedded fixtures") {
    const auto& reg = load_fixtures();
    CHECK(reg.eigenforms.size() == 30);
    const auto& w24 = reg.eigenform("level1_weight24_odd");
    REQUIRE(w24.form.terms.size() == 2);
    CHECK(w24.form.terms[0].coeff == QuadSurd(133705));
    CHECK(w24.form.terms[1].coeff == QuadSurd(1421844, 12, 144169));
    CHECK(w24.conjugate_pair);
    const auto& w16 = reg.eigenform("level2_weight16_even");
    CHECK(w16.form.terms.size() == 3);
    CHECK(w16.form.terms[2].n == 6);
    CHECK(reg.forms_at(2, 12).empty());
    CHECK(reg.forms_at(2, 14).size() == 4);
    CHECK(reg.eigenform("level1_weight38_odd").form.terms[1].coeff == QuadSurd(BigInt("2033146500360"), 1, 63737521));
    CHECK(reg.twist_table("example3_central").rows.size() == 13);
    CHECK_THROWS_AS(reg.eigenform("nope"), ValidationError);
}

TEST_CASE("fixture errors carry line numbers") {
    const std::string bad =
        "# comment\n"
        "\n"
        R"({"kind": "eigenform", "name": "x", "level": 1, "weight": 12, "parity": "odd", "terms": [{"n": 2, "coeff": "1"}]})"
        "\n";
    try {
        parse_fixtures(bad);
        FAIL("expected an error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse_fixtures("{not json\n"), doctest::Contains("line 1"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_fixtures(R"({"kind": "twist_table", "name": "t", "form": "f", "m": 7, "rows": [{"D": 8, "text": "2^3", "value": "9"}]})"),
                         doctest::Contains("does not evaluate"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_fixtures(R"({"kind": "twist_table", "name": "t", "form": "f", "m": 7, "rows": []})"),
                         doctest::Contains("unknown eigenform"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_fixtures(R"({"kind": "vector"})"), doctest::Contains("unknown kind"), ValidationError);
}

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

#include <cmath>
#include <random>

#include "twistper/exact_field.hpp"

using namespace twistper;

namespace {

ExactNumber random_element(std::mt19937& rng, int level) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::vector<BigRational> c(static_cast<std::size_t>(euler_phi(level)));
    for (auto& x : c) {
        x = BigRational(num(rng), den(rng));
        x.canonicalize();
    }
    return ExactNumber(level, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) <= 1e-8 * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(15) == std::vector<std::int64_t>{1, -1, 0, 1, -1, 1, 0, -1, 1});
    for (int m : {5, 7, 8, 9, 20, 24, 60}) CHECK(cyclotomic_polynomial(m).size() == std::size_t(euler_phi(m)) + 1);
}

TEST_CASE("ring axioms and numeric homomorphism") {
    std::mt19937 rng(20260901);
    for (int level : {3, 4, 5, 12, 20, 28}) {
        for (int trial = 0; trial < 20; ++trial) {
            const ExactNumber x = random_element(rng, level), y = random_element(rng, level),
                              z = random_element(rng, level);
            CHECK((x + y) * z == x * z + y * z);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
            CHECK(x - x == ExactNumber());
            CHECK(close(numeric_eval(x * y), numeric_eval(x) * numeric_eval(y)));
            CHECK(close(numeric_eval(x + z), numeric_eval(x) + numeric_eval(z)));
            if (!x.is_zero()) {
                CHECK(x * invert(x) == ExactNumber(1));
                CHECK((y / x) * x == y);
            }
        }
    }
}

TEST_CASE("mixed levels lift to the lcm") {
    const ExactNumber i = imaginary_unit();
    const ExactNumber w = root_of_unity(3, 1);
    const ExactNumber p = i * w;
    CHECK(p.level() == 12);
    CHECK(p == root_of_unity(12, 7));  // i = zeta_12^3, zeta_3 = zeta_12^4
    CHECK(w.lifted(12) == root_of_unity(12, 4));
    CHECK(pow(root_of_unity(12, 1), 12) == ExactNumber(1));
    CHECK(pow(root_of_unity(7, 2), -3) == root_of_unity(7, 1));
    CHECK(i * i == ExactNumber(-1));
}

TEST_CASE("sqrt_integer squares to n") {
    for (int n = 1; n <= 30; ++n) {
        if (!is_squarefree(n)) continue;
        const ExactNumber s = sqrt_integer(n);
        CHECK(s * s == ExactNumber(n));
        CHECK(numeric_eval(s).real() == doctest::Approx(std::sqrt(double(n))));
        CHECK(std::abs(numeric_eval(s).imag()) < 1e-12);
        CHECK(sqrt_integer(n, 8 * n) * sqrt_integer(n, 8 * n) == ExactNumber(n));
    }
    CHECK_THROWS_AS(sqrt_integer(4), ValidationError);
}

TEST_CASE("surd recognition") {
    const auto r = recognize_surd(ExactNumber(BigRational(3, 7)));
    REQUIRE(r);
    CHECK(r->is_rational());
    CHECK(r->a == BigRational(3, 7));

    const ExactNumber x = ExactNumber(BigRational(1, 2)) + ExactNumber(BigRational(-5, 3)) * sqrt_integer(3);
    const auto s = recognize_surd(x);
    REQUIRE(s);
    CHECK(*s == QuadSurd(BigRational(1, 2), BigRational(-5, 3), 3));
    CHECK(s->to_exact(12) == x);

    const auto t = recognize_surd(ExactNumber(2) * sqrt_integer(5, 40));
    REQUIRE(t);
    CHECK(*t == QuadSurd(0, 2, 5));

    CHECK_FALSE(recognize_surd(imaginary_unit()));
    CHECK_FALSE(recognize_surd(root_of_unity(5, 1)));
}

TEST_CASE("QuadSurd arithmetic") {
    const QuadSurd x(1, 2, 7), y(BigRational(-1, 3), 1, 7);
    CHECK(x * y == QuadSurd(BigRational(-1, 3) + 14, 1 - BigRational(2, 3), 7));
    CHECK((x / y) * y == x);
    CHECK(x * x.conjugate() == QuadSurd(x.norm()));
    CHECK(x.to_double() == doctest::Approx(1 + 2 * std::sqrt(7.0)));
    CHECK((x - x).is_zero());
    CHECK_THROWS_AS(x + QuadSurd(0, 1, 3), ComputationError);
    CHECK_THROWS_AS(QuadSurd(0, 1, 0), ValidationError);
}

TEST_CASE("surd text forms") {
    CHECK(to_string(QuadSurd(BigRational(-5, 2))) == "-5/2");
    CHECK(to_string(QuadSurd(0, 1, 3)) == "sqrt(3)");
    CHECK(to_string(QuadSurd(0, -3, 3)) == "-3*sqrt(3)");
    CHECK(to_string(QuadSurd(1, -1, 2)) == "1 - sqrt(2)");
    CHECK(to_string(QuadSurd(540, 12, 144169)) == "540 + 12*sqrt(144169)");
    for (const char* text : {"540 + 12*sqrt(144169)", "-1/3 - 2/5*sqrt(7)", "sqrt(2)", "-4/9", "3*sqrt(5)"}) {
        CHECK(to_string(parse_quad_surd(text)) == text);
    }
    CHECK(parse_quad_surd("1+sqrt(2)") == QuadSurd(1, 1, 2));
    CHECK(pretty_surd(QuadSurd(0, BigRational(-(1 << 18) * 9, 5), 3)) == "-(2^18*3^2/5)*sqrt(3)");
    CHECK(pretty_rational(BigRational(-10, 3)) == "-2*5/3");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_quad_surd("1+sqrt(x)"), ValidationError);
}

TEST_CASE("quadratic extension carrier") {
    const ExactNumber i = imaginary_unit();
    const QuadExtNumber u(i, ExactNumber(2), 5), v(ExactNumber(1), i, 5);
    const QuadExtNumber p = u * v;
    const double r5 = std::sqrt(5.0);
    const auto expect = (std::complex<double>(0, 1) + 2 * r5) * (1.0 + std::complex<double>(0, 1) * r5);
    CHECK(close(p.numeric(), expect));
    CHECK(close(p.conjugate().numeric(), p.numeric(false)));
    CHECK((p / v) == u);
    CHECK(QuadExtNumber::from_surd(QuadSurd(1, 1, 5)).numeric().real() == doctest::Approx(1 + r5));
}

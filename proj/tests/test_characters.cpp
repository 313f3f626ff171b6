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

#include <numeric>
#include <random>

#include "twistper/characters.hpp"

using namespace twistper;

TEST_CASE("Kronecker characters") {
    const auto chi = kronecker_character(-3);
    CHECK(chi.modulus() == 3);
    CHECK(chi.parity() == -1);
    CHECK(chi(1) == ExactNumber(1));
    CHECK(chi(2) == ExactNumber(-1));
    CHECK(chi(3) == ExactNumber(0));
    CHECK(kronecker_character(5).is_even());
    CHECK(kronecker_character(-4).parity() == -1);
    CHECK(kronecker_character(8).is_even());
    CHECK(kronecker_character(-7).parity() == -1);
    for (std::int64_t D : {-3, -4, 5, -7, 8, -8, 12, 13, -15}) {
        const auto k = kronecker_character(D);
        CHECK(k.is_primitive());
        CHECK(k.parity() == (D > 0 ? 1 : -1));
        for (int h = 0; h < k.modulus(); ++h) CHECK(k(h) == ExactNumber(kronecker_symbol(D, h)));
    }
    CHECK_THROWS_AS(kronecker_character(12 * 3), ValidationError);
    CHECK_THROWS_AS(kronecker_character(1), ValidationError);
}

TEST_CASE("primitive character counts") {
    // Number of primitive characters mod D: the Dirichlet inverse of 1 against phi.
    auto primitive_count = [](int D) {
        int total = 0;
        for (std::int64_t d : divisors(D)) {
            const std::int64_t q = D / d;
            int mu = 1;
            for (auto [p, e] : factorize(q)) mu = (e > 1) ? 0 : -mu;
            total += mu * static_cast<int>(euler_phi(d));
        }
        return total;
    };
    CHECK(enumerate_primitive_characters(5).size() == 3);
    CHECK(enumerate_primitive_characters(4).size() == 1);
    CHECK(enumerate_primitive_characters(12).size() == 1);
    CHECK(enumerate_primitive_characters(6).empty());
    for (int D = 3; D <= 40; ++D) {
        const auto chars = enumerate_primitive_characters(D);
        CHECK(static_cast<int>(chars.size()) == primitive_count(D));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            CHECK(chars[i].is_primitive());
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(chars[i] == chars[j]);
        }
    }
}

TEST_CASE("character table validation") {
    CHECK_THROWS_AS(DirichletCharacter::from_exponents(5, 4, {-1, 1, 1, 3, 2}), ValidationError);   // chi(1) != 1
    CHECK_THROWS_AS(DirichletCharacter::from_exponents(5, 4, {-1, 0, 1, 1, 2}), ValidationError);   // not multiplicative
    CHECK_THROWS_AS(DirichletCharacter::from_exponents(4, 2, {-1, 0, 0, 1}), ValidationError);      // chi(2) must be 0
    const auto trivial = DirichletCharacter::from_exponents(6, 1, {-1, 0, -1, -1, -1, 0});
    CHECK(trivial.conductor() == 1);
    CHECK_FALSE(trivial.is_primitive());
}

TEST_CASE("Gauss sums: tau(chi) tau(conj chi) = chi(-1) D") {
    for (int D = 3; D <= 40; ++D) {
        for (const auto& chi : enumerate_primitive_characters(D)) {
            CAPTURE(chi.label());
            CHECK(gauss_sum(chi) * gauss_sum(chi.conjugate()) == ExactNumber(chi.parity() * D));
        }
    }
    CHECK(gauss_sum(kronecker_character(-3)) == imaginary_unit() * sqrt_integer(3));
    CHECK(gauss_sum(kronecker_character(5)) == sqrt_integer(5));
}

TEST_CASE("conjugate character") {
    for (const auto& chi : enumerate_primitive_characters(7)) {
        const auto bar = chi.conjugate();
        for (int h = 1; h < 7; ++h) CHECK(chi(h) * bar(h) == ExactNumber(1));
        if (chi.order() <= 2) CHECK(bar == chi);
    }
}

TEST_CASE("four-argument character is independent of the Bezout pair") {
    std::mt19937 rng(7349);
    const std::vector<int> moduli{3, 4, 5, 7, 8, 12, 13};
    std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1);
    std::uniform_int_distribution<int> small(1, 60), shift(-25, 25);
    int tested = 0;
    while (tested < 1000) {
        const int D = moduli[pick(rng)];
        const auto chars = enumerate_primitive_characters(D);
        const auto& chi = chars[static_cast<std::size_t>(small(rng)) % chars.size()];
        const std::int64_t a = small(rng), c = small(rng);
        if (std::gcd(a, c) != 1) continue;
        // any k, l with k a + l c = D
        const auto bz = extended_gcd(a, c);
        const std::int64_t t = shift(rng);
        const std::int64_t k = bz.x * D + t * c, l = bz.y * D - t * a;
        REQUIRE(k * a + l * c == D);
        const ExactNumber value = chi_four_tuple(chi, a, c, k, l);
        // every (b, d) with a d - b c = 1 is (b0 + s a, d0 + s c)
        const std::int64_t b0 = -bz.y, d0 = bz.x;
        REQUIRE(a * d0 - b0 * c == 1);
        for (int s : {-3, 0, 1, 5}) {
            const std::int64_t b = b0 + s * a, d = d0 + s * c;
            CHECK(chi(k * b + l * d) == value);
        }
        ++tested;
    }
}

TEST_CASE("character label parsing round trip") {
    for (int D : {3, 5, 7, 8, 12, 13}) {
        for (const auto& chi : enumerate_primitive_characters(D)) {
            const auto back = parse_character(format_character_table(chi));
            CHECK(back == chi);
            CHECK(parse_character(chi.label()) == chi);
        }
    }
    CHECK(parse_character("kronecker:-3") == kronecker_character(-3));
    CHECK(parse_character("table:3:0,zeta[2]^0,zeta[2]^1") == kronecker_character(-3));
    CHECK_THROWS_AS(parse_character("legendre:3"), ValidationError);
    CHECK_THROWS_AS(parse_character("kronecker:x"), ValidationError);
    CHECK_THROWS_AS(parse_character("table:3:0,1"), ValidationError);
}

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

#include <random>

#include "twistper/bernoulli.hpp"

using namespace twistper;

namespace {

BigRational q(long p, long r = 1) {
    BigRational x(p, r);
    x.canonicalize();
    return x;
}

ExactPolynomial rational_poly(std::vector<BigRational> ascending) {
    std::vector<ExactNumber> c(ascending.begin(), ascending.end());
    return ExactPolynomial(std::move(c));
}

// Bernoulli numbers from sum_{j<=k} binom(k+1, j) B_j = 0.
std::vector<BigRational> recurrence_numbers(int n) {
    std::vector<BigRational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigRational acc = 0;
        for (int j = 0; j < k; ++j) acc += BigRational(binomial(k + 1, j)) * b[j];
        b[k] = -acc / (k + 1);
    }
    return b;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
    const auto oracle = recurrence_numbers(30);
    for (int k = 0; k <= 30; ++k) CHECK(bernoulli_number(k) == oracle[k]);
    CHECK(bernoulli_number(1) == q(-1, 2));
    CHECK(bernoulli_number(12) == q(-691, 2730));
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(2) == QPolynomial({q(1, 6), q(-1), q(1)}));
    CHECK(bernoulli_poly(-1).is_zero());
    for (int k = 1; k <= 12; ++k) {
        // B_k(x + 1) - B_k(x) = k x^{k-1}
        const QPolynomial diff = bernoulli_shifted(k, 1) - bernoulli_poly(k);
        CHECK(diff == QPolynomial::monomial(BigRational(k), k - 1));
    }
    CHECK(bernoulli_frac(1, 3) == 0);
    CHECK(bernoulli_frac(1, q(7, 4)) == q(1, 4));
    CHECK(bernoulli_frac(2, q(-1, 3)) == bernoulli_poly(2).evaluate(q(2, 3)));
}

TEST_CASE("addition formula for random rational shifts") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 97);
    for (int trial = 0; trial < 100; ++trial) {
        const BigRational a = q(num(rng), den(rng));
        for (int k = 0; k <= 12; ++k) {
            // independent side: substitute a + X into B_k by Horner
            const QPolynomial shift({a, BigRational(1)});
            QPolynomial direct;
            const QPolynomial bk = bernoulli_poly(k);
            const auto& c = bk.ascending();
            for (auto it = c.rbegin(); it != c.rend(); ++it) direct = direct * shift + QPolynomial::constant(*it);
            CHECK(bernoulli_shifted(k, a) == direct);
        }
    }
}

TEST_CASE("generalized Bernoulli numbers for D = 3") {
    const auto chi = kronecker_character(-3);
    const std::pair<int, BigRational> reference[] = {
        {1, q(-1, 3)}, {3, q(2, 3)}, {5, q(-10, 3)}, {7, q(98, 3)}, {9, q(-1618, 3)}};
    for (const auto& [k, value] : reference) CHECK(generalized_bernoulli_number(k, chi) == ExactNumber(value));
    for (int k = 0; k <= 10; k += 2) CHECK(generalized_bernoulli_number(k, chi).is_zero());
}

TEST_CASE("generalized Bernoulli polynomials for D = 3") {
    const auto chi = kronecker_character(-3);
    CHECK(generalized_bernoulli_poly(2, chi) == rational_poly({0, q(-2, 3)}));
    CHECK(generalized_bernoulli_poly(4, chi) == rational_poly({0, q(8, 3), 0, q(-4, 3)}));
    CHECK(generalized_bernoulli_poly(6, chi) == rational_poly({0, -20, 0, q(40, 3), 0, -2}));
    CHECK(generalized_bernoulli_poly(8, chi) == rational_poly({0, q(784, 3), 0, q(-560, 3), 0, q(112, 3), 0, q(-8, 3)}));
    // linear coefficient: 10 B_{9,chi} = -16180/3 from the binomial form
    const ExactPolynomial b10 = generalized_bernoulli_poly(10, chi);
    CHECK(b10 == rational_poly({0, q(-16180, 3), 0, 3920, 0, -840, 0, 80, 0, q(-10, 3)}));
    CHECK(b10.coefficient(1) == ExactNumber(10) * generalized_bernoulli_number(9, chi));
    // D^{k-1} sum_h chi(h) B_k((h + x)/D) evaluated at sample points
    for (const BigRational& x : {q(1), q(2, 5), q(-7, 3)}) {
        BigRational direct = 0;
        for (int h = 1; h <= 2; ++h) {
            direct += BigRational(kronecker_symbol(-3, h)) * bernoulli_poly(10).evaluate((h + x) / 3);
        }
        direct *= rational_pow(3, 9);
        CHECK(b10.evaluate(ExactNumber(x)) == ExactNumber(direct));
    }
    CHECK(generalized_bernoulli_poly(-2, chi).is_zero());
}

TEST_CASE("parity vanishing and B_0 for primitive characters") {
    for (int D = 3; D <= 12; ++D) {
        for (const auto& chi : enumerate_primitive_characters(D)) {
            CAPTURE(chi.label());
            CHECK(generalized_bernoulli_number(0, chi).is_zero());
            for (int k = 1; k <= 12; ++k) {
                // both defining expressions are compared inside the call
                const ExactNumber b = generalized_bernoulli_number(k, chi);
                if (chi.parity() != (k % 2 == 0 ? 1 : -1)) CHECK(b.is_zero());
            }
        }
    }
}

TEST_CASE("generalized Bernoulli numbers of a complex character are nonzero in the right parity") {
    const auto chars = enumerate_primitive_characters(5);
    for (const auto& chi : chars) {
        const int k = chi.is_even() ? 2 : 1;
        CHECK_FALSE(generalized_bernoulli_number(k, chi).is_zero());
    }
}

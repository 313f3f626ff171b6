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
#include <numeric>

#include "twistper/numeric_verify.hpp"

using namespace twistper;

namespace {

// q prod (1 - q^n)^24 by repeated multiplication.
std::vector<BigInt> tau_by_product(int M) {
    std::vector<BigInt> series(static_cast<std::size_t>(M), 0);  // coefficient of q^j, j < M
    series[0] = 1;
    for (int n = 1; n < M; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int j = M - 1; j >= n; --j) series[j] -= series[j - n];
        }
    }
    std::vector<BigInt> tau(static_cast<std::size_t>(M) + 1, 0);
    for (int j = 0; j < M; ++j) tau[j + 1] = series[j];
    return tau;
}

BigInt sigma11(int n) {
    BigInt s = 0;
    for (std::int64_t d : divisors(n)) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), 11);
        s += p;
    }
    return s;
}

}  // namespace

TEST_CASE("tau against the product expansion") {
    const QExpansion t = tau_coefficients(300);
    const auto oracle = tau_by_product(300);
    for (int n = 1; n <= 300; ++n) CHECK(t[n] == oracle[n]);
    CHECK(t[2] == -24);
    CHECK(t[3] == 252);
    CHECK(t[12] == -370944);
}

TEST_CASE("tau congruence mod 691 and multiplicativity") {
    const QExpansion t = tau_coefficients(2000);
    for (int n = 1; n <= 2000; ++n) {
        const BigInt r = (t[n] - sigma11(n)) % 691;
        CHECK(r == 0);
    }
    for (int m = 1; m <= 40; ++m)
        for (int n = 1; n <= 40; ++n)
            if (std::gcd(m, n) == 1) CHECK(t[m * n] == t[m] * t[n]);
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
        BigInt p11;
        mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
        CHECK(t[p * p] == t[p] * t[p] - p11);
    }
}

TEST_CASE("incomplete gamma ratio") {
    // Gamma(1, x) / x = e^{-x} / x ; Gamma(3, x) = e^{-x}(x^2 + 2x + 2)
    CHECK(upper_gamma_ratio(1, 2.0) == doctest::Approx(std::exp(-2.0) / 2.0));
    const double x = 0.7;
    CHECK(upper_gamma_ratio(3, x) == doctest::Approx(std::exp(-x) * (x * x + 2 * x + 2) / (x * x * x)));
}

TEST_CASE("completed L-function of Delta") {
    CHECK(lambda_delta(2) == doctest::Approx(0.003707710464948).epsilon(1e-12));
    for (int s = 1; s <= 11; ++s) CHECK(lambda_delta(s) == doctest::Approx(lambda_delta(12 - s)).epsilon(1e-12));
    CHECK(lambda_delta(6) > 0);
    CHECK_THROWS_AS(lambda_delta(12), ValidationError);
}

TEST_CASE("Petersson norm converges") {
    const double limit = petersson_delta_inverse(20000);
    double previous_err = HUGE_VAL;
    for (int m : {100, 200, 500, 1000, 5000, 10000}) {
        const double err = std::fabs(petersson_delta_inverse(m) - limit);
        CHECK(err <= previous_err);
        previous_err = err;
    }
    CHECK(limit == doctest::Approx(965845.709168185).epsilon(1e-6));
    CHECK_THROWS_AS(petersson_delta_inverse(10), ValidationError);
}

TEST_CASE("twisted values of Delta for D = 3") {
    const auto chi = kronecker_character(-3);
    CHECK(numeric_twisted_lambda(chi, 1).real() == doctest::Approx(-228.22304046813742).epsilon(1e-10));
    CHECK(numeric_twisted_lambda(chi, 3).real() == doctest::Approx(-14.263940029258589).epsilon(1e-10));
    CHECK(std::abs(numeric_twisted_lambda(chi, 5)) < 1e-10);
    for (int m : {1, 3, 5, 7, 9}) CHECK(std::abs(numeric_twisted_lambda(chi, m).imag()) < 1e-9);
    // functional equation for the twist: s <-> 12 - s with chi real, root number 1
    CHECK(numeric_twisted_lambda(chi, 1).real() == doctest::Approx(-numeric_twisted_lambda(chi, 9).real()).epsilon(1e-10));
}

TEST_CASE("exact traces against floating products") {
    const auto chi = kronecker_character(-3);
    for (int m = 1; m <= 9; m += 2) {
        const NumericReport r = verify_trace_numeric({PeriodContext(1, 10, 1, chi), m});
        CAPTURE(r.check);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(verify_trace_numeric({PeriodContext(2, 10, 1, chi), 1}), ValidationError);
}

TEST_CASE("report arithmetic") {
    const auto r = make_report("x", 2.0, 2.1, 0.06, true);
    CHECK(r.abs_err == doctest::Approx(0.1));
    CHECK(r.rel_err == doctest::Approx(0.05));
    CHECK(r.pass);
    CHECK_FALSE(make_report("y", 2.0, 2.1, 0.06, false).pass);
}

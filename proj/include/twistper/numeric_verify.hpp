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

#ifndef TWISTPER_NUMERIC_VERIFY_HPP
#define TWISTPER_NUMERIC_VERIFY_HPP

#include <complex>
#include <string>
#include <vector>

#include "twistper/trace_formula.hpp"

namespace twistper {

/// Fourier coefficients a(1..M) of a cusp form; a[0] is unused.
struct QExpansion {
    int weight = 12;
    int level = 1;
    std::vector<BigInt> a;

    int truncation() const { return static_cast<int>(a.size()) - 1; }
    const BigInt& operator[](int n) const { return a.at(static_cast<std::size_t>(n)); }
};

/// tau(1..M) from q * (prod (1 - q^n)^3)^8 with Jacobi's series for the cube.
QExpansion tau_coefficients(int M);

/// Gamma(k, x) / x^k for integer k >= 1.
double upper_gamma_ratio(int k, double x);

/// Lambda(Delta, s) = (2 pi)^{-s} Gamma(s) L(Delta, s), s in 1..11.
double lambda_delta(int s, int truncation = 200);

/// 1 / <Delta, Delta> from the Rankin-type series sum tau(m)^2 / m^20.
double petersson_delta_inverse(int truncation = 10000);

/// int_0^{i infinity} Delta(z + h/D) z^m dz, split at height 1/D; the lower piece
/// goes through the cusp h/D with gamma = (h b; D d), d = h^{-1} mod D.
std::complex<double> numeric_twisted_period(int m, std::int64_t h, std::int64_t D, int truncation = 400);

/// Lambda(Delta, chi, m + 1) = (-i D)^{m+1} tau(conj chi)^{-1} sum_h conj chi(h) r_{m,h/D}(Delta).
std::complex<double> numeric_twisted_lambda(const DirichletCharacter& chi, int m, int truncation = 400);

struct NumericReport {
    std::string check;
    double expected = 0;
    double computed = 0;
    double abs_err = 0;
    double rel_err = 0;
    double tolerance = 0;
    bool relative = false;
    bool pass = false;
};

/// pass <=> err <= tolerance, err relative to |expected| when `relative`.
NumericReport make_report(std::string check, double expected, double computed, double tolerance, bool relative);

/// Lambda(Delta, chi, m+1) Lambda(Delta, n+1) / <Delta, Delta> against the exact
/// trace; level 1, weight 12 only.  Relative tolerance 1e-5, absolute (scaled
/// by the m = 1 magnitude) when the exact value is 0.
NumericReport verify_trace_numeric(const TraceQuery& q, int truncation = 400);

}  // namespace twistper

#endif  // TWISTPER_NUMERIC_VERIFY_HPP

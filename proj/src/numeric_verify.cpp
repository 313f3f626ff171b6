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

#include "twistper/numeric_verify.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

namespace twistper {

namespace {

using i128 = __int128;

BigInt to_big(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    do {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    } while (u != 0);
    return BigInt((neg ? "-" : "") + digits);
}

/// tau(0..M) as 128-bit integers, cached at the largest M requested so far.
const std::vector<i128>& tau_table(int M) {
    static std::mutex mutex;
    static std::vector<i128> table;
    std::lock_guard lock(mutex);
    if (static_cast<int>(table.size()) > M) return table;
    // prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}
    std::vector<std::pair<int, int>> jacobi;
    for (int k = 0; k * (k + 1) / 2 <= M; ++k) jacobi.emplace_back(k * (k + 1) / 2, (k % 2 ? -1 : 1) * (2 * k + 1));
    std::vector<i128> power(M, 0);  // coefficients of q^0..q^{M-1}
    power[0] = 1;
    for (int round = 0; round < 8; ++round) {
        std::vector<i128> next(M, 0);
        for (int e = 0; e < M; ++e) {
            if (power[e] == 0) continue;
            for (const auto& [shift, c] : jacobi) {
                if (e + shift >= M) break;
                next[e + shift] += power[e] * c;
            }
        }
        power = std::move(next);
    }
    table.assign(static_cast<std::size_t>(M) + 1, 0);
    for (int n = 1; n <= M; ++n) table[n] = power[n - 1];
    return table;
}

constexpr double two_pi = 2 * std::numbers::pi;

double tau_float(int n, int M) { return static_cast<double>(static_cast<long double>(tau_table(M)[n])); }

/// Terms are dropped once they fall below this fraction of the running sum.
constexpr double cutoff = 1e-18;

}  // namespace

QExpansion tau_coefficients(int M) {
    if (M < 1 || M > 1000000) throw ValidationError("truncation must be in 1..10^6");
    const auto& t = tau_table(M);
    QExpansion out;
    out.a.reserve(static_cast<std::size_t>(M) + 1);
    for (int n = 0; n <= M; ++n) out.a.push_back(to_big(t[n]));
    return out;
}

double upper_gamma_ratio(int k, double x) {
    if (k < 1) throw ValidationError("upper_gamma_ratio needs k >= 1");
    // (k-1)! e^{-x} sum_{j<k} x^{j-k} / j!
    double sum = 0, term = std::exp(-x) * std::tgamma(k) / std::pow(x, k);
    for (int j = 0; j < k; ++j) {
        sum += term;
        term *= x / (j + 1);
    }
    return sum;
}

double lambda_delta(int s, int truncation) {
    if (s < 1 || s > 11) throw ValidationError("lambda_delta: s must be in 1..11");
    double sum = 0;
    for (int n = 1; n <= truncation; ++n) {
        const double x = two_pi * n;
        const double term = tau_float(n, truncation) * (upper_gamma_ratio(s, x) + upper_gamma_ratio(12 - s, x));
        sum += term;
        if (std::fabs(term) < cutoff * std::fabs(sum)) break;
    }
    return sum;
}

double petersson_delta_inverse(int truncation) {
    if (truncation < 100) throw ValidationError("petersson_delta_inverse: truncation must be at least 100");
    long double series = 0, zeta9 = 0, zeta18 = 0;
    for (int m = truncation; m >= 1; --m) {  // small terms first
        const long double t = static_cast<long double>(tau_table(truncation)[m]);
        const long double mm = m;
        series += t * t / std::pow(mm, 20.0L);
        zeta9 += 1 / std::pow(mm, 9.0L);
        zeta18 += 1 / std::pow(mm, 18.0L);
    }
    const long double pi = std::numbers::pi_v<long double>;
    const long double factor = 2.0L / 245 * std::pow(4.0L, 20) * std::pow(pi, 29) / std::tgamma(21.0L) * zeta9 / zeta18;
    return static_cast<double>(factor / series);
}

std::complex<double> numeric_twisted_period(int m, std::int64_t h, std::int64_t D, int truncation) {
    if (m < 0 || m > 10) throw ValidationError("numeric_twisted_period: m must be in 0..10");
    if (D < 1) throw ValidationError("numeric_twisted_period: D must be positive");
    if (std::gcd(h, D) != 1) throw ValidationError("numeric_twisted_period: gcd(h, D) != 1");
    const std::int64_t hbar = mod_inverse(mod_floor(h, D), D);
    const std::complex<double> i(0, 1);
    // Gamma(k, 2 pi n / D) / (2 pi n)^k = D^{-k} upper_gamma_ratio(k, 2 pi n / D)
    const double dd = static_cast<double>(D);
    const double upper_scale = std::pow(dd, -(m + 1));
    const double lower_scale = std::pow(dd, 10 - 2 * m) * std::pow(dd, -(11 - m)) * (m % 2 ? 1.0 : -1.0);
    std::complex<double> upper = 0, lower = 0;
    for (int n = 1; n <= truncation; ++n) {
        const double x = two_pi * n / static_cast<double>(D);
        const double t = tau_float(n, truncation);
        const double angle = two_pi * static_cast<double>(mod_floor(n * h, D)) / static_cast<double>(D);
        const double angle_bar = -two_pi * static_cast<double>(mod_floor(n * hbar, D)) / static_cast<double>(D);
        const std::complex<double> up = t * std::polar(1.0, angle) * upper_gamma_ratio(m + 1, x) * upper_scale;
        const std::complex<double> lo = t * std::polar(1.0, angle_bar) * upper_gamma_ratio(11 - m, x) * lower_scale;
        upper += up;
        lower += lo;
        if (n > 10 && std::abs(up) < cutoff * std::abs(upper) && std::abs(lo) < cutoff * std::max(std::abs(lower), 1e-300)) {
            break;
        }
    }
    return std::pow(i, m + 1) * upper + std::pow(i, 11 - m) * lower;
}

std::complex<double> numeric_twisted_lambda(const DirichletCharacter& chi, int m, int truncation) {
    const std::int64_t D = chi.modulus();
    const DirichletCharacter chibar = chi.conjugate();
    std::complex<double> sum = 0;
    for (std::int64_t h = 1; h < D; ++h) {
        if (std::gcd(h, D) != 1) continue;
        sum += numeric_eval(chibar(h)) * numeric_twisted_period(m, h, D, truncation);
    }
    const std::complex<double> gauss = numeric_eval(gauss_sum(chibar));
    return std::pow(std::complex<double>(0, -static_cast<double>(D)), m + 1) * sum / gauss;
}

NumericReport make_report(std::string check, double expected, double computed, double tolerance, bool relative) {
    NumericReport r;
    r.check = std::move(check);
    r.expected = expected;
    r.computed = computed;
    r.abs_err = std::fabs(computed - expected);
    r.rel_err = expected != 0 ? r.abs_err / std::fabs(expected) : r.abs_err;
    r.tolerance = tolerance;
    r.relative = relative;
    r.pass = (relative ? r.rel_err : r.abs_err) <= tolerance;
    return r;
}

NumericReport verify_trace_numeric(const TraceQuery& q, int truncation) {
    q.validate();
    if (q.ctx.level() != 1 || q.ctx.w() != 10) {
        throw ValidationError("verify_trace_numeric covers level 1, weight 12 only");
    }
    const std::complex<double> twisted = numeric_twisted_lambda(q.ctx.character(), q.m, truncation);
    const double computed = twisted.real() * lambda_delta(q.ctx.n() + 1, truncation) *
                            petersson_delta_inverse(std::max(truncation, 10000));
    const double expected = numeric_eval(trace_direct(q)).real();
    const std::string name = "trace m=" + std::to_string(q.m) + " n=" + std::to_string(q.ctx.n());
    if (expected == 0) {
        // scale of the nonvanishing neighbours
        const double scale = std::fabs(numeric_eval(trace_direct({q.ctx.with_n(1), 1})).real());
        NumericReport r = make_report(name, 0, computed / std::max(scale, 1.0), 1e-5, false);
        r.computed = computed;
        return r;
    }
    return make_report(name, expected, computed, 1e-5, true);
}

}  // namespace twistper

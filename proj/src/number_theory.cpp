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

#include "twistper/number_theory.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <numeric>
#include <string>

namespace twistper {

BezoutResult extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    const auto [g, x, y] = extended_gcd(mod_floor(a, m), m);
    (void)y;
    if (g != 1) {
        throw ValidationError("mod_inverse: " + std::to_string(a) + " is not invertible modulo " +
                              std::to_string(m));
    }
    return mod_floor(x, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        result = result / p * (p - 1);
    }
    return result;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        out.push_back(p);
    }
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t count = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return false;
    }
    return true;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigRational rational_pow(const BigRational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (sgn(base) == 0) throw ComputationError("rational_pow: zero to a negative power");
        BigRational inv = 1 / base;
        return rational_pow(inv, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    BigRational out(num, den);
    out.canonicalize();
    return out;
}

std::vector<std::pair<BigInt, int>> factorize_partial(BigInt n, std::int64_t bound) {
    std::vector<std::pair<BigInt, int>> out;
    n = abs(n);
    if (n <= 1) return out;
    for (std::int64_t p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
        const BigInt bp = static_cast<long>(p);
        if (bp * bp > n) break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            n /= bp;
            ++e;
        }
        if (e > 0) out.emplace_back(bp, e);
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            BigInt root = sqrt(n);
            out.emplace_back(root, 2);
        } else {
            out.emplace_back(n, 1);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

std::pair<BigInt, BigInt> square_and_squarefree(const BigInt& n, std::int64_t bound) {
    BigInt square = 1, free = 1;
    for (const auto& [p, e] : factorize_partial(n, bound)) {
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2 == 1) free *= p;
    }
    return {square, free};
}

}  // namespace twistper

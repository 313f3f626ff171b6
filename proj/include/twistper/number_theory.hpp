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

#ifndef TWISTPER_NUMBER_THEORY_HPP
#define TWISTPER_NUMBER_THEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twistper {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Bad input: malformed request, violated precondition.  CLI exit code 2.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed request whose value cannot be produced (parity, zero divisor).  CLI exit code 1.
class ComputationError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct BezoutResult {
    std::int64_t gcd;
    std::int64_t x;  // a*x + b*y = gcd
    std::int64_t y;
};

BezoutResult extended_gcd(std::int64_t a, std::int64_t b);

/// Least non-negative residue.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Inverse of a modulo m in [0, m); throws ValidationError when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t euler_phi(std::int64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

bool is_squarefree(std::int64_t n);

/// binom(n, k) with binom = 0 for k < 0 or k > n (also for n < 0).
BigInt binomial(std::int64_t n, std::int64_t k);

BigRational rational_pow(const BigRational& base, std::int64_t exponent);

/// Split |n| = s^2 * f with f squarefree.  Trial division up to `bound`; a leftover
/// cofactor is treated as squarefree unless it is a perfect square.
std::pair<BigInt, BigInt> square_and_squarefree(const BigInt& n, std::int64_t bound = 1000000);

/// Factorization of a big integer by trial division up to `bound`; the last entry may
/// be an unfactored cofactor (reported with exponent 1).
std::vector<std::pair<BigInt, int>> factorize_partial(BigInt n, std::int64_t bound = 1000000);

}  // namespace twistper

#endif  // TWISTPER_NUMBER_THEORY_HPP

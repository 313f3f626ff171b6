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

#ifndef TWISTPER_EXACT_FIELD_HPP
#define TWISTPER_EXACT_FIELD_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistper/number_theory.hpp"

namespace twistper {

BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);

inline bool is_zero_scalar(const BigRational& q) { return sgn(q) == 0; }

/// Tables for Q(zeta_M): the M-th cyclotomic polynomial and the reductions of
/// x^k (0 <= k < M) modulo it.  Built once per level, immutable afterwards.
struct CyclotomicLevel {
    int level = 1;
    int degree = 1;                  // phi(level)
    std::vector<std::int64_t> poly;  // ascending, monic, size degree + 1
    // powers[k] = sparse (index, coefficient) form of x^k mod poly
    std::vector<std::vector<std::pair<int, std::int64_t>>> powers;
};

/// Shared registry; the returned reference stays valid for the program lifetime.
const CyclotomicLevel& cyclotomic_level(int level);

/// Ascending integer coefficients of the M-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(int level);

/// Element of Q(zeta_M) in the power basis 1, zeta_M, ..., zeta_M^{phi(M)-1}.
/// Binary operations lift both operands to the lcm of their levels.
class ExactNumber {
   public:
    ExactNumber();  // zero at level 1
    ExactNumber(const BigRational& q);  // NOLINT: rationals embed implicitly
    ExactNumber(long value);            // NOLINT
    ExactNumber(int value) : ExactNumber(static_cast<long>(value)) {}  // NOLINT
    ExactNumber(int level, std::vector<BigRational> coords);

    int level() const { return table_->level; }
    const std::vector<BigRational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coordinate; equals the value when is_rational().
    const BigRational& constant_term() const { return coords_[0]; }

    /// Same number expressed at a multiple of the current level.
    ExactNumber lifted(int new_level) const;

    ExactNumber operator-() const;
    ExactNumber& operator+=(const ExactNumber& rhs);
    ExactNumber& operator-=(const ExactNumber& rhs);
    ExactNumber& operator*=(const ExactNumber& rhs);
    ExactNumber& operator*=(const BigRational& rhs);
    ExactNumber& operator/=(const ExactNumber& rhs);

    friend ExactNumber operator+(ExactNumber lhs, const ExactNumber& rhs) { return lhs += rhs; }
    friend ExactNumber operator-(ExactNumber lhs, const ExactNumber& rhs) { return lhs -= rhs; }
    friend ExactNumber operator*(ExactNumber lhs, const ExactNumber& rhs) { return lhs *= rhs; }
    friend ExactNumber operator/(ExactNumber lhs, const ExactNumber& rhs) { return lhs /= rhs; }
    friend bool operator==(const ExactNumber& lhs, const ExactNumber& rhs);
    friend bool operator!=(const ExactNumber& lhs, const ExactNumber& rhs) { return !(lhs == rhs); }

   private:
    ExactNumber(const CyclotomicLevel* table, std::vector<BigRational> coords);

    const CyclotomicLevel* table_;
    std::vector<BigRational> coords_;
};

inline bool is_zero_scalar(const ExactNumber& x) { return x.is_zero(); }

ExactNumber cyclotomic_embed(const BigRational& q, int level);
ExactNumber root_of_unity(int level, std::int64_t k);
/// The imaginary unit, zeta_4.
ExactNumber imaginary_unit();
ExactNumber invert(const ExactNumber& x);
ExactNumber pow(const ExactNumber& base, std::int64_t exponent);
std::complex<double> numeric_eval(const ExactNumber& x);

/// Positive square root of a squarefree n inside Q(zeta_level); level must be a
/// multiple of 4n (level = 0 selects 4n).
ExactNumber sqrt_integer(std::int64_t n, int level = 0);

/// a + b*sqrt(d), d squarefree positive; b == 0 forces d == 1.
struct QuadSurd {
    BigRational a;
    BigRational b;
    BigInt d = 1;

    QuadSurd() = default;
    QuadSurd(BigRational rational_part, BigRational radical_coefficient, BigInt radicand);
    QuadSurd(const BigRational& q) : a(q) {}  // NOLINT

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }
    QuadSurd conjugate() const { return QuadSurd(a, -b, d); }
    /// a^2 - d b^2
    BigRational norm() const { return a * a - BigRational(d) * b * b; }
    double to_double() const;
    /// Value in Q(zeta_level), level a multiple of 4d.
    ExactNumber to_exact(int level) const;

    QuadSurd operator-() const { return QuadSurd(-a, -b, d); }
    QuadSurd& operator+=(const QuadSurd& rhs);
    QuadSurd& operator-=(const QuadSurd& rhs);
    QuadSurd& operator*=(const QuadSurd& rhs);
    QuadSurd& operator/=(const QuadSurd& rhs);
    friend QuadSurd operator+(QuadSurd l, const QuadSurd& r) { return l += r; }
    friend QuadSurd operator-(QuadSurd l, const QuadSurd& r) { return l -= r; }
    friend QuadSurd operator*(QuadSurd l, const QuadSurd& r) { return l *= r; }
    friend QuadSurd operator/(QuadSurd l, const QuadSurd& r) { return l /= r; }
    friend bool operator==(const QuadSurd& l, const QuadSurd& r) {
        return l.a == r.a && l.b == r.b && l.d == r.d;
    }
    friend bool operator!=(const QuadSurd& l, const QuadSurd& r) { return !(l == r); }
};

inline bool is_zero_scalar(const QuadSurd& x) { return x.is_zero(); }

std::optional<QuadSurd> recognize_surd(const ExactNumber& x);

/// "a + b*sqrt(d)", "a - b*sqrt(d)", "b*sqrt(d)" or "a" with rationals in canonical p/q form.
std::string to_string(const QuadSurd& s);
/// Accepts "a + b*sqrt(d)", "a - b*sqrt(d)", "a+b*sqrt(d)", "b*sqrt(d)", "sqrt(d)" and plain rationals.
QuadSurd parse_quad_surd(std::string_view text);

/// Human form with factored rationals, e.g. "-(2^18*3^2/5)*sqrt(3)".
std::string pretty_surd(const QuadSurd& s);
std::string pretty_rational(const BigRational& q);

/// x + y*sqrt(d) with x, y in a cyclotomic field and sqrt(d) adjoined formally.
/// Carrier for twisted periods of forms whose coefficients lie in Q(sqrt d).
struct QuadExtNumber {
    ExactNumber x;
    ExactNumber y;
    BigInt d = 1;

    QuadExtNumber() = default;
    QuadExtNumber(ExactNumber rational_part, ExactNumber surd_part, BigInt radicand)
        : x(std::move(rational_part)), y(std::move(surd_part)), d(std::move(radicand)) {}
    static QuadExtNumber from_surd(const QuadSurd& s);

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    /// Galois conjugate sqrt(d) -> -sqrt(d).
    QuadExtNumber conjugate() const { return {x, -y, d}; }
    std::complex<double> numeric(bool positive_root = true) const;

    QuadExtNumber& operator+=(const QuadExtNumber& rhs);
    QuadExtNumber& operator*=(const QuadExtNumber& rhs);
    QuadExtNumber& operator/=(const QuadExtNumber& rhs);
    friend QuadExtNumber operator+(QuadExtNumber l, const QuadExtNumber& r) { return l += r; }
    friend QuadExtNumber operator*(QuadExtNumber l, const QuadExtNumber& r) { return l *= r; }
    friend QuadExtNumber operator/(QuadExtNumber l, const QuadExtNumber& r) { return l /= r; }
    friend bool operator==(const QuadExtNumber& l, const QuadExtNumber& r);
};

}  // namespace twistper

#endif  // TWISTPER_EXACT_FIELD_HPP

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

#ifndef TWISTPER_POLYNOMIAL_HPP
#define TWISTPER_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "twistper/exact_field.hpp"

namespace twistper {

/// Dense univariate polynomial over Scalar.  Coefficients are stored ascending
/// (index == power) and trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
template <class Scalar>
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }
    Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }

    static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
    static Polynomial monomial(const Scalar& c, int degree) {
        std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Scalar>& ascending() const { return coeffs_; }
    std::vector<Scalar> descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

    Scalar coefficient(int power) const {
        if (power < 0 || power > degree()) return Scalar{};
        return coeffs_[power];
    }

    Scalar evaluate(const Scalar& x) const {
        Scalar acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            if (!is_zero_scalar(rhs.coeffs_[i])) coeffs_[i] += rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }

    template <class Factor>
    Polynomial& scale(const Factor& factor) {
        for (auto& c : coeffs_) {
            if (!is_zero_scalar(c)) c *= factor;
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        if (is_zero() || rhs.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (is_zero_scalar(coeffs_[i])) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (is_zero_scalar(rhs.coeffs_[j])) continue;
                out[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        coeffs_ = std::move(out);
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(Polynomial l, const Polynomial& r) { return l *= r; }
    friend bool operator==(const Polynomial& l, const Polynomial& r) {
        if (l.coeffs_.size() != r.coeffs_.size()) return false;
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
            if (!(l.coeffs_[i] == r.coeffs_[i])) return false;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& l, const Polynomial& r) { return !(l == r); }

   private:
    void trim() {
        while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using QPolynomial = Polynomial<BigRational>;
using ExactPolynomial = Polynomial<ExactNumber>;

template <class Scalar, class Factor>
Polynomial<Scalar> scaled(Polynomial<Scalar> p, const Factor& factor) {
    return std::move(p.scale(factor));
}

/// p(alpha*X + beta)
template <class Scalar>
Polynomial<Scalar> compose_affine(const Polynomial<Scalar>& p, const Scalar& alpha, const Scalar& beta) {
    const Polynomial<Scalar> inner(std::vector<Scalar>{beta, alpha});
    Polynomial<Scalar> acc;
    const auto& c = p.ascending();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= inner;
        acc += Polynomial<Scalar>::constant(*it);
    }
    return acc;
}

/// p(-X)
template <class Scalar>
Polynomial<Scalar> reflect(const Polynomial<Scalar>& p) {
    std::vector<Scalar> c = p.ascending();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial<Scalar>(std::move(c));
}

/// X^w * p(c / X); requires deg p <= w.
template <class Scalar>
Polynomial<Scalar> reciprocal_substitution(const Polynomial<Scalar>& p, const BigRational& c, int w) {
    if (p.degree() > w) throw ValidationError("reciprocal_substitution: degree exceeds the target weight");
    std::vector<Scalar> out(static_cast<std::size_t>(w) + 1);
    BigRational ck = 1;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!is_zero_scalar(p.ascending()[k])) {
            out[w - k] = p.ascending()[k];
            out[w - k] *= ck;
        }
        ck *= c;
    }
    return Polynomial<Scalar>(std::move(out));
}

/// (alpha*X + beta)^e over Q, binomial expansion.
inline QPolynomial linear_power(const BigRational& alpha, const BigRational& beta, int e) {
    std::vector<BigRational> out(static_cast<std::size_t>(e) + 1);
    for (int j = 0; j <= e; ++j) {
        out[j] = BigRational(binomial(e, j)) * rational_pow(alpha, j) * rational_pow(beta, e - j);
    }
    return QPolynomial(std::move(out));
}

inline ExactPolynomial to_exact(const QPolynomial& p) {
    std::vector<ExactNumber> c;
    c.reserve(p.ascending().size());
    for (const auto& q : p.ascending()) c.emplace_back(q);
    return ExactPolynomial(std::move(c));
}

/// Coefficient-wise scalar product of a rational polynomial.
inline ExactPolynomial times(const ExactNumber& s, const QPolynomial& p) {
    std::vector<ExactNumber> c;
    c.reserve(p.ascending().size());
    for (const auto& q : p.ascending()) {
        ExactNumber v = s;
        v *= q;
        c.push_back(std::move(v));
    }
    return ExactPolynomial(std::move(c));
}

}  // namespace twistper

#endif  // TWISTPER_POLYNOMIAL_HPP

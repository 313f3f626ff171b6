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

#include "twistper/bernoulli.hpp"

#include <map>
#include <stdexcept>

#include "twistper/weighted_sum.hpp"

namespace twistper {

BernoulliTable& BernoulliTable::instance() {
    static BernoulliTable table;
    return table;
}

BigRational BernoulliTable::number(int k) {
    if (k < 0) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1
    while (static_cast<int>(values_.size()) <= k) {
        const int m = static_cast<int>(values_.size());
        BigRational acc = 0;
        for (int j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * values_[j];
        values_.push_back(-acc / (m + 1));
    }
    return values_[k];
}

QPolynomial bernoulli_poly(int k) {
    if (k < 0) return {};
    std::vector<BigRational> c(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) c[k - j] = BigRational(binomial(k, j)) * bernoulli_number(j);
    return QPolynomial(std::move(c));
}

BigRational bernoulli_frac(int k, const BigRational& x) {
    if (k < 1) throw ValidationError("bernoulli_frac: k must be at least 1");
    BigInt floor_part;
    mpz_fdiv_q(floor_part.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    const BigRational frac = x - BigRational(floor_part);
    if (k == 1 && sgn(frac) == 0) return 0;
    return bernoulli_poly(k).evaluate(frac);
}

QPolynomial bernoulli_shifted(int k, const BigRational& a) {
    if (k < 0) return {};
    std::vector<BigRational> c(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) c[k - j] = BigRational(binomial(k, j)) * bernoulli_poly(j).evaluate(a);
    return QPolynomial(std::move(c));
}

namespace {

ExactNumber number_by_sum(int k, const DirichletCharacter& chi) {
    const int D = chi.modulus();
    WeightedSum<BigRational> acc(chi.order());
    const QPolynomial bk = bernoulli_poly(k);
    for (int h = 0; h < D; ++h) acc.add(chi.exponent(h), bk.evaluate(BigRational(h, D)));
    ExactNumber out = acc.value();
    out *= rational_pow(BigRational(D), k - 1);
    return out;
}

}  // namespace

ExactPolynomial generalized_bernoulli_poly(int k, const DirichletCharacter& chi) {
    if (k < 0) return {};
    const int D = chi.modulus();
    const QPolynomial bk = bernoulli_poly(k);
    WeightedSum<QPolynomial> acc(chi.order());
    for (int h = 0; h < D; ++h) {
        const int e = chi.exponent(h);
        if (e < 0) continue;
        acc.add(e, compose_affine(bk, BigRational(1, D), BigRational(h, D)));
    }
    ExactPolynomial by_sum = acc.value();
    by_sum.scale(rational_pow(BigRational(D), k - 1));

    std::vector<ExactNumber> binomial_form(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        ExactNumber term = number_by_sum(j, chi);
        term *= BigRational(binomial(k, j));
        binomial_form[k - j] = std::move(term);
    }
    if (ExactPolynomial(std::move(binomial_form)) != by_sum) {
        throw std::logic_error("generalized_bernoulli_poly: the two defining expressions disagree for k = " +
                               std::to_string(k) + ", " + chi.label());
    }
    return by_sum;
}

ExactNumber generalized_bernoulli_number(int k, const DirichletCharacter& chi) {
    if (k < 0) return {};
    return generalized_bernoulli_poly(k, chi).coefficient(0);
}

}  // namespace twistper

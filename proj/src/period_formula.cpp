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

#include "twistper/period_formula.hpp"

#include <numeric>
#include <string>

#include "twistper/bernoulli.hpp"
#include "twistper/weighted_sum.hpp"

namespace twistper {

EpsilonFlags EpsilonFlags::for_levels(std::int64_t N, std::int64_t D) {
    return {N == 1, std::gcd(N, D) == 1, D % N == 0};
}

PeriodContext::PeriodContext(int level, int w, int n, DirichletCharacter chi)
    : level_(level), w_(w), n_(n), chi_(std::move(chi)) {
    if (level_ < 1) throw ValidationError("level N must be positive");
    if (w_ < 2 || w_ % 2 != 0) throw ValidationError("w must be a positive even integer (weight w + 2)");
    if (n_ <= 0 || n_ >= w_) {
        throw ValidationError("n = " + std::to_string(n_) + " outside 0 < n < w = " + std::to_string(w_));
    }
    if (chi_.modulus() < 2) throw ValidationError("character modulus must exceed 1");
    if (!chi_.is_primitive()) {
        throw ValidationError("character " + chi_.label() + " is not primitive (conductor " +
                              std::to_string(chi_.conductor()) + ")");
    }
}

int PeriodContext::working_level() const {
    return std::lcm(std::lcm(4, chi_.modulus()), std::lcm(4 * level_, chi_.order()));
}

bool PeriodContext::admits(int m) const {
    const int sign = ((m + n_ + 1) % 2 == 0) ? 1 : -1;
    return sign * chi_.parity() == 1;
}

std::vector<FareyQuadruple> enumerate_quadruples(std::int64_t N, std::int64_t D) {
    std::vector<FareyQuadruple> out;
    for (std::int64_t c = N; c < D; c += N) {
        for (std::int64_t a = 1; a < D; ++a) {
            if (std::gcd(a, c) != 1) continue;
            for (std::int64_t k = 1; k * a < D; ++k) {
                const std::int64_t rest = D - k * a;
                if (rest % c == 0) out.push_back({a, c, k, rest / c});
            }
        }
    }
    return out;
}

ExactNumber two_i_power(int w) { return pow(ExactNumber(BigRational(2)) * imaginary_unit(), w + 1); }

ExactNumber inverse_conjugate_gauss_sum(const DirichletCharacter& chi) {
    ExactNumber out = gauss_sum(chi);
    out *= BigRational(chi.parity(), chi.modulus());
    return out;
}

namespace {

/// p(c X)
ExactPolynomial dilate(const ExactPolynomial& p, const BigRational& c) {
    std::vector<ExactNumber> out = p.ascending();
    BigRational ck = 1;
    for (auto& coeff : out) {
        coeff *= ck;
        ck *= c;
    }
    return ExactPolynomial(std::move(out));
}

BigRational sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

ExactPolynomial g_polynomial(const PeriodContext& ctx) {
    const std::int64_t D = ctx.modulus();
    const DirichletCharacter chibar = ctx.character().conjugate();
    WeightedSum<QPolynomial> acc(chibar.order());
    for (const auto& q : enumerate_quadruples(ctx.level(), D)) {
        const int e = chi_four_tuple_exponent(chibar, q.a, q.c, q.k, q.l);
        if (e < 0) continue;
        acc.add(e, linear_power(BigRational(q.a), BigRational(q.l, D), ctx.n()) *
                       linear_power(BigRational(-q.c), BigRational(q.k, D), ctx.n_dual()));
    }
    return acc.value();
}

ExactPolynomial theorem1_polynomial(const PeriodContext& ctx) {
    const std::int64_t N = ctx.level(), D = ctx.modulus();
    const int w = ctx.w(), n = ctx.n(), nd = ctx.n_dual();
    const DirichletCharacter& chi = ctx.character();
    const DirichletCharacter chibar = chi.conjugate();
    const EpsilonFlags eps = ctx.epsilon();
    const BigRational bD(D), bN(N);

    ExactPolynomial bracket;
    if (eps.e1) {
        bracket += dilate(generalized_bernoulli_poly(nd + 1, chibar), bD)
                       .scale(rational_pow(-bD, -nd) / (nd + 1));
    }
    bracket -= dilate(generalized_bernoulli_poly(n + 1, chibar), bD).scale(rational_pow(bD, -n) / (n + 1));
    if (eps.e2) {
        ExactNumber factor = chi(-N);
        factor *= sign(n - 1) * rational_pow(bN, nd) * rational_pow(bD, n) / (nd + 1);
        bracket += reciprocal_substitution(generalized_bernoulli_poly(nd + 1, chi), -1 / (bD * bN), w)
                       .scale(factor);
    }
    if (eps.e3) {
        const BigRational factor = BigRational(chi.parity()) * rational_pow(bD, nd) / (n + 1);
        bracket += reciprocal_substitution(generalized_bernoulli_poly(n + 1, chi), -1 / bD, w).scale(factor);
    }
    const ExactPolynomial g = g_polynomial(ctx);
    bracket += g;
    bracket += reflect(g).scale(sign(n - 1) * chi.parity());

    ExactNumber prefactor = two_i_power(w) * inverse_conjugate_gauss_sum(chi);
    return bracket.scale(prefactor);
}

QPolynomial case_contribution_rational(int j, std::int64_t h, const PeriodContext& ctx) {
    const std::int64_t N = ctx.level(), D = ctx.modulus();
    const int w = ctx.w(), n = ctx.n(), nd = ctx.n_dual();
    const EpsilonFlags eps = ctx.epsilon();
    if (std::gcd(h, D) != 1) {
        throw ValidationError("case_contribution: gcd(h, D) = gcd(" + std::to_string(h) + ", " +
                              std::to_string(D) + ") != 1");
    }
    const BigRational bD(D), bN(N);
    const BigRational h_frac(mod_floor(h, D), D);  // {h / D}
    switch (j) {
        case 1:  // a = 0
            if (!eps.e1) return {};
            return bernoulli_shifted(nd + 1, h_frac).scale(sign(n) / BigRational(nd + 1));
        case 2:  // c = 0
            return bernoulli_shifted(n + 1, h_frac).scale(BigRational(-1, n + 1));
        case 3: {  // (a, b) = +-(D, -h)
            if (!eps.e2) return {};
            const std::int64_t g = mod_floor(-mod_inverse(N, D) * mod_inverse(h, D), D);
            const QPolynomial b = bernoulli_shifted(nd + 1, BigRational(g, D));
            return reciprocal_substitution(b, -1 / (bD * bD * bN), w)
                .scale(sign(n - 1) * rational_pow(bN, nd) * rational_pow(bD, w) / (nd + 1));
        }
        case 4: {  // (c, d) = +-(D, -h)
            if (!eps.e3) return {};
            const std::int64_t g = mod_floor(-mod_inverse(h, D), D);
            const QPolynomial b = bernoulli_shifted(n + 1, BigRational(g, D));
            return reciprocal_substitution(b, -1 / (bD * bD), w).scale(rational_pow(bD, w) / (n + 1));
        }
        case 5: {  // ac(ah/D + b)(ch/D + d) < 0
            QPolynomial out;
            const std::int64_t target = mod_floor(h, D);
            for (const auto& q : enumerate_quadruples(N, D)) {
                const auto bez = extended_gcd(q.a, q.c);
                const std::int64_t b0 = -bez.y, d0 = bez.x;  // a d0 - b0 c = 1
                const std::int64_t base = q.k * b0 + q.l * d0;
                // a, c > 0: h = -k b - l d
                if (mod_floor(-base, D) == target) {
                    out -= linear_power(BigRational(q.a), BigRational(-q.l, D), n) *
                           linear_power(BigRational(q.c), BigRational(q.k, D), nd);
                }
                // a > 0, lower-left entry -c < 0, b = -b0: h = -k b + l d
                if (mod_floor(base, D) == target) {
                    out += linear_power(BigRational(q.a), BigRational(q.l, D), n) *
                           linear_power(BigRational(-q.c), BigRational(q.k, D), nd);
                }
            }
            return out;
        }
        case 6: {  // ac(ah/D + b)(ch/D + d) > 0
            BigRational upper = 1, lower = 1;
            for (std::int64_t p : prime_divisors(N)) {
                const BigRational bp(p);
                const BigRational denom = 1 - rational_pow(bp, -(w + 2));
                upper *= (1 - rational_pow(bp, -(n + 1))) / denom;
                lower *= (1 - rational_pow(bp, -(nd + 1))) / denom;
            }
            const BigRational common = sign(n) * BigRational(w + 2) / bernoulli_number(w + 2) *
                                       bernoulli_number(n + 1) / (n + 1) * bernoulli_number(nd + 1) / (nd + 1);
            std::vector<BigRational> c(static_cast<std::size_t>(w) + 1);
            c[w] = common * rational_pow(bD, w) / bN * upper;
            c[0] = -common / rational_pow(bN, n + 1) * lower;
            return QPolynomial(std::move(c));
        }
        default:
            throw ValidationError("case index must be in 1..6, got " + std::to_string(j));
    }
}

ExactPolynomial case_contribution(int j, std::int64_t h, const PeriodContext& ctx) {
    return times(two_i_power(ctx.w()), case_contribution_rational(j, h, ctx));
}

ExactPolynomial lemma_sum_polynomial(const PeriodContext& ctx) {
    const std::int64_t D = ctx.modulus();
    const DirichletCharacter chibar = ctx.character().conjugate();
    WeightedSum<QPolynomial> acc(chibar.order());
    for (std::int64_t h = 1; h < D; ++h) {
        if (std::gcd(h, D) != 1) continue;
        QPolynomial per_h;
        for (int j = 1; j <= 6; ++j) per_h += case_contribution_rational(j, h, ctx);
        acc.add(chibar.exponent(h), per_h);
    }
    const ExactNumber prefactor = two_i_power(ctx.w()) * invert(gauss_sum(chibar));
    return acc.value().scale(prefactor);
}

ExactNumber twisted_period(const PeriodContext& ctx, const ExactPolynomial& symmetrized, int m) {
    const int w = ctx.w();
    if (m < 0 || m > w) throw ValidationError("m = " + std::to_string(m) + " outside 0..w");
    if (!ctx.admits(m)) {
        throw ComputationError("r_{" + std::to_string(m) + ",chi}(R_" + std::to_string(ctx.n()) +
                               ") not extractable: (-1)^(m+n+1) chi(-1) = -1 annihilates the coefficient");
    }
    ExactNumber out = symmetrized.coefficient(w - m);
    out *= sign(m) / (2 * BigRational(binomial(w, m)));
    return out;
}

ExactNumber twisted_period(const PeriodContext& ctx, int m) {
    return twisted_period(ctx, theorem1_polynomial(ctx), m);
}

ExactNumber per_h_symmetrized_period(const PeriodContext& ctx, int m, std::int64_t h) {
    const int w = ctx.w();
    if (m < 0 || m > w) throw ValidationError("m = " + std::to_string(m) + " outside 0..w");
    QPolynomial total;
    for (int j = 1; j <= 6; ++j) total += case_contribution_rational(j, h, ctx);
    ExactNumber out = two_i_power(w);
    out *= total.coefficient(w - m) * sign(m) / BigRational(binomial(w, m));
    return out;
}

ExactNumber dual_symmetrized_period(const PeriodContext& ctx, int m, std::int64_t h) {
    const std::int64_t N = ctx.level(), D = ctx.modulus();
    if (std::gcd(N, D) != 1) {
        throw ValidationError("duality needs gcd(N, D) = 1, got gcd(" + std::to_string(N) + ", " +
                              std::to_string(D) + ")");
    }
    const int w = ctx.w();
    const std::int64_t v = mod_floor(-mod_inverse(mod_floor(N * h, D), D), D);
    ExactNumber out = per_h_symmetrized_period(ctx.with_n(ctx.n_dual()), w - m, v);
    out *= sign(ctx.n() + m) * rational_pow(BigRational(N), w - ctx.n() - m) * rational_pow(BigRational(D), w - 2 * m);
    return out;
}

}  // namespace twistper

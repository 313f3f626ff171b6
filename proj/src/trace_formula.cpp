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

#include "twistper/trace_formula.hpp"

#include <string>

#include "twistper/bernoulli.hpp"
#include "twistper/weighted_sum.hpp"

namespace twistper {

namespace {

BigRational sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

BigRational binom(int n, int k) { return BigRational(binomial(n, k)); }

/// binom * B_{k,chi} / k, with the zero binomial taking precedence: whenever
/// k <= 0 the paired binomial is out of range, so B_{0,chi} / 0 never arises.
ExactNumber bernoulli_term(const BigRational& binomial_factor, int k, const DirichletCharacter& chi) {
    if (sgn(binomial_factor) == 0) return ExactNumber();
    if (k <= 0) throw std::logic_error("nonzero binomial paired with Bernoulli index " + std::to_string(k));
    ExactNumber out = generalized_bernoulli_number(k, chi);
    out *= binomial_factor / k;
    return out;
}

}  // namespace

void TraceQuery::validate() const {
    if (m < 0 || m > ctx.w()) {
        throw ValidationError("m = " + std::to_string(m) + " outside 0..w = " + std::to_string(ctx.w()));
    }
    if (!ctx.admits(m)) {
        throw ComputationError("parity: (-1)^(m+n+1) chi(-1) must be 1 (m = " + std::to_string(m) +
                               ", n = " + std::to_string(ctx.n()) + ", chi(-1) = " +
                               std::to_string(ctx.character().parity()) + ")");
    }
}

ExactNumber sqrt_any(std::int64_t n) {
    if (n < 1) throw ValidationError("sqrt_any: " + std::to_string(n) + " is not positive");
    const auto [s, d] = square_and_squarefree(BigInt(n));
    ExactNumber out = sqrt_integer(d.get_si());
    out *= BigRational(s);
    return out;
}

ExactNumber trace_direct(const TraceQuery& q) {
    q.validate();
    const PeriodContext& ctx = q.ctx;
    const std::int64_t N = ctx.level(), D = ctx.modulus();
    const int w = ctx.w(), n = ctx.n(), nd = ctx.n_dual(), m = q.m, md = w - q.m;
    const DirichletCharacter& chi = ctx.character();
    const DirichletCharacter chibar = chi.conjugate();
    const EpsilonFlags eps = ctx.epsilon();
    const BigRational bD(D), bN(N);

    ExactNumber bracket;
    if (eps.e1) {
        bracket += bernoulli_term(sign(n + 1) * binom(nd, md) * rational_pow(bD, n), nd - md + 1, chibar);
    }
    bracket += bernoulli_term(binom(n, md) * rational_pow(bD, nd), n - md + 1, chibar);
    if (eps.e2) {
        ExactNumber t = bernoulli_term(sign(n + m) * binom(nd, m) * rational_pow(bN, nd - m) * rational_pow(bD, n),
                                       nd - m + 1, chi);
        if (!t.is_zero()) bracket += t * chi(-N);
    }
    if (eps.e3) {
        bracket += bernoulli_term(sign(m + 1) * binom(n, m) * chi.parity() * rational_pow(bD, nd), n - m + 1, chi);
    }

    WeightedSum<BigRational> quad(chibar.order());
    for (const auto& f : enumerate_quadruples(N, D)) {
        const int e = chi_four_tuple_exponent(chibar, f.a, f.c, f.k, f.l);
        if (e < 0) continue;
        BigInt inner = 0;
        for (int r = 0; r <= md; ++r) {
            if (r > n || md - r > nd) continue;
            BigInt term = binomial(n, r) * binomial(nd, md - r);
            BigInt p;
            mpz_pow_ui(p.get_mpz_t(), BigInt(f.a).get_mpz_t(), r);
            term *= p;
            mpz_pow_ui(p.get_mpz_t(), BigInt(f.c).get_mpz_t(), md - r);
            term *= p;
            mpz_pow_ui(p.get_mpz_t(), BigInt(f.l).get_mpz_t(), n - r);
            term *= p;
            mpz_pow_ui(p.get_mpz_t(), BigInt(f.k).get_mpz_t(), nd - md + r);
            term *= p;
            inner += (r % 2 == 0) ? term : BigInt(-term);
        }
        quad.add(e, BigRational(inner));
    }
    ExactNumber g = quad.value();
    g *= 2 * sign(m + 1);
    bracket += g;

    // N^{(m+n+2)/2}: the power that (-D)^{m+1} (i sqrt N)^{m+n+2} r_{m,chi}(R_n)
    // carries once r_{m,chi} is read off the symmetrized polynomial.  It reduces
    // to 1 at N = 1.
    const int half = (m + n + 2) / 2;
    ExactNumber n_power = ((m + n) % 2 == 0) ? ExactNumber(rational_pow(bN, half))
                                             : sqrt_any(N) * ExactNumber(rational_pow(bN, half));
    ExactNumber prefactor = two_i_power(w) * pow(imaginary_unit(), m + n + 2) * n_power;
    prefactor *= bD / (2 * binom(w, m));
    return prefactor * inverse_conjugate_gauss_sum(chi) * bracket;
}

ExactNumber trace_via_theorem1(const TraceQuery& q, const ExactPolynomial& symmetrized) {
    q.validate();
    const PeriodContext& ctx = q.ctx;
    ExactNumber out = pow(imaginary_unit() * sqrt_any(ctx.level()), q.m + ctx.n() + 2);
    out *= rational_pow(BigRational(-ctx.modulus()), q.m + 1);
    return out * twisted_period(ctx, symmetrized, q.m);
}

ExactNumber trace_via_theorem1(const TraceQuery& q) {
    q.validate();
    return trace_via_theorem1(q, theorem1_polynomial(q.ctx));
}

std::optional<QuadSurd> trace_as_surd(const ExactNumber& value) { return recognize_surd(value); }

}  // namespace twistper

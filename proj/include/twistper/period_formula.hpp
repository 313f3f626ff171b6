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

#ifndef TWISTPER_PERIOD_FORMULA_HPP
#define TWISTPER_PERIOD_FORMULA_HPP

#include <cstdint>
#include <vector>

#include "twistper/characters.hpp"
#include "twistper/polynomial.hpp"

namespace twistper {

/// Gates of the four Bernoulli terms: e1 <=> N = 1, e2 <=> gcd(N, D) = 1, e3 <=> N | D.
struct EpsilonFlags {
    bool e1 = false;
    bool e2 = false;
    bool e3 = false;

    static EpsilonFlags for_levels(std::int64_t N, std::int64_t D);
};

/// Positive (a, c, k, l) with gcd(a, c) = 1, N | c and k a + l c = D.
struct FareyQuadruple {
    std::int64_t a;
    std::int64_t c;
    std::int64_t k;
    std::int64_t l;

    friend bool operator==(const FareyQuadruple&, const FareyQuadruple&) = default;
};

/// Level N, weight w + 2 (w even), index 0 < n < w and a primitive character mod D > 1.
class PeriodContext {
   public:
    PeriodContext(int level, int w, int n, DirichletCharacter chi);

    int level() const { return level_; }
    int w() const { return w_; }
    int n() const { return n_; }
    /// w - n
    int n_dual() const { return w_ - n_; }
    int modulus() const { return chi_.modulus(); }
    const DirichletCharacter& character() const { return chi_; }
    EpsilonFlags epsilon() const { return EpsilonFlags::for_levels(level_, chi_.modulus()); }
    /// lcm(4, D, 4N, order of chi): holds i, the character values, both Gauss sums and sqrt(N).
    int working_level() const;

    PeriodContext with_n(int n) const { return PeriodContext(level_, w_, n, chi_); }

    /// (-1)^{m+n+1} chi(-1) == 1
    bool admits(int m) const;

   private:
    int level_;
    int w_;
    int n_;
    DirichletCharacter chi_;
};

/// Lexicographic in (c, a, k).
std::vector<FareyQuadruple> enumerate_quadruples(std::int64_t N, std::int64_t D);

/// (2i)^{w+1}
ExactNumber two_i_power(int w);

/// 1 / tau(conj chi), through tau(chi) tau(conj chi) = chi(-1) D.
ExactNumber inverse_conjugate_gauss_sum(const DirichletCharacter& chi);

/// G_n(X) = sum over quadruples of conj chi(a,c,k,l) (aX + l/D)^n (-cX + k/D)^{w-n}
ExactPolynomial g_polynomial(const PeriodContext& ctx);

/// r_chi(R_n)(X) + (-1)^{n-1} chi(-1) r_chi(R_n)(-X) by the closed form.
ExactPolynomial theorem1_polynomial(const PeriodContext& ctx);

/// c_n^{-1} F_{j,h}(X) divided by (2i)^{w+1}; always rational.  Cases gated
/// off by the level (j = 1 needs N = 1, j = 3 needs gcd(N, D) = 1, j = 4 needs
/// N | D) give the zero polynomial.
QPolynomial case_contribution_rational(int j, std::int64_t h, const PeriodContext& ctx);

/// c_n^{-1} F_{j,h}(X) for j in 1..6 and gcd(h, D) = 1.
ExactPolynomial case_contribution(int j, std::int64_t h, const PeriodContext& ctx);

/// (1 / tau(conj chi)) sum_h conj chi(h) sum_j c_n^{-1} F_{j,h}(X): the
/// case-by-case assembly of the same polynomial as theorem1_polynomial.
ExactPolynomial lemma_sum_polynomial(const PeriodContext& ctx);

/// r_{m,chi}(R_n) read off the symmetrized polynomial.  Throws
/// ComputationError when the parity class of m is annihilated.
ExactNumber twisted_period(const PeriodContext& ctx, int m);
ExactNumber twisted_period(const PeriodContext& ctx, const ExactPolynomial& symmetrized, int m);

/// rho(m, n, h) = sum_j c_n^{-1} I_{j,h,m}
ExactNumber per_h_symmetrized_period(const PeriodContext& ctx, int m, std::int64_t h);

/// (-1)^{n+m} N^{w-n-m} D^{w-2m} rho(w - m, w - n, v) with v = -(N h)^{-1} mod D,
/// the dual expression for rho(m, n, h).  Requires gcd(N, D) = 1.
ExactNumber dual_symmetrized_period(const PeriodContext& ctx, int m, std::int64_t h);

}  // namespace twistper

#endif  // TWISTPER_PERIOD_FORMULA_HPP

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

#ifndef TWISTPER_BERNOULLI_HPP
#define TWISTPER_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "twistper/characters.hpp"
#include "twistper/polynomial.hpp"

namespace twistper {

/// Memoized Bernoulli numbers with B_1 = -1/2.  Grows on demand; safe to use
/// from several threads.
class BernoulliTable {
   public:
    static BernoulliTable& instance();
    BigRational number(int k);

   private:
    std::mutex mutex_;
    std::vector<BigRational> values_{BigRational(1)};
};

inline BigRational bernoulli_number(int k) { return BernoulliTable::instance().number(k); }

/// B_k(x); the zero polynomial for k < 0.
QPolynomial bernoulli_poly(int k);

/// B_k({x}) for k >= 1, with B_1({x}) = 0 when x is an integer.
BigRational bernoulli_frac(int k, const BigRational& x);

/// B_k(a + X) = sum_j binom(k, j) B_j(a) X^{k-j}.
QPolynomial bernoulli_shifted(int k, const BigRational& a);

/// B_{k,chi}(x) = D^{k-1} sum_h chi(h) B_k((h + x) / D).  The binomial form
/// sum_j binom(k, j) B_{j,chi} x^{k-j} is recomputed alongside and a mismatch
/// throws std::logic_error.  Zero polynomial for k < 0.
ExactPolynomial generalized_bernoulli_poly(int k, const DirichletCharacter& chi);

/// B_{k,chi} = B_{k,chi}(0).
ExactNumber generalized_bernoulli_number(int k, const DirichletCharacter& chi);

}  // namespace twistper

#endif  // TWISTPER_BERNOULLI_HPP

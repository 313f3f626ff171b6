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

#ifndef TWISTPER_TRACE_FORMULA_HPP
#define TWISTPER_TRACE_FORMULA_HPP

#include <optional>

#include "twistper/period_formula.hpp"

namespace twistper {

/// Sum over an orthogonal basis of Lambda(f, chi, m + 1) conj(Lambda(f, n + 1)) / <f, f>.
struct TraceQuery {
    PeriodContext ctx;
    int m;

    /// ValidationError for m outside 0..w; ComputationError for the annihilated parity class.
    void validate() const;
};

/// Closed form with Bernoulli numbers and the quadruple double sum.
ExactNumber trace_direct(const TraceQuery& q);

/// (-D)^{m+1} (i sqrt N)^{m+n+2} r_{m,chi}(R_n) from the symmetrized polynomial.
ExactNumber trace_via_theorem1(const TraceQuery& q);
ExactNumber trace_via_theorem1(const TraceQuery& q, const ExactPolynomial& symmetrized);

/// sqrt(n) for any positive integer n, embedded at a multiple of 4 * squarefree part.
ExactNumber sqrt_any(std::int64_t n);

/// Surd rendering when the value lies in a real quadratic field.
std::optional<QuadSurd> trace_as_surd(const ExactNumber& value);

}  // namespace twistper

#endif  // TWISTPER_TRACE_FORMULA_HPP

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

#ifndef TWISTPER_WEIGHTED_SUM_HPP
#define TWISTPER_WEIGHTED_SUM_HPP

#include <map>
#include <type_traits>

#include "twistper/polynomial.hpp"

namespace twistper {

/// Accumulates sum_e zeta_order^e * v_e with rational v_e (numbers or
/// polynomials), bucketed by exponent so the cyclotomic multiplication happens
/// once per root of unity instead of once per term.  Exponent -1 (a vanishing
/// character value) is ignored.
template <class Value>
class WeightedSum {
   public:
    explicit WeightedSum(int order) : order_(order) {}

    void add(int exponent, const Value& v) {
        if (exponent < 0) return;
        buckets_[exponent % order_] += v;
    }

    auto value() const {
        if constexpr (std::is_same_v<Value, BigRational>) {
            ExactNumber out = cyclotomic_embed(0, order_);
            for (const auto& [e, q] : buckets_) {
                ExactNumber term = root_of_unity(order_, e);
                term *= q;
                out += term;
            }
            return out;
        } else {
            ExactPolynomial out;
            for (const auto& [e, p] : buckets_) out += times(root_of_unity(order_, e), p);
            return out;
        }
    }

   private:
    int order_;
    std::map<int, Value> buckets_;
};

}  // namespace twistper

#endif  // TWISTPER_WEIGHTED_SUM_HPP

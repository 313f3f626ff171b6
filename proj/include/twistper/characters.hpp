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

#ifndef TWISTPER_CHARACTERS_HPP
#define TWISTPER_CHARACTERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistper/exact_field.hpp"

namespace twistper {

/// Dirichlet character mod D stored as a full table of exponents: chi(h) is
/// zeta_order^exponent(h), or 0 when gcd(h, D) > 1.
class DirichletCharacter {
   public:
    /// Validates the table (chi(1) = 1, zeros exactly off the units, complete
    /// multiplicativity) and computes the conductor.  `order` may be any multiple
    /// of the true order; the stored order is reduced.
    static DirichletCharacter from_exponents(int modulus, int order, std::vector<int> exponents,
                                             std::string label = {});

    int modulus() const { return modulus_; }
    int order() const { return order_; }
    int conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus_; }
    /// chi(-1) as +1 or -1.
    int parity() const { return parity_; }
    bool is_even() const { return parity_ == 1; }
    bool is_quadratic() const { return order_ == 2; }
    const std::string& label() const { return label_; }

    /// Exponent of chi(h), or -1 when chi(h) = 0.
    int exponent(std::int64_t h) const { return exponents_[mod_floor(h, modulus_)]; }
    const std::vector<int>& exponents() const { return exponents_; }
    /// chi(h) in Q(zeta_order).
    ExactNumber operator()(std::int64_t h) const;

    DirichletCharacter conjugate() const;

    friend bool operator==(const DirichletCharacter& l, const DirichletCharacter& r) {
        return l.modulus_ == r.modulus_ && l.order_ == r.order_ && l.exponents_ == r.exponents_;
    }

   private:
    DirichletCharacter() = default;

    int modulus_ = 1;
    int order_ = 1;
    int conductor_ = 1;
    int parity_ = 1;
    std::vector<int> exponents_;
    std::vector<ExactNumber> powers_;  // zeta_order^e, e in [0, order)
    std::string label_;
};

/// Kronecker symbol (D / n) for n >= 0.
int kronecker_symbol(std::int64_t D, std::int64_t n);

/// The quadratic character (D / .) mod |D|; throws ValidationError when it is
/// not a primitive character of modulus |D|.
DirichletCharacter kronecker_character(std::int64_t D);

/// Every primitive character mod D, each once, in a fixed order.
std::vector<DirichletCharacter> enumerate_primitive_characters(int D, int bound = 100);

/// tau(chi) = sum_h chi(h) zeta_D^h
ExactNumber gauss_sum(const DirichletCharacter& chi);

/// chi(k b + l d) for any b, d with a d - b c = 1; requires gcd(a, c) = 1 and k a + l c = D.
ExactNumber chi_four_tuple(const DirichletCharacter& chi, std::int64_t a, std::int64_t c, std::int64_t k,
                           std::int64_t l);
/// Exponent form of chi_four_tuple (-1 for a zero value).
int chi_four_tuple_exponent(const DirichletCharacter& chi, std::int64_t a, std::int64_t c, std::int64_t k,
                            std::int64_t l);

/// "kronecker:D" or "table:D:v0,v1,...,v{D-1}" with entries "zeta[M]^k" or "0".
DirichletCharacter parse_character(std::string_view spec);
/// Table form of a character, parseable by parse_character.
std::string format_character_table(const DirichletCharacter& chi);

}  // namespace twistper

#endif  // TWISTPER_CHARACTERS_HPP

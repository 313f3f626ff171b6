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

#ifndef TWISTPER_EIGENFORMS_HPP
#define TWISTPER_EIGENFORMS_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistper/characters.hpp"
#include "twistper/polynomial.hpp"

namespace twistper {

struct RnTerm {
    int n;
    QuadSurd coeff;
};

/// sum_j coeff_j R_{n_j} in S_{weight}(Gamma_0(level)).
struct RnCombination {
    int level = 1;
    int weight = 4;
    std::vector<RnTerm> terms;

    int w() const { return weight - 2; }
    /// Shared radicand of the coefficients (1 when all are rational).
    BigInt radicand() const;
    /// Throws ValidationError on a bad index, repeated index or mixed radicands.
    void validate() const;
    RnCombination conjugate() const;
    RnCombination scaled(const QuadSurd& factor) const;
};

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// det(x I - A), monic, for square A of dimension 1..3.
QPolynomial char_poly(const RationalMatrix& a);

struct EigenPair {
    QuadSurd value;
    /// Row vector v with v A = value * v: the coordinates of an eigenform when A
    /// acts on the basis column (T R = A R).
    std::vector<QuadSurd> vector;
};

/// Eigenvalues in rising numeric order, one pair per independent eigenvector.
/// Vectors are scaled to integral, primitive form with a positive first nonzero
/// coordinate.  Throws ComputationError for an irreducible cubic or a negative
/// discriminant.
std::vector<EigenPair> eigen_decompose(const RationalMatrix& a);

/// v A == lambda v exactly.
bool is_left_eigenpair(const RationalMatrix& a, const EigenPair& pair);

/// r_{m,chi}(f) by linearity; the result lies in Q(zeta)(sqrt d).
QuadExtNumber twisted_period_of_combination(const RnCombination& f, const DirichletCharacter& chi, int m);

/// Lambda(f, chi, m1 + 1) / Lambda(f, chi, m2 + 1) for both signs of sqrt d.
struct LambdaRatio {
    QuadExtNumber value;      // sqrt d > 0
    QuadExtNumber conjugate;  // sqrt d < 0
};

/// (-i D sqrt N)^{m1 - m2} r_{m1,chi}(f) / r_{m2,chi}(f).  Throws
/// ComputationError when the denominator vanishes.
LambdaRatio twisted_lambda_ratio(const RnCombination& f, const DirichletCharacter& chi, int m1, int m2);

/// Value of a factored integer expression such as "2(2^7*3^2)^2" or
/// "(2^6\\cdot3\\cdot15671)^2": digits, ^, *, \cdot, /, parentheses and
/// juxtaposition as multiplication.
BigRational evaluate_factored(std::string_view text);

// ---------------------------------------------------------------------------
// Fixtures

struct EigenformFixture {
    std::string name;
    RnCombination form;
    /// Upper sign of the reference +-: the form with +sqrt(d); its conjugate is the other one.
    bool conjugate_pair = false;
    std::string note;
};

struct MatrixFixture {
    std::string name;
    int level = 1;
    int weight = 4;
    std::vector<int> basis;
    RationalMatrix matrix;
    /// Expected monic characteristic polynomial, when given.
    std::vector<BigRational> expected_char_poly;
    std::vector<std::string> expected_eigenforms;
};

struct TwistTableRow {
    std::int64_t D;
    std::string text;
    BigRational value;
};

/// Rows of D^{-1/2} Lambda(f, chi_D, m + 1) / Lambda(f, m + 1).
struct TwistTableFixture {
    std::string name;
    std::string form;
    int m = 0;
    std::vector<TwistTableRow> rows;
};

/// Lambda(f, chi, s) / Lambda(f, w/2 + 1) = numerator / (denominator * sqrt(sqrt_factor)), upper sign.
struct LambdaRatioRow {
    int s;
    QuadSurd numerator;
    BigRational denominator;
    std::int64_t sqrt_factor;
};

struct LambdaRatioFixture {
    std::string name;
    std::string form;
    std::string character;
    std::vector<LambdaRatioRow> rows;
    /// s whose row is a square times sqrt(sqrt_factor), with its root.
    int square_s = 0;
    QuadSurd square_root;
};

struct FixtureRegistry {
    std::map<std::string, EigenformFixture> eigenforms;
    std::map<std::string, MatrixFixture> matrices;
    std::map<std::string, TwistTableFixture> twist_tables;
    std::map<std::string, LambdaRatioFixture> lambda_tables;

    const EigenformFixture& eigenform(const std::string& name) const;
    const MatrixFixture& matrix(const std::string& name) const;
    const TwistTableFixture& twist_table(const std::string& name) const;
    const LambdaRatioFixture& lambda_table(const std::string& name) const;
    /// Eigenform fixtures at (level, weight) in name order.
    std::vector<const EigenformFixture*> forms_at(int level, int weight) const;
};

/// Parses JSON Lines (blank lines and lines starting with '#' skipped).
/// Errors name the offending line.
FixtureRegistry parse_fixtures(std::string_view jsonl);

/// The fixture text compiled into the library.
std::string_view embedded_fixture_text();

/// Parsed embedded fixtures, built once.
const FixtureRegistry& load_fixtures();

}  // namespace twistper

#endif  // TWISTPER_EIGENFORMS_HPP

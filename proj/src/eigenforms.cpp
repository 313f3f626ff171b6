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

#include "twistper/eigenforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <string>

#include "twistper/period_formula.hpp"
#include "twistper/trace_formula.hpp"

namespace twistper {

// ---------------------------------------------------------------------------
// RnCombination

BigInt RnCombination::radicand() const {
    BigInt d = 1;
    for (const auto& t : terms) {
        if (t.coeff.d == 1) continue;
        if (d != 1 && d != t.coeff.d) {
            throw ValidationError("coefficients mix sqrt(" + d.get_str() + ") and sqrt(" + t.coeff.d.get_str() + ")");
        }
        d = t.coeff.d;
    }
    return d;
}

void RnCombination::validate() const {
    if (level < 1) throw ValidationError("level must be positive");
    if (weight < 4 || weight % 2 != 0) throw ValidationError("weight must be even and at least 4");
    if (terms.empty()) throw ValidationError("combination has no terms");
    std::set<int> seen;
    for (const auto& t : terms) {
        if (t.n <= 0 || t.n >= w()) {
            throw ValidationError("index R_" + std::to_string(t.n) + " outside 0 < n < " + std::to_string(w()));
        }
        if (!seen.insert(t.n).second) throw ValidationError("index R_" + std::to_string(t.n) + " repeated");
    }
    radicand();
}

RnCombination RnCombination::conjugate() const {
    RnCombination out = *this;
    for (auto& t : out.terms) t.coeff = t.coeff.conjugate();
    return out;
}

RnCombination RnCombination::scaled(const QuadSurd& factor) const {
    RnCombination out = *this;
    for (auto& t : out.terms) t.coeff *= factor;
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

namespace {

void check_square(const RationalMatrix& a) {
    if (a.empty() || a.size() > 3) throw ValidationError("matrix dimension must be 1, 2 or 3");
    for (const auto& row : a) {
        if (row.size() != a.size()) throw ValidationError("matrix is not square");
    }
}

RationalMatrix multiply(const RationalMatrix& l, const RationalMatrix& r) {
    const std::size_t n = l.size();
    RationalMatrix out(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += l[i][k] * r[k][j];
    return out;
}

/// Integer scaling of a monic polynomial: L^deg p(y / L) with L clearing denominators.
std::pair<std::vector<BigInt>, BigInt> integral_monic(const QPolynomial& p) {
    BigInt scale = 1;
    for (const auto& c : p.ascending()) {
        BigInt den = c.get_den();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    const int deg = p.degree();
    std::vector<BigInt> out(static_cast<std::size_t>(deg) + 1);
    BigRational power = 1;
    for (int k = deg; k >= 0; --k) {
        BigRational v = p.coefficient(k) * power;
        out[k] = v.get_num();
        power *= scale;
    }
    return {out, scale};
}

BigInt eval_int(const std::vector<BigInt>& c, const BigInt& y) {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
}

/// A rational root of a monic cubic, located numerically and confirmed exactly.
std::optional<BigRational> rational_root_of_cubic(const QPolynomial& p) {
    const auto [c, scale] = integral_monic(p);
    // Durand-Kerner on the integral polynomial.
    std::vector<std::complex<long double>> z{{0.4L, 0.9L}, {-0.65L, 0.72L}, {0.3L, -1.1L}};
    long double radius = 1;
    for (int k = 0; k < 3; ++k) {
        radius = std::max(radius, std::pow(std::fabs(static_cast<long double>(c[k].get_d())), 1.0L / (3 - k)));
    }
    for (auto& zi : z) zi *= 2 * radius;
    auto f = [&](std::complex<long double> x) {
        std::complex<long double> acc = 0;
        for (int k = 3; k >= 0; --k) acc = acc * x + static_cast<long double>(c[k].get_d());
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        for (int i = 0; i < 3; ++i) {
            std::complex<long double> den = 1;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= z[i] - z[j];
            z[i] -= f(z[i]) / den;
        }
    }
    for (const auto& zi : z) {
        const long double re = std::round(zi.real());
        for (long double delta : {0.0L, -1.0L, 1.0L}) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.0Lf", re + delta);
            const BigInt y(buf);
            if (eval_int(c, y) == 0) return BigRational(y) / BigRational(scale);
        }
    }
    return std::nullopt;
}

std::vector<QuadSurd> quadratic_roots(const BigRational& b, const BigRational& c) {
    const BigRational disc = b * b - 4 * c;
    if (sgn(disc) < 0) throw ComputationError("unsupported factorization: complex eigenvalues");
    if (sgn(disc) == 0) return {QuadSurd(-b / 2)};
    const BigInt pq = disc.get_num() * disc.get_den();
    const auto [s, d] = square_and_squarefree(pq);
    const BigRational half_root = BigRational(s) / BigRational(2 * disc.get_den());
    const BigRational centre = -b / 2;
    if (d == 1) return {QuadSurd(centre - half_root), QuadSurd(centre + half_root)};
    return {QuadSurd(centre, -half_root, d), QuadSurd(centre, half_root, d)};
}

std::vector<QuadSurd> eigenvalues(const QPolynomial& p) {
    std::vector<QuadSurd> roots;
    QPolynomial rest = p;
    if (rest.degree() == 3) {
        const auto r = rational_root_of_cubic(rest);
        if (!r) throw ComputationError("unsupported factorization: irreducible cubic characteristic polynomial");
        roots.emplace_back(*r);
        // synthetic division by (x - r)
        std::vector<BigRational> q(3);
        BigRational carry = 0;
        for (int k = 3; k >= 1; --k) {
            carry = rest.coefficient(k) + carry * *r;
            q[k - 1] = carry;
        }
        rest = QPolynomial(std::move(q));
    }
    if (rest.degree() == 2) {
        for (auto& r : quadratic_roots(rest.coefficient(1), rest.coefficient(0))) roots.push_back(r);
    } else if (rest.degree() == 1) {
        roots.emplace_back(-rest.coefficient(0));
    }
    std::sort(roots.begin(), roots.end(),
              [](const QuadSurd& l, const QuadSurd& r) { return l.to_double() < r.to_double(); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Basis of {v : B v = 0} by reduced row echelon form.
std::vector<std::vector<QuadSurd>> null_space(std::vector<std::vector<QuadSurd>> b) {
    const std::size_t n = b.size();
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && b[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(b[p], b[row]);
        const QuadSurd inv = QuadSurd(1) / b[row][col];
        for (auto& x : b[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || b[r][col].is_zero()) continue;
            const QuadSurd f = b[r][col];
            for (std::size_t k = 0; k < n; ++k) b[r][k] -= f * b[row][k];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<std::vector<QuadSurd>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
        std::vector<QuadSurd> v(n);
        v[free] = QuadSurd(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -b[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

void normalize(std::vector<QuadSurd>& v) {
    const auto lead = std::find_if(v.begin(), v.end(), [](const QuadSurd& x) { return !x.is_zero(); });
    if (lead == v.end()) return;
    const QuadSurd inv = QuadSurd(1) / *lead;
    for (auto& x : v) x *= inv;
    BigInt den = 1;
    for (const auto& x : v)
        for (const BigRational* q : {&x.a, &x.b}) {
            BigInt qd = q->get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), qd.get_mpz_t());
        }
    BigInt content = 0;
    for (auto& x : v) {
        x *= QuadSurd(BigRational(den));
        for (const BigRational* q : {&x.a, &x.b}) {
            BigInt qn = q->get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), qn.get_mpz_t());
        }
    }
    if (content > 1)
        for (auto& x : v) x *= QuadSurd(BigRational(1, 1) / BigRational(content));
}

}  // namespace

QPolynomial char_poly(const RationalMatrix& a) {
    check_square(a);
    const std::size_t n = a.size();
    // Faddeev-LeVerrier
    std::vector<BigRational> c(n + 1);
    c[n] = 1;
    RationalMatrix mk(n, std::vector<BigRational>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next = multiply(a, mk);
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        mk = std::move(next);
        const RationalMatrix amk = multiply(a, mk);
        BigRational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += amk[i][i];
        c[n - k] = -trace / static_cast<long>(k);
    }
    return QPolynomial(std::move(c));
}

std::vector<EigenPair> eigen_decompose(const RationalMatrix& a) {
    check_square(a);
    const std::size_t n = a.size();
    std::vector<EigenPair> out;
    for (const QuadSurd& lambda : eigenvalues(char_poly(a))) {
        // v A = lambda v  <=>  (A^T - lambda I) v = 0
        std::vector<std::vector<QuadSurd>> b(n, std::vector<QuadSurd>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i][j] = QuadSurd(a[j][i]) - (i == j ? lambda : QuadSurd(0));
        for (auto& v : null_space(std::move(b))) {
            normalize(v);
            out.push_back({lambda, std::move(v)});
        }
    }
    return out;
}

bool is_left_eigenpair(const RationalMatrix& a, const EigenPair& pair) {
    const std::size_t n = a.size();
    if (pair.vector.size() != n) return false;
    for (std::size_t j = 0; j < n; ++j) {
        QuadSurd acc;
        for (std::size_t i = 0; i < n; ++i) acc += pair.vector[i] * QuadSurd(a[i][j]);
        if (acc != pair.value * pair.vector[j]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Twisted periods of combinations

namespace {

/// Discriminant of Q(sqrt d): Q(sqrt d) lies in Q(zeta_M) exactly when it divides M.
BigInt field_discriminant(const BigInt& d) { return (d % 4 == 1) ? d : BigInt(4 * d); }

/// Rewrites x + y sqrt(d) inside the cyclotomic field when sqrt(d) already lives there.
QuadExtNumber settle(QuadExtNumber v) {
    if (v.d == 1 || v.y.is_zero()) return {v.x, v.y, v.d};
    const int level = std::lcm(v.x.level(), v.y.level());
    if (level % field_discriminant(v.d).get_si() != 0 || !v.d.fits_slong_p()) return v;
    const int target = std::lcm(level, static_cast<int>(4 * v.d.get_si()));
    ExactNumber x = v.x + v.y * sqrt_integer(v.d.get_si(), target);
    return {x, ExactNumber(), 1};
}

struct PeriodBundle {
    std::vector<ExactNumber> periods;  // aligned with f.terms
};

PeriodBundle periods_of(const RnCombination& f, const DirichletCharacter& chi, int m) {
    f.validate();
    PeriodBundle out;
    for (const auto& t : f.terms) {
        const PeriodContext ctx(f.level, f.w(), t.n, chi);
        if (!ctx.admits(m)) {
            throw ComputationError("r_{" + std::to_string(m) + ",chi}(R_" + std::to_string(t.n) +
                                   ") is annihilated by parity; the combination mixes parity classes");
        }
        out.periods.push_back(twisted_period(ctx, m));
    }
    return out;
}

QuadExtNumber combine(const RnCombination& f, const PeriodBundle& b) {
    ExactNumber x, y;
    for (std::size_t j = 0; j < f.terms.size(); ++j) {
        ExactNumber px = b.periods[j], py = b.periods[j];
        px *= f.terms[j].coeff.a;
        py *= f.terms[j].coeff.b;
        x += px;
        y += py;
    }
    return {x, y, f.radicand()};
}

}  // namespace

QuadExtNumber twisted_period_of_combination(const RnCombination& f, const DirichletCharacter& chi, int m) {
    return settle(combine(f, periods_of(f, chi, m)));
}

LambdaRatio twisted_lambda_ratio(const RnCombination& f, const DirichletCharacter& chi, int m1, int m2) {
    const PeriodBundle top = periods_of(f, chi, m1);
    const PeriodBundle bottom = periods_of(f, chi, m2);
    // (-i D sqrt N)^{m1 - m2}
    const int e = m1 - m2;
    ExactNumber base = imaginary_unit() * sqrt_any(f.level);
    base *= BigRational(-chi.modulus());
    ExactNumber factor = pow(base, std::abs(e));
    if (e < 0) factor = invert(factor);

    auto one = [&](const RnCombination& g) {
        QuadExtNumber num = settle(combine(g, top));
        QuadExtNumber den = settle(combine(g, bottom));
        if (den.is_zero()) {
            throw ComputationError("central value vanishes or sign forces zero: r_{" + std::to_string(m2) +
                                   ",chi}(f) = 0");
        }
        if (num.d != den.d) {
            // one side settled into the cyclotomic field, the other vanished in its surd part
            const BigInt d = (num.d == 1) ? den.d : num.d;
            num.d = d;
            den.d = d;
        }
        QuadExtNumber out = num / den;
        out *= QuadExtNumber(factor, ExactNumber(), out.d);
        return out;
    };
    return {one(f), one(f.conjugate())};
}

// ---------------------------------------------------------------------------
// Factored expressions

namespace {

class FactoredParser {
   public:
    explicit FactoredParser(std::string_view text) : s_(text) {}

    BigRational parse() {
        BigRational v = product();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

   private:
    void skip() {
        while (pos_ < s_.size()) {
            if (s_[pos_] == ' ' || s_[pos_] == '{' || s_[pos_] == '}') {
                ++pos_;
            } else if (s_.substr(pos_, 5) == "\\cdot") {
                pos_ += 5;
            } else {
                break;
            }
        }
    }
    bool starts_factor() {
        skip();
        return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(');
    }
    BigRational product() {
        BigRational v = power();
        while (true) {
            skip();
            if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
                const char op = s_[pos_++];
                const BigRational r = power();
                if (op == '/' && sgn(r) == 0) fail("division by zero");
                if (op == '*') {
                    v *= r;
                } else {
                    v /= r;
                }
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }
    BigRational power() {
        BigRational base = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            return rational_pow(base, std::stol(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }
    BigRational atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (s_[pos_] == '(') {
            ++pos_;
            BigRational v = product();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("')' expected");
            ++pos_;
            return v;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("number expected");
        return BigRational(BigInt(std::string(s_.substr(start, pos_ - start))));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("factored expression \"" + std::string(s_) + "\" at " + std::to_string(pos_) + ": " +
                              what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

BigRational evaluate_factored(std::string_view text) { return FactoredParser(text).parse(); }

}  // namespace twistper

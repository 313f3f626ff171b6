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

#include "twistper/exact_field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace twistper {

BigRational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ValidationError("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    const auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-') {
        throw ValidationError("malformed rational literal '" + std::string(text) + "'");
    }
    BigInt n(num, 10), d(den, 10);
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Cyclotomic tables

namespace {

std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    // den monic
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        quot[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    return quot;
}

std::recursive_mutex& poly_mutex() {
    static std::recursive_mutex m;
    return m;
}

std::map<int, std::vector<std::int64_t>>& poly_cache() {
    static std::map<int, std::vector<std::int64_t>> cache;
    return cache;
}

std::mutex& level_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, std::unique_ptr<CyclotomicLevel>>& level_cache() {
    static std::map<int, std::unique_ptr<CyclotomicLevel>> cache;
    return cache;
}

std::unique_ptr<CyclotomicLevel> build_level(int level) {
    auto table = std::make_unique<CyclotomicLevel>();
    table->level = level;
    table->poly = cyclotomic_polynomial(level);
    const int deg = static_cast<int>(table->poly.size()) - 1;
    table->degree = deg;
    table->powers.resize(level);
    std::vector<std::int64_t> cur(deg, 0);
    cur[0] = 1;
    for (int k = 0; k < level; ++k) {
        auto& sparse = table->powers[k];
        for (int i = 0; i < deg; ++i) {
            if (cur[i] != 0) sparse.emplace_back(i, cur[i]);
        }
        // multiply by x and reduce the x^deg term
        const std::int64_t top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1] - top * table->poly[i];
        cur[0] = -top * table->poly[0];
    }
    return table;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int level) {
    if (level < 1) throw ValidationError("cyclotomic level must be positive");
    std::lock_guard<std::recursive_mutex> lock(poly_mutex());
    auto& cache = poly_cache();
    if (auto it = cache.find(level); it != cache.end()) return it->second;
    std::vector<std::int64_t> p(static_cast<std::size_t>(level) + 1, 0);
    p[0] = -1;
    p[level] = 1;
    for (std::int64_t d : divisors(level)) {
        if (d == level) continue;
        p = exact_divide(std::move(p), cyclotomic_polynomial(static_cast<int>(d)));
    }
    return cache.emplace(level, std::move(p)).first->second;
}

const CyclotomicLevel& cyclotomic_level(int level) {
    if (level < 1) throw ValidationError("cyclotomic level must be positive");
    std::lock_guard<std::mutex> lock(level_mutex());
    auto& cache = level_cache();
    auto it = cache.find(level);
    if (it == cache.end()) it = cache.emplace(level, build_level(level)).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// ExactNumber

ExactNumber::ExactNumber() : table_(&cyclotomic_level(1)), coords_(1) {}

ExactNumber::ExactNumber(const BigRational& q) : table_(&cyclotomic_level(1)), coords_{q} {}

ExactNumber::ExactNumber(long value) : table_(&cyclotomic_level(1)), coords_{BigRational(value)} {}

ExactNumber::ExactNumber(int level, std::vector<BigRational> coords)
    : table_(&cyclotomic_level(level)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != table_->degree) {
        throw ValidationError("ExactNumber: level " + std::to_string(level) + " needs " +
                              std::to_string(table_->degree) + " coordinates, got " +
                              std::to_string(coords_.size()));
    }
}

ExactNumber::ExactNumber(const CyclotomicLevel* table, std::vector<BigRational> coords)
    : table_(table), coords_(std::move(coords)) {}

bool ExactNumber::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const BigRational& q) { return sgn(q) == 0; });
}

bool ExactNumber::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const BigRational& q) { return sgn(q) == 0; });
}

ExactNumber ExactNumber::lifted(int new_level) const {
    if (new_level == level()) return *this;
    if (new_level % level() != 0) {
        throw ValidationError("cannot lift level " + std::to_string(level()) + " to " + std::to_string(new_level));
    }
    const CyclotomicLevel& target = cyclotomic_level(new_level);
    std::vector<BigRational> out(target.degree);
    const int step = new_level / level();
    for (int j = 0; j < static_cast<int>(coords_.size()); ++j) {
        if (sgn(coords_[j]) == 0) continue;
        for (const auto& [idx, c] : target.powers[static_cast<std::size_t>(j) * step]) {
            out[idx] += coords_[j] * BigRational(static_cast<long>(c));
        }
    }
    return ExactNumber(&target, std::move(out));
}

namespace {

// Brings a and b to a common level; rationals are re-embedded without reduction work.
void align(ExactNumber& a, ExactNumber& b) {
    if (a.level() == b.level()) return;
    const int common = std::lcm(a.level(), b.level());
    a = a.is_rational() ? cyclotomic_embed(a.constant_term(), common) : a.lifted(common);
    b = b.is_rational() ? cyclotomic_embed(b.constant_term(), common) : b.lifted(common);
}

}  // namespace

ExactNumber ExactNumber::operator-() const {
    ExactNumber out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& rhs) {
    if (rhs.level() == level()) {
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (sgn(rhs.coords_[i]) != 0) coords_[i] += rhs.coords_[i];
        }
        return *this;
    }
    ExactNumber r = rhs;
    align(*this, r);
    return *this += r;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& rhs) { return *this += -rhs; }

ExactNumber& ExactNumber::operator*=(const BigRational& rhs) {
    for (auto& c : coords_) {
        if (sgn(c) != 0) c *= rhs;
    }
    return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& rhs) {
    if (rhs.is_rational() && (rhs.level() == level() || level() % rhs.level() == 0)) {
        return *this *= rhs.constant_term();
    }
    if (is_rational() && rhs.level() % level() == 0) {
        const BigRational q = constant_term();
        *this = rhs;
        return *this *= q;
    }
    if (rhs.level() != level()) {
        ExactNumber r = rhs;
        align(*this, r);
        return *this *= r;
    }
    const int deg = table_->degree;
    const int m = table_->level;
    std::vector<BigRational> full(static_cast<std::size_t>(2 * deg - 1));
    BigRational tmp;
    for (int i = 0; i < deg; ++i) {
        if (sgn(coords_[i]) == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (sgn(rhs.coords_[j]) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), coords_[i].get_mpq_t(), rhs.coords_[j].get_mpq_t());
            full[i + j] += tmp;
        }
    }
    std::vector<BigRational> out(full.begin(), full.begin() + deg);
    for (int k = deg; k < 2 * deg - 1; ++k) {
        if (sgn(full[k]) == 0) continue;
        for (const auto& [idx, c] : table_->powers[k % m]) {
            mpq_mul(tmp.get_mpq_t(), full[k].get_mpq_t(), BigRational(static_cast<long>(c)).get_mpq_t());
            out[idx] += tmp;
        }
    }
    coords_ = std::move(out);
    return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& rhs) {
    if (rhs.is_rational()) {
        if (sgn(rhs.constant_term()) == 0) throw ComputationError("division by zero in Q(zeta)");
        if (level() % rhs.level() == 0) return *this *= BigRational(1 / rhs.constant_term());
    }
    return *this *= invert(rhs);
}

bool operator==(const ExactNumber& lhs, const ExactNumber& rhs) {
    if (lhs.level() == rhs.level()) return lhs.coords_ == rhs.coords_;
    if (lhs.is_rational() && rhs.is_rational()) return lhs.constant_term() == rhs.constant_term();
    const int common = std::lcm(lhs.level(), rhs.level());
    return lhs.lifted(common).coords_ == rhs.lifted(common).coords_;
}

ExactNumber cyclotomic_embed(const BigRational& q, int level) {
    const CyclotomicLevel& t = cyclotomic_level(level);
    std::vector<BigRational> coords(t.degree);
    coords[0] = q;
    return ExactNumber(level, std::move(coords));
}

ExactNumber root_of_unity(int level, std::int64_t k) {
    const CyclotomicLevel& t = cyclotomic_level(level);
    std::vector<BigRational> coords(t.degree);
    for (const auto& [idx, c] : t.powers[mod_floor(k, level)]) coords[idx] = BigRational(static_cast<long>(c));
    return ExactNumber(level, std::move(coords));
}

ExactNumber imaginary_unit() { return root_of_unity(4, 1); }

namespace {

using QVec = std::vector<BigRational>;

void trim(QVec& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// (quotient, remainder) of a by b over Q, ascending coefficients.
std::pair<QVec, QVec> divmod(QVec a, const QVec& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {QVec{}, a};
    QVec q(a.size() - db);
    const BigRational lead_inv = 1 / b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (sgn(a[i]) == 0) continue;
        const BigRational c = a[i] * lead_inv;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

QVec mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QVec sub(QVec a, const QVec& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

ExactNumber invert(const ExactNumber& x) {
    if (x.is_zero()) throw ComputationError("inverse of zero in Q(zeta)");
    if (x.is_rational()) return cyclotomic_embed(1 / x.constant_term(), x.level());
    const CyclotomicLevel& t = cyclotomic_level(x.level());
    QVec r0(t.poly.begin(), t.poly.end());
    QVec r1 = x.coords();
    trim(r1);
    QVec s0, s1{BigRational(1)};
    // Invariant: r_i == s_i * x  (mod Phi_M)
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QVec s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        // keep r1 monic to curb coefficient growth
        if (!r1.empty()) {
            const BigRational lead_inv = 1 / r1.back();
            for (auto& c : r1) c *= lead_inv;
            for (auto& c : s1) c *= lead_inv;
        }
    }
    if (r1.empty()) throw ComputationError("element shares a factor with the cyclotomic polynomial");
    const BigRational scale = 1 / r1[0];
    QVec coords(t.degree);
    auto [q, rem] = divmod(s1, QVec(t.poly.begin(), t.poly.end()));
    (void)q;
    for (std::size_t i = 0; i < rem.size(); ++i) coords[i] = rem[i] * scale;
    return ExactNumber(x.level(), std::move(coords));
}

ExactNumber pow(const ExactNumber& base, std::int64_t exponent) {
    if (exponent < 0) return pow(invert(base), -exponent);
    ExactNumber result = cyclotomic_embed(1, base.level());
    ExactNumber b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

std::complex<double> numeric_eval(const ExactNumber& x) {
    std::complex<double> out{0.0, 0.0};
    const double m = x.level();
    for (std::size_t j = 0; j < x.coords().size(); ++j) {
        if (sgn(x.coords()[j]) == 0) continue;
        out += x.coords()[j].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / m);
    }
    return out;
}

namespace {

int legendre(std::int64_t a, std::int64_t p) {
    a = mod_floor(a, p);
    if (a == 0) return 0;
    std::int64_t result = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

ExactNumber prime_sqrt(std::int64_t p) {
    ExactNumber s;
    if (p == 2) {
        s = root_of_unity(8, 1) + root_of_unity(8, 7);
    } else {
        ExactNumber g = cyclotomic_embed(0, static_cast<int>(p));
        for (std::int64_t h = 1; h < p; ++h) {
            g += ExactNumber(static_cast<long>(legendre(h, p))) * root_of_unity(static_cast<int>(p), h);
        }
        // g^2 = (-1)^((p-1)/2) p
        s = (p % 4 == 1) ? g : -(imaginary_unit() * g);
    }
    if (numeric_eval(s).real() < 0) s = -s;
    return s;
}

}  // namespace

ExactNumber sqrt_integer(std::int64_t n, int level) {
    if (n < 1 || !is_squarefree(n)) {
        throw ValidationError("sqrt_integer: " + std::to_string(n) + " is not a positive squarefree integer");
    }
    if (level == 0) level = static_cast<int>(4 * n);
    if (level % (4 * n) != 0) {
        throw ValidationError("sqrt_integer: level " + std::to_string(level) + " is not a multiple of " +
                              std::to_string(4 * n));
    }
    ExactNumber out = cyclotomic_embed(1, level);
    for (std::int64_t p : prime_divisors(n)) out *= prime_sqrt(p).lifted(level);
    return out;
}

// ---------------------------------------------------------------------------
// QuadSurd

QuadSurd::QuadSurd(BigRational rational_part, BigRational radical_coefficient, BigInt radicand)
    : a(std::move(rational_part)), b(std::move(radical_coefficient)), d(std::move(radicand)) {
    if (d < 1) throw ValidationError("QuadSurd radicand must be positive");
    if (sgn(b) == 0) d = 1;
}

namespace {

BigInt common_radicand(const QuadSurd& l, const QuadSurd& r) {
    if (l.is_rational()) return r.d;
    if (r.is_rational() || l.d == r.d) return l.d;
    throw ComputationError("QuadSurd arithmetic across different radicands " + l.d.get_str() + " and " +
                           r.d.get_str());
}

}  // namespace

QuadSurd& QuadSurd::operator+=(const QuadSurd& rhs) {
    const BigInt dd = common_radicand(*this, rhs);
    *this = QuadSurd(a + rhs.a, b + rhs.b, dd);
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& rhs) { return *this += -rhs; }

QuadSurd& QuadSurd::operator*=(const QuadSurd& rhs) {
    const BigInt dd = common_radicand(*this, rhs);
    *this = QuadSurd(a * rhs.a + b * rhs.b * BigRational(dd), a * rhs.b + b * rhs.a, dd);
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& rhs) {
    const BigRational n = rhs.norm();
    if (sgn(n) == 0) throw ComputationError("QuadSurd division by zero");
    *this *= rhs.conjugate();
    *this = QuadSurd(a / n, b / n, d);
    return *this;
}

double QuadSurd::to_double() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }

ExactNumber QuadSurd::to_exact(int level) const {
    ExactNumber out = cyclotomic_embed(a, level);
    if (sgn(b) != 0) out += ExactNumber(b) * sqrt_integer(d.get_si(), level);
    return out;
}

std::optional<QuadSurd> recognize_surd(const ExactNumber& x) {
    if (x.is_rational()) return QuadSurd(x.constant_term(), 0, 1);
    const int m = x.level();
    for (std::int64_t d : divisors(m)) {
        if (d == 1 || !is_squarefree(d) || m % (4 * d) != 0) continue;
        const ExactNumber s = sqrt_integer(d, m);
        std::size_t pivot = 1;
        while (pivot < s.coords().size() && sgn(s.coords()[pivot]) == 0) ++pivot;
        if (pivot == s.coords().size()) continue;
        const BigRational b = x.coords()[pivot] / s.coords()[pivot];
        const BigRational a = x.coords()[0] - b * s.coords()[0];
        if (cyclotomic_embed(a, m) + ExactNumber(b) * s == x) return QuadSurd(a, b, d);
    }
    return std::nullopt;
}

std::string to_string(const QuadSurd& s) {
    if (s.is_rational()) return to_string(s.a);
    const BigRational mag = abs(s.b);
    const std::string radical = (mag == 1 ? std::string() : to_string(mag) + "*") + "sqrt(" + s.d.get_str() + ")";
    if (sgn(s.a) == 0) return (sgn(s.b) < 0 ? "-" : "") + radical;
    return to_string(s.a) + (sgn(s.b) < 0 ? " - " : " + ") + radical;
}

QuadSurd parse_quad_surd(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    const auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return QuadSurd(parse_rational(s));
    const auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size()) {
        throw ValidationError("malformed surd '" + std::string(text) + "'");
    }
    const BigRational radicand = parse_rational(s.substr(pos + 5, close - pos - 5));
    if (radicand.get_den() != 1 || radicand <= 0) {
        throw ValidationError("surd radicand must be a positive integer in '" + std::string(text) + "'");
    }
    std::string prefix = s.substr(0, pos);
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    std::string rational_part = "0", coefficient = prefix;
    for (std::size_t j = 1; j < prefix.size(); ++j) {
        if ((prefix[j] == '+' || prefix[j] == '-') && std::isdigit(static_cast<unsigned char>(prefix[j - 1]))) {
            rational_part = prefix.substr(0, j);
            coefficient = prefix.substr(prefix[j] == '+' ? j + 1 : j);
            break;
        }
    }
    BigRational b;
    if (coefficient.empty() || coefficient == "+") {
        b = 1;
    } else if (coefficient == "-") {
        b = -1;
    } else {
        b = parse_rational(coefficient);
    }
    const BigInt d = radicand.get_num();
    if (!is_squarefree(d.get_si())) {
        throw ValidationError("surd radicand " + d.get_str() + " is not squarefree");
    }
    return QuadSurd(parse_rational(rational_part), b, d);
}

namespace {

std::string factored_natural(const BigInt& n) {
    if (n == 1) return "1";
    std::string out;
    for (const auto& [p, e] : factorize_partial(n)) {
        if (!out.empty()) out += "*";
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

// Positive rational body, plus whether it contains an operator.
std::pair<std::string, bool> factored_body(const BigRational& q) {
    const std::string num = factored_natural(q.get_num());
    if (q.get_den() == 1) return {num, num.find_first_of("*^") != std::string::npos};
    std::string den = factored_natural(q.get_den());
    if (den.find('*') != std::string::npos) den = "(" + den + ")";
    return {num + "/" + den, true};
}

}  // namespace

std::string pretty_rational(const BigRational& q) {
    if (sgn(q) == 0) return "0";
    return (sgn(q) < 0 ? "-" : "") + factored_body(abs(q)).first;
}

std::string pretty_surd(const QuadSurd& s) {
    if (s.is_rational()) return pretty_rational(s.a);
    const std::string radical = "sqrt(" + s.d.get_str() + ")";
    std::string term;
    const BigRational mag = abs(s.b);
    if (mag == 1) {
        term = radical;
    } else {
        auto [body, compound] = factored_body(mag);
        term = (compound ? "(" + body + ")" : body) + "*" + radical;
    }
    if (sgn(s.a) == 0) return (sgn(s.b) < 0 ? "-" : "") + term;
    return pretty_rational(s.a) + (sgn(s.b) < 0 ? " - " : " + ") + term;
}

// ---------------------------------------------------------------------------
// QuadExtNumber

QuadExtNumber QuadExtNumber::from_surd(const QuadSurd& s) { return {ExactNumber(s.a), ExactNumber(s.b), s.d}; }

std::complex<double> QuadExtNumber::numeric(bool positive_root) const {
    const double root = std::sqrt(d.get_d()) * (positive_root ? 1.0 : -1.0);
    return numeric_eval(x) + root * numeric_eval(y);
}

namespace {

BigInt common_radicand(const QuadExtNumber& l, const QuadExtNumber& r) {
    if (l.y.is_zero()) return r.d;
    if (r.y.is_zero() || l.d == r.d) return l.d;
    throw ComputationError("sqrt(" + l.d.get_str() + ") and sqrt(" + r.d.get_str() + ") do not share a field");
}

}  // namespace

QuadExtNumber& QuadExtNumber::operator+=(const QuadExtNumber& rhs) {
    d = common_radicand(*this, rhs);
    x += rhs.x;
    y += rhs.y;
    return *this;
}

QuadExtNumber& QuadExtNumber::operator*=(const QuadExtNumber& rhs) {
    const BigInt dd = common_radicand(*this, rhs);
    ExactNumber nx = x * rhs.x + ExactNumber(BigRational(dd)) * y * rhs.y;
    ExactNumber ny = x * rhs.y + y * rhs.x;
    x = std::move(nx);
    y = std::move(ny);
    d = dd;
    return *this;
}

QuadExtNumber& QuadExtNumber::operator/=(const QuadExtNumber& rhs) {
    const ExactNumber norm = rhs.x * rhs.x - ExactNumber(BigRational(rhs.d)) * rhs.y * rhs.y;
    if (norm.is_zero()) throw ComputationError("division by zero in Q(zeta)(sqrt d)");
    *this *= rhs.conjugate();
    const ExactNumber inv = invert(norm);
    x *= inv;
    y *= inv;
    return *this;
}

bool operator==(const QuadExtNumber& l, const QuadExtNumber& r) {
    if (l.x != r.x || l.y != r.y) return false;
    return l.y.is_zero() || l.d == r.d;
}

}  // namespace twistper

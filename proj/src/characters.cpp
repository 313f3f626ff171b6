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

#include "twistper/characters.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace twistper {

namespace {

int conductor_of(int modulus, const std::vector<int>& exponents) {
    // smallest d | D such that chi(h) = 1 on every unit h = 1 mod d
    for (std::int64_t d : divisors(modulus)) {
        bool induced = true;
        for (std::int64_t h = 1; h < modulus && induced; h += d) {
            if (std::gcd(h, static_cast<std::int64_t>(modulus)) == 1 && exponents[h] != 0) induced = false;
        }
        if (induced) return static_cast<int>(d);
    }
    return modulus;
}

}  // namespace

DirichletCharacter DirichletCharacter::from_exponents(int modulus, int order, std::vector<int> exponents,
                                                      std::string label) {
    if (modulus < 1) throw ValidationError("character modulus must be positive");
    if (order < 1) throw ValidationError("character order must be positive");
    if (static_cast<int>(exponents.size()) != modulus) {
        throw ValidationError("character table for modulus " + std::to_string(modulus) + " has " +
                              std::to_string(exponents.size()) + " entries");
    }
    for (int h = 0; h < modulus; ++h) {
        const bool unit = std::gcd(h, modulus) == 1;
        if (unit && exponents[h] < 0) {
            throw ValidationError("character vanishes at unit " + std::to_string(h) + " mod " +
                                  std::to_string(modulus));
        }
        if (!unit && exponents[h] >= 0) {
            throw ValidationError("character is nonzero at non-unit " + std::to_string(h) + " mod " +
                                  std::to_string(modulus));
        }
        if (unit) exponents[h] = static_cast<int>(mod_floor(exponents[h], order));
    }
    if (exponents[1 % modulus] != 0) throw ValidationError("character table has chi(1) != 1");
    for (int m = 1; m < modulus; ++m) {
        if (exponents[m] < 0) continue;
        for (int n = m; n < modulus; ++n) {
            if (exponents[n] < 0) continue;
            if (exponents[static_cast<std::int64_t>(m) * n % modulus] != (exponents[m] + exponents[n]) % order) {
                throw ValidationError("character table is not multiplicative at " + std::to_string(m) + "*" +
                                      std::to_string(n) + " mod " + std::to_string(modulus));
            }
        }
    }
    int g = order;
    for (int e : exponents) {
        if (e >= 0) g = std::gcd(g, e);
    }
    DirichletCharacter chi;
    chi.modulus_ = modulus;
    chi.order_ = order / g;
    for (auto& e : exponents) {
        if (e >= 0) e /= g;
    }
    chi.exponents_ = std::move(exponents);
    chi.conductor_ = conductor_of(modulus, chi.exponents_);
    if (modulus > 1) {
        const int em1 = chi.exponents_[modulus - 1];
        chi.parity_ = (em1 == 0) ? 1 : -1;  // chi(-1) is +-1, so the exponent is 0 or order/2
    }
    chi.powers_.reserve(chi.order_);
    for (int e = 0; e < chi.order_; ++e) chi.powers_.push_back(root_of_unity(chi.order_, e));
    chi.label_ = label.empty() ? format_character_table(chi) : std::move(label);
    return chi;
}

ExactNumber DirichletCharacter::operator()(std::int64_t h) const {
    const int e = exponent(h);
    return e < 0 ? ExactNumber() : powers_[e];
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<int> conj = exponents_;
    for (auto& e : conj) {
        if (e > 0) e = order_ - e;
    }
    std::string label;
    if (order_ <= 2) label = label_;
    return from_exponents(modulus_, order_, std::move(conj), label);
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n < 0) throw ValidationError("kronecker_symbol: negative lower argument");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    // factor out powers of two from n
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        const std::int64_t r = mod_floor(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (a / n) for odd n
    a = mod_floor(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

DirichletCharacter kronecker_character(std::int64_t D) {
    const std::int64_t m = std::llabs(D);
    if (m < 2) throw ValidationError("kronecker_character: |D| must exceed 1");
    std::vector<int> exps(m);
    for (std::int64_t h = 0; h < m; ++h) {
        const int v = kronecker_symbol(D, h);
        exps[h] = v == 0 ? -1 : (v == 1 ? 0 : 1);
    }
    for (std::int64_t n = m; n < 4 * m; ++n) {
        if (kronecker_symbol(D, n) != kronecker_symbol(D, n % m)) {
            throw ValidationError("Kronecker symbol (" + std::to_string(D) + "/.) is not periodic modulo " +
                                  std::to_string(m));
        }
    }
    DirichletCharacter chi = DirichletCharacter::from_exponents(static_cast<int>(m), 2, std::move(exps),
                                                                "kronecker:" + std::to_string(D));
    if (!chi.is_primitive()) {
        throw ValidationError("Kronecker character (" + std::to_string(D) + "/.) is not primitive: conductor " +
                              std::to_string(chi.conductor()) + " != " + std::to_string(m));
    }
    return chi;
}

std::vector<DirichletCharacter> enumerate_primitive_characters(int D, int bound) {
    if (D < 2) throw ValidationError("enumerate_primitive_characters: D must exceed 1");
    if (D > bound) {
        throw ValidationError("enumerate_primitive_characters: D = " + std::to_string(D) +
                              " exceeds the configured bound " + std::to_string(bound));
    }
    // Generators of (Z/DZ)^* via CRT over the prime-power components.
    struct Generator {
        std::int64_t value;
        int order;
    };
    std::vector<Generator> gens;
    for (const auto& [p, e] : factorize(D)) {
        std::int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        const std::int64_t rest = D / q;
        const auto lift = [&](std::int64_t g) {
            // x = g mod q, x = 1 mod rest
            if (rest == 1) return mod_floor(g, q);
            const std::int64_t t = mod_floor((g - 1) * mod_inverse(rest, q), q);
            return mod_floor(1 + rest * t, D);
        };
        if (p == 2) {
            if (e == 2) gens.push_back({lift(-1), 2});
            if (e >= 3) {
                gens.push_back({lift(-1), 2});
                gens.push_back({lift(5), static_cast<int>(q / 4)});
            }
            continue;
        }
        const std::int64_t group = q / p * (p - 1);
        std::int64_t root = 2;
        for (;; ++root) {
            if (root % p == 0) continue;
            bool primitive = true;
            for (std::int64_t r : prime_divisors(group)) {
                std::int64_t acc = 1;
                for (std::int64_t i = 0; i < group / r; ++i) acc = acc * root % q;
                if (acc == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
        gens.push_back({lift(root), static_cast<int>(group)});
    }
    int exponent = 1;
    for (const auto& g : gens) exponent = std::lcm(exponent, g.order);

    // discrete logs of every unit with respect to the generators
    std::vector<std::vector<int>> logs(D);
    std::vector<int> digits(gens.size(), 0);
    while (true) {
        std::int64_t u = 1 % D;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (int k = 0; k < digits[i]; ++k) u = u * gens[i].value % D;
        }
        logs[u] = digits;
        std::size_t i = 0;
        while (i < gens.size() && ++digits[i] == gens[i].order) digits[i++] = 0;
        if (i == gens.size()) break;
    }

    std::vector<DirichletCharacter> out;
    std::vector<int> choice(gens.size(), 0);
    while (true) {
        std::vector<int> exps(D, -1);
        for (int h = 0; h < D; ++h) {
            if (std::gcd(h, D) != 1) continue;
            std::int64_t e = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                e += static_cast<std::int64_t>(choice[i]) * (exponent / gens[i].order) * logs[h][i];
            }
            exps[h] = static_cast<int>(e % exponent);
        }
        auto chi = DirichletCharacter::from_exponents(D, exponent, std::move(exps));
        if (chi.is_primitive()) out.push_back(std::move(chi));
        std::size_t i = 0;
        while (i < gens.size() && ++choice[i] == gens[i].order) choice[i++] = 0;
        if (i == gens.size()) break;
    }
    return out;
}

ExactNumber gauss_sum(const DirichletCharacter& chi) {
    const int D = chi.modulus();
    const int level = std::lcm(D, chi.order());
    const CyclotomicLevel& t = cyclotomic_level(level);
    std::vector<BigRational> coords(t.degree);
    for (int h = 0; h < D; ++h) {
        const int e = chi.exponent(h);
        if (e < 0) continue;
        const std::int64_t k = static_cast<std::int64_t>(e) * (level / chi.order()) +
                               static_cast<std::int64_t>(h) * (level / D);
        for (const auto& [idx, c] : t.powers[k % level]) coords[idx] += static_cast<long>(c);
    }
    return ExactNumber(level, std::move(coords));
}

int chi_four_tuple_exponent(const DirichletCharacter& chi, std::int64_t a, std::int64_t c, std::int64_t k,
                            std::int64_t l) {
    if (std::gcd(a, c) != 1) throw ValidationError("chi_four_tuple: gcd(a, c) != 1");
    if (k * a + l * c != chi.modulus()) throw ValidationError("chi_four_tuple: k a + l c != D");
    const auto [g, x, y] = extended_gcd(a, c);
    (void)g;
    // a x + c y = 1, so d = x and b = -y give a d - b c = 1
    const std::int64_t b = -y, d = x;
    return chi.exponent(k * b + l * d);
}

ExactNumber chi_four_tuple(const DirichletCharacter& chi, std::int64_t a, std::int64_t c, std::int64_t k,
                           std::int64_t l) {
    const int e = chi_four_tuple_exponent(chi, a, c, k, l);
    return e < 0 ? ExactNumber() : root_of_unity(chi.order(), e);
}

DirichletCharacter parse_character(std::string_view spec) {
    const std::string s(spec);
    const auto fail = [&](const std::string& why) {
        return ValidationError("bad character spec '" + s + "': " + why);
    };
    const auto parse_int = [&](const std::string& text) -> std::int64_t {
        if (text.empty()) throw fail("empty integer");
        std::size_t i = text[0] == '-' ? 1 : 0;
        if (i == text.size()) throw fail("empty integer");
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("'" + text + "' is not an integer");
        }
        return std::stoll(text);
    };
    if (s.rfind("kronecker:", 0) == 0) return kronecker_character(parse_int(s.substr(10)));
    if (s.rfind("table:", 0) != 0) throw fail("expected 'kronecker:D' or 'table:D:...'");
    const auto colon = s.find(':', 6);
    if (colon == std::string::npos) throw fail("missing value list");
    const std::int64_t D = parse_int(s.substr(6, colon - 6));
    if (D < 2 || D > 100000) throw fail("modulus out of range");
    std::vector<std::string> items;
    std::stringstream list(s.substr(colon + 1));
    for (std::string item; std::getline(list, item, ',');) items.push_back(item);
    if (static_cast<std::int64_t>(items.size()) != D) throw fail("expected " + std::to_string(D) + " values");
    // each value as a fraction k / M of a full turn
    std::vector<std::pair<std::int64_t, std::int64_t>> turns;
    std::int64_t order = 1;
    for (const auto& item : items) {
        if (item == "0") {
            turns.emplace_back(-1, 0);
            continue;
        }
        const auto open = item.find('['), close = item.find(']');
        if (item.rfind("zeta[", 0) != 0 || close == std::string::npos || close + 1 >= item.size() ||
            item[close + 1] != '^') {
            throw fail("value '" + item + "' is not 'zeta[M]^k' or '0'");
        }
        const std::int64_t M = parse_int(item.substr(open + 1, close - open - 1));
        if (M < 1) throw fail("root-of-unity level must be positive");
        const std::int64_t k = mod_floor(parse_int(item.substr(close + 2)), M);
        const std::int64_t g = std::gcd(k, M);
        turns.emplace_back(k / g, M / g);
        order = std::lcm(order, M / g);
    }
    std::vector<int> exps;
    for (const auto& [k, M] : turns) exps.push_back(M == 0 ? -1 : static_cast<int>(k * (order / M)));
    return DirichletCharacter::from_exponents(static_cast<int>(D), static_cast<int>(order), std::move(exps), s);
}

std::string format_character_table(const DirichletCharacter& chi) {
    std::string out = "table:" + std::to_string(chi.modulus()) + ":";
    for (int h = 0; h < chi.modulus(); ++h) {
        if (h > 0) out += ",";
        const int e = chi.exponent(h);
        out += e < 0 ? "0" : "zeta[" + std::to_string(chi.order()) + "]^" + std::to_string(e);
    }
    return out;
}

}  // namespace twistper

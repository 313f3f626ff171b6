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

#include "cli.hpp"

#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistper/eigenforms.hpp"
#include "twistper/numeric_verify.hpp"
#include "twistper/serialization.hpp"

namespace twistper::cli {

namespace {

using nlohmann::json;

struct Options {
    int level = 1;
    int weight = 12;
    int n = 1;
    int m = 1;
    int m1 = 1;
    int m2 = 1;
    std::string character;
    std::string fixture;
    std::string grid = "default";
    std::string format = "text";
    std::string method;
    std::string check = "all";
    int truncation = 400;
    int threads = 0;
    bool dump = false;
};

std::string float_text(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

/// Factored surd when the value is one, raw coordinates otherwise.
std::string exact_text(const ExactNumber& x) {
    if (const auto s = recognize_surd(x)) return pretty_surd(*s);
    std::string out = "[level " + std::to_string(x.level()) + "]";
    for (const auto& c : x.coords()) out += " " + to_string(c);
    return out;
}

std::string latex_rational(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    const std::string sign = sgn(q) < 0 ? "-" : "";
    BigInt num = abs(q.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string exact_latex(const ExactNumber& x) {
    const auto s = recognize_surd(x);
    if (!s) return "\\text{" + exact_text(x) + "}";
    if (s->is_rational()) return latex_rational(s->a);
    const std::string radical = latex_rational(s->b) + "\\sqrt{" + s->d.get_str() + "}";
    if (sgn(s->a) == 0) return radical;
    return latex_rational(s->a) + (sgn(s->b) > 0 ? "+" : "") + radical;
}

json exact_report(const ExactNumber& x) {
    json j{{"exact", to_json(x)}, {"float", complex_json(numeric_eval(x))}};
    const auto s = recognize_surd(x);
    j["surd"] = s ? json(to_string(*s)) : json(nullptr);
    return j;
}

PeriodContext make_context(const Options& o) {
    if (o.character.empty()) throw ValidationError("--character is required");
    return PeriodContext(o.level, o.weight - 2, o.n, parse_character(o.character));
}

// ---------------------------------------------------------------------------

int cmd_theorem1(const Options& o, std::ostream& out) {
    const PeriodContext ctx = make_context(o);
    const ExactPolynomial p = (o.method == "lemma") ? lemma_sum_polynomial(ctx) : theorem1_polynomial(ctx);
    const int w = ctx.w();
    if (o.format == "json") {
        json j{{"level", ctx.level()},
               {"weight", w + 2},
               {"n", ctx.n()},
               {"character", ctx.character().label()},
               {"method", o.method == "lemma" ? "lemma" : "closed"},
               {"coefficients", to_json(p)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    if (o.format == "latex") {
        std::string body;
        for (int k = w; k >= 0; --k) {
            const ExactNumber c = p.coefficient(k);
            if (c.is_zero()) continue;
            if (!body.empty()) body += "\n  + ";
            body += "\\left(" + exact_latex(c) + "\\right)";
            if (k > 0) body += "X^{" + std::to_string(k) + "}";
        }
        out << "P_{" << ctx.n() << "}(X) = " << (body.empty() ? "0" : body) << "\n";
        return 0;
    }
    out << "P_" << ctx.n() << "(X), level " << ctx.level() << ", weight " << w + 2 << ", chi " << ctx.character().label()
        << "\n";
    for (int k = w; k >= 0; --k) {
        const ExactNumber c = p.coefficient(k);
        if (!c.is_zero()) out << "X^" << k << ": " << exact_text(c) << "\n";
    }
    return 0;
}

int cmd_trace(const Options& o, std::ostream& out) {
    const TraceQuery q{make_context(o), o.m};
    const ExactNumber t = (o.method == "theorem1") ? trace_via_theorem1(q) : trace_direct(q);
    if (o.format == "json") {
        json j = exact_report(t);
        j["m"] = o.m;
        j["n"] = o.n;
        j["level"] = o.level;
        j["weight"] = o.weight;
        j["character"] = q.ctx.character().label();
        out << j.dump(2) << "\n";
    } else {
        out << exact_text(t) << "\n";
    }
    return 0;
}

struct GridCell {
    int level;
    int w;
    DirichletCharacter chi;
};

struct CellResult {
    int polynomials = 0;
    int traces = 0;
    std::vector<std::string> mismatches;
};

CellResult check_cell(const GridCell& cell) {
    CellResult r;
    for (int n = 1; n < cell.w; ++n) {
        const PeriodContext ctx(cell.level, cell.w, n, cell.chi);
        const ExactPolynomial p = theorem1_polynomial(ctx);
        ++r.polynomials;
        if (lemma_sum_polynomial(ctx) != p) r.mismatches.push_back("polynomial n=" + std::to_string(n));
        for (int m = 0; m <= cell.w; ++m) {
            if (!ctx.admits(m)) continue;
            ++r.traces;
            const TraceQuery q{ctx, m};
            if (trace_direct(q) != trace_via_theorem1(q, p)) {
                r.mismatches.push_back("trace m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
    }
    return r;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
    std::vector<int> levels, moduli, ws;
    if (o.grid == "default") {
        levels = {1, 2, 3, 4};
        moduli = {3, 4, 5, 7, 8, 12};
        ws = {10, 12, 14};
    } else if (o.grid == "small") {
        levels = {1, 2};
        moduli = {3, 4, 5};
        ws = {10};
    } else {
        throw ValidationError("unknown grid \"" + o.grid + "\" (default, small)");
    }
    std::vector<GridCell> cells;
    for (int N : levels)
        for (int D : moduli)
            for (const auto& chi : enumerate_primitive_characters(D))
                for (int w : ws) cells.push_back({N, w, chi});

    const unsigned workers = o.threads > 0 ? static_cast<unsigned>(o.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    std::vector<CellResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = check_cell(cells[i]);
        }));
    }
    for (auto& f : pool) f.get();

    int polynomials = 0, traces = 0, bad = 0;
    json rows = json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        const auto& r = results[i];
        polynomials += r.polynomials;
        traces += r.traces;
        bad += static_cast<int>(r.mismatches.size());
        if (o.format == "json") {
            rows.push_back({{"level", c.level},
                            {"weight", c.w + 2},
                            {"character", c.chi.label()},
                            {"polynomials", r.polynomials},
                            {"traces", r.traces},
                            {"mismatches", r.mismatches}});
        } else {
            out << "N=" << c.level << " D=" << c.chi.modulus() << " weight=" << c.w + 2 << " chi=" << c.chi.label()
                << ": " << r.polynomials << " polynomials, " << r.traces << " traces"
                << (r.mismatches.empty() ? " equal" : " MISMATCH") << "\n";
            for (const auto& msg : r.mismatches) out << "  " << msg << "\n";
        }
    }
    const std::string summary = bad == 0 ? "ALL EQUAL" : "MISMATCH";
    if (o.format == "json") {
        out << json{{"grid", o.grid}, {"cells", rows}, {"polynomials", polynomials}, {"traces", traces},
                    {"mismatches", bad}, {"summary", summary}}
                   .dump(2)
            << "\n";
    } else {
        out << summary << ": " << cells.size() << " contexts, " << polynomials << " polynomial identities, " << traces
            << " trace identities, " << bad << " mismatches\n";
    }
    return bad == 0 ? 0 : 1;
}

int cmd_eigen(const Options& o, std::ostream& out) {
    if (o.fixture.empty()) throw ValidationError("--fixture is required");
    const MatrixFixture& fx = load_fixtures().matrix(o.fixture);
    const QPolynomial cp = char_poly(fx.matrix);
    const auto pairs = eigen_decompose(fx.matrix);
    if (o.format == "json") {
        json poly = json::array();
        for (const auto& c : cp.descending()) poly.push_back(to_string(c));
        json eig = json::array();
        for (const auto& p : pairs) {
            json v = json::array();
            for (const auto& x : p.vector) v.push_back(to_json(x));
            eig.push_back({{"value", to_json(p.value)}, {"vector", v}});
        }
        out << json{{"fixture", fx.name}, {"basis", fx.basis}, {"char_poly", poly}, {"eigenpairs", eig}}.dump(2)
            << "\n";
        return 0;
    }
    out << "char_poly (highest degree first):";
    for (const auto& c : cp.descending()) out << " " << to_string(c);
    out << "\n";
    for (const auto& p : pairs) {
        out << "eigenvalue " << to_string(p.value) << ":";
        for (std::size_t k = 0; k < p.vector.size(); ++k) {
            out << (k ? " + " : " ") << "(" << to_string(p.vector[k]) << ")R_" << fx.basis[k];
        }
        out << "\n";
    }
    return 0;
}

int cmd_ratio(const Options& o, std::ostream& out) {
    if (o.fixture.empty()) throw ValidationError("--fixture is required");
    if (o.character.empty()) throw ValidationError("--character is required");
    const EigenformFixture& fx = load_fixtures().eigenform(o.fixture);
    const LambdaRatio r = twisted_lambda_ratio(fx.form, parse_character(o.character), o.m1, o.m2);
    if (o.format == "json") {
        out << json{{"fixture", fx.name},
                    {"m1", o.m1},
                    {"m2", o.m2},
                    {"character", o.character},
                    {"positive_root", {{"exact", to_json(r.value)}, {"float", complex_json(r.value.numeric())}}},
                    {"negative_root", {{"exact", to_json(r.conjugate)}, {"float", complex_json(r.conjugate.numeric())}}}}
                       .dump(2)
            << "\n";
        return 0;
    }
    auto line = [&](const char* tag, const QuadExtNumber& v) {
        out << tag << ": " << exact_text(v.x);
        if (!v.y.is_zero()) out << " + (" << exact_text(v.y) << ")*sqrt(" << v.d.get_str() << ")";
        out << "  ~ " << float_text(v.numeric().real()) << "\n";
    };
    line("sqrt(d) > 0", r.value);
    if (fx.conjugate_pair) line("sqrt(d) < 0", r.conjugate);
    return 0;
}

int cmd_verify_numeric(const Options& o, std::ostream& out) {
    static const std::vector<std::string> checks{"all", "lambda", "petersson", "twisted", "trace"};
    if (std::find(checks.begin(), checks.end(), o.check) == checks.end()) {
        throw ValidationError("unknown check \"" + o.check + "\"");
    }
    const bool all = o.check == "all";
    std::vector<NumericReport> reports;
    if (all || o.check == "lambda") {
        reports.push_back(make_report("Lambda(Delta,2)", 0.003707710464948, lambda_delta(2, o.truncation), 1e-12, false));
    }
    if (all || o.check == "petersson") {
        reports.push_back(make_report("1/<Delta,Delta>", 965845.709168185,
                                      petersson_delta_inverse(std::max(o.truncation, 10000)), 1e-6, true));
    }
    const auto chi = kronecker_character(-3);
    if (all || o.check == "twisted") {
        const std::pair<int, double> reference[] = {{1, -228.22304046813742}, {3, -14.263940029258589}, {5, 0.0}};
        for (const auto& [m, value] : reference) {
            reports.push_back(make_report("Lambda(Delta,chi_-3," + std::to_string(m + 1) + ")", value,
                                          numeric_twisted_lambda(chi, m, o.truncation).real(), 1e-8, false));
        }
    }
    if (all || o.check == "trace") {
        for (int m = 1; m <= 9; m += 2) reports.push_back(verify_trace_numeric({PeriodContext(1, 10, 1, chi), m}));
    }
    bool pass = true;
    json arr = json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass;
        arr.push_back({{"check", r.check},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"abs_err", r.abs_err},
                       {"rel_err", r.rel_err},
                       {"tolerance", r.tolerance},
                       {"relative", r.relative},
                       {"pass", r.pass}});
        if (o.format != "json") {
            out << (r.pass ? "PASS " : "FAIL ") << r.check << ": expected " << float_text(r.expected) << ", computed "
                << float_text(r.computed) << " (" << (r.relative ? "rel " : "abs ")
                << float_text(r.relative ? r.rel_err : r.abs_err) << ")\n";
        }
    }
    if (o.format == "json") out << arr.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
    if (!o.dump) throw ValidationError("fixtures: pass --dump");
    out << embedded_fixture_text();
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact twisted period polynomials and trace formulas for cusp forms"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"text", "json"};

    auto context_flags = [&](CLI::App* sub) {
        sub->add_option("--level", o.level, "level N")->check(CLI::PositiveNumber);
        sub->add_option("--weight", o.weight, "modular weight w + 2")->required();
        sub->add_option("--character", o.character, "kronecker:D or table:D:...")->required();
    };
    auto* theorem1 = app.add_subcommand("theorem1", "symmetrized twisted period polynomial");
    context_flags(theorem1);
    theorem1->add_option("--n", o.n, "index of R_n")->required();
    theorem1->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex"}));
    theorem1->add_option("--method", o.method, "closed (default) or lemma")->check(CLI::IsMember({"closed", "lemma"}));

    auto* trace = app.add_subcommand("trace", "trace of twisted times untwisted L-values");
    context_flags(trace);
    trace->add_option("--n", o.n)->required();
    trace->add_option("--m", o.m)->required();
    trace->add_option("--format", o.format)->check(CLI::IsMember(formats));
    trace->add_option("--method", o.method, "direct (default) or theorem1")
        ->check(CLI::IsMember({"direct", "theorem1"}));

    auto* cross = app.add_subcommand("crosscheck", "closed form against the case-by-case sum on a grid");
    cross->add_option("--grid", o.grid, "default or small");
    cross->add_option("--format", o.format)->check(CLI::IsMember(formats));
    cross->add_option("--threads", o.threads, "worker threads (0: hardware)");

    auto* eigen = app.add_subcommand("eigen", "diagonalize a fixture Hecke matrix");
    eigen->add_option("--fixture", o.fixture)->required();
    eigen->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* ratio = app.add_subcommand("ratio", "Lambda(f,chi,m1+1) / Lambda(f,chi,m2+1) for a fixture eigenform");
    ratio->add_option("--fixture", o.fixture)->required();
    ratio->add_option("--character", o.character)->required();
    ratio->add_option("--m1", o.m1)->required();
    ratio->add_option("--m2", o.m2)->required();
    ratio->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* numeric = app.add_subcommand("verify-numeric", "floating-point checks for Delta");
    numeric->add_option("--check", o.check, "all, lambda, petersson, twisted or trace");
    numeric->add_option("--truncation", o.truncation)->check(CLI::Range(50, 1000000));
    numeric->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* fixtures = app.add_subcommand("fixtures", "embedded fixture data");
    fixtures->add_flag("--dump", o.dump, "write the fixture file to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);
        err << msg.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (*theorem1) return cmd_theorem1(o, out);
        if (*trace) return cmd_trace(o, out);
        if (*cross) return cmd_crosscheck(o, out);
        if (*eigen) return cmd_eigen(o, out);
        if (*ratio) return cmd_ratio(o, out);
        if (*numeric) return cmd_verify_numeric(o, out);
        if (*fixtures) return cmd_fixtures(o, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace twistper::cli

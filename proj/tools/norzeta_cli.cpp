// Command-line front end: evaluate the series, emit exact tables, run the
// identity-verification suites, and benchmark the series against the
// Euler-Maclaurin reference.
//
// Exit codes: 0 ok, 1 usage, 2 non-convergence, 3 domain/pole error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "norzeta/dirichlet.hpp"
#include "norzeta/em_oracle.hpp"
#include "norzeta/exact_core.hpp"
#include "norzeta/gen_stirling.hpp"
#include "norzeta/series.hpp"
#include "norzeta/special.hpp"
#include "norzeta/stieltjes.hpp"
#include "norzeta/verify.hpp"

using namespace norzeta;
using nlohmann::json;

namespace {

enum class Format { plain, json_fmt, csv };

struct CliConfig {
    long precision_bits = 128;
    long max_terms = 10000;
    Format format = Format::plain;
    std::uint64_t seed = 1;
    std::string out_path;

    PrecisionContext ctx() const {
        return PrecisionContext(static_cast<mpfr_prec_t>(precision_bits), 64, max_terms, 3);
    }
};

std::ostream& output_stream(const CliConfig& cfg, std::ofstream& file) {
    if (cfg.out_path.empty()) return std::cout;
    file.open(cfg.out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    return file;
}

// complex literals: "1.5", "0.5+14.1i", "-2-3i", "1e-3+2.5e2i"
MPComplex parse_complex(const std::string& text, mpfr_prec_t prec) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw std::invalid_argument("empty numeric literal");
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // split at the last +/- that is not part of an exponent and not leading
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            char c = body[i];
            if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) return {MPReal(0L, prec), MPReal(body, prec)};  // pure imaginary
        std::string re = body.substr(0, split);
        std::string im = body.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return {MPReal(re, prec), MPReal(im, prec)};
    }
    return {MPReal(s, prec), MPReal(0L, prec)};
}

void emit_series(const SeriesEvaluation& ev, const CliConfig& cfg, std::ostream& os) {
    if (cfg.format == Format::json_fmt) {
        json j = {{"value", ev.value.str()},
                  {"precision_bits", cfg.precision_bits},
                  {"terms_used", ev.terms_used},
                  {"tail_estimate", ev.tail_estimate.str(6)},
                  {"converged", ev.converged}};
        os << j.dump() << "\n";
    } else if (cfg.format == Format::csv) {
        os << "value,precision_bits,terms_used,tail_estimate,converged\n";
        os << ev.value.str() << "," << cfg.precision_bits << "," << ev.terms_used << ","
           << ev.tail_estimate.str(6) << "," << (ev.converged ? "true" : "false") << "\n";
    } else {
        os << "value         = " << ev.value.str() << "\n";
        os << "terms_used    = " << ev.terms_used << "\n";
        os << "tail_estimate = " << ev.tail_estimate.str(6) << "\n";
        os << "converged     = " << (ev.converged ? "true" : "false") << "\n";
    }
}

void emit_value(const MPReal& v, const CliConfig& cfg, std::ostream& os) {
    SeriesEvaluation ev{MPComplex(v), 0, MPReal(0L, v.prec()), true};
    emit_series(ev, cfg, os);
}

int run_eval(const std::string& fn, const CliConfig& cfg, const std::optional<std::string>& s_arg,
             const std::optional<std::string>& a_arg, std::optional<long> n_arg,
             std::optional<int> variant, std::ostream& os) {
    PrecisionContext ctx = cfg.ctx();
    mpfr_prec_t wp = ctx.working();
    auto need_s = [&]() {
        if (!s_arg) throw std::invalid_argument("--s is required for " + fn);
        return parse_complex(*s_arg, wp);
    };
    auto need_a = [&]() {
        if (!a_arg) throw std::invalid_argument("--a is required for " + fn);
        return parse_complex(*a_arg, wp);
    };

    SeriesEvaluation ev;
    if (fn == "zeta") {
        ev = riemann_zeta(need_s(), ctx);
    } else if (fn == "hurwitz") {
        ev = hurwitz_zeta(need_s(), need_a(), ctx);
    } else if (fn == "hurwitz-alt") {
        ev = hurwitz_zeta_alt(need_s(), need_a(), ctx);
    } else if (fn == "power-gamma") {
        ev = power_gamma_series(need_s(), need_a(), ctx);
    } else if (fn == "polygamma") {
        if (!n_arg) throw std::invalid_argument("--n is required for polygamma");
        ev = polygamma_series(static_cast<int>(*n_arg), need_a(), ctx);
    } else if (fn == "digamma") {
        SeriesEvaluation base = digamma_series(need_a(), ctx);
        MPComplex a = parse_complex(*a_arg, wp);
        base.value += log(a);  // series carries psi(a) - ln a
        ev = base;
    } else if (fn == "loggamma") {
        ev = log_gamma_series(need_a(), ctx);
    } else if (fn == "logratio") {
        LogRatioVariant v = (variant && *variant == 2) ? LogRatioVariant::p_constant
                                                       : LogRatioVariant::inverse_factorial;
        ev = log_ratio_series(need_a(), ctx, v);
    } else if (fn == "beta") {
        ev = dirichlet_beta(need_s(), ctx);
    } else if (fn == "beta-odd") {
        if (!n_arg) throw std::invalid_argument("--n is required for beta-odd");
        emit_value(beta_odd_value(static_cast<unsigned>(*n_arg), ctx), cfg, os);
        return 0;
    } else if (fn == "oracle") {
        MPComplex s = need_s();
        MPComplex a = a_arg ? parse_complex(*a_arg, wp) : MPComplex(1L, wp);
        if (!a.is_real()) throw std::invalid_argument("oracle takes real a");
        MPComplex v = hurwitz_zeta_oracle(s, a.real(), ctx);
        emit_series({v, 0, ctx.eps_target(), true}, cfg, os);
        return 0;
    } else if (fn == "gamma0" || fn == "gamma1" || fn == "gamma2") {
        MPComplex a = need_a();
        if (!a.is_real()) throw std::invalid_argument("stieltjes functions take real a");
        if (fn == "gamma0") {
            emit_value(gamma0(a.real(), ctx), cfg, os);
            return 0;
        }
        StieltjesResult r = (fn == "gamma1") ? gamma1(a.real(), ctx) : gamma2(a.real(), ctx);
        emit_series({MPComplex(r.value), 0, r.tail_estimate, true}, cfg, os);
        return 0;
    } else if (fn == "euler-zeta3" || fn == "euler-zeta4") {
        if (!n_arg) throw std::invalid_argument("--n (term count) is required");
        EulerSumResult r = (fn == "euler-zeta3") ? euler_sum_zeta3(*n_arg, ctx) : euler_sum_zeta4(*n_arg, ctx);
        emit_series({MPComplex(r.value), r.terms, r.tail_estimate, true}, cfg, os);
        return 0;
    } else if (fn == "alpha" || fn == "alpha-prime") {
        if (!n_arg) throw std::invalid_argument("--n (the index k) is required");
        MPComplex s = need_s();
        MPComplex v = (fn == "alpha") ? alpha_coeff(static_cast<std::size_t>(*n_arg), s, ctx)
                                      : alpha_coeff_prime(static_cast<std::size_t>(*n_arg), s, ctx);
        emit_series({v, 0, ctx.eps_working(), true}, cfg, os);
        return 0;
    } else if (fn == "stirling-complex") {
        if (!n_arg) throw std::invalid_argument("--n (the index k) is required");
        MPComplex lam = need_a();
        MPComplex v = stirling1_complex(lam, static_cast<int>(*n_arg), ctx);
        emit_series({v, 0, ctx.eps_working(), true}, cfg, os);
        return 0;
    } else {
        throw std::invalid_argument("unknown function: " + fn);
    }
    emit_series(ev, cfg, os);
    return ev.converged ? 0 : 2;
}

int run_table(const std::string& kind, long n_max, const CliConfig& cfg, std::ostream& os) {
    ExactCore& core = exact_core();
    if (n_max < 0 || static_cast<std::size_t>(n_max) > core.table_limit())
        throw DomainError("table: n_max out of range (limit " + std::to_string(core.table_limit()) + ")");

    auto row_strings = [&](long n) -> std::vector<std::string> {
        std::vector<std::string> row;
        if (kind == "norlund") {
            for (const auto& c : core.norlund_poly(static_cast<std::size_t>(n)).coeffs()) row.push_back(to_string(c));
            if (row.empty()) row.push_back("0");
        } else if (kind == "bernoulli") {
            row.push_back(to_string(core.bernoulli_number(static_cast<std::size_t>(n))));
        } else if (kind == "norlund_numbers") {
            row.push_back(to_string(core.norlund_number(static_cast<std::size_t>(n))));
        } else if (kind == "p_constants") {
            if (n >= 2) row.push_back(to_string(core.p_constant(static_cast<std::size_t>(n))));
        } else if (kind == "stirling1") {
            for (long k = 0; k <= n; ++k) row.push_back(core.stirling1(static_cast<std::size_t>(n), static_cast<std::size_t>(k)).get_str());
        } else if (kind == "stirling2") {
            for (long k = 0; k <= n; ++k) row.push_back(core.stirling2(static_cast<std::size_t>(n), static_cast<std::size_t>(k)).get_str());
        } else {
            throw std::invalid_argument("unknown table kind: " + kind);
        }
        return row;
    };

    if (cfg.format == Format::json_fmt) {
        json j = json::array();
        for (long n = 0; n <= n_max; ++n) {
            json r = {{"n", n}, {"entries", row_strings(n)}};
            j.push_back(r);
        }
        os << j.dump() << "\n";
    } else if (cfg.format == Format::csv) {
        os << "n,entries\n";
        for (long n = 0; n <= n_max; ++n) {
            auto row = row_strings(n);
            os << n << ",\"";
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ";" : "") << row[i];
            os << "\"\n";
        }
    } else {
        for (long n = 0; n <= n_max; ++n) {
            auto row = row_strings(n);
            os << n << ": ";
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i];
            os << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite, const CliConfig& cfg, std::ostream& os) {
    PrecisionContext ctx = cfg.ctx();
    CheckList checks;
    if (suite == "exact")
        checks = verify_exact();
    else if (suite == "series")
        checks = verify_series(ctx, cfg.seed);
    else if (suite == "stieltjes")
        checks = verify_stieltjes(ctx);
    else if (suite == "appendixA")
        checks = verify_appendixA(ctx);
    else if (suite == "appendixB")
        checks = verify_appendixB(ctx, cfg.seed);
    else if (suite == "all")
        checks = verify_all(ctx, cfg.seed);
    else
        throw std::invalid_argument("unknown suite: " + suite);

    if (cfg.format == Format::json_fmt) {
        json j = json::array();
        for (const auto& c : checks)
            j.push_back({{"name", c.name},
                         {"pass", c.pass},
                         {"residual", c.residual},
                         {"tolerance", c.tolerance},
                         {"detail", c.detail}});
        os << j.dump() << "\n";
    } else if (cfg.format == Format::csv) {
        os << "name,pass,residual,tolerance,detail\n";
        for (const auto& c : checks)
            os << "\"" << c.name << "\"," << (c.pass ? "true" : "false") << "," << c.residual << ","
               << c.tolerance << ",\"" << c.detail << "\"\n";
    } else {
        for (const auto& c : checks) {
            os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  residual=" << c.residual
               << " tol=" << c.tolerance;
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << "\n";
        }
        std::size_t passed = 0;
        for (const auto& c : checks) passed += c.pass;
        os << passed << "/" << checks.size() << " checks passed\n";
    }
    return all_pass(checks) ? 0 : 2;
}

struct GridAxis {
    double lo = 0, hi = 0;
    long steps = 1;
};

GridAxis parse_axis(const std::string& spec) {
    // "lo:hi:steps"
    GridAxis ax;
    std::istringstream is(spec);
    std::string part;
    if (!std::getline(is, part, ':')) throw std::invalid_argument("bad axis: " + spec);
    ax.lo = std::stod(part);
    if (!std::getline(is, part, ':')) throw std::invalid_argument("bad axis: " + spec);
    ax.hi = std::stod(part);
    if (!std::getline(is, part, ':')) throw std::invalid_argument("bad axis: " + spec);
    ax.steps = std::stol(part);
    if (ax.steps < 0) throw std::invalid_argument("bad axis steps: " + spec);
    return ax;
}

int run_bench(const std::string& s_re_spec, const std::string& s_im_spec, const std::string& a_spec,
              const CliConfig& cfg, std::ostream& os) {
    GridAxis sre = parse_axis(s_re_spec), sim = parse_axis(s_im_spec), aax = parse_axis(a_spec);
    PrecisionContext ctx = cfg.ctx();
    mpfr_prec_t wp = ctx.working();

    struct Row {
        double sr, si, a;
        long terms = 0;
        double ms = 0;
        std::string err = "nan";
        bool converged = false;
    };
    std::vector<Row> rows;
    auto value_at = [](const GridAxis& ax, long i) {
        return ax.steps <= 1 ? ax.lo : ax.lo + (ax.hi - ax.lo) * static_cast<double>(i) / static_cast<double>(ax.steps - 1);
    };
    for (long i = 0; i < sre.steps; ++i)
        for (long j = 0; j < sim.steps; ++j)
            for (long k = 0; k < aax.steps; ++k) {
                Row r;
                r.sr = value_at(sre, i);
                r.si = value_at(sim, j);
                r.a = value_at(aax, k);
                if (r.sr == 1.0 && r.si == 0.0)
                    throw std::invalid_argument("bench: grid must exclude s = 1");
                rows.push_back(r);
            }

    for (auto& r : rows) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            SeriesEvaluation ev = hurwitz_zeta(MPComplex(r.sr, r.si, wp), MPComplex(r.a, 0.0, wp), ctx);
            MPComplex ref = hurwitz_zeta_oracle(MPComplex(r.sr, r.si, wp), MPReal(r.a, wp), ctx);
            MPReal scale = max(abs(ref), pow2(-static_cast<long>(ctx.target_precision), wp));
            r.err = (abs(ev.value - ref) / scale).str(4);
            r.terms = ev.terms_used;
            r.converged = ev.converged;
        } catch (const std::exception&) {
            r.converged = false;
        }
        auto t1 = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }

    os << "s_re,s_im,a,terms_used,time_ms,rel_error_vs_oracle,converged\n";
    for (const auto& r : rows)
        os << r.sr << "," << r.si << "," << r.a << "," << r.terms << "," << r.ms << "," << r.err << ","
           << (r.converged ? "true" : "false") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norlund-polynomial engine for Hurwitz/Riemann zeta series, Stieltjes constants and friends"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format_name = "plain";
    app.add_option("--prec", cfg.precision_bits, "target precision in bits (>= 24)")->capture_default_str();
    app.add_option("--max-terms", cfg.max_terms, "series term budget")->capture_default_str();
    app.add_option("--format", format_name, "output format: plain|json|csv")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized identity grids")->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");

    auto* eval = app.add_subcommand("eval", "evaluate a function");
    std::string fn;
    std::optional<std::string> s_arg, a_arg;
    std::optional<long> n_arg;
    std::optional<int> variant;
    eval->add_option("function", fn,
                     "one of: zeta hurwitz hurwitz-alt power-gamma polygamma digamma loggamma "
                     "logratio beta beta-odd oracle gamma0 gamma1 gamma2 euler-zeta3 euler-zeta4 "
                     "alpha alpha-prime stirling-complex")
        ->required();
    eval->add_option("--s", s_arg, "complex argument s, e.g. 2.5 or 0.5+14.1i");
    eval->add_option("--a", a_arg, "argument a / x / lambda");
    eval->add_option("--n", n_arg, "integer parameter (order, index, or term count)");
    eval->add_option("--variant", variant, "series variant where applicable (1 or 2)");

    auto* table = app.add_subcommand("table", "emit exact tables");
    std::string kind;
    long n_max = 10;
    table->add_option("kind", kind, "norlund|bernoulli|stirling1|stirling2|p_constants|norlund_numbers")
        ->required();
    table->add_option("--n-max", n_max, "largest index")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run identity-verification suites");
    std::string suite = "all";
    verify->add_option("suite", suite, "all|exact|series|stieltjes|appendixA|appendixB");

    auto* bench = app.add_subcommand("bench", "benchmark the series against the oracle on a grid");
    std::string s_re_spec = "-5:5:11", s_im_spec = "0:0:1", a_spec = "1:1:1";
    bench->add_option("--s-re", s_re_spec, "grid axis lo:hi:steps")->capture_default_str();
    bench->add_option("--s-im", s_im_spec, "grid axis lo:hi:steps")->capture_default_str();
    bench->add_option("--a", a_spec, "grid axis lo:hi:steps")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (format_name == "plain")
        cfg.format = Format::plain;
    else if (format_name == "json")
        cfg.format = Format::json_fmt;
    else if (format_name == "csv")
        cfg.format = Format::csv;
    else {
        std::cerr << "unknown format: " << format_name << "\n";
        return 1;
    }

    try {
        cfg.ctx().validate();
        std::ofstream file;
        std::ostream& os = output_stream(cfg, file);
        if (eval->parsed()) return run_eval(fn, cfg, s_arg, a_arg, n_arg, variant, os);
        if (table->parsed()) return run_table(kind, n_max, cfg, os);
        if (verify->parsed()) return run_verify(suite, cfg, os);
        if (bench->parsed()) return run_bench(s_re_spec, s_im_spec, a_spec, cfg, os);
    } catch (const PoleError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

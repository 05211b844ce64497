#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "besselhr/asympt.hpp"
#include "besselhr/coeffs.hpp"
#include "besselhr/kernel.hpp"
#include "besselhr/mellinbarnes.hpp"
#include "besselhr/parallel.hpp"
#include "besselhr/series.hpp"
#include "cli_util.hpp"
#include "suites.hpp"

using namespace besselhr;
using namespace besselhr::cli;
using nlohmann::json;

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, numeric = 3 };

int exit_code(const Error& e)
{
    switch (e.kind()) {
    case Error::Kind::overflow:
    case Error::Kind::nonconvergence: return numeric;
    default: return usage;
    }
}

// A column holds numbers, strings or complex values; complex columns become two CSV fields.
struct Table {
    std::vector<std::pair<std::string, bool>> columns;  // name, complex
    std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return fmt(v.get<double>());
    if (v.is_null()) return "nan";
    return v.dump();
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
json cnum(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()) ? cplx_json(v) : json(nullptr); }

void emit(const json& header, const Table& t, const std::string& format, const std::string& out)
{
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o = json::object();
            for (std::size_t k = 0; k < t.columns.size(); ++k) o[t.columns[k].first] = r[k];
            rows.push_back(o);
        }
        json cols = json::array();
        for (const auto& c : t.columns) cols.push_back(c.first);
        os << json{{"header", header}, {"columns", cols}, {"rows", rows}}.dump(1) << "\n";
    } else {
        os << "# " << header.dump() << "\n";
        bool first = true;
        for (const auto& [name, is_c] : t.columns) {
            os << (first ? "" : ",") << (is_c ? name + "_re," + name + "_im" : name);
            first = false;
        }
        os << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t k = 0; k < r.size(); ++k) {
                if (k) os << ",";
                if (t.columns[k].second)
                    os << (r[k].is_null() ? "nan,nan" : csv_cell(r[k]["re"]) + "," + csv_cell(r[k]["im"]));
                else
                    os << csv_cell(r[k]);
            }
            os << "\n";
        }
    }
    if (out.empty() || out == "-") {
        std::cout << os.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw Error(Error::Kind::domain, "cannot open " + out);
        f << os.str();
    }
}

SpectralIndex read_index(int n, const std::string& lambda)
{
    if (lambda.empty()) {
        if (n <= 0) throw Error(Error::Kind::domain, "--n or --lambda is required");
        return SpectralIndex::prototype(n);
    }
    auto l = parse_complex_list(lambda);
    if (n > 0 && static_cast<int>(l.size()) != n)
        throw Error(Error::Kind::domain, "--lambda has " + std::to_string(l.size()) + " components but --n is " +
                                             std::to_string(n));
    return SpectralIndex(l);
}

std::vector<double> read_grid(const std::string& x, const std::string& grid)
{
    if (!x.empty() && !grid.empty()) throw Error(Error::Kind::domain, "give only one of --x and --x-grid");
    if (x.empty() && grid.empty()) throw Error(Error::Kind::domain, "--x or --x-grid is required");
    return parse_grid(x.empty() ? grid : x);
}

json lambda_json(const SpectralIndex& l)
{
    json a = json::array();
    for (int k = 0; k < l.rank(); ++k) a.push_back(cplx_json(l[k]));
    return a;
}

struct PointResult {
    cplx value{NAN, NAN};
    double err = NAN;
    std::string method;
    double cancellation = NAN;
    std::string error;
    int error_kind = ok;
};

PointResult eval_point(const SurfacePoint& z, const SignVector& s, const SpectralIndex& lam, const std::string& method,
                       double tol)
{
    PointResult r;
    try {
        auto series = [&] {
            SeriesEval e = j_function(z, s, lam, tol);
            r = {e.value, e.error_estimate, "series", e.cancellation, "", ok};
        };
        auto asympt = [&] {
            AsymptoticEval e = j_varsigma_asymptotic(z, s, lam);
            r = {e.value, e.error_estimate, "asympt", 1.0, "", ok};
        };
        if (method == "series") {
            series();
        } else if (method == "asympt") {
            asympt();
        } else if (method == "mb") {
            if (z.argument != 0.0) throw Error(Error::Kind::domain, "--method mb needs --arg 0");
            MBEval e = mb_eval(z.modulus(), s, lam, MBOptions{tol});
            if (!e.converged) throw Error(Error::Kind::nonconvergence, "contour quadrature did not converge");
            r = {e.value, e.error_estimate, "mb", 1.0, "", ok};
        } else {
            std::optional<PointResult> a;
            if (z.modulus() > validity_floor(lam)) {
                try {
                    asympt();
                    a = r;
                    if (r.err <= tol * std::abs(r.value)) return r;
                } catch (const Error&) {
                }
            }
            try {
                series();
                if (a && a->err < r.err) r = *a;
            } catch (const Error& e) {
                if (!a || e.kind() != Error::Kind::overflow) throw;
                r = *a;
            }
        }
        if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
            throw Error(Error::Kind::overflow, "non-finite value");
    } catch (const Error& e) {
        r = PointResult{};
        r.method = method;
        r.error = e.what();
        r.error_kind = exit_code(e);
    }
    return r;
}

int worst_code(int a, int b) { return std::max(a, b); }

// ---- commands

struct EvalArgs {
    int n = 0;
    std::string signs, lambda, x, grid, method = "auto", format = "csv", out;
    double arg = 0.0, tol = 1e-12;
};

int cmd_eval(const EvalArgs& a)
{
    const SpectralIndex lam = read_index(a.n, a.lambda);
    const int n = lam.rank();
    std::vector<SignVector> signs;
    if (a.signs.empty() || a.signs == "all")
        signs = SignVector::all(n);
    else
        signs.push_back(SignVector::parse(a.signs));
    for (const auto& s : signs)
        if (s.rank() != n) throw Error(Error::Kind::domain, "--signs has the wrong length");
    if (a.method != "auto" && a.method != "series" && a.method != "mb" && a.method != "asympt")
        throw Error(Error::Kind::domain, "unknown method '" + a.method + "'");
    const auto xs = read_grid(a.x, a.grid);
    for (double x : xs)
        if (!(x > 0.0)) throw Error(Error::Kind::domain, "x must be positive");

    json config = {{"n", n}, {"signs", a.signs.empty() ? "all" : a.signs}, {"lambda", lambda_json(lam)},
                   {"x", xs}, {"arg", a.arg}, {"method", a.method}, {"tol", a.tol}};
    std::vector<PointResult> res(xs.size() * signs.size());
    parallel_for(res.size(), [&](std::size_t i) {
        const double x = xs[i / signs.size()];
        res[i] = eval_point(SurfacePoint::polar(x, a.arg), signs[i % signs.size()], lam, a.method, a.tol);
    });
    Table t{{{"x", false}, {"signs", false}, {"value", true}, {"err", false}, {"method", false},
             {"cancellation", false}, {"error", false}},
            {}};
    int code = ok;
    for (std::size_t i = 0; i < res.size(); ++i) {
        const auto& r = res[i];
        t.rows.push_back({xs[i / signs.size()], signs[i % signs.size()].str(), cnum(r.value), num(r.err), r.method,
                          num(r.cancellation), r.error});
        code = worst_code(code, r.error_kind);
    }
    emit(make_header("eval", config), t, a.format, a.out);
    return code;
}

struct CoeffsArgs {
    int n = 0, terms = 10;
    std::string lambda, xi = "1", table = "b", format = "csv", out;
};

int cmd_coeffs(const CoeffsArgs& a)
{
    if (a.terms < 0) throw Error(Error::Kind::domain, "--terms must be non-negative");
    Table t;
    json config = {{"table", a.table}, {"terms", a.terms}};
    if (a.table == "a") {
        const ATable at = build_a_table(a.terms, a.terms);
        t.columns = {{"j", false}, {"m", false}, {"A", false}};
        for (int j = 0; j <= a.terms; ++j)
            for (int m = 0; m <= a.terms; ++m) t.rows.push_back({j, m, at(j, m).str()});
    } else {
        const SpectralIndex lam = read_index(a.n, a.lambda);
        const int n = lam.rank();
        config["n"] = n;
        config["lambda"] = lambda_json(lam);
        if (a.table == "b") {
            const RootOfUnity xi = parse_xi(a.xi, n);
            if (a.terms > b_max_terms)
                throw Error(Error::Kind::domain, "--terms is capped at " + std::to_string(b_max_terms));
            config["xi"] = {{"n", xi.n}, {"index", xi.index}};
            const BTable b = build_b_table(lam, xi, a.terms);
            t.columns = {{"m", false}, {"B", true}};
            for (int m = 0; m <= a.terms; ++m) t.rows.push_back({m, cnum(b.B[static_cast<std::size_t>(m)])});
        } else if (a.table == "v") {
            const UVTables uv = build_uv_tables(n);
            const BesselEqCoeffs v = bessel_eq_coeffs(lam);
            t.columns = {{"j", false}, {"V", true}, {"polynomial", false}};
            for (int j = 0; j <= n; ++j)
                t.rows.push_back({j, cnum(v.V[static_cast<std::size_t>(j)]),
                                  j < static_cast<int>(uv.V.size()) ? uv.V[0][static_cast<std::size_t>(j)].str() : ""});
        } else {
            throw Error(Error::Kind::domain, "unknown table '" + a.table + "' (a, b or v)");
        }
    }
    emit(make_header("coeffs", config), t, a.format, a.out);
    return ok;
}

struct VerifyArgs {
    std::string suite, lambda, out;
    int n = 0, mmax = 8;
    unsigned long long seed = 20240611ULL;
    bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a)
{
    SuiteConfig cfg;
    cfg.n = a.n;
    cfg.mmax = a.mmax;
    cfg.seed = a.seed;
    cfg.timing = !a.no_timing;
    if (!a.lambda.empty()) cfg.lambda = parse_complex_list(a.lambda);
    std::vector<std::string> names;
    if (a.suite == "all")
        names = suite_names();
    else
        names.push_back(a.suite);
    json config = {{"suite", a.suite}, {"n", a.n}, {"mmax", a.mmax}, {"seed", a.seed}, {"timing", cfg.timing}};
    if (cfg.lambda) {
        json l = json::array();
        for (cplx v : *cfg.lambda) l.push_back(cplx_json(v));
        config["lambda"] = l;
    }
    json reports = json::array();
    bool pass = true;
    for (const auto& s : names) {
        SuiteReport r = run_suite(s, cfg);
        pass = pass && r.pass();
        reports.push_back(r.to_json());
    }
    json doc = {{"header", make_header("verify", config)}, {"status", pass ? "pass" : "fail"}, {"suites", reports}};
    if (a.out.empty() || a.out == "-") {
        std::cout << doc.dump(1) << "\n";
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw Error(Error::Kind::domain, "cannot open " + a.out);
        f << doc.dump(1) << "\n";
    }
    return pass ? ok : verification_failed;
}

struct CompareArgs {
    int n = 0;
    std::string signs, lambda, methods = "series,mb,asympt", grid = "lin:20:100:9", format = "csv", out;
    double tol = 1e-12;
};

int cmd_compare(const CompareArgs& a)
{
    const SpectralIndex lam = read_index(a.n, a.lambda);
    const int n = lam.rank();
    std::vector<std::string> methods;
    {
        std::stringstream ss(a.methods);
        std::string m;
        while (std::getline(ss, m, ','))
            if (!m.empty()) methods.push_back(m);
    }
    if (methods.size() < 2) throw Error(Error::Kind::domain, "--methods needs at least two entries");
    for (const auto& m : methods)
        if (m != "series" && m != "mb" && m != "asympt") throw Error(Error::Kind::domain, "unknown method '" + m + "'");
    std::vector<SignVector> signs;
    if (a.signs.empty() || a.signs == "all")
        signs = SignVector::all(n);
    else
        signs.push_back(SignVector::parse(a.signs));
    const auto xs = parse_grid(a.grid);
    const std::size_t per = signs.size() * methods.size();
    std::vector<PointResult> res(xs.size() * per);
    parallel_for(res.size(), [&](std::size_t i) {
        const double x = xs[i / per];
        const auto& s = signs[(i % per) / methods.size()];
        res[i] = eval_point(SurfacePoint::from_real(x), s, lam, methods[i % methods.size()], a.tol);
    });

    Table t;
    t.columns = {{"x", false}, {"signs", false}};
    for (const auto& m : methods) {
        t.columns.push_back({m, true});
        t.columns.push_back({m + "_err", false});
    }
    t.columns.push_back({"max_rel_diff", false});
    t.columns.push_back({"allowed", false});
    t.columns.push_back({"status", false});
    int code = ok;
    for (std::size_t p = 0; p < xs.size() * signs.size(); ++p) {
        std::vector<json> row = {xs[p / signs.size()], signs[p % signs.size()].str()};
        double worst = 0.0, worst_ratio = 0.0, allowed_at_worst = 0.0;
        bool failed = false;
        for (std::size_t m = 0; m < methods.size(); ++m) {
            const auto& r = res[p * methods.size() + m];
            row.push_back(cnum(r.value));
            row.push_back(num(r.err));
            if (!r.error.empty()) failed = true;
        }
        for (std::size_t i = 0; i < methods.size(); ++i)
            for (std::size_t j = i + 1; j < methods.size(); ++j) {
                const auto &u = res[p * methods.size() + i], &v = res[p * methods.size() + j];
                const double d = std::abs(u.value - v.value) / std::abs(v.value);
                const double allowed = std::max(1e-7, 2.0 * (u.err + v.err) / std::abs(v.value));
                if (!(d / allowed <= worst_ratio)) {
                    worst_ratio = d / allowed;
                    worst = d;
                    allowed_at_worst = allowed;
                }
            }
        const bool agree = !failed && worst_ratio <= 1.0;
        row.push_back(num(worst));
        row.push_back(num(allowed_at_worst));
        row.push_back(failed ? "error" : agree ? "agree" : "disagree");
        if (failed) code = worst_code(code, numeric);
        else if (!agree) code = worst_code(code, verification_failed);
        t.rows.push_back(row);
    }
    json config = {{"n", n}, {"signs", a.signs.empty() ? "all" : a.signs}, {"lambda", lambda_json(lam)},
                   {"methods", methods}, {"x", xs}, {"tol", a.tol}};
    emit(make_header("oracle compare", config), t, a.format, a.out);
    return code;
}

struct KernelArgs {
    int n = 0, asymptotic_terms = 0;
    std::string lambda, delta, x, grid, method = "auto", format = "csv", out;
    double tol = 1e-12;
};

KernelIndex read_kernel_index(int n, const std::string& lambda, const std::string& delta)
{
    KernelIndex idx;
    idx.lambda = read_index(n, lambda);
    idx.delta = delta.empty() ? std::vector<int>(static_cast<std::size_t>(idx.lambda.rank()), 0) : parse_int_list(delta);
    idx.validate();
    return idx;
}

json kernel_json(const KernelIndex& idx)
{
    return {{"n", idx.rank()}, {"lambda", lambda_json(idx.lambda)}, {"delta", idx.delta}};
}

int cmd_kernel(const KernelArgs& a)
{
    const KernelIndex idx = read_kernel_index(a.n, a.lambda, a.delta);
    const auto xs = read_grid(a.x, a.grid);
    json config = kernel_json(idx);
    config["x"] = xs;
    config["tol"] = a.tol;
    Table t;
    int code = ok;
    if (a.asymptotic_terms > 0) {
        config["asymptotic_terms"] = a.asymptotic_terms;
        t.columns = {{"x", false},           {"main_plus", true},        {"remainder_plus", false},
                     {"main_minus", true},   {"remainder_minus", false}, {"error", false}};
        std::vector<std::vector<json>> rows(xs.size());
        std::vector<int> codes(xs.size(), ok);
        parallel_for(xs.size(), [&](std::size_t i) {
            try {
                if (!(xs[i] > 0.0)) throw Error(Error::Kind::domain, "x must be positive");
                const KernelAsymptotics k = kernel_asymptotics(xs[i], idx, a.asymptotic_terms);
                rows[i] = {xs[i], cnum(k.main_plus), num(k.remainder_plus), cnum(k.main_minus), num(k.remainder_minus), ""};
            } catch (const Error& e) {
                rows[i] = {xs[i], nullptr, nullptr, nullptr, nullptr, e.what()};
                codes[i] = exit_code(e);
            }
        });
        t.rows = rows;
        for (int c : codes) code = worst_code(code, c);
    } else {
        const KernelMethod m = parse_kernel_method(a.method);
        config["method"] = to_string(m);
        t.columns = {{"x", false},      {"value", true},        {"err", false},
                     {"method", false}, {"cancellation", false}, {"error", false}};
        std::vector<std::vector<json>> rows(xs.size());
        std::vector<int> codes(xs.size(), ok);
        parallel_for(xs.size(), [&](std::size_t i) {
            try {
                const KernelEval k = bessel_kernel(xs[i], idx, m, a.tol);
                rows[i] = {xs[i], cnum(k.value), num(k.error_estimate), k.method, num(k.cancellation), ""};
            } catch (const Error& e) {
                rows[i] = {xs[i], nullptr, nullptr, to_string(m), nullptr, e.what()};
                codes[i] = exit_code(e);
            }
        });
        t.rows = rows;
        for (int c : codes) code = worst_code(code, c);
    }
    emit(make_header("kernel", config), t, a.format, a.out);
    return code;
}

struct TransformArgs {
    int n = 0;
    std::string weight = "gaussian-log:eta=0", lambda, delta, x, grid, s, method = "auto", format = "csv", out;
    double tol = 1e-10, fe_tol = 1e-6;
};

int cmd_transform(const TransformArgs& a)
{
    const KernelIndex idx = read_kernel_index(a.n, a.lambda, a.delta);
    const WeightFunction w = WeightFunction::parse(a.weight);
    TransformOptions opt;
    opt.tol = a.tol;
    opt.method = parse_kernel_method(a.method);
    json config = kernel_json(idx);
    config["weight"] = w.str();
    config["tol"] = a.tol;
    config["method"] = to_string(opt.method);
    if (!a.s.empty()) {
        const auto s = parse_complex_list(a.s);
        config["s"] = json::array();
        for (cplx v : s) config["s"].push_back(cplx_json(v));
        config["fe_tol"] = a.fe_tol;
        const FunctionalEquationReport rep = functional_equation_check(w, idx, s, opt);
        json pts = json::array();
        for (const auto& p : rep.points)
            pts.push_back({{"s", cplx_json(p.s)},
                           {"lhs", cnum(p.lhs)},
                           {"rhs", cnum(p.rhs)},
                           {"rel_error", num(p.rel_error)},
                           {"error_estimate", num(p.error_estimate)}});
        const bool pass = rep.max_rel_error <= a.fe_tol;
        json doc = {{"header", make_header("transform", config)},
                    {"status", pass ? "pass" : "fail"},
                    {"u_range", {rep.u_min, rep.u_max}},
                    {"kernel_evaluations", rep.kernel_evaluations},
                    {"max_rel_error", num(rep.max_rel_error)},
                    {"points", pts}};
        if (a.out.empty() || a.out == "-") {
            std::cout << doc.dump(1) << "\n";
        } else {
            std::ofstream f(a.out, std::ios::binary);
            if (!f) throw Error(Error::Kind::domain, "cannot open " + a.out);
            f << doc.dump(1) << "\n";
        }
        return pass ? ok : verification_failed;
    }
    const auto xs = read_grid(a.x, a.grid);
    config["x"] = xs;
    const auto pts = hankel_transform(w, idx, xs, opt);
    Table t{{{"x", false}, {"value", true}, {"err", false}}, {}};
    for (const auto& p : pts) t.rows.push_back({p.x, cnum(p.value), num(p.error_estimate)});
    emit(make_header("transform", config), t, a.format, a.out);
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fundamental Bessel functions of arbitrary rank"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);
    int code = ok;

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate J(x; signs, lambda)");
    eval->add_option("--n", ev.n, "rank");
    eval->add_option("--signs", ev.signs, "sign vector such as ++- (default: all)");
    eval->add_option("--lambda", ev.lambda, "comma-separated components, a+bi literals");
    eval->add_option("--x", ev.x, "point or comma-separated points");
    eval->add_option("--x-grid", ev.grid, "log:a:b:N, lin:a:b:N or a list");
    eval->add_option("--arg", ev.arg, "argument of z on the log surface");
    eval->add_option("--method", ev.method, "auto, series, mb or asympt");
    eval->add_option("--tol", ev.tol, "relative tolerance");
    eval->add_option("--format", ev.format)->check(CLI::IsMember({"csv", "json"}));
    eval->add_option("--out", ev.out, "output file (default stdout)");
    eval->callback([&] { code = cmd_eval(ev); });

    CoeffsArgs co;
    auto* coeffs = app.add_subcommand("coeffs", "coefficient tables");
    coeffs->add_option("--n", co.n);
    coeffs->add_option("--lambda", co.lambda, "default: the prototype index");
    coeffs->add_option("--xi", co.xi, "1, -1, i, -i or k/2n for e(k/2n)");
    coeffs->add_option("--terms", co.terms);
    coeffs->add_option("--table", co.table, "b: B_m(lambda; xi), v: Bessel equation, a: A_{j,m}")
        ->check(CLI::IsMember({"a", "b", "v"}));
    coeffs->add_option("--format", co.format)->check(CLI::IsMember({"csv", "json"}));
    coeffs->add_option("--out", co.out);
    coeffs->callback([&] { code = cmd_coeffs(co); });

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", ve.suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--n", ve.n);
    verify->add_option("--mmax", ve.mmax);
    verify->add_option("--seed", ve.seed);
    verify->add_option("--lambda", ve.lambda);
    verify->add_flag("--no-timing", ve.no_timing, "omit runtimes so reports are byte-reproducible");
    verify->add_option("--out", ve.out);
    verify->callback([&] { code = cmd_verify(ve); });

    CompareArgs cm;
    auto* oracle = app.add_subcommand("oracle", "cross-method comparisons");
    oracle->require_subcommand(1);
    auto* compare = oracle->add_subcommand("compare", "evaluate with several methods and report discrepancies");
    compare->add_option("--n", cm.n);
    compare->add_option("--signs", cm.signs);
    compare->add_option("--lambda", cm.lambda);
    compare->add_option("--methods", cm.methods);
    compare->add_option("--grid", cm.grid);
    compare->add_option("--tol", cm.tol);
    compare->add_option("--format", cm.format)->check(CLI::IsMember({"csv", "json"}));
    compare->add_option("--out", cm.out);
    compare->callback([&] { code = cmd_compare(cm); });

    KernelArgs ke;
    auto* kernel = app.add_subcommand("kernel", "Bessel kernel J_(lambda, delta)(x)");
    kernel->add_option("--n", ke.n);
    kernel->add_option("--lambda", ke.lambda);
    kernel->add_option("--delta", ke.delta, "parities, comma-separated");
    kernel->add_option("--x", ke.x);
    kernel->add_option("--x-grid", ke.grid);
    kernel->add_option("--method", ke.method);
    kernel->add_option("--tol", ke.tol);
    kernel->add_option("--asymptotic-terms", ke.asymptotic_terms, "split J(+-x^n) into main term and remainder");
    kernel->add_option("--format", ke.format)->check(CLI::IsMember({"csv", "json"}));
    kernel->add_option("--out", ke.out);
    kernel->callback([&] { code = cmd_kernel(ke); });

    TransformArgs tr;
    auto* transform = app.add_subcommand("transform", "Hankel transform of a weight");
    transform->add_option("--n", tr.n);
    transform->add_option("--lambda", tr.lambda);
    transform->add_option("--delta", tr.delta);
    transform->add_option("--weight", tr.weight, "gaussian-log:eta=0,mu=0,width=0.5");
    transform->add_option("--x", tr.x);
    transform->add_option("--x-grid", tr.grid);
    transform->add_option("--s", tr.s, "functional-equation report at these points");
    transform->add_option("--fe-tol", tr.fe_tol);
    transform->add_option("--method", tr.method);
    transform->add_option("--tol", tr.tol);
    transform->add_option("--format", tr.format)->check(CLI::IsMember({"csv", "json"}));
    transform->add_option("--out", tr.out);
    transform->callback([&] { code = cmd_transform(tr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? ok : usage;
    } catch (const Error& e) {
        std::cerr << "besselhr: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "besselhr: " << e.what() << "\n";
        return usage;
    }
    return code;
}

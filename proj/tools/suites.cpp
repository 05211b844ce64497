#include "suites.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "besselhr/asympt.hpp"
#include "besselhr/coeffs.hpp"
#include "besselhr/kernel.hpp"
#include "besselhr/mellinbarnes.hpp"
#include "besselhr/series.hpp"
#include "cli_util.hpp"

namespace besselhr::cli {

namespace {

using steady = std::chrono::steady_clock;
constexpr double inf = std::numeric_limits<double>::infinity();

double rel(cplx a, cplx b)
{
    const double d = std::abs(a - b);
    const double s = std::abs(b);
    return s > 0.0 ? d / s : d;
}

// Runs body, which returns the largest deviation; a thrown Error fails the check.
Check run_check(const std::string& name, double tol, const std::function<double(Check&)>& body)
{
    Check c;
    c.name = name;
    c.tolerance = tol;
    const auto t0 = steady::now();
    try {
        c.max_deviation = body(c);
        c.pass = c.pass && c.max_deviation <= tol;
    } catch (const std::exception& e) {
        c.pass = false;
        c.max_deviation = inf;
        c.detail = e.what();
    }
    c.runtime_s = std::chrono::duration<double>(steady::now() - t0).count();
    return c;
}

std::vector<double> lin(double a, double b, int n)
{
    std::vector<double> g;
    for (int k = 0; k < n; ++k) g.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
    return g;
}

SpectralIndex random_index(std::mt19937_64& rng, int n, double scale = 0.5)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<cplx> l;
    for (int k = 0; k < n; ++k) l.push_back({u(rng), u(rng)});
    return SpectralIndex(l);
}

SpectralIndex default_index(const SuiteConfig& cfg, int n)
{
    if (cfg.lambda && static_cast<int>(cfg.lambda->size()) == n) return SpectralIndex(*cfg.lambda);
    if (n == 3) return SpectralIndex({0.3, -0.1, -0.2});
    std::vector<cplx> l;
    for (int k = 0; k < n; ++k) l.push_back({0.37 * k * k - 0.2 * k, 0.11 * k});
    return SpectralIndex(l);
}

// ---- suites

std::vector<Check> suite_coeffs(const SuiteConfig& cfg)
{
    const int n_exact = cfg.n > 0 ? cfg.n : 6;
    std::vector<Check> out;
    out.push_back(run_check("A recurrence equals closed form, j,m <= 20", 0.0, [](Check& c) {
        ACheck r = verify_a_closed_form(build_a_table(20, 20));
        if (!r.ok) c.detail = "first mismatch at j=" + std::to_string(r.bad_j) + " m=" + std::to_string(r.bad_m);
        return r.ok ? 0.0 : 1.0;
    }));
    out.push_back(run_check("UV orthogonality exact, n <= " + std::to_string(n_exact), 0.0, [&](Check& c) {
        for (int n = 1; n <= n_exact; ++n)
            if (!uv_orthogonal_exact(build_uv_tables(n))) {
                c.detail = "fails at n=" + std::to_string(n);
                return 1.0;
            }
        return 0.0;
    }));
    out.push_back(run_check("UV orthogonality numeric, n <= 8, 100 random indices", 1e-10, [&](Check&) {
        std::mt19937_64 rng(cfg.seed);
        double worst = 0.0;
        for (int n = 1; n <= 8; ++n)
            for (int k = 0; k < 100; ++k)
                worst = std::max(worst, uv_orthogonality_residual(uv_numeric(big_lambda(random_index(rng, n)))));
        return worst;
    }));
    out.push_back(run_check("Bessel equation annihilates x^{-3 lambda_l}, n = 3", 1e-13, [](Check&) {
        SpectralIndex lam({0.3, -0.1, -0.2});
        BesselEqCoeffs v = bessel_eq_coeffs(lam);
        double worst = 0.0;
        for (int l = 0; l < 3; ++l) {
            cplx s = 0.0;
            double a = 0.0;
            for (int j = 0; j <= 3; ++j) {
                cplx t = v.V[static_cast<std::size_t>(j)] * falling(-3.0 * lam[l], j);
                s += t;
                a += std::abs(t);
            }
            worst = std::max(worst, std::abs(s) / a);
        }
        return worst;
    }));
    return out;
}

std::vector<Check> suite_rank2(const SuiteConfig&)
{
    std::vector<Check> out;
    for (double lam : {0.3, 0.15, -0.2}) {
        out.push_back(run_check("rank 2 Hankel and K forms, lambda = " + fmt(lam), 1e-9, [lam](Check&) {
            using boost::math::cyl_bessel_j;
            using boost::math::cyl_bessel_k;
            using boost::math::cyl_neumann;
            const SpectralIndex idx({lam, -lam});
            const double nu = 2 * lam;
            const cplx I(0, 1);
            double worst = 0.0;
            for (double x : lin(0.5, 20.0, 40)) {
                const double J = cyl_bessel_j(nu, 2 * x), Y = cyl_neumann(nu, 2 * x), K = cyl_bessel_k(nu, 2 * x);
                const cplx h1 = pi * I * std::exp(pi * I * lam) * (J + I * Y);
                const cplx h2 = -pi * I * std::exp(-pi * I * lam) * (J - I * Y);
                for (const auto& s : SignVector::all(2)) {
                    const cplx ref = s[0] == s[1] ? (s[0] > 0 ? h1 : h2) : 2.0 * std::exp(-double(s[0]) * pi * I * lam) * K;
                    worst = std::max(worst, rel(j_function(SurfacePoint::from_real(x), s, idx).value, ref));
                }
            }
            return worst;
        }));
    }
    out.push_back(run_check("rank 2 K form by Mellin-Barnes", 1e-9, [](Check&) {
        const double lam = 0.3;
        const SpectralIndex idx({lam, -lam});
        double worst = 0.0;
        for (double x : {0.5, 2.0, 7.0, 15.0}) {
            const double K = boost::math::cyl_bessel_k(2 * lam, 2 * x);
            worst = std::max(worst, rel(mb_eval(x, SignVector::parse("+-"), idx).value,
                                        2.0 * std::exp(cplx(0, -pi * lam)) * K));
            worst = std::max(worst, rel(mb_eval(x, SignVector::parse("-+"), idx).value,
                                        2.0 * std::exp(cplx(0, pi * lam)) * K));
        }
        return worst;
    }));
    return out;
}

std::vector<Check> suite_special(const SuiteConfig&)
{
    std::vector<Check> out;
    const SpectralIndex zero({0.0});
    out.push_back(run_check("rank 1 series equals exp(+-ix), x in [0.1, 50]", 1e-10, [&](Check&) {
        double worst = 0.0;
        for (double x : lin(0.1, 50.0, 50))
            for (int s : {1, -1})
                worst = std::max(worst, std::abs(j_function(SurfacePoint::from_real(x), SignVector({s}), zero).value -
                                                 std::exp(cplx(0, s * x))));
        return worst;
    }));
    out.push_back(run_check("rank 1 Mellin-Barnes equals exp(+-ix), x in [0.1, 50]", 1e-10, [&](Check&) {
        double worst = 0.0;
        for (double x : lin(0.1, 50.0, 50))
            for (int s : {1, -1})
                worst = std::max(worst, std::abs(mb_eval(x, SignVector({s}), zero).value - std::exp(cplx(0, s * x))));
        return worst;
    }));
    out.push_back(run_check("prototype index closed form, n = 3, 4, 5", 1e-8, [](Check&) {
        double worst = 0.0;
        for (int n = 3; n <= 5; ++n) {
            const SpectralIndex p = SpectralIndex::prototype(n);
            for (const auto& s : SignVector::all(n))
                for (double x : lin(1.0, 10.0, 10))
                    worst = std::max(worst,
                                     rel(j_function(SurfacePoint::from_real(x), s, p).value, prototype_closed_form(x, s)));
        }
        return worst;
    }));
    out.push_back(run_check("first kind, n = 2, equals J_{2 lambda}(2x)", 1e-12, [](Check&) {
        double worst = 0.0;
        for (double lam : {0.3, 0.85})
            for (double x : lin(0.2, 8.0, 12)) {
                const cplx v = first_kind(SurfacePoint::from_real(x), 1, SpectralIndex({lam, -lam}), 2).value;
                worst = std::max(worst, rel(v, boost::math::cyl_bessel_j(2 * lam, 2 * x)));
            }
        return worst;
    }));
    out.push_back(run_check("Maass-type kernel, n = 2, lambda = 0.3", 1e-9, [](Check&) {
        // t = -0.3i in the Maass parametrization lambda = it
        const double lam = 0.3, c = std::cos(pi * lam);
        const KernelIndex idx{SpectralIndex({lam, -lam}), {0, 0}};
        double worst = 0.0;
        for (double x : {0.3, 1.0, 4.0, 9.0}) {
            const double a = 4 * pi * std::sqrt(x);
            const double plus = -pi / c * (boost::math::cyl_neumann(2 * lam, a) + boost::math::cyl_neumann(-2 * lam, a));
            const double minus = 4 * c * boost::math::cyl_bessel_k(2 * lam, a);
            worst = std::max(worst, rel(bessel_kernel(x, idx).value, plus));
            worst = std::max(worst, rel(bessel_kernel(-x, idx).value, minus));
        }
        return worst;
    }));
    out.push_back(run_check("holomorphic kernel, n = 2, k = 12", 1e-9, [](Check& c) {
        const int k = 12;
        const KernelIndex idx{SpectralIndex({0.5 * (k - 1), -0.5 * (k - 1)}), {k % 2, 0}};
        double worst = 0.0;
        for (double x : {0.5, 2.0}) {
            const double ref = 2 * pi * boost::math::cyl_bessel_j(k - 1, 4 * pi * std::sqrt(x));  // i^12 = 1
            const KernelEval p = bessel_kernel(x, idx), m = bessel_kernel(-x, idx);
            worst = std::max(worst, rel(p.value, ref));
            worst = std::max(worst, std::abs(m.value) / std::abs(ref));
            c.detail = "cancellation on the negative side up to " + fmt(m.cancellation);
        }
        return worst;
    }));
    return out;
}

std::vector<Check> suite_crossmethod(const SuiteConfig& cfg)
{
    const SpectralIndex lam = default_index(cfg, 3);
    std::vector<Check> out;
    out.push_back(run_check("series, Mellin-Barnes and asymptotics agree, n = 3, x in [20, 100]", 1.0, [&](Check& c) {
        double worst = 0.0, worst_rel = 0.0;
        for (double x : lin(20.0, 100.0, 9))
            for (const auto& s : SignVector::all(3)) {
                const SurfacePoint z = SurfacePoint::from_real(x);
                const SeriesEval se = j_function(z, s, lam);
                const MBEval me = mb_eval(x, s, lam);
                const AsymptoticEval ae = j_varsigma_asymptotic(z, s, lam);
                const cplx v[3] = {se.value, me.value, ae.value};
                const double e[3] = {se.error_estimate, me.error_estimate, ae.error_estimate};
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b) {
                        const double r = rel(v[a], v[b]);
                        const double allowed = std::max(1e-7, 2.0 * (e[a] + e[b]) / std::abs(v[b]));
                        worst = std::max(worst, r / allowed);
                        worst_rel = std::max(worst_rel, r);
                    }
            }
        c.detail = "largest pairwise relative difference " + fmt(worst_rel) + "; deviation is in units of the allowance";
        return worst;
    }));
    return out;
}

std::vector<Check> suite_ode(const SuiteConfig& cfg)
{
    const int n_max = cfg.n > 0 ? cfg.n : 5;
    std::vector<Check> out;
    out.push_back(run_check("Bessel equation residual, n <= " + std::to_string(n_max) + ", x <= 10", 1e-8, [&](Check&) {
        double worst = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const SpectralIndex lam = default_index(cfg, n);
            const BesselEqCoeffs v = bessel_eq_coeffs(lam);
            for (const auto& s : SignVector::all(n))
                for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
                    const auto d = derivatives(x, s, lam, n);
                    cplx r = 0.0;
                    double a = 0.0;
                    for (int j = 0; j <= n; ++j) {
                        const cplx t = v.V[static_cast<std::size_t>(j)] * std::pow(x, j) * d[static_cast<std::size_t>(j)].value;
                        r += t;
                        a += std::abs(t);
                    }
                    const cplx t = -double(s.product()) * std::pow(cplx(0, n), n) * std::pow(x, n) * d[0].value;
                    r += t;
                    a += std::abs(t);
                    worst = std::max(worst, std::abs(r) / a);
                }
        }
        return worst;
    }));
    return out;
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const double nx = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (nx * sxy - sx * sy) / (nx * sxx - sx * sx);
}

std::vector<Check> suite_kdecay(const SuiteConfig& cfg)
{
    std::vector<Check> out;
    const SpectralIndex lam = default_index(cfg, 3);
    out.push_back(run_check("K-type decay slope, n = 3, signs ++-, x in [30, 60]", 0.02, [&](Check& c) {
        std::vector<double> xs, ys;
        for (double x : lin(30.0, 60.0, 31)) {
            xs.push_back(x);
            ys.push_back(std::log(std::abs(j_varsigma_asymptotic(SurfacePoint::from_real(x), SignVector::parse("++-"), lam).value)));
        }
        const double slope = fitted_slope(xs, ys), target = -3.0 * std::sin(pi / 3.0);
        c.detail = "slope " + fmt(slope) + " against " + fmt(target);
        return std::abs(slope / target - 1.0);
    }));
    out.push_back(run_check("kernel parity, n = 2: decay rate of J(-x^2) on [3, 6] relative to 4 pi", 0.1, [](Check& c) {
        const KernelIndex idx{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 0}};
        std::vector<double> xs, ys;
        for (double x : lin(3.0, 6.0, 16)) {
            xs.push_back(x);
            ys.push_back(std::log(std::abs(bessel_kernel(-x * x, idx).value)));
        }
        const double rate = -fitted_slope(xs, ys);
        c.detail = "rate " + fmt(rate) + " against 4 pi = " + fmt(4 * pi);
        return std::max(0.0, 1.0 - rate / (4 * pi));
    }));
    return out;
}

std::vector<Check> suite_mellin(const SuiteConfig&)
{
    std::vector<Check> out;
    out.push_back(run_check("gamma factor, two closed forms", 1e-12, [](Check&) {
        double worst = 0.0;
        for (double re : {-1.3, 0.2, 0.5, 2.7})
            for (double im = -5.0; im <= 5.0; im += 1.0)
                for (int d : {0, 1}) worst = std::max(worst, rel(gamma_factor({re, im}, d), gamma_factor_alt({re, im}, d)));
        return worst;
    }));
    const WeightFunction even = WeightFunction::gaussian_log(0, 0.2, 0.5), odd = WeightFunction::gaussian_log(1, -0.3, 0.7);
    out.push_back(run_check("signed Mellin transform of log-Gaussian weights against closed form", 1e-10, [&](Check&) {
        double worst = 0.0;
        for (const WeightFunction* w : {&even, &odd})
            for (int eta : {0, 1})
                for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 3.0), cplx(-1.0, 1.0), cplx(2.0, -2.0)}) {
                    const cplx ref = eta == (w == &odd ? 1 : 0) ? w->mellin(s) : cplx(0.0);
                    const cplx v = signed_mellin([w](double x) { return cplx((*w)(x)); }, eta, s, -15.0, 15.0, 1e-13);
                    worst = std::max(worst, std::abs(v - ref) / std::abs(w->mellin(s)));
                }
        return worst;
    }));
    out.push_back(run_check("signed Mellin inversion recovers a mixed-parity weight", 1e-7, [&](Check&) {
        double worst = 0.0;
        for (double x : {-3.0, -0.7, 0.4, 2.0}) {
            cplx v = signed_mellin_inverse([&](cplx s) { return even.mellin(s); }, 0, x, 0.5, 30.0, 1e-11) +
                     signed_mellin_inverse([&](cplx s) { return odd.mellin(s); }, 1, x, 0.5, 30.0, 1e-11);
            worst = std::max(worst, rel(v, cplx(even(x) + odd(x))));
        }
        return worst;
    }));
    out.push_back(run_check("Hankel transform functional equation, n = 2", 1e-6, [](Check& c) {
        const KernelIndex idx{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 1}};
        auto rep = functional_equation_check(WeightFunction::gaussian_log(0), idx,
                                             {cplx(0.5, 0.0), cplx(0.5, 1.0), cplx(0.5, 2.0)});
        c.detail = "kernel evaluations " + std::to_string(rep.kernel_evaluations);
        return rep.max_rel_error;
    }));
    return out;
}

std::vector<Check> suite_identity54(const SuiteConfig& cfg)
{
    std::vector<Check> out;
    out.push_back(run_check("combinatorial identity, m <= " + std::to_string(cfg.mmax), 0.0, [&](Check& c) {
        IdentityReport r = check_combinatorial_identity(cfg.mmax);
        if (!r.ok) c.detail = "first failure at m=" + std::to_string(r.first_bad_m) + ": " + r.detail;
        return r.ok ? 0.0 : 1.0;
    }));
    return out;
}

std::vector<Check> suite_bridge(const SuiteConfig& cfg)
{
    std::vector<Check> out;
    out.push_back(run_check("B_m(lambda; xi) = xi^{-m} B_m(lambda; 1), n <= 5, m <= 15", 1e-12, [&](Check&) {
        std::mt19937_64 rng(cfg.seed);
        double worst = 0.0;
        for (int n = 1; n <= 5; ++n) {
            const SpectralIndex lam = random_index(rng, n);
            const BTable one = build_b_table(lam, {n, 0}, 15);
            for (long k = 0; k < 2 * n; ++k) {
                const RootOfUnity xi{n, k};
                const BTable t = build_b_table(lam, xi, 15);
                for (int m = 0; m <= 15; ++m) {
                    const cplx ref = std::pow(xi.value(), -m) * one.B[static_cast<std::size_t>(m)];
                    if (std::abs(ref) > 0.0) worst = std::max(worst, rel(t.B[static_cast<std::size_t>(m)], ref));
                }
            }
        }
        return worst;
    }));
    out.push_back(run_check("n = 2 coefficients equal the Pochhammer closed form", 1e-12, [&](Check&) {
        std::mt19937_64 rng(cfg.seed + 1);
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            const SpectralIndex lam = random_index(rng, 2);
            const cplx l = lam[0];
            for (long xi_idx : {0L, 1L, 2L, 3L}) {
                const RootOfUnity xi{2, xi_idx};
                const BTable t = build_b_table(lam, xi, 12);
                cplx ref = 1.0;
                for (int m = 0; m <= 12; ++m) {
                    if (m > 0) ref *= (0.5 - 2.0 * l + double(m - 1)) * (0.5 + 2.0 * l + double(m - 1)) /
                                      (4.0 * cplx(0, 1) * xi.value() * double(m));
                    worst = std::max(worst, rel(t.B[static_cast<std::size_t>(m)], ref));
                }
            }
        }
        return worst;
    }));
    out.push_back(run_check("equal-sign asymptotics reduce to J(z; lambda; +-1)", 1e-14, [&](Check&) {
        double worst = 0.0;
        for (int n = 2; n <= 4; ++n) {
            const SpectralIndex lam = default_index(cfg, n);
            const SurfacePoint z = SurfacePoint::from_real(30.0 * (1 + lam.frak_e()));
            for (int sg : {1, -1}) {
                const SignVector s(std::vector<int>(static_cast<std::size_t>(n), sg));
                const cplx f = std::sqrt(double(n)) * std::pow(2 * pi, -0.5 * (n - 1)) *
                               std::exp(cplx(0, -sg * pi / 4 * (n - 1)));
                const cplx lhs = f * j_varsigma_asymptotic(z, s, lam).value;
                worst = std::max(worst, rel(lhs, second_kind(z, lam, {n, sg > 0 ? 0 : n}).value));
            }
        }
        return worst;
    }));
    out.push_back(run_check("series H-reduction J(z; s) = e(sum_{L-} lambda / 2) H^+(e^{pi i n_- / n} z)", 1e-9, [&](Check&) {
        double worst = 0.0;
        for (int n = 2; n <= 4; ++n) {
            const SpectralIndex lam = default_index(cfg, n);
            const SignVector plus(std::vector<int>(static_cast<std::size_t>(n), 1));
            const SurfacePoint z = SurfacePoint::from_real(2.5);
            for (const auto& s : SignVector::all(n)) {
                cplx sum_minus = 0.0;
                for (int l = 0; l < n; ++l)
                    if (s[l] < 0) sum_minus += lam[l];
                const cplx rhs = e(sum_minus / 2.0) * j_function(z.rotated(pi * s.n_minus() / n), plus, lam).value;
                worst = std::max(worst, rel(j_function(z, s, lam).value, rhs));
            }
        }
        return worst;
    }));
    out.push_back(run_check("asymptotics against Mellin-Barnes, n = 3, x = 50", 1e-8, [&](Check&) {
        const SpectralIndex lam = default_index(cfg, 3);
        double worst = 0.0;
        for (const auto& s : SignVector::all(3))
            worst = std::max(worst, rel(j_varsigma_asymptotic(SurfacePoint::from_real(50.0), s, lam).value,
                                        mb_eval(50.0, s, lam).value));
        return worst;
    }));
    return out;
}

std::vector<Check> suite_rotation(const SuiteConfig& cfg)
{
    std::vector<Check> out;
    out.push_back(run_check("direct against rotated second kind, n = 4, z = 30", 1e-10, [](Check& c) {
        const SpectralIndex lam({0.3, -0.15, 0.1, -0.25});
        const SurfacePoint z = SurfacePoint::from_real(30.0);
        double worst = 0.0;
        int used = 0;
        for (long k = 0; k < 8; ++k) {
            const RootOfUnity xi{4, k};
            if (!in_sector(z, xi, pi / 6)) continue;
            ++used;
            worst = std::max(worst, rel(rotate_second_kind(z, lam, xi).value, second_kind(z, lam, xi).value));
            worst = std::max(worst, rel(second_kind_series(z, lam, xi).value, second_kind(z, lam, xi).value));
        }
        c.detail = std::to_string(used) + " roots in sector";
        return worst;
    }));
    out.push_back(run_check("first kind rotation, n = 3, a = 1, z = 1.7", 1e-12, [&](Check&) {
        const SpectralIndex lam = default_index(cfg, 3);
        const SurfacePoint z = SurfacePoint::from_real(1.7);
        double worst = 0.0;
        for (int sg : {1, -1})
            for (int l = 1; l <= 3; ++l) {
                const cplx lhs = first_kind(z.rotated(pi / 3), sg, lam, l).value;
                const cplx rhs = std::exp(cplx(0, -pi) * lam[l - 1]) * first_kind(z, -sg, lam, l).value;
                worst = std::max(worst, rel(lhs, rhs));
            }
        return worst;
    }));
    out.push_back(run_check("inverse connection matrix inverts the forward one, n <= 5", 1e-12, [&](Check&) {
        std::mt19937_64 rng(cfg.seed + 2);
        double worst = 0.0;
        for (int n = 1; n <= 5; ++n) {
            const SpectralIndex lam = random_index(rng, n);
            for (int a : {0, 1}) {
                const auto F = forward_connection_matrix(lam, a), R = inverse_connection_matrix(lam, a);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        cplx s = 0.0;
                        for (int k = 0; k < n; ++k)
                            s += R[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                 F[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
                    }
            }
        }
        return worst;
    }));
    out.push_back(run_check("first kind rebuilt from second kind, n = 3, x = 60", 1e-6, [&](Check&) {
        const SpectralIndex lam = default_index(cfg, 3);
        const SurfacePoint z = SurfacePoint::from_real(60.0);
        const auto rebuilt = inverse_connection(z, lam, 0);
        double worst = 0.0;
        for (int l = 1; l <= 3; ++l)
            worst = std::max(worst, rel(rebuilt[static_cast<std::size_t>(l - 1)].value, first_kind(z, 1, lam, l).value));
        return worst;
    }));
    return out;
}

}  // namespace

bool SuiteReport::pass() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j = {{"name", c.name},
                            {"status", c.pass ? "pass" : "fail"},
                            {"max_deviation", std::isfinite(c.max_deviation) ? nlohmann::json(c.max_deviation)
                                                                             : nlohmann::json("inf")},
                            {"tolerance", c.tolerance}};
        if (c.runtime_s >= 0.0) j["runtime_s"] = c.runtime_s;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return {{"suite", suite}, {"status", pass() ? "pass" : "fail"}, {"checks", arr}};
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"coeffs", "rank2",      "special",    "crossmethod", "ode",
                                                   "kdecay", "mellin-id", "identity54", "bridge",      "rotation"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = name;
    if (name == "coeffs")
        r.checks = suite_coeffs(cfg);
    else if (name == "rank2")
        r.checks = suite_rank2(cfg);
    else if (name == "special")
        r.checks = suite_special(cfg);
    else if (name == "crossmethod")
        r.checks = suite_crossmethod(cfg);
    else if (name == "ode")
        r.checks = suite_ode(cfg);
    else if (name == "kdecay")
        r.checks = suite_kdecay(cfg);
    else if (name == "mellin-id")
        r.checks = suite_mellin(cfg);
    else if (name == "identity54")
        r.checks = suite_identity54(cfg);
    else if (name == "bridge")
        r.checks = suite_bridge(cfg);
    else if (name == "rotation")
        r.checks = suite_rotation(cfg);
    else
        throw Error(Error::Kind::domain, "unknown suite '" + name + "'");
    if (!cfg.timing)
        for (auto& c : r.checks) c.runtime_s = -1.0;
    return r;
}

}  // namespace besselhr::cli

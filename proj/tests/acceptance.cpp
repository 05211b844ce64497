// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "besselhr/asympt.hpp"
#include "besselhr/coeffs.hpp"
#include "besselhr/kernel.hpp"
#include "besselhr/mellinbarnes.hpp"
#include "besselhr/series.hpp"
#include "oracles/classical_bessel.hpp"
#include "oracles/closed_forms.hpp"

using namespace besselhr;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> lin(double a, double b, int n)
{
    std::vector<double> g;
    for (int k = 0; k < n; ++k) g.push_back(a + (b - a) * k / (n - 1));
    return g;
}

SpectralIndex random_index(std::mt19937_64& rng, int n)
{
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<cplx> l;
    for (int k = 0; k < n; ++k) l.push_back({u(rng), u(rng)});
    return SpectralIndex(l);
}

std::string sci(double v)
{
    char b[32];
    std::snprintf(b, sizeof b, "%.2e", v);
    return b;
}

Outcome coefficient_exactness()
{
    const auto t0 = std::chrono::steady_clock::now();
    const ATable t = build_a_table(20, 20);
    bool ok = verify_a_closed_form(t).ok;
    for (int j = 0; j <= 20; ++j)
        for (int m = 0; m <= 20; ++m) ok = ok && t(j, m) == oracle::a_entry<BigInt>(j, m);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {ok && secs < 1.0, "j, m <= 20 exact, " + sci(secs) + " s"};
}

Outcome orthogonality()
{
    bool exact = true;
    for (int n = 1; n <= 6; ++n) exact = exact && uv_orthogonal_exact(build_uv_tables(n));
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < 100; ++k)
            worst = std::max(worst, uv_orthogonality_residual(uv_numeric(big_lambda(random_index(rng, n)))));
    return {exact && worst < 1e-10, std::string("exact n <= 6: ") + (exact ? "yes" : "no") + ", numeric n <= 8: " + sci(worst)};
}

Outcome rank1()
{
    double worst = 0.0;
    const SpectralIndex zero({0.0});
    for (double x : lin(0.1, 50.0, 50))
        for (int s : {1, -1})
            worst = std::max(worst, std::abs(mb_eval(x, SignVector({s}), zero).value - std::exp(cplx(0, s * x))));
    return {worst < 1e-10, "max abs error " + sci(worst)};
}

Outcome rank2()
{
    const cplx I(0, 1);
    double worst = 0.0;
    for (cplx lam : {cplx(0.3), cplx(0, 0.5), cplx(0.2, 0.1)}) {
        const SpectralIndex idx({lam, -lam});
        for (double x : lin(0.5, 20.0, 14)) {
            const auto c = oracle::cylinder(2.0 * lam, 2.0 * x);
            for (const auto& s : SignVector::all(2)) {
                cplx ref;
                if (s[0] == s[1])
                    ref = s[0] > 0 ? pi * I * std::exp(pi * I * lam) * (c.J + I * c.Y)
                                   : -pi * I * std::exp(-pi * I * lam) * (c.J - I * c.Y);
                else
                    ref = 2.0 * std::exp(-double(s[0]) * pi * I * lam) * c.K;
                worst = std::max(worst, rel(j_function(SurfacePoint::from_real(x), s, idx).value, ref));
            }
        }
    }
    return {worst < 1e-9, "max rel error " + sci(worst)};
}

Outcome prototype()
{
    double worst = 0.0;
    for (int n = 3; n <= 5; ++n)
        for (const auto& s : SignVector::all(n))
            for (double x : lin(1.0, 10.0, 10))
                worst = std::max(worst, rel(j_function(SurfacePoint::from_real(x), s, SpectralIndex::prototype(n)).value,
                                            oracle::prototype_j(x, s.str())));
    return {worst < 1e-8, "max rel error " + sci(worst)};
}

Outcome three_way()
{
    double worst_ratio = 0.0, worst = 0.0;
    for (const SpectralIndex& lam : {SpectralIndex({0.3, -0.1, -0.2}),
                                     SpectralIndex({cplx(0.1, 0.2), cplx(-0.3, 0.05), cplx(0.2, -0.25)})})
        for (double x : lin(20.0, 100.0, 9))
            for (const auto& s : SignVector::all(3)) {
                const SurfacePoint z = SurfacePoint::from_real(x);
                const SeriesEval a = j_function(z, s, lam);
                const MBEval b = mb_eval(x, s, lam);
                const AsymptoticEval c = j_varsigma_asymptotic(z, s, lam);
                const cplx v[3] = {a.value, b.value, c.value};
                const double e[3] = {a.error_estimate, b.error_estimate, c.error_estimate};
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        const double d = rel(v[i], v[j]);
                        worst = std::max(worst, d);
                        worst_ratio = std::max(worst_ratio, d / std::max(1e-7, 2 * (e[i] + e[j]) / std::abs(v[j])));
                    }
            }
    return {worst_ratio <= 1.0, "max pairwise rel diff " + sci(worst) + ", " + sci(worst_ratio) + " of allowance"};
}

Outcome ode()
{
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<cplx> l;
        for (int k = 0; k < n; ++k) l.push_back({0.37 * k * k - 0.2 * k, 0.11 * k});
        const SpectralIndex lam(l);
        const BesselEqCoeffs v = bessel_eq_coeffs(lam);
        for (const auto& s : SignVector::all(n))
            for (double x : {0.5, 2.0, 5.0, 10.0}) {
                const auto d = derivatives(x, s, lam, n);
                cplx r = -double(s.product()) * std::pow(cplx(0, n), n) * std::pow(x, n) * d[0].value;
                double a = std::abs(r);
                for (int j = 0; j <= n; ++j) {
                    const cplx t = v.V[static_cast<std::size_t>(j)] * std::pow(x, j) * d[static_cast<std::size_t>(j)].value;
                    r += t;
                    a += std::abs(t);
                }
                worst = std::max(worst, std::abs(r) / a);
            }
    }
    return {worst < 1e-8, "max relative residual " + sci(worst)};
}

Outcome identity()
{
    const IdentityReport r = check_combinatorial_identity(8);
    return {r.ok, r.ok ? "exact for m <= 8" : "fails at m = " + std::to_string(r.first_bad_m)};
}

Outcome coefficient_laws()
{
    std::mt19937_64 rng(99);
    double rot = 0.0, hankel = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const SpectralIndex lam = random_index(rng, n);
        const BTable one = build_b_table(lam, {n, 0}, 15);
        for (long k = 0; k < 2 * n; ++k) {
            const RootOfUnity xi{n, k};
            const BTable t = build_b_table(lam, xi, 15);
            for (int m = 0; m <= 15; ++m) {
                const cplx ref = std::pow(xi.value(), -m) * one.B[static_cast<std::size_t>(m)];
                if (std::abs(ref) > 0) rot = std::max(rot, rel(t.B[static_cast<std::size_t>(m)], ref));
            }
        }
    }
    for (int k = 0; k < 50; ++k) {
        const SpectralIndex lam = random_index(rng, 2);
        const cplx nu = 2.0 * lam[0];
        const BTable t = build_b_table(lam, {2, 0}, 12);
        cplx ref = 1.0;
        for (int m = 1; m <= 12; ++m) {
            ref *= (0.5 - nu + double(m - 1)) * (0.5 + nu + double(m - 1)) / (double(m) * 4.0 * cplx(0, 1));
            hankel = std::max(hankel, rel(t.B[static_cast<std::size_t>(m)], ref));
        }
    }
    return {rot < 1e-12 && hankel < 1e-12, "rotation law " + sci(rot) + ", rank 2 closed form " + sci(hankel)};
}

double slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome k_decay()
{
    const SpectralIndex lam({0.3, -0.1, -0.2});
    std::vector<double> xs, ys;
    for (double x : lin(30.0, 60.0, 31)) {
        xs.push_back(x);
        ys.push_back(std::log(std::abs(j_function(SurfacePoint::from_real(x), SignVector::parse("++-"), lam).value)));
    }
    const double s = slope(xs, ys), target = -3 * std::sin(pi / 3);
    return {std::abs(s / target - 1) <= 0.02, "slope " + sci(s) + " against " + sci(target)};
}

Outcome functional_equation()
{
    const std::vector<cplx> s = {cplx(0.5, 0.0), cplx(0.5, 1.0), cplx(0.5, 2.0)};
    double worst = 0.0;
    const KernelIndex two{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 1}};
    const KernelIndex three{SpectralIndex({cplx(0, 0.5), cplx(0, -0.2), cplx(0, -0.3)}), {0, 1, 0}};
    for (int eta : {0, 1}) worst = std::max(worst, functional_equation_check(WeightFunction::gaussian_log(eta), two, s).max_rel_error);
    worst = std::max(worst, functional_equation_check(WeightFunction::gaussian_log(0), three, s).max_rel_error);
    return {worst < 1e-6, "max rel error " + sci(worst) + " over n = 2, 3"};
}

Outcome kernel_parity()
{
    const KernelIndex idx{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 0}};
    std::vector<double> xs, ys;
    for (double x : lin(3.0, 6.0, 16)) {
        xs.push_back(x);
        ys.push_back(std::log(std::abs(bessel_kernel(-x * x, idx).value)));
    }
    const double rate = -slope(xs, ys);
    return {rate >= 0.9 * 4 * pi, "decay rate " + sci(rate) + ", need >= " + sci(0.9 * 4 * pi)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"coefficient exactness", coefficient_exactness},
        {"U/V orthogonality", orthogonality},
        {"rank 1 by Mellin-Barnes", rank1},
        {"rank 2 closed forms", rank2},
        {"prototype index", prototype},
        {"three-way agreement", three_way},
        {"Bessel equation residual", ode},
        {"combinatorial identity", identity},
        {"coefficient laws", coefficient_laws},
        {"K-type decay", k_decay},
        {"Hankel functional equation", functional_equation},
        {"kernel parity decay", kernel_parity},
    };
    int failed = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %-28s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", k, name.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}

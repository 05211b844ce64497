#include "besselhr/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "besselhr/coeffs.hpp"
#include "series_engine.hpp"

namespace besselhr {

namespace {

using detail::CoefKind;
using detail::SeriesJob;
using detail::SeriesOut;

struct Tier {
    int digits;
    double eps;
    SeriesOut (*run)(const SeriesJob&);
};

const Tier tiers[] = {
    {16, 2.220446049250313e-16, detail::run_series_double},
    {50, 1e-50, detail::run_series_mp50},
    {100, 1e-100, detail::run_series_mp100},
    {200, 1e-200, detail::run_series_mp200},
    {400, 0.0, detail::run_series_mp400},
};

double tier_eps(int t)
{
    return t == 4 ? 0.0 : tiers[t].eps;
}

SeriesEval finish(const SeriesOut& o, int t, bool limit)
{
    SeriesEval r;
    r.value = o.value;
    r.terms_used = o.terms;
    r.tail_bound = o.tail;
    r.digits = o.digits;
    r.limit_used = limit;
    double abs_sum = std::exp(o.log_abs_sum);
    double eps = tier_eps(t);
    // the double tier also carries the Lanczos gamma error in every coefficient
    double round = eps == 0.0 ? 0.0 : (t == 0 ? 16.0 : 4.0) * eps * abs_sum;
    if (t == 4) round = 4.0 * std::exp(o.log_abs_sum - 400.0 * std::log(10.0));
    double lim = limit ? std::pow(limit_radius, limit_points) * abs_sum : 0.0;
    r.error_estimate = round + o.tail + lim;
    double av = std::abs(o.value);
    r.cancellation = av > 0.0 ? std::exp(o.log_abs_sum - std::log(av)) : std::numeric_limits<double>::infinity();
    return r;
}

// Runs the job at increasing precision until the bound meets tol relative to |value|.
SeriesEval run_tiered(SeriesJob job, double tol, double log_hint)
{
    tol = std::max(tol, 1e-15);
    const double ln10 = std::log(10.0);
    const int n = static_cast<int>(job.lambda.size());
    const double log_peak = n * job.z.modulus();  // size of the largest term
    if (std::isfinite(log_hint) && (log_peak - std::min(log_hint, log_peak)) / ln10 > 600.0)
        throw Error(Error::Kind::overflow, "series: cancellation exceeds every precision tier; use the asymptotic expansion");
    int t = 0;
    SeriesEval best;
    bool have = false;
    for (;;) {
        SeriesOut o = tiers[t].run(job);
        if (o.finite) {
            best = finish(o, t, job.cauchy_mean);
            have = true;
            double av = std::abs(best.value);
            if (best.error_estimate <= tol * av) return best;
        }
        if (t == 4) break;
        double need = 2.0 * tiers[t].digits;
        if (o.finite) {
            double av = std::abs(o.value);
            if (av > 0.0 && best.error_estimate < 0.1 * av)
                need = (o.log_abs_sum - std::log(av)) / ln10 - std::log10(tol) + 4.0;
            else if (std::isfinite(log_hint))
                need = std::max(need, (o.log_abs_sum - log_hint) / ln10 - std::log10(tol) + 6.0);
        }
        int next = t + 1;
        while (next < 4 && tiers[next].digits < need) ++next;
        t = next;
    }
    if (!have) throw Error(Error::Kind::overflow, "series: terms overflow every precision tier; rescale the argument");
    best.converged = false;
    return best;
}

double hint_exponent(const SurfacePoint& z, int n, double xi_arg)
{
    return -n * z.modulus() * std::sin(xi_arg + z.argument) - 0.5 * (n - 1) * z.log_modulus;
}

void check_rank(const SpectralIndex& lambda, int n, const char* what)
{
    if (lambda.rank() != n) throw Error(Error::Kind::domain, std::string(what) + ": rank mismatch between signs and index");
}

}  // namespace

SeriesEval first_kind(const SurfacePoint& z, int sign, const SpectralIndex& lambda, int l, double tol)
{
    const int n = lambda.rank();
    if (l < 1 || l > n) throw Error(Error::Kind::domain, "first_kind: component out of range");
    SeriesJob job;
    job.lambda = lambda.lambda();
    job.z = z;
    job.kind = CoefKind::first_kind;
    job.l = l - 1;
    job.sign = sign >= 0 ? 1 : -1;
    double hint = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 2 * n; ++k)
        if ((k % 2 == 0) == (job.sign > 0)) hint = std::max(hint, hint_exponent(z, n, pi * k / n));
    return run_tiered(job, tol, hint);
}

SeriesEval j_function(const SurfacePoint& z, const SignVector& s, const SpectralIndex& lambda, double tol)
{
    const int n = s.rank();
    check_rank(lambda, n, "j_function");
    SeriesJob job;
    job.lambda = lambda.lambda();
    job.z = z;
    job.kind = CoefKind::connection;
    job.sign = s.product();
    job.varsigma = s.signs();
    job.cauchy_mean = n > 1 && genericity_gap(lambda) < generic_threshold;
    job.radius = limit_radius;
    job.points = limit_points;
    return run_tiered(job, tol, hint_exponent(z, n, s.xi().argument()));
}

SeriesEval second_kind_series(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi, double tol)
{
    const int n = lambda.rank();
    if (xi.n != n) throw Error(Error::Kind::domain, "second_kind_series: root of unity order mismatch");
    SeriesJob job;
    job.lambda = lambda.lambda();
    job.z = z;
    job.kind = CoefKind::second_kind;
    job.sign = xi.power_sign();
    job.xi_index = xi.index;
    job.cauchy_mean = n > 1 && genericity_gap(lambda) < generic_threshold;
    job.radius = limit_radius;
    job.points = limit_points;
    return run_tiered(job, tol, hint_exponent(z, n, xi.argument()));
}

SeriesEval j_nu(double x, const SignVector& s, const NuIndex& nu, double tol)
{
    return j_function(SurfacePoint::from_real(x), s, lambda_of_nu(nu), tol);
}

std::vector<SeriesEval> derivatives(double x, const SignVector& s, const SpectralIndex& lambda, int k_max, double tol)
{
    const int n = s.rank();
    const int d = n - 1;
    check_rank(lambda, n, "derivatives");
    if (k_max < 0 || k_max > n) throw Error(Error::Kind::domain, "derivatives: order must be in [0, n]");
    const NuIndex nu = nu_of_lambda(lambda);
    const UVNumeric uv = uv_numeric(big_lambda(lambda));

    // J_{nu + e^{d-j+1}} for j = 0..k_max
    std::vector<SeriesEval> shifted;
    for (int j = 0; j <= k_max; ++j) {
        int ones = d - j + 1;
        if (ones > d || ones <= 0) ones = 0;
        NuIndex sh = nu;
        for (int i = 0; i < ones; ++i) sh.nu[static_cast<std::size_t>(i)] += 1.0;
        shifted.push_back(j_nu(x, s, sh, tol));
    }
    std::vector<cplx> S(static_cast<std::size_t>(k_max + 1), 1.0);
    for (int j = 1; j <= k_max; ++j) S[static_cast<std::size_t>(j)] = S[static_cast<std::size_t>(j - 1)] * static_cast<double>(s[n - j]);
    const cplx in(0.0, static_cast<double>(n));

    std::vector<SeriesEval> out;
    for (int k = 0; k <= k_max; ++k) {
        SeriesEval r;
        r.value = 0.0;
        cplx inj = 1.0;
        for (int j = 0; j <= k; ++j) {
            cplx c = S[static_cast<std::size_t>(j)] * inj * uv.U[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * std::pow(x, j - k);
            const SeriesEval& sj = shifted[static_cast<std::size_t>(j)];
            r.value += c * sj.value;
            r.error_estimate += std::abs(c) * sj.error_estimate;
            r.tail_bound += std::abs(c) * sj.tail_bound;
            r.terms_used += sj.terms_used;
            r.digits = std::max(r.digits, sj.digits);
            r.limit_used = r.limit_used || sj.limit_used;
            r.converged = r.converged && sj.converged;
            inj *= in;
        }
        out.push_back(r);
    }
    return out;
}

cplx connection_constant(const SignVector& s, const SpectralIndex& lambda)
{
    const int n = s.rank();
    cplx sum_plus = 0.0;
    for (int l = 0; l < n; ++l)
        if (s[l] > 0) sum_plus += lambda[l];
    return e(-(n - 1) / 8.0 + (n - 1) * s.n_plus() / (4.0 * n) - 0.5 * sum_plus);
}

cplx prototype_closed_form(double x, const SignVector& s)
{
    const int n = s.rank();
    // labels counted from the opposite end because the index is listed in decreasing order
    double sum_l = 0.0;
    for (int l = 1; l <= n; ++l)
        if (s[l - 1] > 0) sum_l += n + 1 - l;
    cplx c = e(-(n - 1) / 8.0 + s.n_plus() / 2.0 - sum_l / (2.0 * n));
    cplx xi = s.xi().value();
    return c / std::sqrt(static_cast<double>(n)) * std::pow(2.0 * pi / x, 0.5 * (n - 1)) *
           std::exp(cplx(0.0, static_cast<double>(n)) * xi * x);
}

}  // namespace besselhr

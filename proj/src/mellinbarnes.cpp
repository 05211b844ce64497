#include "besselhr/mellinbarnes.hpp"

#include <algorithm>
#include <cmath>

#include "quadrature.hpp"

namespace besselhr {

namespace {

struct Piece {
    cplx s0, dir;     // s = s0 + t dir
    double t_lo, t_hi;
    double orient;    // +1 along increasing t, -1 against
};

struct MBIntegrand {
    int n;
    std::vector<cplx> lam;
    std::vector<int> sg;
    double logx;

    cplx log_g(cplx s) const
    {
        cplx r = -static_cast<double>(n) * s * logx;
        for (int l = 0; l < n; ++l) {
            cplx u = s - lam[static_cast<std::size_t>(l)];
            r += log_gamma(u) + cplx(0.0, 0.5 * pi * sg[static_cast<std::size_t>(l)]) * u;
        }
        return r;
    }
};

// Walks outward from t in direction step until the integrand is negligible against peak.
double extend(const MBIntegrand& g, const Piece& p, double t, double step, double log_peak, double log_cut)
{
    for (int i = 0; i < 100000; ++i) {
        double lv = g.log_g(p.s0 + t * p.dir).real();
        if (lv < log_peak + log_cut) return t;
        t += step;
    }
    throw Error(Error::Kind::nonconvergence, "mb: integrand does not decay along the contour");
}

}  // namespace

MBEval mb_eval(double x, const SignVector& s, const SpectralIndex& lambda, const MBOptions& opt)
{
    if (!(x > 0.0)) throw Error(Error::Kind::domain, "mb_eval: x must be positive");
    const int n = s.rank();
    if (lambda.rank() != n) throw Error(Error::Kind::domain, "mb_eval: rank mismatch");
    MBIntegrand g{n, lambda.lambda(), s.signs(), std::log(x)};

    double re_max = -1e300, im_min = 1e300, im_max = -1e300;
    for (auto v : lambda.lambda()) {
        re_max = std::max(re_max, v.real());
        im_min = std::min(im_min, v.imag());
        im_max = std::max(im_max, v.imag());
    }
    const double sigma_min = re_max + 0.5 + opt.sigma_shift;
    const int kappa = s.n_plus() - s.n_minus();

    MBEval out;
    std::vector<Piece> pieces;
    const cplx I(0.0, 1.0);
    const double log_cut = std::log(1e-22);
    double log_peak;
    if (s.all_equal()) {
        const bool plus = kappa > 0;
        const double tb = std::max(x, (plus ? -im_min : im_max) + 1.0) * opt.bend_scale;
        const double sigma0 = sigma_min;
        const cplx omega = plus ? std::exp(cplx(0.0, -0.75 * pi)) : std::exp(cplx(0.0, 0.75 * pi));
        const cplx sb = cplx(sigma0, plus ? -tb : tb);
        log_peak = g.log_g(cplx(0.0, plus ? -x : x) + sigma0).real();
        log_peak = std::max(log_peak, g.log_g(sb).real());
        for (double t = -tb; t <= tb; t += std::max(0.5, tb / 200.0))
            log_peak = std::max(log_peak, g.log_g(cplx(sigma0, t)).real());
        // vertical piece, from the bend towards the decaying end
        Piece v{cplx(sigma0, 0.0), I, 0.0, 0.0, 1.0};
        double t_far_start = plus ? std::max(im_max, 0.0) + 1.0 : std::min(im_min, 0.0) - 1.0;
        double t_far = extend(g, v, t_far_start, plus ? 1.0 : -1.0, log_peak, log_cut);
        if (plus) {
            v.t_lo = -tb;
            v.t_hi = t_far;
        } else {
            v.t_lo = t_far;
            v.t_hi = tb;
        }
        Piece r{sb, omega, 0.0, 0.0, plus ? -1.0 : 1.0};
        r.t_hi = extend(g, r, 1.0, 1.0, log_peak, log_cut);
        pieces.push_back(v);
        pieces.push_back(r);
        out.contour = {sigma0, tb, 0.25 * pi, t_far, r.t_hi, true};
    } else {
        const cplx w = x * std::exp(cplx(0.0, -0.5 * pi * kappa / n));
        const double sigma0 = std::max(w.real(), sigma_min);
        const double tc = w.imag();
        log_peak = g.log_g(cplx(sigma0, tc)).real();
        for (double t = tc - 10.0; t <= tc + 10.0; t += 0.5) log_peak = std::max(log_peak, g.log_g(cplx(sigma0, t)).real());
        Piece v{cplx(sigma0, 0.0), I, 0.0, 0.0, 1.0};
        double lo_start = std::min(tc, im_min) - 1.0, hi_start = std::max(tc, im_max) + 1.0;
        v.t_lo = extend(g, v, lo_start, -1.0, log_peak, log_cut);
        v.t_hi = extend(g, v, hi_start, 1.0, log_peak, log_cut);
        pieces.push_back(v);
        out.contour = {sigma0, 0.0, 0.0, std::max(std::abs(v.t_lo), std::abs(v.t_hi)), 0.0, false};
    }

    // concatenate the pieces into one parameter interval
    std::vector<double> offsets;
    std::vector<double> breaks;
    double u = 0.0;
    for (const auto& p : pieces) {
        offsets.push_back(u);
        double len = p.t_hi - p.t_lo;
        int panels = std::max(4, static_cast<int>(std::ceil(len / 0.5)));
        for (int i = 0; i < panels; ++i) breaks.push_back(u + len * i / panels);
        u += len;
    }
    breaks.push_back(u);
    const double scale_shift = log_peak;
    auto f = [&](double uu) -> cplx {
        std::size_t k = pieces.size() - 1;
        while (k > 0 && uu < offsets[k]) --k;
        const Piece& p = pieces[k];
        double t = p.t_lo + (uu - offsets[k]);
        cplx sv = p.s0 + t * p.dir;
        return std::exp(g.log_g(sv) - scale_shift) * p.dir * p.orient / cplx(0.0, 2.0 * pi);
    };
    auto q = detail::integrate(f, breaks, 0.05 * opt.tol, 1e-16);
    const double scale = std::exp(scale_shift);
    out.value = q.value * scale;
    out.error_estimate = q.error * scale;
    out.panels = q.panels;
    out.converged = q.converged && std::isfinite(out.value.real()) && std::isfinite(out.value.imag());
    return out;
}

MBEval mb_kernel(double x, const SpectralIndex& lambda, const std::vector<int>& delta, const MBOptions& opt)
{
    if (x == 0.0) throw Error(Error::Kind::domain, "mb_kernel: x must be nonzero");
    const int n = lambda.rank();
    if (static_cast<int>(delta.size()) != n) throw Error(Error::Kind::domain, "mb_kernel: parity vector length");
    const int sgn = x > 0 ? 1 : -1;
    const double arg = 2.0 * pi * std::pow(std::abs(x), 1.0 / n);
    MBEval out;
    out.value = 0.0;
    for (const auto& s : SignVector::all(n)) {
        if (s.product() != sgn) continue;
        int c = 1;
        for (int l = 0; l < n; ++l)
            if (s[l] < 0 && (delta[static_cast<std::size_t>(l)] & 1)) c = -c;
        MBEval e = mb_eval(arg, s, lambda, opt);
        out.value += static_cast<double>(c) * e.value;
        out.error_estimate += e.error_estimate;
        out.panels += e.panels;
        out.converged = out.converged && e.converged;
        out.contour = e.contour;
    }
    return out;
}

cplx gamma_factor(cplx s, int delta)
{
    delta &= 1;
    cplx id = delta ? cplx(0.0, 1.0) : cplx(1.0);
    return id * std::exp((0.5 - s) * std::log(pi)) * gamma((s + static_cast<double>(delta)) / 2.0) *
           recip_gamma((1.0 - s + static_cast<double>(delta)) / 2.0);
}

cplx gamma_factor_alt(cplx s, int delta)
{
    delta &= 1;
    cplx trig = delta ? cplx(0.0, 1.0) * std::sin(0.5 * pi * s) : std::cos(0.5 * pi * s);
    return 2.0 * std::exp(-s * std::log(2.0 * pi)) * gamma(s) * trig;
}

}  // namespace besselhr

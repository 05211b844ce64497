#include "besselhr/kernel.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "besselhr/asympt.hpp"
#include "besselhr/mellinbarnes.hpp"
#include "besselhr/parallel.hpp"
#include "besselhr/series.hpp"
#include "quadrature.hpp"

namespace besselhr {

int KernelIndex::delta_sum() const
{
    int s = 0;
    for (int d : delta) s += d & 1;
    return s;
}

void KernelIndex::validate() const
{
    if (lambda.rank() < 1) throw Error(Error::Kind::domain, "kernel index: empty spectral index");
    if (static_cast<int>(delta.size()) != lambda.rank())
        throw Error(Error::Kind::domain, "kernel index: parity vector length differs from rank");
    for (int d : delta)
        if (d != 0 && d != 1) throw Error(Error::Kind::domain, "kernel index: parities must be 0 or 1");
}

cplx kernel_constant(const KernelIndex& idx, int sign)
{
    const int n = idx.rank();
    const double s = (sign < 0 && (idx.delta_sum() & 1)) ? -1.0 : 1.0;
    return s * e(cplx((sign >= 0 ? 1.0 : -1.0) * (n - 1) / 8.0)) / std::sqrt(double(n));
}

KernelMethod parse_kernel_method(const std::string& s)
{
    if (s == "auto") return KernelMethod::automatic;
    if (s == "series") return KernelMethod::series;
    if (s == "mb") return KernelMethod::mb;
    if (s == "asympt") return KernelMethod::asympt;
    throw Error(Error::Kind::domain, "unknown method '" + s + "'");
}

std::string to_string(KernelMethod m)
{
    switch (m) {
    case KernelMethod::automatic: return "auto";
    case KernelMethod::series: return "series";
    case KernelMethod::mb: return "mb";
    case KernelMethod::asympt: return "asympt";
    }
    return "auto";
}

namespace {

struct Piece {
    cplx value;
    double error = 0.0;
    const char* method = "";
};

// largest argument the contour quadrature is used for
constexpr double mb_domain = 100.0;

Piece eval_piece(double z, const SignVector& s, const SpectralIndex& lambda, KernelMethod m, double tol)
{
    const SurfacePoint p = SurfacePoint::from_real(z);
    switch (m) {
    case KernelMethod::series: {
        SeriesEval r = j_function(p, s, lambda, tol);
        return {r.value, r.error_estimate, "series"};
    }
    case KernelMethod::asympt: {
        AsymptoticEval r = j_varsigma_asymptotic(p, s, lambda);
        return {r.value, r.error_estimate, "asympt"};
    }
    case KernelMethod::mb: {
        MBOptions o;
        o.tol = std::max(tol, 1e-14);
        MBEval r = mb_eval(z, s, lambda, o);
        if (!r.converged) throw Error(Error::Kind::nonconvergence, "mellin-barnes quadrature did not converge");
        return {r.value, r.error_estimate, "mb"};
    }
    case KernelMethod::automatic: break;
    }
    if (z > validity_floor(lambda)) {
        AsymptoticEval a = j_varsigma_asymptotic(p, s, lambda);
        if (a.error_estimate <= tol * std::abs(a.value)) return {a.value, a.error_estimate, "asympt"};
        try {
            SeriesEval r = j_function(p, s, lambda, tol);
            if (r.error_estimate < a.error_estimate) return {r.value, r.error_estimate, "series"};
        } catch (const Error& e) {
            if (e.kind() != Error::Kind::overflow) throw;
        }
        return {a.value, a.error_estimate, "asympt"};
    }
    SeriesEval r = j_function(p, s, lambda, tol);
    if (r.error_estimate <= tol * std::abs(r.value) || z > mb_domain) return {r.value, r.error_estimate, "series"};
    MBOptions o;
    o.tol = std::max(tol, 1e-14);
    MBEval b = mb_eval(z, s, lambda, o);
    if (b.converged && b.error_estimate < r.error_estimate) return {b.value, b.error_estimate, "mb"};
    return {r.value, r.error_estimate, "series"};
}

KernelEval signed_sum(double x, const KernelIndex& idx, KernelMethod method, double tol)
{
    const int n = idx.rank();
    const int sgn = x > 0 ? 1 : -1;
    const double z = 2.0 * pi * std::pow(std::abs(x), 1.0 / n);
    KernelEval out;
    std::set<std::string> used;
    double max_term = 0.0;
    for (const auto& s : SignVector::all(n)) {
        if (s.product() != sgn) continue;
        double c = 1.0;
        for (int l = 0; l < n; ++l)
            if (s[l] < 0 && (idx.delta[static_cast<std::size_t>(l)] & 1)) c = -c;
        Piece p = eval_piece(z, s, idx.lambda, method, tol);
        out.value += c * p.value;
        out.error_estimate += p.error;
        max_term = std::max(max_term, std::abs(p.value));
        used.insert(p.method);
    }
    for (const auto& m : used) out.method += (out.method.empty() ? "" : "+") + m;
    const double av = std::abs(out.value);
    out.cancellation = av > 0.0 ? max_term / av : (max_term > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    return out;
}

}  // namespace

KernelEval bessel_kernel(double x, const KernelIndex& idx, KernelMethod method, double tol)
{
    idx.validate();
    if (x == 0.0 || !std::isfinite(x)) throw Error(Error::Kind::domain, "bessel_kernel: x must be finite and nonzero");
    KernelEval r = signed_sum(x, idx, method, tol);
    const double z = 2.0 * pi * std::pow(std::abs(x), 1.0 / idx.rank());
    if (method == KernelMethod::automatic && r.cancellation > kernel_cancellation_limit && z <= mb_domain) {
        KernelEval m = signed_sum(x, idx, KernelMethod::mb, tol);
        if (m.error_estimate <= r.error_estimate || !std::isfinite(r.error_estimate)) return m;
    }
    return r;
}

KernelAsymptotics kernel_asymptotics(double x, const KernelIndex& idx, int M)
{
    idx.validate();
    if (!(x > 0.0)) throw Error(Error::Kind::domain, "kernel_asymptotics: x must be positive");
    if (M < 0) throw Error(Error::Kind::domain, "kernel_asymptotics: negative term count");
    const int n = idx.rank();
    const SpectralIndex& lambda = idx.lambda;
    const SurfacePoint z = SurfacePoint::from_real(2.0 * pi * x);
    AsymptOptions fixed;
    fixed.fixed_terms = M;
    const double scale = std::pow(2.0 * pi, 0.5 * (n - 1));

    KernelAsymptotics out;
    out.x = x;
    out.terms = M;
    auto term = [&](int sign) {
        KernelAsymptoticTerm t;
        t.sign = sign;
        t.coefficient = kernel_constant(idx, sign);
        AsymptoticEval w = w_function(z, lambda, sign, 0, fixed);
        t.w_value = scale * w.value;
        t.value = t.coefficient * e(cplx(sign * n * x)) * t.w_value;
        t.error_estimate = std::abs(t.coefficient) * scale * w.error_estimate;
        return t;
    };
    out.plus.push_back(term(1));
    if (n % 2 == 0)
        out.plus.push_back(term(-1));
    else
        out.minus.push_back(term(-1));
    for (const auto& t : out.plus) out.main_plus += t.value;
    for (const auto& t : out.minus) out.main_minus += t.value;

    for (const auto& s : SignVector::all(n)) {
        if (s.all_equal()) continue;
        AsymptoticEval r = j_varsigma_asymptotic(z, s, lambda);
        const double size = std::abs(r.value) + r.error_estimate;
        (s.product() > 0 ? out.remainder_plus : out.remainder_minus) += size;
    }
    return out;
}

// ---- weights

struct WeightFunction::Spline {
    boost::math::interpolators::cardinal_cubic_b_spline<double> s;
    double lo, hi;
};

WeightFunction WeightFunction::gaussian_log(int eta, double mu, double width)
{
    if (!(width > 0.0)) throw Error(Error::Kind::domain, "weight: width must be positive");
    WeightFunction w;
    w.kind_ = Kind::gaussian_log;
    w.eta_ = eta & 1;
    w.mu_ = mu;
    w.width_ = width;
    return w;
}

WeightFunction WeightFunction::samples(int eta, double u0, double du, std::vector<double> values)
{
    if (values.size() < 4 || !(du > 0.0)) throw Error(Error::Kind::domain, "weight: need at least 4 samples");
    WeightFunction w;
    w.kind_ = Kind::samples;
    w.eta_ = eta & 1;
    w.u0_ = u0;
    w.du_ = du;
    w.values_ = std::move(values);
    const double hi = u0 + du * static_cast<double>(w.values_.size() - 1);
    w.spline_ = std::make_shared<const Spline>(
        Spline{boost::math::interpolators::cardinal_cubic_b_spline<double>(w.values_.begin(), w.values_.end(), u0, du),
               u0, hi});
    w.mu_ = 0.5 * (u0 + hi);
    w.width_ = 0.25 * (hi - u0);
    return w;
}

WeightFunction WeightFunction::parse(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    if (head != "gaussian-log") throw Error(Error::Kind::domain, "weight: unknown kind '" + head + "'");
    int eta = 0;
    double mu = 0.0, width = 0.5;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(Error::Kind::domain, "weight: expected key=value in '" + item + "'");
            const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
            try {
                if (k == "eta" || k == "η")
                    eta = std::stoi(v);
                else if (k == "mu")
                    mu = std::stod(v);
                else if (k == "width" || k == "w")
                    width = std::stod(v);
                else
                    throw Error(Error::Kind::domain, "weight: unknown key '" + k + "'");
            } catch (const std::logic_error&) {
                throw Error(Error::Kind::domain, "weight: bad value '" + v + "'");
            }
        }
    }
    return gaussian_log(eta, mu, width);
}

double WeightFunction::profile(double u) const
{
    if (kind_ == Kind::gaussian_log) {
        const double t = (u - mu_) / width_;
        return std::exp(-0.5 * t * t);
    }
    if (u < spline_->lo || u > spline_->hi) return 0.0;
    return spline_->s(u);
}

double WeightFunction::operator()(double y) const
{
    if (y == 0.0) return 0.0;
    const double v = profile(std::log(std::abs(y)));
    return (y < 0 && eta_) ? -v : v;
}

std::pair<double, double> WeightFunction::support() const
{
    if (kind_ == Kind::gaussian_log) {
        const double L = width_ * std::sqrt(2.0 * std::log(1e18));
        return {mu_ - L, mu_ + L};
    }
    return {spline_->lo, spline_->hi};
}

bool WeightFunction::decays() const
{
    if (kind_ == Kind::gaussian_log) return true;
    double peak = 0.0;
    for (double v : values_) peak = std::max(peak, std::abs(v));
    return std::abs(values_.front()) <= 1e-12 * peak && std::abs(values_.back()) <= 1e-12 * peak;
}

cplx WeightFunction::mellin(cplx s) const
{
    if (kind_ == Kind::gaussian_log)
        return 2.0 * std::sqrt(2.0 * pi) * width_ * std::exp(mu_ * s + 0.5 * width_ * width_ * s * s);
    auto [a, b] = support();
    std::vector<double> br;
    const int k = std::max(8, static_cast<int>((b - a) / du_));
    for (int i = 0; i <= k; ++i) br.push_back(a + (b - a) * i / k);
    auto r = detail::integrate([&](double u) { return cplx(profile(u)) * std::exp(u * s); }, br, 1e-13, 0.0);
    return 2.0 * r.value;
}

std::string WeightFunction::str() const
{
    std::ostringstream os;
    os.precision(17);
    if (kind_ == Kind::gaussian_log)
        os << "gaussian-log:eta=" << eta_ << ",mu=" << mu_ << ",width=" << width_;
    else
        os << "samples:eta=" << eta_ << ",u0=" << u0_ << ",du=" << du_ << ",count=" << values_.size();
    return os.str();
}

// ---- transforms

namespace {

struct LogGridKernel {
    std::vector<double> a, b;     // panel ends in v = log t
    std::vector<double> nodes;    // 15 per panel, GK order
    std::vector<cplx> K;          // K_eta(e^v) e^v at the nodes
    std::vector<double> K_err;
    int evaluations = 0;
    double end = 0.0;             // right end of the last panel
};

double kernel_phase_rate(int n, double v)
{
    return 2.0 * pi * std::exp(v / n);
}

// Panels in v = log t whose width keeps the kernel phase change near `phase`; extend() appends
// panels up to a new right end and evaluates the kernel at the new nodes only.
void extend_log_grid(LogGridKernel& g, const KernelIndex& idx, int eta, double v_hi, double h0,
                     const TransformOptions& opt)
{
    const int n = idx.rank();
    const std::size_t first_panel = g.a.size();
    double v = g.end;
    while (v < v_hi) {
        const double freq = kernel_phase_rate(n, v + h0);
        double h = std::min(h0, opt.panel_phase / freq);
        if (v + h > v_hi) h = v_hi - v;
        g.a.push_back(v);
        g.b.push_back(v + h);
        v += h;
    }
    g.end = std::max(g.end, v);
    const auto& r = detail::GK15Rule::get();
    const std::size_t first_node = g.nodes.size();
    for (std::size_t p = first_panel; p < g.a.size(); ++p) {
        const double c = 0.5 * (g.a[p] + g.b[p]), h = 0.5 * (g.b[p] - g.a[p]);
        for (std::size_t i = 0; i < r.x.size(); ++i) {
            g.nodes.push_back(c - h * r.x[i]);
            if (r.x[i] != 0.0) g.nodes.push_back(c + h * r.x[i]);
        }
    }
    g.K.resize(g.nodes.size());
    g.K_err.resize(g.nodes.size());
    const double par = eta ? -1.0 : 1.0;
    parallel_for(
        g.nodes.size() - first_node,
        [&](std::size_t j) {
            const std::size_t i = first_node + j;
            const double t = std::exp(g.nodes[i]);
            KernelEval kp = bessel_kernel(t, idx, opt.method, opt.tol);
            KernelEval km = bessel_kernel(-t, idx, opt.method, opt.tol);
            g.K[i] = (kp.value + par * km.value) * t;
            g.K_err[i] = (kp.error_estimate + km.error_estimate) * t;
        },
        opt.threads > 0 ? opt.threads : thread_count());
    g.evaluations += static_cast<int>(2 * (g.nodes.size() - first_node));
}

LogGridKernel build_log_grid(const KernelIndex& idx, int eta, double v_lo, double v_hi, double h0,
                             const TransformOptions& opt)
{
    LogGridKernel g;
    g.end = v_lo;
    extend_log_grid(g, idx, eta, v_hi, h0, opt);
    return g;
}

// (1/x) int f(v - u) K(e^v) e^v dv at u = log x, over the panels meeting the weight's support
std::pair<cplx, double> convolve(const LogGridKernel& g, const WeightFunction& w, double u)
{
    const auto& r = detail::GK15Rule::get();
    const auto [sa, sb] = w.support();
    const auto first = std::upper_bound(g.b.begin(), g.b.end(), u + sa) - g.b.begin();
    cplx total = 0.0;
    double err = 0.0;
    for (std::size_t p = static_cast<std::size_t>(first); p < g.a.size() && g.a[p] < u + sb; ++p) {
        const double h = 0.5 * (g.b[p] - g.a[p]);
        std::size_t k = p * 15;
        cplx kr = 0.0, gr = 0.0;
        double abs_sum = 0.0, kerr = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i) {
            const int m = r.x[i] == 0.0 ? 1 : 2;
            cplx f_sum = 0.0;
            for (int j = 0; j < m; ++j, ++k) {
                const double f = w.profile(g.nodes[k] - u);
                f_sum += f * g.K[k];
                abs_sum += r.wk[i] * std::abs(f * g.K[k]);
                kerr += r.wk[i] * std::abs(f) * g.K_err[k];
            }
            kr += r.wk[i] * f_sum;
            gr += r.wg[i] * f_sum;
        }
        kr *= h;
        gr *= h;
        abs_sum *= h;
        double diff = std::abs(kr - gr);
        if (abs_sum > 0.0 && diff > 0.0) diff = abs_sum * std::min(1.0, std::pow(200.0 * diff / abs_sum, 1.5));
        total += kr;
        err += diff + h * kerr;
    }
    const double x = std::exp(u);
    return {total / x, err / x};
}

}  // namespace

std::vector<TransformPoint> hankel_transform(const WeightFunction& w, const KernelIndex& idx,
                                             const std::vector<double>& x_grid, const TransformOptions& opt)
{
    idx.validate();
    if (!w.decays()) throw Error(Error::Kind::domain, "hankel_transform: weight does not decay at the grid ends");
    std::vector<TransformPoint> out;
    if (x_grid.empty()) return out;
    double u_lo = std::numeric_limits<double>::infinity(), u_hi = -u_lo;
    for (double x : x_grid) {
        if (x == 0.0 || !std::isfinite(x)) throw Error(Error::Kind::domain, "hankel_transform: x must be nonzero");
        u_lo = std::min(u_lo, std::log(std::abs(x)));
        u_hi = std::max(u_hi, std::log(std::abs(x)));
    }
    const auto [sa, sb] = w.support();
    const double h0 = std::min(0.5, (sb - sa) / 32.0);
    LogGridKernel g = build_log_grid(idx, w.eta(), u_lo + sa, u_hi + sb, h0, opt);
    for (double x : x_grid) {
        auto [v, e] = convolve(g, w, std::log(std::abs(x)));
        if (x < 0 && w.eta()) v = -v;
        out.push_back({x, v, e});
    }
    return out;
}

cplx signed_mellin(const std::function<cplx(double)>& f, int eta, cplx s, double u_min, double u_max, double tol)
{
    if (!(u_max > u_min)) throw Error(Error::Kind::domain, "signed_mellin: empty range");
    const double par = (eta & 1) ? -1.0 : 1.0;
    std::vector<double> br;
    const int k = std::max(16, static_cast<int>(2.0 * (u_max - u_min)));
    for (int i = 0; i <= k; ++i) br.push_back(u_min + (u_max - u_min) * i / k);
    auto r = detail::integrate(
        [&](double u) {
            const double x = std::exp(u);
            return (f(x) + par * f(-x)) * std::exp(u * s);
        },
        br, tol, 0.0);
    return r.value;
}

cplx signed_mellin_inverse(const std::function<cplx(cplx)>& F, int eta, double x, double sigma, double t_max,
                           double tol)
{
    if (x == 0.0) throw Error(Error::Kind::domain, "signed_mellin_inverse: x must be nonzero");
    const double lx = std::log(std::abs(x));
    std::vector<double> br;
    const int k = std::max(16, static_cast<int>(2.0 * t_max * std::max(1.0, std::abs(lx)) / pi));
    for (int i = 0; i <= k; ++i) br.push_back(-t_max + 2.0 * t_max * i / k);
    auto r = detail::integrate(
        [&](double t) {
            const cplx s(sigma, t);
            return F(s) * std::exp(-s * lx);
        },
        br, tol, 0.0);
    cplx v = r.value / (4.0 * pi);
    return (x < 0 && (eta & 1)) ? -v : v;
}

FunctionalEquationReport functional_equation_check(const WeightFunction& w, const KernelIndex& idx,
                                                   const std::vector<cplx>& s_points, const TransformOptions& opt)
{
    idx.validate();
    if (s_points.empty()) return {};
    const int n = idx.rank();
    const int eta = w.eta();
    double max_re_lambda = -std::numeric_limits<double>::infinity();
    for (const cplx& l : idx.lambda.lambda()) max_re_lambda = std::max(max_re_lambda, l.real());
    double min_re_s = std::numeric_limits<double>::infinity();
    for (const cplx& s : s_points) min_re_s = std::min(min_re_s, s.real());
    if (min_re_s <= max_re_lambda)
        throw Error(Error::Kind::domain, "functional_equation_check: need Re s > max Re lambda");

    // Upsilon(x) ~ x^{-lambda_l} at 0; at infinity it decays, and the right end grows until the tail is negligible
    const double digits = std::log(1.0 / std::max(opt.tol, 1e-15)) + 5.0;
    const auto [sa, sb] = w.support();
    const double centre = 0.5 * (sa + sb), spread = 0.5 * (sb - sa);
    const double u_lo = -digits / (min_re_s - max_re_lambda);
    const double w_eff = spread / std::sqrt(2.0 * std::log(1e18));
    double max_re_s = -std::numeric_limits<double>::infinity();
    for (const cplx& s : s_points) max_re_s = std::max(max_re_s, s.real());
    // x Upsilon(x) is a correlation with the profile, so in u it carries no frequency the profile lacks
    const double omega_max = std::sqrt(2.0 * digits) / w_eff;

    const auto& r = detail::GK15Rule::get();
    const double h0 = std::min(0.5, (sb - sa) / 32.0);
    std::vector<double> ua, ub, unodes;
    std::vector<cplx> ups;
    std::vector<double> ups_err;
    LogGridKernel g;
    g.end = u_lo + sa;
    double u_end = u_lo, peak = 0.0, tail = std::numeric_limits<double>::infinity();
    const double u_cap = centre + 60.0;
    while (u_end < u_cap) {
        const double target = u_end + 1.0;
        extend_log_grid(g, idx, eta, target + sb, h0, opt);
        double chunk_max = 0.0, chunk_err = 0.0;
        while (u_end < target) {
            double h = std::min(0.5, opt.panel_phase / omega_max);
            h = std::min(h, target - u_end);
            ua.push_back(u_end);
            ub.push_back(u_end + h);
            const double c = u_end + 0.5 * h, hh = 0.5 * h;
            for (std::size_t i = 0; i < r.x.size(); ++i) {
                const int m = r.x[i] == 0.0 ? 1 : 2;
                for (int j = 0; j < m; ++j) {
                    const double u = j == 0 ? c - hh * r.x[i] : c + hh * r.x[i];
                    auto [v, e] = convolve(g, w, u);
                    unodes.push_back(u);
                    ups.push_back(v);
                    ups_err.push_back(e);
                    const double size = std::abs(v) * std::exp(u * max_re_s);
                    chunk_max = std::max(chunk_max, size);
                    chunk_err = std::max(chunk_err, e * std::exp(u * max_re_s));
                    peak = std::max(peak, size);
                }
            }
            u_end += h;
        }
        tail = chunk_max;
        // stop once the tail is negligible or has sunk into the quadrature noise
        if (u_end > centre && chunk_max <= std::max(1e-3 * opt.tol * peak, 4.0 * chunk_err)) break;
    }
    const double u_hi = u_end;

    FunctionalEquationReport rep;
    rep.u_min = u_lo;
    rep.u_max = u_hi;
    rep.kernel_evaluations = g.evaluations;
    for (const cplx& s : s_points) {
        cplx lhs = 0.0;
        double abs_err = 0.0;
        std::size_t k = 0;
        for (std::size_t p = 0; p < ua.size(); ++p) {
            const double h = 0.5 * (ub[p] - ua[p]);
            cplx kr = 0.0;
            for (std::size_t i = 0; i < r.x.size(); ++i) {
                const int m = r.x[i] == 0.0 ? 1 : 2;
                for (int j = 0; j < m; ++j, ++k) {
                    const cplx es = std::exp(unodes[k] * s);
                    kr += r.wk[i] * ups[k] * es;
                    abs_err += h * r.wk[i] * ups_err[k] * std::abs(es);
                }
            }
            lhs += h * kr;
        }
        lhs *= 2.0;
        abs_err = 2.0 * abs_err + 2.0 * tail;
        cplx rhs = w.mellin(1.0 - s);
        for (int l = 0; l < n; ++l)
            rhs *= gamma_factor(s - idx.lambda[l], idx.delta[static_cast<std::size_t>(l)] + eta);
        FunctionalEquationPoint pt;
        pt.s = s;
        pt.lhs = lhs;
        pt.rhs = rhs;
        pt.rel_error = std::abs(lhs - rhs) / std::abs(rhs);
        pt.error_estimate = abs_err / std::abs(rhs);
        rep.max_rel_error = std::max(rep.max_rel_error, pt.rel_error);
        rep.points.push_back(pt);
    }
    return rep;
}

}  // namespace besselhr

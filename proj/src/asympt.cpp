#include "besselhr/asympt.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "besselhr/coeffs.hpp"
#include "besselhr/series.hpp"

namespace besselhr {

namespace {

void check_rank(const SpectralIndex& lambda, int n, const char* who)
{
    if (lambda.rank() != n) throw Error(Error::Kind::domain, std::string(who) + ": rank mismatch");
}

struct BKey {
    int n;
    long xi_index;
    std::vector<std::uint64_t> bits;
    bool operator<(const BKey& o) const
    {
        if (n != o.n) return n < o.n;
        if (xi_index != o.xi_index) return xi_index < o.xi_index;
        return bits < o.bits;
    }
};

std::uint64_t bits_of(double d)
{
    std::uint64_t u;
    std::memcpy(&u, &d, sizeof u);
    return u;
}

std::shared_ptr<const BTable> cached_b_table(const SpectralIndex& lambda, const RootOfUnity& xi, int M)
{
    static std::mutex mu;
    static std::map<BKey, std::shared_ptr<const BTable>> memo;
    // B_m(lambda; xi) only depends on xi modulo 2n
    const long r = ((xi.index % (2 * xi.n)) + 2 * xi.n) % (2 * xi.n);
    BKey key{lambda.rank(), r, {}};
    for (const cplx& c : lambda.lambda()) {
        key.bits.push_back(bits_of(c.real()));
        key.bits.push_back(bits_of(c.imag()));
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end() && static_cast<int>(it->second->B.size()) > M) return it->second;
    }
    auto table = std::make_shared<const BTable>(build_b_table(lambda, RootOfUnity{xi.n, r}, M));
    std::lock_guard<std::mutex> lock(mu);
    if (memo.size() > 4096) memo.clear();
    memo[key] = table;
    return table;
}

// Superasymptotic sum of c_m z^{-m}, truncated before the smallest term.
struct Truncated {
    cplx sum;
    int terms = 0;
    double error = 0.0;
};

Truncated truncate(const std::vector<cplx>& c, const SurfacePoint& z, int m_cap, int fixed)
{
    const int top = std::min<int>(fixed >= 0 ? fixed : m_cap, static_cast<int>(c.size()) - 1);
    std::vector<cplx> t(static_cast<std::size_t>(top + 1));
    for (int m = 0; m <= top; ++m) t[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m)] * z.pow(cplx(-m));
    int best = top;
    double best_abs = std::abs(t[static_cast<std::size_t>(top)]);
    if (fixed < 0) {
        for (int m = 1; m <= top; ++m) {
            double a = std::abs(t[static_cast<std::size_t>(m)]);
            if (a < best_abs) {
                best_abs = a;
                best = m;
            }
        }
    }
    Truncated r;
    double abs_sum = 0.0;
    for (int m = 0; m < best; ++m) {
        r.sum += t[static_cast<std::size_t>(m)];
        abs_sum += std::abs(t[static_cast<std::size_t>(m)]);
    }
    r.terms = best;
    r.error = 2.0 * best_abs + 8.0 * std::numeric_limits<double>::epsilon() * abs_sum;
    return r;
}

void check_domain(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi, const AsymptOptions& opt,
                  AsymptoticEval& out)
{
    if (xi.n != lambda.rank()) throw Error(Error::Kind::domain, "asymptotic: root of unity order mismatch");
    if (opt.m_cap < 1 || opt.m_cap >= b_max_terms) throw Error(Error::Kind::domain, "asymptotic: m_cap out of range");
    if (opt.fixed_terms >= b_max_terms) throw Error(Error::Kind::domain, "asymptotic: too many fixed terms");
    out.in_sector = in_sector(z, xi, opt.theta);
    out.above_floor = z.modulus() > validity_floor(lambda, opt);
    if (!opt.enforce) return;
    if (!out.above_floor) throw Error(Error::Kind::below_floor, "asymptotic: |z| below the validity floor");
    if (!out.in_sector) throw Error(Error::Kind::out_of_sector, "asymptotic: z outside the sector of validity");
}

}  // namespace

double validity_floor(const SpectralIndex& lambda, const AsymptOptions& opt)
{
    const double e = lambda.frak_e();
    return opt.floor_c * e * e;
}

double sector_margin(const SurfacePoint& z, const RootOfUnity& xi, double theta)
{
    const int n = xi.n;
    return pi + pi / n - theta - std::abs(z.argument - (pi / 2 - xi.argument()));
}

bool in_sector(const SurfacePoint& z, const RootOfUnity& xi, double theta)
{
    return sector_margin(z, xi, theta) > 0.0;
}

AsymptoticEval second_kind(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi,
                           const AsymptOptions& opt)
{
    AsymptoticEval out;
    check_domain(z, lambda, xi, opt, out);
    const int n = lambda.rank();
    auto table = cached_b_table(lambda, xi, std::max(opt.m_cap, opt.fixed_terms) + 1);
    Truncated t = truncate(table->B, z, opt.m_cap, opt.fixed_terms);
    const cplx pref = std::exp(cplx(0, n) * xi.value() * z.value() - 0.5 * (n - 1) * z.log());
    out.value = pref * t.sum;
    out.truncation_m = t.terms;
    // the phase of exp(i n xi z) carries an absolute error of order n |z| eps
    out.error_estimate = std::abs(pref) * t.error +
                         std::abs(out.value) * std::numeric_limits<double>::epsilon() * n * (z.modulus() + 1.0);
    return out;
}

AsymptoticEval h_bessel(const SurfacePoint& z, const SpectralIndex& lambda, int sign, const AsymptOptions& opt)
{
    const int n = lambda.rank();
    const RootOfUnity xi{n, sign >= 0 ? 0 : n};
    AsymptoticEval r = second_kind(z, lambda, xi, opt);
    const double half = 0.5 * (n - 1);
    const cplx f = std::pow(2 * pi, half) * std::exp(cplx(0, (sign >= 0 ? 1 : -1) * pi / 2 * half)) / std::sqrt(double(n));
    r.value *= f;
    r.error_estimate *= std::abs(f);
    return r;
}

AsymptoticEval w_function(const SurfacePoint& z, const SpectralIndex& lambda, int sign, int deriv,
                          const AsymptOptions& opt)
{
    const int n = lambda.rank();
    if (deriv < 0) throw Error(Error::Kind::domain, "w_function: negative derivative order");
    const RootOfUnity xi{n, sign >= 0 ? 0 : n};
    AsymptoticEval out;
    check_domain(z, lambda, xi, opt, out);
    auto table = cached_b_table(lambda, xi, std::max(opt.m_cap, opt.fixed_terms) + 1);
    std::vector<cplx> c(table->B.size());
    const double half = 0.5 * (n - 1);
    for (std::size_t m = 0; m < c.size(); ++m) c[m] = table->B[m] * falling(cplx(-double(m) - half), deriv);
    Truncated t = truncate(c, z, opt.m_cap, opt.fixed_terms);
    const cplx pref = z.pow(cplx(-half - deriv));
    out.value = pref * t.sum;
    out.truncation_m = t.terms;
    out.error_estimate = std::abs(pref) * t.error;
    return out;
}

AsymptoticEval j_varsigma_asymptotic(const SurfacePoint& z, const SignVector& s, const SpectralIndex& lambda,
                                     const AsymptOptions& opt)
{
    const int n = s.rank();
    check_rank(lambda, n, "j_varsigma_asymptotic");
    AsymptoticEval r = second_kind(z, lambda, s.xi(), opt);
    const cplx f = std::pow(2 * pi, 0.5 * (n - 1)) * connection_constant(s, lambda) / std::sqrt(double(n));
    r.value *= f;
    r.error_estimate *= std::abs(f);
    return r;
}

AsymptoticEval rotate_second_kind(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi,
                                  const AsymptOptions& opt)
{
    const int n = lambda.rank();
    if (xi.n != n) throw Error(Error::Kind::domain, "rotate_second_kind: root of unity order mismatch");
    const RootOfUnity base{n, xi.power_sign() > 0 ? 0 : n};
    const double alpha = xi.argument() - base.argument();
    AsymptoticEval r = second_kind(z.rotated(alpha), lambda, base, opt);
    const cplx f = std::exp(cplx(0, 0.5 * (n - 1) * alpha));
    r.value *= f;
    return r;
}

std::vector<std::vector<cplx>> forward_connection_matrix(const SpectralIndex& lambda, int a)
{
    const int n = lambda.rank();
    const auto& lam = lambda.lambda();
    std::vector<std::vector<cplx>> M(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
    for (int j = 1; j <= n; ++j) {
        const double arg = pi * (2 * j + a - 2) / n;
        // sqrt(n) (-pi i xi / 2)^{(n-1)/2}
        const cplx pre = std::sqrt(double(n)) * std::pow(pi / 2, 0.5 * (n - 1)) *
                         std::exp(cplx(0, 0.5 * (n - 1) * (arg - pi / 2)));
        for (int l = 0; l < n; ++l) {
            cplx s = 1.0;
            for (int k = 0; k < n; ++k)
                if (k != l) s *= sin_pi(lam[static_cast<std::size_t>(l)] - lam[static_cast<std::size_t>(k)]);
            if (std::abs(s) == 0.0) throw Error(Error::Kind::degenerate, "connection matrix: non-generic index");
            // (i conj xi)^{n lambda_l}
            const cplx phase = std::exp(cplx(0, pi / 2 - arg) * double(n) * lam[static_cast<std::size_t>(l)]);
            M[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)] = pre * phase / s;
        }
    }
    return M;
}

std::vector<std::vector<cplx>> inverse_connection_matrix(const SpectralIndex& lambda, int a)
{
    const int n = lambda.rank();
    const auto& lam = lambda.lambda();
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) x[static_cast<std::size_t>(l)] = e(-lam[static_cast<std::size_t>(l)]);
    const double half = 0.5 * (n - 1);
    const cplx c = std::sqrt(double(n)) * std::pow(pi / 2, half) * std::exp(cplx(0, -pi * half / 2));
    std::vector<std::vector<cplx>> R(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
    for (int l = 0; l < n; ++l) {
        std::vector<cplx> others;
        cplx tau = 1.0, s = 1.0;
        for (int k = 0; k < n; ++k) {
            if (k == l) continue;
            others.push_back(x[static_cast<std::size_t>(k)]);
            tau *= x[static_cast<std::size_t>(l)] - x[static_cast<std::size_t>(k)];
            s *= sin_pi(lam[static_cast<std::size_t>(l)] - lam[static_cast<std::size_t>(k)]);
        }
        if (std::abs(tau) == 0.0) throw Error(Error::Kind::degenerate, "connection matrix: non-generic index");
        const std::vector<cplx> sigma = elementary_symmetric(others);
        const cplx el = std::exp(cplx(0, -pi * (0.5 * n - a)) * lam[static_cast<std::size_t>(l)]);
        for (int j = 1; j <= n; ++j) {
            const double arg = pi * (2 * j + a - 2) / n;
            const double sgn = ((n - j) % 2 == 0) ? 1.0 : -1.0;
            const cplx dinv = std::exp(cplx(0, -half * arg));
            R[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - 1)] =
                el * s * sgn * sigma[static_cast<std::size_t>(n - j)] / tau * dinv / c;
        }
    }
    return R;
}

std::vector<ComponentEval> inverse_connection(const SurfacePoint& z, const SpectralIndex& lambda, int a,
                                              const AsymptOptions& opt)
{
    const int n = lambda.rank();
    const auto R = inverse_connection_matrix(lambda, a);
    std::vector<AsymptoticEval> J;
    for (int j = 1; j <= n; ++j) J.push_back(second_kind(z, lambda, RootOfUnity{n, 2 * j + a - 2}, opt));
    std::vector<ComponentEval> out(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        auto& o = out[static_cast<std::size_t>(l)];
        for (int j = 0; j < n; ++j) {
            const cplx r = R[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            o.value += r * J[static_cast<std::size_t>(j)].value;
            o.error_estimate += std::abs(r) * J[static_cast<std::size_t>(j)].error_estimate;
        }
    }
    return out;
}

}  // namespace besselhr

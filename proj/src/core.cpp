#include "besselhr/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace besselhr {

SpectralIndex::SpectralIndex(std::vector<cplx> lambda) : lambda_(std::move(lambda))
{
    if (lambda_.empty()) throw Error(Error::Kind::domain, "spectral index must have rank >= 1");
    cplx mean = 0.0;
    for (auto v : lambda_) mean += v;
    mean /= static_cast<double>(lambda_.size());
    for (auto& v : lambda_) v -= mean;
}

double SpectralIndex::frak_e() const
{
    double m = 0.0;
    for (auto v : lambda_) m = std::max(m, std::abs(v));
    return m + 1.0;
}

double SpectralIndex::frak_r() const
{
    double m = 0.0;
    for (auto v : lambda_) m = std::max(m, std::abs(v.real()));
    return m;
}

SpectralIndex SpectralIndex::prototype(int n)
{
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) v[static_cast<std::size_t>(l - 1)] = (0.5 * (n + 1) - l) / n;
    return SpectralIndex(std::move(v));
}

SpectralIndex lambda_of_nu(const NuIndex& nu)
{
    const std::size_t d = nu.nu.size();
    const double n = static_cast<double>(d + 1);
    cplx s = 0.0;
    for (auto v : nu.nu) s += v;
    std::vector<cplx> lam(d + 1);
    for (std::size_t l = 0; l < d; ++l) lam[l] = nu.nu[l] - s / n;
    lam[d] = -s / n;
    return SpectralIndex(std::move(lam));
}

NuIndex nu_of_lambda(const SpectralIndex& lambda)
{
    const auto& lam = lambda.lambda();
    NuIndex r;
    for (std::size_t l = 0; l + 1 < lam.size(); ++l) r.nu.push_back(lam[l] - lam.back());
    return r;
}

double genericity_gap(const SpectralIndex& lambda)
{
    const auto& lam = lambda.lambda();
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < lam.size(); ++l)
        for (std::size_t k = l + 1; k < lam.size(); ++k) {
            cplx d = lam[l] - lam[k];
            gap = std::min(gap, std::abs(d - std::round(d.real())));
        }
    return gap;
}

SurfacePoint SurfacePoint::from_real(double x)
{
    if (!(x > 0.0)) throw Error(Error::Kind::domain, "surface point needs a positive real");
    return {std::log(x), 0.0};
}

SurfacePoint SurfacePoint::polar(double modulus, double argument)
{
    if (!(modulus > 0.0)) throw Error(Error::Kind::domain, "surface point needs a positive modulus");
    return {std::log(modulus), argument};
}

double SurfacePoint::modulus() const { return std::exp(log_modulus); }

cplx SurfacePoint::value() const { return std::polar(std::exp(log_modulus), argument); }

cplx SurfacePoint::pow(cplx a) const { return std::exp(a * log()); }

SurfacePoint SurfacePoint::scaled(double factor) const
{
    return {log_modulus + std::log(factor), argument};
}

cplx RootOfUnity::value() const { return std::polar(1.0, argument()); }

SignVector::SignVector(std::vector<int> signs) : s_(std::move(signs))
{
    if (s_.empty()) throw Error(Error::Kind::domain, "sign vector must be non-empty");
    for (int v : s_)
        if (v != 1 && v != -1) throw Error(Error::Kind::domain, "signs must be +1 or -1");
}

SignVector SignVector::parse(const std::string& s)
{
    std::vector<int> v;
    for (char c : s) {
        if (c == '+') v.push_back(1);
        else if (c == '-') v.push_back(-1);
        else if (c == ',' || c == ' ') continue;
        else throw Error(Error::Kind::domain, "bad sign character in '" + s + "'");
    }
    return SignVector(std::move(v));
}

int SignVector::n_plus() const
{
    return static_cast<int>(std::count(s_.begin(), s_.end(), 1));
}

double SignVector::decay_rate() const { return std::sin(pi * n_plus() / rank()); }

std::string SignVector::str() const
{
    std::string r;
    for (int v : s_) r += v > 0 ? '+' : '-';
    return r;
}

std::vector<SignVector> SignVector::all(int n)
{
    std::vector<SignVector> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l) v[static_cast<std::size_t>(l)] = (mask >> (n - 1 - l)) & 1u ? -1 : 1;
        out.emplace_back(std::move(v));
    }
    return out;
}

cplx e(cplx x) { return std::exp(cplx(0.0, 2.0 * pi) * x); }

bool is_nonpositive_integer(cplx s)
{
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

namespace {

// Lanczos, g = 7, nine coefficients; valid for Re z >= 1/2.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_p[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                 771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
const double half_log_two_pi = 0.91893853320467274178032973640562;

cplx lanczos_log_gamma(cplx z)
{
    z -= 1.0;
    cplx x = lanczos_p[0];
    for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (z + static_cast<double>(i));
    cplx t = z + lanczos_g + 0.5;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx sin_pi(cplx s)
{
    double k = std::round(s.real());
    cplx r = sin(pi * (s - k));
    return std::fmod(std::abs(k), 2.0) == 1.0 ? -r : r;
}

cplx log_sin_pi(cplx s)
{
    double k = std::round(s.real());
    cplx r = s - k;
    cplx odd = std::fmod(std::abs(k), 2.0) == 1.0 ? cplx(0.0, pi) : cplx(0.0);
    const cplx i(0.0, 1.0);
    if (std::abs(r.imag()) < 15.0) return std::log(std::sin(pi * r)) + odd;
    if (r.imag() > 0.0)
        return -i * pi * r + std::log(1.0 - std::exp(2.0 * pi * i * r)) + std::log(0.5 * i) + odd;
    return i * pi * r + std::log(1.0 - std::exp(-2.0 * pi * i * r)) + std::log(-0.5 * i) + odd;
}

cplx log_gamma(cplx s)
{
    if (is_nonpositive_integer(s)) throw Error(Error::Kind::pole, "log_gamma: pole at nonpositive integer");
    if (s.real() >= 0.5) return lanczos_log_gamma(s);
    return std::log(pi) - log_sin_pi(s) - lanczos_log_gamma(1.0 - s);
}

cplx gamma(cplx s)
{
    if (is_nonpositive_integer(s)) throw Error(Error::Kind::pole, "gamma: pole at nonpositive integer");
    if (s.real() >= 0.5) return std::exp(lanczos_log_gamma(s));
    if (std::abs(s.imag()) < 30.0 && s.real() > -150.0)
        return pi / (sin_pi(s) * std::exp(lanczos_log_gamma(1.0 - s)));
    return std::exp(log_gamma(s));
}

cplx recip_gamma(cplx s)
{
    if (is_nonpositive_integer(s)) return 0.0;
    if (s.real() >= 0.5) return std::exp(-lanczos_log_gamma(s));
    if (std::abs(s.imag()) < 30.0 && s.real() > -150.0)
        return sin_pi(s) * std::exp(lanczos_log_gamma(1.0 - s)) / pi;
    return std::exp(-log_gamma(s));
}

cplx rising(cplx a, int m)
{
    cplx r = 1.0;
    for (int k = 0; k < m; ++k) r *= a + static_cast<double>(k);
    return r;
}

cplx falling(cplx a, int m)
{
    cplx r = 1.0;
    for (int k = 0; k < m; ++k) r *= a - static_cast<double>(k);
    return r;
}

std::vector<cplx> elementary_symmetric(const std::vector<cplx>& v)
{
    std::vector<cplx> e(v.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * v[i];
    return e;
}

}  // namespace besselhr

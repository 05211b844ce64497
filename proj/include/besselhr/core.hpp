#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselhr {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Failure categories; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind { domain, pole, overflow, out_of_sector, below_floor, nonconvergence, degenerate };
    Error(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Index with components summing to zero. The mean is subtracted on construction.
class SpectralIndex {
public:
    SpectralIndex() = default;
    explicit SpectralIndex(std::vector<cplx> lambda);

    int rank() const { return static_cast<int>(lambda_.size()); }
    const std::vector<cplx>& lambda() const { return lambda_; }
    cplx operator[](int l) const { return lambda_[static_cast<std::size_t>(l)]; }

    double frak_e() const;  // max |lambda_l| + 1
    double frak_r() const;  // max |Re lambda_l|

    // lambda = (1/n)((n-1)/2, ..., -(n-1)/2)
    static SpectralIndex prototype(int n);

private:
    std::vector<cplx> lambda_;
};

// nu_l = lambda_l - lambda_n, l = 1..n-1
struct NuIndex {
    std::vector<cplx> nu;
};

SpectralIndex lambda_of_nu(const NuIndex& nu);
NuIndex nu_of_lambda(const SpectralIndex& lambda);

double genericity_gap(const SpectralIndex& lambda);

// Point of the universal cover of C\{0}.
struct SurfacePoint {
    double log_modulus = 0.0;
    double argument = 0.0;

    static SurfacePoint from_real(double x);  // x > 0, argument 0
    static SurfacePoint polar(double modulus, double argument);

    double modulus() const;
    cplx value() const;
    cplx log() const { return {log_modulus, argument}; }
    cplx pow(cplx a) const;  // exp(a log z)
    SurfacePoint rotated(double angle) const { return {log_modulus, argument + angle}; }
    SurfacePoint scaled(double factor) const;  // factor > 0
    SurfacePoint operator*(const SurfacePoint& o) const
    {
        return {log_modulus + o.log_modulus, argument + o.argument};
    }
};

// xi = exp(i pi index / n) with the designated argument pi index / n.
struct RootOfUnity {
    int n = 1;
    long index = 0;

    int order() const { return 2 * n; }
    double argument() const { return pi * static_cast<double>(index) / n; }
    cplx value() const;
    // xi^n = +1 or -1
    int power_sign() const { return (index % 2 == 0) ? 1 : -1; }
    SurfacePoint as_point() const { return {0.0, argument()}; }
};

class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<int> signs);
    static SignVector parse(const std::string& s);  // "++-"

    int rank() const { return static_cast<int>(s_.size()); }
    int operator[](int l) const { return s_[static_cast<std::size_t>(l)]; }
    const std::vector<int>& signs() const { return s_; }
    int n_plus() const;
    int n_minus() const { return rank() - n_plus(); }
    int product() const { return n_minus() % 2 == 0 ? 1 : -1; }
    bool all_equal() const { return n_plus() == 0 || n_minus() == 0; }
    RootOfUnity xi() const { return {rank(), n_minus()}; }  // arg xi = n_minus pi / n
    double decay_rate() const;                              // sin(n_plus pi / n)
    std::string str() const;

    // all sign vectors of rank n in lexicographic order (+ before -)
    static std::vector<SignVector> all(int n);

private:
    std::vector<int> s_;
};

// e(x) = exp(2 pi i x)
cplx e(cplx x);

cplx log_gamma(cplx s);
cplx gamma(cplx s);
cplx recip_gamma(cplx s);
// log sin(pi s), any branch, stable for large |Im s|
cplx log_sin_pi(cplx s);
cplx sin_pi(cplx s);

// rising factorial (a)_m and falling factorial [a]_m
cplx rising(cplx a, int m);
cplx falling(cplx a, int m);

// elementary symmetric polynomials e_0..e_k of the values
std::vector<cplx> elementary_symmetric(const std::vector<cplx>& v);

bool is_nonpositive_integer(cplx s);

}  // namespace besselhr

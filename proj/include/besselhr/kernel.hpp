#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "besselhr/core.hpp"

namespace besselhr {

struct KernelIndex {
    SpectralIndex lambda;
    std::vector<int> delta;  // parities, one per component

    int rank() const { return lambda.rank(); }
    int delta_sum() const;
    void validate() const;
};

// c^{+-}(delta) = (+-1)^{sum delta} e(+-(n-1)/8) n^{-1/2}
cplx kernel_constant(const KernelIndex& idx, int sign);

enum class KernelMethod { automatic, series, mb, asympt };
KernelMethod parse_kernel_method(const std::string& s);
std::string to_string(KernelMethod m);

struct KernelEval {
    cplx value;
    double error_estimate = 0.0;
    std::string method;          // series | asympt | mb, or a mix joined by '+'
    double cancellation = 1.0;   // max |term| / |value|
};

inline constexpr double kernel_cancellation_limit = 1e6;

// J_(lambda, delta)(x) = sum over s with prod s = sgn x of prod s_l^{delta_l} J(2 pi |x|^{1/n}; s, lambda)
KernelEval bessel_kernel(double x, const KernelIndex& idx, KernelMethod method = KernelMethod::automatic,
                         double tol = 1e-12);

struct KernelAsymptoticTerm {
    int sign = 1;        // e(+-n x) W^{+-}
    cplx coefficient;    // c^{+-}(delta)
    cplx w_value;        // W^{+-}_lambda(x) with the requested number of terms
    cplx value;          // coefficient * e(+-n x) * w_value
    double error_estimate = 0.0;
};

struct KernelAsymptotics {
    double x = 0.0;
    int terms = 0;
    std::vector<KernelAsymptoticTerm> plus;   // J_(lambda,delta)(x^n)
    std::vector<KernelAsymptoticTerm> minus;  // J_(lambda,delta)(-x^n)
    cplx main_plus, main_minus;
    double remainder_plus = 0.0;   // size of the exponentially small part E^+
    double remainder_minus = 0.0;  // size of E^-
};

// Large-x split of J_(lambda,delta)(+-x^n) into c^{+-} e(+-n x) W^{+-}_lambda(x) and E^{+-};
// W^{+-}_lambda(x) = (2 pi)^{(n-1)/2} W^{+-}(2 pi x) summed over B_0..B_{M-1}.
KernelAsymptotics kernel_asymptotics(double x, const KernelIndex& idx, int M);

class WeightFunction {
public:
    enum class Kind { gaussian_log, samples };

    // sgn(y)^eta exp(-(log|y| - mu)^2 / (2 width^2))
    static WeightFunction gaussian_log(int eta, double mu = 0.0, double width = 0.5);
    // sgn(y)^eta f(log|y|), f given at u0 + k du, cubic spline in between and zero outside
    static WeightFunction samples(int eta, double u0, double du, std::vector<double> values);
    static WeightFunction parse(const std::string& spec);  // "gaussian-log:eta=0,mu=0,width=0.5"

    Kind kind() const { return kind_; }
    int eta() const { return eta_; }
    double mu() const { return mu_; }
    double width() const { return width_; }

    double profile(double u) const;  // f(u)
    double operator()(double y) const;
    // [u_min, u_max] outside which the profile is negligible
    std::pair<double, double> support() const;
    // true when the profile is negligible at both ends of the support
    bool decays() const;
    // M_eta upsilon(s) = 2 int f(u) e^{u s} du
    cplx mellin(cplx s) const;
    std::string str() const;

private:
    Kind kind_ = Kind::gaussian_log;
    int eta_ = 0;
    double mu_ = 0.0, width_ = 0.5;
    double u0_ = 0.0, du_ = 1.0;
    std::vector<double> values_;
    struct Spline;
    std::shared_ptr<const Spline> spline_;
};

struct TransformOptions {
    double tol = 1e-10;
    KernelMethod method = KernelMethod::automatic;
    double panel_phase = 2.0;  // kernel phase change allowed across one quadrature panel
    int threads = 0;           // 0: thread_count()
};

struct TransformPoint {
    double x = 0.0;
    cplx value;
    double error_estimate = 0.0;
};

// Upsilon(x) = int upsilon(y) J_(lambda,delta)(x y) dy on the grid (x != 0)
std::vector<TransformPoint> hankel_transform(const WeightFunction& w, const KernelIndex& idx,
                                             const std::vector<double>& x_grid, const TransformOptions& opt = {});

// M_eta f(s) = int_{R^x} f(x) sgn(x)^eta |x|^{s-1} dx, integrated over log|x| in [u_min, u_max]
cplx signed_mellin(const std::function<cplx(double)>& f, int eta, cplx s, double u_min, double u_max,
                   double tol = 1e-12);
// sgn(x)^eta / (4 pi i) int_{(sigma)} F(s) |x|^{-s} ds, truncated at |Im s| <= t_max
cplx signed_mellin_inverse(const std::function<cplx(cplx)>& F, int eta, double x, double sigma, double t_max,
                           double tol = 1e-12);

struct FunctionalEquationPoint {
    cplx s;
    cplx lhs;  // M_eta Upsilon(s)
    cplx rhs;  // prod G_{delta_l + eta}(s - lambda_l) M_eta upsilon(1 - s)
    double rel_error = 0.0;
    double error_estimate = 0.0;  // quadrature estimate on lhs, relative
};

struct FunctionalEquationReport {
    std::vector<FunctionalEquationPoint> points;
    double u_min = 0.0, u_max = 0.0;
    int kernel_evaluations = 0;
    double max_rel_error = 0.0;
};

// Computes Upsilon on a log grid through hankel_transform-style quadrature and compares its
// signed Mellin transform with the gamma-factor side. Requires Re s > max Re lambda_l.
FunctionalEquationReport functional_equation_check(const WeightFunction& w, const KernelIndex& idx,
                                                   const std::vector<cplx>& s_points,
                                                   const TransformOptions& opt = {});

}  // namespace besselhr

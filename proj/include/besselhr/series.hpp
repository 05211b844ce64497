#pragma once

#include <vector>

#include "besselhr/core.hpp"

namespace besselhr {

inline constexpr double generic_threshold = 1e-4;  // genericity gap below which the limit is taken
inline constexpr double limit_radius = 1e-3;
inline constexpr int limit_points = 8;

struct SeriesEval {
    cplx value;
    int terms_used = 0;
    double tail_bound = 0.0;
    double error_estimate = 0.0;  // tail + rounding (+ limit) bound, absolute
    int digits = 16;              // working precision in decimal digits
    bool limit_used = false;      // non-generic index evaluated as a Cauchy mean
    bool converged = true;
    double cancellation = 1.0;    // sum of |terms| / |value|
};

// J_l(z; sign, lambda), l = 1..n
SeriesEval first_kind(const SurfacePoint& z, int sign, const SpectralIndex& lambda, int l, double tol = 1e-13);

// J(z; varsigma, lambda) through the first-kind connection
SeriesEval j_function(const SurfacePoint& z, const SignVector& s, const SpectralIndex& lambda, double tol = 1e-13);

// J(z; lambda; xi) through the first-kind expansion
SeriesEval second_kind_series(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi,
                              double tol = 1e-13);

// J^{(k)}(x), k = 0..k_max, from shifted indices and the U table
std::vector<SeriesEval> derivatives(double x, const SignVector& s, const SpectralIndex& lambda, int k_max,
                                    double tol = 1e-13);

// J_nu(x; s) with lambda = lambda_of_nu(nu)
SeriesEval j_nu(double x, const SignVector& s, const NuIndex& nu, double tol = 1e-13);

// Closed form at the prototype index lambda = (1/n)((n-1)/2, ..., -(n-1)/2).
cplx prototype_closed_form(double x, const SignVector& s);

// The constant c(s, lambda) relating J(z; s, lambda) to J(z; lambda; xi(s)).
cplx connection_constant(const SignVector& s, const SpectralIndex& lambda);

}  // namespace besselhr

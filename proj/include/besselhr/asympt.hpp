#pragma once

#include <vector>

#include "besselhr/core.hpp"

namespace besselhr {

struct AsymptOptions {
    double theta = pi / 6.0;
    int m_cap = 30;
    double floor_c = 4.0;  // validity floor |z| > floor_c * frak_e^2
    bool enforce = true;   // throw outside the sector or below the floor
    int fixed_terms = -1;  // sum exactly this many terms instead of truncating at the smallest one
};

struct AsymptoticEval {
    cplx value;
    int truncation_m = 0;  // number of terms summed
    double error_estimate = 0.0;
    bool in_sector = true;
    bool above_floor = true;
};

double validity_floor(const SpectralIndex& lambda, const AsymptOptions& opt = {});
// |arg z - arg(i conj xi)| < pi + pi/n - theta
bool in_sector(const SurfacePoint& z, const RootOfUnity& xi, double theta);
double sector_margin(const SurfacePoint& z, const RootOfUnity& xi, double theta);

// J(z; lambda; xi) by the superasymptotically truncated expansion
AsymptoticEval second_kind(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi,
                           const AsymptOptions& opt = {});

// H^{+-}(z; lambda) = n^{-1/2} (+-2 pi i)^{(n-1)/2} J(z; lambda; +-1)
AsymptoticEval h_bessel(const SurfacePoint& z, const SpectralIndex& lambda, int sign, const AsymptOptions& opt = {});

// j-th derivative of W^{+-}(z) = sum_m B_m(lambda; +-1) z^{-m-(n-1)/2}
AsymptoticEval w_function(const SurfacePoint& z, const SpectralIndex& lambda, int sign, int deriv = 0,
                          const AsymptOptions& opt = {});

// J(z; s, lambda) = (2 pi)^{(n-1)/2} c(s, lambda) / sqrt(n) * J(z; lambda; xi(s))
AsymptoticEval j_varsigma_asymptotic(const SurfacePoint& z, const SignVector& s, const SpectralIndex& lambda,
                                     const AsymptOptions& opt = {});

// J(z; lambda; xi) through J(+-xi z; lambda; +-1)
AsymptoticEval rotate_second_kind(const SurfacePoint& z, const SpectralIndex& lambda, const RootOfUnity& xi,
                                  const AsymptOptions& opt = {});

// Coefficients M[j][l] with J(z; lambda; xi_j) = sum_l M[j][l] J_l(z; (-1)^a, lambda),
// xi_j = exp(pi i (2j + a - 2) / n), j = 1..n.
std::vector<std::vector<cplx>> forward_connection_matrix(const SpectralIndex& lambda, int a);
// Its inverse from the Vandermonde inverse entries (-1)^{n-j} sigma_{l,n-j} / tau_l.
std::vector<std::vector<cplx>> inverse_connection_matrix(const SpectralIndex& lambda, int a);

struct ComponentEval {
    cplx value;
    double error_estimate = 0.0;
};

// J_l(z; (-1)^a, lambda), l = 1..n, rebuilt from the n second-kind expansions
std::vector<ComponentEval> inverse_connection(const SurfacePoint& z, const SpectralIndex& lambda, int a,
                                              const AsymptOptions& opt = {});

}  // namespace besselhr

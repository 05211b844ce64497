#pragma once

#include <vector>

#include "besselhr/core.hpp"

namespace besselhr {

struct Contour {
    double sigma0 = 0.0;      // real part of the vertical piece
    double bend_height = 0.0; // |Im s| where the ray leaves the vertical line
    double bend_angle = 0.0;  // angle of the ray measured from the vertical
    double t_max = 0.0;       // far end of the vertical piece
    double r_max = 0.0;       // far end of the ray
    bool bent = false;
};

struct MBOptions {
    double tol = 1e-12;
    double sigma_shift = 0.0;  // added to the default sigma0
    double bend_scale = 1.0;   // multiplies the default bend height
};

struct MBEval {
    cplx value;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = true;
    Contour contour;
};

MBEval mb_eval(double x, const SignVector& s, const SpectralIndex& lambda, const MBOptions& opt = {});

// J_(lambda, delta)(x) from the signed sum of Mellin-Barnes integrals.
MBEval mb_kernel(double x, const SpectralIndex& lambda, const std::vector<int>& delta, const MBOptions& opt = {});

// G_delta(s) = i^delta pi^{1/2-s} Gamma((s+delta)/2) / Gamma((1-s+delta)/2)
cplx gamma_factor(cplx s, int delta);
// 2 (2 pi)^{-s} Gamma(s) cos(pi s / 2), or the sine variant for delta = 1
cplx gamma_factor_alt(cplx s, int delta);

}  // namespace besselhr

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.141592653589793238462643383279502884;

// Prototype index lambda_l = (n + 1 - 2l) / (2n). Gauss multiplication collapses the gamma product
// to one Gamma, so J = (2 pi)^{(n-1)/2} n^{-1/2} x^{-(n-1)/2} e(-sum s_l lambda_l / 4 + (n_+ - n_-)(n-1)/(8n))
// * exp(-n x e^{-pi i (n_+ - n_-) / (2n)}).
inline cplx prototype_j(double x, const std::string& signs)
{
    const int n = static_cast<int>(signs.size());
    double sum = 0.0;
    int diff = 0;
    for (int l = 1; l <= n; ++l) {
        const int s = signs[static_cast<std::size_t>(l - 1)] == '+' ? 1 : -1;
        sum += s * (n + 1.0 - 2.0 * l) / (2.0 * n);
        diff += s;
    }
    const double phase = 2 * pi * (-sum / 4 + diff * (n - 1.0) / (8.0 * n));
    const cplx y = double(n) * x * std::exp(cplx(0, -pi * diff / (2.0 * n)));
    return std::pow(2 * pi, 0.5 * (n - 1)) / std::sqrt(double(n)) * std::pow(x, -0.5 * (n - 1)) *
           std::exp(cplx(0, phase)) * std::exp(-y);
}

// A_{j,m} = sum_{r=1}^{j} (-1)^{j-r} C(j, r) r^{m+j} / j!, the Stirling number S(m + j, j)
template <class Int>
Int a_entry(int j, int m)
{
    if (j == 0) return m == 0 ? Int(1) : Int(0);
    Int total = 0, binom = 1;  // C(j, 0)
    for (int r = 1; r <= j; ++r) {
        binom = binom * (j - r + 1) / r;
        Int p = 1;
        for (int k = 0; k < m + j; ++k) p *= r;
        total += ((j - r) % 2 == 0 ? 1 : -1) * binom * p;
    }
    Int fact = 1;
    for (int k = 2; k <= j; ++k) fact *= k;
    return total / fact;
}

}  // namespace oracle

#pragma once

// J(x; signs, lambda) by direct quadrature of the defining contour integral along two rays leaving
// Re s = sigma at 135 degrees, 40 digits, frozen.

#include <complex>
#include <vector>

namespace oracle {

struct ContourValue {
    std::vector<std::complex<double>> lambda;
    const char* signs;
    double x;
    std::complex<double> value;
};

inline const std::vector<ContourValue>& contour_values()
{
    static const std::vector<ContourValue> v = {
#include "mb_reference.inc"
    };
    return v;
}

// n = 2, lambda = (0.3i, -0.3i), delta = (0, 0): x, J(x), J(-x) from the classical Y and K forms
struct MaassValue {
    double x, plus, minus;
};
inline const std::vector<MaassValue>& maass_values()
{
    static const std::vector<MaassValue> v = {
        {0.7, 0.41887727263890050336, 0.000060364722167564162198},
        {5.0, -0.78068329313390217958, 8.658838875325475921e-13},
    };
    return v;
}

// n = 2, k = 12: J(x) = 2 pi J_11(4 pi sqrt x)
struct HolomorphicValue {
    double x, plus;
};
inline const std::vector<HolomorphicValue>& holomorphic_values()
{
    static const std::vector<HolomorphicValue> v = {{0.5, 0.35703991188656238589}, {2.0, -1.33532779806051954}};
    return v;
}

}  // namespace oracle

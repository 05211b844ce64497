#pragma once

// Classical Bessel functions of complex order from their power series, evaluated in 100-digit
// complex arithmetic. Nothing here depends on the library.

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>

namespace oracle {

using mpc = boost::multiprecision::cpp_complex_100;
using mpf = boost::multiprecision::cpp_bin_float_100;

inline mpf mp_pi() { return boost::math::constants::pi<mpf>(); }

// log Gamma(s) by shifting to Re s > 120 and summing 40 Stirling corrections
inline mpc log_gamma(mpc s)
{
    mpc shift_log = 0;
    while (s.real() < 120) {
        shift_log += log(s);
        s += 1;
    }
    const mpf half_log_2pi = log(2 * mp_pi()) / 2;
    mpc r = (s - mpf(0.5)) * log(s) - s + half_log_2pi;
    mpc inv = 1 / s, inv2 = inv * inv, p = inv;
    for (int k = 1; k <= 40; ++k) {
        const mpf b = boost::math::bernoulli_b2n<mpf>(k);
        r += b / mpf(2 * k * (2 * k - 1)) * p;
        p *= inv2;
    }
    return r - shift_log;
}

// sum_k (sign y^2 / 4)^k / (k! Gamma(k + nu + 1)) times (y/2)^nu; sign = -1 gives J, +1 gives I
inline mpc power_series(const mpc& nu, const mpf& y, int sign)
{
    const mpc lead = exp(nu * log(mpc(y / 2)) - log_gamma(nu + 1));
    const mpf q = sign * y * y / 4;
    mpc term = 1, sum = 1;
    const mpf eps = mpf(1) / mpf("1e95");
    for (int k = 1; k < 2000; ++k) {
        term *= q / (mpf(k) * (nu + mpf(k)));
        sum += term;
        if (abs(term) < eps * abs(sum) && k > abs(y)) break;
    }
    return lead * sum;
}

inline std::complex<double> to_double(const mpc& v)
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

struct Cylinder {
    std::complex<double> J, Y, I, K;
};

// J_nu, Y_nu, I_nu, K_nu at real y > 0 for non-integer nu
inline Cylinder cylinder(std::complex<double> nu_d, double y_d)
{
    const mpc nu(nu_d.real(), nu_d.imag());
    const mpf y(y_d);
    const mpc jp = power_series(nu, y, -1), jm = power_series(-nu, y, -1);
    const mpc ip = power_series(nu, y, 1), im = power_series(-nu, y, 1);
    const mpc s = sin(nu * mp_pi()), c = cos(nu * mp_pi());
    return {to_double(jp), to_double((jp * c - jm) / s), to_double(ip), to_double(mp_pi() / 2 * (im - ip) / s)};
}

}  // namespace oracle

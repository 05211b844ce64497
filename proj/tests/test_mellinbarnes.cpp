#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include "besselhr/mellinbarnes.hpp"
#include "oracles/classical_bessel.hpp"
#include "oracles/mb_reference.hpp"

using namespace besselhr;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("mellinbarnes")
{
    TEST_CASE("rank 1 on 50 points")
    {
        const SpectralIndex zero({0.0});
        for (int k = 0; k < 50; ++k) {
            const double x = 0.1 + (50.0 - 0.1) * k / 49.0;
            const MBEval p = mb_eval(x, SignVector::parse("+"), zero), m = mb_eval(x, SignVector::parse("-"), zero);
            CHECK(p.converged);
            CHECK(std::abs(p.value - std::exp(cplx(0, x))) < 1e-10);
            CHECK(std::abs(m.value - std::exp(cplx(0, -x))) < 1e-10);
        }
    }

    TEST_CASE("rank 2 against classical Bessel functions")
    {
        const cplx I(0, 1);
        for (cplx lam : {cplx(0.3), cplx(0, 0.5), cplx(0.2, 0.1)}) {
            const SpectralIndex idx({lam, -lam});
            for (double x : {0.5, 5.0, 20.0}) {
                const auto c = oracle::cylinder(2.0 * lam, 2.0 * x);
                CHECK(rel(mb_eval(x, SignVector::parse("++"), idx).value, pi * I * std::exp(pi * I * lam) * (c.J + I * c.Y)) < 1e-9);
                CHECK(rel(mb_eval(x, SignVector::parse("-+"), idx).value, 2.0 * std::exp(pi * I * lam) * c.K) < 1e-9);
            }
        }
    }

    TEST_CASE("against direct contour quadrature")
    {
        for (const auto& r : oracle::contour_values()) {
            const MBEval e = mb_eval(r.x, SignVector::parse(r.signs), SpectralIndex(r.lambda));
            CHECK(rel(e.value, r.value) < 1e-10);
            CHECK(std::abs(e.value - r.value) <= e.error_estimate + 1e-12 * std::abs(r.value));
        }
    }

    TEST_CASE("contour bends only for equal signs")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        CHECK(mb_eval(5.0, SignVector::parse("+++"), lam).contour.bent);
        CHECK_FALSE(mb_eval(5.0, SignVector::parse("++-"), lam).contour.bent);
    }

    TEST_CASE("contour parameters do not change the value")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        const SignVector s = SignVector::parse("+++");
        const cplx base = mb_eval(7.0, s, lam).value;
        MBOptions o;
        o.sigma_shift = 0.7;
        o.bend_scale = 1.5;
        CHECK(rel(mb_eval(7.0, s, lam, o).value, base) < 1e-10);
    }

    TEST_CASE("gamma factor")
    {
        for (double s : {0.2, 0.5, 0.8, 2.3, -1.7})
            for (int d : {0, 1}) {
                const double ref = std::pow(pi, 0.5 - s) * boost::math::tgamma((s + d) / 2) / boost::math::tgamma((1 - s + d) / 2);
                const cplx expect = d ? cplx(0, ref) : cplx(ref);
                CHECK(rel(gamma_factor(s, d), expect) < 1e-13);
            }
        for (double t : {-4.0, 0.0, 3.0})
            for (int d : {0, 1}) {
                const cplx s(0.5, t);
                CHECK(rel(gamma_factor(s, d), gamma_factor_alt(s, d)) < 1e-12);
                // G_d(s) G_d(1 - s) = (-1)^d
                CHECK(std::abs(gamma_factor(s, d) * gamma_factor(1.0 - s, d) - (d ? -1.0 : 1.0)) < 1e-12);
            }
    }

    TEST_CASE("kernel by Mellin-Barnes")
    {
        const SpectralIndex lam({cplx(0, 0.3), cplx(0, -0.3)});
        for (const auto& r : oracle::maass_values()) {
            CHECK(rel(mb_kernel(r.x, lam, {0, 0}).value, r.plus) < 1e-10);
            CHECK(rel(mb_kernel(-r.x, lam, {0, 0}).value, r.minus) < 1e-9);
        }
    }
}

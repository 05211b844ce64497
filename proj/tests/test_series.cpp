#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include "besselhr/coeffs.hpp"
#include "besselhr/series.hpp"
#include "oracles/classical_bessel.hpp"
#include "oracles/closed_forms.hpp"
#include "oracles/mb_reference.hpp"

using namespace besselhr;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

cplx J(double x, const char* s, const SpectralIndex& l) { return j_function(SurfacePoint::from_real(x), SignVector::parse(s), l).value; }

}  // namespace

TEST_SUITE("series")
{
    TEST_CASE("rank 1 is the exponential")
    {
        const SpectralIndex zero({0.0});
        for (double x : {0.1, 1.0, 7.5, 30.0, 50.0}) {
            CHECK(std::abs(J(x, "+", zero) - std::exp(cplx(0, x))) < 1e-12);
            CHECK(std::abs(J(x, "-", zero) - std::exp(cplx(0, -x))) < 1e-12);
        }
    }

    TEST_CASE("rank 2 against classical Bessel functions of complex order")
    {
        const cplx I(0, 1);
        for (cplx lam : {cplx(0.3), cplx(0, 0.5), cplx(0.2, 0.1)}) {
            const SpectralIndex idx({lam, -lam});
            for (double x : {0.5, 2.0, 7.0, 13.0, 20.0}) {
                const auto c = oracle::cylinder(2.0 * lam, 2.0 * x);
                CHECK(rel(J(x, "++", idx), pi * I * std::exp(pi * I * lam) * (c.J + I * c.Y)) < 1e-9);
                CHECK(rel(J(x, "--", idx), -pi * I * std::exp(-pi * I * lam) * (c.J - I * c.Y)) < 1e-9);
                CHECK(rel(J(x, "+-", idx), 2.0 * std::exp(-pi * I * lam) * c.K) < 1e-9);
                CHECK(rel(J(x, "-+", idx), 2.0 * std::exp(pi * I * lam) * c.K) < 1e-9);
            }
        }
    }

    TEST_CASE("non-generic rank 2 index takes the limit")
    {
        // lambda = (1/2, -1/2): integer difference, J(x; +-) = 2 e^{-pi i / 2} K_1(2x)
        const SpectralIndex idx({0.5, -0.5});
        for (double x : {0.3, 1.0, 4.0}) {
            const SeriesEval r = j_function(SurfacePoint::from_real(x), SignVector::parse("+-"), idx);
            CHECK(r.limit_used);
            CHECK(rel(r.value, cplx(0, -2) * boost::math::cyl_bessel_k(1, 2 * x)) < 1e-9);
        }
    }

    TEST_CASE("first kind at rank 2 is J_{2 lambda}(2z)")
    {
        const SpectralIndex idx({cplx(0.2, 0.1), cplx(-0.2, -0.1)});
        for (double x : {0.4, 3.0, 9.0}) {
            const auto c = oracle::cylinder(cplx(0.4, 0.2), 2 * x);
            CHECK(rel(first_kind(SurfacePoint::from_real(x), 1, idx, 2).value, c.J) < 1e-11);
            CHECK(rel(first_kind(SurfacePoint::from_real(x), 1, idx, 1).value, oracle::cylinder(cplx(-0.4, -0.2), 2 * x).J) < 1e-11);
        }
    }

    TEST_CASE("prototype index closed form")
    {
        for (int n = 3; n <= 5; ++n)
            for (const auto& s : SignVector::all(n))
                for (double x : {1.0, 4.0, 10.0}) {
                    const cplx ref = oracle::prototype_j(x, s.str());
                    CHECK(rel(J(x, s.str().c_str(), SpectralIndex::prototype(n)), ref) < 1e-8);
                    CHECK(rel(prototype_closed_form(x, s), ref) < 1e-13);
                }
    }

    TEST_CASE("against direct contour quadrature")
    {
        for (const auto& r : oracle::contour_values())
            CHECK(rel(J(r.x, r.signs, SpectralIndex(r.lambda)), r.value) < 1e-11);
    }

    TEST_CASE("error estimate covers the actual error")
    {
        for (const auto& r : oracle::contour_values()) {
            const SeriesEval e = j_function(SurfacePoint::from_real(r.x), SignVector::parse(r.signs), SpectralIndex(r.lambda));
            CHECK(std::abs(e.value - r.value) <= e.error_estimate + 1e-13 * std::abs(r.value));
        }
    }

    TEST_CASE("Bessel equation residual")
    {
        for (int n = 1; n <= 5; ++n) {
            std::vector<cplx> l;
            for (int k = 0; k < n; ++k) l.push_back({0.13 * k - 0.05 * k * k, 0.07 * k});
            const SpectralIndex lam(l);
            const BesselEqCoeffs v = bessel_eq_coeffs(lam);
            for (const auto& s : SignVector::all(n))
                for (double x : {0.5, 3.0}) {
                    const auto d = derivatives(x, s, lam, n);
                    cplx r = -double(s.product()) * std::pow(cplx(0, n), n) * std::pow(x, n) * d[0].value;
                    double a = std::abs(r);
                    for (int j = 0; j <= n; ++j) {
                        const cplx t = v.V[static_cast<std::size_t>(j)] * std::pow(x, j) * d[static_cast<std::size_t>(j)].value;
                        r += t;
                        a += std::abs(t);
                    }
                    CHECK(std::abs(r) < 1e-9 * a);
                }
        }
    }

    TEST_CASE("derivatives match finite differences")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        const SignVector s = SignVector::parse("+-+");
        const double x = 2.0, h = 1e-4;
        const auto d = derivatives(x, s, lam, 1);
        const cplx fd = (J(x + h, "+-+", lam) - J(x - h, "+-+", lam)) / (2 * h);
        CHECK(rel(d[1].value, fd) < 1e-6);
        CHECK(rel(d[0].value, J(x, "+-+", lam)) < 1e-12);
    }

    TEST_CASE("conjugation symmetry for real index")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        for (double x : {0.8, 5.0})
            CHECK(rel(J(x, "--+", lam), std::conj(J(x, "++-", lam))) < 1e-12);
    }

    TEST_CASE("nu parametrization gives the same function")
    {
        const SpectralIndex lam({cplx(0.1, 0.2), cplx(-0.3, 0.05), cplx(0.2, -0.25)});
        const SignVector s = SignVector::parse("+-+");
        CHECK(rel(j_nu(2.0, s, nu_of_lambda(lam)).value, J(2.0, "+-+", lam)) < 1e-12);
    }

    TEST_CASE("rank mismatch is a domain error")
    {
        CHECK_THROWS_AS(j_function(SurfacePoint::from_real(1.0), SignVector::parse("++"), SpectralIndex({0.1, 0.2, -0.3})), Error);
    }
}

#include <doctest.h>
#include <random>

#include "besselhr/asympt.hpp"
#include "besselhr/series.hpp"
#include "oracles/classical_bessel.hpp"
#include "oracles/mb_reference.hpp"

using namespace besselhr;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("asympt")
{
    TEST_CASE("rank 2 second kind is a K-Bessel function")
    {
        // J(x; lambda; i) = (2 / sqrt(pi)) K_{2 lambda}(2x)
        for (cplx lam : {cplx(0.3), cplx(0.2, 0.1)}) {
            const SpectralIndex idx({lam, -lam});
            for (double x : {15.0, 30.0}) {
                const AsymptoticEval a = second_kind(SurfacePoint::from_real(x), idx, {2, 1});
                const cplx ref = 2.0 / std::sqrt(pi) * oracle::cylinder(2.0 * lam, 2.0 * x).K;
                CHECK(rel(a.value, ref) < 1e-12);
                CHECK(std::abs(a.value - ref) <= a.error_estimate + 1e-15 * std::abs(ref));
            }
        }
    }

    TEST_CASE("agrees with the series, n = 3")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        for (double x : {25.0, 50.0})
            for (const auto& s : SignVector::all(3)) {
                const SurfacePoint z = SurfacePoint::from_real(x);
                const AsymptoticEval a = j_varsigma_asymptotic(z, s, lam);
                const SeriesEval r = j_function(z, s, lam);
                CHECK(rel(a.value, r.value) < 1e-12);
                CHECK(std::abs(a.value - r.value) <= 2.0 * (a.error_estimate + r.error_estimate));
            }
    }

    TEST_CASE("agrees with contour quadrature above the floor")
    {
        int used = 0;
        for (const auto& r : oracle::contour_values()) {
            const SpectralIndex lam(r.lambda);
            if (r.x <= validity_floor(lam)) continue;
            const AsymptoticEval a = j_varsigma_asymptotic(SurfacePoint::from_real(r.x), SignVector::parse(r.signs), lam);
            CHECK(std::abs(a.value - r.value) <= std::max(1e-7 * std::abs(r.value), 2.0 * a.error_estimate));
            ++used;
        }
        CHECK(used >= 16);
    }

    TEST_CASE("domain policy")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        const double floor = validity_floor(lam);
        CHECK(floor == doctest::Approx(4.0 * lam.frak_e() * lam.frak_e()));
        try {
            second_kind(SurfacePoint::from_real(0.5 * floor), lam, {3, 0});
            FAIL("expected below_floor");
        } catch (const Error& e) {
            CHECK(e.kind() == Error::Kind::below_floor);
        }
        try {
            second_kind(SurfacePoint::polar(50.0, -3.0), lam, {3, 0});
            FAIL("expected out_of_sector");
        } catch (const Error& e) {
            CHECK(e.kind() == Error::Kind::out_of_sector);
        }
        AsymptOptions loose;
        loose.enforce = false;
        const AsymptoticEval a = second_kind(SurfacePoint::from_real(0.5 * floor), lam, {3, 0}, loose);
        CHECK_FALSE(a.above_floor);
        CHECK(in_sector(SurfacePoint::from_real(1.0), {3, 0}, pi / 6));
        CHECK(sector_margin(SurfacePoint::polar(1.0, pi / 2), {3, 0}, pi / 6) ==
              doctest::Approx(pi + pi / 3 - pi / 6));
    }

    TEST_CASE("truncation stops at the smallest term")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        AsymptOptions opt;
        opt.m_cap = 30;
        const AsymptoticEval near = second_kind(SurfacePoint::from_real(8.0), lam, {3, 0}, opt);
        const AsymptoticEval far = second_kind(SurfacePoint::from_real(80.0), lam, {3, 0}, opt);
        CHECK(near.truncation_m <= far.truncation_m);
        CHECK(far.truncation_m <= opt.m_cap + 1);
        opt.fixed_terms = 3;
        CHECK(second_kind(SurfacePoint::from_real(80.0), lam, {3, 0}, opt).truncation_m == 3);
    }

    TEST_CASE("rotation between roots of unity")
    {
        const SpectralIndex lam({0.3, -0.15, 0.1, -0.25});
        const SurfacePoint z = SurfacePoint::polar(30.0, 0.4);
        for (long k = 0; k < 8; ++k) {
            const RootOfUnity xi{4, k};
            if (!in_sector(z, xi, pi / 6)) continue;
            CHECK(rel(rotate_second_kind(z, lam, xi).value, second_kind(z, lam, xi).value) < 1e-12);
            CHECK(rel(second_kind_series(z, lam, xi).value, second_kind(z, lam, xi).value) < 1e-10);
        }
    }

    TEST_CASE("W derivatives match finite differences")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        const double x = 40.0, h = 1e-3;
        AsymptOptions opt;
        opt.fixed_terms = 12;
        for (int sign : {1, -1}) {
            const cplx d1 = w_function(SurfacePoint::from_real(x), lam, sign, 1, opt).value;
            const cplx fd = (w_function(SurfacePoint::from_real(x + h), lam, sign, 0, opt).value -
                             w_function(SurfacePoint::from_real(x - h), lam, sign, 0, opt).value) /
                            (2 * h);
            CHECK(rel(d1, fd) < 1e-6);
        }
    }

    TEST_CASE("connection matrices are inverse")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-0.5, 0.5);
        for (int n = 1; n <= 5; ++n) {
            std::vector<cplx> l;
            for (int k = 0; k < n; ++k) l.push_back({u(rng), u(rng)});
            const SpectralIndex lam(l);
            for (int a : {0, 1}) {
                const auto F = forward_connection_matrix(lam, a), R = inverse_connection_matrix(lam, a);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        cplx s = 0.0;
                        for (int k = 0; k < n; ++k) s += R[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * F[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                        CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-12);
                    }
            }
        }
    }

    TEST_CASE("forward connection reproduces second kind from first kind")
    {
        // small |z| keeps the combination well conditioned; the second kind comes from its own series
        const SpectralIndex lam({cplx(0.1, 0.2), cplx(-0.3, 0.05), cplx(0.2, -0.25)});
        const SurfacePoint z = SurfacePoint::polar(1.5, 0.3);
        for (int a : {0, 1}) {
            const auto F = forward_connection_matrix(lam, a);
            for (int j = 1; j <= 3; ++j) {
                cplx s = 0.0;
                for (int l = 1; l <= 3; ++l)
                    s += F[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - 1)] * first_kind(z, a ? -1 : 1, lam, l).value;
                CHECK(rel(s, second_kind_series(z, lam, {3, 2 * j + a - 2}).value) < 1e-11);
            }
        }
    }

    TEST_CASE("first kind rebuilt from second kind")
    {
        const SpectralIndex lam({0.3, -0.1, -0.2});
        const SurfacePoint z = SurfacePoint::from_real(60.0);
        const auto c = inverse_connection(z, lam, 0);
        for (int l = 1; l <= 3; ++l) {
            const cplx ref = first_kind(z, 1, lam, l).value;
            CHECK(rel(c[static_cast<std::size_t>(l - 1)].value, ref) < 1e-9);
        }
    }
}

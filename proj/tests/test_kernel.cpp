#include <boost/math/quadrature/gauss.hpp>
#include <doctest.h>

#include "besselhr/kernel.hpp"
#include "oracles/mb_reference.hpp"

using namespace besselhr;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

const KernelIndex maass{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 0}};

// int upsilon(y) e(x y) dy by composite Gauss-Legendre over y in [-ymax, ymax]
cplx direct_fourier(const WeightFunction& w, double x, double ymax, double h)
{
    cplx total = 0.0;
    for (double a = -ymax; a < ymax - 1e-12; a += h) {
        auto f = [&](double y) { return y == 0.0 ? 0.0 : w(y) * std::cos(2 * pi * x * y); };
        auto g = [&](double y) { return y == 0.0 ? 0.0 : w(y) * std::sin(2 * pi * x * y); };
        total += cplx(boost::math::quadrature::gauss<double, 30>::integrate(f, a, a + h),
                      boost::math::quadrature::gauss<double, 30>::integrate(g, a, a + h));
    }
    return total;
}

}  // namespace

TEST_SUITE("kernel")
{
    TEST_CASE("Maass-type kernel by every method")
    {
        for (const auto& r : oracle::maass_values()) {
            for (KernelMethod m : {KernelMethod::automatic, KernelMethod::series, KernelMethod::mb}) {
                CHECK(rel(bessel_kernel(r.x, maass, m).value, r.plus) < 1e-10);
                CHECK(rel(bessel_kernel(-r.x, maass, m).value, r.minus) < 1e-9);
            }
        }
        const KernelEval far = bessel_kernel(5.0, maass, KernelMethod::asympt);
        CHECK(rel(far.value, oracle::maass_values()[1].plus) < 1e-9);
    }

    TEST_CASE("holomorphic kernel vanishes on the negative axis")
    {
        const KernelIndex hol{SpectralIndex({5.5, -5.5}), {0, 0}};
        for (const auto& r : oracle::holomorphic_values()) {
            const KernelEval p = bessel_kernel(r.x, hol);
            CHECK(rel(p.value, r.plus) < 1e-9);
            const KernelEval m = bessel_kernel(-r.x, hol);
            CHECK(std::abs(m.value) < 1e-9 * std::abs(r.plus));
            CHECK(m.cancellation > kernel_cancellation_limit);
        }
    }

    TEST_CASE("rank 1 kernel is the additive character")
    {
        const KernelIndex even{SpectralIndex({0.0}), {0}}, odd{SpectralIndex({0.0}), {1}};
        for (double x : {-2.3, -0.4, 0.7, 3.1}) {
            CHECK(std::abs(bessel_kernel(x, even).value - e(x)) < 1e-12);
            CHECK(std::abs(bessel_kernel(x, odd).value - (x > 0 ? 1.0 : -1.0) * e(x)) < 1e-12);
        }
    }

    TEST_CASE("kernel constants")
    {
        const KernelIndex idx{SpectralIndex({0.3, -0.1, -0.2}), {1, 0, 1}};
        for (int sgn : {1, -1}) {
            const cplx ref = std::exp(cplx(0, sgn * 2 * pi * 2.0 / 8)) / std::sqrt(3.0);
            CHECK(std::abs(kernel_constant(idx, sgn) - ref) < 1e-15);
        }
        const KernelIndex odd{SpectralIndex({0.3, -0.1, -0.2}), {1, 0, 0}};
        CHECK(std::abs(kernel_constant(odd, -1) + std::exp(cplx(0, -pi / 2)) / std::sqrt(3.0)) < 1e-15);
    }

    TEST_CASE("invalid kernel index")
    {
        KernelIndex bad{SpectralIndex({0.3, -0.3}), {0, 2}};
        CHECK_THROWS_AS(bad.validate(), Error);
        KernelIndex short_delta{SpectralIndex({0.3, -0.3}), {0}};
        CHECK_THROWS_AS(bessel_kernel(1.0, short_delta), Error);
        CHECK_THROWS_AS(bessel_kernel(0.0, maass), Error);
    }

    TEST_CASE("large-x split into main term and remainder")
    {
        const KernelIndex idx{SpectralIndex({0.3, -0.1, -0.2}), {0, 1, 0}};
        for (double x : {3.0, 5.0}) {
            const KernelAsymptotics a = kernel_asymptotics(x, idx, 12);
            const cplx plus = bessel_kernel(x * x * x, idx).value, minus = bessel_kernel(-x * x * x, idx).value;
            double err_p = 0.0, err_m = 0.0;
            for (const auto& t : a.plus) err_p += t.error_estimate;
            for (const auto& t : a.minus) err_m += t.error_estimate;
            CHECK(std::abs(plus - a.main_plus) <= 1.01 * a.remainder_plus + err_p + 1e-10 * std::abs(plus));
            CHECK(std::abs(minus - a.main_minus) <= 1.01 * a.remainder_minus + err_m + 1e-10 * std::abs(minus));
        }
    }

    TEST_CASE("weight functions")
    {
        const WeightFunction w = WeightFunction::parse("gaussian-log:eta=1,mu=0.2,width=0.4");
        CHECK(w.eta() == 1);
        CHECK(w.mu() == doctest::Approx(0.2));
        CHECK(w.width() == doctest::Approx(0.4));
        CHECK(w(-std::exp(0.2)) == doctest::Approx(-1.0));
        CHECK(w.decays());
        CHECK(WeightFunction::parse("gaussian-log:η=0,w=0.3").width() == doctest::Approx(0.3));
        CHECK_THROWS_AS(WeightFunction::parse("box:eta=0"), Error);
        // Mellin transform 2 sqrt(2 pi) w e^{mu s + w^2 s^2 / 2}
        const cplx s(0.5, 2.0);
        CHECK(rel(w.mellin(s), 2 * std::sqrt(2 * pi) * 0.4 * std::exp(0.2 * s + 0.08 * s * s)) < 1e-13);
        // sampled copy of the same profile
        std::vector<double> v;
        for (int k = 0; k <= 400; ++k) v.push_back(w.profile(-3.8 + 0.02 * k));
        const WeightFunction sampled = WeightFunction::samples(1, -3.8, 0.02, v);
        CHECK(rel(sampled.mellin(s), w.mellin(s)) < 1e-6);
        CHECK(sampled(1.3) == doctest::Approx(w(1.3)).epsilon(1e-6));
    }

    TEST_CASE("signed Mellin transform and its inverse")
    {
        const WeightFunction w = WeightFunction::gaussian_log(0, 0.1, 0.6);
        auto f = [&](double x) { return cplx(w(x)); };
        for (cplx s : {cplx(0.5, 0.0), cplx(1.5, -2.0)}) {
            CHECK(rel(signed_mellin(f, 0, s, -10.0, 10.0), w.mellin(s)) < 1e-11);
            CHECK(std::abs(signed_mellin(f, 1, s, -10.0, 10.0)) < 1e-13);
        }
        for (double x : {-1.7, 0.6})
            CHECK(rel(signed_mellin_inverse([&](cplx s) { return w.mellin(s); }, 0, x, 0.5, 25.0), f(x)) < 1e-9);
    }

    TEST_CASE("rank 1 Hankel transform is the Fourier transform")
    {
        const WeightFunction w = WeightFunction::gaussian_log(0, 0.0, 0.5);
        const KernelIndex idx{SpectralIndex({0.0}), {0}};
        const std::vector<double> xs = {-1.3, 0.25, 0.8, 2.0};
        const auto t = hankel_transform(w, idx, xs);
        REQUIRE(t.size() == xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const cplx ref = direct_fourier(w, xs[i], 60.0, 0.05);
            CHECK(std::abs(t[i].value - ref) < 1e-7 * std::max(1.0, std::abs(ref)));
        }
    }

    TEST_CASE("Hankel transform is parity-covariant")
    {
        const WeightFunction w = WeightFunction::gaussian_log(1, 0.0, 0.5);
        const KernelIndex idx{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 1}};
        const auto t = hankel_transform(w, idx, {-0.9, 0.9});
        // Upsilon(-x) = (-1)^eta Upsilon(x)
        CHECK(rel(t[0].value, -t[1].value) < 1e-9);
    }

    TEST_CASE("functional equation, n = 2")
    {
        const KernelIndex idx{SpectralIndex({cplx(0, 0.3), cplx(0, -0.3)}), {0, 1}};
        for (int eta : {0, 1}) {
            const auto rep = functional_equation_check(WeightFunction::gaussian_log(eta), idx,
                                                       {cplx(0.5, 0.0), cplx(0.5, 1.0), cplx(0.5, 2.0)});
            REQUIRE(rep.points.size() == 3);
            CHECK(rep.max_rel_error < 1e-6);
            for (const auto& p : rep.points) CHECK(p.rel_error <= std::max(1e-9, 100 * p.error_estimate));
        }
    }
}

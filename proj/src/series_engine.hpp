#pragma once

// Ascending-series evaluation templated on the working precision.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "besselhr/core.hpp"

namespace besselhr::detail {

enum class CoefKind { first_kind, connection, second_kind };

struct SeriesJob {
    std::vector<cplx> lambda;  // sum zero
    SurfacePoint z;
    CoefKind kind = CoefKind::connection;
    int l = 0;                 // first_kind component, 0-based
    int sign = 1;              // series sign s in (s i^n)^m
    std::vector<int> varsigma; // connection
    long xi_index = 0;         // second_kind, arg xi = pi xi_index / n
    bool cauchy_mean = false;
    double radius = 1e-3;
    int points = 8;
};

struct SeriesOut {
    cplx value;
    double log_abs_sum = -std::numeric_limits<double>::infinity();  // log of sum |terms|
    double tail = 0.0;
    int terms = 0;
    int digits = 16;
    bool finite = true;
};

template <class R, class C>
struct Engine {
    int digits;
    R eps;
    R pi_ = boost::math::constants::pi<R>();

    static C mk(const R& re, const R& im) { return C(re, im); }
    static C mk(cplx v) { return C(R(v.real()), R(v.imag())); }

    // log Gamma(z) up to a multiple of 2 pi i, by shifting and Stirling's series.
    C lgamma(C z) const
    {
        using std::abs;
        using std::log;
        const double shift_to = 0.5 * digits + 6.0;
        C prod = mk(R(1), R(0));
        int shifted = 0;
        while (static_cast<double>(R(z.real())) + shifted < shift_to) {
            prod *= z + C(R(shifted));
            ++shifted;
        }
        C w = z + C(R(shifted));
        C lw = log(w);
        C s = (w - C(R(0.5))) * lw - w + C(log(2 * pi_) / 2);
        C winv = C(R(1)) / w;
        C w2 = winv * winv;
        C pw = winv;
        for (int k = 1; k < 400; ++k) {
            R b = boost::math::bernoulli_b2n<R>(k);
            C term = pw * C(b / R((2 * k) * (2 * k - 1)));
            s += term;
            if (abs(term) < eps * abs(s)) break;
            pw *= w2;
        }
        if (shifted) s -= log(prod);
        return s;
    }

    SeriesOut run(const SeriesJob& job) const
    {
        const int n = static_cast<int>(job.lambda.size());
        using std::cos;
        using std::sin;
        const int q_count = job.cauchy_mean ? job.points : 1;
        std::vector<C> base(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l) base[static_cast<std::size_t>(l)] = mk(job.lambda[static_cast<std::size_t>(l)]);

        C total = mk(R(0), R(0));
        R abs_total = 0;
        R tail_total = 0;
        int terms = 0;
        for (int q = 0; q < q_count; ++q) {
            std::vector<C> lam = base;
            if (job.cauchy_mean) {
                R ang = 2 * pi_ * q / job.points;
                C dir = mk(R(job.radius) * cos(ang), R(job.radius) * sin(ang));
                for (int l = 0; l < n; ++l) lam[static_cast<std::size_t>(l)] += dir * C(R(l + 1) - R(n + 1) / 2);
            }
            R a_sum = 0, t_sum = 0;
            C v = evaluate(job, lam, a_sum, t_sum, terms);
            total += v;
            abs_total += a_sum;
            tail_total += t_sum;
        }
        SeriesOut out;
        total /= C(R(q_count));
        abs_total /= q_count;
        tail_total /= q_count;
        out.value = cplx(static_cast<double>(R(total.real())), static_cast<double>(R(total.imag())));
        using std::log;
        out.log_abs_sum = abs_total > 0 ? static_cast<double>(R(log(abs_total))) : -std::numeric_limits<double>::infinity();
        out.tail = static_cast<double>(tail_total);
        out.terms = terms;
        out.digits = digits;
        out.finite = std::isfinite(out.value.real()) && std::isfinite(out.value.imag()) && std::isfinite(out.log_abs_sum);
        return out;
    }

    C evaluate(const SeriesJob& job, const std::vector<C>& lam, R& abs_sum, R& tail_sum, int& terms) const
    {
        using std::abs;
        using std::exp;
        const int n = static_cast<int>(lam.size());
        const C I = mk(R(0), R(1));
        const C L = mk(R(job.z.log_modulus), R(job.z.argument));
        // w = s i^n z^n
        C w = exp(C(R(n)) * L + I * C(pi_ * n / 2));
        if (job.sign < 0) w = -w;

        C result = mk(R(0), R(0));
        int l_begin = 0, l_end = n;
        if (job.kind == CoefKind::first_kind) {
            l_begin = job.l;
            l_end = job.l + 1;
        }
        for (int l = l_begin; l < l_end; ++l) {
            const C ll = lam[static_cast<std::size_t>(l)];
            int m0 = 0;
            C logc;
            if (job.kind == CoefKind::first_kind) {
                // skip the leading terms killed by poles of Gamma
                for (int k = 0; k < n; ++k) {
                    cplx d = job.lambda[static_cast<std::size_t>(k)] - job.lambda[static_cast<std::size_t>(l)];
                    double rr = std::round(d.real());
                    if (std::abs(d - rr) < 1e-12 && rr + 1.0 <= 0.0) m0 = std::max(m0, static_cast<int>(-rr));
                }
                logc = C(R(n * m0)) * L + C(R(m0)) * (I * C(pi_ * n / 2) + (job.sign < 0 ? I * C(pi_) : C(R(0))));
                for (int k = 0; k < n; ++k) logc -= lgamma(lam[static_cast<std::size_t>(k)] - ll + C(R(m0 + 1)));
            } else if (job.kind == CoefKind::connection) {
                int npm = 0;
                C sum_sl = mk(R(0), R(0));
                for (int k = 0; k < n; ++k) {
                    npm += job.varsigma[static_cast<std::size_t>(k)];
                    sum_sl += C(R(job.varsigma[static_cast<std::size_t>(k)])) * lam[static_cast<std::size_t>(k)];
                }
                // E = e(-sum s_k lambda_k / 4), E_l = e((n+ - n-) lambda_l / 4)
                logc = -I * C(pi_ / 2) * sum_sl + I * C(pi_ / 2 * npm) * ll;
                for (int k = 0; k < n; ++k)
                    if (k != l) logc += lgamma(ll - lam[static_cast<std::size_t>(k)]);
            } else {
                using std::log;
                R arg = pi_ * R(job.xi_index) / R(n);
                // sqrt(n) (-pi i xi / 2)^{(n-1)/2} (i conj xi)^{n lambda_l} prod Gamma / pi^{n-1}
                logc = C(log(R(n)) / 2) + C(R(n - 1) / 2) * mk(log(pi_ / 2), arg - pi_ / 2) +
                       C(R(n)) * ll * mk(R(0), pi_ / 2 - arg) - C(R(n - 1) * log(pi_));
                for (int k = 0; k < n; ++k)
                    if (k != l) logc += lgamma(ll - lam[static_cast<std::size_t>(k)]);
            }
            C t = exp(logc - C(R(n)) * ll * L);
            C partial = t;
            R asum = abs(t);
            R zn = abs(w);
            int m = m0;
            const int m_limit = 200000;
            R tail = 0;
            for (;;) {
                ++m;
                C den = mk(R(1), R(0));
                R den_abs = 1;
                for (int k = 0; k < n; ++k) {
                    C f = lam[static_cast<std::size_t>(k)] - ll + C(R(m));
                    den *= f;
                }
                t = t * w / den;
                partial += t;
                R at = abs(t);
                asum += at;
                den_abs = abs(den);
                // next ratio bound; once below 1/2 and shrinking the tail is geometric
                R next_ratio = zn / abs_next(lam, ll, m + 1);
                if (next_ratio < R(0.5) && den_abs > zn) {
                    R bound = at * next_ratio / (1 - next_ratio);
                    if (bound <= eps * asum * R(0.01) || at == 0) {
                        tail = bound;
                        break;
                    }
                }
                if (m - m0 > m_limit) {
                    tail = at;
                    break;
                }
            }
            terms += m - m0 + 1;
            result += partial;
            abs_sum += asum;
            tail_sum += tail;
        }
        return result;
    }

    R abs_next(const std::vector<C>& lam, const C& ll, int m) const
    {
        using std::abs;
        R p = 1;
        for (const auto& lk : lam) p *= abs(lk - ll + C(R(m)));
        return p;
    }
};

SeriesOut run_series_double(const SeriesJob& job);
SeriesOut run_series_mp50(const SeriesJob& job);
SeriesOut run_series_mp100(const SeriesJob& job);
SeriesOut run_series_mp200(const SeriesJob& job);
SeriesOut run_series_mp400(const SeriesJob& job);

}  // namespace besselhr::detail

#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace besselhr::detail {

struct GK15Rule {
    std::vector<double> x, wk, wg;  // non-negative abscissae; wg is zero at Kronrod-only nodes

    static const GK15Rule& get()
    {
        static const GK15Rule rule = [] {
            GK15Rule r;
            const auto& ka = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
            const auto& kw = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
            const auto& ga = boost::math::quadrature::gauss<double, 7>::abscissa();
            const auto& gw = boost::math::quadrature::gauss<double, 7>::weights();
            for (std::size_t i = 0; i < ka.size(); ++i) {
                r.x.push_back(ka[i]);
                r.wk.push_back(kw[i]);
                double w = 0.0;
                for (std::size_t j = 0; j < ga.size(); ++j)
                    if (std::abs(ga[j] - ka[i]) < 1e-14) w = gw[j];
                r.wg.push_back(w);
            }
            return r;
        }();
        return rule;
    }
};

struct Panel {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& o) const
    {
        if (error != o.error) return error < o.error;
        return a > o.a;
    }
};

template <class F>
Panel gk15(const F& f, double a, double b)
{
    const auto& r = GK15Rule::get();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> k = 0.0, g = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        if (r.x[i] == 0.0) {
            auto v = f(c);
            k += r.wk[i] * v;
            g += r.wg[i] * v;
        } else {
            auto v = f(c - h * r.x[i]) + f(c + h * r.x[i]);
            k += r.wk[i] * v;
            g += r.wg[i] * v;
        }
    }
    k *= h;
    g *= h;
    return {a, b, k, std::abs(k - g)};
}

struct QuadResult {
    std::complex<double> value;
    double error = 0.0;
    int panels = 0;
    bool converged = true;
};

// Global adaptive Gauss-Kronrod over an initial partition; the sum runs in panel order.
template <class F>
QuadResult integrate(const F& f, const std::vector<double>& breaks, double rel_tol, double abs_tol,
                     int max_panels = 20000)
{
    std::priority_queue<Panel> heap;
    double err = 0.0;
    std::complex<double> val = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Panel p = gk15(f, breaks[i], breaks[i + 1]);
        heap.push(p);
        err += p.error;
        val += p.value;
    }
    int count = static_cast<int>(heap.size());
    QuadResult res;
    while (err > std::max(rel_tol * std::abs(val), abs_tol) && count < max_panels) {
        Panel p = heap.top();
        heap.pop();
        double m = 0.5 * (p.a + p.b);
        Panel l = gk15(f, p.a, m), r = gk15(f, m, p.b);
        err += l.error + r.error - p.error;
        val += l.value + r.value - p.value;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    std::vector<Panel> all;
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    res.value = 0.0;
    res.error = 0.0;
    for (const auto& p : all) {
        res.value += p.value;
        res.error += p.error;
    }
    res.panels = count;
    res.converged = res.error <= std::max(rel_tol * std::abs(res.value), abs_tol);
    return res;
}

}  // namespace besselhr::detail

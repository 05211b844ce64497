#include "besselhr/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ddouble.hpp"

namespace besselhr {

ATable build_a_table(int J, int M)
{
    ATable t;
    t.J = J;
    t.M = M;
    t.a.assign(static_cast<std::size_t>(J + 1), std::vector<BigInt>(static_cast<std::size_t>(M + 1), 0));
    for (int j = 0; j <= J; ++j)
        for (int m = 0; m <= M; ++m) {
            // A_{-1,m} = delta_{m,0}, A_{j,-1} = 0
            BigInt prev_j = j == 0 ? BigInt(m == 0 ? 1 : 0) : t.a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(m)];
            BigInt prev_m = m == 0 ? BigInt(0) : t.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(m - 1)];
            t.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = j * prev_m + prev_j;
        }
    return t;
}

Rational a_closed_form(int j, int m)
{
    if (j == 0) return Rational(m == 0 ? 1 : 0);
    Rational s = 0;
    BigInt fact_r = 1;
    for (int r = 1; r <= j; ++r) {
        fact_r *= r;
        BigInt fact_jr = 1;
        for (int i = 2; i <= j - r; ++i) fact_jr *= i;
        BigInt num = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(m + j));
        Rational term(num, fact_r * fact_jr);
        if ((j - r) % 2) s -= term;
        else s += term;
    }
    return s;
}

ACheck verify_a_closed_form(const ATable& t)
{
    for (int j = 0; j <= t.J; ++j)
        for (int m = 0; m <= t.M; ++m)
            if (Rational(t(j, m)) != a_closed_form(j, m)) return {false, j, m};
    return {};
}

Polynomial Polynomial::constant(const BigInt& c, int nvars)
{
    Polynomial p;
    p.nvars_ = nvars;
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int i, int nvars)
{
    Polynomial p;
    p.nvars_ = nvars;
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = 1;
    p.add_term(m, 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool Polynomial::is_constant(const BigInt& c) const
{
    if (c == 0) return terms_.empty();
    if (terms_.size() != 1) return false;
    const auto& [m, v] = *terms_.begin();
    return v == c && std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(m1.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const
{
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
        Rational t(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= x[i];
        s += t;
    }
    return s;
}

cplx Polynomial::evaluate(const std::vector<cplx>& x) const
{
    cplx s = 0.0;
    for (const auto& [m, c] : terms_) {
        cplx t(static_cast<double>(c));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= x[i];
        s += t;
    }
    return s;
}

std::string Polynomial::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = c < 0 ? BigInt(-c) : c;
        bool unit = true;
        for (int e : m) unit = unit && e == 0;
        if (a != 1 || unit) os << a;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << (a != 1 || i > 0 ? "*" : "") << "L" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

// e_m(x_0..x_{k}) as polynomials, m = 0..k+1
std::vector<Polynomial> sigma_polys(int k, int nvars)
{
    std::vector<Polynomial> e(static_cast<std::size_t>(k + 2));
    for (auto& p : e) p = Polynomial::constant(0, nvars);
    e[0] = Polynomial::constant(1, nvars);
    for (int i = 0; i <= k; ++i) {
        Polynomial xi = Polynomial::variable(i, nvars);
        for (int m = i + 1; m >= 1; --m) e[static_cast<std::size_t>(m)] = e[static_cast<std::size_t>(m)] + e[static_cast<std::size_t>(m - 1)] * xi;
    }
    return e;
}

}  // namespace

UVTables build_uv_tables(int n)
{
    if (n < 1) throw Error(Error::Kind::domain, "uv tables need n >= 1");
    UVTables t;
    t.n = n;
    const int nv = n;
    const auto z = Polynomial::constant(0, nv);
    t.U.assign(static_cast<std::size_t>(n + 1), std::vector<Polynomial>(static_cast<std::size_t>(n + 1), z));
    t.V = t.U;
    t.U[0][0] = Polynomial::constant(1, nv);
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
            Polynomial p = z;
            if (j <= k - 1)
                p = -((Polynomial::variable(j, nv) + Polynomial::constant(k - 1, nv)) * t.U[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)]);
            if (j >= 1) p = p + t.U[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
            t.U[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = p;
        }
    ATable A = build_a_table(n, n);
    for (int k = 0; k <= n; ++k) {
        std::vector<Polynomial> sig = k >= 1 ? sigma_polys(k - 1, nv) : std::vector<Polynomial>{Polynomial::constant(1, nv)};
        for (int j = 0; j <= k; ++j) {
            Polynomial p = z;
            for (int m = 0; m <= k - j && m < static_cast<int>(sig.size()); ++m)
                p = p + Polynomial::constant(A(j, k - j - m), nv) * sig[static_cast<std::size_t>(m)];
            t.V[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = p;
        }
    }
    return t;
}

std::vector<cplx> big_lambda(const SpectralIndex& lambda)
{
    const int n = lambda.rank();
    std::vector<cplx> L(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) L[static_cast<std::size_t>(m)] = static_cast<double>(n) * lambda[n - 1 - m];
    return L;
}

UVTables build_uv_tables(int n, const SpectralIndex& lambda)
{
    if (lambda.rank() != n) throw Error(Error::Kind::domain, "uv tables: rank mismatch");
    UVTables t = build_uv_tables(n);
    t.Lambda = big_lambda(lambda);
    t.U_num.assign(static_cast<std::size_t>(n + 1), std::vector<cplx>(static_cast<std::size_t>(n + 1), 0.0));
    t.V_num = t.U_num;
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
            t.U_num[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = t.U[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].evaluate(t.Lambda);
            t.V_num[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = t.V[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].evaluate(t.Lambda);
        }
    return t;
}

bool uv_orthogonal_exact(const UVTables& t)
{
    for (int k = 0; k <= t.n; ++k)
        for (int j = 0; j <= k; ++j) {
            Polynomial s = Polynomial::constant(0, t.n);
            for (int l = j; l <= k; ++l) s = s + t.U[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] * t.V[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            if (!s.is_constant(k == j ? 1 : 0)) return false;
        }
    return true;
}

UVNumeric uv_numeric(const std::vector<cplx>& L)
{
    const int n = static_cast<int>(L.size());
    UVNumeric r;
    r.U.assign(static_cast<std::size_t>(n + 1), std::vector<cplx>(static_cast<std::size_t>(n + 1), 0.0));
    r.V = r.U;
    r.U[0][0] = 1.0;
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
            cplx p = 0.0;
            if (j <= k - 1) p = -(L[static_cast<std::size_t>(j)] + static_cast<double>(k - 1)) * r.U[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
            if (j >= 1) p += r.U[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
            r.U[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = p;
        }
    ATable A = build_a_table(n, n);
    for (int k = 0; k <= n; ++k) {
        std::vector<cplx> first(L.begin(), L.begin() + k);
        auto sig = elementary_symmetric(first);
        for (int j = 0; j <= k; ++j) {
            cplx p = 0.0;
            for (int m = 0; m <= k - j && m < static_cast<int>(sig.size()); ++m)
                p += static_cast<double>(A(j, k - j - m)) * sig[static_cast<std::size_t>(m)];
            r.V[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = p;
        }
    }
    return r;
}

double uv_orthogonality_residual(const UVNumeric& t)
{
    const int n = static_cast<int>(t.U.size()) - 1;
    double worst = 0.0;
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
            cplx s = 0.0;
            double scale = 0.0;
            for (int l = j; l <= k; ++l) {
                cplx term = t.U[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] * t.V[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                s += term;
                scale += std::abs(term);
            }
            double dev = std::abs(s - (k == j ? 1.0 : 0.0)) / std::max(1.0, scale);
            worst = std::max(worst, dev);
        }
    return worst;
}

BesselEqCoeffs bessel_eq_coeffs(const SpectralIndex& lambda)
{
    const int n = lambda.rank();
    auto sig = elementary_symmetric(lambda.lambda());
    sig[1] = 0.0;
    ATable A = build_a_table(n, n);
    BesselEqCoeffs r;
    r.n = n;
    r.V.assign(static_cast<std::size_t>(n + 1), 0.0);
    for (int j = 0; j <= n; ++j) {
        cplx s = 0.0;
        double npow = 1.0;
        for (int m = 0; m <= n - j; ++m) {
            s += static_cast<double>(A(j, n - j - m)) * npow * sig[static_cast<std::size_t>(m)];
            npow *= n;
        }
        r.V[static_cast<std::size_t>(j)] = s;
    }
    return r;
}

BTable build_b_table(const SpectralIndex& lambda, const RootOfUnity& xi, int M)
{
    using detail::cdd;
    using detail::dd;
    const int n = lambda.rank();
    if (xi.n != n) throw Error(Error::Kind::domain, "b table: root of unity order does not match rank");
    if (M < 0 || M > b_max_terms) throw Error(Error::Kind::domain, "b table: term count out of range");

    // V_{n,j}(lambda) in pair arithmetic
    std::vector<cdd> sig(static_cast<std::size_t>(n + 1), cdd(dd(0.0)));
    sig[0] = cdd(dd(1.0));
    for (int i = 0; i < n; ++i) {
        cdd li(lambda[i]);
        for (int m = i + 1; m >= 1; --m) sig[static_cast<std::size_t>(m)] = sig[static_cast<std::size_t>(m)] + sig[static_cast<std::size_t>(m - 1)] * li;
    }
    sig[1] = cdd(dd(0.0));
    ATable A = build_a_table(n, n);
    std::vector<cdd> V(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        cdd s(dd(0.0));
        dd npow(1.0);
        for (int m = 0; m <= n - j; ++m) {
            s = s + cdd(dd(static_cast<double>(A(j, n - j - m))) * npow) * sig[static_cast<std::size_t>(m)];
            npow = npow * dd(static_cast<double>(n));
        }
        V[static_cast<std::size_t>(j)] = s;
    }

    const double arg = xi.argument();
    // i n xi
    cdd inxi(dd(-n * std::sin(arg)), dd(n * std::cos(arg)));
    std::vector<cdd> inxi_pow(static_cast<std::size_t>(n + 1));
    inxi_pow[0] = cdd(dd(1.0));
    for (int p = 1; p <= n; ++p) inxi_pow[static_cast<std::size_t>(p)] = inxi_pow[static_cast<std::size_t>(p - 1)] * inxi;

    auto fact = [](int k) {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    auto fall = [](double a, int m) {
        dd r(1.0);
        for (int k = 0; k < m; ++k) r = r * dd(a - k);
        return r;
    };

    std::vector<std::vector<cdd>> W(static_cast<std::size_t>(n + 1), std::vector<cdd>(static_cast<std::size_t>(n + 1), cdd(dd(0.0))));
    for (int j = 0; j <= n; ++j)
        for (int k = 0; j + k <= n; ++k) {
            if (j == 0 && k == 0) continue;
            cdd s(dd(0.0));
            for (int r = 0; r <= k; ++r) {
                dd c = dd(fact(n - r) / fact(k - r)) * fall(-0.5 * (n - 1), k - r);
                s = s + cdd(c) * V[static_cast<std::size_t>(n - r)];
            }
            dd den(fact(j) * fact(n - j - k));
            W[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = inxi_pow[static_cast<std::size_t>(n - j - k)] * s / cdd(den);
        }
    // W_{0,0} = (in xi)^n - (xi^n)(in)^n vanishes by construction; W_{0,1} must vanish as well.
    if (n >= 1) {
        cplx w01 = W[0][1].value();
        double scale = std::pow(static_cast<double>(n), n) * (1.0 + std::abs(V[static_cast<std::size_t>(n - 1)].value()));
        if (std::abs(w01) > 1e-12 * scale)
            throw Error(Error::Kind::domain, "b table: W_{0,1} does not vanish; index not normalized");
        W[0][1] = cdd(dd(0.0));
    }

    std::vector<cdd> B(static_cast<std::size_t>(M + 1), cdd(dd(0.0)));
    B[0] = cdd(dd(1.0));
    const cdd w10 = W[1][0];
    for (int m = 2; m <= M + 1; ++m) {
        cdd s(dd(0.0));
        for (int k = 2; k <= std::min(n, m); ++k) s = s + W[0][static_cast<std::size_t>(k)] * B[static_cast<std::size_t>(m - k)];
        for (int j = 1; j <= n; ++j)
            for (int k = 0; j + k <= std::min(n, m - 1); ++k) {
                if (j + k < 2) continue;
                dd f = fall(static_cast<double>(j + k - m), j);
                s = s + W[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * cdd(f) * B[static_cast<std::size_t>(m - j - k)];
            }
        B[static_cast<std::size_t>(m - 1)] = s / (cdd(dd(static_cast<double>(m - 1))) * w10);
    }

    BTable t;
    t.n = n;
    t.xi = xi;
    for (auto& b : B) t.B.push_back(b.value());
    t.W.assign(static_cast<std::size_t>(n + 1), std::vector<cplx>(static_cast<std::size_t>(n + 1), 0.0));
    for (int j = 0; j <= n; ++j)
        for (int k = 0; j + k <= n; ++k) t.W[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = W[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].value();
    return t;
}

namespace {

using QPoly = std::vector<Rational>;  // coefficients in nu, ascending

QPoly qmul(const QPoly& a, const QPoly& b)
{
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qadd(QPoly a, const QPoly& b)
{
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

QPoly qscale(QPoly a, const Rational& c)
{
    for (auto& v : a) v *= c;
    return a;
}

void qtrim(QPoly& a)
{
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// (c + s nu)_m as a polynomial in nu
QPoly rising_poly(const Rational& c, const Rational& s, int m)
{
    QPoly r{Rational(1)};
    for (int k = 0; k < m; ++k) r = qmul(r, QPoly{c + k, s});
    return r;
}

BigInt factorial(int k)
{
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

BigInt binomial(int a, int b)
{
    if (b < 0 || a < 0 || b > a) return 0;
    return factorial(a) / (factorial(b) * factorial(a - b));
}

}  // namespace

IdentityReport check_combinatorial_identity(int m_max)
{
    IdentityReport rep;
    const Rational half(1, 2);
    for (int m = 0; m <= m_max; ++m) {
        QPoly lhs = qmul(rising_poly(half, -1, m), rising_poly(half, 1, m));
        lhs = qscale(lhs, Rational((m % 2) ? -1 : 1, factorial(m)));
        QPoly rhs = qscale(rising_poly(1, -1, 2 * m), Rational(1, factorial(m)));
        for (int r = 1; r <= 2 * m; ++r) {
            QPoly inner{Rational(0)};
            for (int alpha = 0; alpha <= 2 * m - r; ++alpha)
                inner = qadd(inner, qscale(rising_poly(1, -1, alpha), Rational(binomial(2 * m - alpha - 1, r - 1), factorial(alpha))));
            BigInt four_r = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(r));
            Rational c(factorial(2 * m + 2 * r), four_r * factorial(m + r) * factorial(r));
            if (r % 2) c = -c;
            rhs = qadd(rhs, qscale(inner, c));
        }
        qtrim(lhs);
        qtrim(rhs);
        if (lhs != rhs) {
            rep.ok = false;
            rep.first_bad_m = m;
            std::ostringstream os;
            std::size_t len = std::max(lhs.size(), rhs.size());
            lhs.resize(len, Rational(0));
            rhs.resize(len, Rational(0));
            for (std::size_t i = 0; i < len; ++i)
                if (lhs[i] != rhs[i]) {
                    os << "m=" << m << " coefficient of nu^" << i << ": " << lhs[i] << " vs " << rhs[i];
                    break;
                }
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace besselhr

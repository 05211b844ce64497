#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "besselhr/core.hpp"

namespace besselhr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ATable {
    int J = 0, M = 0;
    std::vector<std::vector<BigInt>> a;  // a[j][m]
    const BigInt& operator()(int j, int m) const { return a[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)]; }
};

ATable build_a_table(int J, int M);
// sum_{r=1}^{j} (-1)^{j-r} r^{m+j} / (r! (j-r)!), and delta_{m,0} for j = 0
Rational a_closed_form(int j, int m);

struct ACheck {
    bool ok = true;
    int bad_j = -1, bad_m = -1;
};
ACheck verify_a_closed_form(const ATable& t);

// Multivariate polynomial with integer coefficients.
class Polynomial {
public:
    using Monomial = std::vector<int>;

    Polynomial() = default;
    static Polynomial constant(const BigInt& c, int nvars);
    static Polynomial variable(int i, int nvars);

    int nvars() const { return nvars_; }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant(const BigInt& c) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Rational evaluate(const std::vector<Rational>& x) const;
    cplx evaluate(const std::vector<cplx>& x) const;
    std::string str() const;

private:
    void add_term(const Monomial& m, const BigInt& c);
    int nvars_ = 0;
    std::map<Monomial, BigInt> terms_;
};

// U_{k,j}, V_{k,j} for 0 <= j <= k <= n in the variables Lambda_0..Lambda_{n-1}.
struct UVTables {
    int n = 0;
    std::vector<std::vector<Polynomial>> U, V;
    std::vector<cplx> Lambda;               // Lambda_m = n lambda_{n-m}, when instantiated
    std::vector<std::vector<cplx>> U_num, V_num;
};

UVTables build_uv_tables(int n);
UVTables build_uv_tables(int n, const SpectralIndex& lambda);

// sum_l U_{k,l} V_{l,j} == delta_{kj} as polynomials, for all j <= k <= n
bool uv_orthogonal_exact(const UVTables& t);

// Floating-point recurrences at the given Lambda values; V from the A-sum formula.
struct UVNumeric {
    std::vector<std::vector<cplx>> U, V;
};
UVNumeric uv_numeric(const std::vector<cplx>& Lambda);
double uv_orthogonality_residual(const UVNumeric& t);

// Lambda_m(nu) = -sum nu + n nu_{n-m}, with nu_n = 0
std::vector<cplx> big_lambda(const SpectralIndex& lambda);

struct BesselEqCoeffs {
    int n = 0;
    std::vector<cplx> V;  // V[j] = V_{n,j}(lambda), j = 0..n
};

BesselEqCoeffs bessel_eq_coeffs(const SpectralIndex& lambda);

struct BTable {
    int n = 0;
    RootOfUnity xi;
    std::vector<cplx> B;               // B_0..B_M
    std::vector<std::vector<cplx>> W;  // W[j][k], j + k <= n
};

inline constexpr int b_max_terms = 40;

BTable build_b_table(const SpectralIndex& lambda, const RootOfUnity& xi, int M);

struct IdentityReport {
    bool ok = true;
    int first_bad_m = -1;
    std::string detail;
};

// (-1)^m (1/2-nu)_m (1/2+nu)_m / m! against the binomial double sum, exactly in Q[nu]
IdentityReport check_combinatorial_identity(int m_max);

}  // namespace besselhr

// Exact multivariate polynomials over Rat with an open (named) variable
// universe. Binary operations merge variable sets by name.
//
// Canonical text form: monomials in descending graded-lex order (variable
// names compared alphabetically), explicit '^' powers, explicit '*'.
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "k3period/rat.hpp"

namespace k3p {

// Sparse exponent map, positive exponents only.
using Monomial = std::map<std::string, int>;

// graded-lex: total degree first, then alphabetically-earlier variable with
// the higher exponent wins.
bool monomial_less(const Monomial& a, const Monomial& b);
int monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_div(const Monomial& b, const Monomial& a);  // b / a

class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(const Rat& c);
    explicit MPoly(long c);
    static MPoly var(const std::string& name, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rat constant_value() const;  // requires is_constant

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rat& c);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return terms_ != o.terms_; }

    MPoly pow(int e) const;
    MPoly diff(const std::string& var) const;

    int degree() const;                       // total degree, -1 for zero
    int degree(const std::string& var) const;  // -1 for zero
    int min_degree(const std::string& var) const;

    std::vector<std::string> variables() const;

    // Leading term under graded-lex (throws on zero).
    std::pair<Monomial, Rat> leading_term() const;

    // Coefficient of var^k, a polynomial in the remaining variables.
    MPoly coeff_of(const std::string& var, int k) const;

    MPoly subst(const std::string& var, const MPoly& value) const;
    Rat eval(const std::map<std::string, Rat>& point) const;
    std::complex<double> eval_c(const std::map<std::string, std::complex<double>>& point) const;

    // Scale c with p == c * primitive(p); primitive(p) has integer coprime
    // coefficients and positive graded-lex leading coefficient.
    Rat content_scale() const;
    MPoly primitive() const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    void set_term(const Monomial& m, const Rat& c);  // c == 0 erases

    std::string str() const;

  private:
    std::map<Monomial, Rat> terms_;
};

MPoly mpoly_parse(const std::string& text);

// Exact division; throws std::domain_error when the division is not exact.
MPoly mpoly_divexact(const MPoly& f, const MPoly& g);
bool mpoly_try_divexact(const MPoly& f, const MPoly& g, MPoly& quotient);

// Primitive (integer, positive-leading) gcd; gcd(0,0) == 0.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// Dense univariate coefficient list (c0..cd); throws if other variables occur.
std::vector<Rat> univariate_coeffs(const MPoly& p, const std::string& var);

// Exact square-free decomposition of a univariate polynomial over Q:
// returns [(factor, multiplicity)] with factors primitive and pairwise coprime.
std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p, const std::string& var);

}  // namespace k3p

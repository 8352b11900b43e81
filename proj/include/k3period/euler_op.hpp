// Operators in the algebra generated by lambda, mu, theta_lambda, theta_mu
// where theta_x = x d/dx. Terms are stored normal-ordered: coefficients
// lambda^i mu^j on the left, theta_lambda^k theta_mu^l on the right.
//
// Commutation: theta_lambda * lambda = lambda * (theta_lambda + 1), the
// cross pairs commute. theta acts on a monomial l^n m^m by n (resp. m).
#pragma once

#include <array>
#include <map>

#include "k3period/series2.hpp"

namespace k3p {

class EulerOp {
  public:
    // key = (i, j, k, l): lambda^i mu^j theta_lambda^k theta_mu^l
    using Key = std::array<int, 4>;

    EulerOp() = default;
    static EulerOp constant(const Rat& c);
    static EulerOp theta_lambda();
    static EulerOp theta_mu();
    static EulerOp monomial(int i, int j);  // multiplication operator lambda^i mu^j
    static EulerOp term(int i, int j, int k, int l, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }
    void add_term(const Key& k, const Rat& c);

    EulerOp operator-() const;
    friend EulerOp operator+(EulerOp a, const EulerOp& b);
    friend EulerOp operator-(EulerOp a, const EulerOp& b);
    EulerOp& operator+=(const EulerOp& o);
    EulerOp& operator-=(const EulerOp& o);
    bool operator==(const EulerOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const EulerOp& o) const { return terms_ != o.terms_; }

    EulerOp scale(const Rat& c) const;

    // max total degree in (lambda, mu) over all terms; 0 for the zero operator
    int coeff_degree() const;
    // max theta degree
    int theta_degree() const;

    // coefficient polynomial of theta_lambda^k theta_mu^l
    MPoly theta_coefficient(int k, int l) const;

    std::string str() const;

    Series2 apply(const Series2& s) const;

  private:
    std::map<Key, Rat> terms_;
};

// Normal-ordered product D1 * D2 ("apply D2 first").
EulerOp euler_compose(const EulerOp& a, const EulerOp& b);

// Build an operator from a polynomial expression in tl, tm with polynomial
// coefficients in lambda, mu; variables: "lambda", "mu", "tl", "tm".
// The expression is read in normal order (no commutation applied).
EulerOp euler_from_poly(const MPoly& p);
EulerOp euler_parse(const std::string& text);  // parse + normal-order read

}  // namespace k3p

// Bivariate power series in (lambda, mu) truncated at a total degree.
//
// Every series carries its reliable order: operations that multiply by a
// positive-degree monomial lower it, so no identity is ever asserted past
// the computed range.
#pragma once

#include <map>
#include <utility>

#include "k3period/mpoly.hpp"

namespace k3p {

class Series2 {
  public:
    Series2() : order_(-1) {}
    explicit Series2(int order) : order_(order) {}

    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(int n, int m) const;
    void set_coeff(int n, int m, const Rat& c);  // silently drops beyond order

    Series2 operator+(const Series2& o) const;  // order = min of the two
    Series2 operator-(const Series2& o) const;
    Series2 scale(const Rat& c) const;

    // multiply by lambda^i mu^j; reliable order drops by i + j
    Series2 shift(int i, int j) const;

    // multiply by a polynomial in (lambda, mu); order drops by deg(p)
    Series2 mul_poly(const MPoly& p) const;

    // all stored coefficients with total degree <= order vanish?
    bool vanishes() const;
    // first (n, m) in graded-lex order with nonzero coefficient, or {-1,-1}
    std::pair<int, int> first_nonzero() const;

    const std::map<std::pair<int, int>, Rat>& coeffs() const { return coeffs_; }

    std::string str(int max_degree = 4) const;

    static const std::string& var_lambda();
    static const std::string& var_mu();

  private:
    int order_;
    std::map<std::pair<int, int>, Rat> coeffs_;  // (n, m) -> c, n + m <= order
};

}  // namespace k3p

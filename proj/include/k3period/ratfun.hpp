// Rational functions num/den over Rat coefficients, kept in canonical form:
// gcd(num, den) = 1 and den integer-primitive with positive graded-lex
// leading coefficient. Equality is then plain structural equality.
#pragma once

#include "k3period/mpoly.hpp"

namespace k3p {

class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    explicit RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    explicit RatFun(const MPoly& p) : num_(p), den_(Rat(1)) {}
    RatFun(const MPoly& num, const MPoly& den);  // reduces; throws on zero den

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);  // throws on zero b
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun pow(int e) const;  // e may be negative for nonzero values
    RatFun diff(const std::string& var) const;

    // Substitute variables by rational functions (missing names stay fixed).
    RatFun subst(const std::map<std::string, RatFun>& values) const;

    Rat eval(const std::map<std::string, Rat>& point) const;  // throws on pole
    std::complex<double> eval_c(const std::map<std::string, std::complex<double>>& point) const;

    std::string str() const;  // "(num)/(den)" or "num" when den == 1

  private:
    void canonicalize();

    MPoly num_, den_;
};

RatFun ratfun_parse(const std::string& text);  // '/' between parenthesized groups allowed

// Substitute variables of a polynomial by rational functions.
RatFun mpoly_subst_ratfun(const MPoly& p, const std::map<std::string, RatFun>& values);

}  // namespace k3p

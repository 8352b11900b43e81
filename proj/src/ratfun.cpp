#include "k3period/ratfun.hpp"

#include <stdexcept>

namespace k3p {

RatFun::RatFun(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    canonicalize();
}

void RatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = mpoly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = mpoly_divexact(num_, g);
            den_ = mpoly_divexact(den_, g);
        }
    }
    Rat s = den_.content_scale();
    if (den_.is_constant()) {
        // normalize to denominator 1
        s = den_.constant_value();
    }
    num_ *= Rat(1) / s;
    den_ *= Rat(1) / s;
}

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::pow(int e) const {
    if (e == 0) return RatFun(Rat(1));
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RatFun::pow: zero to negative power");
        return RatFun(den_.pow(-e), num_.pow(-e));
    }
    return RatFun(num_.pow(e), den_.pow(e));
}

RatFun RatFun::diff(const std::string& var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFun(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

RatFun mpoly_subst_ratfun(const MPoly& p, const std::map<std::string, RatFun>& values) {
    // substitute one variable at a time via Horner
    std::string var;
    for (auto& v : p.variables())
        if (values.count(v)) { var = v; break; }
    if (var.empty()) return RatFun(p);
    int d = p.degree(var);
    const RatFun& x = values.at(var);
    RatFun out = mpoly_subst_ratfun(p.coeff_of(var, d), values);
    for (int k = d - 1; k >= 0; --k)
        out = out * x + mpoly_subst_ratfun(p.coeff_of(var, k), values);
    return out;
}

RatFun RatFun::subst(const std::map<std::string, RatFun>& values) const {
    RatFun n = mpoly_subst_ratfun(num_, values);
    RatFun d = mpoly_subst_ratfun(den_, values);
    return n / d;
}

Rat RatFun::eval(const std::map<std::string, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw std::domain_error("RatFun::eval: pole");
    return num_.eval(point) / d;
}

std::complex<double> RatFun::eval_c(const std::map<std::string, std::complex<double>>& point) const {
    return num_.eval_c(point) / den_.eval_c(point);
}

std::string RatFun::str() const {
    if (den_ == MPoly(Rat(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun ratfun_parse(const std::string& text) {
    // split on a top-level '/' (depth 0); each side parses as a polynomial
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            // numeric literals like 1/2 are handled by the poly parser; only
            // treat this as the fraction bar when a ')' precedes or '(' follows
            size_t j = i;
            while (j > 0 && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
            size_t k = i + 1;
            while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
            bool bar = (j > 0 && text[j - 1] == ')') || (k < text.size() && text[k] == '(');
            if (bar)
                return RatFun(mpoly_parse(text.substr(0, i)), mpoly_parse(text.substr(i + 1)));
        }
    }
    return RatFun(mpoly_parse(text));
}

}  // namespace k3p

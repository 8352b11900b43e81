// Exact arithmetic in Q(sqrt(5)): values a + b*sqrt(5) with rational a, b,
// plus the Gaussian extension over it used for exact component tests on the
// period quadric.
#pragma once

#include <complex>
#include <string>

#include "k3period/rat.hpp"

namespace k3p {

struct Q5 {
    Rat a{0}, b{0};  // a + b*sqrt(5)

    Q5() = default;
    Q5(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit Q5(long v) : a(v), b(0) {}

    static Q5 sqrt5() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    Q5 conj() const { return {a, -b}; }           // field conjugate: sqrt5 -> -sqrt5
    Rat norm() const { return a * a - 5 * b * b; }  // a^2 - 5 b^2

    friend Q5 operator+(const Q5& x, const Q5& y) { return {x.a + y.a, x.b + y.b}; }
    friend Q5 operator-(const Q5& x, const Q5& y) { return {x.a - y.a, x.b - y.b}; }
    friend Q5 operator-(const Q5& x) { return {-x.a, -x.b}; }
    friend Q5 operator*(const Q5& x, const Q5& y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Q5 inv() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("Q5: inverse of zero");
        return {a / n, -b / n};
    }
    friend Q5 operator/(const Q5& x, const Q5& y) { return x * y.inv(); }
    bool operator==(const Q5& y) const { return a == y.a && b == y.b; }
    bool operator!=(const Q5& y) const { return !(*this == y); }

    // exact sign of a + b*sqrt(5) as a real number
    int sign() const;

    double value() const { return rat_double(a) + rat_double(b) * 2.2360679774997896; }
    std::string str() const;
};

// Element of Q(sqrt5)(i): re + im*i with re, im in Q(sqrt5).
struct Q5c {
    Q5 re, im;

    Q5c() = default;
    Q5c(Q5 r, Q5 i) : re(std::move(r)), im(std::move(i)) {}
    explicit Q5c(long v) : re(v), im(0) {}

    static Q5c unit_i() { return {Q5(0), Q5(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Q5c cplx_conj() const { return {re, -im}; }

    friend Q5c operator+(const Q5c& x, const Q5c& y) { return {x.re + y.re, x.im + y.im}; }
    friend Q5c operator-(const Q5c& x, const Q5c& y) { return {x.re - y.re, x.im - y.im}; }
    friend Q5c operator-(const Q5c& x) { return {-x.re, -x.im}; }
    friend Q5c operator*(const Q5c& x, const Q5c& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    Q5c inv() const {
        Q5 n = re * re + im * im;
        if (n.is_zero()) throw std::domain_error("Q5c: inverse of zero");
        Q5 ni = n.inv();
        return {re * ni, -(im * ni)};
    }
    friend Q5c operator/(const Q5c& x, const Q5c& y) { return x * y.inv(); }
    bool operator==(const Q5c& y) const { return re == y.re && im == y.im; }

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace k3p

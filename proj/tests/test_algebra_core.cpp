#include <doctest.h>

#include <random>

#include "k3period/euler_op.hpp"
#include "k3period/mpoly.hpp"
#include "k3period/qsqrt5.hpp"
#include "k3period/ratfun.hpp"
#include "k3period/series2.hpp"

using namespace k3p;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).get_num() == 1);
    CHECK(rat(2, 4).get_den() == 2);
    CHECK(rat(1, 216) * 18 == rat(1, 12));
    CHECK(rat_parse("-3/9") == rat(-1, 3));
    CHECK_THROWS_AS(rat_div(rat(1), rat(0)), std::domain_error);
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(factorial(7) == 5040);
    CHECK(factorial(0) == 1);
}

TEST_CASE("polynomial arithmetic and printing") {
    MPoly x = MPoly::var("x"), y = MPoly::var("y");
    MPoly p = (x + y) * (x + y);
    CHECK(p == x * x + 2 * x * y + y * y);
    CHECK(p.str() == "x^2 + 2*x*y + y^2");
    CHECK(MPoly(Rat(0)).str() == "0");
    CHECK((x - x).is_zero());
    CHECK(mpoly_parse("(x+y)^2 - x^2 - 2*x*y") == y * y);
    CHECK(mpoly_parse("1/2*x - 3").str() == "1/2*x - 3");

    // derivative of a constant
    CHECK(MPoly(Rat(5)).diff("y").is_zero());

    // formal partial of the quintic discriminant polynomial in lambda
    MPoly t4 = mpoly_parse(
        "lambda^2*(4*lambda-1)^3 - 2*(2+25*lambda*(20*lambda-1))*mu - 3125*mu^2");
    MPoly dt4 = mpoly_parse(
        "2*lambda*(4*lambda-1)^3 + 12*lambda^2*(4*lambda-1)^2 - 2*(1000*lambda-25)*mu");
    CHECK(t4.diff("lambda") == dt4);
}

TEST_CASE("polynomial product rule (randomized)") {
    std::mt19937 rng(20260811);
    auto rand_poly = [&]() {
        MPoly p;
        std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
        for (int t = 0; t < 5; ++t) {
            Monomial m;
            int ex = e(rng), ey = e(rng);
            if (ex) m["x"] = ex;
            if (ey) m["y"] = ey;
            int cc = c(rng);
            if (cc == 0) continue;
            MPoly term;
            term.set_term(m, Rat(cc));
            p += term;
        }
        return p;
    };
    for (int k = 0; k < 25; ++k) {
        MPoly f = rand_poly(), g = rand_poly();
        for (std::string v : {"x", "y"}) {
            CHECK((f * g).diff(v) == f.diff(v) * g + f * g.diff(v));
        }
    }
}

TEST_CASE("gcd and exact division") {
    MPoly l = MPoly::var("lambda"), m = MPoly::var("mu");
    MPoly f = (l - m) * (l + m);
    CHECK(mpoly_divexact(f, l - m) == l + m);
    CHECK(mpoly_gcd(f, (l - m) * l) == l - m);
    CHECK(mpoly_gcd(MPoly(Rat(6)), MPoly(Rat(4))) == MPoly(Rat(1)));
    MPoly q;
    CHECK_FALSE(mpoly_try_divexact(l + m, l - m, q));

    MPoly a = mpoly_parse("x^2*y - x*y^2"), b = mpoly_parse("x^3 - x*y^2");
    MPoly g = mpoly_gcd(a, b);
    CHECK(g == mpoly_parse("x^2 - x*y"));
}

TEST_CASE("rational function canonical form") {
    MPoly l = MPoly::var("lambda"), m = MPoly::var("mu");
    RatFun f(l * l - m * m, l - m);
    CHECK(f == RatFun(l + m));
    CHECK(f.str() == "lambda + mu");

    RatFun g(l, m * 2);
    CHECK(g.str() == "(1/2*lambda)/(mu)");

    // f/f == 1 for nonzero f
    RatFun h(l * m - MPoly(Rat(3)), l + m);
    CHECK((h / h) == RatFun(Rat(1)));
    CHECK_THROWS_AS(h / RatFun(), std::domain_error);

    // canonical(f*g/g) == canonical(f)
    CHECK(h * g / g == h);

    // denominator sign convention: leading coefficient positive
    RatFun s(MPoly(Rat(1)), -l + m);
    CHECK(s.den().leading_term().second > 0);

    // derivative, substitution
    RatFun r(MPoly(Rat(1)), l);
    CHECK(r.diff("lambda") == RatFun(MPoly(Rat(-1)), l * l));
    std::map<std::string, RatFun> sub{{"lambda", RatFun(m)}};
    CHECK(RatFun(l * l).subst(sub) == RatFun(m * m));
}

TEST_CASE("series arithmetic and order bookkeeping") {
    Series2 s(6);
    s.set_coeff(0, 0, Rat(1));
    s.set_coeff(1, 0, Rat(2));
    s.set_coeff(0, 1, Rat(-3));
    Series2 t = s.shift(1, 0);  // multiply by lambda
    CHECK(t.order() == 5);
    CHECK(t.coeff(1, 0) == 1);
    CHECK(t.coeff(2, 0) == 2);
    CHECK((s - s).vanishes());
    Series2 u = s.mul_poly(mpoly_parse("lambda*mu"));
    CHECK(u.order() == 4);
    CHECK(u.coeff(1, 1) == 1);
}

TEST_CASE("euler operators: action and composition") {
    EulerOp tl = EulerOp::theta_lambda();
    EulerOp tm = EulerOp::theta_mu();

    Series2 s(8);
    s.set_coeff(2, 1, Rat(1));  // lambda^2 mu
    CHECK(tl.apply(s).coeff(2, 1) == 2);
    CHECK(tm.apply(s).coeff(2, 1) == 1);

    // theta_lambda (theta_lambda + 2 theta_mu) kills constants
    EulerOp d = euler_compose(tl, tl + tm.scale(Rat(2)));
    Series2 one(8);
    one.set_coeff(0, 0, Rat(1));
    CHECK(d.apply(one).vanishes());

    // commutation rules
    EulerOp lam = EulerOp::monomial(1, 0);
    CHECK(euler_compose(tl, lam) == euler_parse("lambda*tl + lambda"));
    CHECK(euler_compose(tm, lam) == euler_parse("lambda*tm"));

    // (2tl+5tm+1)(2tl+5tm+2) expands and collects
    EulerOp a = euler_parse("2*tl + 5*tm + 1");
    EulerOp b = euler_parse("2*tl + 5*tm + 2");
    CHECK(euler_compose(a, b) ==
          euler_parse("4*tl^2 + 20*tl*tm + 25*tm^2 + 6*tl + 15*tm + 2"));

    // associativity on a few operators
    EulerOp c = euler_parse("mu*tm^2 + lambda");
    CHECK(euler_compose(euler_compose(a, b), c) == euler_compose(a, euler_compose(b, c)));

    // compose/apply compatibility up to the reliable order
    Series2 r(7);
    r.set_coeff(0, 0, Rat(1));
    r.set_coeff(1, 1, Rat(4));
    r.set_coeff(3, 2, Rat(-7, 3));
    Series2 lhs = euler_compose(a, c).apply(r);
    Series2 rhs = a.apply(c.apply(r));
    CHECK((lhs - rhs).vanishes());

    // linearity
    Series2 p(7);
    p.set_coeff(2, 2, Rat(5));
    CHECK((d.apply(r + p.scale(Rat(3))) - (d.apply(r) + d.apply(p).scale(Rat(3)))).vanishes());
}

TEST_CASE("exact Q(sqrt5) arithmetic") {
    Q5 phi(rat(1, 2), rat(1, 2));  // (1+sqrt5)/2
    Q5 one(1);
    CHECK(phi * phi == phi + one);  // golden ratio identity
    CHECK(phi.sign() == 1);
    CHECK(Q5(rat(1), rat(-1)).sign() < 0);   // 1 - sqrt5 < 0
    CHECK(Q5(rat(3), rat(-1)).sign() > 0);   // 3 - sqrt5 > 0
    CHECK((phi / phi) == one);
    Q5c z(Q5(0), phi);
    CHECK((z * z) == Q5c(-(phi * phi), Q5(0)));
}

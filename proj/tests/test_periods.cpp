#include <doctest.h>

#include "k3period/periods.hpp"

using namespace k3p;

TEST_CASE("period series coefficients agree with the closed form") {
    CHECK(period_coefficient(0, 0) == 1);
    CHECK(period_coefficient(1, 0) == 2);
    CHECK(period_coefficient(2, 0) == 6);
    CHECK(period_coefficient(0, 1) == -60);
    CHECK(period_coefficient(1, 1) == -840);
    Series2 s = period_series(6);
    CHECK(s.coeff(0, 1) == -60);
    CHECK(s.order() == 6);
}

TEST_CASE("coefficient recurrences extracted from the operators") {
    // from L1: n(n+2m) c_{n,m} = (2n+5m-1)(2n+5m) c_{n-1,m}
    // from L2: m^3 c_{n-2,m} = -n(n-1)(2n+5m-4) c_{n,m-1}, used at n=2 to
    // step m; together they regenerate the table from c_{0,0}=1 alone.
    const int N = 12;
    std::map<std::pair<int, int>, Rat> c;
    c[{0, 0}] = Rat(1);
    for (int m = 0; m <= N; ++m) {
        if (m > 0) {
            // L2 at n=2: m^3 c_{0,m} + 2*(4+5m-4) c_{2,m-1} = 0
            Rat prev = c.at({2, m - 1});
            c[{0, m}] = Rat(-2) * Rat(5 * m) * prev / (Rat(m) * m * m);
        }
        for (int n = 1; n + m <= N + 2; ++n) {
            Rat lhs = Rat(2 * n + 5 * m - 1) * Rat(2 * n + 5 * m);
            c[{n, m}] = lhs * c.at({n - 1, m}) / (Rat(n) * Rat(n + 2 * m));
        }
    }
    for (int n = 0; n <= N; ++n)
        for (int m = 0; n + m <= N; ++m) CHECK(c.at({n, m}) == period_coefficient(n, m));
}

TEST_CASE("GKZ data, torus and box operators") {
    GKZData d = GKZData::reference();
    d.validate();
    GkzOperators ops = gkz_operators(d);
    REQUIRE(ops.boxes.size() == 2);
    CHECK(ops.boxes[0].str() == "d1^2 - d4*d5");
    CHECK(ops.boxes[1].str() == "d1*d5^2 - d2*d3*d6");
    REQUIRE(ops.torus.size() == 4);
    CHECK(ops.torus[0].str() == "t1 + t2 + t3 + t4 + t5 + t6 + 1");
    CHECK(ops.torus[3].str() == "t4 + -1*t5 + -2*t6");

    GKZData bad = d;
    bad.kernel_vectors.push_back({0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(gkz_operators(bad), std::invalid_argument);
    GKZData bad2 = d;
    bad2.kernel_vectors.push_back({1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(gkz_operators(bad2), std::invalid_argument);
}

TEST_CASE("reduction to two variables reproduces the holonomic pair") {
    HolonomicSystem sys = reduce_to_two_vars(GKZData::reference());
    REQUIRE(sys.operators.size() == 2);
    CHECK(sys.operators[0] == op_L1());
    CHECK(sys.operators[1] == op_L2());
}

TEST_CASE("annihilation of the period series") {
    Series2 eta = period_series(12);
    for (const EulerOp& op : {op_L1(), op_L2(), op_L3()}) {
        AnnihilationReport r = verify_annihilation(op, eta);
        CHECK(r.all_zero);
        CHECK(r.max_checked_order >= 9);
    }
    // a wrong operator is caught at the first coefficient
    EulerOp wrong = EulerOp::theta_lambda() - EulerOp::constant(Rat(1));
    AnnihilationReport r = verify_annihilation(wrong, eta);
    CHECK_FALSE(r.all_zero);
    CHECK(r.first_violation == std::pair<int, int>{0, 0});
}

TEST_CASE("second operator rediscovery") {
    CHECK_THROWS_AS(find_second_operator(0), std::domain_error);
    SecondOperatorResult res = find_second_operator(3);
    CHECK(res.constrained_nullity == 1);
    // annihilation-only nullspace = left multiples of L1 (deg <= 2) plus one
    CHECK(res.unconstrained_nullity == res.multiplier_dim + 1);
    CHECK(res.op == op_L3());
    AnnihilationReport r = verify_annihilation(res.op, period_series(12));
    CHECK(r.all_zero);
}

#include "k3period/periods.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k3period/qlinalg.hpp"

namespace k3p {

GKZData GKZData::reference() {
    GKZData d;
    auto row = [](std::initializer_list<long> xs) {
        std::vector<Rat> r;
        for (long x : xs) r.emplace_back(x);
        return r;
    };
    d.a_matrix = {row({1, 1, 1, 1, 1, 1}),
                  row({0, 1, 0, 0, 0, -1}),
                  row({0, 0, 1, 0, 0, -1}),
                  row({0, 0, 0, 1, -1, -2})};
    d.beta = row({-1, 0, 0, 0});
    d.kernel_vectors = {{2, 0, 0, -1, -1, 0}, {1, -1, -1, 0, 2, -1}};
    d.free_lambda = 4;
    d.free_mu = 5;
    d.e_lambda = {-2, 0, 0, 1, 1, 0};
    d.e_mu = {-5, 1, 1, 2, 0, 1};
    return d;
}

void GKZData::validate() const {
    if (a_matrix.size() != 4 || beta.size() != 4)
        throw std::invalid_argument("GKZData: expected 4 rows");
    for (auto& r : a_matrix)
        if (r.size() != 6) throw std::invalid_argument("GKZData: expected 6 columns");
    for (auto& v : kernel_vectors) {
        if (v.size() != 6) throw std::invalid_argument("GKZData: kernel vector size");
        bool zero = true;
        for (int x : v) zero = zero && x == 0;
        if (zero) throw std::invalid_argument("GKZData: zero kernel vector");
        for (auto& r : a_matrix) {
            Rat s(0);
            for (size_t i = 0; i < 6; ++i) s += r[i] * v[i];
            if (s != 0) throw std::invalid_argument("GKZData: vector not in kernel of A");
        }
    }
}

Rat period_coefficient(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("period_coefficient: negative index");
    Int num = factorial(static_cast<unsigned long>(5 * m + 2 * n));
    Int den = factorial(static_cast<unsigned long>(n));
    Int mf = factorial(static_cast<unsigned long>(m));
    den *= mf * mf * mf;
    den *= factorial(static_cast<unsigned long>(2 * m + n));
    Rat c(num, den);
    c.canonicalize();
    return (m % 2 == 1) ? Rat(-c) : c;
}

Series2 period_series(int order) {
    if (order < 0) throw std::invalid_argument("period_series: negative order");
    Series2 s(order);
    for (int n = 0; n <= order; ++n)
        for (int m = 0; n + m <= order; ++m) s.set_coeff(n, m, period_coefficient(n, m));
    return s;
}

std::string TorusOp::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < theta.size(); ++i) {
        if (theta[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (theta[i] != 1) os << theta[i].get_str() << "*";
        os << "t" << (i + 1);
    }
    if (constant != 0 || first) {
        if (!first) os << " + ";
        os << constant.get_str();
    }
    return os.str();
}

std::string BoxOp::str() const {
    auto part = [](const std::vector<int>& e) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << "d" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        if (first) os << "1";
        return os.str();
    };
    return part(plus) + " - " + part(minus);
}

GkzOperators gkz_operators(const GKZData& data) {
    data.validate();
    GkzOperators out;
    // torus relations: row_j(A) . theta = beta_j, i.e. sum a_ji theta_i - beta_j
    for (size_t j = 0; j < 4; ++j) {
        TorusOp t;
        t.theta = data.a_matrix[j];
        t.constant = -data.beta[j];
        out.torus.push_back(std::move(t));
    }
    for (auto& v : data.kernel_vectors) {
        BoxOp b;
        b.plus.assign(6, 0);
        b.minus.assign(6, 0);
        for (size_t i = 0; i < 6; ++i) {
            if (v[i] > 0) b.plus[i] = v[i];
            if (v[i] < 0) b.minus[i] = -v[i];
        }
        out.boxes.push_back(std::move(b));
    }
    return out;
}

namespace {

// EulerOp linear form c0 + cl*tl + cm*tm
EulerOp linear_form(const Rat& c0, const Rat& cl, const Rat& cm) {
    EulerOp d = EulerOp::constant(c0);
    d += EulerOp::theta_lambda().scale(cl);
    d += EulerOp::theta_mu().scale(cm);
    return d;
}

// sign normalization: positive leading coefficient of the pure-theta part
// when present, otherwise of the lexicographically largest term
EulerOp normalize_sign(const EulerOp& d) {
    if (d.is_zero()) return d;
    const Rat* lead = nullptr;
    EulerOp::Key best{};
    bool have_pure = false;
    for (auto& [k, c] : d.terms()) {
        bool pure = k[0] == 0 && k[1] == 0;
        if (pure && !have_pure) { have_pure = true; best = k; lead = &c; continue; }
        if (pure == have_pure && (lead == nullptr || best < k)) { best = k; lead = &c; }
    }
    return (*lead < 0) ? -d : d;
}

}  // namespace

HolonomicSystem reduce_to_two_vars(const GKZData& data) {
    data.validate();
    // solve the torus relations for the dependent thetas as linear forms
    // (constant, tl, tm); the free pair maps to (theta_lambda, theta_mu)
    std::vector<int> dep;
    for (int i = 0; i < 6; ++i)
        if (i != data.free_lambda && i != data.free_mu) dep.push_back(i);
    QMat m(4, QVec(4, Rat(0)));
    for (size_t j = 0; j < 4; ++j)
        for (size_t k = 0; k < 4; ++k) m[j][k] = data.a_matrix[j][static_cast<size_t>(dep[k])];
    // rhs columns: beta - col(free_lambda)*tl - col(free_mu)*tm
    QVec rc(4), rl(4), rm(4);
    for (size_t j = 0; j < 4; ++j) {
        rc[j] = data.beta[j];
        rl[j] = -data.a_matrix[j][static_cast<size_t>(data.free_lambda)];
        rm[j] = -data.a_matrix[j][static_cast<size_t>(data.free_mu)];
    }
    QVec sc = solve(m, rc), sl = solve(m, rl), sm = solve(m, rm);
    // substitution table: theta_i -> linear form
    std::vector<EulerOp> subst(6);
    for (size_t k = 0; k < 4; ++k)
        subst[static_cast<size_t>(dep[k])] = linear_form(sc[k], sl[k], sm[k]);
    subst[static_cast<size_t>(data.free_lambda)] = EulerOp::theta_lambda();
    subst[static_cast<size_t>(data.free_mu)] = EulerOp::theta_mu();

    // consistency: substituted torus relations must vanish identically
    for (size_t j = 0; j < 4; ++j) {
        EulerOp acc = EulerOp::constant(-data.beta[j]);
        for (size_t i = 0; i < 6; ++i) acc += subst[i].scale(data.a_matrix[j][i]);
        if (!acc.is_zero())
            throw std::logic_error("reduce_to_two_vars: torus relations inconsistent");
    }

    HolonomicSystem sys;
    int idx = 0;
    for (auto& v : data.kernel_vectors) {
        // falling-factorial products of substituted thetas on both sides
        auto falling = [&](const std::vector<int>& e) {
            EulerOp prod = EulerOp::constant(Rat(1));
            for (size_t i = 0; i < 6; ++i)
                for (int t = 0; t < e[i]; ++t)
                    prod = euler_compose(prod, subst[i] - EulerOp::constant(Rat(t)));
            return prod;
        };
        std::vector<int> up(6, 0), dn(6, 0);
        for (size_t i = 0; i < 6; ++i) {
            if (v[i] > 0) up[i] = v[i];
            if (v[i] < 0) dn[i] = -v[i];
        }
        // monomial weight of a^v in (lambda, mu): read off at the free slots,
        // then verify v = p*e_lambda + q*e_mu
        int p = v[static_cast<size_t>(data.free_lambda)];
        int q = v[static_cast<size_t>(data.free_mu)];
        for (size_t i = 0; i < 6; ++i)
            if (v[i] != p * data.e_lambda[i] + q * data.e_mu[i])
                throw std::invalid_argument("reduce_to_two_vars: kernel vector outside the torus weights");
        EulerOp lhs = euler_compose(EulerOp::monomial(std::max(-p, 0), std::max(-q, 0)), falling(up));
        EulerOp rhs = euler_compose(EulerOp::monomial(std::max(p, 0), std::max(q, 0)), falling(dn));
        sys.operators.push_back(normalize_sign(lhs - rhs));
        sys.names.push_back("L" + std::to_string(++idx));
    }
    return sys;
}

AnnihilationReport verify_annihilation(const EulerOp& op, const Series2& s) {
    AnnihilationReport r;
    Series2 out = op.apply(s);
    r.max_checked_order = out.order();
    r.first_violation = out.first_nonzero();
    r.all_zero = r.first_violation.first < 0;
    return r;
}

EulerOp op_L1() {
    EulerOp tl = EulerOp::theta_lambda(), tm = EulerOp::theta_mu();
    EulerOp a = linear_form(Rat(1), Rat(2), Rat(5));
    EulerOp b = linear_form(Rat(2), Rat(2), Rat(5));
    return euler_compose(tl, tl + tm.scale(Rat(2))) -
           euler_compose(EulerOp::monomial(1, 0), euler_compose(a, b));
}

EulerOp op_L2() {
    EulerOp tl = EulerOp::theta_lambda(), tm = EulerOp::theta_mu();
    EulerOp cub = euler_compose(tm, euler_compose(tm, tm));
    EulerOp fall = euler_compose(tl, tl - EulerOp::constant(Rat(1)));
    return euler_compose(EulerOp::monomial(2, 0), cub) +
           euler_compose(EulerOp::monomial(0, 1),
                         euler_compose(fall, linear_form(Rat(1), Rat(2), Rat(5))));
}

EulerOp op_L3() {
    EulerOp tl = EulerOp::theta_lambda(), tm = EulerOp::theta_mu();
    EulerOp q1 = euler_parse("4*tl^2 - 2*tl*tm + 5*tm^2");
    EulerOp q2 = euler_parse("1 + 3*tl + 5*tm + 2*tl^2 + 5*tl*tm");
    EulerOp fall = euler_compose(tl, tl - EulerOp::constant(Rat(1)));
    return euler_compose(EulerOp::monomial(2, 0), q1) -
           euler_compose(EulerOp::monomial(3, 0), q2).scale(Rat(8)) +
           euler_compose(EulerOp::monomial(0, 1), fall).scale(Rat(25));
}

SecondOperatorResult find_second_operator(int basis_degree, int series_order) {
    if (basis_degree < 0) throw std::invalid_argument("find_second_operator: negative degree");
    const int d = basis_degree;
    // ansatz slots: theta parts (k,l) with k+l <= 2, coefficient monomials (a,b), a+b <= d
    const std::vector<std::pair<int, int>> theta_slots = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    std::vector<std::pair<int, int>> mons;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) mons.push_back({a, b});
    const size_t ncols = theta_slots.size() * mons.size();
    auto col = [&](size_t slot, size_t mon) { return slot * mons.size() + mon; };

    Series2 eta = period_series(series_order);
    const int checked = series_order - d;  // reliable order of the ansatz image
    QMat rows;
    // annihilation conditions: coefficient of lambda^n mu^m in D(eta) vanishes
    for (int n = 0; n <= checked; ++n)
        for (int m = 0; n + m <= checked; ++m) {
            QVec row(ncols, Rat(0));
            for (size_t si = 0; si < theta_slots.size(); ++si)
                for (size_t mi = 0; mi < mons.size(); ++mi) {
                    auto [a, b] = mons[mi];
                    int sn = n - a, sm = m - b;
                    if (sn < 0 || sm < 0) continue;
                    Rat v = eta.coeff(sn, sm);
                    for (int t = 0; t < theta_slots[si].first; ++t) v *= sn;
                    for (int t = 0; t < theta_slots[si].second; ++t) v *= sm;
                    row[col(si, mi)] = v;
                }
            rows.push_back(std::move(row));
        }
    int unconstrained = static_cast<int>(nullspace(rows).size());

    // gauge rows: f6 (slot tm^2) supported on lambda^2 only; f5 (slot tl*tm)
    // has no total-degree-1 monomials
    QMat gauged = rows;
    for (size_t mi = 0; mi < mons.size(); ++mi) {
        auto [a, b] = mons[mi];
        if (!(a == 2 && b == 0)) {
            QVec row(ncols, Rat(0));
            row[col(5, mi)] = Rat(1);
            gauged.push_back(std::move(row));
        }
        if (a + b == 1) {
            QVec row(ncols, Rat(0));
            row[col(4, mi)] = Rat(1);
            gauged.push_back(std::move(row));
        }
    }
    auto basis = nullspace(gauged);
    SecondOperatorResult res;
    res.unconstrained_nullity = unconstrained;
    res.constrained_nullity = static_cast<int>(basis.size());
    // dimension of { g * L1 : deg g <= d-1 } inside the ansatz space
    res.multiplier_dim = d >= 1 ? d * (d + 1) / 2 : 0;
    if (basis.empty())
        throw std::domain_error("find_second_operator: no solution at degree " +
                                std::to_string(basis_degree));
    if (basis.size() > 1)
        throw std::domain_error("find_second_operator: gauge did not isolate a single operator");

    EulerOp op;
    for (size_t si = 0; si < theta_slots.size(); ++si)
        for (size_t mi = 0; mi < mons.size(); ++mi) {
            Rat c = basis[0][col(si, mi)];
            if (c == 0) continue;
            op.add_term({mons[mi].first, mons[mi].second, theta_slots[si].first, theta_slots[si].second}, c);
        }
    // integer-primitive scaling with positive tm^2 coefficient
    Int num_gcd(0), den_lcm(1);
    for (auto& [k, c] : op.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat s(num_gcd, den_lcm);
    s.canonicalize();
    op = op.scale(Rat(1) / s);
    MPoly f6 = op.theta_coefficient(0, 2);
    if (!f6.is_zero() && f6.leading_term().second < 0) op = op.scale(Rat(-1));
    res.op = op;
    return res;
}

}  // namespace k3p

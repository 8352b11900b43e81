#include "k3period/qlinalg.hpp"

#include <stdexcept>

namespace k3p {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::vector<QVec> nullspace(const QMat& m) {
    if (m.empty()) return {};
    QMat a = m;
    auto pivots = rref(a);
    size_t cols = m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<QVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = Rat(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -a[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVec solve(QMat m, QVec b) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n) throw std::invalid_argument("solve: need square matrix");
    for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    if (pivots.size() != n) throw std::domain_error("solve: singular system");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

QVec char_poly(const QMat& a) {
    size_t n = a.size();
    QMat m = a;  // M_1 = A
    QVec c(n + 1, Rat(0));
    c[n] = Rat(1);
    QMat mk(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) mk[i][i] = Rat(1);  // identity
    // c_{n-k} coefficients via traces
    QMat cur = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // cur = A * (prev + c_{n-k+1} I)
            QMat tmp(n, QVec(n, Rat(0)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Rat s(0);
                    for (size_t t = 0; t < n; ++t) s += a[i][t] * mk[t][j];
                    tmp[i][j] = s;
                }
            cur = std::move(tmp);
        }
        Rat tr(0);
        for (size_t i = 0; i < n; ++i) tr += cur[i][i];
        Rat ck = -tr / Rat(static_cast<long>(k));
        c[n - k] = ck;
        mk = cur;
        for (size_t i = 0; i < n; ++i) mk[i][i] += ck;
    }
    return c;
}

Rat det(QMat m) {
    size_t n = m.size();
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) { std::swap(m[p], m[c]); d = -d; }
        d *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

Signature symmetric_signature(const QMat& a) {
    // All eigenvalues are real, so Descartes' rule is exact on the
    // characteristic polynomial: positive roots = sign changes of p(t),
    // negative roots = sign changes of p(-t), zeros = trailing zeros.
    QVec c = char_poly(a);
    Signature s;
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    s.zero = static_cast<int>(low);
    auto changes = [&](bool flip) {
        int prev = 0, n = 0;
        for (size_t k = low; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            int sg = sgn(c[k]);
            if (flip && ((k & 1u) == 1u)) sg = -sg;
            if (prev != 0 && sg != prev) ++n;
            prev = sg;
        }
        return n;
    };
    s.positive = changes(false);
    s.negative = changes(true);
    return s;
}

}  // namespace k3p

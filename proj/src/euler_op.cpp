#include "k3period/euler_op.hpp"

#include <sstream>
#include <stdexcept>

namespace k3p {

EulerOp EulerOp::constant(const Rat& c) {
    EulerOp d;
    d.add_term({0, 0, 0, 0}, c);
    return d;
}

EulerOp EulerOp::theta_lambda() { return term(0, 0, 1, 0, Rat(1)); }
EulerOp EulerOp::theta_mu() { return term(0, 0, 0, 1, Rat(1)); }
EulerOp EulerOp::monomial(int i, int j) { return term(i, j, 0, 0, Rat(1)); }

EulerOp EulerOp::term(int i, int j, int k, int l, const Rat& c) {
    if (i < 0 || j < 0 || k < 0 || l < 0) throw std::invalid_argument("EulerOp::term: negative exponent");
    EulerOp d;
    d.add_term({i, j, k, l}, c);
    return d;
}

void EulerOp::add_term(const Key& k, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) terms_.emplace(k, c);
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

EulerOp EulerOp::operator-() const {
    EulerOp out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

EulerOp& EulerOp::operator+=(const EulerOp& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

EulerOp& EulerOp::operator-=(const EulerOp& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

EulerOp operator+(EulerOp a, const EulerOp& b) { return a += b; }
EulerOp operator-(EulerOp a, const EulerOp& b) { return a -= b; }

EulerOp EulerOp::scale(const Rat& c) const {
    EulerOp out;
    if (c == 0) return out;
    for (auto& [k, v] : terms_) out.terms_[k] = v * c;
    return out;
}

int EulerOp::coeff_degree() const {
    int d = 0;
    for (auto& [k, c] : terms_) d = std::max(d, k[0] + k[1]);
    return d;
}

int EulerOp::theta_degree() const {
    int d = 0;
    for (auto& [k, c] : terms_) d = std::max(d, k[2] + k[3]);
    return d;
}

MPoly EulerOp::theta_coefficient(int k, int l) const {
    MPoly out;
    for (auto& [key, c] : terms_) {
        if (key[2] != k || key[3] != l) continue;
        Monomial m;
        if (key[0]) m["lambda"] = key[0];
        if (key[1]) m["mu"] = key[1];
        MPoly t;
        t.set_term(m, c);
        out += t;
    }
    return out;
}

std::string EulerOp::str() const {
    if (terms_.empty()) return "0";
    // group by theta part, highest theta degree first
    std::map<std::pair<int, int>, MPoly> groups;
    for (auto& [k, c] : terms_) {
        MPoly t;
        Monomial m;
        if (k[0]) m["lambda"] = k[0];
        if (k[1]) m["mu"] = k[1];
        t.set_term(m, c);
        groups[{k[2], k[3]}] += t;
    }
    std::vector<std::pair<std::pair<int, int>, MPoly>> gs(groups.begin(), groups.end());
    std::sort(gs.begin(), gs.end(), [](auto& a, auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [tk, p] : gs) {
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (tk.first) { os << "*tl"; if (tk.first > 1) os << "^" << tk.first; }
        if (tk.second) { os << "*tm"; if (tk.second > 1) os << "^" << tk.second; }
    }
    return os.str();
}

Series2 EulerOp::apply(const Series2& s) const {
    Series2 out(s.order() - coeff_degree());
    for (auto& [k, c] : terms_) {
        for (auto& [nm, a] : s.coeffs()) {
            int n = nm.first, m = nm.second;
            int nn = n + k[0], mm = m + k[1];
            if (nn + mm > out.order()) continue;
            Rat v = a * c;
            for (int p = 0; p < k[2]; ++p) v *= n;
            for (int p = 0; p < k[3]; ++p) v *= m;
            if (v == 0) continue;
            out.set_coeff(nn, mm, out.coeff(nn, mm) + v);
        }
    }
    return out;
}

EulerOp euler_compose(const EulerOp& a, const EulerOp& b) {
    EulerOp out;
    for (auto& [ka, ca] : a.terms()) {
        for (auto& [kb, cb] : b.terms()) {
            // theta_l^k . lambda^e = lambda^e (theta_l + e)^k, same for mu.
            // (theta + e)^k expands binomially since theta commutes with itself.
            int i = ka[0] + kb[0], j = ka[1] + kb[1];
            int kl = ka[2], km = ka[3];
            int e = kb[0], f = kb[1];
            for (int p = 0; p <= kl; ++p) {
                Rat cl = Rat(binomial(kl, p)) * rat_pow(Rat(e), kl - p);
                if (cl == 0) continue;
                for (int q = 0; q <= km; ++q) {
                    Rat cm = Rat(binomial(km, q)) * rat_pow(Rat(f), km - q);
                    if (cm == 0) continue;
                    out.add_term({i, j, p + kb[2], q + kb[3]}, ca * cb * cl * cm);
                }
            }
        }
    }
    return out;
}

EulerOp euler_from_poly(const MPoly& p) {
    EulerOp out;
    for (auto& [m, c] : p.terms()) {
        int i = 0, j = 0, k = 0, l = 0;
        for (auto& [v, e] : m) {
            if (v == "lambda") i = e;
            else if (v == "mu") j = e;
            else if (v == "tl") k = e;
            else if (v == "tm") l = e;
            else throw std::invalid_argument("euler_from_poly: foreign variable " + v);
        }
        out.add_term({i, j, k, l}, c);
    }
    return out;
}

EulerOp euler_parse(const std::string& text) { return euler_from_poly(mpoly_parse(text)); }

}  // namespace k3p

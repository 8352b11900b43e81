#include "k3period/series2.hpp"

#include <sstream>
#include <stdexcept>

namespace k3p {

const std::string& Series2::var_lambda() {
    static const std::string v = "lambda";
    return v;
}

const std::string& Series2::var_mu() {
    static const std::string v = "mu";
    return v;
}

Rat Series2::coeff(int n, int m) const {
    auto it = coeffs_.find({n, m});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void Series2::set_coeff(int n, int m, const Rat& c) {
    if (n < 0 || m < 0) throw std::invalid_argument("Series2: negative index");
    if (n + m > order_) return;
    if (c == 0) coeffs_.erase({n, m}); else coeffs_[{n, m}] = c;
}

Series2 Series2::operator+(const Series2& o) const {
    Series2 out(std::min(order_, o.order_));
    for (auto& [nm, c] : coeffs_) if (nm.first + nm.second <= out.order_) out.coeffs_[nm] = c;
    for (auto& [nm, c] : o.coeffs_) {
        if (nm.first + nm.second > out.order_) continue;
        auto it = out.coeffs_.find(nm);
        if (it == out.coeffs_.end()) out.coeffs_[nm] = c;
        else {
            it->second += c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

Series2 Series2::operator-(const Series2& o) const { return *this + o.scale(Rat(-1)); }

Series2 Series2::scale(const Rat& c) const {
    Series2 out(order_);
    if (c == 0) return out;
    for (auto& [nm, v] : coeffs_) out.coeffs_[nm] = v * c;
    return out;
}

Series2 Series2::shift(int i, int j) const {
    if (i < 0 || j < 0) throw std::invalid_argument("Series2::shift: negative shift");
    Series2 out(order_ - i - j);
    for (auto& [nm, v] : coeffs_) {
        int n = nm.first + i, m = nm.second + j;
        if (n + m <= out.order_) out.coeffs_[{n, m}] = v;
    }
    return out;
}

Series2 Series2::mul_poly(const MPoly& p) const {
    Series2 out(order_ - std::max(p.degree(), 0));
    for (auto& [mon, c] : p.terms()) {
        int i = 0, j = 0;
        for (auto& [v, e] : mon) {
            if (v == var_lambda()) i = e;
            else if (v == var_mu()) j = e;
            else throw std::invalid_argument("Series2::mul_poly: foreign variable " + v);
        }
        for (auto& [nm, a] : coeffs_) {
            int n = nm.first + i, m = nm.second + j;
            if (n + m > out.order_) continue;
            auto it = out.coeffs_.find({n, m});
            if (it == out.coeffs_.end()) out.coeffs_[{n, m}] = a * c;
            else {
                it->second += a * c;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

bool Series2::vanishes() const {
    for (auto& [nm, c] : coeffs_)
        if (nm.first + nm.second <= order_ && c != 0) return false;
    return true;
}

std::pair<int, int> Series2::first_nonzero() const {
    std::pair<int, int> best{-1, -1};
    for (auto& [nm, c] : coeffs_) {
        if (c == 0 || nm.first + nm.second > order_) continue;
        if (best.first < 0) { best = nm; continue; }
        int db = best.first + best.second, dn = nm.first + nm.second;
        if (dn < db || (dn == db && nm < best)) best = nm;
    }
    return best;
}

std::string Series2::str(int max_degree) const {
    std::ostringstream os;
    os << "[order " << order_ << "]";
    for (int d = 0; d <= std::min(order_, max_degree); ++d)
        for (int n = d; n >= 0; --n) {
            Rat c = coeff(n, d - n);
            if (c == 0) continue;
            os << " + (" << c.get_str() << ")*l^" << n << "*m^" << (d - n);
        }
    return os.str();
}

}  // namespace k3p

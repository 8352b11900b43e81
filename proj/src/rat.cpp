#include "k3period/rat.hpp"

namespace k3p {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Rat rat_div(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("rat_div: division by zero");
    return a / b;
}

Rat rat_pow(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    if (a == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rat(0);
    }
    Rat base = e < 0 ? Rat(1) / a : a;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat out(1);
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double rat_double(const Rat& q) { return q.get_d(); }

std::complex<double> rat_complex(const Rat& q) { return {q.get_d(), 0.0}; }

}  // namespace k3p

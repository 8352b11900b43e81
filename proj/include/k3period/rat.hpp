// Exact rational scalars on top of GMP.
//
// Rat is mpq_class: always stored canonically (gcd(|num|,den)=1, den>=1),
// which the GMP C++ layer maintains for every arithmetic result.
#pragma once

#include <gmpxx.h>
#include <complex>
#include <stdexcept>
#include <string>

namespace k3p {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "-3", "5/6", "0". Whitespace is not accepted.
Rat rat_parse(const std::string& s);

Rat rat_div(const Rat& a, const Rat& b);  // explicit divide-by-zero signalling
Rat rat_pow(const Rat& a, long e);        // e may be negative for nonzero a

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

std::string rat_str(const Rat& q);
double rat_double(const Rat& q);
std::complex<double> rat_complex(const Rat& q);

}  // namespace k3p

#include "k3period/qsqrt5.hpp"

#include <sstream>

namespace k3p {

int Q5::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 5 b^2; sign follows the larger side
    Rat d = a * a - 5 * b * b;  // (a + b*sqrt5)(a - b*sqrt5)
    int sd = sgn(d);
    // a - b*sqrt5 has the sign of a here (|a| decides when signs differ)
    return sd == 0 ? 0 : sd * sa;
}

std::string Q5::str() const {
    std::ostringstream os;
    os << a.get_str();
    if (b != 0) os << (b > 0 ? " + " : " - ") << Rat(abs(b)).get_str() << "*sqrt5";
    return os.str();
}

}  // namespace k3p

#include "cantor/real.hpp"

#include <sstream>

namespace cantor {

Real to_real(const BigInt& x) { return Real(x.get_str()); }

Real to_real(const Rational& x) { return to_real(x.numerator()) / to_real(x.denominator()); }

std::string to_string(const Real& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

}  // namespace cantor

#include "accdom/count.hpp"

#include <sstream>

namespace accdom {

Count binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    if (b > a - b) b = a - b;
    Count r = 1;
    for (long long j = 1; j <= b; ++j) {
        r *= a - b + j;
        r /= j;  // exact: r is C(a-b+j, j) after this step
    }
    return r;
}

Count pow2(long long k) {
    Count r = 1;
    return r << k;
}

std::string CountPolynomial::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ',';
        out << coeffs[i];
    }
    out << ']';
    return out.str();
}

}  // namespace accdom

#pragma once

// Exact integer arithmetic for set counts and count polynomials.
// Counts like C(2^d, i) overflow 64 bits quickly, so everything that
// leaves the oracle layer is arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace accdom {

using Count = boost::multiprecision::cpp_int;

// C(a,b) with the convention C(a,b) = 0 for b < 0 or b > a, which the
// paper's sums rely on silently.
Count binomial(long long a, long long b);

Count pow2(long long k);

// Coefficient vector indexed by cardinality 0..n; coeffs[i] is the number
// of (accurate) dominating sets of size i.
struct CountPolynomial {
    std::vector<Count> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CountPolynomial&) const = default;
    std::string to_string() const;  // "[0,1,3,1]"
};

}  // namespace accdom

#pragma once

#include "reflcat/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace reflcat {

unsigned euler_phi(unsigned n);

/// Divisors of n in increasing order.
std::vector<unsigned> divisors(unsigned n);

inline unsigned gcd_u(unsigned a, unsigned b) {
    while (b != 0) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline unsigned long lcm_u(unsigned long a, unsigned long b) {
    return a / gcd_u(static_cast<unsigned>(a), static_cast<unsigned>(b)) * b;
}

/// Coefficients of the l-th cyclotomic polynomial Phi_l, degree phi(l),
/// index = power of x, monic. Computed by dividing x^l - 1 by the Phi_d of
/// the proper divisors d of l; results are cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned l);

/// FNV-1a over the raw bytes; used for data-file checksums.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace reflcat

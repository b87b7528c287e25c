#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sworbit {

// All matrix and group arithmetic is exact.  Smith pivoting can blow up
// fixed-width words even on small inputs, so entries are arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& value) { return value < 0 ? Int(-value) : value; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Euclidean remainder in [0, modulus), modulus > 0.
inline Int mod_floor(const Int& value, const Int& modulus) {
    Int r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

inline std::string int_to_string(const Int& value) { return value.str(); }

}  // namespace sworbit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qperiod {

// All coefficient arithmetic in this library is exact.  Congruence tests and
// integrality assertions are meaningless under rounding, so no floating point
// appears anywhere in a computation path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

// Nonnegative residue, works for negative a.
inline long long imod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline Int imod(const Int& a, long long m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_odd_prime(long long n) { return n > 2 && is_prime(n); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (is_integral(v)) return rat_num(v).str();
    return rat_num(v).str() + "/" + rat_den(v).str();
}

}  // namespace qperiod

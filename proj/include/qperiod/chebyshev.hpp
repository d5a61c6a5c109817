#pragma once

#include <cassert>
#include <vector>

#include "qperiod/laurent.hpp"
#include "qperiod/numeric.hpp"

namespace qperiod {

// Expansion of the skein element e_i of the solid torus in powers of the core
// curve z, from e_0 = 1, e_1 = z, e_{i+1} = z e_i - e_{i-1}.  Coefficient of
// z^m is coeffs[m]; c_{i,i} = 1 and c_{i,m} = 0 unless m = i (mod 2).
struct ChebyshevExpansion {
    long long color;
    std::vector<Int> coeffs;

    Laurent<Int> as_laurent() const {
        Laurent<Int> r('z');
        for (std::size_t m = 0; m < coeffs.size(); ++m)
            r.add_term(static_cast<long long>(m), coeffs[m]);
        return r;
    }
};

inline ChebyshevExpansion chebyshev_coeffs(long long i) {
    assert(i >= 0);
    std::vector<Int> prev = {Int(1)};       // e_0
    std::vector<Int> cur = {Int(0), Int(1)};  // e_1
    if (i == 0) return {0, prev};
    for (long long k = 1; k < i; ++k) {
        std::vector<Int> next(cur.size() + 1, Int(0));
        for (std::size_t m = 0; m < cur.size(); ++m) next[m + 1] = cur[m];
        for (std::size_t m = 0; m < prev.size(); ++m) next[m] -= prev[m];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {i, cur};
}

}  // namespace qperiod

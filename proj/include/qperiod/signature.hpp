#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "qperiod/numeric.hpp"

namespace qperiod {

using IntMatrix = std::vector<std::vector<Int>>;

// Signature of a symmetric integer matrix by congruence diagonalization over
// the rationals: repeated symmetric row/column operations preserve the
// signature, zero eigenvalues contribute nothing.  Exact, no floating point.
inline long long signature_exact(const IntMatrix& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("signature_exact: matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i])
                throw std::invalid_argument("signature_exact: matrix not symmetric");
            s[i][j] = Rat(m[i][j]);
        }
    }

    long long sig = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i][i] == 0) {
            // Prefer swapping in a nonzero diagonal entry; otherwise fold a
            // nonzero off-diagonal entry onto the diagonal (the congruence
            // that adds row and column j to row and column i).
            std::size_t pivot = i;
            for (std::size_t j = i + 1; j < n && pivot == i; ++j)
                if (s[j][j] != 0) pivot = j;
            if (pivot != i) {
                std::swap(s[pivot], s[i]);
                for (std::size_t r = 0; r < n; ++r) std::swap(s[r][pivot], s[r][i]);
            } else {
                std::size_t j = i;
                for (std::size_t k = i + 1; k < n && j == i; ++k)
                    if (s[i][k] != 0) j = k;
                if (j == i) continue;  // whole row zero: null direction
                for (std::size_t r = 0; r < n; ++r) s[i][r] += s[j][r];
                for (std::size_t r = 0; r < n; ++r) s[r][i] += s[r][j];
            }
        }
        if (s[i][i] > 0)
            ++sig;
        else
            --sig;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s[j][i] == 0) continue;
            Rat f = s[j][i] / s[i][i];
            for (std::size_t r = 0; r < n; ++r) s[j][r] -= f * s[i][r];
            for (std::size_t r = 0; r < n; ++r) s[r][j] -= f * s[r][i];
        }
    }
    return sig;
}

// Exact determinant (fraction-free via rationals; matrices here are tiny).
inline Int det_exact(const IntMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return Int(1);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);

    Rat det(1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pivot = i;
        while (pivot < n && a[pivot][i] == 0) ++pivot;
        if (pivot == n) return Int(0);
        if (pivot != i) {
            std::swap(a[pivot], a[i]);
            det = -det;
        }
        det *= a[i][i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j][i] == 0) continue;
            Rat f = a[j][i] / a[i][i];
            for (std::size_t k = i; k < n; ++k) a[j][k] -= f * a[i][k];
        }
    }
    assert(is_integral(det));
    return rat_num(det);
}

}  // namespace qperiod

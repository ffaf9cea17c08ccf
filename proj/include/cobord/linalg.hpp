#pragma once

#include <optional>
#include <vector>

#include "cobord/integer.hpp"

namespace cobord {

// Dense exact rational linear algebra. Everything here is desk scale
// (matrices indexed by partitions of n <= 12, i.e. at most ~80 rows),
// so plain Gauss-Jordan with exact pivots is enough.

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Unique solution of a x = b, or nullopt when a is singular.
inline std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b) {
    const size_t n = a.size();
    if (n == 0) return RationalVector{};
    for (size_t col = 0, row = 0; col < n; ++col, ++row) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const Rational d = a[row][col];
        for (size_t j = col; j < n; ++j) a[row][j] /= d;
        b[row] /= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
    }
    return b;
}

inline std::optional<RationalMatrix> invert(RationalMatrix a) {
    const size_t n = a.size();
    RationalMatrix inv(n, RationalVector(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0, row = 0; col < n; ++col, ++row) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[row]);
        std::swap(inv[piv], inv[row]);
        const Rational d = a[row][col];
        for (size_t j = 0; j < n; ++j) {
            a[row][j] /= d;
            inv[row][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[row][j];
                inv[r][j] -= f * inv[row][j];
            }
        }
    }
    return inv;
}

inline Rational determinant(RationalMatrix a) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational d = a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / d;
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace cobord

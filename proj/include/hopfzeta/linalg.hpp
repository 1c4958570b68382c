#ifndef HOPFZETA_LINALG_HPP
#define HOPFZETA_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "hopfzeta/rational.hpp"

namespace hz {

using Matrix = std::vector<std::vector<Rational>>;

// Row-reduce a copy of m; returns the rank.
inline size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Solve the square system A x = b exactly. Throws if A is singular.
inline std::vector<Rational> solve(Matrix a, std::vector<Rational> b) {
    const size_t n = a.size();
    if (n == 0) return {};
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::runtime_error("solve: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace hz

#endif

#pragma once

// Exact integer/rational linear algebra helpers. Everything here is small and
// dense; the matrices come from knot diagrams (dimension ~ crossing count),
// so clarity beats asymptotics.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotcomb/errors.hpp"

namespace knotcomb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<long long>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        require(row.size() == n, "determinant: matrix not square");
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool is_symmetric(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

}  // namespace knotcomb

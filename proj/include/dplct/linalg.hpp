#ifndef DPLCT_LINALG_HPP
#define DPLCT_LINALG_HPP

#include <optional>
#include <vector>

#include "dplct/upoly.hpp"

namespace dplct {

/// Determinant by Gaussian elimination; pivot searches use the guarded zero
/// test, so composite extension moduli split rather than give wrong answers.
template <class K>
K det_guarded(std::vector<std::vector<K>> m, const K& ctx) {
    const std::size_t n = m.size();
    K det = field_traits<K>::one(ctx);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!field_traits<K>::is_zero(m[r][col])) {
                piv = r;
                break;
            }
        }
        if (piv == n) return field_traits<K>::zero(ctx);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        K inv = field_traits<K>::inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (field_traits<K>::is_exact_zero(m[r][col])) continue;
            K factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return det;
}

/// Kernel basis of an r x c matrix, deterministic echelon order.
template <class K>
std::vector<std::vector<K>> kernel_basis(std::vector<std::vector<K>> m, const K& ctx) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!field_traits<K>::is_zero(m[r][col])) {
                piv = r;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        K inv = field_traits<K>::inv(m[rank][col]);
        for (std::size_t c = 0; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            if (field_traits<K>::is_exact_zero(m[r][col])) continue;
            K f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(cols, field_traits<K>::zero(ctx));
        v[free] = field_traits<K>::one(ctx);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dplct

#endif

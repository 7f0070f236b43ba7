#include "qgda/linalg.hpp"

#include <utility>

namespace qgda::linalg {

std::optional<std::vector<CyclotomicNumber>> solve(
    Matrix m, std::vector<CyclotomicNumber> rhs) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        const CyclotomicNumber inv = m[col][col].inverse();
        for (size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const CyclotomicNumber factor = m[row][col];
            for (size_t j = col; j < n; ++j)
                m[row][j] -= factor * m[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

int rank(Matrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        const CyclotomicNumber inv = m[r][col].inverse();
        for (size_t j = col; j < cols; ++j) m[r][j] *= inv;
        for (size_t row = 0; row < rows; ++row) {
            if (row == r || m[row][col].is_zero()) continue;
            const CyclotomicNumber factor = m[row][col];
            for (size_t j = col; j < cols; ++j)
                m[row][j] -= factor * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace qgda::linalg

#include "heisvoa/linalg.hpp"

#include <stdexcept>

namespace heisvoa {

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, RatVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[row], m[pivot]);
        Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t matrix_rank(RatMatrix m) {
    return rref(m).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m, std::size_t cols) {
    RatMatrix r = m;
    if (r.empty())
        r.emplace_back(cols, 0);
    auto pivots = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        RatVector v(cols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& target) {
    if (m.size() != target.size())
        throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    RatMatrix aug(rows, RatVector(cols + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            aug[i][j] = m[i][j];
        aug[i][cols] = target[i];
    }
    auto pivots = rref(aug);
    RatVector x(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols)
            return std::nullopt; // inconsistent row
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

RatMatrix invert(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix aug(n, RatVector(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw std::invalid_argument("invert: matrix not square");
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        throw std::invalid_argument("invert: singular matrix");
    RatMatrix out(n, RatVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = aug[i][n + j];
    return out;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size())
            throw std::invalid_argument("mat_vec: dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
    }
    return out;
}

bool is_zero_matrix(const RatMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (e != 0)
                return false;
    return true;
}

} // namespace heisvoa

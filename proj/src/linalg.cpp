#include "coxh4/linalg.hpp"

namespace coxh4 {

std::optional<std::vector<Polynomial>> solve_full_column_rank(ScalarMatrix a,
                                                              std::vector<Polynomial> b) {
    std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || m < n) return std::nullopt;
    std::vector<std::size_t> pivot_row(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < m && a.at(p, col).is_zero()) ++p;
        if (p == m) return std::nullopt;  // rank deficient
        if (p != row) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(row, c));
            std::swap(b[p], b[row]);
        }
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < n; ++c) a.at(row, c) *= inv;
        b[row] = b[row].scaled(inv);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(row, c);
            b[r] -= b[row].scaled(f);
        }
        pivot_row[col] = row;
        ++row;
    }
    // consistency of the remaining rows
    for (std::size_t r = row; r < m; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Polynomial> x;
    x.reserve(n);
    for (std::size_t col = 0; col < n; ++col) x.push_back(b[pivot_row[col]]);
    return x;
}

std::vector<std::vector<Scalar>> eigen_kernel(const ScalarMatrix& a, const Scalar& lambda) {
    std::size_t n = a.rows();
    ScalarMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) -= lambda;

    // reduced row echelon
    std::vector<long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(p, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < n; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }

    std::vector<std::vector<Scalar>> kernel;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[free_col] = Scalar(1);
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -m.at(static_cast<std::size_t>(pivot_of_col[col]), free_col);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::size_t matrix_rank(ScalarMatrix a) {
    std::size_t m = a.rows(), n = a.cols(), row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a.at(p, col).is_zero()) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(row, c));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < n; ++c) a.at(row, c) *= inv;
        for (std::size_t r = row + 1; r < m; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(row, c);
        }
        ++row;
    }
    return row;
}

}  // namespace coxh4

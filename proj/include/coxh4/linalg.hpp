#ifndef COXH4_LINALG_HPP
#define COXH4_LINALG_HPP

#include <optional>
#include <vector>

#include "coxh4/polynomial.hpp"
#include "coxh4/scalar.hpp"

namespace coxh4 {

// dense matrix over Q(sqrt5), row major
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Solve A x = b exactly for a matrix with full column rank; rhs entries are
// polynomials in the parameters (elimination divides only by matrix pivots).
// Returns nothing when the system is inconsistent or the columns are
// rank-deficient.
std::optional<std::vector<Polynomial>> solve_full_column_rank(ScalarMatrix a,
                                                              std::vector<Polynomial> b);

// null space of (A - lambda I) for a square scalar matrix, reduced
// column-echelon basis, deterministic
std::vector<std::vector<Scalar>> eigen_kernel(const ScalarMatrix& a, const Scalar& lambda);

std::size_t matrix_rank(ScalarMatrix a);

}  // namespace coxh4

#endif

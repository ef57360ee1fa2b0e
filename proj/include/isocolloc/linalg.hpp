#ifndef ISOCOLLOC_LINALG_HPP
#define ISOCOLLOC_LINALG_HPP

#include <span>
#include <vector>

namespace isocolloc {

/// Dense row-major matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    std::span<const double> row(int r) const {
        return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }

    std::vector<double> multiply(std::span<const double> x) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Assembled system; `averaged_rows` rows remain after equation averaging.
struct LinearSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
    bool is_square() const noexcept { return matrix.rows() == matrix.cols(); }
    bool is_overdetermined() const noexcept { return matrix.rows() > matrix.cols(); }
};

struct SolveResult {
    std::vector<double> coefficients;
    /// ||Ax-b|| / max(||b||, 1): for square systems this is the roundoff
    /// residual; for least squares it measures the misfit.
    double relative_residual = 0.0;
};

/// LU with partial pivoting; throws NumericalError naming the pivot position
/// when a pivot falls below 1e-14 times the matrix scale.
std::vector<double> lu_solve(DenseMatrix a, std::vector<double> b);

/// Householder QR least squares for rows >= cols (normal equations avoided).
std::vector<double> qr_least_squares(DenseMatrix a, std::vector<double> b);

/// Square systems go through LU, overdetermined ones through QR.
SolveResult solve(const LinearSystem& system);

}  // namespace isocolloc

#endif

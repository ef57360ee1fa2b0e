#include "isocolloc/linalg.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "isocolloc/errors.hpp"

namespace isocolloc {

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(static_cast<std::size_t>(rows_), 0.0);
    for (int r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * x[static_cast<std::size_t>(c)];
        y[static_cast<std::size_t>(r)] = s;
    }
    return y;
}

std::vector<double> lu_solve(DenseMatrix a, std::vector<double> b) {
    const int n = a.rows();
    if (a.cols() != n) throw InvalidArgument("lu_solve: matrix must be square");
    if (static_cast<int>(b.size()) != n)
        throw InvalidArgument("lu_solve: right-hand side size mismatch");

    double scale = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) scale = std::max(scale, std::abs(a(r, c)));
    if (scale == 0.0) throw NumericalError("lu_solve: zero matrix");
    const double pivot_floor = 1e-14 * scale;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int r = k + 1; r < n; ++r) {
            const double v = std::abs(a(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best < pivot_floor)
            throw NumericalError("lu_solve: numerically singular matrix, pivot " +
                                 std::to_string(best) + " at row " + std::to_string(piv) +
                                 ", column " + std::to_string(k));
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
        }
        const double inv = 1.0 / a(k, k);
        for (int r = k + 1; r < n; ++r) {
            const double m = a(r, k) * inv;
            if (m == 0.0) continue;
            a(r, k) = m;
            for (int c = k + 1; c < n; ++c) a(r, c) -= m * a(k, c);
            b[static_cast<std::size_t>(r)] -= m * b[static_cast<std::size_t>(k)];
        }
    }
    // back substitution
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / a(r, r);
    }
    return x;
}

std::vector<double> qr_least_squares(DenseMatrix a, std::vector<double> b) {
    const int m = a.rows();
    const int n = a.cols();
    if (m < n) throw InvalidArgument("qr_least_squares: need rows >= cols");
    if (static_cast<int>(b.size()) != m)
        throw InvalidArgument("qr_least_squares: right-hand side size mismatch");

    // Householder triangularization, applying reflectors to b as we go.
    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int r = k; r < m; ++r) norm = std::hypot(norm, a(r, k));
        if (norm == 0.0)
            throw NumericalError("qr_least_squares: rank-deficient column " + std::to_string(k));
        if (a(k, k) > 0.0) norm = -norm;
        for (int r = k; r < m; ++r) a(r, k) /= norm;
        a(k, k) -= 1.0;  // v stored in column k, reflector H = I - v v^T / v_k

        for (int c = k + 1; c < n; ++c) {
            double s = 0.0;
            for (int r = k; r < m; ++r) s += a(r, k) * a(r, c);
            s /= a(k, k);
            for (int r = k; r < m; ++r) a(r, c) += s * a(r, k);
        }
        double s = 0.0;
        for (int r = k; r < m; ++r) s += a(r, k) * b[static_cast<std::size_t>(r)];
        s /= a(k, k);
        for (int r = k; r < m; ++r) b[static_cast<std::size_t>(r)] += s * a(r, k);
        a(k, k) = norm;  // diagonal of R
    }

    std::vector<double> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / a(r, r);
    }
    return x;
}

SolveResult solve(const LinearSystem& system) {
    if (system.matrix.rows() < system.matrix.cols())
        throw InvalidArgument("solve: underdetermined systems are refused");
    if (static_cast<int>(system.rhs.size()) != system.matrix.rows())
        throw InvalidArgument("solve: right-hand side size mismatch");

    SolveResult result;
    if (system.is_square()) {
        // Row equilibration keeps the pivoting honest when collocation rows
        // carry the h^{-2} scale of second derivatives.
        DenseMatrix a = system.matrix;
        std::vector<double> b = system.rhs;
        for (int r = 0; r < a.rows(); ++r) {
            double m = 0.0;
            for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c)));
            if (m == 0.0) continue;
            const double inv = 1.0 / m;
            for (int c = 0; c < a.cols(); ++c) a(r, c) *= inv;
            b[static_cast<std::size_t>(r)] *= inv;
        }
        result.coefficients = lu_solve(std::move(a), std::move(b));
    } else {
        result.coefficients = qr_least_squares(system.matrix, system.rhs);
    }

    const std::vector<double> ax = system.matrix.multiply(result.coefficients);
    double rr = 0.0, rb = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        const double d = ax[i] - system.rhs[i];
        rr += d * d;
        rb += system.rhs[i] * system.rhs[i];
    }
    result.relative_residual = std::sqrt(rr) / std::max(std::sqrt(rb), 1.0);
    return result;
}

}  // namespace isocolloc

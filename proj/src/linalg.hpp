#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace avgfid {

using Complex = std::complex<double>;

// Tolerance conventions used across the library: structural validation of
// states/channels/bases at 1e-10, algebraic identities at 1e-12, eigensolver
// residuals at 1e-9. Values parsed from text documents are accepted at 1e-8.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kEigenResidualTol = 1e-9;
inline constexpr double kTextDocumentTol = 1e-8;

/// Dense row-major complex matrix. Dimensions here stay small (d <= 32 for
/// single systems, d^2 for doubled ones), so everything is plain O(n^3) code.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
        }
    }
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Largest elementwise |entry|.
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) { return lhs *= scalar; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Kronecker product with the row-major block convention
/// result[(i*p + k), (j*q + l)] = a[i,j] * b[k,l] for b of shape p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product tr(a^dag b). Throws on shape mismatch.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff max elementwise |a^dag a - I| <= tol. False for non-square input.
bool validate_unitary(const ComplexMatrix& a, double tol);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> mat_vec(const ComplexMatrix& m, const std::vector<Complex>& v);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Input must be
/// Hermitian within 1e-8 (throws otherwise); reconstruction residual is
/// well below kEigenResidualTol at the sizes used here.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& a);

/// Solves A X = B by Gaussian elimination with partial pivoting.
/// Throws if A is singular to working precision.
ComplexMatrix solve_linear(ComplexMatrix a, ComplexMatrix b);

/// Normalized pure state on a d-dimensional system.
class PureState {
public:
    PureState(std::size_t dim, std::vector<Complex> amplitudes);

    static PureState basis_state(std::size_t dim, std::size_t j);

    std::size_t dim() const { return dim_; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    /// Rank-1 projector |psi><psi|.
    ComplexMatrix projector() const;

private:
    std::size_t dim_;
    std::vector<Complex> amplitudes_;
};

/// <psi| m |psi>.
Complex expectation(const PureState& psi, const ComplexMatrix& m);

/// Hermitian, unit-trace, positive-semidefinite matrix; all three checked on
/// construction (Hermiticity and trace at 1e-10, smallest eigenvalue >= -1e-10).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix pure(const PureState& psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    ComplexMatrix matrix_;
};

/// The canonical maximally entangled state sum_j |j>|j>/sqrt(d) on the doubled
/// system, reference factor first.
PureState maximally_entangled_state(std::size_t d);

}  // namespace avgfid

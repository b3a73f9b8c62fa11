#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace avgfid {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

bool all_finite(const std::vector<Complex>& entries) {
    for (const auto& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows > 0 && cols > 0, "ComplexMatrix: dimensions must be positive");
    require(entries_.size() == rows * cols, "ComplexMatrix: entry count must equal rows*cols");
    require(all_finite(entries_), "ComplexMatrix: entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto& z : out.entries_) z = std::conj(z);
    return out;
}

Complex ComplexMatrix::trace() const {
    require(is_square(), "trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "operator+=: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "operator-=: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require(lhs.cols_ == rhs.rows_, "operator*: inner dimensions must match");
    ComplexMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t p = b.rows(), q = b.cols();
    ComplexMatrix out(a.rows() * p, a.cols() * q);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < p; ++k) {
                for (std::size_t l = 0; l < q; ++l) {
                    out(i * p + k, j * q + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "hs_inner: shape mismatch");
    Complex s = 0.0;
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) s += std::conj(ae[i]) * be[i];
    return s;
}

bool validate_unitary(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    ComplexMatrix g = a.dagger() * a;
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return g.max_abs() <= tol;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

std::vector<Complex> mat_vec(const ComplexMatrix& m, const std::vector<Complex>& v) {
    require(m.cols() == v.size(), "mat_vec: shape mismatch");
    std::vector<Complex> out(m.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& a) {
    require(a.is_square(), "hermitian_eigendecomposition: matrix must be square");
    const std::size_t n = a.rows();
    {
        ComplexMatrix dev = a - a.dagger();
        require(dev.max_abs() <= 1e-8, "hermitian_eigendecomposition: input is not Hermitian");
    }

    // Hermitize exactly so the rotations below see clean input.
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Cyclic Jacobi sweeps. Each rotation G differs from the identity only in
    // rows/columns (p, q):  G_pp = c, G_pq = s e^{i beta}, G_qp = -s e^{-i beta},
    // G_qq = c  with beta = arg m(p,q); m <- G^dag m G zeroes m(p,q).
    const double scale = std::max(m.max_abs(), 1e-300);
    const double off_tol = 1e-15 * scale;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(m(p, q)));
            }
        }
        if (off <= off_tol) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex mpq = m(p, q);
                const double r = std::abs(mpq);
                if (r <= off_tol) continue;
                const Complex phase = mpq / r;  // e^{i beta}
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex gpq = s * phase;

                // Apply m <- G^dag m G on the affected rows/columns.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mkp = m(k, p);
                    const Complex mkq = m(k, q);
                    m(k, p) = c * mkp - std::conj(gpq) * mkq;
                    m(k, q) = gpq * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mpk = m(p, k);
                    const Complex mqk = m(q, k);
                    m(p, k) = c * mpk - gpq * mqk;
                    m(q, k) = std::conj(gpq) * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(gpq) * vkq;
                    v(k, q) = gpq * vkp + c * vkq;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&m](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = m(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix solve_linear(ComplexMatrix a, ComplexMatrix b) {
    require(a.is_square(), "solve_linear: coefficient matrix must be square");
    require(a.rows() == b.rows(), "solve_linear: right-hand side row count mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < 1e-12) throw std::invalid_argument("solve_linear: matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(b(col, j), b(pivot, j));
        }
        const Complex inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = a(r, col) * inv;
            if (factor == Complex(0.0, 0.0)) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
            for (std::size_t j = 0; j < m; ++j) b(r, j) -= factor * b(col, j);
        }
    }
    // Back substitution.
    ComplexMatrix x(n, m);
    for (std::size_t ri = n; ri-- > 0;) {
        for (std::size_t j = 0; j < m; ++j) {
            Complex s = b(ri, j);
            for (std::size_t k = ri + 1; k < n; ++k) s -= a(ri, k) * x(k, j);
            x(ri, j) = s / a(ri, ri);
        }
    }
    return x;
}

PureState::PureState(std::size_t dim, std::vector<Complex> amplitudes)
    : dim_(dim), amplitudes_(std::move(amplitudes)) {
    require(dim > 0, "PureState: dimension must be positive");
    require(amplitudes_.size() == dim, "PureState: amplitude count must equal dim");
    require(all_finite(amplitudes_), "PureState: amplitudes must be finite");
    double norm_sq = 0.0;
    for (const auto& z : amplitudes_) norm_sq += std::norm(z);
    require(std::abs(std::sqrt(norm_sq) - 1.0) <= kAlgebraicTol, "PureState: norm must be 1 within 1e-12");
}

PureState PureState::basis_state(std::size_t dim, std::size_t j) {
    require(j < dim, "PureState::basis_state: index out of range");
    std::vector<Complex> amps(dim, Complex(0.0, 0.0));
    amps[j] = 1.0;
    return PureState(dim, std::move(amps));
}

ComplexMatrix PureState::projector() const {
    ComplexMatrix out(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
        }
    }
    return out;
}

Complex expectation(const PureState& psi, const ComplexMatrix& m) {
    require(m.is_square() && m.rows() == psi.dim(), "expectation: shape mismatch");
    const auto mv = mat_vec(m, psi.amplitudes());
    Complex s = 0.0;
    for (std::size_t i = 0; i < mv.size(); ++i) s += std::conj(psi.amplitudes()[i]) * mv[i];
    return s;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    require(matrix_.is_square(), "DensityMatrix: matrix must be square");
    require((matrix_ - matrix_.dagger()).max_abs() <= kStructuralTol,
            "DensityMatrix: matrix must be Hermitian within 1e-10");
    require(std::abs(matrix_.trace() - Complex(1.0, 0.0)) <= kStructuralTol,
            "DensityMatrix: trace must be 1 within 1e-10");
    const auto eig = hermitian_eigendecomposition(matrix_);
    require(eig.eigenvalues.front() >= -kStructuralTol,
            "DensityMatrix: matrix must be positive semidefinite within 1e-10");
}

DensityMatrix DensityMatrix::pure(const PureState& psi) { return DensityMatrix(psi.projector()); }

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= Complex(1.0 / static_cast<double>(dim), 0.0);
    return DensityMatrix(std::move(m));
}

PureState maximally_entangled_state(std::size_t d) {
    if (d < 1) throw std::invalid_argument("maximally_entangled_state: d must be positive");
    std::vector<Complex> amps(d * d, Complex(0.0, 0.0));
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) amps[j * d + j] = c;
    return PureState(d * d, std::move(amps));
}

}  // namespace avgfid

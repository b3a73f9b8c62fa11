#include "state_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace avgfid {

PreparationBasis::PreparationBasis(std::size_t dim, std::vector<PureState> states)
    : dim_(dim), states_(std::move(states)) {
    if (dim_ < 2) throw std::invalid_argument("PreparationBasis: dimension must be >= 2");
    if (states_.size() != dim_ * dim_) {
        throw std::invalid_argument("PreparationBasis: need exactly d^2 states");
    }
    for (const auto& s : states_) {
        if (s.dim() != dim_) throw std::invalid_argument("PreparationBasis: state dimension mismatch");
    }

    // Gram matrix G_jk = tr(rho_j rho_k) = |<psi_j|psi_k>|^2 is Hermitian PSD;
    // nonsingularity means the projectors span the operator space.
    const std::size_t n = states_.size();
    ComplexMatrix gram(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex overlap = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
                overlap += std::conj(states_[j].amplitudes()[i]) * states_[k].amplitudes()[i];
            }
            gram(j, k) = std::norm(overlap);
        }
    }
    const auto eig = hermitian_eigendecomposition(gram);
    if (eig.eigenvalues.front() <= 1e-8) {
        throw std::invalid_argument("PreparationBasis: states do not span the operator space (singular Gram matrix)");
    }
}

PreparationBasis standard_preparation_basis(std::size_t d) {
    if (d < 2) throw std::invalid_argument("standard_preparation_basis: d must be >= 2");
    std::vector<PureState> states;
    states.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        states.push_back(PureState::basis_state(d, j));
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            std::vector<Complex> amps(d, Complex(0.0, 0.0));
            amps[j] = r;
            amps[k] = r;
            states.emplace_back(d, std::move(amps));
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            std::vector<Complex> amps(d, Complex(0.0, 0.0));
            amps[j] = r;
            amps[k] = Complex(0.0, r);
            states.emplace_back(d, std::move(amps));
        }
    }
    return PreparationBasis(d, std::move(states));
}

AlphaMatrix solve_alphas(const UnitaryOperatorBasis& ub, const PreparationBasis& pb) {
    if (ub.dim() != pb.dim()) throw std::invalid_argument("solve_alphas: dimension mismatch");
    const std::size_t d = ub.dim();
    const std::size_t n = d * d;

    // Column k of S is the row-major vectorization of rho_k; solving
    // S alpha_j = vec(U_j) for all j at once gives alpha^T.
    ComplexMatrix s(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix rho = pb.states()[k].projector();
        for (std::size_t e = 0; e < n; ++e) s(e, k) = rho.entries()[e];
    }
    ComplexMatrix rhs(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t e = 0; e < n; ++e) rhs(e, j) = ub.elements()[j].entries()[e];
    }

    ComplexMatrix solution;
    try {
        solution = solve_linear(s, rhs);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("solve_alphas: preparation basis is singular");
    }

    ComplexMatrix alphas(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) alphas(j, k) = solution(k, j);
    }

    // Reconstruction residual ||U_j - sum_k alpha_jk rho_k||_F per basis element.
    for (std::size_t j = 0; j < n; ++j) {
        ComplexMatrix recon(d, d);
        for (std::size_t k = 0; k < n; ++k) {
            recon += alphas(j, k) * pb.states()[k].projector();
        }
        if (frobenius_distance(recon, ub.elements()[j]) > 1e-8) {
            throw std::invalid_argument("solve_alphas: reconstruction residual exceeds 1e-8");
        }
    }
    return AlphaMatrix(d, std::move(alphas));
}

}  // namespace avgfid

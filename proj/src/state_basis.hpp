#pragma once

#include <vector>

#include "linalg.hpp"
#include "operator_basis.hpp"

namespace avgfid {

/// d^2 pure preparation states whose rank-1 projectors are linearly
/// independent as operators. Construction checks that the Gram matrix of
/// Hilbert-Schmidt inner products has smallest eigenvalue > 1e-8.
class PreparationBasis {
public:
    PreparationBasis(std::size_t dim, std::vector<PureState> states);

    std::size_t dim() const { return dim_; }
    const std::vector<PureState>& states() const { return states_; }

private:
    std::size_t dim_;
    std::vector<PureState> states_;
};

/// Computational basis states |j>, then (|j> + |k>)/sqrt(2) for j < k, then
/// (|j> + i|k>)/sqrt(2) for j < k, pairs in lexicographic order: d^2 states
/// spanning the operator space.
PreparationBasis standard_preparation_basis(std::size_t d);

/// Coefficients alpha_jk with U_j = sum_k alpha_jk rho_k, where rho_k are the
/// preparation-state projectors. Produced by solve_alphas, which verifies the
/// reconstruction residual below 1e-8 for every j.
class AlphaMatrix {
public:
    std::size_t dim() const { return dim_; }
    const ComplexMatrix& entries() const { return entries_; }
    Complex at(std::size_t j, std::size_t k) const { return entries_(j, k); }

private:
    friend AlphaMatrix solve_alphas(const UnitaryOperatorBasis& ub, const PreparationBasis& pb);
    AlphaMatrix(std::size_t dim, ComplexMatrix entries) : dim_(dim), entries_(std::move(entries)) {}

    std::size_t dim_;
    ComplexMatrix entries_;
};

/// Solves the d^2 x d^2 linear system with vectorized rho_k as columns for
/// each U_j. Throws if the preparation basis is singular or a reconstruction
/// residual exceeds 1e-8.
AlphaMatrix solve_alphas(const UnitaryOperatorBasis& ub, const PreparationBasis& pb);

}  // namespace avgfid

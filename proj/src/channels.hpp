#pragma once

#include <cstdint>
#include <vector>

#include "linalg.hpp"

namespace avgfid {

/// Trace-preserving quantum operation in Kraus form: rho -> sum_i K_i rho K_i^dag
/// with sum_i K_i^dag K_i = I (checked on construction; `tol` is 1e-10 for
/// programmatic construction and relaxed to 1e-8 for channels parsed from text).
class QuantumChannel {
public:
    QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops, double tol = kStructuralTol);

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_ops_; }

    DensityMatrix apply(const DensityMatrix& rho) const;

    /// Linear extension of the Kraus sum to arbitrary operators,
    /// sum_i K_i op K_i^dag. Needed when the channel acts on (generally
    /// non-Hermitian) operator-basis elements.
    ComplexMatrix apply_to_operator(const ComplexMatrix& op) const;

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> kraus_ops_;
};

/// Parameter of the depolarizing channel rho -> p I/d + (1-p) rho. The upper
/// bound d^2/(d^2-1) is the complete-positivity limit; exact twirls of
/// traceless unitary channels legitimately reach it.
struct DepolarizingParams {
    DepolarizingParams(std::size_t dim, double p);

    double cp_upper_bound() const { return static_cast<double>(dim * dim) / static_cast<double>(dim * dim - 1); }

    std::size_t dim;
    double p;
};

QuantumChannel identity_channel(std::size_t d);

/// Single-Kraus channel rho -> u rho u^dag. Throws if u is not unitary at tol.
QuantumChannel unitary_channel(const ComplexMatrix& u, double tol = kStructuralTol);

/// Kraus realization of rho -> p I/d + (1-p) rho over the shift/clock basis:
/// weight 1 - p + p/d^2 on the identity and p/d^2 on each of the other d^2 - 1
/// elements. Throws if p is outside [0, d^2/(d^2-1)].
QuantumChannel depolarizing(std::size_t d, double p);

/// Kraus set {L_j K_i}: `first` acts first, `then` second.
QuantumChannel compose(const QuantumChannel& first, const QuantumChannel& then);

/// Stinespring dilation: the d x d blocks of the first block-column of a Haar
/// unitary on dimension d*kraus_rank. Deterministic given seed.
QuantumChannel random_channel(std::size_t d, std::size_t kraus_rank, std::uint64_t seed);

/// (I kron E)(phi phi^dag) with the reference factor first; a density matrix
/// on dimension d^2.
DensityMatrix choi_state(const QuantumChannel& ch);

/// Depolarizing parameter of the exact Haar twirl of `ch`, computed
/// analytically as p = (1 - F_e) d^2/(d^2 - 1): twirling preserves the
/// entanglement fidelity and F_e(depolarizing(p)) = 1 - p + p/d^2.
DepolarizingParams exact_twirl(const QuantumChannel& ch);

/// Kraus operators recovered from the eigendecomposition of a Choi state.
/// The Choi must come from a trace-preserving map (checked at tol).
QuantumChannel channel_from_choi(const DensityMatrix& choi, double tol = kTextDocumentTol);

}  // namespace avgfid

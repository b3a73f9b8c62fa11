#pragma once

#include <cstdint>
#include <vector>

#include "channels.hpp"
#include "haar_mc.hpp"
#include "linalg.hpp"
#include "state_basis.hpp"

namespace avgfid {

/// Linear-inversion tomography estimates of E(rho_k) for each preparation
/// state. Each estimate is Hermitian with unit trace by construction (the
/// identity component of the expansion is exact); positivity is not enforced,
/// which keeps the downstream fidelity estimator unbiased.
struct TomographyResult {
    TomographyResult(std::vector<ComplexMatrix> estimates_in, std::uint64_t shots_in, std::uint64_t seed_in);

    std::vector<ComplexMatrix> estimates;
    std::uint64_t shots_per_setting;
    std::uint64_t seed;
};

/// Orthonormal Hermitian measurement basis: I/sqrt(d) first, then the
/// generalized Gell-Mann matrices in the fixed order symmetric (j<k,
/// lexicographic), antisymmetric (j<k, lexicographic), diagonal (l = 1..d-1);
/// tr(G_m G_n) = delta_mn.
std::vector<ComplexMatrix> hermitian_measurement_basis(std::size_t d);

/// Simulates state tomography of E(rho_k) for every preparation state: for
/// each non-identity basis element G_m, draws `shots` projective measurements
/// in G_m's eigenbasis (multinomial over eigenprojector probabilities) and
/// estimates <G_m> as the eigenvalue-weighted frequency average; the identity
/// component needs no sampling. Reconstruction is plain linear inversion
/// rho_hat = sum_m <G_m> G_m. shots == 0 selects the infinite-shot limit
/// (exact expectation values, no sampling). Setting (k, m) draws from
/// sub-stream derive_stream(seed, k*n_settings + m).
TomographyResult simulate_tomography(const QuantumChannel& ch, const PreparationBasis& pb,
                                     std::uint64_t shots, std::uint64_t seed);

/// Runs simulate_tomography `repeats` times (repeat r uses sub-stream
/// derive_stream(seed, r)), feeds each result through the state-basis fidelity
/// formula with the shift/clock basis, and returns the mean and standard
/// error across repeats.
McEstimate estimate_fidelity_experiment(const QuantumChannel& ch, const ComplexMatrix& gate,
                                        std::uint64_t shots, std::uint64_t seed, std::uint32_t repeats);

}  // namespace avgfid

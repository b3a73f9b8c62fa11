#pragma once

#include <cstdint>

#include "channels.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace avgfid {

/// Monte Carlo estimate: sample mean, std_error = sample standard
/// deviation / sqrt(n_samples), and the (n, seed) pair that reproduces it.
struct McEstimate {
    double mean;
    double std_error;
    std::uint64_t n_samples;
    std::uint64_t seed;
};

/// Haar-distributed pure state: d i.i.d. standard complex Gaussians, normalized.
PureState haar_state(std::size_t d, RngStream& rng);

/// Haar-distributed unitary: complex Ginibre matrix -> QR via modified
/// Gram-Schmidt with one reorthogonalization pass. Gram-Schmidt produces the
/// unique QR factor with positive real diagonal of R, so the R-phase
/// correction of the Ginibre recipe is the identity and Q itself is Haar.
ComplexMatrix haar_unitary(std::size_t d, RngStream& rng);

/// Direct estimator of the Haar-average gate fidelity: the sample mean of
/// <psi| U^dag E(psi psi^dag) U |psi> over Haar states. Sample i draws from
/// sub-stream derive_stream(seed, i) and accumulation runs in index order, so
/// the estimate is bit-reproducible and partition-independent.
McEstimate mc_average_gate_fidelity(const QuantumChannel& ch, const ComplexMatrix& gate,
                                    std::uint64_t n_samples, std::uint64_t seed);

/// Choi state of the empirical twirl: the average over n sampled Haar
/// unitaries U of the Choi state of rho -> U^dag E(U rho U^dag) U.
/// Unitary i draws from sub-stream derive_stream(seed, i).
DensityMatrix mc_twirl_choi(const QuantumChannel& ch, std::uint64_t n_unitaries, std::uint64_t seed);

}  // namespace avgfid

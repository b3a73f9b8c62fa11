#include "haar_mc.hpp"

#include <cmath>
#include <stdexcept>

namespace avgfid {

PureState haar_state(std::size_t d, RngStream& rng) {
    std::vector<Complex> amps(d);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = rng.next_complex_gaussian();
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return PureState(d, std::move(amps));
}

ComplexMatrix haar_unitary(std::size_t d, RngStream& rng) {
    // Ginibre entries drawn row-major.
    ComplexMatrix q(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            q(i, j) = rng.next_complex_gaussian();
        }
    }

    // Modified Gram-Schmidt on columns, two passes per column.
    for (std::size_t j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < d; ++i) q(i, j) -= proj * q(i, k);
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < d; ++i) norm_sq += std::norm(q(i, j));
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (std::size_t i = 0; i < d; ++i) q(i, j) *= inv;
    }
    return q;
}

McEstimate mc_average_gate_fidelity(const QuantumChannel& ch, const ComplexMatrix& gate,
                                    std::uint64_t n_samples, std::uint64_t seed) {
    const std::size_t d = ch.dim();
    if (gate.rows() != d || gate.cols() != d) {
        throw std::invalid_argument("mc_average_gate_fidelity: gate dimension mismatch");
    }
    if (!validate_unitary(gate, kTextDocumentTol)) {
        throw std::invalid_argument("mc_average_gate_fidelity: gate is not unitary");
    }
    if (n_samples == 0) throw std::invalid_argument("mc_average_gate_fidelity: n_samples must be positive");

    // Welford accumulation in sample-index order.
    double mean = 0.0;
    double m2 = 0.0;
    std::vector<Complex> kpsi(d);
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        RngStream sub = RngStream(seed).substream(i);
        const PureState psi = haar_state(d, sub);
        const auto target = mat_vec(gate, psi.amplitudes());

        // <psi|U^dag E(psi psi^dag) U|psi> = sum_i |<U psi | K_i psi>|^2.
        double f = 0.0;
        for (const auto& k : ch.kraus_ops()) {
            for (std::size_t r = 0; r < d; ++r) {
                Complex s = 0.0;
                for (std::size_t c = 0; c < d; ++c) s += k(r, c) * psi.amplitudes()[c];
                kpsi[r] = s;
            }
            Complex overlap = 0.0;
            for (std::size_t r = 0; r < d; ++r) overlap += std::conj(target[r]) * kpsi[r];
            f += std::norm(overlap);
        }

        const double delta = f - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (f - mean);
    }

    double std_error = 0.0;
    if (n_samples > 1) {
        const double variance = m2 / static_cast<double>(n_samples - 1);
        std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(n_samples));
    }
    return McEstimate{mean, std_error, n_samples, seed};
}

DensityMatrix mc_twirl_choi(const QuantumChannel& ch, std::uint64_t n_unitaries, std::uint64_t seed) {
    const std::size_t d = ch.dim();
    if (n_unitaries == 0) throw std::invalid_argument("mc_twirl_choi: n_unitaries must be positive");

    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix acc(d * d, d * d);
    std::vector<Complex> v(d * d);
    for (std::uint64_t i = 0; i < n_unitaries; ++i) {
        RngStream sub = RngStream(seed).substream(i);
        const ComplexMatrix u = haar_unitary(d, sub);
        const ComplexMatrix udag = u.dagger();
        for (const auto& k : ch.kraus_ops()) {
            const ComplexMatrix conj_kraus = udag * k * u;
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = 0; b < d; ++b) {
                    v[a * d + b] = conj_kraus(b, a) * c;
                }
            }
            for (std::size_t a = 0; a < v.size(); ++a) {
                for (std::size_t b = 0; b < v.size(); ++b) {
                    acc(a, b) += v[a] * std::conj(v[b]);
                }
            }
        }
    }
    acc *= Complex(1.0 / static_cast<double>(n_unitaries), 0.0);
    return DensityMatrix(std::move(acc));
}

}  // namespace avgfid

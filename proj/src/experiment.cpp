#include "experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "fidelity.hpp"
#include "operator_basis.hpp"
#include "rng.hpp"

namespace avgfid {

TomographyResult::TomographyResult(std::vector<ComplexMatrix> estimates_in, std::uint64_t shots_in,
                                   std::uint64_t seed_in)
    : estimates(std::move(estimates_in)), shots_per_setting(shots_in), seed(seed_in) {
    for (const auto& est : estimates) {
        if (!est.is_square()) throw std::invalid_argument("TomographyResult: estimates must be square");
        if ((est - est.dagger()).max_abs() > kAlgebraicTol) {
            throw std::invalid_argument("TomographyResult: estimates must be Hermitian within 1e-12");
        }
        if (std::abs(est.trace() - Complex(1.0, 0.0)) > kAlgebraicTol) {
            throw std::invalid_argument("TomographyResult: estimates must have unit trace within 1e-12");
        }
    }
}

std::vector<ComplexMatrix> hermitian_measurement_basis(std::size_t d) {
    if (d < 2) throw std::invalid_argument("hermitian_measurement_basis: d must be >= 2");
    std::vector<ComplexMatrix> basis;
    basis.reserve(d * d);

    ComplexMatrix id = ComplexMatrix::identity(d);
    id *= Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0);
    basis.push_back(std::move(id));

    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix sym(d, d);
            sym(j, k) = r;
            sym(k, j) = r;
            basis.push_back(std::move(sym));
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix asym(d, d);
            asym(j, k) = Complex(0.0, -r);
            asym(k, j) = Complex(0.0, r);
            basis.push_back(std::move(asym));
        }
    }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix diag(d, d);
        const double c = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) diag(j, j) = c;
        diag(l, l) = -c * static_cast<double>(l);
        basis.push_back(std::move(diag));
    }
    return basis;
}

TomographyResult simulate_tomography(const QuantumChannel& ch, const PreparationBasis& pb,
                                     std::uint64_t shots, std::uint64_t seed) {
    if (ch.dim() != pb.dim()) throw std::invalid_argument("simulate_tomography: dimension mismatch");
    const std::size_t d = ch.dim();
    const auto basis = hermitian_measurement_basis(d);
    const std::size_t n_settings = basis.size();

    // Eigenbases of the measurement operators are channel-independent.
    std::vector<EigenDecomposition> eigs;
    eigs.reserve(n_settings);
    for (const auto& g : basis) eigs.push_back(hermitian_eigendecomposition(g));

    const double id_coeff = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexMatrix> estimates;
    estimates.reserve(pb.states().size());

    std::vector<double> probs(d);
    for (std::size_t k = 0; k < pb.states().size(); ++k) {
        const ComplexMatrix exact_output = ch.apply_to_operator(pb.states()[k].projector());

        ComplexMatrix rho_hat(d, d);
        rho_hat += id_coeff * basis[0];
        for (std::size_t m = 1; m < n_settings; ++m) {
            double expect;
            if (shots == 0) {
                expect = hs_inner(basis[m], exact_output).real();
            } else {
                // Outcome probabilities p_a = <v_a| E(rho_k) |v_a>.
                const auto& eig = eigs[m];
                double total = 0.0;
                for (std::size_t a = 0; a < d; ++a) {
                    Complex quad = 0.0;
                    for (std::size_t r = 0; r < d; ++r) {
                        Complex row = 0.0;
                        for (std::size_t c = 0; c < d; ++c) row += exact_output(r, c) * eig.eigenvectors(c, a);
                        quad += std::conj(eig.eigenvectors(r, a)) * row;
                    }
                    probs[a] = std::max(quad.real(), 0.0);
                    total += probs[a];
                }
                for (auto& p : probs) p /= total;

                RngStream rng = RngStream(seed).substream(k * n_settings + m);
                std::vector<std::uint64_t> counts(d, 0);
                for (std::uint64_t shot = 0; shot < shots; ++shot) {
                    const double u = rng.next_uniform();
                    double cdf = 0.0;
                    std::size_t outcome = d - 1;
                    for (std::size_t a = 0; a < d; ++a) {
                        cdf += probs[a];
                        if (u < cdf) {
                            outcome = a;
                            break;
                        }
                    }
                    ++counts[outcome];
                }
                expect = 0.0;
                for (std::size_t a = 0; a < d; ++a) {
                    expect += eig.eigenvalues[a] * static_cast<double>(counts[a]);
                }
                expect /= static_cast<double>(shots);
            }
            rho_hat += expect * basis[m];
        }
        estimates.push_back(std::move(rho_hat));
    }
    return TomographyResult(std::move(estimates), shots, seed);
}

McEstimate estimate_fidelity_experiment(const QuantumChannel& ch, const ComplexMatrix& gate,
                                        std::uint64_t shots, std::uint64_t seed, std::uint32_t repeats) {
    if (repeats == 0) throw std::invalid_argument("estimate_fidelity_experiment: repeats must be positive");
    if (!validate_unitary(gate, kTextDocumentTol)) {
        throw std::invalid_argument("estimate_fidelity_experiment: gate is not unitary");
    }

    const std::size_t d = ch.dim();
    const auto ub = shift_clock_basis(d);
    const auto pb = standard_preparation_basis(d);
    const auto alphas = solve_alphas(ub, pb);

    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint32_t r = 0; r < repeats; ++r) {
        const auto tomo = simulate_tomography(ch, pb, shots, derive_stream(seed, r));
        const double f = average_gate_fidelity_from_states(tomo.estimates, alphas, gate, ub).value;
        const double delta = f - mean;
        mean += delta / static_cast<double>(r + 1);
        m2 += delta * (f - mean);
    }

    double std_error = 0.0;
    if (repeats > 1) {
        const double variance = m2 / static_cast<double>(repeats - 1);
        std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(repeats));
    }
    return McEstimate{mean, std_error, repeats, seed};
}

}  // namespace avgfid

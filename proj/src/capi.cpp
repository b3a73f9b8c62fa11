#include "avgfid/avgfid.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "channels.hpp"
#include "experiment.hpp"
#include "fidelity.hpp"
#include "haar_mc.hpp"
#include "linalg.hpp"
#include "operator_basis.hpp"
#include "report.hpp"
#include "spec_io.hpp"

using namespace avgfid;

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

/// Maps the library's exception taxonomy onto C status codes.
template <typename Fn>
avgfid_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return AVGFID_OK;
    } catch (const SpecParseError& e) {
        set_error(e.what());
        return AVGFID_ERROR_PARSE;
    } catch (const SpecValidationError& e) {
        set_error(e.what());
        return AVGFID_ERROR_VALIDATION;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return AVGFID_ERROR_VALIDATION;
    } catch (const std::exception& e) {
        set_error(e.what());
        return AVGFID_ERROR_INTERNAL;
    }
}

std::vector<Complex> from_interleaved(const double* data, std::size_t count) {
    std::vector<Complex> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = Complex(data[2 * i], data[2 * i + 1]);
    return out;
}

void to_interleaved(const ComplexMatrix& m, double* out) {
    const auto& e = m.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        out[2 * i] = e[i].real();
        out[2 * i + 1] = e[i].imag();
    }
}

ComplexMatrix matrix_from_interleaved(int dim, const double* data) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    if (data == nullptr) throw std::invalid_argument("matrix buffer must not be null");
    const auto d = static_cast<std::size_t>(dim);
    return ComplexMatrix(d, d, from_interleaved(data, d * d));
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const QuantumChannel& as_channel(const avgfid_channel* ch) {
    if (ch == nullptr) throw std::invalid_argument("channel handle must not be null");
    return *reinterpret_cast<const QuantumChannel*>(ch);
}

const UnitaryOperatorBasis& as_basis(const avgfid_basis* b) {
    if (b == nullptr) throw std::invalid_argument("basis handle must not be null");
    return *reinterpret_cast<const UnitaryOperatorBasis*>(b);
}

avgfid_channel* wrap(QuantumChannel&& ch) {
    return reinterpret_cast<avgfid_channel*>(new QuantumChannel(std::move(ch)));
}

void require_out(const void* out) {
    if (out == nullptr) throw std::invalid_argument("output pointer must not be null");
}

}  // namespace

extern "C" {

const char* avgfid_version(void) { return kToolVersion; }

const char* avgfid_last_error(void) { return g_last_error.c_str(); }

avgfid_status avgfid_channel_from_json(const char* text, avgfid_channel** out) {
    return guarded([&] {
        require_out(out);
        if (text == nullptr) throw std::invalid_argument("text must not be null");
        const ChannelSpecDocument doc = parse_channel_spec(text);
        *out = wrap(resolve_channel(doc));
    });
}

avgfid_status avgfid_channel_depolarizing(int dim, double p, avgfid_channel** out) {
    return guarded([&] {
        require_out(out);
        if (dim < 2) throw std::invalid_argument("dim must be >= 2");
        *out = wrap(depolarizing(static_cast<std::size_t>(dim), p));
    });
}

avgfid_status avgfid_channel_unitary(int dim, const double* matrix, avgfid_channel** out) {
    return guarded([&] {
        require_out(out);
        *out = wrap(unitary_channel(matrix_from_interleaved(dim, matrix)));
    });
}

avgfid_status avgfid_channel_kraus(int dim, int count, const double* operators, avgfid_channel** out) {
    return guarded([&] {
        require_out(out);
        if (dim < 1) throw std::invalid_argument("dim must be positive");
        if (count < 1) throw std::invalid_argument("count must be positive");
        if (operators == nullptr) throw std::invalid_argument("operators buffer must not be null");
        const auto d = static_cast<std::size_t>(dim);
        std::vector<ComplexMatrix> kraus;
        kraus.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            kraus.emplace_back(d, d, from_interleaved(operators + 2 * d * d * static_cast<std::size_t>(i), d * d));
        }
        *out = wrap(QuantumChannel(d, std::move(kraus)));
    });
}

avgfid_status avgfid_channel_compose(const avgfid_channel* first, const avgfid_channel* then,
                                     avgfid_channel** out) {
    return guarded([&] {
        require_out(out);
        *out = wrap(compose(as_channel(first), as_channel(then)));
    });
}

avgfid_status avgfid_channel_random(int dim, int kraus_rank, uint64_t seed, avgfid_channel** out) {
    return guarded([&] {
        require_out(out);
        if (dim < 2) throw std::invalid_argument("dim must be >= 2");
        if (kraus_rank < 1) throw std::invalid_argument("kraus_rank must be positive");
        *out = wrap(random_channel(static_cast<std::size_t>(dim), static_cast<std::size_t>(kraus_rank), seed));
    });
}

void avgfid_channel_free(avgfid_channel* ch) { delete reinterpret_cast<QuantumChannel*>(ch); }

int avgfid_channel_dim(const avgfid_channel* ch) {
    return ch == nullptr ? 0 : static_cast<int>(reinterpret_cast<const QuantumChannel*>(ch)->dim());
}

int avgfid_channel_kraus_count(const avgfid_channel* ch) {
    return ch == nullptr ? 0 : static_cast<int>(reinterpret_cast<const QuantumChannel*>(ch)->kraus_ops().size());
}

avgfid_status avgfid_channel_apply(const avgfid_channel* ch, const double* rho, double* out) {
    return guarded([&] {
        require_out(out);
        const QuantumChannel& channel = as_channel(ch);
        const ComplexMatrix input = matrix_from_interleaved(static_cast<int>(channel.dim()), rho);
        to_interleaved(channel.apply_to_operator(input), out);
    });
}

avgfid_status avgfid_channel_choi(const avgfid_channel* ch, double* out) {
    return guarded([&] {
        require_out(out);
        to_interleaved(choi_state(as_channel(ch)).matrix(), out);
    });
}

avgfid_status avgfid_channel_exact_twirl(const avgfid_channel* ch, double* p_out) {
    return guarded([&] {
        require_out(p_out);
        *p_out = exact_twirl(as_channel(ch)).p;
    });
}

avgfid_status avgfid_basis_shift_clock(int dim, avgfid_basis** out) {
    return guarded([&] {
        require_out(out);
        if (dim < 2) throw std::invalid_argument("dim must be >= 2");
        *out = reinterpret_cast<avgfid_basis*>(
            new UnitaryOperatorBasis(shift_clock_basis(static_cast<std::size_t>(dim))));
    });
}

avgfid_status avgfid_basis_from_elements(int dim, const double* elements, avgfid_basis** out) {
    return guarded([&] {
        require_out(out);
        if (dim < 2) throw std::invalid_argument("dim must be >= 2");
        if (elements == nullptr) throw std::invalid_argument("elements buffer must not be null");
        const auto d = static_cast<std::size_t>(dim);
        std::vector<ComplexMatrix> mats;
        mats.reserve(d * d);
        for (std::size_t i = 0; i < d * d; ++i) {
            mats.emplace_back(d, d, from_interleaved(elements + 2 * d * d * i, d * d));
        }
        *out = reinterpret_cast<avgfid_basis*>(new UnitaryOperatorBasis(d, std::move(mats)));
    });
}

void avgfid_basis_free(avgfid_basis* basis) { delete reinterpret_cast<UnitaryOperatorBasis*>(basis); }

int avgfid_basis_is_valid(const avgfid_basis* basis, double tol) {
    if (basis == nullptr) return 0;
    return validate_basis(*reinterpret_cast<const UnitaryOperatorBasis*>(basis), tol) ? 1 : 0;
}

avgfid_status avgfid_basis_element(const avgfid_basis* basis, int index, double* out) {
    return guarded([&] {
        require_out(out);
        const UnitaryOperatorBasis& b = as_basis(basis);
        if (index < 0 || static_cast<std::size_t>(index) >= b.elements().size()) {
            throw std::invalid_argument("basis element index out of range");
        }
        to_interleaved(b.elements()[static_cast<std::size_t>(index)], out);
    });
}

avgfid_status avgfid_entanglement_fidelity(const avgfid_channel* ch, double* out) {
    return guarded([&] {
        require_out(out);
        *out = entanglement_fidelity(as_channel(ch), EntanglementFidelityRoute::Choi).value;
    });
}

avgfid_status avgfid_entanglement_fidelity_basis_sum(const avgfid_channel* ch, const avgfid_basis* basis,
                                                     double* out) {
    return guarded([&] {
        require_out(out);
        *out = entanglement_fidelity(as_channel(ch), EntanglementFidelityRoute::BasisSum, &as_basis(basis)).value;
    });
}

avgfid_status avgfid_average_fidelity(const avgfid_channel* ch, double* out) {
    return guarded([&] {
        require_out(out);
        *out = average_fidelity(as_channel(ch)).value;
    });
}

avgfid_status avgfid_average_gate_fidelity(const avgfid_channel* ch, const double* gate,
                                           const avgfid_basis* basis, double* out) {
    return guarded([&] {
        require_out(out);
        const QuantumChannel& channel = as_channel(ch);
        const ComplexMatrix u = matrix_from_interleaved(static_cast<int>(channel.dim()), gate);
        *out = average_gate_fidelity(channel, u, as_basis(basis)).value;
    });
}

avgfid_status avgfid_average_gate_fidelity_qubit(const avgfid_channel* ch, const double* gate, double* out) {
    return guarded([&] {
        require_out(out);
        const QuantumChannel& channel = as_channel(ch);
        const ComplexMatrix u = matrix_from_interleaved(static_cast<int>(channel.dim()), gate);
        *out = average_gate_fidelity_qubit(channel, u).value;
    });
}

avgfid_status avgfid_mc_average_gate_fidelity(const avgfid_channel* ch, const double* gate,
                                              uint64_t n_samples, uint64_t seed, avgfid_estimate* out) {
    return guarded([&] {
        require_out(out);
        const QuantumChannel& channel = as_channel(ch);
        const ComplexMatrix u = matrix_from_interleaved(static_cast<int>(channel.dim()), gate);
        const McEstimate est = mc_average_gate_fidelity(channel, u, n_samples, seed);
        *out = avgfid_estimate{est.mean, est.std_error, est.n_samples, est.seed};
    });
}

avgfid_status avgfid_mc_twirl_distance(const avgfid_channel* ch, uint64_t n_unitaries, uint64_t seed,
                                       double* out) {
    return guarded([&] {
        require_out(out);
        const QuantumChannel& channel = as_channel(ch);
        const DensityMatrix empirical = mc_twirl_choi(channel, n_unitaries, seed);
        const DensityMatrix exact = choi_state(depolarizing(channel.dim(), exact_twirl(channel).p));
        *out = frobenius_distance(empirical.matrix(), exact.matrix());
    });
}

avgfid_status avgfid_experiment_fidelity(const avgfid_channel* ch, const double* gate, uint64_t shots,
                                         uint64_t seed, uint32_t repeats, avgfid_estimate* out) {
    return guarded([&] {
        require_out(out);
        const QuantumChannel& channel = as_channel(ch);
        const ComplexMatrix u = matrix_from_interleaved(static_cast<int>(channel.dim()), gate);
        const McEstimate est = estimate_fidelity_experiment(channel, u, shots, seed, repeats);
        *out = avgfid_estimate{est.mean, est.std_error, est.n_samples, est.seed};
    });
}

avgfid_status avgfid_report_compute(const char* channel_json, const char* gate_json,
                                    const avgfid_compute_options* options, char** report_out,
                                    double* duration_ms_out) {
    return guarded([&] {
        require_out(report_out);
        if (channel_json == nullptr || gate_json == nullptr) {
            throw std::invalid_argument("channel and gate documents must not be null");
        }
        if (options == nullptr || options->method == nullptr) {
            throw std::invalid_argument("options and options->method must not be null");
        }
        ComputeOptions opts;
        opts.method = options->method;
        if (options->basis != nullptr) opts.basis = options->basis;
        if (options->has_samples) opts.samples = options->samples;
        if (options->has_shots) opts.shots = options->shots;
        if (options->has_repeats) opts.repeats = options->repeats;
        if (options->has_seed) opts.seed = options->seed;
        *report_out = copy_string(run_compute(channel_json, gate_json, opts, duration_ms_out));
    });
}

avgfid_status avgfid_report_twirl(const char* channel_json, uint64_t n_unitaries, int has_seed,
                                  uint64_t seed, char** report_out, double* duration_ms_out) {
    return guarded([&] {
        require_out(report_out);
        if (channel_json == nullptr) throw std::invalid_argument("channel document must not be null");
        TwirlOptions opts;
        if (n_unitaries > 0) opts.unitaries = n_unitaries;
        if (has_seed) opts.seed = seed;
        *report_out = copy_string(run_twirl(channel_json, opts, duration_ms_out));
    });
}

avgfid_status avgfid_validate_channel(const char* channel_json, char** summary_out) {
    return guarded([&] {
        require_out(summary_out);
        if (channel_json == nullptr) throw std::invalid_argument("channel document must not be null");
        *summary_out = copy_string(run_validate(channel_json));
    });
}

void avgfid_string_free(char* s) { std::free(s); }

}  // extern "C"

#pragma once

#include <string>
#include <vector>

#include "channels.hpp"
#include "linalg.hpp"
#include "operator_basis.hpp"
#include "state_basis.hpp"

namespace avgfid {

enum class FidelityMethod {
    Choi,
    BasisSum,
    Horodecki,
    Eq12,
    QubitClosedForm,
    StateBasis,
    MonteCarlo,
};

std::string to_string(FidelityMethod method);

/// A fidelity with its provenance. Exact routes on trace-preserving channels
/// stay within [0, 1] up to rounding; the state-basis route fed with
/// finite-shot tomography estimates can exceed the range by statistical noise,
/// so clamping happens only at the reporting layer.
struct FidelityValue {
    double value;
    FidelityMethod method;
};

enum class EntanglementFidelityRoute { Choi, BasisSum };

/// F_e = <phi|(I kron E)(phi phi^dag)|phi>, either directly from the Choi
/// state or as sum_j tr(U_j^dag E(U_j))/d^3 over an orthogonal unitary basis
/// (the channel acts on basis elements by linear extension of the Kraus sum).
/// The basis is required for the basis-sum route and ignored otherwise.
FidelityValue entanglement_fidelity(const QuantumChannel& ch, EntanglementFidelityRoute route,
                                    const UnitaryOperatorBasis* basis = nullptr);

/// (d F_e + 1)/(d + 1) with F_e from the Choi route.
FidelityValue average_fidelity(const QuantumChannel& ch);

/// [sum_j tr(U U_j^dag U^dag E(U_j)) + d^2] / [d^2 (d + 1)], evaluated
/// literally over the given basis.
FidelityValue average_gate_fidelity(const QuantumChannel& ch, const ComplexMatrix& gate,
                                    const UnitaryOperatorBasis& basis);

/// Qubit closed form 1/2 + (1/12) sum_j tr(U sigma_j U^dag E(sigma_j)) over
/// the Pauli matrices. Throws unless d = 2.
FidelityValue average_gate_fidelity_qubit(const QuantumChannel& ch, const ComplexMatrix& gate);

/// State-basis route: [sum_jk alpha_jk tr(U U_j^dag U^dag outputs_k) + d^2] /
/// [d^2 (d + 1)] where outputs_k are (estimates of) the channel outputs on the
/// preparation states, ordered to match the basis that produced `alphas`.
FidelityValue average_gate_fidelity_from_states(const std::vector<ComplexMatrix>& outputs,
                                                const AlphaMatrix& alphas, const ComplexMatrix& gate,
                                                const UnitaryOperatorBasis& basis);

}  // namespace avgfid

#include "fidelity.hpp"

#include <cmath>
#include <stdexcept>

namespace avgfid {

namespace {

void require_gate(const QuantumChannel& ch, const ComplexMatrix& gate) {
    if (gate.rows() != ch.dim() || gate.cols() != ch.dim()) {
        throw std::invalid_argument("average_gate_fidelity: gate dimension mismatch");
    }
    if (!validate_unitary(gate, kTextDocumentTol)) {
        throw std::invalid_argument("average_gate_fidelity: gate is not unitary");
    }
}

}  // namespace

std::string to_string(FidelityMethod method) {
    switch (method) {
        case FidelityMethod::Choi: return "choi";
        case FidelityMethod::BasisSum: return "basis-sum";
        case FidelityMethod::Horodecki: return "horodecki";
        case FidelityMethod::Eq12: return "eq12";
        case FidelityMethod::QubitClosedForm: return "qubit-closed-form";
        case FidelityMethod::StateBasis: return "state-basis";
        case FidelityMethod::MonteCarlo: return "monte-carlo";
    }
    return "unknown";
}

FidelityValue entanglement_fidelity(const QuantumChannel& ch, EntanglementFidelityRoute route,
                                    const UnitaryOperatorBasis* basis) {
    const std::size_t d = ch.dim();
    if (route == EntanglementFidelityRoute::Choi) {
        const PureState phi = maximally_entangled_state(d);
        const double fe = expectation(phi, choi_state(ch).matrix()).real();
        return FidelityValue{fe, FidelityMethod::Choi};
    }

    if (basis == nullptr) {
        throw std::invalid_argument("entanglement_fidelity: basis-sum route needs an operator basis");
    }
    if (basis->dim() != d) {
        throw std::invalid_argument("entanglement_fidelity: basis dimension mismatch");
    }
    Complex sum = 0.0;
    for (const auto& u : basis->elements()) {
        sum += hs_inner(u, ch.apply_to_operator(u));
    }
    const double d3 = static_cast<double>(d) * static_cast<double>(d) * static_cast<double>(d);
    return FidelityValue{(sum / d3).real(), FidelityMethod::BasisSum};
}

FidelityValue average_fidelity(const QuantumChannel& ch) {
    const double d = static_cast<double>(ch.dim());
    const double fe = entanglement_fidelity(ch, EntanglementFidelityRoute::Choi).value;
    return FidelityValue{(d * fe + 1.0) / (d + 1.0), FidelityMethod::Horodecki};
}

FidelityValue average_gate_fidelity(const QuantumChannel& ch, const ComplexMatrix& gate,
                                    const UnitaryOperatorBasis& basis) {
    require_gate(ch, gate);
    if (basis.dim() != ch.dim()) {
        throw std::invalid_argument("average_gate_fidelity: basis dimension mismatch");
    }
    const std::size_t d = ch.dim();
    const ComplexMatrix gate_dag = gate.dagger();

    Complex sum = 0.0;
    for (const auto& u : basis.elements()) {
        const ComplexMatrix left = gate * u.dagger() * gate_dag;
        const ComplexMatrix right = ch.apply_to_operator(u);
        sum += (left * right).trace();
    }
    const double d2 = static_cast<double>(d * d);
    const double value = (sum.real() + d2) / (d2 * (static_cast<double>(d) + 1.0));
    return FidelityValue{value, FidelityMethod::Eq12};
}

FidelityValue average_gate_fidelity_qubit(const QuantumChannel& ch, const ComplexMatrix& gate) {
    if (ch.dim() != 2) {
        throw std::invalid_argument("average_gate_fidelity_qubit: channel must act on a qubit");
    }
    require_gate(ch, gate);

    const ComplexMatrix sigma_x(2, 2, {0.0, 1.0, 1.0, 0.0});
    const ComplexMatrix sigma_y(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
    const ComplexMatrix sigma_z(2, 2, {1.0, 0.0, 0.0, -1.0});
    const ComplexMatrix gate_dag = gate.dagger();

    Complex sum = 0.0;
    for (const ComplexMatrix* sigma : {&sigma_x, &sigma_y, &sigma_z}) {
        sum += (gate * (*sigma) * gate_dag * ch.apply_to_operator(*sigma)).trace();
    }
    return FidelityValue{0.5 + sum.real() / 12.0, FidelityMethod::QubitClosedForm};
}

FidelityValue average_gate_fidelity_from_states(const std::vector<ComplexMatrix>& outputs,
                                                const AlphaMatrix& alphas, const ComplexMatrix& gate,
                                                const UnitaryOperatorBasis& basis) {
    const std::size_t d = basis.dim();
    if (alphas.dim() != d) {
        throw std::invalid_argument("average_gate_fidelity_from_states: alpha/basis dimension mismatch");
    }
    if (outputs.size() != d * d) {
        throw std::invalid_argument("average_gate_fidelity_from_states: need exactly d^2 channel outputs");
    }
    for (const auto& out : outputs) {
        if (out.rows() != d || out.cols() != d) {
            throw std::invalid_argument("average_gate_fidelity_from_states: output dimension mismatch");
        }
    }
    if (gate.rows() != d || gate.cols() != d || !validate_unitary(gate, kTextDocumentTol)) {
        throw std::invalid_argument("average_gate_fidelity_from_states: gate is not a d x d unitary");
    }

    const ComplexMatrix gate_dag = gate.dagger();
    Complex sum = 0.0;
    for (std::size_t j = 0; j < d * d; ++j) {
        const ComplexMatrix left = gate * basis.elements()[j].dagger() * gate_dag;
        for (std::size_t k = 0; k < d * d; ++k) {
            const Complex alpha = alphas.at(j, k);
            if (alpha == Complex(0.0, 0.0)) continue;
            sum += alpha * (left * outputs[k]).trace();
        }
    }
    const double d2 = static_cast<double>(d * d);
    const double value = (sum.real() + d2) / (d2 * (static_cast<double>(d) + 1.0));
    return FidelityValue{value, FidelityMethod::StateBasis};
}

}  // namespace avgfid

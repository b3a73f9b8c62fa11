#include "operator_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace avgfid {

namespace {

// e^{2 pi i idx/d}; quarter-turn angles map to exact {1, i, -1, -i}.
Complex root_of_unity(std::size_t idx, std::size_t d) {
    if ((4 * idx) % d == 0) {
        switch ((4 * idx / d) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

bool basis_invariants_hold(std::size_t dim, const std::vector<ComplexMatrix>& elements, double tol) {
    if (elements.size() != dim * dim) return false;
    for (const auto& u : elements) {
        if (u.rows() != dim || u.cols() != dim) return false;
        if (!validate_unitary(u, tol)) return false;
    }
    const double d = static_cast<double>(dim);
    for (std::size_t j = 0; j < elements.size(); ++j) {
        for (std::size_t k = j; k < elements.size(); ++k) {
            const Complex g = hs_inner(elements[j], elements[k]);
            const Complex expected = (j == k) ? Complex(d, 0.0) : Complex(0.0, 0.0);
            if (std::abs(g - expected) > tol) return false;
        }
    }
    return true;
}

}  // namespace

UnitaryOperatorBasis::UnitaryOperatorBasis(std::size_t dim, std::vector<ComplexMatrix> elements,
                                           std::vector<std::pair<int, int>> labels)
    : dim_(dim), elements_(std::move(elements)), labels_(std::move(labels)) {
    if (!basis_invariants_hold(dim_, elements_, kStructuralTol)) {
        throw std::invalid_argument(
            "UnitaryOperatorBasis: need d^2 unitaries orthogonal under the "
            "Hilbert-Schmidt inner product (tol 1e-10)");
    }
    if (labels_.empty()) {
        labels_.reserve(elements_.size());
        for (std::size_t j = 0; j < elements_.size(); ++j) {
            labels_.emplace_back(static_cast<int>(j / dim_), static_cast<int>(j % dim_));
        }
    } else if (labels_.size() != elements_.size()) {
        throw std::invalid_argument("UnitaryOperatorBasis: label count must match element count");
    }
}

UnitaryOperatorBasis UnitaryOperatorBasis::unchecked(std::size_t dim, std::vector<ComplexMatrix> elements,
                                                     std::vector<std::pair<int, int>> labels) {
    UnitaryOperatorBasis b;
    b.dim_ = dim;
    b.elements_ = std::move(elements);
    b.labels_ = std::move(labels);
    return b;
}

UnitaryOperatorBasis shift_clock_basis(std::size_t d) {
    if (d < 2) throw std::invalid_argument("shift_clock_basis: d must be >= 2");

    // (X^k Z^l)|j> = omega^{l*j} |j+k mod d>, omega = e^{2 pi i/d}.
    std::vector<ComplexMatrix> elements;
    std::vector<std::pair<int, int>> labels;
    elements.reserve(d * d);
    labels.reserve(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            ComplexMatrix u(d, d);
            for (std::size_t j = 0; j < d; ++j) {
                u((j + k) % d, j) = root_of_unity((l * j) % d, d);
            }
            elements.push_back(std::move(u));
            labels.emplace_back(static_cast<int>(k), static_cast<int>(l));
        }
    }
    return UnitaryOperatorBasis(d, std::move(elements), std::move(labels));
}

bool validate_basis(const UnitaryOperatorBasis& basis, double tol) {
    return basis_invariants_hold(basis.dim(), basis.elements(), tol);
}

double entangled_state_decomposition_check(const UnitaryOperatorBasis& basis) {
    const std::size_t d = basis.dim();
    const PureState phi = maximally_entangled_state(d);
    ComplexMatrix sum(d * d, d * d);
    for (const auto& u : basis.elements()) {
        sum += kron(u.conjugate(), u);
    }
    sum *= Complex(1.0 / static_cast<double>(d * d), 0.0);
    return (phi.projector() - sum).max_abs();
}

}  // namespace avgfid

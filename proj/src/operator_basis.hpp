#pragma once

#include <utility>
#include <vector>

#include "linalg.hpp"

namespace avgfid {

/// d^2 unitaries satisfying tr(U_j^dag U_k) = delta_jk * d, i.e. U_j/sqrt(d)
/// is an orthonormal operator basis under the Hilbert-Schmidt inner product.
/// Construction validates unitarity and pairwise orthogonality at 1e-10;
/// unchecked() skips validation so candidate sets can be probed with
/// validate_basis().
class UnitaryOperatorBasis {
public:
    UnitaryOperatorBasis(std::size_t dim, std::vector<ComplexMatrix> elements,
                         std::vector<std::pair<int, int>> labels = {});

    static UnitaryOperatorBasis unchecked(std::size_t dim, std::vector<ComplexMatrix> elements,
                                          std::vector<std::pair<int, int>> labels = {});

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const std::vector<std::pair<int, int>>& labels() const { return labels_; }

private:
    UnitaryOperatorBasis() = default;

    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> elements_;
    std::vector<std::pair<int, int>> labels_;
};

/// The shift/clock basis X^k Z^l with X|j> = |j+1 mod d>, Z|j> = e^{2 pi i j/d}|j>,
/// ordered by index j = k*d + l; element (0,0) is the identity. Entries are
/// roots of unity evaluated directly from the reduced phase l*j mod d rather
/// than by floating-point matrix powers. Throws for d < 2.
UnitaryOperatorBasis shift_clock_basis(std::size_t d);

/// True iff the set holds exactly d^2 elements, each unitary within tol, with
/// tr(U_j^dag U_k) = delta_jk * d within tol for all pairs.
bool validate_basis(const UnitaryOperatorBasis& basis, double tol);

/// Max elementwise deviation |phi phi^dag - sum_j (U_j^* kron U_j)/d^2| with
/// phi the canonical maximally entangled state. Near zero for any valid
/// orthogonal unitary basis.
double entangled_state_decomposition_check(const UnitaryOperatorBasis& basis);

}  // namespace avgfid

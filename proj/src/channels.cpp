#include "channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "haar_mc.hpp"
#include "operator_basis.hpp"

namespace avgfid {

namespace {

// |v> = (I kron K)|phi> has components v[(a,b)] = K[b,a]/sqrt(d).
std::vector<Complex> choi_vector(const ComplexMatrix& kraus) {
    const std::size_t d = kraus.rows();
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> v(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            v[a * d + b] = kraus(b, a) * c;
        }
    }
    return v;
}

ComplexMatrix choi_matrix(const QuantumChannel& ch) {
    const std::size_t d = ch.dim();
    ComplexMatrix j(d * d, d * d);
    for (const auto& k : ch.kraus_ops()) {
        const auto v = choi_vector(k);
        for (std::size_t a = 0; a < v.size(); ++a) {
            for (std::size_t b = 0; b < v.size(); ++b) {
                j(a, b) += v[a] * std::conj(v[b]);
            }
        }
    }
    return j;
}

}  // namespace

QuantumChannel::QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops, double tol)
    : dim_(dim), kraus_ops_(std::move(kraus_ops)) {
    if (dim_ == 0) throw std::invalid_argument("QuantumChannel: dimension must be positive");
    if (kraus_ops_.empty()) throw std::invalid_argument("QuantumChannel: Kraus list must be nonempty");
    for (const auto& k : kraus_ops_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw std::invalid_argument("QuantumChannel: every Kraus operator must be d x d");
        }
    }
    ComplexMatrix sum(dim_, dim_);
    for (const auto& k : kraus_ops_) sum += k.dagger() * k;
    for (std::size_t i = 0; i < dim_; ++i) sum(i, i) -= 1.0;
    if (sum.max_abs() > tol) {
        throw std::invalid_argument("QuantumChannel: Kraus operators must satisfy sum K^dag K = I (trace preservation)");
    }
}

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const {
    if (rho.dim() != dim_) throw std::invalid_argument("QuantumChannel::apply: dimension mismatch");
    return DensityMatrix(apply_to_operator(rho.matrix()));
}

ComplexMatrix QuantumChannel::apply_to_operator(const ComplexMatrix& op) const {
    if (op.rows() != dim_ || op.cols() != dim_) {
        throw std::invalid_argument("QuantumChannel::apply_to_operator: dimension mismatch");
    }
    ComplexMatrix out(dim_, dim_);
    for (const auto& k : kraus_ops_) {
        out += k * op * k.dagger();
    }
    return out;
}

DepolarizingParams::DepolarizingParams(std::size_t dim_in, double p_in) : dim(dim_in), p(p_in) {
    if (dim < 2) throw std::invalid_argument("DepolarizingParams: dimension must be >= 2");
    const double upper = cp_upper_bound();
    if (p < -kAlgebraicTol || p > upper + kAlgebraicTol) {
        throw std::invalid_argument("DepolarizingParams: p must lie in [0, d^2/(d^2-1)]");
    }
    p = std::min(std::max(p, 0.0), upper);
}

QuantumChannel identity_channel(std::size_t d) {
    return QuantumChannel(d, {ComplexMatrix::identity(d)});
}

QuantumChannel unitary_channel(const ComplexMatrix& u, double tol) {
    if (!validate_unitary(u, tol)) {
        throw std::invalid_argument("unitary_channel: operator is not unitary");
    }
    return QuantumChannel(u.rows(), {u}, tol);
}

QuantumChannel depolarizing(std::size_t d, double p) {
    const DepolarizingParams params(d, p);
    const auto basis = shift_clock_basis(d);
    const double d2 = static_cast<double>(d * d);
    const double identity_weight = 1.0 - params.p + params.p / d2;
    const double other_weight = params.p / d2;

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(d * d);
    for (std::size_t j = 0; j < basis.elements().size(); ++j) {
        const double w = (j == 0) ? identity_weight : other_weight;
        if (w <= 0.0) continue;
        kraus.push_back(std::sqrt(w) * basis.elements()[j]);
    }
    return QuantumChannel(d, std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& first, const QuantumChannel& then) {
    if (first.dim() != then.dim()) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(first.kraus_ops().size() * then.kraus_ops().size());
    for (const auto& l : then.kraus_ops()) {
        for (const auto& k : first.kraus_ops()) {
            kraus.push_back(l * k);
        }
    }
    return QuantumChannel(first.dim(), std::move(kraus));
}

QuantumChannel random_channel(std::size_t d, std::size_t kraus_rank, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("random_channel: dimension must be >= 2");
    if (kraus_rank < 1 || kraus_rank > d * d) {
        throw std::invalid_argument("random_channel: kraus_rank must lie in [1, d^2]");
    }
    RngStream rng(seed);
    const ComplexMatrix u = haar_unitary(d * kraus_rank, rng);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(kraus_rank);
    for (std::size_t block = 0; block < kraus_rank; ++block) {
        ComplexMatrix k(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                k(a, b) = u(block * d + a, b);
            }
        }
        kraus.push_back(std::move(k));
    }
    return QuantumChannel(d, std::move(kraus));
}

DensityMatrix choi_state(const QuantumChannel& ch) {
    return DensityMatrix(choi_matrix(ch));
}

DepolarizingParams exact_twirl(const QuantumChannel& ch) {
    const std::size_t d = ch.dim();
    const PureState phi = maximally_entangled_state(d);
    const double fe = expectation(phi, choi_matrix(ch)).real();
    const double d2 = static_cast<double>(d * d);
    return DepolarizingParams(d, (1.0 - fe) * d2 / (d2 - 1.0));
}

QuantumChannel channel_from_choi(const DensityMatrix& choi, double tol) {
    const std::size_t d2 = choi.dim();
    const auto d = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(d2))));
    if (d * d != d2) throw std::invalid_argument("channel_from_choi: dimension must be a perfect square");

    const auto eig = hermitian_eigendecomposition(choi.matrix());
    std::vector<ComplexMatrix> kraus;
    const double c = std::sqrt(static_cast<double>(d));
    for (std::size_t idx = 0; idx < d2; ++idx) {
        const double lambda = eig.eigenvalues[idx];
        if (lambda <= 1e-12) continue;
        const double w = std::sqrt(lambda) * c;
        ComplexMatrix k(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                // Inverse of choi_vector: K[b,a] = sqrt(d lambda) v[(a,b)].
                k(b, a) = w * eig.eigenvectors(a * d + b, idx);
            }
        }
        kraus.push_back(std::move(k));
    }
    return QuantumChannel(d, std::move(kraus), tol);
}

}  // namespace avgfid

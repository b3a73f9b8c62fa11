#include <cmath>

#include "channels.hpp"
#include "doctest.h"
#include "haar_mc.hpp"
#include "operator_basis.hpp"
#include "test_support.hpp"

using namespace avgfid;
using avgfid::testing::max_abs_diff;
using avgfid::testing::random_density_matrix;
using avgfid::testing::random_matrix;

namespace {

const ComplexMatrix kPauliX(2, 2, {0.0, 1.0, 1.0, 0.0});
const ComplexMatrix kPauliZ(2, 2, {1.0, 0.0, 0.0, -1.0});

// Reference action p I/d + (1-p) rho, straight from the definition.
ComplexMatrix depolarizing_action(const ComplexMatrix& rho, double p) {
    ComplexMatrix out = ComplexMatrix::identity(rho.rows());
    out *= Complex(p / static_cast<double>(rho.rows()), 0.0);
    ComplexMatrix scaled = rho;
    scaled *= Complex(1.0 - p, 0.0);
    return out + scaled;
}

}  // namespace

TEST_CASE("construction validates trace preservation") {
    CHECK_THROWS_AS(QuantumChannel(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(QuantumChannel(2, {ComplexMatrix::identity(3)}), std::invalid_argument);
    // Two identity Kraus operators sum to 2I.
    CHECK_THROWS_AS(QuantumChannel(2, {ComplexMatrix::identity(2), ComplexMatrix::identity(2)}),
                    std::invalid_argument);
    CHECK_NOTHROW(QuantumChannel(2, {ComplexMatrix::identity(2)}));
}

TEST_CASE("apply: identity, fully depolarizing, bit flip") {
    const auto rho0 = DensityMatrix::pure(PureState::basis_state(2, 0));

    const auto id = identity_channel(2);
    CHECK(max_abs_diff(id.apply(rho0).matrix(), rho0.matrix()) == 0.0);

    const auto fully = depolarizing(2, 1.0);
    CHECK(max_abs_diff(fully.apply(rho0).matrix(), DensityMatrix::maximally_mixed(2).matrix()) <
          kAlgebraicTol);

    const auto flip = unitary_channel(kPauliX);
    CHECK(max_abs_diff(flip.apply(rho0).matrix(),
                       DensityMatrix::pure(PureState::basis_state(2, 1)).matrix()) == 0.0);

    CHECK_THROWS_AS(id.apply(DensityMatrix::maximally_mixed(3)), std::invalid_argument);
}

TEST_CASE("unitary_channel rejects non-unitary input and inverts cleanly") {
    CHECK_THROWS_AS(unitary_channel(ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 2.0})), std::invalid_argument);

    RngStream rng(3);
    const auto u = haar_unitary(3, rng);
    const auto round_trip = compose(unitary_channel(u), unitary_channel(u.dagger()));
    const auto rho = random_density_matrix(3, rng);
    CHECK(max_abs_diff(round_trip.apply(rho).matrix(), rho.matrix()) < kAlgebraicTol);
}

TEST_CASE("depolarizing matches its defining action") {
    const auto rho0 = DensityMatrix::pure(PureState::basis_state(2, 0));
    const auto half = depolarizing(2, 0.5);
    const auto out = half.apply(rho0).matrix();
    CHECK(out(0, 0).real() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(out(1, 1).real() == doctest::Approx(0.25).epsilon(1e-12));

    RngStream rng(5);
    for (std::size_t d : {2, 3, 4}) {
        for (double p : {0.0, 0.3, 1.0, static_cast<double>(d * d) / (d * d - 1.0)}) {
            CAPTURE(d);
            CAPTURE(p);
            const auto ch = depolarizing(d, p);
            const auto rho = random_density_matrix(d, rng);
            CHECK(max_abs_diff(ch.apply_to_operator(rho.matrix()), depolarizing_action(rho.matrix(), p)) <
                  kStructuralTol);
        }
    }

    CHECK_THROWS_AS(depolarizing(2, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(depolarizing(2, 4.0 / 3.0 + 1e-6), std::invalid_argument);
    CHECK_NOTHROW(depolarizing(2, 4.0 / 3.0));
}

TEST_CASE("compose equals sequential application") {
    RngStream rng(7);
    const auto a = random_channel(3, 2, 100);
    const auto b = random_channel(3, 3, 200);
    const auto both = compose(a, b);
    CHECK(both.kraus_ops().size() == 6);

    const auto rho = random_density_matrix(3, rng);
    CHECK(max_abs_diff(both.apply(rho).matrix(), b.apply(a.apply(rho)).matrix()) < kAlgebraicTol);

    const auto id = identity_channel(3);
    CHECK(max_abs_diff(compose(id, a).apply(rho).matrix(), a.apply(rho).matrix()) < kAlgebraicTol);
    CHECK_THROWS_AS(compose(identity_channel(2), a), std::invalid_argument);
}

TEST_CASE("random_channel: determinism, trace preservation, unitary at rank 1") {
    const auto a = random_channel(3, 4, 42);
    const auto b = random_channel(3, 4, 42);
    REQUIRE(a.kraus_ops().size() == 4);
    for (std::size_t i = 0; i < a.kraus_ops().size(); ++i) {
        CHECK(max_abs_diff(a.kraus_ops()[i], b.kraus_ops()[i]) == 0.0);
    }
    CHECK(max_abs_diff(a.kraus_ops()[0], random_channel(3, 4, 43).kraus_ops()[0]) > 1e-3);

    const auto single = random_channel(4, 1, 9);
    CHECK(single.kraus_ops().size() == 1);
    CHECK(validate_unitary(single.kraus_ops()[0], kStructuralTol));

    CHECK_THROWS_AS(random_channel(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_channel(3, 10, 1), std::invalid_argument);
}

TEST_CASE("apply preserves trace and Hermiticity on random channels") {
    RngStream rng(11);
    for (std::size_t d : {2, 3, 5}) {
        CAPTURE(d);
        const auto ch = random_channel(d, 3, 7 + d);
        const auto rho = random_density_matrix(d, rng);
        const auto out = ch.apply(rho);  // DensityMatrix constructor re-checks everything
        CHECK(std::abs(out.matrix().trace() - Complex(1.0, 0.0)) < kStructuralTol);
        CHECK((out.matrix() - out.matrix().dagger()).max_abs() < kStructuralTol);
    }
}

TEST_CASE("choi_state: identity, fully depolarizing, validity") {
    const auto id_choi = choi_state(identity_channel(3));
    CHECK(max_abs_diff(id_choi.matrix(), maximally_entangled_state(3).projector()) < kAlgebraicTol);

    for (std::size_t d : {2, 3}) {
        CAPTURE(d);
        const auto full = choi_state(depolarizing(d, 1.0));
        ComplexMatrix expected = ComplexMatrix::identity(d * d);
        expected *= Complex(1.0 / static_cast<double>(d * d), 0.0);
        CHECK(max_abs_diff(full.matrix(), expected) < kStructuralTol);
    }

    // Any channel: choi_state returns a valid DensityMatrix by construction.
    CHECK_NOTHROW(choi_state(random_channel(4, 5, 21)));
}

TEST_CASE("exact_twirl landmark values") {
    CHECK(exact_twirl(identity_channel(3)).p == doctest::Approx(0.0).epsilon(1e-14));

    for (double p0 : {0.0, 0.2, 0.7, 1.0}) {
        for (std::size_t d : {2, 3, 4}) {
            CAPTURE(d);
            CAPTURE(p0);
            CHECK(std::abs(exact_twirl(depolarizing(d, p0)).p - p0) < kAlgebraicTol);
        }
    }

    const auto z_twirl = exact_twirl(unitary_channel(kPauliZ));
    CHECK(z_twirl.p == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(z_twirl.p == doctest::Approx(z_twirl.cp_upper_bound()).epsilon(1e-14));
}

TEST_CASE("twirl covariance: depolarizing commutes with unitary conjugation") {
    RngStream rng(13);
    for (std::size_t d : {2, 3}) {
        CAPTURE(d);
        const auto ch = random_channel(d, 2, 31 + d);
        const auto twirled = depolarizing(d, exact_twirl(ch).p);
        const auto v = haar_unitary(d, rng);
        const auto rho = random_density_matrix(d, rng);

        const auto lhs = v * twirled.apply_to_operator(rho.matrix()) * v.dagger();
        const auto rhs = twirled.apply_to_operator(v * rho.matrix() * v.dagger());
        CHECK(max_abs_diff(lhs, rhs) < kStructuralTol);
    }
}

TEST_CASE("channel_from_choi reproduces the channel action") {
    RngStream rng(17);
    const auto ch = random_channel(3, 4, 55);
    const auto rebuilt = channel_from_choi(choi_state(ch));
    const auto rho = random_density_matrix(3, rng);
    CHECK(max_abs_diff(rebuilt.apply(rho).matrix(), ch.apply(rho).matrix()) < 1e-9);
}

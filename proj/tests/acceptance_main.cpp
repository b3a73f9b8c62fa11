// Acceptance suite: one check per shipped claim, one PASS/FAIL line each.
// Monte Carlo comparisons are expressed in estimated standard errors with a
// 1e-12 absolute allowance for floating-point accumulation (channels with a
// state-independent integrand have zero statistical error).

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "channels.hpp"
#include "experiment.hpp"
#include "fidelity.hpp"
#include "haar_mc.hpp"
#include "linalg.hpp"
#include "operator_basis.hpp"
#include "rng.hpp"
#include "run_cli.hpp"
#include "state_basis.hpp"

using namespace avgfid;
using avgfid::testing::read_text_file;
using avgfid::testing::run_cli;

namespace {

constexpr double kFpAllowance = 1e-12;

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Check {
    Outcome& outcome;

    void require(bool ok, const std::string& message) {
        if (!ok && outcome.passed) {
            outcome.passed = false;
            outcome.detail = message;
        }
    }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

QuantumChannel test_channel(std::size_t d, std::uint64_t seed, int index) {
    const std::size_t max_rank = std::min<std::size_t>(4, d * d);
    const std::size_t rank = 1 + static_cast<std::size_t>(index) % max_rank;
    return random_channel(d, rank, derive_stream(seed, static_cast<std::uint64_t>(index)));
}

ComplexMatrix random_gaussian_matrix(std::size_t d, std::uint64_t seed) {
    RngStream rng(seed);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.next_complex_gaussian();
    }
    return m;
}

// 1. Horodecki relation: the Monte Carlo estimate of the Haar-average
//    fidelity agrees with (d F_e + 1)/(d + 1) within 5 standard errors.
Outcome criterion_horodecki() {
    Outcome outcome;
    Check check{outcome};
    double worst_sigma = 0.0;
    for (std::size_t d : {2, 3, 4, 5, 8}) {
        const auto identity_gate = ComplexMatrix::identity(d);
        for (int i = 0; i < 50; ++i) {
            const auto ch = test_channel(d, 0xA100 + d, i);
            const double exact = average_fidelity(ch).value;
            const auto est = mc_average_gate_fidelity(ch, identity_gate, 100000,
                                                      derive_stream(0xA200 + d, i));
            const double diff = std::abs(est.mean - exact);
            const double allowed = 5.0 * est.std_error + kFpAllowance;
            if (est.std_error > 0.0) worst_sigma = std::max(worst_sigma, diff / est.std_error);
            check.require(diff < allowed, "d=" + std::to_string(d) + " channel " + std::to_string(i) +
                                              ": |mc - horodecki| = " + fmt(diff) + " > " + fmt(allowed));
        }
    }
    if (outcome.passed) outcome.detail = "250 channels, worst deviation " + fmt(worst_sigma) + " sigma";
    return outcome;
}

// 2. Main closed-form formula vs Monte Carlo and vs the composed-channel route.
Outcome criterion_main_formula() {
    Outcome outcome;
    Check check{outcome};
    double worst_sigma = 0.0;
    double worst_compose = 0.0;
    for (std::size_t d : {2, 3, 4, 5}) {
        const auto basis = shift_clock_basis(d);
        for (int i = 0; i < 50; ++i) {
            const auto ch = test_channel(d, 0xB100 + d, i);
            RngStream gate_rng(derive_stream(0xB200 + d, i));
            const auto gate = haar_unitary(d, gate_rng);

            const double eq12 = average_gate_fidelity(ch, gate, basis).value;
            const auto est = mc_average_gate_fidelity(ch, gate, 100000, derive_stream(0xB300 + d, i));
            const double diff = std::abs(est.mean - eq12);
            const double allowed = 5.0 * est.std_error + kFpAllowance;
            if (est.std_error > 0.0) worst_sigma = std::max(worst_sigma, diff / est.std_error);
            check.require(diff < allowed, "d=" + std::to_string(d) + " pair " + std::to_string(i) +
                                              ": |mc - eq12| = " + fmt(diff) + " > " + fmt(allowed));

            const double composed =
                average_fidelity(compose(ch, unitary_channel(gate.dagger()))).value;
            worst_compose = std::max(worst_compose, std::abs(eq12 - composed));
            check.require(std::abs(eq12 - composed) < 1e-10,
                          "d=" + std::to_string(d) + " pair " + std::to_string(i) +
                              ": |eq12 - F(U^dag o E)| = " + fmt(std::abs(eq12 - composed)));
        }
    }
    if (outcome.passed) {
        outcome.detail = "200 pairs, worst mc deviation " + fmt(worst_sigma) +
                         " sigma, worst composed-route gap " + fmt(worst_compose);
    }
    return outcome;
}

// 3. Qubit closed form: matches the general formula at d=2 and the
//    depolarizing landmark 1 - p/2.
Outcome criterion_qubit_closed_form() {
    Outcome outcome;
    Check check{outcome};
    const auto basis = shift_clock_basis(2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto ch = test_channel(2, 0xC100, i);
        RngStream gate_rng(derive_stream(0xC200, i));
        const auto gate = haar_unitary(2, gate_rng);
        const double diff = std::abs(average_gate_fidelity_qubit(ch, gate).value -
                                     average_gate_fidelity(ch, gate, basis).value);
        worst = std::max(worst, diff);
        check.require(diff < 1e-12, "case " + std::to_string(i) + ": |eq13 - eq12| = " + fmt(diff));
    }
    const auto id2 = ComplexMatrix::identity(2);
    for (int k = 0; k <= 10; ++k) {
        const double p = 0.1 * k;
        const double diff = std::abs(average_gate_fidelity_qubit(depolarizing(2, p), id2).value -
                                     (1.0 - p / 2.0));
        worst = std::max(worst, diff);
        check.require(diff < 1e-12, "depolarizing p=" + fmt(p) + ": |eq13 - (1-p/2)| = " + fmt(diff));
    }
    if (outcome.passed) outcome.detail = "100 random cases + 11 depolarizing landmarks, worst gap " + fmt(worst);
    return outcome;
}

// 4. Twirl theorem: the empirical twirl converges to the exact depolarizing
//    channel, and 10x more unitaries shrink the distance below half.
Outcome criterion_twirl() {
    Outcome outcome;
    Check check{outcome};
    double worst_distance = 0.0;
    for (std::size_t d : {2, 3}) {
        double sum_coarse = 0.0, sum_fine = 0.0;
        for (int i = 0; i < 10; ++i) {
            const auto ch = test_channel(d, 0xD100 + d, i);
            const auto exact = choi_state(depolarizing(d, exact_twirl(ch).p)).matrix();
            const double coarse = frobenius_distance(
                mc_twirl_choi(ch, 10000, derive_stream(0xD200 + d, i)).matrix(), exact);
            const double fine = frobenius_distance(
                mc_twirl_choi(ch, 100000, derive_stream(0xD300 + d, i)).matrix(), exact);
            sum_coarse += coarse;
            sum_fine += fine;
            worst_distance = std::max(worst_distance, coarse);
            check.require(coarse < 0.05, "d=" + std::to_string(d) + " channel " + std::to_string(i) +
                                             ": empirical twirl distance " + fmt(coarse));
        }
        const double ratio = sum_fine / sum_coarse;
        check.require(ratio < 0.5, "d=" + std::to_string(d) + ": mean distance ratio at 10x unitaries = " +
                                       fmt(ratio));
    }
    if (outcome.passed) outcome.detail = "20 channels, worst distance " + fmt(worst_distance) + " (bound 0.05)";
    return outcome;
}

// 5. Entangled-state decomposition and the transpose identity.
Outcome criterion_entangled_state_identities() {
    Outcome outcome;
    Check check{outcome};
    double worst = 0.0;
    for (std::size_t d = 2; d <= 8; ++d) {
        const double dev = entangled_state_decomposition_check(shift_clock_basis(d));
        worst = std::max(worst, dev);
        check.require(dev < 1e-12, "d=" + std::to_string(d) + ": decomposition deviation " + fmt(dev));

        const PureState phi = maximally_entangled_state(d);
        const auto identity = ComplexMatrix::identity(d);
        for (int i = 0; i < 20; ++i) {
            const auto a = random_gaussian_matrix(d, derive_stream(0xE100 + d, i));
            const auto lhs = mat_vec(kron(a, identity), phi.amplitudes());
            const auto rhs = mat_vec(kron(identity, a.transpose()), phi.amplitudes());
            double dev_t = 0.0;
            for (std::size_t e = 0; e < lhs.size(); ++e) dev_t = std::max(dev_t, std::abs(lhs[e] - rhs[e]));
            worst = std::max(worst, dev_t);
            check.require(dev_t < 1e-12, "d=" + std::to_string(d) + " matrix " + std::to_string(i) +
                                             ": transpose identity deviation " + fmt(dev_t));
        }
    }
    if (outcome.passed) outcome.detail = "d in {2..8}, worst elementwise deviation " + fmt(worst);
    return outcome;
}

// 6. Simulated-experiment route: exact mode reproduces the closed form;
//    finite shots cover it at 5 sigma with 1/sqrt(shots) error scaling.
Outcome criterion_experiment() {
    Outcome outcome;
    Check check{outcome};
    double worst_exact = 0.0;
    for (std::size_t d : {2, 3, 4}) {
        for (int i = 0; i < 5; ++i) {
            const auto ch = test_channel(d, 0xF100 + d, i);
            RngStream gate_rng(derive_stream(0xF200 + d, i));
            const auto gate = haar_unitary(d, gate_rng);
            const double exact = average_gate_fidelity(ch, gate, shift_clock_basis(d)).value;
            const auto est = estimate_fidelity_experiment(ch, gate, 0, 1, 1);
            worst_exact = std::max(worst_exact, std::abs(est.mean - exact));
            check.require(std::abs(est.mean - exact) < 1e-10,
                          "d=" + std::to_string(d) + " channel " + std::to_string(i) +
                              ": exact-output gap " + fmt(std::abs(est.mean - exact)));
        }
    }

    double worst_sigma = 0.0;
    for (std::size_t d : {2, 3}) {
        for (int i = 0; i < 3; ++i) {
            const auto ch = test_channel(d, 0xF300 + d, i);
            RngStream gate_rng(derive_stream(0xF400 + d, i));
            const auto gate = haar_unitary(d, gate_rng);
            const double exact = average_gate_fidelity(ch, gate, shift_clock_basis(d)).value;
            const auto est = estimate_fidelity_experiment(ch, gate, 10000, derive_stream(0xF500 + d, i), 20);
            const double diff = std::abs(est.mean - exact);
            if (est.std_error > 0.0) worst_sigma = std::max(worst_sigma, diff / est.std_error);
            check.require(diff < 5.0 * est.std_error + kFpAllowance,
                          "d=" + std::to_string(d) + " channel " + std::to_string(i) +
                              ": finite-shot estimate off by " + fmt(diff) + " (5 sigma = " +
                              fmt(5.0 * est.std_error) + ")");
        }
    }

    const auto scaling_channel = test_channel(2, 0xF600, 0);
    const auto id2 = ComplexMatrix::identity(2);
    const auto coarse = estimate_fidelity_experiment(scaling_channel, id2, 1000, 51, 60);
    const auto fine = estimate_fidelity_experiment(scaling_channel, id2, 100000, 51, 60);
    const double ratio = coarse.std_error / fine.std_error;
    check.require(ratio > 7.0 && ratio < 14.0,
                  "std-error ratio between shots=1e3 and 1e5 is " + fmt(ratio) + ", outside [7, 14]");

    if (outcome.passed) {
        outcome.detail = "exact-mode gap " + fmt(worst_exact) + ", worst coverage " + fmt(worst_sigma) +
                         " sigma, shot-scaling ratio " + fmt(ratio);
    }
    return outcome;
}

// 7. Closed-form landmark values via both the main formula and the
//    Horodecki route.
Outcome criterion_landmarks() {
    Outcome outcome;
    Check check{outcome};
    double worst = 0.0;
    for (std::size_t d : {2, 3, 4, 5, 8}) {
        const auto basis = shift_clock_basis(d);
        const auto identity_gate = ComplexMatrix::identity(d);
        const auto id_channel = identity_channel(d);

        const double f_identity = average_gate_fidelity(id_channel, identity_gate, basis).value;
        check.require(std::abs(f_identity - 1.0) < 1e-14,
                      "identity channel at d=" + std::to_string(d) + ": F = 1 off by " +
                          fmt(std::abs(f_identity - 1.0)));

        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double expected = 1.0 - p * (static_cast<double>(d) - 1.0) / static_cast<double>(d);
            const auto ch = depolarizing(d, p);
            const double via_eq12 = average_gate_fidelity(ch, identity_gate, basis).value;
            const double via_horodecki = average_fidelity(ch).value;
            worst = std::max({worst, std::abs(via_eq12 - expected), std::abs(via_horodecki - expected)});
            check.require(std::abs(via_eq12 - expected) < 1e-12,
                          "depolarizing d=" + std::to_string(d) + " p=" + fmt(p) + ": eq12 off by " +
                              fmt(std::abs(via_eq12 - expected)));
            check.require(std::abs(via_horodecki - expected) < 1e-12,
                          "depolarizing d=" + std::to_string(d) + " p=" + fmt(p) + ": horodecki off by " +
                              fmt(std::abs(via_horodecki - expected)));
        }

        RngStream vrng(derive_stream(0xAB00, d));
        const auto v = haar_unitary(d, vrng);
        const double fe = std::norm(v.trace()) / static_cast<double>(d * d);
        const double expected = (static_cast<double>(d) * fe + 1.0) / (static_cast<double>(d) + 1.0);
        const double via_eq12 = average_gate_fidelity(unitary_channel(v), identity_gate, basis).value;
        worst = std::max(worst, std::abs(via_eq12 - expected));
        check.require(std::abs(via_eq12 - expected) < 1e-12,
                      "unitary error at d=" + std::to_string(d) + ": eq12 off by " +
                          fmt(std::abs(via_eq12 - expected)));
    }

    const ComplexMatrix pauli_z(2, 2, {1.0, 0.0, 0.0, -1.0});
    const double f_z =
        average_gate_fidelity(unitary_channel(pauli_z), ComplexMatrix::identity(2), shift_clock_basis(2)).value;
    worst = std::max(worst, std::abs(f_z - 1.0 / 3.0));
    check.require(std::abs(f_z - 1.0 / 3.0) < 1e-12, "Z2 vs identity: off by " + fmt(std::abs(f_z - 1.0 / 3.0)));

    if (outcome.passed) outcome.detail = "identity/depolarizing/unitary landmarks, worst gap " + fmt(worst);
    return outcome;
}

// 8. CLI golden files: byte-identical reports across runs and the 0/1/2
//    exit-code contract.
Outcome criterion_cli_golden() {
    Outcome outcome;
    Check check{outcome};
    const std::string cli = AVGFID_CLI_PATH;
    const std::string fixtures = AVGFID_FIXTURE_DIR;

    const std::vector<std::pair<std::string, std::string>> cases = {
        {"depolarizing_mc.json",
         " compute --channel " + fixtures + "/depolarizing.json --gate " + fixtures +
             "/gate_identity.json --method mc --samples 2000 --seed 7"},
        {"kraus_identity_exact.json",
         " compute --channel " + fixtures + "/kraus_identity.json --gate " + fixtures +
             "/gate_shift.json --method exact"},
        {"composed_experiment.json",
         " compute --channel " + fixtures + "/composed.json --gate " + fixtures +
             "/gate_identity.json --method experiment --shots 500 --repeats 5 --seed 3"},
        {"depolarizing_twirl.json",
         " twirl --channel " + fixtures + "/depolarizing.json --unitaries 1000 --seed 3"},
    };
    for (const auto& [golden, command] : cases) {
        const auto first = run_cli(cli + command);
        const auto second = run_cli(cli + command);
        check.require(first.exit_code == 0, golden + ": exit code " + std::to_string(first.exit_code));
        check.require(first.stdout_text == second.stdout_text, golden + ": reports differ between runs");
        check.require(first.stdout_text == read_text_file(fixtures + "/golden/" + golden),
                      golden + ": report differs from the stored golden file");
    }

    const int ok_exit = run_cli(cli + " validate --channel " + fixtures + "/depolarizing.json").exit_code;
    const int semantic_exit = run_cli(cli + " validate --channel " + fixtures + "/bad_semantic.json").exit_code;
    const int parse_exit = run_cli(cli + " validate --channel " + fixtures + "/bad_syntax.json").exit_code;
    check.require(ok_exit == 0, "valid spec exited with " + std::to_string(ok_exit));
    check.require(semantic_exit == 1, "semantic violation exited with " + std::to_string(semantic_exit));
    check.require(parse_exit == 2, "parse failure exited with " + std::to_string(parse_exit));

    if (outcome.passed) outcome.detail = "4 golden reports byte-stable; exit codes 0/1/2 verified";
    return outcome;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"horodecki-relation", criterion_horodecki},
        {"main-formula", criterion_main_formula},
        {"qubit-closed-form", criterion_qubit_closed_form},
        {"twirl-is-depolarizing", criterion_twirl},
        {"entangled-state-identities", criterion_entangled_state_identities},
        {"experimental-route", criterion_experiment},
        {"landmark-values", criterion_landmarks},
        {"cli-golden-files", criterion_cli_golden},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.passed = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.passed) ++failures;
        std::printf("%s  %zu  %-28s  %s\n", outcome.passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

// avgfid command-line tool. All computation goes through the C API in
// avgfid/avgfid.h; this file only parses arguments, shuttles file contents and
// maps statuses onto the exit-code contract (0 ok, 1 semantic validation
// failure, 2 parse/usage failure).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "avgfid/avgfid.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

int exit_code_for(avgfid_status status) {
    switch (status) {
        case AVGFID_OK: return kExitOk;
        case AVGFID_ERROR_PARSE: return kExitParse;
        default: return kExitValidation;
    }
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int fail(avgfid_status status) {
    std::cerr << "avgfid: error: " << avgfid_last_error() << "\n";
    return exit_code_for(status);
}

int emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "avgfid: error: cannot open output file " << out_path << "\n";
        return kExitValidation;
    }
    out << report;
    return kExitOk;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { avgfid_string_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Average gate fidelity of noisy quantum operations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(avgfid_version()); });

    std::string channel_path, gate_path, method, basis = "shiftclock", out_path;
    std::uint64_t samples = 0, shots = 0, seed = 0, unitaries = 0;
    std::uint32_t repeats = 0;

    CLI::App* compute = app.add_subcommand("compute", "Compute the average gate fidelity of a channel");
    compute->add_option("--channel", channel_path, "Channel spec file")->required();
    compute->add_option("--gate", gate_path, "Gate spec file")->required();
    compute->add_option("--method", method, "exact | mc | experiment")->required();
    compute->add_option("--basis", basis, "Operator basis (shiftclock)");
    auto* samples_opt = compute->add_option("--samples", samples, "Monte Carlo sample count (mc)");
    auto* shots_opt = compute->add_option("--shots", shots, "Shots per tomography setting (experiment; 0 = exact probabilities)");
    auto* repeats_opt = compute->add_option("--repeats", repeats, "Tomography repetitions (experiment)");
    auto* seed_opt = compute->add_option("--seed", seed, "RNG seed (required for mc and experiment)");
    compute->add_option("--out", out_path, "Write the report here instead of stdout");

    CLI::App* twirl = app.add_subcommand("twirl", "Exact twirl parameter, optionally an empirical check");
    twirl->add_option("--channel", channel_path, "Channel spec file")->required();
    auto* unitaries_opt = twirl->add_option("--unitaries", unitaries, "Haar unitaries for the empirical twirl");
    auto* twirl_seed_opt = twirl->add_option("--seed", seed, "RNG seed (required with --unitaries)");
    twirl->add_option("--out", out_path, "Write the report here instead of stdout");

    CLI::App* validate = app.add_subcommand("validate", "Parse a channel spec and check its invariants");
    validate->add_option("--channel", channel_path, "Channel spec file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help / --version
            return app.exit(e);
        }
        std::cerr << "avgfid: error: " << e.what() << "\n";
        return kExitParse;
    }

    const auto channel_text = read_file(channel_path);
    if (!channel_text) {
        std::cerr << "avgfid: error: cannot read channel file " << channel_path << "\n";
        return kExitParse;
    }

    if (compute->parsed()) {
        const auto gate_text = read_file(gate_path);
        if (!gate_text) {
            std::cerr << "avgfid: error: cannot read gate file " << gate_path << "\n";
            return kExitParse;
        }
        avgfid_compute_options options{};
        options.method = method.c_str();
        options.basis = basis.c_str();
        options.samples = samples;
        options.shots = shots;
        options.repeats = repeats;
        options.seed = seed;
        options.has_samples = samples_opt->count() > 0;
        options.has_shots = shots_opt->count() > 0;
        options.has_repeats = repeats_opt->count() > 0;
        options.has_seed = seed_opt->count() > 0;

        OwnedString report;
        double duration_ms = 0.0;
        const avgfid_status status =
            avgfid_report_compute(channel_text->c_str(), gate_text->c_str(), &options, &report.ptr, &duration_ms);
        if (status != AVGFID_OK) return fail(status);
        std::fprintf(stderr, "avgfid: computed in %.1f ms\n", duration_ms);
        return emit(report.ptr, out_path);
    }

    if (twirl->parsed()) {
        OwnedString report;
        double duration_ms = 0.0;
        const avgfid_status status =
            avgfid_report_twirl(channel_text->c_str(), unitaries_opt->count() > 0 ? unitaries : 0,
                                twirl_seed_opt->count() > 0 ? 1 : 0, seed, &report.ptr, &duration_ms);
        if (status != AVGFID_OK) return fail(status);
        std::fprintf(stderr, "avgfid: computed in %.1f ms\n", duration_ms);
        return emit(report.ptr, out_path);
    }

    // validate
    OwnedString summary;
    const avgfid_status status = avgfid_validate_channel(channel_text->c_str(), &summary.ptr);
    if (status != AVGFID_OK) return fail(status);
    std::cout << summary.ptr;
    return kExitOk;
}

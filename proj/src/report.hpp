#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace avgfid {

inline constexpr const char* kToolName = "avgfid";
inline constexpr const char* kToolVersion = "1.0.0";

/// Options for the compute entry point. `method` is "exact", "mc" or
/// "experiment"; mc needs samples+seed, experiment needs shots+repeats+seed
/// (shots == 0 selects the exact-probability tomography mode).
struct ComputeOptions {
    std::string method;
    std::string basis = "shiftclock";
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint32_t> repeats;
    std::optional<std::uint64_t> seed;
};

struct TwirlOptions {
    std::optional<std::uint64_t> unitaries;
    std::optional<std::uint64_t> seed;
};

/// Parse the channel/gate documents, run the requested method and return the
/// report as canonical JSON (fixed key order, reals as %.16e): byte-identical
/// for identical inputs, method and seed. Wall-clock duration is returned
/// separately so the report bytes stay deterministic.
std::string run_compute(const std::string& channel_json, const std::string& gate_json,
                        const ComputeOptions& options, double* duration_ms = nullptr);

/// Exact twirl parameter report; with unitaries+seed also the Frobenius
/// distance between the empirical-twirl Choi state and the exact depolarizing
/// Choi state.
std::string run_twirl(const std::string& channel_json, const TwirlOptions& options,
                      double* duration_ms = nullptr);

/// Parses and validates only; returns a one-line summary document.
std::string run_validate(const std::string& channel_json);

}  // namespace avgfid

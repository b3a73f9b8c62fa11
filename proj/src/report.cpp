#include "report.hpp"

#include <chrono>
#include <stdexcept>

#include "experiment.hpp"
#include "fidelity.hpp"
#include "haar_mc.hpp"
#include "operator_basis.hpp"
#include "spec_io.hpp"

namespace avgfid {

namespace {

/// Append-only writer for the fixed-layout report documents. Keys go out in
/// insertion order and every real number is rendered as %.16e.
class JsonWriter {
public:
    void begin_object() {
        comma();
        out_ += '{';
        first_ = true;
    }
    void end_object() {
        out_ += '}';
        first_ = false;
    }
    void key(const std::string& name) {
        comma();
        out_ += '"' + name + "\":";
        first_ = true;  // suppress comma before the value
    }
    void value(double x) {
        comma();
        out_ += format_double(x);
    }
    void value_uint(std::uint64_t x) {
        comma();
        out_ += std::to_string(x);
    }
    void value(const std::string& s) {
        comma();
        out_ += '"' + s + '"';
    }
    void value_bool(bool b) {
        comma();
        out_ += b ? "true" : "false";
    }
    std::string take() { return std::move(out_); }

private:
    void comma() {
        if (!first_ && !out_.empty() && out_.back() != '{' && out_.back() != ':') out_ += ',';
        first_ = false;
    }

    std::string out_;
    bool first_ = true;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

void write_header(JsonWriter& w, const std::string& method) {
    w.key("tool");
    w.value(std::string(kToolName));
    w.key("version");
    w.value(std::string(kToolVersion));
    w.key("method");
    w.value(method);
}

void write_channel_fingerprint(JsonWriter& w, const ChannelSpecDocument& doc, const QuantumChannel& ch) {
    w.key("channel");
    w.begin_object();
    w.key("dim");
    w.value_uint(doc.dim);
    w.key("type");
    w.value(std::string(doc.channel.type_name()));
    w.key("hash");
    w.value(channel_content_hash(ch));
    w.end_object();
}

void write_gate_fingerprint(JsonWriter& w, const GateSpecDocument& doc) {
    w.key("gate");
    w.begin_object();
    w.key("dim");
    w.value_uint(doc.dim);
    w.key("type");
    w.value(doc.kind);
    w.key("hash");
    w.value(gate_content_hash(doc.matrix));
    w.end_object();
}

/// Fidelity values marginally outside [0,1] are clamped for the report with
/// the raw value kept alongside.
void write_fidelity(JsonWriter& w, const std::string& name, const FidelityValue& f) {
    w.key(name);
    w.begin_object();
    w.key("method");
    w.value(to_string(f.method));
    const double clamped = std::min(std::max(f.value, 0.0), 1.0);
    w.key("value");
    w.value(clamped);
    if (clamped != f.value) {
        w.key("raw_value");
        w.value(f.value);
        w.key("clamped");
        w.value_bool(true);
    }
    w.end_object();
}

void write_estimate(JsonWriter& w, const std::string& name, const McEstimate& e) {
    w.key(name);
    w.begin_object();
    w.key("method");
    w.value(std::string("monte-carlo"));
    w.key("mean");
    w.value(e.mean);
    w.key("std_error");
    w.value(e.std_error);
    w.key("n_samples");
    w.value_uint(e.n_samples);
    w.key("seed");
    w.value_uint(e.seed);
    w.end_object();
}

std::uint64_t require_option(const std::optional<std::uint64_t>& opt, const char* name, const char* method) {
    if (!opt) {
        throw SpecValidationError(std::string("method \"") + method + "\" requires --" + name);
    }
    return *opt;
}

}  // namespace

std::string run_compute(const std::string& channel_json, const std::string& gate_json,
                        const ComputeOptions& options, double* duration_ms) {
    const Timer timer;
    const ChannelSpecDocument channel_doc = parse_channel_spec(channel_json);
    const GateSpecDocument gate_doc = parse_gate_spec(gate_json);
    if (gate_doc.dim != channel_doc.dim) {
        throw SpecValidationError("channel and gate dimensions differ");
    }
    if (options.basis != "shiftclock") {
        throw SpecValidationError("unsupported basis \"" + options.basis + "\" (expected shiftclock)");
    }
    const QuantumChannel channel = resolve_channel(channel_doc);

    JsonWriter w;
    w.begin_object();
    write_header(w, options.method);
    write_channel_fingerprint(w, channel_doc, channel);
    write_gate_fingerprint(w, gate_doc);
    w.key("results");
    w.begin_object();

    if (options.method == "exact") {
        const auto basis = shift_clock_basis(channel_doc.dim);
        write_fidelity(w, "average_gate_fidelity", average_gate_fidelity(channel, gate_doc.matrix, basis));
        write_fidelity(w, "entanglement_fidelity",
                       entanglement_fidelity(channel, EntanglementFidelityRoute::Choi));
        write_fidelity(w, "average_fidelity_horodecki", average_fidelity(channel));
    } else if (options.method == "mc") {
        const std::uint64_t samples = require_option(options.samples, "samples", "mc");
        const std::uint64_t seed = require_option(options.seed, "seed", "mc");
        if (samples == 0) throw SpecValidationError("--samples must be positive");
        write_estimate(w, "average_gate_fidelity",
                       mc_average_gate_fidelity(channel, gate_doc.matrix, samples, seed));
    } else if (options.method == "experiment") {
        if (!options.shots) throw SpecValidationError("method \"experiment\" requires --shots");
        if (!options.repeats) throw SpecValidationError("method \"experiment\" requires --repeats");
        const std::uint64_t seed = require_option(options.seed, "seed", "experiment");
        if (*options.repeats == 0) throw SpecValidationError("--repeats must be positive");
        const McEstimate est =
            estimate_fidelity_experiment(channel, gate_doc.matrix, *options.shots, seed, *options.repeats);
        w.key("average_gate_fidelity");
        w.begin_object();
        w.key("method");
        w.value(std::string("state-basis"));
        w.key("mean");
        w.value(est.mean);
        w.key("std_error");
        w.value(est.std_error);
        w.key("shots");
        w.value_uint(*options.shots);
        w.key("repeats");
        w.value_uint(*options.repeats);
        w.key("seed");
        w.value_uint(seed);
        w.end_object();
    } else {
        throw SpecValidationError("unknown method \"" + options.method +
                                  "\" (expected exact | mc | experiment)");
    }

    w.end_object();  // results
    w.end_object();
    if (duration_ms != nullptr) *duration_ms = timer.elapsed_ms();
    std::string out = w.take();
    out += '\n';
    return out;
}

std::string run_twirl(const std::string& channel_json, const TwirlOptions& options, double* duration_ms) {
    const Timer timer;
    const ChannelSpecDocument channel_doc = parse_channel_spec(channel_json);
    const QuantumChannel channel = resolve_channel(channel_doc);
    if (options.unitaries && !options.seed) {
        throw SpecValidationError("--unitaries requires --seed");
    }

    const DepolarizingParams twirl = exact_twirl(channel);

    JsonWriter w;
    w.begin_object();
    write_header(w, "twirl");
    write_channel_fingerprint(w, channel_doc, channel);
    w.key("results");
    w.begin_object();
    w.key("depolarizing_p");
    w.value(twirl.p);
    if (options.unitaries) {
        if (*options.unitaries == 0) throw SpecValidationError("--unitaries must be positive");
        const DensityMatrix empirical = mc_twirl_choi(channel, *options.unitaries, *options.seed);
        const DensityMatrix exact = choi_state(depolarizing(channel_doc.dim, twirl.p));
        w.key("empirical_choi_distance");
        w.value(frobenius_distance(empirical.matrix(), exact.matrix()));
        w.key("unitaries");
        w.value_uint(*options.unitaries);
        w.key("seed");
        w.value_uint(*options.seed);
    }
    w.end_object();
    w.end_object();
    if (duration_ms != nullptr) *duration_ms = timer.elapsed_ms();
    std::string out = w.take();
    out += '\n';
    return out;
}

std::string run_validate(const std::string& channel_json) {
    const ChannelSpecDocument doc = parse_channel_spec(channel_json);
    const QuantumChannel channel = resolve_channel(doc);

    JsonWriter w;
    w.begin_object();
    w.key("valid");
    w.value_bool(true);
    w.key("dim");
    w.value_uint(doc.dim);
    w.key("type");
    w.value(std::string(doc.channel.type_name()));
    w.key("kraus_count");
    w.value_uint(channel.kraus_ops().size());
    w.key("hash");
    w.value(channel_content_hash(channel));
    w.end_object();
    std::string out = w.take();
    out += '\n';
    return out;
}

}  // namespace avgfid

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "channels.hpp"
#include "linalg.hpp"

namespace avgfid {

/// Document is syntactically malformed: not JSON, or the structure does not
/// match the schema (missing/unknown fields, wrong JSON types, ragged
/// matrices). CLI exit code 2.
class SpecParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Document parsed but a value violates a semantic invariant (trace
/// preservation, p out of range, non-unitary matrix, bad kraus_rank, ...).
/// CLI exit code 1.
class SpecValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Channel description tree. Complex numbers are [re, im] pairs and matrices
/// row-major arrays of rows throughout the on-disk format.
struct ChannelSpecNode {
    enum class Type { Kraus, Depolarizing, Unitary, Compose, Random };

    Type type = Type::Kraus;
    std::vector<ComplexMatrix> operators;           // kraus (all), unitary (one)
    double p = 0.0;                                 // depolarizing
    std::unique_ptr<ChannelSpecNode> first, then;   // compose
    std::uint64_t kraus_rank = 0;                   // random
    std::uint64_t seed = 0;                         // random

    const char* type_name() const;
};

struct ChannelSpecDocument {
    std::size_t dim = 0;
    ChannelSpecNode channel;
};

/// Parses and semantically validates a channel spec. Validation includes
/// resolving the document to a QuantumChannel, so a parsed document is always
/// resolvable (trace preservation checked at the 1e-8 text-document tolerance).
ChannelSpecDocument parse_channel_spec(const std::string& text);

/// Canonical serialization: fixed key order, real numbers as %.16e.
/// parse(serialize(doc)) reproduces the document byte-for-byte.
std::string serialize_channel_spec(const ChannelSpecDocument& doc);

QuantumChannel resolve_channel(const ChannelSpecDocument& doc);

/// Gate document: {"dim": d, "gate": ...} where the gate is a matrix or one of
/// the named shortcuts "identity", "shift", "clock" (shift/clock basis
/// elements X and Z).
struct GateSpecDocument {
    std::size_t dim = 0;
    std::string kind;  // "identity" | "shift" | "clock" | "matrix"
    ComplexMatrix matrix;
};

GateSpecDocument parse_gate_spec(const std::string& text);
std::string serialize_gate_spec(const GateSpecDocument& doc);

/// FNV-1a 64-bit over the canonical serialization of the resolved operators,
/// as a 16-digit hex string. Used for report fingerprints.
std::string channel_content_hash(const QuantumChannel& ch);
std::string gate_content_hash(const ComplexMatrix& gate);

/// %.16e rendering shared by every serializer (17 significant digits).
std::string format_double(double x);

}  // namespace avgfid

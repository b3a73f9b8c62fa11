#include "spec_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "operator_basis.hpp"

namespace avgfid {

namespace {

using nlohmann::json;

std::string format_uint(std::uint64_t v) { return std::to_string(v); }

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw SpecParseError(where + ": " + what);
}

[[noreturn]] void semantic_fail(const std::string& where, const std::string& what) {
    throw SpecValidationError(where + ": " + what);
}

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) parse_fail(where, "expected a number");
    return j.get<double>();
}

std::uint64_t require_uint(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) parse_fail(where, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) parse_fail(where, "complex numbers are two-element [re, im] arrays");
    return {require_number(j[0], where + "[0]"), require_number(j[1], where + "[1]")};
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) parse_fail(where, "expected a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        const std::string row_where = where + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.empty()) parse_fail(row_where, "expected a nonempty row array");
        if (r == 0) {
            cols = row.size();
            entries.reserve(rows * cols);
        } else if (row.size() != cols) {
            parse_fail(row_where, "ragged matrix: all rows must have the same length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            entries.push_back(parse_complex(row[c], row_where + "[" + std::to_string(c) + "]"));
        }
    }
    try {
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const std::invalid_argument& e) {
        semantic_fail(where, e.what());
    }
}

void require_known_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (item.key() == name) {
                known = true;
                break;
            }
        }
        if (!known) parse_fail(where, "unknown field \"" + item.key() + "\"");
    }
}

const json& require_field(const json& j, const char* name, const std::string& where) {
    const auto it = j.find(name);
    if (it == j.end()) parse_fail(where, std::string("missing field \"") + name + "\"");
    return *it;
}

ChannelSpecNode parse_channel_node(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object");
    const json& type = require_field(j, "type", where);
    if (!type.is_string()) parse_fail(where + ".type", "expected a string");
    const std::string type_name = type.get<std::string>();

    ChannelSpecNode node;
    if (type_name == "kraus") {
        require_known_fields(j, {"type", "operators"}, where);
        const json& ops = require_field(j, "operators", where);
        if (!ops.is_array() || ops.empty()) parse_fail(where + ".operators", "expected a nonempty array");
        node.type = ChannelSpecNode::Type::Kraus;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            const std::string op_where = where + ".operators[" + std::to_string(i) + "]";
            ComplexMatrix op = parse_matrix(ops[i], op_where);
            if (op.rows() != dim || op.cols() != dim) {
                semantic_fail(op_where, "Kraus operator shape must be dim x dim");
            }
            node.operators.push_back(std::move(op));
        }
    } else if (type_name == "depolarizing") {
        require_known_fields(j, {"type", "p"}, where);
        node.type = ChannelSpecNode::Type::Depolarizing;
        node.p = require_number(require_field(j, "p", where), where + ".p");
    } else if (type_name == "unitary") {
        require_known_fields(j, {"type", "matrix"}, where);
        node.type = ChannelSpecNode::Type::Unitary;
        ComplexMatrix m = parse_matrix(require_field(j, "matrix", where), where + ".matrix");
        if (m.rows() != dim || m.cols() != dim) {
            semantic_fail(where + ".matrix", "unitary matrix shape must be dim x dim");
        }
        node.operators.push_back(std::move(m));
    } else if (type_name == "compose") {
        require_known_fields(j, {"type", "first", "then"}, where);
        node.type = ChannelSpecNode::Type::Compose;
        node.first = std::make_unique<ChannelSpecNode>(
            parse_channel_node(require_field(j, "first", where), dim, where + ".first"));
        node.then = std::make_unique<ChannelSpecNode>(
            parse_channel_node(require_field(j, "then", where), dim, where + ".then"));
    } else if (type_name == "random") {
        require_known_fields(j, {"type", "kraus_rank", "seed"}, where);
        node.type = ChannelSpecNode::Type::Random;
        node.kraus_rank = require_uint(require_field(j, "kraus_rank", where), where + ".kraus_rank");
        node.seed = require_uint(require_field(j, "seed", where), where + ".seed");
        if (node.kraus_rank < 1 || node.kraus_rank > dim * dim) {
            semantic_fail(where + ".kraus_rank", "kraus_rank must lie in [1, dim^2]");
        }
    } else {
        parse_fail(where + ".type",
                   "unknown channel type \"" + type_name +
                       "\" (expected kraus | depolarizing | unitary | compose | random)");
    }
    return node;
}

QuantumChannel resolve_node(const ChannelSpecNode& node, std::size_t dim, const std::string& where) {
    try {
        switch (node.type) {
            case ChannelSpecNode::Type::Kraus:
                return QuantumChannel(dim, node.operators, kTextDocumentTol);
            case ChannelSpecNode::Type::Depolarizing:
                return depolarizing(dim, node.p);
            case ChannelSpecNode::Type::Unitary:
                return unitary_channel(node.operators.front(), kTextDocumentTol);
            case ChannelSpecNode::Type::Compose:
                return compose(resolve_node(*node.first, dim, where + ".first"),
                               resolve_node(*node.then, dim, where + ".then"));
            case ChannelSpecNode::Type::Random:
                return random_channel(dim, node.kraus_rank, node.seed);
        }
    } catch (const SpecValidationError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        semantic_fail(where, e.what());
    }
    semantic_fail(where, "unreachable channel type");
}

void serialize_matrix(const ComplexMatrix& m, std::string& out) {
    out += '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += '[';
            out += format_double(m(r, c).real());
            out += ',';
            out += format_double(m(r, c).imag());
            out += ']';
        }
        out += ']';
    }
    out += ']';
}

void serialize_node(const ChannelSpecNode& node, std::string& out) {
    out += "{\"type\":\"";
    out += node.type_name();
    out += '"';
    switch (node.type) {
        case ChannelSpecNode::Type::Kraus:
            out += ",\"operators\":[";
            for (std::size_t i = 0; i < node.operators.size(); ++i) {
                if (i) out += ',';
                serialize_matrix(node.operators[i], out);
            }
            out += ']';
            break;
        case ChannelSpecNode::Type::Depolarizing:
            out += ",\"p\":";
            out += format_double(node.p);
            break;
        case ChannelSpecNode::Type::Unitary:
            out += ",\"matrix\":";
            serialize_matrix(node.operators.front(), out);
            break;
        case ChannelSpecNode::Type::Compose:
            out += ",\"first\":";
            serialize_node(*node.first, out);
            out += ",\"then\":";
            serialize_node(*node.then, out);
            break;
        case ChannelSpecNode::Type::Random:
            out += ",\"kraus_rank\":";
            out += format_uint(node.kraus_rank);
            out += ",\"seed\":";
            out += format_uint(node.seed);
            break;
    }
    out += '}';
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const char ch : bytes) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

const char* ChannelSpecNode::type_name() const {
    switch (type) {
        case Type::Kraus: return "kraus";
        case Type::Depolarizing: return "depolarizing";
        case Type::Unitary: return "unitary";
        case Type::Compose: return "compose";
        case Type::Random: return "random";
    }
    return "unknown";
}

ChannelSpecDocument parse_channel_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SpecParseError(e.what());
    }
    if (!j.is_object()) parse_fail("document", "expected a JSON object");
    require_known_fields(j, {"dim", "channel"}, "document");

    const std::uint64_t dim = require_uint(require_field(j, "dim", "document"), "document.dim");
    if (dim < 2 || dim > 32) semantic_fail("document.dim", "dim must lie in [2, 32]");

    ChannelSpecDocument doc;
    doc.dim = static_cast<std::size_t>(dim);
    doc.channel = parse_channel_node(require_field(j, "channel", "document"), doc.dim, "document.channel");
    resolve_node(doc.channel, doc.dim, "document.channel");  // semantic validation
    return doc;
}

std::string serialize_channel_spec(const ChannelSpecDocument& doc) {
    std::string out = "{\"dim\":" + std::to_string(doc.dim) + ",\"channel\":";
    serialize_node(doc.channel, out);
    out += "}";
    return out;
}

QuantumChannel resolve_channel(const ChannelSpecDocument& doc) {
    return resolve_node(doc.channel, doc.dim, "document.channel");
}

GateSpecDocument parse_gate_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SpecParseError(e.what());
    }
    if (!j.is_object()) parse_fail("document", "expected a JSON object");
    require_known_fields(j, {"dim", "gate"}, "document");

    const std::uint64_t dim = require_uint(require_field(j, "dim", "document"), "document.dim");
    if (dim < 2 || dim > 32) semantic_fail("document.dim", "dim must lie in [2, 32]");

    GateSpecDocument doc;
    doc.dim = static_cast<std::size_t>(dim);
    const json& gate = require_field(j, "gate", "document");
    if (gate.is_string()) {
        doc.kind = gate.get<std::string>();
        if (doc.kind == "identity") {
            doc.matrix = ComplexMatrix::identity(doc.dim);
        } else if (doc.kind == "shift" || doc.kind == "clock") {
            const auto basis = shift_clock_basis(doc.dim);
            // shift = X = element (1,0) at index d; clock = Z = element (0,1) at index 1.
            doc.matrix = basis.elements()[doc.kind == "shift" ? doc.dim : 1];
        } else {
            parse_fail("document.gate", "unknown gate name \"" + doc.kind +
                                            "\" (expected identity | shift | clock or a matrix)");
        }
    } else {
        doc.kind = "matrix";
        doc.matrix = parse_matrix(gate, "document.gate");
        if (doc.matrix.rows() != doc.dim || doc.matrix.cols() != doc.dim) {
            semantic_fail("document.gate", "gate matrix shape must be dim x dim");
        }
        if (!validate_unitary(doc.matrix, kTextDocumentTol)) {
            semantic_fail("document.gate", "gate matrix is not unitary");
        }
    }
    return doc;
}

std::string serialize_gate_spec(const GateSpecDocument& doc) {
    std::string out = "{\"dim\":" + std::to_string(doc.dim) + ",\"gate\":";
    if (doc.kind == "matrix") {
        serialize_matrix(doc.matrix, out);
    } else {
        out += '"' + doc.kind + '"';
    }
    out += "}";
    return out;
}

std::string channel_content_hash(const QuantumChannel& ch) {
    std::string bytes = "channel;dim=" + std::to_string(ch.dim()) +
                        ";kraus=" + std::to_string(ch.kraus_ops().size()) + ";";
    for (const auto& k : ch.kraus_ops()) serialize_matrix(k, bytes);
    return hex64(fnv1a64(bytes));
}

std::string gate_content_hash(const ComplexMatrix& gate) {
    std::string bytes = "gate;dim=" + std::to_string(gate.rows()) + ";";
    serialize_matrix(gate, bytes);
    return hex64(fnv1a64(bytes));
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

}  // namespace avgfid

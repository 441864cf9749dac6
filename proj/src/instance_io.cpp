#include "rbc/instance_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace rbc {

namespace {

using nlohmann::json;

std::string carrier_list(const std::vector<BandProjection>& ps) {
    std::string out = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i != 0) out += ", ";
        out += "[";
        const auto idx = ps[i].indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (j != 0) out += ", ";
            out += std::to_string(idx[j]);
        }
        out += "]";
    }
    return out + "]";
}

// 1-based line of the first occurrence of "key", or 0.
std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    if (pos == std::string_view::npos) return 0;
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

[[noreturn]] void field_error(std::string_view text, std::string_view field, const std::string& what) {
    std::ostringstream os;
    const std::size_t line = line_of_key(text, field);
    if (line != 0) os << "line " << line << ", ";
    os << "field " << field << ": " << what;
    throw InputError(os.str());
}

std::size_t read_index(const json& v, std::string_view text, std::string_view field) {
    if (!v.is_number_unsigned()) {
        if (v.is_number_integer()) field_error(text, field, "negative index " + v.dump());
        field_error(text, field, "expected a nonnegative integer, got " + v.dump());
    }
    return v.get<std::size_t>();
}

std::vector<std::vector<std::size_t>> read_index_lists(const json& v, std::string_view text, std::string_view field) {
    if (!v.is_array()) field_error(text, field, "expected an array of index arrays");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& inner : v) {
        if (!inner.is_array()) field_error(text, field, "expected an index array, got " + inner.dump());
        std::vector<std::size_t> idx;
        for (const auto& x : inner) idx.push_back(read_index(x, text, field));
        out.push_back(std::move(idx));
    }
    return out;
}

std::vector<BandProjection> read_carriers(const json& v, std::size_t dim, std::string_view text, std::string_view field) {
    std::vector<BandProjection> out;
    for (const auto& idx : read_index_lists(v, text, field)) {
        try {
            out.push_back(BandProjection::from_indices(dim, idx));
        } catch (const InputError& e) {
            field_error(text, field, e.what());
        }
    }
    return out;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"dim\": " << inst.dim() << ",\n";
    os << "  \"weights\": [";
    for (std::size_t i = 0; i < inst.t.weights().size(); ++i) {
        const Rational& w = inst.t.weights()[i];
        os << (i != 0 ? ", " : "") << '"' << w.get_num().get_str() << '/' << w.get_den().get_str() << '"';
    }
    os << "],\n";
    os << "  \"partition\": [";
    const auto& blocks = inst.t.partition();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        os << (b != 0 ? ", " : "") << "[";
        for (std::size_t j = 0; j < blocks[b].size(); ++j) os << (j != 0 ? ", " : "") << blocks[b][j];
        os << "]";
    }
    os << "],\n";
    os << "  \"prefix\": " << carrier_list(inst.seq.prefix()) << ",\n";
    os << "  \"cycle\": " << carrier_list(inst.seq.cycle()) << ",\n";
    os << "  \"m\": " << inst.m << "\n";
    os << "}\n";
    return os.str();
}

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed instance text: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("line 1: instance must be an object");
    }
    static constexpr std::string_view kFields[] = {"dim", "weights", "partition", "prefix", "cycle", "m"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(std::begin(kFields), std::end(kFields), key) == std::end(kFields)) {
            field_error(text, key, "unknown field");
        }
    }
    for (std::string_view f : kFields) {
        if (!doc.contains(std::string(f))) {
            throw InputError("missing field " + std::string(f));
        }
    }

    const json& dim_v = doc["dim"];
    if (!dim_v.is_number_unsigned()) field_error(text, "dim", "expected a positive integer");
    const auto dim = dim_v.get<std::size_t>();
    try {
        require_dim(dim);
    } catch (const InputError& e) {
        field_error(text, "dim", e.what());
    }

    const json& weights_v = doc["weights"];
    if (!weights_v.is_array()) field_error(text, "weights", "expected an array of \"p/q\" strings");
    std::vector<Rational> weights;
    for (const auto& w : weights_v) {
        if (!w.is_string()) field_error(text, "weights", "expected a \"p/q\" string, got " + w.dump());
        try {
            weights.push_back(parse_rational(w.get<std::string>()));
        } catch (const InputError& e) {
            field_error(text, "weights", e.what());
        }
    }
    try {
        validate_weights(dim, weights);
    } catch (const InputError& e) {
        field_error(text, "weights", e.what());
    }

    auto partition = read_index_lists(doc["partition"], text, "partition");
    try {
        validate_partition(dim, partition);
    } catch (const InputError& e) {
        field_error(text, "partition", e.what());
    }

    auto prefix = read_carriers(doc["prefix"], dim, text, "prefix");
    auto cycle = read_carriers(doc["cycle"], dim, text, "cycle");
    if (cycle.empty()) field_error(text, "cycle", "cycle must be nonempty");

    const json& m_v = doc["m"];
    if (!m_v.is_number_unsigned() || m_v.get<std::size_t>() == 0) field_error(text, "m", "expected an integer >= 1");

    return Instance(CondExpOp(dim, std::move(partition), std::move(weights)),
                    ProjSequence(std::move(prefix), std::move(cycle)), m_v.get<std::size_t>());
}

}  // namespace rbc

#include "coev/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "coev/version.hpp"

namespace coev {

namespace {

using json = nlohmann::ordered_json;

json must_get(const json& object, const char* key, const char* context) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ParseError(std::string(context) + ": missing \"" + key + "\"");
    }
    return *it;
}

std::string string_field(const json& value, const char* context) {
    if (!value.is_string()) {
        throw ParseError(std::string(context) + ": expected a string");
    }
    return value.get<std::string>();
}

Rational rational_field(const json& value, const char* context) {
    // Exact values only. A JSON number here would open a float channel, so
    // even integers must arrive as strings.
    return parse_rational(string_field(value, context));
}

ComplexRational complex_field(const json& value, const char* context) {
    if (!value.is_object()) {
        throw ParseError(std::string(context) + ": expected {\"re\": ..., \"im\": ...}");
    }
    return {rational_field(must_get(value, "re", context), context),
            rational_field(must_get(value, "im", context), context)};
}

}  // namespace

SystemDescription parse_system_description(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("system description must be a JSON object");

    SystemDescription desc;
    desc.name = string_field(must_get(doc, "name", "system description"), "name");

    const json histories = must_get(doc, "histories", "system description");
    if (!histories.is_array() || histories.empty()) {
        throw ParseError("\"histories\" must be a non-empty array of labels");
    }
    for (const auto& h : histories) desc.histories.push_back(string_field(h, "history label"));

    if (auto it = doc.find("normalize"); it != doc.end()) {
        if (!it->is_boolean()) throw ParseError("\"normalize\" must be a boolean");
        desc.normalize = it->get<bool>();
    }

    const json measure = must_get(doc, "measure", "system description");
    if (!measure.is_object()) throw ParseError("\"measure\" must be an object");
    const std::string type = string_field(must_get(measure, "type", "measure"), "measure type");

    if (type == "classical") {
        desc.kind = SystemDescription::MeasureKind::Classical;
        const json weights = must_get(measure, "weights", "classical measure");
        if (!weights.is_array()) throw ParseError("\"weights\" must be an array");
        for (const auto& w : weights) desc.weights.push_back(rational_field(w, "weight"));
    } else if (type == "quantum-amplitude") {
        desc.kind = SystemDescription::MeasureKind::QuantumAmplitude;
        const json amplitudes = must_get(measure, "amplitudes", "quantum measure");
        if (!amplitudes.is_array()) throw ParseError("\"amplitudes\" must be an array");
        for (const auto& a : amplitudes) desc.amplitudes.push_back(complex_field(a, "amplitude"));
    } else if (type == "quantum-decoherence") {
        desc.kind = SystemDescription::MeasureKind::QuantumDecoherence;
        const json matrix = must_get(measure, "decoherence", "quantum measure");
        if (!matrix.is_array()) throw ParseError("\"decoherence\" must be an array of rows");
        for (const auto& row : matrix) {
            if (!row.is_array()) throw ParseError("\"decoherence\" rows must be arrays");
            std::vector<ComplexRational> entries;
            for (const auto& e : row) entries.push_back(complex_field(e, "decoherence entry"));
            desc.decoherence.push_back(std::move(entries));
        }
    } else {
        throw ParseError("unknown measure type \"" + type +
                         "\" (expected classical, quantum-amplitude or quantum-decoherence)");
    }
    return desc;
}

SpacePtr build_space(const SystemDescription& desc) {
    try {
        return HistorySpace::make(desc.histories);
    } catch (const CapacityError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Measure build_measure(const SystemDescription& desc) {
    const SpacePtr space = build_space(desc);
    try {
        switch (desc.kind) {
            case SystemDescription::MeasureKind::Classical:
                return Measure(ClassicalMeasure(space, desc.weights, desc.normalize));
            case SystemDescription::MeasureKind::QuantumAmplitude:
                return Measure(
                    QuantumMeasure::from_amplitudes(space, desc.amplitudes, desc.normalize));
            case SystemDescription::MeasureKind::QuantumDecoherence:
                return Measure(
                    QuantumMeasure::from_decoherence(space, desc.decoherence, desc.normalize));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unreachable measure kind");
}

CoEventDocument parse_coevent_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("co-event document must be a JSON object");

    CoEventDocument out;
    if (auto it = doc.find("support"); it != doc.end()) {
        if (!it->is_array() || it->empty()) {
            throw ParseError("\"support\" must be a non-empty array of history labels");
        }
        std::vector<std::string> labels;
        for (const auto& l : *it) labels.push_back(string_field(l, "support label"));
        out.support = std::move(labels);
    }
    if (auto it = doc.find("table"); it != doc.end()) {
        out.table = string_field(*it, "table");
    }
    if (out.support.has_value() == out.table.has_value()) {
        throw ParseError("co-event document needs exactly one of \"support\" or \"table\"");
    }
    return out;
}

CoEvent build_coevent(const CoEventDocument& doc, const SpacePtr& space) {
    try {
        if (doc.support) {
            return from_support(event_from_labels(space, *doc.support));
        }
        return CoEvent::from_table_string(space, *doc.table);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::string document_hash(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    return "fnv1a64:" + hex;
}

namespace {

json event_labels(const Event& e) {
    json out = json::array();
    for (const auto& label : e.member_labels()) out.push_back(label);
    return out;
}

json event_list(const std::vector<Event>& events) {
    json out = json::array();
    for (const Event& e : events) out.push_back(event_labels(e));
    return out;
}

json document_header(const std::string& name, const std::string& hash) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["schema_version"] = kSchemaVersion;
    doc["system"] = json{{"name", name}, {"hash", hash}};
    return doc;
}

json solution_body(const SchemeSolution& solution, const SpacePtr& space) {
    json out;
    out["null_events"] = event_list(solution.null_events);
    out["maximal_null_events"] = event_list(solution.maximal_null_events);
    out["minimal_supports"] = event_list(solution.minimal_supports);
    json histories = json::array();
    for (std::size_t h : solution.preclusive_homomorphism_histories) {
        histories.push_back(space->label(h));
    }
    out["preclusive_homomorphism_histories"] = std::move(histories);
    out["classical_world_exists"] = solution.classical_world_exists;
    return out;
}

json equivalence_body(const EquivalenceReport& report) {
    json out;
    out["consistent"] = report.consistent;
    json items = json::array();
    for (const auto& item : report.items) {
        json row;
        row["id"] = item.id;
        row["description"] = item.description;
        row["exists"] = item.exists;
        row["count"] = item.count;
        json witnesses = json::array();
        for (const auto& h : item.history_witnesses) witnesses.push_back(h);
        for (const auto& e : item.event_witnesses) witnesses.push_back(event_labels(e));
        row["witnesses"] = std::move(witnesses);
        items.push_back(std::move(row));
    }
    out["items"] = std::move(items);
    json notes = json::array();
    for (const auto& note : report.notes) notes.push_back(note);
    out["notes"] = std::move(notes);
    return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string validation_json(const std::string& name, const std::string& hash,
                            const ValidationReport& report) {
    json doc = document_header(name, hash);
    doc["valid"] = report.valid();
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(json{{"rule", c.rule}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["checks"] = std::move(checks);
    return dump(doc);
}

std::string nulls_json(const std::string& name, const std::string& hash,
                       const SchemeSolution& solution) {
    json doc = document_header(name, hash);
    doc["null_events"] = event_list(solution.null_events);
    doc["maximal_null_events"] = event_list(solution.maximal_null_events);
    return dump(doc);
}

std::string solve_json(const std::string& name, const std::string& hash,
                       const SchemeSolution& solution, const EquivalenceReport& equivalence) {
    json doc = document_header(name, hash);
    doc.update(solution_body(solution, solution.space));
    doc["equivalence"] = equivalence_body(equivalence);
    return dump(doc);
}

std::string check_json(const std::string& name, const std::string& hash, const CoEvent& phi,
                       const std::vector<std::pair<std::string, bool>>& properties) {
    json doc = document_header(name, hash);
    doc["coevent"] = json{{"table", phi.table_string()}};
    json props = json::object();
    for (const auto& [key, value] : properties) props[key] = value;
    doc["properties"] = std::move(props);
    return dump(doc);
}

std::string verify_json(unsigned max_n, const std::vector<TheoremReport>& reports) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["schema_version"] = kSchemaVersion;
    doc["max_n"] = max_n;
    std::uint64_t total_violations = 0;
    json rows = json::array();
    for (const auto& report : reports) {
        json row;
        row["id"] = report.id;
        row["n"] = report.n;
        row["coevents_examined"] = report.coevents_examined;
        json counts = json::object();
        for (const auto& [key, value] : report.counts) counts[key] = value;
        row["counts"] = std::move(counts);
        json violations = json::array();
        for (const auto& v : report.violations) {
            violations.push_back(json{{"table", v.table}, {"clause", v.clause}});
        }
        row["violations"] = std::move(violations);
        rows.push_back(std::move(row));
        total_violations += report.violations.size();
    }
    doc["reports"] = std::move(rows);
    doc["total_violations"] = total_violations;
    return dump(doc);
}

}  // namespace coev

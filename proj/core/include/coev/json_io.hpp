#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coev/measure.hpp"
#include "coev/scheme.hpp"
#include "coev/verify.hpp"

namespace coev {

/// Parsed form of a system-description document: the histories plus one of
/// the three measure encodings. Numbers travel as exact rational strings
/// ("1/3"), complex entries as {"re": "p/q", "im": "p/q"}; nothing in the
/// format admits a float.
struct SystemDescription {
    enum class MeasureKind { Classical, QuantumAmplitude, QuantumDecoherence };

    std::string name;
    std::vector<std::string> histories;
    MeasureKind kind = MeasureKind::Classical;
    std::vector<Rational> weights;                          // classical
    std::vector<ComplexRational> amplitudes;                // quantum-amplitude
    std::vector<std::vector<ComplexRational>> decoherence;  // quantum-decoherence
    bool normalize = false;
};

SystemDescription parse_system_description(const std::string& json_text);

SpacePtr build_space(const SystemDescription& desc);
Measure build_measure(const SystemDescription& desc);

/// A co-event input: either a support (list of history labels) or a full
/// truth table string, never both.
struct CoEventDocument {
    std::optional<std::vector<std::string>> support;
    std::optional<std::string> table;
};

CoEventDocument parse_coevent_document(const std::string& json_text);
CoEvent build_coevent(const CoEventDocument& doc, const SpacePtr& space);

/// Reads a whole file; missing or unreadable files are ParseErrors.
std::string read_file(const std::filesystem::path& path);

/// FNV-1a over the raw document bytes, as "fnv1a64:<16 hex digits>". Echoed
/// into result documents so outputs can be matched to their inputs.
std::string document_hash(const std::string& bytes);

// Serializers. All emit key order and formatting deterministically: the
// same inputs give byte-identical strings.
std::string validation_json(const std::string& name, const std::string& hash,
                            const ValidationReport& report);
std::string nulls_json(const std::string& name, const std::string& hash,
                       const SchemeSolution& solution);
std::string solve_json(const std::string& name, const std::string& hash,
                       const SchemeSolution& solution, const EquivalenceReport& equivalence);
std::string check_json(const std::string& name, const std::string& hash, const CoEvent& phi,
                       const std::vector<std::pair<std::string, bool>>& properties);
std::string verify_json(unsigned max_n, const std::vector<TheoremReport>& reports);

}  // namespace coev

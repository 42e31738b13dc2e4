#include "coev/commands.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "coev/version.hpp"

namespace coev {

namespace {

struct LoadedSystem {
    SystemDescription description;
    std::string hash;
    SpacePtr space;
    Measure measure;
};

LoadedSystem load_system(const std::filesystem::path& path) {
    const std::string bytes = read_file(path);
    SystemDescription desc = parse_system_description(bytes);
    Measure measure = build_measure(desc);
    SpacePtr space = measure.space();
    return {std::move(desc), document_hash(bytes), std::move(space), std::move(measure)};
}

template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        err << "error: " << e.what();
        if (e.offset() != ParseError::npos) err << " (byte " << e.offset() << ")";
        err << "\n";
        return kExitInputError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

std::string labels_line(const Event& e) {
    std::string out = "{";
    bool first = true;
    for (const auto& label : e.member_labels()) {
        if (!first) out += ",";
        out += label;
        first = false;
    }
    return out + "}";
}

void print_event_section(std::ostream& out, const std::string& title,
                         const std::vector<Event>& events) {
    out << title << " (" << events.size() << "):";
    for (const Event& e : events) out << " " << labels_line(e);
    out << "\n";
}

void print_validation_table(std::ostream& out, const LoadedSystem& system,
                            const ValidationReport& report) {
    out << "system: " << system.description.name << " [" << system.hash << "]\n";
    for (const auto& c : report.checks) {
        out << "  " << std::left << std::setw(22) << c.rule << (c.passed ? "ok" : "FAIL");
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
    }
    out << (report.valid() ? "valid" : "invalid") << "\n";
}

void print_solution_table(std::ostream& out, const LoadedSystem& system,
                          const SchemeSolution& solution, const EquivalenceReport* equivalence) {
    out << "system: " << system.description.name << " [" << system.hash << "]\n";
    print_event_section(out, "null events", solution.null_events);
    print_event_section(out, "maximal null events", solution.maximal_null_events);
    if (equivalence == nullptr) return;

    print_event_section(out, "minimal supports", solution.minimal_supports);
    out << "preclusive homomorphism histories:";
    for (std::size_t h : solution.preclusive_homomorphism_histories) {
        out << " " << system.space->label(h);
    }
    out << "\nclassical world exists: " << (solution.classical_world_exists ? "yes" : "no")
        << "\n";
    out << "equivalence (" << (equivalence->consistent ? "consistent" : "INCONSISTENT") << "):\n";
    for (const auto& item : equivalence->items) {
        out << "  (" << item.id << ") " << std::left << std::setw(62) << item.description
            << " count=" << item.count << "\n";
    }
    for (const auto& note : equivalence->notes) out << "  note: " << note << "\n";
}

int validation_gate(const LoadedSystem& system, std::ostream& err) {
    const ValidationReport report = validate(system.measure);
    if (report.valid()) return kExitOk;
    const ValidationCheck* failure = report.first_failure();
    err << "error: measure is invalid";
    if (failure != nullptr) {
        err << " (" << failure->rule;
        if (!failure->detail.empty()) err << ": " << failure->detail;
        err << ")";
    }
    err << "\n";
    return kExitInvalid;
}

}  // namespace

int cmd_validate(const std::filesystem::path& system_path, const CommandOptions& options,
                 std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const LoadedSystem system = load_system(system_path);
        const ValidationReport report = validate(system.measure);
        if (options.format == CommandOptions::Format::Json) {
            out << validation_json(system.description.name, system.hash, report);
        } else {
            print_validation_table(out, system, report);
        }
        return report.valid() ? kExitOk : kExitInvalid;
    });
}

int cmd_nulls(const std::filesystem::path& system_path, const CommandOptions& options,
              std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const LoadedSystem system = load_system(system_path);
        if (int gate = validation_gate(system, err); gate != kExitOk) return gate;

        SchemeSolution solution;
        solution.space = system.space;
        solution.null_events = null_events(system.measure, options.threads);
        solution.maximal_null_events = maximal_null_events(system.space, solution.null_events);

        if (options.format == CommandOptions::Format::Json) {
            out << nulls_json(system.description.name, system.hash, solution);
        } else {
            print_solution_table(out, system, solution, nullptr);
        }
        return kExitOk;
    });
}

int cmd_solve(const std::filesystem::path& system_path, const CommandOptions& options,
              std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const LoadedSystem system = load_system(system_path);
        if (int gate = validation_gate(system, err); gate != kExitOk) return gate;

        const SchemeSolution solution = solve(system.measure, options.threads);
        const EquivalenceReport equivalence = equivalence_report(system.measure, solution);

        if (options.format == CommandOptions::Format::Json) {
            out << solve_json(system.description.name, system.hash, solution, equivalence);
        } else {
            print_solution_table(out, system, solution, &equivalence);
        }
        return solution.minimal_supports.empty() ? kExitInvalid : kExitOk;
    });
}

int cmd_check(const std::filesystem::path& system_path, const std::filesystem::path& coevent_path,
              const CommandOptions& options, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const LoadedSystem system = load_system(system_path);
        const CoEventDocument doc = parse_coevent_document(read_file(coevent_path));
        const CoEvent phi = build_coevent(doc, system.space);

        const std::vector<std::pair<std::string, bool>> properties{
            {"zero-preserving", is_zero_preserving(phi)},
            {"unital", is_unital(phi)},
            {"multiplicative", is_multiplicative(phi)},
            {"additive", is_additive(phi)},
            {"mp", is_mp(phi)},
            {"c1", is_c1(phi)},
            {"c2", is_c2(phi)},
            {"homomorphism", is_homomorphism(phi)},
            {"filter", affirmed_is_filter(phi)},
            {"preclusive", is_preclusive(phi, system.measure)},
        };

        if (options.format == CommandOptions::Format::Json) {
            out << check_json(system.description.name, system.hash, phi, properties);
        } else {
            out << "system: " << system.description.name << " [" << system.hash << "]\n";
            out << "coevent table: " << phi.table_string() << "\n";
            for (const auto& [name, value] : properties) {
                out << "  " << std::left << std::setw(16) << name << (value ? "true" : "false")
                    << "\n";
            }
        }
        return kExitOk;
    });
}

int cmd_verify(unsigned max_n, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
    return run_guarded(err, [&] {
        const std::vector<TheoremReport> reports = verify_all(max_n, options.threads);

        std::uint64_t total_violations = 0;
        for (const auto& r : reports) total_violations += r.violations.size();

        if (options.format == CommandOptions::Format::Json) {
            out << verify_json(max_n, reports);
        } else {
            for (const auto& r : reports) {
                std::ostringstream line;
                line << std::left << std::setw(30) << r.id << " n=" << r.n << "  examined="
                     << std::setw(6) << r.coevents_examined
                     << (r.passed() ? " ok" : " VIOLATIONS") << "  ("
                     << std::fixed << std::setprecision(1) << r.elapsed.count() * 1e3 << " ms)";
                for (const auto& [key, value] : r.counts) {
                    line << "  " << key << "=" << value;
                }
                out << line.str() << "\n";
                for (const auto& v : r.violations) {
                    out << "    table " << v.table << ": " << v.clause << "\n";
                }
            }
            out << "total violations: " << total_violations << "\n";
        }
        return total_violations == 0 ? kExitOk : kExitInvalid;
    });
}

}  // namespace coev

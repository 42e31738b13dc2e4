#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "coev/commands.hpp"
#include "coev/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Event algebras, co-events and measures over finite history spaces"};
    app.set_version_flag("--version", std::string(coev::kToolVersion));
    app.require_subcommand(1);

    std::string format = "table";
    coev::CommandOptions options;
    app.add_option("--format", format, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--threads", options.threads,
                   "Worker threads for enumeration-heavy commands (0 = all available)")
        ->capture_default_str();

    std::string system_path, coevent_path;
    unsigned max_n = 4;

    // Global flags may come before or after the subcommand.
    CLI::App* validate =
        app.add_subcommand("validate", "Check a system description against the measure rules");
    validate->fallthrough();
    validate->add_option("file", system_path, "system description (JSON)")->required();

    CLI::App* nulls =
        app.add_subcommand("nulls", "List the null and maximal null events of a system");
    nulls->fallthrough();
    nulls->add_option("file", system_path, "system description (JSON)")->required();

    CLI::App* solve = app.add_subcommand(
        "solve", "Compute the minimal preclusive multiplicative co-events of a system");
    solve->fallthrough();
    solve->add_option("file", system_path, "system description (JSON)")->required();

    CLI::App* check =
        app.add_subcommand("check", "Evaluate every co-event property against a system");
    check->fallthrough();
    check->add_option("system", system_path, "system description (JSON)")->required();
    check->add_option("coevent", coevent_path, "co-event document (JSON)")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "Exhaustively check the co-event laws on small spaces");
    verify->fallthrough();
    verify->add_option("--max-n", max_n, "Largest space size to sweep (1..4)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // Help and version exit cleanly; anything else is a usage error.
        return code == 0 ? coev::kExitOk : coev::kExitInputError;
    }

    options.format = format == "json" ? coev::CommandOptions::Format::Json
                                      : coev::CommandOptions::Format::Table;

    if (validate->parsed()) {
        return coev::cmd_validate(system_path, options, std::cout, std::cerr);
    }
    if (nulls->parsed()) {
        return coev::cmd_nulls(system_path, options, std::cout, std::cerr);
    }
    if (solve->parsed()) {
        return coev::cmd_solve(system_path, options, std::cout, std::cerr);
    }
    if (check->parsed()) {
        return coev::cmd_check(system_path, coevent_path, options, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return coev::cmd_verify(max_n, options, std::cout, std::cerr);
    }
    return coev::kExitInputError;
}

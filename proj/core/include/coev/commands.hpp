#pragma once

#include <filesystem>
#include <iosfwd>

#include "coev/json_io.hpp"

namespace coev {

/// Shared flags for every subcommand. The table format is for people and
/// carries no stability promise; the json format is schema-stable and
/// byte-deterministic for a fixed input and tool version.
struct CommandOptions {
    enum class Format { Table, Json };
    Format format = Format::Table;
    unsigned threads = 0;  // 0 = all available
};

// Exit codes, used uniformly: 0 success, 1 the input is semantically
// invalid (or a law failed), 2 unreadable/malformed input or usage error,
// 3 over a capacity cap.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacity = 3;

int cmd_validate(const std::filesystem::path& system_path, const CommandOptions& options,
                 std::ostream& out, std::ostream& err);

int cmd_nulls(const std::filesystem::path& system_path, const CommandOptions& options,
              std::ostream& out, std::ostream& err);

int cmd_solve(const std::filesystem::path& system_path, const CommandOptions& options,
              std::ostream& out, std::ostream& err);

int cmd_check(const std::filesystem::path& system_path, const std::filesystem::path& coevent_path,
              const CommandOptions& options, std::ostream& out, std::ostream& err);

int cmd_verify(unsigned max_n, const CommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace coev

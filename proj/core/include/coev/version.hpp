#pragma once

namespace coev {

inline constexpr const char* kToolName = "coev";
inline constexpr const char* kToolVersion = "0.1.0";

/// Bumped when the JSON document layout changes incompatibly.
inline constexpr int kSchemaVersion = 1;

}  // namespace coev

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace nfrob {

// One implementation of every CLI command, shared by the C API and (through
// it) the command-line tool. Reports are JSON objects with sorted keys; the
// only nondeterministic field is timing_ms.

struct CommandOptions {
  unsigned trials = 32;
  std::uint64_t seed = 0xF506;
  std::uint64_t height = std::uint64_t{1} << 16;
  bool deterministic = false;
  std::optional<std::string> epsilon;    // comma-separated coefficients
  std::string which = "twist";           // ybe: mult | twist
  bool all_generators = false;
  std::optional<std::size_t> generator;  // index into the central basis
  bool check_central = false;            // central-basis round-trip check
};

CommandOptions options_from_json(const std::string& flags_json);
nlohmann::json options_to_json(const CommandOptions& opts);

// Known commands: validate, central-basis, frobdim, frobenius-check,
// frobenius-data, theorem-a, ybe, ar. Throws Error for input problems;
// mathematical failures come back as verdicts with pass=false and
// all_pass=false.
nlohmann::json run_command(const std::string& command,
                           const std::string& spec_text,
                           const CommandOptions& opts);

// Deterministic error report emitted when a command cannot run.
nlohmann::json error_report(const std::string& command,
                            const std::string& code,
                            const std::string& message);

}  // namespace nfrob

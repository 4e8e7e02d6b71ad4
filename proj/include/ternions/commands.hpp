#pragma once

// Command implementations behind the `ternions` CLI. Each command returns
// its complete output and exit code, so identical configurations produce
// byte-identical results.

#include <cstdint>
#include <string>
#include <string_view>

#include "ternions/exactfield.hpp"

namespace ternions {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // verification failure or rank error
inline constexpr int kUsage = 2;
}  // namespace exit_code

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(std::string_view name);

struct RunConfig {
  FieldSpec field = FieldSpec::prime(2);
  OutputFormat format = OutputFormat::Json;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  /// Finite scans beyond this many candidates are refused.
  std::uint64_t max_candidates = 10'000'000;
};

struct CommandResult {
  int exit_code = exit_code::kOk;
  std::string out;
  std::string err;
};

/// object: variety | x-image | y-image | segre | cubic | tube | dual-surface
///         | planes | submodules
CommandResult cmd_enumerate(const RunConfig& config, std::string_view object);

/// suite: theorem | lemma1 | smooth | unimodular | invertibility | roundtrip
///        | substructures | counts | all
CommandResult cmd_verify(const RunConfig& config, std::string_view suite);

/// pair_json: {"A": {"a11": .., "a12": .., "a22": ..}, "B": {...}}
CommandResult cmd_classify(const RunConfig& config, std::string_view pair_json);

/// matrix_json: 3x6 array of scalars (rows of a basis of a subspace of F^6).
CommandResult cmd_plucker(const RunConfig& config, std::string_view matrix_json);

}  // namespace ternions

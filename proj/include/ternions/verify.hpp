#pragma once

// Verification suites: each suite enumerates (or, over Q, samples) a family
// of objects and checks one group of claims about the variety, recording
// counts and the first counterexample of every failed check.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ternions/variety.hpp"

namespace ternions {

enum class Suite {
  Theorem,
  Lemma1,
  Smooth,
  Unimodular,
  Invertibility,
  Roundtrip,
  Substructures,
  Counts,
};

inline constexpr std::array<Suite, 8> kAllSuites = {
    Suite::Theorem,  Suite::Lemma1,    Suite::Smooth,        Suite::Unimodular,
    Suite::Invertibility, Suite::Roundtrip, Suite::Substructures, Suite::Counts};

const char* to_string(Suite s) noexcept;
/// Throws ParseError for unknown names.
Suite parse_suite(std::string_view name);

struct Check {
  std::string name;
  std::string claim;
  bool passed = true;
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json counterexample;  // null unless failed
};

struct Report {
  Suite suite;
  FieldSpec field;
  std::vector<Check> checks;

  bool passed() const noexcept;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::size_t rational_samples = 100;
  /// Sample size for checks that are only exhaustive over F_2.
  std::size_t sample_size = 2000;
  /// Quadrics used as the defining equations; nullptr means the standard
  /// nine.
  const QuadricSystem* system = nullptr;
};

/// Number of objects the suite enumerates over `field`; used by the budget
/// guard. Suites that only sample over Q report the sample size.
std::uint64_t suite_candidates(Suite suite, const FieldSpec& field, const VerifyOptions& options);

/// Throws UnsupportedEnumeration when an exhaustive suite is asked for the
/// rational field (only Smooth samples over Q).
Report run_suite(Suite suite, const FieldSpec& field, const VerifyOptions& options = {});

/// Closed forms confirmed by exhaustive enumeration for q in {2, 3, 5}.
std::uint64_t expected_variety_size(std::uint64_t q);
std::uint64_t expected_x_count(std::uint64_t q);
std::uint64_t expected_y_count(std::uint64_t q);

}  // namespace ternions

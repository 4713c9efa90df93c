#pragma once

// Relation and structure checks over G_n, Aut(G_n) and the translation
// monoid. Every suite is deterministic for a fixed (n, seed).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chw {

struct CheckResult {
  std::string name;      // relation family
  std::string instance;  // family plus index tuple, unique within a report
  bool pass = false;
  std::optional<std::string> detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

inline constexpr std::size_t kMinVerifyRank = 3;
inline constexpr std::size_t kMaxVerifyRank = 8;

SuiteReport suite_autw(std::size_t n, std::uint64_t seed = 0);
SuiteReport suite_monoid(std::size_t n, std::uint64_t seed = 0);
SuiteReport suite_autg(std::size_t n, std::uint64_t seed = 0);
SuiteReport suite_outg(std::size_t n, std::uint64_t seed = 0);
SuiteReport suite_structure(std::size_t n, std::uint64_t seed = 0);

/// Names accepted by run_suite, in run_all order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, std::size_t n, std::uint64_t seed);

/// All suites. Requires kMinVerifyRank <= n <= kMaxVerifyRank.
std::vector<SuiteReport> run_all(std::size_t n, std::uint64_t seed);

nlohmann::ordered_json to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

}  // namespace chw

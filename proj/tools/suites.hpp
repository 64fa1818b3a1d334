#pragma once

// Verification suites behind the cdv command line driver.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdv/hyperell.hpp"
#include "cdv/scalar.hpp"

namespace cdv::cli {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckReport {
  std::string name;
  Status status = Status::Skipped;
  /// Ordered key/value witnesses; a failing check carries "counterexample".
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::pair<std::string, std::string>> convention;
  double wall_ms = 0;

  void add(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckReport> checks;
  double wall_ms = 0;
  bool passed() const;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::optional<hyperell::HyperCurve> curve;
  std::vector<Rational> branch{0, 1, 2, 3, 4, 5};
  std::vector<int> m{1, 3, 5};
  std::vector<int> g{1, 2, 3, 4, 5, 6};
  std::size_t triples = 20;
  /// Multiplies the dx1 component of the instanton connection.
  std::optional<Rational> scale_a1;
};

const std::vector<std::string>& suite_names();
/// "all" expands to every suite; throws UsageError for unknown names.
std::vector<std::string> expand_suite(const std::string& name);

/// Line 1 genus, line 2 ascending rational coefficients of f.
/// Throws UsageError on malformed input.
hyperell::HyperCurve parse_curve(const std::string& text);
std::vector<Rational> parse_rational_csv(const std::string& csv);
std::vector<int> parse_int_csv(const std::string& csv);

SuiteReport run_suite(const std::string& name, const Options& opt);
/// Suites run concurrently; the result is ordered by suite name.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const Options& opt);

bool all_passed(const std::vector<SuiteReport>& reports);
/// Schema 1 JSON. Wall times appear only when `timings` is set.
std::string to_json(const std::vector<SuiteReport>& reports, const Options& opt, bool timings);

}  // namespace cdv::cli

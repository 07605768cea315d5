#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wilson/prime_factor.hpp"
#include "wilson/residue_ring.hpp"

namespace wilson::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;
  std::string poly = "x^2+1";
  std::uint64_t prime = 2;
  std::optional<std::string> ideal;
  std::optional<std::string> gen;
  std::uint64_t max_norm = 1000;
  std::uint64_t max_A = 2000;
  std::uint64_t cap = kDefaultEnumerationCap;
  int t = 2;
  int n_max = 6;
  bool dump = false;
  OutputFormat output = OutputFormat::Text;
};

/// Exit codes: 0 success, 1 oracle mismatch, 2 error.
struct CommandResult {
  nlohmann::json json;
  std::string text;
  int exit_code = 0;
};

/// Reads WILSON_CAP when set, otherwise the library default.
std::uint64_t default_cap();

CommandResult cmd_factor(const RunConfig& cfg);
CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_gauss(const RunConfig& cfg);
CommandResult cmd_cyclo_demo(const RunConfig& cfg);

/// Dispatches on cfg.command and converts library errors into exit code 2
/// with an {"error": ...} document.
CommandResult run(const RunConfig& cfg);

struct IdealEnumeration {
  std::vector<FactoredIdeal> ideals;
  std::vector<std::uint64_t> skipped_primes;  // order not maximal there
};

/// Every ideal other than o whose prime divisors lie above rational primes
/// <= prime_bound, with every exponent <= max_exponent and norm <= max_norm.
/// Deterministic order.
IdealEnumeration enumerate_ideals(const NumberFieldOrder& o, std::uint64_t prime_bound,
                                  std::uint64_t max_norm, int max_exponent = 64);

/// 2-power cyclotomic polynomial x^(2^(t-1)) + 1.
IntPoly cyclotomic_2power(int t);

}  // namespace wilson::cli

#pragma once

// Command implementations behind the jumat executable. Each command takes
// parsed documents and returns its output text and exit code instead of
// touching the process streams, so tests can drive it directly.
//
// Exit codes: 0 success or member, 1 semantic negative (not a member,
// validation failure), 2 parse or usage error.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jumat/document.hpp"

namespace jumat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct CommandOptions {
  /// Overrides the mode of input documents.
  std::optional<Mode> mode;
  /// Output variable; defaults to the input document's.
  std::optional<Var> var;
  std::uint64_t seed = 1;
  bool trace = false;
  bool verify = true;
  /// check: also require U(0) = I.
  bool normalized = false;
  unsigned jobs = 1;
  /// factor: reject inputs of higher degree. rand: phase and tangent degree.
  std::optional<std::size_t> max_degree;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CommandResult cmd_check(const std::vector<Json>& docs, const CommandOptions& opt);
CommandResult cmd_factor(const std::vector<Json>& docs, const CommandOptions& opt);
/// Product of all documents in order.
CommandResult cmd_mul(const std::vector<Json>& docs, const CommandOptions& opt);
CommandResult cmd_inv(const std::vector<Json>& docs, const CommandOptions& opt);

/// Text forms: z = "1,1,0"; phi = "1/2,0,3" (rho_k, or lambda coefficients
/// when the variable is lambda); g = "0,0,1;0,0,i" one vector per power.
struct GenSpec {
  std::string z;
  std::string phi;
  std::string g;
  bool as_word = false;
};
CommandResult cmd_gen(const GenSpec& spec, const CommandOptions& opt);

struct RandSpec {
  std::size_t nu = 3;
  /// Exact factor count; otherwise 1..max_factors.
  std::optional<std::size_t> factors;
  std::size_t max_factors = 4;
  long height = 1000;
  bool as_matrix = false;
};
CommandResult cmd_rand(const RandSpec& spec, const CommandOptions& opt);

/// W U W^-1 for every document, W = diag{1, L} given as a constant matrix
/// document.
CommandResult cmd_conj(const Json& w, const std::vector<Json>& docs,
                       const CommandOptions& opt);

/// Quick round-trip and membership sweep over every mode.
CommandResult cmd_selftest(const CommandOptions& opt);

/// JUMAT_SEED when set and numeric, otherwise fallback.
std::uint64_t default_seed(std::uint64_t fallback = 1);

}  // namespace jumat

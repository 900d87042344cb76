#pragma once

// Library side of the `milnor` command-line tool: a parsed job in, the exit
// status and the complete output text out.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/json_io.hpp"

namespace milnor::cli {

enum class Command { Signature, Jumps, LtProfile, Crosscheck, Elementary };
enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCrosscheck = 3;

/// Throws ParseError on an unknown name.
Command parse_command(std::string_view name);
std::string to_string(Command c);
OutputFormat parse_format(std::string_view name);

struct JobSpec {
  Command command = Command::Signature;
  std::string input_path;                 // "-" reads standard input
  std::optional<std::string> input_text;  // inline JSON instead of a file
  std::vector<RootSpec> xi_list;
  std::optional<int> grid;                // every zeta_N^k, 3 <= N <= grid, gcd(k, N) = 1
  OutputFormat format = OutputFormat::Csv;
  bool check_both_routes = false;
  std::optional<double> float_tol;        // signature: float backend with this tolerance

  // elementary
  int n = 1;
  int eps = 1;
  Flavor flavor = Flavor::Real;

  /// Throws ParseError when the job is inconsistent (input sources, grid bound,
  /// options that do not apply to the command).
  void validate() const;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // empty unless exit_code is 0 or 3
  std::string error;
};

RunResult run(const JobSpec& job);

/// The grid points in enumeration order.
std::vector<RootSpec> grid_points(int bound);

/// zeta_N^k in lowest terms when z is a root of unity, nullopt otherwise.
std::optional<RootSpec> root_spec_of(const CycloNumber& z);

}  // namespace milnor::cli

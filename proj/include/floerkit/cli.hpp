#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace floerkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitConvergence = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string subcommand;
  int g = 0;
  int n = 3;
  std::optional<int> m;  // grr-check
  std::optional<int> k;  // xi, lefschetz
  int epsilon = 1;
  std::uint64_t seed = 0;
  std::optional<int> T;  // default 2(g+m)+4
  double tol = 1e-9;
  int samples = 20;
  std::string lambda_signs = "alternating";
  bool both_signs = false;
  int N = 2;
  int M = 2;
  std::string format = "json";  // json | tsv | text
  bool expand_gamma = false;
  bool raw = false;
  std::string space;
  std::string ideal_file;
  std::string model;  // q | p | h | top | max
  std::string order = "grevlex";
  std::vector<std::string> surfaces;  // "g,n"
};

// Runs one subcommand; the report goes to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it. Usage errors return 64.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace floerkit

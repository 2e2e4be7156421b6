#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylvsum/rational.hpp"
#include "sylvsum/verify.hpp"

namespace sylvsum::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { from_roots, sylv, subres, cofactors, expected, verify, selftest };
enum class Format { json, text };

struct Command {
  Subcommand subcommand = Subcommand::selftest;
  Format format = Format::json;
  std::vector<Rational> a;
  std::vector<Rational> b;
  int p = 0;
  int q = 0;
  int k = 0;
  int m = 1;
  int n = 1;
  std::uint64_t seed = 0;
  int trials = 3;
  int bound = 20;
  bool deterministic = false;
  Suite suite = Suite::theorem;
  unsigned workers = 1;
  // subres: emit the principal coefficient as {"value": ...}
  bool principal = false;
  // sylv / expected / subres: compare the result against this polynomial
  std::optional<std::vector<Rational>> expect;
};

struct ExecResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// `args` excludes the program name. Throws UsageError on unknown or
/// malformed flags. --help is reported through ExecResult by run().
Command parse_args(std::span<const std::string> args);

/// Never throws; errors are reported through the exit code and `err`.
ExecResult execute(const Command& command);

/// parse_args + execute, with usage errors mapped to exit code 2.
ExecResult run(std::span<const std::string> args);
ExecResult run(int argc, char** argv);

}  // namespace sylvsum::cli

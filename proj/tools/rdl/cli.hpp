#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rdl::cli {

enum class Format { Json, Text, Csv };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string output_path;  // empty writes to stdout
  Format format = Format::Json;
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
  std::vector<double> eps_grid;
  std::string schedule_path;
  std::optional<double> r;
  std::string point;

  // generate only
  std::string kind;
  std::size_t nx = 0;
  std::size_t nx_star = 0;
  std::size_t nu = 0;
  std::size_t ny = 0;
  std::size_t cuts = 64;
  std::size_t n = 0;
  std::size_t rows = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBreakdown = 3;

/// Runs one command. Errors are reported on stderr and mapped to exit codes.
int run(const RunConfig& config);

/// Parses argv and runs the selected command.
int main(int argc, char** argv);

}  // namespace rdl::cli

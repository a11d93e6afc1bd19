#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/batch.hpp"
#include "steiner/svg.hpp"

namespace steiner::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kCollinear = 2,
  kIoFailure = 3,
};

struct RunConfig {
  std::vector<TriangleInput> triangles;
  // Set for --input files holding a list; outputs are then per entry.
  bool batch = false;
  EllipseSelection which = EllipseSelection::Both;
  // In batch mode svg_path names a directory receiving triangle-NNN.svg.
  std::optional<std::filesystem::path> svg_path;
  std::optional<std::filesystem::path> json_path;
  bool quiet = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help was given; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "x1,y1 x2,y2 x3,y3".
TriangleInput parse_triangle(const std::string& text);

// argv[0] is the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(int argc, const char* const* argv);

// "z1=..., z2=..., z3=... are collinear!"
std::string collinear_message(const TriangleInput& t);

// Executes a parsed configuration; returns an ExitCode value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run, mapping usage errors to kUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steiner::cli

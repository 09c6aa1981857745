#pragma once

#include <iosfwd>
#include <string>

namespace sppde::cli {

enum class Command { Solve, Converge, Figures, Compat };

struct RunConfig {
  Command command = Command::Converge;
  int example = 1;
  int eps_exp = 16;           // eps = 2^-eps_exp for solve / figures / compat
  int N = 0;                  // 0: default for the command
  int M = 0;
  int steps = 5;              // ladder length for converge
  double mu = 1.0;
  bool subtract = true;
  std::string coupling = "M16";  // M16 | equal
  std::string output = "table";  // csv | table
  std::string out_path;          // empty: stdout (figures: current directory)
  int eps_max_exp = 30;
  int threads = 0;               // 0: auto
  int compat_order = 2;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (flags, optional --config key=value file) and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sppde::cli

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gabor::cli {

enum ExitCode : int {
  ok = 0,
  invalid_parameters = 2,
  unwritable_output = 3,
  no_optimizer = 4,
  verification_failed = 5,
  depth_exceeded = 6,
};

class UnwritableOutput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// %.15g, with "inf" for infinities.
std::string format_number(double v);

// "out.csv" with n = 3 becomes "out_n3.csv".
std::string per_n_path(const std::string& path, int n);

}  // namespace gabor::cli

#pragma once

#include <stdexcept>

namespace officesim {

// Domain errors (bad input, bad config) map to CLI exit code 1,
// numeric/simulation errors to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace officesim

#pragma once

#include <stdexcept>
#include <string>

namespace motifclose {

// Bad input data: unparsable files, out-of-range nodes, a pair that is
// already an edge, exhausted sampling pools. The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or arguments. The CLI maps it to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace motifclose

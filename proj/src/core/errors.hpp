#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

// Error taxonomy shared by all solver modules. The C API maps these
// one-to-one onto status codes, so add new codes at the end only.
enum class ErrorCode {
  invalid_argument = 1,
  config_error = 2,
  io_error = 3,
  non_convergence = 4,
  series_divergence = 5,
  degenerate_coefficient = 6,
  outside_certified_region = 7,
  trajectory_escaped = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dkp

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrep {

enum class ErrorCode {
  RootOfUnity,
  ZeroArgument,
  ZeroDilation,
  InvalidParam,
  NotCoprime,
  InvalidWParams,
  UnsupportedN,
  SyntaxError,
  CategoryError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception; the code is
// stable and is what the command line front end maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qrep

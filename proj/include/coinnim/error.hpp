#pragma once

#include <stdexcept>
#include <string>

namespace coinnim {

enum class ErrorCode {
  InvalidArgument = 1,
  MalformedPosition = 2,
  IllegalMove = 3,
  NotApplicable = 4,
  Io = 5,
  MemoCapExceeded = 6,
  Bind = 7,
  Internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coinnim

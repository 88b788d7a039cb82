#pragma once

#include <stdexcept>
#include <string>

namespace deckwork {

enum class ErrorCode {
  kInvalidArgument,
  kMalformedInput,
  kBudgetExceeded,
  kIo,
  kVerificationFailed,
  kInternal,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code drives CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace deckwork

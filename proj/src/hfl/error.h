#ifndef HFL_ERROR_H_
#define HFL_ERROR_H_

#include <stdexcept>
#include <string>

namespace hfl {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidVertex,
  kMalformedInput,
  kEndpointOutOfRange,
  kDegreeBoundViolated,
  kSizeLimit,
  kNoVertices,
  kValidation,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. `line()` is the
// 1-based input line for parse errors, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace hfl

#endif  // HFL_ERROR_H_

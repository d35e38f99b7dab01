#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubulate {

enum class ErrorCode {
  malformed_input,
  disconnected,
  precondition,
  guard_exceeded,
  not_convex,
  not_median,
  invariant,
};

const char* to_string(ErrorCode code) noexcept;

// Structured failure. `witness` carries the vertices (or domain / piece
// indices) that make the input fail, when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace cubulate

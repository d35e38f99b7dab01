#pragma once

#include <optional>

#include "cubulate/error.hpp"

// Code of the cubulate::Error thrown by f, or nullopt if none was thrown.
template <typename F>
std::optional<cubulate::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const cubulate::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

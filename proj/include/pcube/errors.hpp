#pragma once

#include <stdexcept>
#include <string>

namespace pcube {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (graph6 text, stream lines).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A precondition on an operation was violated by the caller.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Input exceeds a documented size bound of the chosen backend.
struct SizeLimit : Error {
  explicit SizeLimit(const std::string& what) : Error(what) {}
};

// Two internal routes that must agree disagreed. Always a bug, never
// a property of the input.
struct InternalCheck : Error {
  explicit InternalCheck(const std::string& what) : Error(what) {}
};

}  // namespace pcube

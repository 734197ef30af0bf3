#pragma once

#include <stdexcept>
#include <string>

namespace satake {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (exit code 2 at the CLI).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed but invalid input: non-dominant vector, wrong lattice, bad rank.
struct DomainError : Error {
  using Error::Error;
};

// A computation that would exceed a configured resource cap.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace satake

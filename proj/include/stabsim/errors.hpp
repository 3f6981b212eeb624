#ifndef STABSIM_ERRORS_HPP
#define STABSIM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed circuit text, unknown gate, index out of range.
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  int line;
  ParseError(int line_, const std::string& what_)
      : InputError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// A layer's term count exceeds the configured memory cap.
struct CapacityError : Error {
  int layer;
  std::uint64_t kappa;
  CapacityError(int layer_, std::uint64_t kappa_)
      : Error("non-Clifford layer " + std::to_string(layer_) + " needs " +
              std::to_string(kappa_) + " terms, over the memory cap"),
        layer(layer_), kappa(kappa_) {}
};

// Internal consistency failure (e.g. a database entry fails verification).
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace stabsim

#endif

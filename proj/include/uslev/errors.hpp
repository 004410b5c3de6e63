#pragma once

#include <stdexcept>
#include <string>

namespace uslev {

/// Malformed input: bad JSON, schema violations, dimension mismatches.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A representation the requested operation cannot handle (e.g. the
/// recession cone of an oracle set).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis required by an operation could not be
/// certified. The message names the hypothesis. The CLI maps this to exit 1.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uslev

#pragma once

#include <stdexcept>
#include <string>

namespace repring {

/// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad documents, unresolved references, invalid
/// homomorphism data, non-prime primes, size caps, parse errors.
struct input_error : error {
  using error::error;
};

/// A mathematical assertion failed: a rank that theory says must match
/// did not, a lattice coordinate that must be integral was not, and so on.
/// These indicate either an implementation fault or input outside the
/// theory's hypotheses, and map to a distinct process exit code.
struct math_check_error : error {
  using error::error;
};

}  // namespace repring

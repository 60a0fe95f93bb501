#ifndef TWISTPROD_COMMON_HPP
#define TWISTPROD_COMMON_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace twistprod {

/// Default absolute comparison tolerance. All values appearing in the
/// supported constructions are small rationals or rational multiples of
/// sqrt(2), so double arithmetic keeps residuals far below this.
inline constexpr double kDefaultTol = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input carries incompatible dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// Malformed construction data (inconsistent constants, bad table, ...).
struct IngestionError : Error {
  using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// A built object violates an internal structural requirement.
struct StructuralError : Error {
  using Error::Error;
};

/// Uniform double in [0, 1) straight from the engine's bits, so streams are
/// reproducible independent of the standard library's distribution code.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace twistprod

#endif

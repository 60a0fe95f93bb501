#ifndef TWISTPROD_VALIDATION_HPP
#define TWISTPROD_VALIDATION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace twistprod {

/// Outcome of an algebraic check (antisymmetry, Jacobi, derivation, ...).
/// Every failure carries the indices it concerns and a residual; index
/// meaning depends on the check and is spelled out at the producing
/// operation. Indices are 0-based.
struct ValidationReport {
  std::string check;
  bool pass = true;

  struct Failure {
    std::array<int, 3> where{};
    double residual = 0.0;
  };
  std::vector<Failure> failures;

  std::string summary() const;
};

/// Outcome of a finite-group axiom check. `witness` holds the elements of
/// the first violation in row-major scan order.
struct GroupValidation {
  bool pass = true;
  std::string axiom;          // "latin_square", "identity", "inverse", "associativity"
  std::vector<int> witness;   // elements involved in the first violation
  std::string message() const;
};

}  // namespace twistprod

#endif

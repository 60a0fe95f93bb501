#ifndef TWISTPROD_BUILTINS_HPP
#define TWISTPROD_BUILTINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistprod/parametric.hpp"

namespace twistprod {

/// Frozen reference values for one worked example.
struct ExpectedValues {
  std::optional<Eigen::MatrixXd> sectional;
  std::optional<double> scalar;
  /// Expected nonzero lower-triangle structure constants of `algebra`,
  /// 0-based, sorted by (i, j, k).
  std::vector<ConstantEntry> constants;
};

/// One worked example: the algebra under study, the construction that
/// produces it, the underlying parametric groups and actions where the
/// example has them, and the frozen values it must reproduce.
struct BuiltinBundle {
  std::string name;
  std::string description;

  LieAlgebra algebra;

  /// Exact closed-form twist whose build yields `algebra` (absent for the
  /// plain single-factor algebras).
  std::optional<TwistSpec> twist;

  std::optional<ParametricGroup> group_g;
  std::optional<ParametricGroup> group_h;
  std::optional<SmoothAction> smooth_lambda;
  std::optional<SmoothAction> smooth_mu;
  KernelResidual ker_lambda;  // null when no smooth actions
  KernelResidual ker_mu;

  /// Declared-orthonormal bases of the factor algebras in raw group
  /// coordinates, for numerical differentiation of the smooth actions.
  std::vector<Eigen::VectorXd> basis_g;
  std::vector<Eigen::VectorXd> basis_h;

  ExpectedValues expected;
};

/// Names: heisenberg, e2_canonical, e2_skew, gamma_star_gamma,
/// e2_star_e2_canonical, e2_star_e2_skew. Throws Error for anything else.
BuiltinBundle builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

}  // namespace twistprod

#endif

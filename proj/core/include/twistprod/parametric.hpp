#ifndef TWISTPROD_PARAMETRIC_HPP
#define TWISTPROD_PARAMETRIC_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "twistprod/twisted_lie.hpp"

namespace twistprod {

/// Continuous group in global coordinates. `exp` maps algebra coordinates
/// to the group along one-parameter subgroups; `log` is its closed-form
/// inverse near the identity. Both example families (Heisenberg, plane
/// motions) are solvable with global coordinates, so closed forms exist.
struct ParametricGroup {
  std::string name;
  int dim = 0;
  Eigen::VectorXd identity;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> compose;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> invert;
  std::function<Eigen::VectorXd(std::mt19937_64&)> sample;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> exp;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> log;
};

/// Smooth action of one parametric group on another.
struct SmoothAction {
  ParametricGroup acting;
  ParametricGroup target;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> apply;
};

/// Distance-to-kernel measure for one group element; membership holds when
/// the residual is within tolerance. Kernels of parametric-group actions
/// are described analytically per instance.
using KernelResidual = std::function<double(const Eigen::VectorXd&)>;

/// Conjugation as a smooth action of a group on itself.
SmoothAction inner_smooth_action(const ParametricGroup& group);

/// Action ignoring the acting element.
SmoothAction trivial_smooth_action(const ParametricGroup& acting, const ParametricGroup& target);

/// Statistical check of the twist condition on sampled pairs. `pass` means
/// every sampled defect landed in the respective kernel within tol; this is
/// evidence, not proof, and reports label it as sampled.
struct SampledConditionReport {
  bool pass = true;
  int n_samples = 0;
  double max_residual = 0.0;
  /// First failing sampled pair (g, h), when any.
  std::optional<std::pair<Eigen::VectorXd, Eigen::VectorXd>> witness;
  int failed_clause = 0;  // 1: mu-defect escaped ker(lambda); 2: lambda-defect escaped ker(mu)
};

SampledConditionReport sampled_condition_check(const SmoothAction& lambda, const SmoothAction& mu,
                                               int n_samples, const KernelResidual& ker_lambda,
                                               const KernelResidual& ker_mu, std::uint64_t seed,
                                               double tol = kDefaultTol);

/// Infinitesimal action obtained by numerical differentiation, with a
/// step-halving convergence estimate.
struct DerivedAction {
  InfinitesimalAction action;        // computed at `step`
  double convergence_residual = 0.0; // max |entry(step) - entry(step/2)|
  double richardson_constant = 0.0;  // residual / (3/4 step^2): the h^2 coefficient estimate
  bool converged = true;             // convergence_residual <= tol
};

/// L(Y_j)(X_i) via central second mixed finite differences of
/// log(apply(exp(t Y_j), exp(s X_i))) at t = s = 0, assembled into one
/// derivation matrix per acting basis vector and expressed in the given
/// (declared-orthonormal) bases. Bases are in raw algebra coordinates.
DerivedAction derive_infinitesimal_action(const SmoothAction& action,
                                          const std::vector<Eigen::VectorXd>& basis_acting,
                                          const std::vector<Eigen::VectorXd>& basis_target,
                                          double step = 1e-4, double tol = 1e-6);

// --- the example group families ----------------------------------------------

/// (R^n, +) with exp = log = id.
ParametricGroup abelian_group(int dim, std::string name = "");

/// Heisenberg group in the coordinates (a, b, c) with
/// (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2+c1 a2, c1+c2).
ParametricGroup heisenberg_group();

/// Proper motions of the Euclidean plane as (theta, xi1, xi2): rotation
/// angle plus translation, composing as (t1+t2, xi1 + R(t1) xi2).
ParametricGroup euclidean_motions_group();

/// 2x2 rotation with the sign convention of the motion group above
/// (R(t) = exp(t J), J upper-right positive).
Eigen::Matrix2d rotation2(double theta);

/// Render a motion-group element as its 3x3 homogeneous matrix.
Eigen::Matrix3d euclidean_motion_matrix(const Eigen::VectorXd& element);

/// The motion-group action of Example-type lambda(A,xi)(B,eta) = (B, A eta):
/// the acting rotation replaces the target translation frame.
SmoothAction e2_rotation_action();

/// Semidirect action of (R,+) on (R^2,+): h . (g1, g2) = (g1, g2 + h g1).
SmoothAction heisenberg_shear_action();

}  // namespace twistprod

#endif

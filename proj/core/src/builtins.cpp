#include "twistprod/builtins.hpp"

#include <cmath>

namespace twistprod {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::VectorXd vec3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

LieAlgebra heisenberg_algebra() {
  StructureTensor c(3);
  c.set(0, 2, 1, -1.0);  // [e1, e3] = -e2
  return LieAlgebra(std::move(c));
}

/// Motion-group algebra in a basis whose first vector carries rotation
/// speed `omega`; [e1,e2] = -omega e3, [e1,e3] = omega e2.
LieAlgebra e2_algebra(double omega) {
  StructureTensor c(3);
  c.set(0, 1, 2, -omega);
  c.set(0, 2, 1, omega);
  return LieAlgebra(std::move(c));
}

/// The rotation-action differential in a declared basis: the acting
/// basis vector with rotation speed `omega` maps translations by
/// (v1, v2) -> omega J (v1, v2); everything else acts as zero. Columns are
/// images of the target basis expressed in that same basis.
InfinitesimalAction e2_rotation_differential(double omega,
                                             const std::vector<Eigen::VectorXd>& basis) {
  Eigen::MatrixXd frame(3, 3);
  for (int i = 0; i < 3; ++i) frame.col(i) = basis[i];
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(frame);
  Eigen::MatrixXd d0 = Eigen::MatrixXd::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    const Eigen::VectorXd& x = basis[i];
    d0.col(i) = lu.solve(vec3(0.0, omega * x[2], -omega * x[1]));  // omega J on translations
  }
  InfinitesimalAction action = InfinitesimalAction::zero(3, 3);
  action.matrices[0] = d0;
  return action;
}

KernelResidual identity_residual_heisenberg_center() {
  return [](const Eigen::VectorXd& g) { return std::hypot(g[0], g[2]); };
}

KernelResidual rotation_part_residual() {
  return [](const Eigen::VectorXd& g) { return std::abs(std::remainder(g[0], 2.0 * M_PI)); };
}

KernelResidual whole_group_kernel() {
  return [](const Eigen::VectorXd&) { return 0.0; };
}

Eigen::MatrixXd heisenberg_sectional() {
  Eigen::MatrixXd m(3, 3);
  m << 0, 0.25, -0.75,
      0.25, 0, 0.25,
      -0.75, 0.25, 0;
  return m;
}

Eigen::MatrixXd gamma_star_gamma_sectional() {
  Eigen::MatrixXd m(6, 6);
  m << 0, 0.5, -0.75, 0, 0.25, -1.5,
      0.5, 0, 0.5, 0.25, 0, 0.25,
      -0.75, 0.5, 0, -1.5, 0.25, 0,
      0, 0.25, -1.5, 0, 0.5, -0.75,
      0.25, 0, 0.25, 0.5, 0, 0.5,
      -1.5, 0.25, 0, -0.75, 0.5, 0;
  return m;
}

Eigen::MatrixXd e2_star_e2_skew_sectional() {
  const double a = 1.0 / 64.0;
  const double b = -3.0 / 16.0;
  Eigen::MatrixXd m(6, 6);
  m << 0, a, a, b, a, a,
      a, 0, 0, a, 0, 0,
      a, 0, 0, a, 0, 0,
      b, a, a, 0, a, a,
      a, 0, 0, a, 0, 0,
      a, 0, 0, a, 0, 0;
  return m;
}

std::vector<Eigen::VectorXd> standard_basis(int dim) {
  std::vector<Eigen::VectorXd> basis;
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v[i] = 1.0;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Eigen::VectorXd> e2_canonical_basis() {
  return {vec3(kInvSqrt2, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
}

std::vector<Eigen::VectorXd> e2_skew_basis() {
  return {vec3(0.5, 0.5, 0.5), vec3(0, 1, 0), vec3(0, 0, 1)};
}

BuiltinBundle make_heisenberg() {
  BuiltinBundle b{.name = "heisenberg",
                  .description = "Heisenberg algebra as the shear semidirect construction "
                                 "R^2 x| R, with its parametric group",
                  .algebra = heisenberg_algebra()};

  // Factors: abelian R^2 and R^1; L shears e1 into e2, M vanishes.
  LieAlgebra r2(StructureTensor(2));
  LieAlgebra r1(StructureTensor(1));
  InfinitesimalAction shear = InfinitesimalAction::zero(1, 2);
  shear.matrices[0](1, 0) = 1.0;
  b.twist = TwistSpec{r2, r1, shear, InfinitesimalAction::zero(2, 1)};

  b.group_g = abelian_group(2);
  b.group_h = abelian_group(1);
  b.smooth_lambda = heisenberg_shear_action();
  b.smooth_mu = trivial_smooth_action(*b.group_g, *b.group_h);
  // ker(lambda) is trivial in R^1; ker(mu) is everything.
  b.ker_lambda = [](const Eigen::VectorXd& h) { return std::abs(h[0]); };
  b.ker_mu = whole_group_kernel();
  b.basis_g = standard_basis(2);
  b.basis_h = standard_basis(1);

  b.expected.sectional = heisenberg_sectional();
  b.expected.scalar = -0.5;
  b.expected.constants = {{0, 2, 1, -1.0}};
  return b;
}

BuiltinBundle make_e2(bool skew) {
  const double omega = skew ? 0.5 : kInvSqrt2;
  BuiltinBundle b{.name = skew ? "e2_skew" : "e2_canonical",
                  .description = std::string("plane-motion group algebra, ") +
                                 (skew ? "skewed" : "canonical") + " declared-orthonormal basis",
                  .algebra = e2_algebra(omega)};
  b.group_g = euclidean_motions_group();
  b.smooth_lambda = e2_rotation_action();
  b.ker_lambda = rotation_part_residual();
  b.basis_g = skew ? e2_skew_basis() : e2_canonical_basis();

  b.expected.sectional = Eigen::MatrixXd::Zero(3, 3);
  b.expected.scalar = 0.0;
  b.expected.constants = {{0, 1, 2, -omega}, {0, 2, 1, omega}};
  return b;
}

BuiltinBundle make_gamma_star_gamma() {
  const LieAlgebra heis = heisenberg_algebra();
  BuiltinBundle b{.name = "gamma_star_gamma",
                  .description = "inner twist of the Heisenberg group with itself",
                  .algebra = build_inner_twist(heis).algebra};
  b.twist = TwistSpec{heis, heis, InfinitesimalAction::adjoint(heis),
                      InfinitesimalAction::adjoint(heis)};
  b.group_g = heisenberg_group();
  b.group_h = heisenberg_group();
  b.smooth_lambda = inner_smooth_action(*b.group_g);
  b.smooth_mu = inner_smooth_action(*b.group_g);
  b.ker_lambda = identity_residual_heisenberg_center();
  b.ker_mu = identity_residual_heisenberg_center();
  b.basis_g = standard_basis(3);
  b.basis_h = standard_basis(3);

  b.expected.sectional = gamma_star_gamma_sectional();
  b.expected.scalar = -3.0;
  b.expected.constants = {{0, 2, 1, -1.0}, {0, 5, 1, -1.0}, {0, 5, 4, -1.0},
                          {2, 3, 1, 1.0},  {2, 3, 4, 1.0},  {3, 5, 4, -1.0}};
  return b;
}

BuiltinBundle make_e2_star_e2(bool skew) {
  const double omega = skew ? 0.5 : kInvSqrt2;
  const std::vector<Eigen::VectorXd> basis = skew ? e2_skew_basis() : e2_canonical_basis();
  const LieAlgebra factor = e2_algebra(omega);
  const InfinitesimalAction differential = e2_rotation_differential(omega, basis);
  const TwistSpec twist{factor, factor, differential, differential};

  BuiltinBundle b{.name = skew ? "e2_star_e2_skew" : "e2_star_e2_canonical",
                  .description = std::string("twist of the plane-motion group with itself, ") +
                                 (skew ? "skewed" : "canonical") + " basis",
                  .algebra = build_twisted_algebra(twist)};
  b.twist = twist;
  b.group_g = euclidean_motions_group();
  b.group_h = euclidean_motions_group();
  b.smooth_lambda = e2_rotation_action();
  b.smooth_mu = e2_rotation_action();
  b.ker_lambda = rotation_part_residual();
  b.ker_mu = rotation_part_residual();
  b.basis_g = basis;
  b.basis_h = basis;

  b.expected.sectional = skew ? e2_star_e2_skew_sectional() : Eigen::MatrixXd::Zero(6, 6);
  b.expected.scalar = skew ? -0.125 : 0.0;
  if (skew) {
    b.expected.constants = {{0, 1, 2, -0.5}, {0, 2, 1, 0.5},  {0, 3, 1, -0.25}, {0, 3, 2, 0.25},
                            {0, 3, 4, 0.25}, {0, 3, 5, -0.25}, {0, 4, 5, -0.5}, {0, 5, 4, 0.5},
                            {1, 3, 2, 0.5},  {2, 3, 1, -0.5},  {3, 4, 5, -0.5}, {3, 5, 4, 0.5}};
  } else {
    b.expected.constants = {{0, 1, 2, -kInvSqrt2}, {0, 2, 1, kInvSqrt2},
                            {0, 4, 5, -kInvSqrt2}, {0, 5, 4, kInvSqrt2},
                            {1, 3, 2, kInvSqrt2},  {2, 3, 1, -kInvSqrt2},
                            {3, 4, 5, -kInvSqrt2}, {3, 5, 4, kInvSqrt2}};
  }
  return b;
}

}  // namespace

BuiltinBundle builtin(const std::string& name) {
  if (name == "heisenberg") return make_heisenberg();
  if (name == "e2_canonical") return make_e2(false);
  if (name == "e2_skew") return make_e2(true);
  if (name == "gamma_star_gamma") return make_gamma_star_gamma();
  if (name == "e2_star_e2_canonical") return make_e2_star_e2(false);
  if (name == "e2_star_e2_skew") return make_e2_star_e2(true);
  throw Error("unknown builtin '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "heisenberg",    "e2_canonical",         "e2_skew",
      "gamma_star_gamma", "e2_star_e2_canonical", "e2_star_e2_skew"};
  return names;
}

}  // namespace twistprod

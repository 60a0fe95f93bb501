#include "twistprod/twisted_lie.hpp"

#include <cmath>
#include <random>
#include <string>

namespace twistprod {

InfinitesimalAction InfinitesimalAction::zero(int acting_dim, int target_dim) {
  InfinitesimalAction a{acting_dim, target_dim, {}};
  a.matrices.assign(acting_dim, Eigen::MatrixXd::Zero(target_dim, target_dim));
  return a;
}

InfinitesimalAction InfinitesimalAction::adjoint(const LieAlgebra& alg) {
  const int n = alg.dim();
  InfinitesimalAction a{n, n, {}};
  a.matrices.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) ad(k, j) = alg.tensor()(i, j, k);
    a.matrices.push_back(std::move(ad));
  }
  return a;
}

void InfinitesimalAction::validate_shape() const {
  if (acting_dim <= 0 || target_dim <= 0)
    throw DimensionError("infinitesimal action dimensions must be positive");
  if (static_cast<int>(matrices.size()) != acting_dim)
    throw DimensionError("infinitesimal action needs one matrix per acting basis vector");
  for (const auto& m : matrices)
    if (m.rows() != target_dim || m.cols() != target_dim)
      throw DimensionError("infinitesimal action matrix must be target_dim x target_dim");
}

Eigen::VectorXd InfinitesimalAction::apply(const Eigen::VectorXd& acting,
                                           const Eigen::VectorXd& target) const {
  if (acting.size() != acting_dim || target.size() != target_dim)
    throw DimensionError("infinitesimal action applied to wrong dimensions");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(target_dim);
  for (int a = 0; a < acting_dim; ++a)
    if (acting[a] != 0.0) out += acting[a] * (matrices[a] * target);
  return out;
}

void TwistSpec::validate_dimensions() const {
  L.validate_shape();
  M.validate_shape();
  if (L.acting_dim != h.dim() || L.target_dim != g.dim())
    throw DimensionError("L acts " + std::to_string(L.acting_dim) + " -> " +
                         std::to_string(L.target_dim) + " but must act from the h algebra (dim " +
                         std::to_string(h.dim()) + ") on the g algebra (dim " +
                         std::to_string(g.dim()) + ")");
  if (M.acting_dim != g.dim() || M.target_dim != h.dim())
    throw DimensionError("M acts " + std::to_string(M.acting_dim) + " -> " +
                         std::to_string(M.target_dim) + " but must act from the g algebra (dim " +
                         std::to_string(g.dim()) + ") on the h algebra (dim " +
                         std::to_string(h.dim()) + ")");
}

ValidationReport check_derivation_property(const InfinitesimalAction& action,
                                           const LieAlgebra& target, double tol) {
  action.validate_shape();
  if (action.target_dim != target.dim())
    throw DimensionError("action target dimension does not match the algebra");
  const int n = target.dim();
  ValidationReport report{.check = "derivation"};
  for (int a = 0; a < action.acting_dim; ++a) {
    const Eigen::MatrixXd& D = action.matrices[a];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Eigen::VectorXd ei = target.basis_vector(i);
        const Eigen::VectorXd ej = target.basis_vector(j);
        const Eigen::VectorXd lhs = D * bracket(target, ei, ej);
        const Eigen::VectorXd rhs =
            bracket(target, D * ei, ej) + bracket(target, ei, D * ej);
        const double r = (lhs - rhs).cwiseAbs().maxCoeff();
        if (r > tol) {
          report.pass = false;
          report.failures.push_back({{a, i, j}, r});
        }
      }
  }
  return report;
}

Eigen::VectorXd twisted_bracket(const TwistSpec& spec, const Eigen::VectorXd& z1,
                                const Eigen::VectorXd& z2) {
  spec.validate_dimensions();
  const int n = spec.g.dim();
  const int m = spec.h.dim();
  if (z1.size() != n + m || z2.size() != n + m)
    throw DimensionError("twisted bracket operands must have " + std::to_string(n + m) +
                         " coordinates");
  const Eigen::VectorXd x1 = z1.head(n), y1 = z1.tail(m);
  const Eigen::VectorXd x2 = z2.head(n), y2 = z2.tail(m);
  Eigen::VectorXd out(n + m);
  out.head(n) = bracket(spec.g, x1, x2) + spec.L.apply(y1, x2) - spec.L.apply(y2, x1);
  out.tail(m) = bracket(spec.h, y1, y2) + spec.M.apply(x1, y2) - spec.M.apply(x2, y1);
  return out;
}

LieAlgebra build_twisted_algebra(const TwistSpec& spec, double tol) {
  spec.validate_dimensions();
  const int n = spec.g.dim();
  const int m = spec.h.dim();
  StructureTensor c(n + m);

  // Diagonal regimes: beta and gamma blocks.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c.set_raw(i, j, k, spec.g.tensor()(i, j, k));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) c.set_raw(n + i, n + j, n + k, spec.h.tensor()(i, j, k));

  // Cross regimes, both computed from the formulas. The bases are declared
  // orthonormal, so <v, e_k> is the k-th coordinate.
  for (int i = 0; i < n; ++i)
    for (int jh = 0; jh < m; ++jh) {
      const Eigen::VectorXd l_col = spec.L.matrices[jh].col(i);   // L(e^H_jh)(e^G_i)
      const Eigen::VectorXd m_col = spec.M.matrices[i].col(jh);   // M(e^G_i)(e^H_jh)
      for (int k = 0; k < n; ++k) c.set_raw(i, n + jh, k, -l_col[k]);
      for (int k = 0; k < m; ++k) c.set_raw(i, n + jh, n + k, m_col[k]);
      for (int k = 0; k < n; ++k) c.set_raw(n + jh, i, k, l_col[k]);
      for (int k = 0; k < m; ++k) c.set_raw(n + jh, i, n + k, -m_col[k]);
    }

  // The two cross regimes overdetermine the tensor; they must land as
  // antisymmetric mates or the L/M input is malformed.
  for (int i = 0; i < n; ++i)
    for (int j = n; j < n + m; ++j)
      for (int k = 0; k < n + m; ++k) {
        const double r = c(i, j, k) + c(j, i, k);
        if (!(std::abs(r) <= tol))
          throw StructuralError("cross regimes of the twisted tensor disagree at (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                std::to_string(k + 1) + "): residual " + std::to_string(r));
      }

  std::vector<std::string> labels;
  labels.reserve(n + m);
  for (int i = 1; i <= n + m; ++i) labels.push_back("E" + std::to_string(i));
  return LieAlgebra(std::move(c), std::move(labels));
}

InnerTwistResult build_inner_twist(const LieAlgebra& m_alg, double tol) {
  const int n = m_alg.dim();
  const auto& a = m_alg.tensor();
  StructureTensor c(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = a(i, j, k);
        if (v == 0.0) continue;
        c.set_raw(i, j, k, v);              // both factors in G
        c.set_raw(n + i, n + j, n + k, v);  // both factors in H
        c.set_raw(i, n + j, k, v);          // i in G, j in H, output in G
        c.set_raw(i, n + j, n + k, v);      // ... and its H copy
        c.set_raw(n + i, j, k, v);          // i in H, j in G
        c.set_raw(n + i, j, n + k, v);
      }

  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (int i = 1; i <= 2 * n; ++i) labels.push_back("E" + std::to_string(i));

  const NilpotencyResult nil = is_two_step_nilpotent(m_alg, tol);
  return {LieAlgebra(std::move(c), std::move(labels)), nil.two_step, nil.witness};
}

LieAlgebra random_two_step_nilpotent(int generators, int center, std::uint64_t seed) {
  if (generators < 1 || center < 1)
    throw DimensionError("need at least one generator and one central direction");
  const int n = generators + center;
  std::mt19937_64 rng(seed);
  StructureTensor c(n);
  for (int i = 0; i < generators; ++i)
    for (int j = i + 1; j < generators; ++j)
      for (int k = generators; k < n; ++k) c.set(i, j, k, uniform(rng, -1.0, 1.0));
  return LieAlgebra(std::move(c));
}

}  // namespace twistprod

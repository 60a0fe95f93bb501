#ifndef TWISTPROD_TWISTED_LIE_HPP
#define TWISTPROD_TWISTED_LIE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "twistprod/lie_algebra.hpp"

namespace twistprod {

/// The differential of a group action at the identity: one linear operator
/// on the target algebra per basis vector of the acting algebra. For a
/// valid twist each matrix must be a derivation of the target bracket.
struct InfinitesimalAction {
  int acting_dim = 0;
  int target_dim = 0;
  std::vector<Eigen::MatrixXd> matrices;  // acting_dim matrices, target_dim x target_dim

  static InfinitesimalAction zero(int acting_dim, int target_dim);

  /// ad: x -> [x, .]; matrix columns are bracket(e_a, e_j).
  static InfinitesimalAction adjoint(const LieAlgebra& alg);

  /// Operator for a general acting vector y: sum_a y_a D_a, applied to x.
  Eigen::VectorXd apply(const Eigen::VectorXd& acting, const Eigen::VectorXd& target) const;

  void validate_shape() const;  // throws DimensionError
};

/// All data of a Lie-algebra twist: algebras L(G) (dim n), L(H) (dim m),
/// and the infinitesimal actions L: L(H) -> Der L(G), M: L(G) -> Der L(H).
struct TwistSpec {
  LieAlgebra g;
  LieAlgebra h;
  InfinitesimalAction L;
  InfinitesimalAction M;

  void validate_dimensions() const;  // throws DimensionError
};

/// For each action matrix D and each target basis pair (i, j) checks
/// D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]. Failure indices are
/// (matrix, i, j) with the max-norm residual.
ValidationReport check_derivation_property(const InfinitesimalAction& action,
                                           const LieAlgebra& target, double tol = kDefaultTol);

/// Bracket of the twisted product algebra evaluated directly:
/// ([X1,X2] + L(Y1)X2 - L(Y2)X1, [Y1,Y2] + M(X1)Y2 - M(X2)Y1)
/// for z = (X, Y) split after spec.g.dim() coordinates.
Eigen::VectorXd twisted_bracket(const TwistSpec& spec, const Eigen::VectorXd& z1,
                                const Eigen::VectorXd& z2);

/// Assembles the (n+m)-dimensional structure tensor of the twisted product:
/// the two diagonal blocks copy the factor tensors, the two cross regimes
/// are filled from <L(e^H)(e^G), e^G_k> and <M(e^G)(e^H), e^H_k>. Both
/// cross regimes are computed independently and must be antisymmetric
/// mates within tol; a mismatch (malformed L/M input) raises
/// StructuralError. The result is not Jacobi-checked here: run check_jacobi
/// on it, since actions violating the infinitesimal compatibility yield
/// tensors that are legitimate to inspect but are not Lie brackets.
LieAlgebra build_twisted_algebra(const TwistSpec& spec, double tol = kDefaultTol);

struct InnerTwistResult {
  LieAlgebra algebra;
  /// Prop."group exists" caveat: when the source is not 2-step nilpotent
  /// the result is still assembled but no group realizes it.
  bool source_two_step_nilpotent = true;
  std::optional<std::array<int, 3>> nilpotency_witness;
};

/// Twist of an algebra with itself by the adjoint actions (the inner
/// construction): 2n-dimensional, diagonal blocks copy the source
/// constants, cross blocks repeat them with the index shifts of the inner
/// constant formula. Equals build_twisted_algebra with L = M = ad.
/// Requires the source to pass Jacobi.
InnerTwistResult build_inner_twist(const LieAlgebra& m_alg, double tol = kDefaultTol);

/// Random 2-step nilpotent algebra for property tests: `generators` basis
/// vectors bracketing into a `center`-dimensional central span, all other
/// brackets zero. Such tensors satisfy Jacobi identically.
LieAlgebra random_two_step_nilpotent(int generators, int center, std::uint64_t seed);

}  // namespace twistprod

#endif

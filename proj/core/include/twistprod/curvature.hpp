#ifndef TWISTPROD_CURVATURE_HPP
#define TWISTPROD_CURVATURE_HPP

#include <Eigen/Dense>
#include <string>

#include "twistprod/lie_algebra.hpp"

namespace twistprod {

enum class CurvatureMethod { milnor_full, metabelian_shortcut };

std::string to_string(CurvatureMethod method);

/// Left-invariant curvature of the group in the algebra's declared
/// orthonormal basis. `sectional` holds k_ij for the plane spanned by
/// (e_i, e_j); `scalar` sums k_ij over all ordered pairs i != j.
struct CurvatureReport {
  Eigen::MatrixXd sectional;
  double scalar = 0.0;
  CurvatureMethod method = CurvatureMethod::milnor_full;
};

/// Milnor's formula per basis plane:
/// k_ij = sum_k [ 1/2 a_ij^k (-a_ij^k + a_jk^i + a_ki^j)
///              - 1/4 (a_ij^k - a_jk^i + a_ki^j)(a_ij^k + a_jk^i - a_ki^j)
///              - a_ki^i a_kj^j ].
/// The inner sum runs over ascending k so results do not depend on how
/// callers partition the (i, j) loop. Requires antisymmetry.
Eigen::MatrixXd sectional_curvatures(const LieAlgebra& alg);

/// Sum of k_ij over all ordered pairs i != j. This normalization is the
/// one consistent with the metabelian shortcut below.
double scalar_curvature(const LieAlgebra& alg);

/// rho = -1/4 sum_{i,k} ||[e_i, e_k]||^2 over all ordered pairs; valid
/// only for 2-step nilpotent algebras. Throws PreconditionError naming a
/// violating triple otherwise.
double scalar_curvature_metabelian(const LieAlgebra& alg, double tol = kDefaultTol);

CurvatureReport curvature_report(const LieAlgebra& alg,
                                 CurvatureMethod method = CurvatureMethod::milnor_full,
                                 double tol = kDefaultTol);

struct SixRhoReport {
  double rho = 0.0;        // scalar curvature of the input
  double rho_prime = 0.0;  // scalar curvature of its inner twist
  double ratio = 0.0;      // rho_prime / rho (0 when rho == 0)
  bool pass = false;       // |rho_prime - 6 rho| <= tol * max(1, |rho|)
  double rho_shortcut = 0.0;
  double rho_prime_shortcut = 0.0;
};

/// Checks rho' = 6 rho for the inner twist of a 2-step nilpotent algebra,
/// computing both sides with the full sectional sum and cross-checking
/// each against the metabelian shortcut. Throws PreconditionError when the
/// input is not 2-step nilpotent.
SixRhoReport verify_six_rho(const LieAlgebra& m_alg, double tol = kDefaultTol);

}  // namespace twistprod

#endif

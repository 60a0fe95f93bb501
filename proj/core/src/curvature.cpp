#include "twistprod/curvature.hpp"

#include <cmath>

#include "twistprod/twisted_lie.hpp"

namespace twistprod {

std::string to_string(CurvatureMethod method) {
  return method == CurvatureMethod::milnor_full ? "milnor_full" : "metabelian_shortcut";
}

Eigen::MatrixXd sectional_curvatures(const LieAlgebra& alg) {
  const int n = alg.dim();
  const auto& a = alg.tensor();
  Eigen::MatrixXd k_mat = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        const double a_ijk = a(i, j, k);
        const double a_jki = a(j, k, i);
        const double a_kij = a(k, i, j);
        acc += 0.5 * a_ijk * (-a_ijk + a_jki + a_kij) -
               0.25 * (a_ijk - a_jki + a_kij) * (a_ijk + a_jki - a_kij) -
               a(k, i, i) * a(k, j, j);
      }
      k_mat(i, j) = acc;
    }
  return k_mat;
}

double scalar_curvature(const LieAlgebra& alg) {
  return sectional_curvatures(alg).sum();  // diagonal is zero
}

double scalar_curvature_metabelian(const LieAlgebra& alg, double tol) {
  const NilpotencyResult nil = is_two_step_nilpotent(alg, tol);
  if (!nil.two_step) {
    const auto& w = *nil.witness;
    throw PreconditionError("metabelian shortcut needs a 2-step nilpotent algebra; [[e" +
                            std::to_string(w[0] + 1) + ",e" + std::to_string(w[1] + 1) + "],e" +
                            std::to_string(w[2] + 1) + "] != 0");
  }
  const int n = alg.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      acc += bracket(alg, alg.basis_vector(i), alg.basis_vector(k)).squaredNorm();
  return -0.25 * acc;
}

CurvatureReport curvature_report(const LieAlgebra& alg, CurvatureMethod method, double tol) {
  CurvatureReport report;
  report.method = method;
  report.sectional = sectional_curvatures(alg);
  report.scalar = method == CurvatureMethod::milnor_full ? report.sectional.sum()
                                                         : scalar_curvature_metabelian(alg, tol);
  return report;
}

SixRhoReport verify_six_rho(const LieAlgebra& m_alg, double tol) {
  const NilpotencyResult nil = is_two_step_nilpotent(m_alg, tol);
  if (!nil.two_step) {
    const auto& w = *nil.witness;
    throw PreconditionError("rho' = 6 rho applies to 2-step nilpotent algebras; [[e" +
                            std::to_string(w[0] + 1) + ",e" + std::to_string(w[1] + 1) + "],e" +
                            std::to_string(w[2] + 1) + "] != 0");
  }
  SixRhoReport report;
  report.rho = scalar_curvature(m_alg);
  report.rho_prime = scalar_curvature(build_inner_twist(m_alg, tol).algebra);
  report.ratio = report.rho == 0.0 ? 0.0 : report.rho_prime / report.rho;
  report.rho_shortcut = scalar_curvature_metabelian(m_alg, tol);
  const bool theorem = std::abs(report.rho_prime - 6.0 * report.rho) <=
                       tol * std::max(1.0, std::abs(report.rho));
  // The twist of a 2-step nilpotent algebra is again 2-step nilpotent, so
  // the shortcut applies on both sides.
  report.rho_prime_shortcut =
      scalar_curvature_metabelian(build_inner_twist(m_alg, tol).algebra, tol);
  const bool shortcut_consistent =
      std::abs(report.rho - report.rho_shortcut) <= tol * std::max(1.0, std::abs(report.rho)) &&
      std::abs(report.rho_prime - report.rho_prime_shortcut) <=
          tol * std::max(1.0, std::abs(report.rho_prime));
  report.pass = theorem && shortcut_consistent;
  return report;
}

}  // namespace twistprod

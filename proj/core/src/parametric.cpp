#include "twistprod/parametric.hpp"

#include <cmath>

namespace twistprod {

SmoothAction inner_smooth_action(const ParametricGroup& group) {
  auto compose = group.compose;
  auto invert = group.invert;
  return {group, group, [compose, invert](const Eigen::VectorXd& h, const Eigen::VectorXd& x) {
            return compose(compose(h, x), invert(h));
          }};
}

SmoothAction trivial_smooth_action(const ParametricGroup& acting, const ParametricGroup& target) {
  return {acting, target,
          [](const Eigen::VectorXd&, const Eigen::VectorXd& x) { return x; }};
}

SampledConditionReport sampled_condition_check(const SmoothAction& lambda, const SmoothAction& mu,
                                               int n_samples, const KernelResidual& ker_lambda,
                                               const KernelResidual& ker_mu, std::uint64_t seed,
                                               double tol) {
  const ParametricGroup& g_group = lambda.target;
  const ParametricGroup& h_group = lambda.acting;
  SampledConditionReport report;
  report.n_samples = n_samples;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    const Eigen::VectorXd g = g_group.sample(rng);
    const Eigen::VectorXd h = h_group.sample(rng);
    // mu(g)(h) h^-1 must lie in ker(lambda)
    const Eigen::VectorXd defect_h = h_group.compose(mu.apply(g, h), h_group.invert(h));
    const double r1 = ker_lambda(defect_h);
    // lambda(h)(g) g^-1 must lie in ker(mu)
    const Eigen::VectorXd defect_g = g_group.compose(lambda.apply(h, g), g_group.invert(g));
    const double r2 = ker_mu(defect_g);
    report.max_residual = std::max({report.max_residual, r1, r2});
    if (!report.witness) {
      if (r1 > tol) {
        report.pass = false;
        report.witness = std::make_pair(g, h);
        report.failed_clause = 1;
      } else if (r2 > tol) {
        report.pass = false;
        report.witness = std::make_pair(g, h);
        report.failed_clause = 2;
      }
    }
  }
  return report;
}

namespace {

std::vector<Eigen::MatrixXd> mixed_difference_matrices(
    const SmoothAction& action, const std::vector<Eigen::VectorXd>& basis_acting,
    const std::vector<Eigen::VectorXd>& basis_target, double h) {
  const int na = static_cast<int>(basis_acting.size());
  const int nt = static_cast<int>(basis_target.size());

  Eigen::MatrixXd target_frame(basis_target[0].size(), nt);
  for (int i = 0; i < nt; ++i) target_frame.col(i) = basis_target[i];
  const Eigen::FullPivLU<Eigen::MatrixXd> frame_lu(target_frame);
  if (!frame_lu.isInvertible()) throw IngestionError("target basis is not a basis");

  const auto f = [&](const Eigen::VectorXd& y, const Eigen::VectorXd& x, double t, double s) {
    return action.target.log(
        action.apply(action.acting.exp(t * y), action.target.exp(s * x)));
  };

  std::vector<Eigen::MatrixXd> matrices(na, Eigen::MatrixXd::Zero(nt, nt));
  for (int j = 0; j < na; ++j)
    for (int i = 0; i < nt; ++i) {
      const Eigen::VectorXd& y = basis_acting[j];
      const Eigen::VectorXd& x = basis_target[i];
      const Eigen::VectorXd raw = (f(y, x, h, h) - f(y, x, h, -h) - f(y, x, -h, h) +
                                   f(y, x, -h, -h)) /
                                  (4.0 * h * h);
      matrices[j].col(i) = frame_lu.solve(raw);
    }
  return matrices;
}

}  // namespace

DerivedAction derive_infinitesimal_action(const SmoothAction& action,
                                          const std::vector<Eigen::VectorXd>& basis_acting,
                                          const std::vector<Eigen::VectorXd>& basis_target,
                                          double step, double tol) {
  if (step <= 0.0) throw PreconditionError("finite-difference step must be positive");
  if (basis_acting.empty() || basis_target.empty())
    throw DimensionError("need nonempty bases for both algebras");
  if (basis_acting[0].size() != action.acting.dim ||
      basis_target[0].size() != action.target.dim)
    throw DimensionError("basis coordinate counts must match the group coordinates");

  const auto coarse = mixed_difference_matrices(action, basis_acting, basis_target, step);
  const auto fine = mixed_difference_matrices(action, basis_acting, basis_target, step / 2);

  double residual = 0.0;
  for (std::size_t j = 0; j < coarse.size(); ++j)
    residual = std::max(residual, (coarse[j] - fine[j]).cwiseAbs().maxCoeff());

  DerivedAction out;
  out.action = {static_cast<int>(basis_acting.size()), static_cast<int>(basis_target.size()),
                coarse};
  out.convergence_residual = residual;
  out.richardson_constant = residual / (0.75 * step * step);
  out.converged = residual <= tol;
  return out;
}

// --- the example group families ----------------------------------------------

ParametricGroup abelian_group(int dim, std::string name) {
  ParametricGroup g;
  g.name = name.empty() ? "R^" + std::to_string(dim) : std::move(name);
  g.dim = dim;
  g.identity = Eigen::VectorXd::Zero(dim);
  g.compose = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) -> Eigen::VectorXd {
    return a + b;
  };
  g.invert = [](const Eigen::VectorXd& a) -> Eigen::VectorXd { return -a; };
  g.sample = [dim](std::mt19937_64& rng) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = uniform(rng, -1.0, 1.0);
    return v;
  };
  g.exp = [](const Eigen::VectorXd& a) { return a; };
  g.log = [](const Eigen::VectorXd& a) { return a; };
  return g;
}

ParametricGroup heisenberg_group() {
  ParametricGroup g;
  g.name = "Heisenberg";
  g.dim = 3;
  g.identity = Eigen::VectorXd::Zero(3);
  g.compose = [](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    Eigen::VectorXd r(3);
    r << p[0] + q[0], p[1] + q[1] + p[2] * q[0], p[2] + q[2];
    return r;
  };
  g.invert = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd r(3);
    r << -p[0], -p[1] + p[2] * p[0], -p[2];
    return r;
  };
  g.sample = [](std::mt19937_64& rng) {
    Eigen::VectorXd v(3);
    for (int i = 0; i < 3; ++i) v[i] = uniform(rng, -1.0, 1.0);
    return v;
  };
  // exp(t(a,b,c)) = (ta, tb + t^2 ac/2, tc): the one-parameter subgroups.
  g.exp = [](const Eigen::VectorXd& v) {
    Eigen::VectorXd r(3);
    r << v[0], v[1] + 0.5 * v[0] * v[2], v[2];
    return r;
  };
  g.log = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd r(3);
    r << p[0], p[1] - 0.5 * p[0] * p[2], p[2];
    return r;
  };
  return g;
}

Eigen::Matrix2d rotation2(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return r;
}

namespace {

// integral of R(t a) over t in [0,1]: translation part of the motion-group
// exponential. Series near zero avoids the 1-cos cancellation.
Eigen::Matrix2d rotation_integral(double a) {
  double sinc, versine;
  if (std::abs(a) < 1e-3) {
    const double a2 = a * a;
    sinc = 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
    versine = a / 2.0 - a2 * a / 24.0 + a2 * a2 * a / 720.0;
  } else {
    sinc = std::sin(a) / a;
    versine = (1.0 - std::cos(a)) / a;
  }
  Eigen::Matrix2d m;
  m << sinc, versine, -versine, sinc;
  return m;
}

}  // namespace

ParametricGroup euclidean_motions_group() {
  ParametricGroup g;
  g.name = "E(2)";
  g.dim = 3;
  g.identity = Eigen::VectorXd::Zero(3);
  g.compose = [](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    Eigen::VectorXd r(3);
    r[0] = p[0] + q[0];
    r.tail(2) = p.tail(2) + rotation2(p[0]) * q.tail(2);
    return r;
  };
  g.invert = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd r(3);
    r[0] = -p[0];
    r.tail(2) = -(rotation2(-p[0]) * p.tail(2));
    return r;
  };
  g.sample = [](std::mt19937_64& rng) {
    Eigen::VectorXd v(3);
    for (int i = 0; i < 3; ++i) v[i] = uniform(rng, -1.0, 1.0);
    return v;
  };
  g.exp = [](const Eigen::VectorXd& v) {
    Eigen::VectorXd r(3);
    r[0] = v[0];
    r.tail(2) = rotation_integral(v[0]) * v.tail(2);
    return r;
  };
  g.log = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd r(3);
    r[0] = p[0];
    r.tail(2) = rotation_integral(p[0]).inverse() * p.tail(2);
    return r;
  };
  return g;
}

Eigen::Matrix3d euclidean_motion_matrix(const Eigen::VectorXd& element) {
  if (element.size() != 3) throw DimensionError("motion-group element has 3 coordinates");
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m.topLeftCorner<2, 2>() = rotation2(element[0]);
  m(0, 2) = element[1];
  m(1, 2) = element[2];
  return m;
}

SmoothAction e2_rotation_action() {
  const ParametricGroup e2 = euclidean_motions_group();
  return {e2, e2, [](const Eigen::VectorXd& h, const Eigen::VectorXd& x) {
            Eigen::VectorXd r(3);
            r[0] = x[0];
            r.tail(2) = rotation2(h[0]) * x.tail(2);
            return r;
          }};
}

SmoothAction heisenberg_shear_action() {
  return {abelian_group(1), abelian_group(2),
          [](const Eigen::VectorXd& h, const Eigen::VectorXd& x) {
            Eigen::VectorXd r(2);
            r << x[0], x[1] + h[0] * x[0];
            return r;
          }};
}

}  // namespace twistprod

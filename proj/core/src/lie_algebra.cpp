#include "twistprod/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twistprod {

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << check << ": " << (pass ? "pass" : "FAIL");
  if (!failures.empty()) {
    out << " (" << failures.size() << " violation" << (failures.size() == 1 ? "" : "s")
        << "; first at (" << failures.front().where[0] + 1 << "," << failures.front().where[1] + 1
        << "," << failures.front().where[2] + 1 << "), residual " << failures.front().residual
        << ")";
  }
  return out.str();
}

std::string GroupValidation::message() const {
  if (pass) return "group axioms: pass";
  std::ostringstream out;
  out << "group axioms: FAIL [" << axiom << "] witness (";
  for (std::size_t t = 0; t < witness.size(); ++t) out << (t ? "," : "") << witness[t];
  out << ")";
  return out.str();
}

StructureTensor::StructureTensor(int dim) : dim_(dim) {
  if (dim <= 0) throw DimensionError("structure tensor dimension must be positive");
  data_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
}

std::size_t StructureTensor::offset(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw DimensionError("structure tensor index out of range");
  return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
}

void StructureTensor::set(int i, int j, int k, double value) {
  if (i == j && value != 0.0)
    throw IngestionError("antisymmetry forces c[i][i][k] = 0");
  data_[offset(i, j, k)] = value;
  data_[offset(j, i, k)] = -value;
}

void StructureTensor::set_raw(int i, int j, int k, double value) {
  data_[offset(i, j, k)] = value;
}

StructureTensor StructureTensor::from_entries(int dim, const std::vector<ConstantEntry>& entries) {
  StructureTensor t(dim);
  std::vector<bool> assigned(t.data_.size(), false);
  for (const auto& e : entries) {
    const std::size_t lo = t.offset(e.i, e.j, e.k);
    const std::size_t hi = t.offset(e.j, e.i, e.k);
    if (e.i == e.j && e.value != 0.0)
      throw IngestionError("constant with equal lower indexes must be zero");
    if (assigned[lo] && t.data_[lo] != e.value)
      throw IngestionError("inconsistent duplicate structure constant");
    t.data_[lo] = e.value;
    t.data_[hi] = -e.value;
    assigned[lo] = assigned[hi] = true;
  }
  return t;
}

std::vector<ConstantEntry> StructureTensor::lower_entries() const {
  std::vector<ConstantEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const double v = (*this)(i, j, k);
        if (v != 0.0) out.push_back({i, j, k, v});
      }
  return out;
}

LieAlgebra::LieAlgebra(StructureTensor tensor, std::vector<std::string> basis_labels,
                       std::string metric_note)
    : tensor_(std::move(tensor)),
      basis_labels_(std::move(basis_labels)),
      metric_note_(std::move(metric_note)) {
  if (basis_labels_.empty()) {
    basis_labels_.reserve(tensor_.dim());
    for (int i = 1; i <= tensor_.dim(); ++i) basis_labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(basis_labels_.size()) != tensor_.dim())
    throw DimensionError("basis label count must match algebra dimension");
}

Eigen::VectorXd LieAlgebra::basis_vector(int i) const {
  if (i < 0 || i >= dim()) throw DimensionError("basis index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim());
  v[i] = 1.0;
  return v;
}

Eigen::VectorXd bracket(const LieAlgebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int n = alg.dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("bracket operands must have " + std::to_string(n) + " coordinates, got " +
                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
  const auto& c = alg.tensor();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      for (int k = 0; k < n; ++k) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

ValidationReport check_antisymmetry(const LieAlgebra& alg, double tol) {
  const int n = alg.dim();
  const auto& c = alg.tensor();
  ValidationReport report{.check = "antisymmetry"};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double r = std::abs(c(i, j, k) + c(j, i, k));
        if (r > tol) {
          report.pass = false;
          report.failures.push_back({{i, j, k}, r});
        }
      }
  return report;
}

namespace {

// [[e_i, e_j], e_k] expanded through the tensor.
Eigen::VectorXd double_bracket(const StructureTensor& c, int i, int j, int k) {
  const int n = c.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int l = 0; l < n; ++l) {
    const double w = c(i, j, l);
    if (w == 0.0) continue;
    for (int m = 0; m < n; ++m) out[m] += w * c(l, k, m);
  }
  return out;
}

}  // namespace

ValidationReport check_jacobi(const LieAlgebra& alg, double tol) {
  const int n = alg.dim();
  const auto& c = alg.tensor();
  ValidationReport report{.check = "jacobi"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd cyclic = double_bracket(c, i, j, k) + double_bracket(c, j, k, i) +
                                       double_bracket(c, k, i, j);
        if (cyclic.cwiseAbs().maxCoeff() > tol) {
          report.pass = false;
          report.failures.push_back({{i, j, k}, cyclic.norm()});
        }
      }
  return report;
}

NilpotencyResult is_two_step_nilpotent(const LieAlgebra& alg, double tol) {
  const int n = alg.dim();
  const auto& c = alg.tensor();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (double_bracket(c, i, j, k).cwiseAbs().maxCoeff() > tol)
          return {false, std::array<int, 3>{i, j, k}};
  return {true, std::nullopt};
}

}  // namespace twistprod

#ifndef TWISTPROD_LIE_ALGEBRA_HPP
#define TWISTPROD_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twistprod/common.hpp"
#include "twistprod/validation.hpp"

namespace twistprod {

/// One structure constant: [e_i, e_j] contains `value * e_k`. Indices are
/// 0-based in memory; the JSON interchange format is 1-based with i < j.
struct ConstantEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;

  friend bool operator==(const ConstantEntry&, const ConstantEntry&) = default;
};

/// Dense rank-3 array of bracket coefficients c[i][j][k] in a fixed basis.
///
/// Antisymmetry in (i, j) is the structural invariant. `set` writes the
/// (i, j, k) and (j, i, k) slots together and rejects inconsistent
/// re-assignments; `set_raw` writes a single slot and exists so checks can
/// be exercised on deliberately broken tensors.
class StructureTensor {
 public:
  explicit StructureTensor(int dim);

  /// Ingest a list of entries. Entries may address either index order, but
  /// a slot and its mirror must agree (c_jik = -c_ijk) when both appear.
  static StructureTensor from_entries(int dim, const std::vector<ConstantEntry>& entries);

  int dim() const { return dim_; }

  double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }

  /// Antisymmetric assignment: c_ijk = value, c_jik = -value.
  void set(int i, int j, int k, double value);

  /// Single-slot assignment with no mirroring. Deliberately allows invalid
  /// tensors; pair with check_antisymmetry.
  void set_raw(int i, int j, int k, double value);

  /// Nonzero entries with i < j, sorted lexicographically by (i, j, k).
  std::vector<ConstantEntry> lower_entries() const;

  bool operator==(const StructureTensor& other) const {
    return dim_ == other.dim_ && data_ == other.data_;
  }

 private:
  std::size_t offset(int i, int j, int k) const;

  int dim_;
  std::vector<double> data_;
};

/// Finite-dimensional real Lie algebra given by structure constants in a
/// basis that is declared orthonormal for the intended left-invariant
/// metric. The Jacobi identity is not enforced at construction: tensors
/// built from incompatible twist actions are legitimate objects to inspect.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureTensor tensor, std::vector<std::string> basis_labels = {},
                      std::string metric_note = "basis declared orthonormal");

  int dim() const { return tensor_.dim(); }
  const StructureTensor& tensor() const { return tensor_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }
  const std::string& metric_note() const { return metric_note_; }

  /// i-th basis vector as a coordinate vector.
  Eigen::VectorXd basis_vector(int i) const;

 private:
  StructureTensor tensor_;
  std::vector<std::string> basis_labels_;
  std::string metric_note_;
};

/// [x, y] = sum_{i,j,k} x_i y_j c_ijk e_k. Bilinear; throws DimensionError
/// on coordinate-count mismatch.
Eigen::VectorXd bracket(const LieAlgebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Lists every (i, j, k) with |c_ijk + c_jik| > tol. Diagonal entries
/// c_iik != 0 surface here as (i, i, k) failures.
ValidationReport check_antisymmetry(const LieAlgebra& alg, double tol = kDefaultTol);

/// Evaluates [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] for every
/// basis triple; a failure records the triple and the Euclidean norm of the
/// cyclic sum. Pass iff every component of every sum is within tol.
ValidationReport check_jacobi(const LieAlgebra& alg, double tol = kDefaultTol);

struct NilpotencyResult {
  bool two_step = false;
  /// One violating triple (i, j, k) with [[e_i,e_j],e_k] != 0, when any.
  std::optional<std::array<int, 3>> witness;
};

/// True iff [[e_i,e_j],e_k] = 0 within tol for all basis triples.
NilpotencyResult is_two_step_nilpotent(const LieAlgebra& alg, double tol = kDefaultTol);

}  // namespace twistprod

#endif

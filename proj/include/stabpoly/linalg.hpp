#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Eigen supplies storage and expressions; the decompositions below replace
// Eigen's pivoting ones, which rely on floating-point thresholds.

#include "stabpoly/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace stabpoly {

/// Row-echelon basis that grows one row at a time. Used for greedy
/// lexicographic rank selection.
template <typename Scalar>
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  bool full() const { return rank() == dim_; }

  /// Adds `row` if it is independent of the rows held so far.
  template <typename Derived>
  bool insert(const Eigen::MatrixBase<Derived>& row) {
    Vector<Scalar> r = row.transpose();
    reduce(r);
    Eigen::Index lead = 0;
    while (lead < dim_ && r(lead) == Scalar(0)) ++lead;
    if (lead == dim_) return false;
    r /= Scalar(r(lead));
    // Keep rows sorted by pivot column so reduce() is a single pass.
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->first < lead) ++pos;
    rows_.insert(pos, {lead, std::move(r)});
    return true;
  }

  template <typename Derived>
  bool spans(const Eigen::MatrixBase<Derived>& row) const {
    Vector<Scalar> r = row.transpose();
    reduce(r);
    for (Eigen::Index i = 0; i < dim_; ++i)
      if (r(i) != Scalar(0)) return false;
    return true;
  }

 private:
  void reduce(Vector<Scalar>& r) const {
    for (const auto& [lead, basis] : rows_) {
      if (r(lead) == Scalar(0)) continue;
      Scalar f = r(lead);
      r -= f * basis;
    }
  }

  Eigen::Index dim_;
  std::vector<std::pair<Eigen::Index, Vector<Scalar>>> rows_;
};

/// Rank by exact Gaussian elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  IncrementalBasis<Scalar> basis(m.cols());
  for (Eigen::Index i = 0; i < m.rows() && !basis.full(); ++i) basis.insert(m.row(i));
  return basis.rank();
}

/// Solves a square system exactly; nullopt when the matrix is singular.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> exact_solve(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) return std::nullopt;
  Matrix<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && aug(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) aug.row(pivot).swap(aug.row(col));
    Scalar inv = Scalar(1) / aug(col, col);
    aug.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == Scalar(0)) continue;
      Scalar f = aug(r, col);
      aug.row(r) -= f * aug.row(col);
    }
  }
  return Vector<Scalar>(aug.col(n));
}

/// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate is a minor of the input, so 64-bit storage suffices
/// for 0/±1 matrices up to dimension 20; products use 128-bit integers.
/// Works in place on the row-major `rows` buffer. Stops as soon as `target`
/// is reached when target >= 0.
int bareiss_rank(std::span<std::int64_t> rows, int row_count, int cols, int target = -1);

}  // namespace stabpoly

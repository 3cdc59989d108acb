#pragma once

#include <Eigen/Core>

namespace cubic {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination to row echelon form.
///
/// After k pivots every active entry is a (k+1)x(k+1) minor of the input, so each
/// division by the previous pivot is exact. Columns without a pivot are skipped.
template <typename Derived>
Eigen::Index fraction_free_rank(Eigen::MatrixBase<Derived> const& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  Index const rows = m.rows();
  Index const cols = m.cols();
  Index rank = 0;
  Scalar previous = 1;
  Scalar product;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    Scalar const& p = m(rank, col);
    for (Index r = rank + 1; r < rows; ++r) {
      Scalar const& f = m(r, col);
      for (Index c = col + 1; c < cols; ++c) {
        product = p * m(r, c);
        product -= f * m(rank, c);
        m(r, c) = product / previous;
      }
    }
    for (Index r = rank + 1; r < rows; ++r) m(r, col) = 0;
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace cubic

#include "cutlift/ratmat.hpp"

#include <utility>

#include "cutlift/errors.hpp"

namespace cutlift {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

/*
 * Fraction-free elimination (Bareiss). Rows are first scaled by the lcm of
 * their denominators, after which every update
 *   a[i][j] = (a[r][c]*a[i][j] - a[i][c]*a[r][j]) / prev
 * divides exactly: the quotient is again a minor of the integer matrix.
 * Row scaling and row/column skipping do not change the rank.
 */
int rank_exact(const RationalMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i) {
    Int scale = 1;
    for (int j = 0; j < cols; ++j) scale = lcm(scale, denominator(m.at(i, j)));
    for (int j = 0; j < cols; ++j)
      a[i][j] = numerator(m.at(i, j)) * (scale / denominator(m.at(i, j)));
  }

  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_naive(const RationalMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

int affine_rank(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) throw Error("affine rank of an empty point set");
  const int cols = static_cast<int>(points[0].size());
  RationalMatrix diffs(static_cast<int>(points.size()) - 1, cols);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (int j = 0; j < cols; ++j)
      diffs.at(static_cast<int>(i) - 1, j) = points[i][j] - points[0][j];
  return rank_exact(diffs);
}

bool RowBasis::try_add(std::vector<Rational> row) {
  if (static_cast<int>(row.size()) != cols_) throw Error("row width mismatch");
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const Rational& lead = row[pivot_col_[b]];
    if (lead == 0) continue;
    Rational f = lead / rows_[b][pivot_col_[b]];
    for (int j = 0; j < cols_; ++j) row[j] -= f * rows_[b][j];
  }
  for (int j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      pivot_col_.push_back(j);
      rows_.push_back(std::move(row));
      return true;
    }
  }
  return false;
}

}  // namespace cutlift

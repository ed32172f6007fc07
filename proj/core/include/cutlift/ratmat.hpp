#ifndef CUTLIFT_RATMAT_HPP
#define CUTLIFT_RATMAT_HPP

#include <vector>

#include "cutlift/rational.hpp"

namespace cutlift {

// Dense matrix of exact rationals. Entries stay in lowest terms by
// construction of the underlying type; there is no floating point path.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Exact rank over Q via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Intermediate entries are minors of
// that matrix, which bounds their growth; no rational division happens in
// the inner loop.
int rank_exact(const RationalMatrix& m);

// Plain rational Gaussian elimination. Kept as an independent second route;
// the two must always agree.
int rank_naive(const RationalMatrix& m);

// Affine dimension of a point set: rank of {v - v_0}. Throws on empty input.
int affine_rank(const std::vector<std::vector<Rational>>& points);

// Incremental row basis used to pick maximal independent subsets without
// re-running a full elimination per candidate.
class RowBasis {
 public:
  explicit RowBasis(int cols) : cols_(cols) {}
  int rank() const { return static_cast<int>(rows_.size()); }
  // Adds the row if it is independent of the current basis; reports whether
  // it was added.
  bool try_add(std::vector<Rational> row);

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;  // row echelon
  std::vector<int> pivot_col_;
};

}  // namespace cutlift

#endif

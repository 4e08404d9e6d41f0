#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "sigmastab/int_types.hpp"

namespace sigmastab {

// Dense matrix over Z with arbitrary-precision entries, row major.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMat(int rows, int cols, std::initializer_list<long> entries);

  static IntMat identity(int n);
  static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
  static IntMat col_vector(const std::vector<Int>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const IntMat& o) const = default;

  bool is_zero() const;
  IntMat transpose() const;
  IntMat mul(const IntMat& rhs) const;
  IntMat add(const IntMat& rhs) const;
  IntMat sub(const IntMat& rhs) const;
  IntMat negate() const;
  IntMat scale(const Int& c) const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v
  std::vector<Int> col(int c) const;
  std::vector<Int> row(int r) const;
  void set_col(int c, const std::vector<Int>& v);

  // columns of rhs appended on the right / rows appended below
  IntMat hstack(const IntMat& rhs) const;
  IntMat vstack(const IntMat& rhs) const;
  IntMat submatrix(int r0, int c0, int nrows, int ncols) const;
  IntMat select_rows(const std::vector<int>& idx) const;

  // Kronecker product, used for tensor products of maps.
  IntMat kronecker(const IntMat& rhs) const;

  void reduce_mod(const Int& p);  // entries into [0, p)

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

// Sparse column-major matrix used for functor values: one entry list per
// column, rows strictly increasing. Most functor matrices are signed
// sub-permutations, so this keeps the exhaustive relation checks cheap.
class SparseMat {
 public:
  SparseMat() : rows_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols_init(cols)) {}

  static SparseMat identity(int n);
  static SparseMat from_dense(const IntMat& m);

  int rows() const { return rows_; }
  int cols() const { return int(cols_.size()); }

  void add_entry(int r, int c, Int v);  // must be appended in row order per column

  bool operator==(const SparseMat& o) const = default;

  SparseMat mul(const SparseMat& rhs) const;
  SparseMat add(const SparseMat& rhs) const;
  SparseMat sub(const SparseMat& rhs) const;
  IntMat dense() const;
  bool is_zero() const;
  void reduce_mod(const Int& p);

  const std::vector<std::pair<int, Int>>& column(int c) const { return cols_[c]; }

 private:
  static std::vector<std::vector<std::pair<int, Int>>> cols_init(int n) {
    return std::vector<std::vector<std::pair<int, Int>>>(n);
  }
  int rows_;
  std::vector<std::vector<std::pair<int, Int>>> cols_;
};

}  // namespace sigmastab

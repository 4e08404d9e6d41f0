#pragma once

#include <optional>
#include <vector>

#include "sigmastab/int_matrix.hpp"

namespace sigmastab {

using SparseCol = std::vector<std::pair<int, Int>>;  // (row, value), rows increasing

// Incremental integer column echelon form. Columns are inserted one at a
// time and reduced against the current pivots with Euclidean gcd steps, so
// after any number of insertions the stored columns have pairwise distinct
// topmost rows. This is the single elimination primitive behind kernels,
// lattice membership, integer solves and image accumulation.
//
// With track=true every stored column also carries a transform column
// expressing it as a combination of the inserted columns, which is what
// kernel extraction and solve() need.
class ColEchelon {
 public:
  explicit ColEchelon(int rows, bool track = false, const CancelToken* cancel = nullptr)
      : rows_(rows), track_(track), cancel_(cancel) {}

  int rows() const { return rows_; }
  int rank() const { return int(order_.size()); }
  int inserted() const { return n_inserted_; }

  // Returns true if the column enlarged the span.
  bool add(SparseCol col);
  bool add_dense(const std::vector<Int>& col);
  void add_matrix(const IntMat& m);

  bool contains(const std::vector<Int>& col) const;

  // Coefficients x (over the inserted columns) with  inserted * x = b,
  // or nullopt when b is not in the lattice. Requires track=true.
  std::optional<std::vector<Int>> solve_dense(const std::vector<Int>& b) const;

  // Basis of the lattice spanned by the inserted columns.
  IntMat basis() const;

  // Basis of {x : inserted * x = 0}. Requires track=true.
  IntMat kernel_basis() const;

 private:
  struct StoredCol {
    SparseCol c;
    SparseCol t;  // transform, in terms of inserted columns
  };
  // Reduce col (and tcol alongside) against pivots; afterwards col is either
  // empty or has a fresh topmost row. Swapping with stored pivots is allowed.
  void reduce(SparseCol& col, SparseCol& tcol, bool allow_swap);

  int rows_;
  bool track_;
  const CancelToken* cancel_;
  int n_inserted_ = 0;
  std::vector<StoredCol> store_;
  std::vector<int> pivot_of_row_;  // row -> index into store_, -1 if none (lazy sized)
  std::vector<int> order_;         // store_ indices sorted by pivot row
  std::vector<SparseCol> kernel_cols_;
};

// Convenience wrappers.
IntMat lattice_basis(const IntMat& cols, const CancelToken* cancel = nullptr);
IntMat kernel_of_matrix(const IntMat& m, const CancelToken* cancel = nullptr);
// Basis of {x : m x in colspan(lat)}.
IntMat preimage_lattice(const IntMat& m, const IntMat& lat, const CancelToken* cancel = nullptr);
// One solution of m x = b over Z, if any.
std::optional<std::vector<Int>> solve_int(const IntMat& m, const std::vector<Int>& b,
                                          const CancelToken* cancel = nullptr);
// One solution of m x = b (mod colspan(lat)).
std::optional<std::vector<Int>> solve_int_mod(const IntMat& m, const IntMat& lat,
                                              const std::vector<Int>& b,
                                              const CancelToken* cancel = nullptr);
// Matrix solve: m X = b (mod colspan(lat)), columnwise; nullopt if any column fails.
std::optional<IntMat> solve_matrix_mod(const IntMat& m, const IntMat& lat, const IntMat& b,
                                       const CancelToken* cancel = nullptr);
long rank_of_matrix(const IntMat& m, const CancelToken* cancel = nullptr);

}  // namespace sigmastab

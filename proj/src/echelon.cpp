#include "sigmastab/echelon.hpp"

#include <algorithm>

namespace sigmastab {

namespace {

// c -= q * p, both sparse and row-sorted.
SparseCol axpy(const SparseCol& c, const Int& q, const SparseCol& p) {
  SparseCol out;
  out.reserve(c.size() + p.size());
  size_t i = 0, j = 0;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.push_back(c[i++]);
    } else if (i == c.size() || p[j].first < c[i].first) {
      out.emplace_back(p[j].first, -q * p[j].second);
      ++j;
    } else {
      Int v = c[i].second - q * p[j].second;
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

SparseCol negate_col(SparseCol c) {
  for (auto& [r, v] : c) v = -v;
  return c;
}

SparseCol dense_to_sparse(const std::vector<Int>& v) {
  SparseCol c;
  for (int i = 0; i < int(v.size()); ++i)
    if (v[i] != 0) c.emplace_back(i, v[i]);
  return c;
}

// floor division so that the remainder satisfies 0 <= r < |b| ... for
// echelon reduction we want |r| minimized toward zero; truncated division
// with an extra gcd-swap loop handles the rest.
Int div_trunc(const Int& a, const Int& b) { return a / b; }

}  // namespace

void ColEchelon::reduce(SparseCol& col, SparseCol& tcol, bool allow_swap) {
  while (!col.empty()) {
    check_cancel(cancel_);
    int r = col.front().first;
    if (r >= int(pivot_of_row_.size())) pivot_of_row_.resize(rows_, -1);
    int pi = pivot_of_row_.empty() ? -1 : pivot_of_row_[r];
    if (pi < 0) return;  // fresh pivot row
    StoredCol& p = store_[pi];
    const Int& pv = p.c.front().second;
    Int q = div_trunc(col.front().second, pv);
    if (q != 0) {
      col = axpy(col, q, p.c);
      if (track_) tcol = axpy(tcol, q, p.t);
    }
    if (!col.empty() && col.front().first == r) {
      // nonzero remainder smaller than the pivot: swap roles and continue
      if (!allow_swap) throw math_error("ColEchelon: swap required in const reduction");
      std::swap(col, p.c);
      if (track_) std::swap(tcol, p.t);
    }
  }
}

bool ColEchelon::add(SparseCol col) {
  SparseCol tcol;
  if (track_) tcol.emplace_back(n_inserted_, Int(1));
  ++n_inserted_;
  reduce(col, tcol, true);
  if (col.empty()) {
    if (track_ && !tcol.empty()) kernel_cols_.push_back(std::move(tcol));
    return false;
  }
  if (col.front().second < 0) {
    col = negate_col(std::move(col));
    if (track_) tcol = negate_col(std::move(tcol));
  }
  if (pivot_of_row_.empty()) pivot_of_row_.assign(rows_, -1);
  int r = col.front().first;
  store_.push_back({std::move(col), std::move(tcol)});
  pivot_of_row_[r] = int(store_.size()) - 1;
  auto it = std::lower_bound(order_.begin(), order_.end(), r, [&](int idx, int row) {
    return store_[idx].c.front().first < row;
  });
  order_.insert(it, int(store_.size()) - 1);
  return true;
}

bool ColEchelon::add_dense(const std::vector<Int>& col) { return add(dense_to_sparse(col)); }

void ColEchelon::add_matrix(const IntMat& m) {
  for (int c = 0; c < m.cols(); ++c) add_dense(m.col(c));
}

bool ColEchelon::contains(const std::vector<Int>& b) const {
  SparseCol col = dense_to_sparse(b);
  while (!col.empty()) {
    check_cancel(cancel_);
    int r = col.front().first;
    int pi = pivot_of_row_.empty() ? -1 : pivot_of_row_[r];
    if (pi < 0) return false;
    const StoredCol& p = store_[pi];
    const Int& pv = p.c.front().second;
    if (col.front().second % pv != 0) return false;
    Int q = col.front().second / pv;
    SparseCol dummy;
    col = axpy(col, q, p.c);
  }
  return true;
}

std::optional<std::vector<Int>> ColEchelon::solve_dense(const std::vector<Int>& b) const {
  if (!track_) throw math_error("ColEchelon::solve requires transform tracking");
  SparseCol col = dense_to_sparse(b);
  SparseCol tcol;
  while (!col.empty()) {
    check_cancel(cancel_);
    int r = col.front().first;
    int pi = pivot_of_row_.empty() ? -1 : pivot_of_row_[r];
    if (pi < 0) return std::nullopt;
    const StoredCol& p = store_[pi];
    const Int& pv = p.c.front().second;
    if (col.front().second % pv != 0) return std::nullopt;
    Int q = col.front().second / pv;
    col = axpy(col, q, p.c);
    tcol = axpy(tcol, q, p.t);
  }
  // b - inserted * (-tcol) = 0, so coefficients are -tcol
  std::vector<Int> x(n_inserted_);
  for (const auto& [i, v] : tcol) x[i] = -v;
  return x;
}

IntMat ColEchelon::basis() const {
  IntMat out(rows_, rank());
  for (int j = 0; j < rank(); ++j)
    for (const auto& [r, v] : store_[order_[j]].c) out.at(r, j) = v;
  return out;
}

IntMat ColEchelon::kernel_basis() const {
  if (!track_) throw math_error("ColEchelon::kernel requires transform tracking");
  IntMat out(n_inserted_, int(kernel_cols_.size()));
  for (int j = 0; j < int(kernel_cols_.size()); ++j)
    for (const auto& [r, v] : kernel_cols_[j]) out.at(r, j) = v;
  return out;
}

IntMat lattice_basis(const IntMat& cols, const CancelToken* cancel) {
  ColEchelon e(cols.rows(), false, cancel);
  e.add_matrix(cols);
  return e.basis();
}

IntMat kernel_of_matrix(const IntMat& m, const CancelToken* cancel) {
  ColEchelon e(m.rows(), true, cancel);
  e.add_matrix(m);
  return e.kernel_basis();
}

IntMat preimage_lattice(const IntMat& m, const IntMat& lat, const CancelToken* cancel) {
  if (lat.cols() == 0) return kernel_of_matrix(m, cancel);
  IntMat k = kernel_of_matrix(m.hstack(lat), cancel);
  IntMat xpart = k.submatrix(0, 0, m.cols(), k.cols());
  return lattice_basis(xpart, cancel);
}

std::optional<std::vector<Int>> solve_int(const IntMat& m, const std::vector<Int>& b,
                                          const CancelToken* cancel) {
  ColEchelon e(m.rows(), true, cancel);
  e.add_matrix(m);
  return e.solve_dense(b);
}

std::optional<std::vector<Int>> solve_int_mod(const IntMat& m, const IntMat& lat,
                                              const std::vector<Int>& b,
                                              const CancelToken* cancel) {
  if (lat.cols() == 0) return solve_int(m, b, cancel);
  auto x = solve_int(m.hstack(lat), b, cancel);
  if (!x) return std::nullopt;
  x->resize(m.cols());
  return x;
}

std::optional<IntMat> solve_matrix_mod(const IntMat& m, const IntMat& lat, const IntMat& b,
                                       const CancelToken* cancel) {
  ColEchelon e(m.rows(), true, cancel);
  e.add_matrix(m);
  if (lat.cols() > 0) e.add_matrix(lat);
  IntMat x(m.cols(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    auto sol = e.solve_dense(b.col(c));
    if (!sol) return std::nullopt;
    for (int r = 0; r < m.cols(); ++r) x.at(r, c) = (*sol)[r];
  }
  return x;
}

long rank_of_matrix(const IntMat& m, const CancelToken* cancel) {
  ColEchelon e(m.rows(), false, cancel);
  e.add_matrix(m);
  return e.rank();
}

}  // namespace sigmastab

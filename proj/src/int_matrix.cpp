#include "sigmastab/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace sigmastab {

IntMat::IntMat(int rows, int cols, std::initializer_list<long> entries)
    : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
  if (int(entries.size()) != rows * cols) throw math_error("IntMat: bad initializer length");
  size_t i = 0;
  for (long e : entries) a_[i++] = e;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::col_vector(const std::vector<Int>& v) {
  IntMat m(int(v.size()), 1);
  for (int i = 0; i < int(v.size()); ++i) m.at(i, 0) = v[i];
  return m;
}

bool IntMat::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMat IntMat::mul(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw math_error("IntMat::mul: shape mismatch");
  IntMat out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) {
        const Int& w = rhs.at(k, c);
        if (w != 0) out.at(r, c) += v * w;
      }
    }
  return out;
}

IntMat IntMat::add(const IntMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw math_error("IntMat::add: shape mismatch");
  IntMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

IntMat IntMat::sub(const IntMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw math_error("IntMat::sub: shape mismatch");
  IntMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

IntMat IntMat::negate() const {
  IntMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

IntMat IntMat::scale(const Int& c) const {
  IntMat out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = c * a_[i];
  return out;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (int(v.size()) != cols_) throw math_error("IntMat::apply: shape mismatch");
  std::vector<Int> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
  return out;
}

std::vector<Int> IntMat::col(int c) const {
  std::vector<Int> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Int> IntMat::row(int r) const {
  std::vector<Int> v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void IntMat::set_col(int c, const std::vector<Int>& v) {
  if (int(v.size()) != rows_) throw math_error("IntMat::set_col: shape mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMat IntMat::hstack(const IntMat& rhs) const {
  if (rows_ != rhs.rows_) throw math_error("IntMat::hstack: row mismatch");
  IntMat out(rows_, cols_ + rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < rhs.cols_; ++c) out.at(r, cols_ + c) = rhs.at(r, c);
  }
  return out;
}

IntMat IntMat::vstack(const IntMat& rhs) const {
  if (cols_ != rhs.cols_) throw math_error("IntMat::vstack: col mismatch");
  IntMat out(rows_ + rhs.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  for (int r = 0; r < rhs.rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(rows_ + r, c) = rhs.at(r, c);
  return out;
}

IntMat IntMat::submatrix(int r0, int c0, int nrows, int ncols) const {
  IntMat out(nrows, ncols);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) out.at(r, c) = at(r0 + r, c0 + c);
  return out;
}

IntMat IntMat::select_rows(const std::vector<int>& idx) const {
  IntMat out(int(idx.size()), cols_);
  for (int r = 0; r < int(idx.size()); ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(idx[r], c);
  return out;
}

IntMat IntMat::kronecker(const IntMat& rhs) const {
  IntMat out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Int& v = at(r, c);
      if (v == 0) continue;
      for (int r2 = 0; r2 < rhs.rows_; ++r2)
        for (int c2 = 0; c2 < rhs.cols_; ++c2)
          out.at(r * rhs.rows_ + r2, c * rhs.cols_ + c2) = v * rhs.at(r2, c2);
    }
  return out;
}

void IntMat::reduce_mod(const Int& p) {
  for (Int& x : a_) {
    x %= p;
    if (x < 0) x += p;
  }
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << " ";
      os << m.at(r, c);
    }
  }
  os << "]";
  return os;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.cols_[i].emplace_back(i, 1);
  return m;
}

SparseMat SparseMat::from_dense(const IntMat& m) {
  SparseMat out(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r)
      if (m.at(r, c) != 0) out.cols_[c].emplace_back(r, m.at(r, c));
  return out;
}

void SparseMat::add_entry(int r, int c, Int v) {
  if (v == 0) return;
  auto& col = cols_[c];
  if (!col.empty() && col.back().first >= r)
    throw math_error("SparseMat::add_entry: rows must increase");
  col.emplace_back(r, std::move(v));
}

SparseMat SparseMat::mul(const SparseMat& rhs) const {
  if (cols() != rhs.rows_) throw math_error("SparseMat::mul: shape mismatch");
  SparseMat out(rows_, rhs.cols());
  std::vector<std::pair<int, Int>> acc;
  for (int c = 0; c < rhs.cols(); ++c) {
    acc.clear();
    for (const auto& [k, w] : rhs.cols_[c])
      for (const auto& [r, v] : cols_[k]) acc.emplace_back(r, v * w);
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& col = out.cols_[c];
    for (auto& e : acc) {
      if (!col.empty() && col.back().first == e.first)
        col.back().second += e.second;
      else
        col.push_back(std::move(e));
      if (!col.empty() && col.back().second == 0) col.pop_back();
    }
  }
  return out;
}

void SparseMat::reduce_mod(const Int& p) {
  for (auto& col : cols_) {
    std::vector<std::pair<int, Int>> kept;
    for (auto& [r, v] : col) {
      Int w = v % p;
      if (w < 0) w += p;
      if (w != 0) kept.emplace_back(r, std::move(w));
    }
    col = std::move(kept);
  }
}

SparseMat SparseMat::add(const SparseMat& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw math_error("SparseMat::add: shape mismatch");
  SparseMat out(rows_, cols());
  for (int c = 0; c < cols(); ++c) {
    auto &a = cols_[c], &b = rhs.cols_[c];
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
        out.cols_[c].push_back(a[i++]);
      else if (i == a.size() || b[j].first < a[i].first)
        out.cols_[c].push_back(b[j++]);
      else {
        Int s = a[i].second + b[j].second;
        if (s != 0) out.cols_[c].emplace_back(a[i].first, std::move(s));
        ++i, ++j;
      }
    }
  }
  return out;
}

SparseMat SparseMat::sub(const SparseMat& rhs) const {
  SparseMat neg(rhs.rows_, rhs.cols());
  for (int c = 0; c < rhs.cols(); ++c)
    for (const auto& [r, v] : rhs.cols_[c]) neg.cols_[c].emplace_back(r, -v);
  return add(neg);
}

IntMat SparseMat::dense() const {
  IntMat out(rows_, cols());
  for (int c = 0; c < cols(); ++c)
    for (const auto& [r, v] : cols_[c]) out.at(r, c) = v;
  return out;
}

bool SparseMat::is_zero() const {
  for (const auto& col : cols_)
    if (!col.empty()) return false;
  return true;
}

}  // namespace sigmastab

#include "sigmastab/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace sigmastab {

namespace {

struct Worker {
  IntMat a, u, v, uinv, vinv;
  const CancelToken* cancel;

  explicit Worker(const IntMat& m, const CancelToken* c)
      : a(m),
        u(IntMat::identity(m.rows())),
        v(IntMat::identity(m.cols())),
        uinv(IntMat::identity(m.rows())),
        vinv(IntMat::identity(m.cols())),
        cancel(c) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row j -= q * row i
  void row_op(int j, const Int& q, int i) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c)
      if (a.at(i, c) != 0) a.at(j, c) -= q * a.at(i, c);
    for (int c = 0; c < u.cols(); ++c)
      if (u.at(i, c) != 0) u.at(j, c) -= q * u.at(i, c);
    for (int r = 0; r < uinv.rows(); ++r)
      if (uinv.at(r, j) != 0) uinv.at(r, i) += q * uinv.at(r, j);
  }
  // col j -= q * col i
  void col_op(int j, const Int& q, int i) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r)
      if (a.at(r, i) != 0) a.at(r, j) -= q * a.at(r, i);
    for (int r = 0; r < v.rows(); ++r)
      if (v.at(r, i) != 0) v.at(r, j) -= q * v.at(r, i);
    for (int c = 0; c < vinv.cols(); ++c)
      if (vinv.at(j, c) != 0) vinv.at(i, c) += q * vinv.at(j, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
  }

  int count_nnz_row(int r, int from) const {
    int k = 0;
    for (int c = from; c < a.cols(); ++c)
      if (a.at(r, c) != 0) ++k;
    return k;
  }
  int count_nnz_col(int c, int from) const {
    int k = 0;
    for (int r = from; r < a.rows(); ++r)
      if (a.at(r, c) != 0) ++k;
    return k;
  }

  // Pivot choice: smallest magnitude, with a Markowitz fill estimate as the
  // tie break once the working block is large.
  bool choose_pivot(int t, int* pr, int* pc) {
    bool big = (a.rows() - t) > 64 && (a.cols() - t) > 64;
    Int best_val = 0;
    long best_fill = 0;
    bool found = false;
    for (int r = t; r < a.rows(); ++r)
      for (int c = t; c < a.cols(); ++c) {
        const Int& x = a.at(r, c);
        if (x == 0) continue;
        Int ax = abs(x);
        long fill = 0;
        if (big) fill = long(count_nnz_row(r, t) - 1) * long(count_nnz_col(c, t) - 1);
        if (!found || ax < best_val || (ax == best_val && big && fill < best_fill)) {
          best_val = ax;
          best_fill = fill;
          *pr = r;
          *pc = c;
          found = true;
        }
        if (!big && ax == 1) return true;  // cannot do better
      }
    return found;
  }

  void diagonalize() {
    int t = 0;
    int bound = std::min(a.rows(), a.cols());
    while (t < bound) {
      check_cancel(cancel);
      int pr, pc;
      if (!choose_pivot(t, &pr, &pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = false;
      while (!clean) {
        check_cancel(cancel);
        clean = true;
        for (int r = t + 1; r < a.rows(); ++r) {
          if (a.at(r, t) == 0) continue;
          Int q = a.at(r, t) / a.at(t, t);
          row_op(r, q, t);
          if (a.at(r, t) != 0) {  // remainder beats the pivot
            swap_rows(t, r);
            clean = false;
          }
        }
        for (int c = t + 1; c < a.cols(); ++c) {
          if (a.at(t, c) == 0) continue;
          Int q = a.at(t, c) / a.at(t, t);
          col_op(c, q, t);
          if (a.at(t, c) != 0) {
            swap_cols(t, c);
            clean = false;
          }
        }
      }
      if (a.at(t, t) < 0) negate_row(t);
      ++t;
    }
  }

  void fix_divisibility() {
    int bound = std::min(a.rows(), a.cols());
    bool changed = true;
    while (changed) {
      check_cancel(cancel);
      changed = false;
      for (int i = 0; i + 1 < bound; ++i) {
        const Int &di = a.at(i, i), &dj = a.at(i + 1, i + 1);
        if (di == 0 && dj != 0) {  // zeros must trail
          swap_rows(i, i + 1);
          swap_cols(i, i + 1);
          changed = true;
          continue;
        }
        if (di == 0 || dj % di == 0) continue;
        // col i += col i+1, then restore diagonal form on the 2x2 block
        col_op(i, Int(-1), i + 1);
        while (a.at(i + 1, i) != 0 || a.at(i, i + 1) != 0) {
          check_cancel(cancel);
          while (a.at(i + 1, i) != 0) {
            if (a.at(i, i) == 0) {
              swap_rows(i, i + 1);
              continue;
            }
            row_op(i + 1, a.at(i + 1, i) / a.at(i, i), i);
            if (a.at(i + 1, i) != 0) swap_rows(i, i + 1);
          }
          while (a.at(i, i + 1) != 0) {
            if (a.at(i, i) == 0) {
              swap_cols(i, i + 1);
              continue;
            }
            col_op(i + 1, a.at(i, i + 1) / a.at(i, i), i);
            if (a.at(i, i + 1) != 0) swap_cols(i, i + 1);
          }
        }
        if (a.at(i, i) < 0) negate_row(i);
        if (a.at(i + 1, i + 1) < 0) negate_row(i + 1);
        changed = true;
      }
    }
  }
};

}  // namespace

IntMat SmithForm::diagonal(int rows, int cols) const {
  IntMat m(rows, cols);
  for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
  return m;
}

SmithForm smith_normal_form(const IntMat& a, const CancelToken* cancel) {
  Worker w(a, cancel);
  w.diagonalize();
  w.fix_divisibility();
  SmithForm out;
  int bound = std::min(a.rows(), a.cols());
  out.d.resize(bound);
  for (int i = 0; i < bound; ++i) out.d[i] = w.a.at(i, i);
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  out.Uinv = std::move(w.uinv);
  out.Vinv = std::move(w.vinv);
  return out;
}

}  // namespace sigmastab

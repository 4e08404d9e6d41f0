#pragma once

#include "sigmastab/int_matrix.hpp"

namespace sigmastab {

// U * A * V = diag(d) with d[i] | d[i+1], d[i] >= 0, U and V unimodular.
struct SmithForm {
  std::vector<Int> d;
  IntMat U, V, Uinv, Vinv;

  IntMat diagonal(int rows, int cols) const;
};

SmithForm smith_normal_form(const IntMat& a, const CancelToken* cancel = nullptr);

}  // namespace sigmastab

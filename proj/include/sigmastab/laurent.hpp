#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigmastab/int_types.hpp"

namespace sigmastab {

// Univariate Laurent polynomial over Z: exponent -> coefficient, zero
// coefficients never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long exp, Int coeff) { set(exp, std::move(coeff)); }
  static LaurentPoly constant(Int c) { return LaurentPoly(0, std::move(c)); }
  static LaurentPoly t(long e = 1) { return LaurentPoly(e, 1); }

  bool is_zero() const { return c_.empty(); }
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly add(const LaurentPoly& o) const;
  LaurentPoly sub(const LaurentPoly& o) const;
  LaurentPoly mul(const LaurentPoly& o) const;
  LaurentPoly negate() const;
  // exact division; nullopt when the quotient is not a Laurent polynomial
  std::optional<LaurentPoly> div_exact(const LaurentPoly& o) const;

  Rat eval(const Rat& t0) const;
  // rational points where the polynomial vanishes
  std::vector<Rat> rational_roots() const;

  const std::map<long, Int>& terms() const { return c_; }
  std::string str() const;

 private:
  void set(long e, Int c) {
    if (c != 0) c_[e] = std::move(c);
  }
  std::map<long, Int> c_;
};

class LaurentMatrix {
 public:
  LaurentMatrix() : rows_(0), cols_(0) {}
  LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static LaurentMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const LaurentPoly& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const LaurentMatrix&) const = default;
  bool is_zero() const;

  LaurentMatrix mul(const LaurentMatrix& o) const;
  LaurentMatrix sub(const LaurentMatrix& o) const;
  // block diagonal concatenation
  LaurentMatrix dsum(const LaurentMatrix& o) const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<LaurentPoly> a_;
};

}  // namespace sigmastab

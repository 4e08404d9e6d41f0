#include "sigmastab/laurent.hpp"

#include <sstream>

namespace sigmastab {

LaurentPoly LaurentPoly::add(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.c_) {
    auto it = out.c_.find(e);
    if (it == out.c_.end())
      out.c_[e] = c;
    else {
      it->second += c;
      if (it->second == 0) out.c_.erase(it);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::sub(const LaurentPoly& o) const { return add(o.negate()); }

LaurentPoly LaurentPoly::negate() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      long e = e1 + e2;
      auto it = out.c_.find(e);
      if (it == out.c_.end()) {
        Int v = c1 * c2;
        if (v != 0) out.c_[e] = std::move(v);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) out.c_.erase(it);
      }
    }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  // long division from the top after shifting both to honest polynomials
  LaurentPoly rem = *this, quot;
  long dtop = o.c_.rbegin()->first;
  const Int& dlead = o.c_.rbegin()->second;
  while (!rem.is_zero()) {
    long rtop = rem.c_.rbegin()->first;
    const Int& rlead = rem.c_.rbegin()->second;
    if (rlead % dlead != 0) return std::nullopt;
    LaurentPoly term(rtop - dtop, rlead / dlead);
    quot = quot.add(term);
    rem = rem.sub(term.mul(o));
    if (!rem.is_zero() && rem.c_.rbegin()->first >= rtop) return std::nullopt;
  }
  return quot;
}

Rat LaurentPoly::eval(const Rat& t0) const {
  if (t0 == 0) throw math_error("LaurentPoly::eval at t=0");
  Rat out = 0;
  for (const auto& [e, c] : c_) {
    Rat p = 1;
    long k = e < 0 ? -e : e;
    for (long i = 0; i < k; ++i) p *= t0;
    if (e < 0) p = Rat(1) / p;
    out += Rat(c) * p;
  }
  return out;
}

std::vector<Rat> LaurentPoly::rational_roots() const {
  std::vector<Rat> out;
  if (is_zero()) return out;  // identically zero: callers treat separately
  // shift to an integer polynomial with nonzero constant term
  long shift = c_.begin()->first;
  Int constant = c_.begin()->second;
  Int lead = c_.rbegin()->second;
  auto divisors = [](Int v) {
    if (v < 0) v = -v;
    std::vector<Int> ds;
    for (Int d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        ds.push_back(v / d);
      }
    return ds;
  };
  (void)shift;
  for (const Int& p : divisors(constant))
    for (const Int& q : divisors(lead)) {
      for (int sign : {1, -1}) {
        Rat cand = Rat(sign * p, q);
        if (cand == 0) continue;
        if (eval(cand) == 0) {
          bool seen = false;
          for (const Rat& r : out)
            if (r == cand) seen = true;
          if (!seen) out.push_back(cand);
        }
      }
    }
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0)
      os << a;
    else {
      if (a != 1) os << a << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

LaurentMatrix LaurentMatrix::mul(const LaurentMatrix& o) const {
  if (cols_ != o.rows_) throw math_error("LaurentMatrix::mul: shape mismatch");
  LaurentMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const LaurentPoly& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) out.at(r, c) = out.at(r, c).add(v.mul(o.at(k, c)));
    }
  return out;
}

LaurentMatrix LaurentMatrix::sub(const LaurentMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("LaurentMatrix::sub: shape mismatch");
  LaurentMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).sub(o.at(r, c));
  return out;
}

LaurentMatrix LaurentMatrix::dsum(const LaurentMatrix& o) const {
  LaurentMatrix out(rows_ + o.rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  for (int r = 0; r < o.rows_; ++r)
    for (int c = 0; c < o.cols_; ++c) out.at(rows_ + r, cols_ + c) = o.at(r, c);
  return out;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace sigmastab

#include "sigmastab/burau.hpp"

#include <sstream>

#include "sigmastab/int_matrix.hpp"

namespace sigmastab {

namespace {

LaurentMatrix burau_block(int eps) {
  LaurentMatrix b(2, 2);
  if (eps > 0) {
    // [[1-t, t], [1, 0]]
    b.at(0, 0) = LaurentPoly::constant(1).sub(LaurentPoly::t());
    b.at(0, 1) = LaurentPoly::t();
    b.at(1, 0) = LaurentPoly::constant(1);
  } else {
    // exact inverse: [[0, 1], [t^-1, 1 - t^-1]]
    b.at(0, 1) = LaurentPoly::constant(1);
    b.at(1, 0) = LaurentPoly::t(-1);
    b.at(1, 1) = LaurentPoly::constant(1).sub(LaurentPoly::t(-1));
  }
  return b;
}

}  // namespace

LaurentMatrix GeneratorAssignment::sigma(int i, int n, int eps) const {
  if (n < 2 || i < 1 || i + 1 > n) throw math_error("sigma: index out of range");
  return LaurentMatrix::identity(i - 1).dsum(burau_block(eps)).dsum(LaurentMatrix::identity(n - i - 1));
}

LaurentMatrix GeneratorAssignment::iota(int n) const {
  LaurentMatrix m(n + 1, n);
  for (int i = 0; i < n; ++i) m.at(i + 1, i) = LaurentPoly::constant(1);
  return m;
}

LaurentMatrix GeneratorAssignment::pi(int n_plus_1) const {
  if (n_plus_1 < 1) throw math_error("pi: index out of range");
  LaurentMatrix m(n_plus_1 - 1, n_plus_1);
  for (int i = 0; i + 1 < n_plus_1; ++i) m.at(i, i + 1) = LaurentPoly::constant(1);
  return m;
}

GeneratorAssignment burau_assignment(int max_n) {
  if (max_n < 2) throw math_error("burau_assignment: max_n must be >= 2");
  return GeneratorAssignment{max_n};
}

bool RelationReport::all_hold() const {
  for (const auto& inst : instances)
    if (!inst.holds) return false;
  return true;
}

namespace {

std::vector<std::string> vanishing_locus(const LaurentMatrix& residual) {
  std::vector<Rat> candidates;
  bool have = false;
  for (int r = 0; r < residual.rows() && !have; ++r)
    for (int c = 0; c < residual.cols() && !have; ++c)
      if (!residual.at(r, c).is_zero()) {
        candidates = residual.at(r, c).rational_roots();
        have = true;
      }
  std::vector<std::string> out;
  for (const Rat& cand : candidates) {
    bool everywhere = true;
    for (int r = 0; r < residual.rows() && everywhere; ++r)
      for (int c = 0; c < residual.cols() && everywhere; ++c)
        if (!residual.at(r, c).is_zero() && residual.at(r, c).eval(cand) != 0) everywhere = false;
    if (everywhere) {
      std::ostringstream os;
      os << "t=" << cand;
      out.push_back(os.str());
    }
  }
  return out;
}

void push_instance(RelationReport& rep, const std::string& rel, const std::string& params,
                   const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
  RelationInstance inst;
  inst.relation = rel;
  inst.params = params;
  LaurentMatrix residual = lhs.sub(rhs);
  inst.holds = residual.is_zero();
  if (!inst.holds) {
    inst.residual = residual.str();
    inst.vanishing_locus = vanishing_locus(residual);
    inst.residual_matrix = std::move(residual);
  }
  rep.instances.push_back(std::move(inst));
}

LaurentMatrix mat_pow(const LaurentMatrix& m, int k) {
  LaurentMatrix acc = LaurentMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) acc = acc.mul(m);
  return acc;
}

std::string fmt(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : kv) {
    if (!first) os << ",";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

RelationReport check_relations(const GeneratorAssignment& a, int K) {
  RelationReport rep;
  // (i) inverses
  for (int n = 2; n <= a.max_n; ++n)
    for (int i = 1; i < n; ++i) {
      push_instance(rep, "(i)", fmt({{"i", i}, {"n", n}}),
                    a.sigma(i, n).mul(a.sigma(i, n, -1)), LaurentMatrix::identity(n));
      push_instance(rep, "(i)", fmt({{"i", i}, {"n", n}}) + ",inv-first",
                    a.sigma(i, n, -1).mul(a.sigma(i, n)), LaurentMatrix::identity(n));
    }
  // (b) braid relations
  for (int n = 3; n <= a.max_n; ++n) {
    for (int i = 1; i + 1 < n; ++i)
      push_instance(rep, "(b)", fmt({{"i", i}, {"n", n}}),
                    a.sigma(i, n).mul(a.sigma(i + 1, n)).mul(a.sigma(i, n)),
                    a.sigma(i + 1, n).mul(a.sigma(i, n)).mul(a.sigma(i + 1, n)));
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        push_instance(rep, "(b)", fmt({{"i", i}, {"j", j}, {"n", n}}),
                      a.sigma(i, n).mul(a.sigma(j, n)), a.sigma(j, n).mul(a.sigma(i, n)));
  }
  // (c) commutation with iota and pi
  for (int n = 2; n + 1 <= a.max_n; ++n)
    for (int i = 1; i < n; ++i)
      for (int eps : {+1, -1}) {
        push_instance(rep, "(c)", fmt({{"i", i}, {"n", n}, {"eps", eps}}) + ",iota",
                      a.sigma(i + 1, n + 1, eps).mul(a.iota(n)),
                      a.iota(n).mul(a.sigma(i, n, eps)));
        push_instance(rep, "(c)", fmt({{"i", i}, {"n", n}, {"eps", eps}}) + ",pi",
                      a.sigma(i, n, eps).mul(a.pi(n + 1)),
                      a.pi(n + 1).mul(a.sigma(i + 1, n + 1, eps)));
      }
  // (e) edge effects
  for (int n = 1; n + 1 <= a.max_n; ++n)
    for (int k = 0; k <= K; ++k) {
      LaurentMatrix lhs = a.pi(n + 1).mul(mat_pow(a.sigma(1, n + 1), k)).mul(a.iota(n));
      LaurentMatrix rhs = (k % 2 == 0) ? LaurentMatrix::identity(n)
                                       : a.iota(n - 1).mul(a.pi(n));
      push_instance(rep, "(e)", fmt({{"k", k}, {"n", n}}), lhs, rhs);
      if (!rep.instances.back().holds &&
          (rep.first_failure_k < 0 || k < rep.first_failure_k))
        rep.first_failure_k = k;
    }
  return rep;
}

EdgeEffect edge_effect_value(const GeneratorAssignment& a, int k, int n) {
  if (n < 1 || k < 0) throw math_error("edge_effect_value: bad parameters");
  if (n + 1 > a.max_n) throw math_error("edge_effect_value: n beyond max_n");
  EdgeEffect out;
  out.product = a.pi(n + 1).mul(mat_pow(a.sigma(1, n + 1), k)).mul(a.iota(n));
  LaurentPoly num = LaurentPoly(k, (k % 2 == 0) ? Int(1) : Int(-1)).add(LaurentPoly::t());
  LaurentPoly den = LaurentPoly::t().add(LaurentPoly::constant(1));
  auto q = num.div_exact(den);
  if (!q) throw math_error("edge_effect_value: ((-t)^k + t)/(t+1) is not exact");
  LaurentMatrix scalar(1, 1);
  scalar.at(0, 0) = *q;
  out.closed_form = scalar.dsum(LaurentMatrix::identity(n - 1));
  out.equal = (out.product == out.closed_form);
  return out;
}

RelationReport check_relations_at(const GeneratorAssignment& a, const Rat& t0, int K) {
  if (t0 == 0) throw math_error("check_relations_at: t0 must be nonzero");
  RelationReport sym = check_relations(a, K);
  RelationReport rep;
  rep.instances.reserve(sym.instances.size());
  for (auto& inst : sym.instances) {
    RelationInstance at = inst;
    if (!inst.holds) {
      bool vanishes = true;
      const LaurentMatrix& res = inst.residual_matrix;
      for (int r = 0; r < res.rows() && vanishes; ++r)
        for (int c = 0; c < res.cols() && vanishes; ++c)
          if (!res.at(r, c).is_zero() && res.at(r, c).eval(t0) != 0) vanishes = false;
      at.holds = vanishes;
      if (at.holds) {
        at.residual.clear();
        at.vanishing_locus.clear();
        at.residual_matrix = LaurentMatrix();
      }
    }
    if (!at.holds && at.relation == "(e)") {
      int k = std::stoi(at.params.substr(2, at.params.find(',') - 2));
      if (rep.first_failure_k < 0 || k < rep.first_failure_k) rep.first_failure_k = k;
    }
    rep.instances.push_back(std::move(at));
  }
  return rep;
}

IntMat evaluate_at_one(const LaurentMatrix& m) {
  IntMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      Rat v = m.at(r, c).is_zero() ? Rat(0) : m.at(r, c).eval(Rat(1));
      if (denominator(v) != 1) throw math_error("evaluate_at_one: non-integral value");
      out.at(r, c) = numerator(v);
    }
  return out;
}

}  // namespace sigmastab

#include "sigmastab/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace sigmastab {

FgAbGroup FgAbGroup::from_invariants(const std::vector<Int>& torsion, int free_rank) {
  int n = int(torsion.size()) + free_rank;
  IntMat rel(n, int(torsion.size()));
  for (int i = 0; i < int(torsion.size()); ++i) rel.at(i, i) = torsion[i];
  return FgAbGroup(n, std::move(rel));
}

std::string CanonGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

bool is_well_defined(const AbMap& f, const CancelToken* cancel) {
  if (f.m.rows() != f.tgt.ngens || f.m.cols() != f.src.ngens) return false;
  if (f.src.rel.cols() == 0) return true;
  IntMat moved = f.m.mul(f.src.rel);
  ColEchelon e(f.tgt.ngens, false, cancel);
  e.add_matrix(f.tgt.rel);
  for (int c = 0; c < moved.cols(); ++c)
    if (!e.contains(moved.col(c))) return false;
  return true;
}

AbMap compose(const AbMap& g, const AbMap& f) {
  if (g.src != f.tgt) throw math_error("compose: endpoint mismatch");
  return AbMap(f.src, g.tgt, g.m.mul(f.m));
}

bool maps_equal(const AbMap& f, const AbMap& g, const CancelToken* cancel) {
  if (f.src != g.src || f.tgt != g.tgt) return false;
  IntMat d = f.m.sub(g.m);
  if (d.is_zero()) return true;
  ColEchelon e(f.tgt.ngens, false, cancel);
  e.add_matrix(f.tgt.rel);
  for (int c = 0; c < d.cols(); ++c)
    if (!e.contains(d.col(c))) return false;
  return true;
}

Canonicalization canonicalize(const FgAbGroup& g, const CancelToken* cancel) {
  SmithForm sf = smith_normal_form(g.rel, cancel);
  std::vector<int> kept;
  std::vector<Int> torsion;
  int free_rank = 0;
  for (int i = 0; i < g.ngens; ++i) {
    Int d = i < int(sf.d.size()) ? sf.d[i] : Int(0);
    if (d == 1) continue;
    kept.push_back(i);
    if (d == 0)
      ++free_rank;
    else
      torsion.push_back(d);
  }
  Canonicalization out;
  out.invariants = CanonGroup{torsion, free_rank};
  out.group = FgAbGroup::from_invariants(torsion, free_rank);
  out.to_canon = AbMap(g, out.group, sf.U.select_rows(kept));
  IntMat from(g.ngens, int(kept.size()));
  for (int j = 0; j < int(kept.size()); ++j)
    for (int r = 0; r < g.ngens; ++r) from.at(r, j) = sf.Uinv.at(r, kept[j]);
  out.from_canon = AbMap(out.group, g, std::move(from));
  return out;
}

CanonGroup canonical_form(const FgAbGroup& g, Ring ring, const CancelToken* cancel) {
  if (ring.kind == Ring::Kind::Q) {
    int rank = g.ngens - int(rank_of_matrix(g.rel, cancel));
    return CanonGroup{{}, rank};
  }
  return canonicalize(g, cancel).invariants;
}

bool is_zero_group(const FgAbGroup& g, Ring ring, const CancelToken* cancel) {
  if (g.ngens == 0) return true;
  if (ring.kind == Ring::Kind::Q) return rank_of_matrix(g.rel, cancel) == g.ngens;
  // zero iff relations generate the full lattice Z^ngens
  ColEchelon e(g.ngens, false, cancel);
  e.add_matrix(g.rel);
  if (e.rank() < g.ngens) return false;
  IntMat id = IntMat::identity(g.ngens);
  for (int i = 0; i < g.ngens; ++i)
    if (!e.contains(id.col(i))) return false;
  return true;
}

Subgroup kernel(const AbMap& f, const CancelToken* cancel) {
  IntMat basis = preimage_lattice(f.m, f.tgt.rel, cancel);
  ColEchelon e(f.src.ngens, true, cancel);
  e.add_matrix(basis);
  IntMat rel(basis.cols(), f.src.rel.cols());
  for (int c = 0; c < f.src.rel.cols(); ++c) {
    auto y = e.solve_dense(f.src.rel.col(c));
    if (!y) throw math_error("kernel: relator escapes the preimage lattice");
    for (int r = 0; r < basis.cols(); ++r) rel.at(r, c) = (*y)[r];
  }
  FgAbGroup K(basis.cols(), std::move(rel));
  return Subgroup{K, AbMap(K, f.src, std::move(basis))};
}

Subgroup image(const AbMap& f, const CancelToken* cancel) {
  IntMat rel = preimage_lattice(f.m, f.tgt.rel, cancel);
  FgAbGroup K(f.src.ngens, std::move(rel));
  return Subgroup{K, AbMap(K, f.tgt, f.m)};
}

std::pair<FgAbGroup, AbMap> cokernel(const AbMap& f, const CancelToken*) {
  FgAbGroup q(f.tgt.ngens, f.tgt.rel.hstack(f.m));
  return {q, AbMap(f.tgt, q, IntMat::identity(f.tgt.ngens))};
}

Subgroup full_subgroup(const FgAbGroup& g) { return Subgroup{g, AbMap::identity(g)}; }

Subgroup intersect_subgroups(const std::vector<Subgroup>& parts, const CancelToken* cancel) {
  if (parts.empty()) throw math_error("intersect_subgroups: empty input");
  const FgAbGroup& ambient = parts[0].incl.tgt;
  for (const auto& p : parts) {
    if (p.incl.tgt != ambient) throw math_error("intersect_subgroups: ambient group mismatch");
    if (!is_injective(p.incl, Ring::ZZ(), cancel))
      throw math_error("intersect_subgroups: inclusion not injective");
  }
  Subgroup acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    const Subgroup& b = parts[i];
    FgAbGroup s = direct_sum(acc.grp, b.grp);
    AbMap diff(s, ambient, acc.incl.m.hstack(b.incl.m.negate()));
    Subgroup k = kernel(diff, cancel);
    IntMat first = k.incl.m.submatrix(0, 0, acc.grp.ngens, k.incl.m.cols());
    acc = Subgroup{k.grp, AbMap(k.grp, ambient, acc.incl.m.mul(first))};
  }
  return acc;
}

bool is_injective(const AbMap& f, Ring ring, const CancelToken* cancel) {
  return is_zero_group(kernel(f, cancel).grp, ring, cancel);
}

bool is_isomorphism(const AbMap& f, Ring ring, const CancelToken* cancel) {
  if (!is_injective(f, ring, cancel)) return false;
  return is_zero_group(cokernel(f, cancel).first, ring, cancel);
}

bool subgroup_contains(const Subgroup& s, const std::vector<Int>& x, Ring ring,
                       const CancelToken* cancel) {
  IntMat gens = s.incl.m.hstack(s.incl.tgt.rel);
  if (ring.kind == Ring::Kind::Q) {
    long r0 = rank_of_matrix(gens, cancel);
    IntMat aug = gens.hstack(IntMat::col_vector(x));
    return rank_of_matrix(aug, cancel) == r0;
  }
  ColEchelon e(s.incl.tgt.ngens, false, cancel);
  e.add_matrix(gens);
  return e.contains(x);
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b, Ring ring, const CancelToken* cancel) {
  if (ring.kind == Ring::Kind::Q) {
    IntMat gens = b.incl.m.hstack(b.incl.tgt.rel);
    long r0 = rank_of_matrix(gens, cancel);
    return rank_of_matrix(gens.hstack(a.incl.m), cancel) == r0;
  }
  ColEchelon e(b.incl.tgt.ngens, false, cancel);
  e.add_matrix(b.incl.m.hstack(b.incl.tgt.rel));
  for (int c = 0; c < a.incl.m.cols(); ++c)
    if (!e.contains(a.incl.m.col(c))) return false;
  return true;
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b, Ring ring, const CancelToken* cancel) {
  return subgroup_leq(a, b, ring, cancel) && subgroup_leq(b, a, ring, cancel);
}

Subgroup subgroup_sum(const std::vector<Subgroup>& parts, const CancelToken* cancel) {
  if (parts.empty()) throw math_error("subgroup_sum: empty input");
  const FgAbGroup& ambient = parts[0].incl.tgt;
  FgAbGroup s = parts[0].grp;
  IntMat m = parts[0].incl.m;
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].incl.tgt != ambient) throw math_error("subgroup_sum: ambient group mismatch");
    s = direct_sum(s, parts[i].grp);
    m = m.hstack(parts[i].incl.m);
  }
  return image(AbMap(s, ambient, std::move(m)), cancel);
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  IntMat rel(a.ngens + b.ngens, a.rel.cols() + b.rel.cols());
  for (int r = 0; r < a.ngens; ++r)
    for (int c = 0; c < a.rel.cols(); ++c) rel.at(r, c) = a.rel.at(r, c);
  for (int r = 0; r < b.ngens; ++r)
    for (int c = 0; c < b.rel.cols(); ++c) rel.at(a.ngens + r, a.rel.cols() + c) = b.rel.at(r, c);
  return FgAbGroup(a.ngens + b.ngens, std::move(rel));
}

AbMap direct_sum(const AbMap& f, const AbMap& g) {
  FgAbGroup s = direct_sum(f.src, g.src), t = direct_sum(f.tgt, g.tgt);
  IntMat m(t.ngens, s.ngens);
  for (int r = 0; r < f.m.rows(); ++r)
    for (int c = 0; c < f.m.cols(); ++c) m.at(r, c) = f.m.at(r, c);
  for (int r = 0; r < g.m.rows(); ++r)
    for (int c = 0; c < g.m.cols(); ++c) m.at(f.m.rows() + r, f.m.cols() + c) = g.m.at(r, c);
  return AbMap(std::move(s), std::move(t), std::move(m));
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  IntMat relA = a.rel.kronecker(IntMat::identity(b.ngens));
  IntMat relB = IntMat::identity(a.ngens).kronecker(b.rel);
  return FgAbGroup(a.ngens * b.ngens, relA.hstack(relB));
}

AbMap tensor(const AbMap& f, const AbMap& g) {
  return AbMap(tensor(f.src, g.src), tensor(f.tgt, g.tgt), f.m.kronecker(g.m));
}

std::vector<Int> Subquotient::class_of(const std::vector<Int>& cycle) const {
  auto c = solve_int(cycle_basis, cycle);
  if (!c) throw math_error("Subquotient::class_of: vector is not a cycle");
  return *c;
}

Subquotient homology_of_sparse_complex(const SparseMat& d_next, const FgAbGroup& B,
                                       const FgAbGroup& C, const SparseMat& d_here, Ring ring,
                                       const CancelToken* cancel) {
  (void)ring;
  if (d_here.cols() != B.ngens || d_next.rows() != B.ngens || d_here.rows() != C.ngens)
    throw math_error("homology: shapes do not compose");
  // cycle lattice {x : d_here(x) ∈ span rel_C}, via the kernel of [d_here | rel_C]
  ColEchelon ker(C.ngens, true, cancel);
  for (int c = 0; c < B.ngens; ++c) {
    SparseCol col;
    for (const auto& [r, v] : d_here.column(c)) col.emplace_back(r, v);
    ker.add(std::move(col));
  }
  for (int c = 0; c < C.rel.cols(); ++c) ker.add_dense(C.rel.col(c));
  IntMat kt = ker.kernel_basis();  // (B.ngens + rel cols) x k
  ColEchelon cyc(B.ngens, false, cancel);
  for (int c = 0; c < kt.cols(); ++c) {
    std::vector<Int> x(B.ngens);
    for (int r = 0; r < B.ngens; ++r) x[r] = kt.at(r, c);
    cyc.add_dense(x);
  }
  IntMat basis = cyc.basis();
  // coordinates of boundaries and carrier relators in the cycle basis; the
  // relator lattice of H is accumulated rather than stored columnwise
  ColEchelon coords(B.ngens, true, cancel);
  coords.add_matrix(basis);
  ColEchelon rel_acc(basis.cols(), false, cancel);
  auto push = [&](const std::vector<Int>& v) {
    check_cancel(cancel);
    auto y = coords.solve_dense(v);
    if (!y) throw math_error("homology: boundary column is not a cycle (d∘d != 0?)");
    rel_acc.add_dense(*y);
  };
  std::vector<Int> col(B.ngens);
  for (int c = 0; c < d_next.cols(); ++c) {
    std::fill(col.begin(), col.end(), Int(0));
    for (const auto& [r, v] : d_next.column(c)) col[r] = v;
    push(col);
  }
  for (int c = 0; c < B.rel.cols(); ++c) push(B.rel.col(c));

  Subquotient out;
  out.H = FgAbGroup(basis.cols(), rel_acc.basis());
  out.lift = basis;
  out.cycle_basis = std::move(basis);
  return out;
}

Subquotient homology_of_complex(const AbMap& d_next, const AbMap& d_here, Ring ring,
                                const CancelToken* cancel) {
  if (d_next.tgt != d_here.src) throw math_error("homology_of_complex: shapes do not compose");
  // composite must vanish into the relations of the right-hand group
  IntMat comp = d_here.m.mul(d_next.m);
  {
    ColEchelon e(d_here.tgt.ngens, false, cancel);
    e.add_matrix(d_here.tgt.rel);
    for (int c = 0; c < comp.cols(); ++c)
      if (!e.contains(comp.col(c))) throw math_error("homology_of_complex: d∘d != 0");
  }
  return homology_of_sparse_complex(SparseMat::from_dense(d_next.m), d_here.src, d_here.tgt,
                                    SparseMat::from_dense(d_here.m), ring, cancel);
}

AbMap induced_on_homology(const Subquotient& h, const Subquotient& h2, const AbMap& chain_map,
                          const CancelToken* cancel) {
  IntMat moved = chain_map.m.mul(h.lift);
  IntMat m(h2.H.ngens, h.H.ngens);
  for (int c = 0; c < moved.cols(); ++c) {
    auto cls = solve_int(h2.cycle_basis, moved.col(c), cancel);
    if (!cls) throw math_error("induced_on_homology: image of a cycle is not a cycle");
    for (int r = 0; r < h2.H.ngens; ++r) m.at(r, c) = (*cls)[r];
  }
  AbMap out(h.H, h2.H, std::move(m));
  if (!is_well_defined(out, cancel))
    throw math_error("induced_on_homology: boundaries are not preserved");
  return out;
}

namespace {

// System matrix for R*f.m + src.rel*Y1 = lambda*I,  R*tgt.rel + src.rel*Y2 = 0
// with unknowns [vec(R); vec(Y1); vec(Y2)] (column-major vec).
IntMat left_inverse_system(const AbMap& f) {
  int s = f.src.ngens;
  int rs = f.src.rel.cols(), rt = f.tgt.rel.cols();
  IntMat Is = IntMat::identity(s);
  IntMat top = f.m.transpose().kronecker(Is).hstack(Is.kronecker(f.src.rel))
                   .hstack(IntMat(s * s, rs * rt));
  IntMat bot = f.tgt.rel.transpose().kronecker(Is).hstack(IntMat(s * rt, s * rs))
                   .hstack(IntMat::identity(rt).kronecker(f.src.rel));
  return top.vstack(bot);
}

AbMap unpack_left_inverse(const AbMap& f, const std::vector<Int>& x) {
  int s = f.src.ngens, t = f.tgt.ngens;
  IntMat R(s, t);
  for (int c = 0; c < t; ++c)
    for (int r = 0; r < s; ++r) R.at(r, c) = x[size_t(c) * s + r];
  return AbMap(f.tgt, f.src, std::move(R));
}

}  // namespace

std::optional<SplitCertificate> left_inverse(const AbMap& f, Ring ring,
                                             const CancelToken* cancel) {
  int s = f.src.ngens;
  int rt = f.tgt.rel.cols();
  IntMat M = left_inverse_system(f);
  std::vector<Int> b(size_t(s) * s + size_t(s) * rt);
  for (int i = 0; i < s; ++i) b[size_t(i) * s + i] = 1;
  auto x = solve_int(M, b, cancel);
  if (x) {
    AbMap rho = unpack_left_inverse(f, *x);
    if (is_well_defined(rho, cancel)) return SplitCertificate{rho, Int(1)};
  }
  if (ring.kind == Ring::Kind::Q) {
    // allow rho*f = lambda*id for any lambda != 0: solve the homogeneous
    // system with lambda as one more unknown
    IntMat lam_col(M.rows(), 1);
    for (int i = 0; i < s; ++i) lam_col.at(size_t(i) * s + i, 0) = -1;
    IntMat K = kernel_of_matrix(M.hstack(lam_col), cancel);
    int lam_row = M.cols();
    for (int c = 0; c < K.cols(); ++c) {
      if (K.at(lam_row, c) == 0) continue;
      std::vector<Int> sol = K.col(c);
      Int lambda = sol[lam_row];
      if (lambda < 0) {
        for (Int& v : sol) v = -v;
        lambda = -lambda;
      }
      AbMap rho = unpack_left_inverse(f, sol);
      if (is_well_defined(rho, cancel)) return SplitCertificate{rho, lambda};
    }
  }
  return std::nullopt;
}

AbMap transport(const Canonicalization& src, const Canonicalization& tgt, const AbMap& f) {
  return AbMap(src.group, tgt.group, tgt.to_canon.m.mul(f.m).mul(src.from_canon.m));
}

}  // namespace sigmastab

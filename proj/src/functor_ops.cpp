#include "sigmastab/functor_ops.hpp"

#include <algorithm>
#include <sstream>

namespace sigmastab {

namespace {

std::vector<int> complement_of(int n, const std::vector<int>& S) {
  std::vector<char> in(n + 1, 0);
  for (int s : S) in[s] = 1;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

std::vector<int> union_of(const std::vector<std::vector<int>>& parts) {
  std::vector<int> u;
  for (const auto& p : parts) u.insert(u.end(), p.begin(), p.end());
  std::sort(u.begin(), u.end());
  return u;
}

void check_partition(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<char> seen(n + 1, 0);
  for (const auto& p : parts) {
    if (p.empty()) throw math_error("cross_effect: empty part");
    for (int s : p) {
      if (s < 1 || s > n) throw math_error("cross_effect: index out of range");
      if (seen[s]) throw math_error("cross_effect: overlapping parts");
      seen[s] = 1;
    }
  }
}

// Rebuild a functor with canonical objects, conjugating all generator
// matrices through the canonicalizations.
FunctorPtr canonical_functor(std::string name, int N, Ring ring, std::vector<FgAbGroup> objects,
                             std::vector<IntMat> gi, std::vector<IntMat> gp,
                             std::map<std::pair<int, int>, IntMat> gs,
                             const CancelToken* cancel) {
  std::vector<Canonicalization> canon;
  canon.reserve(N + 1);
  for (int n = 0; n <= N; ++n) canon.push_back(canonicalize(objects[n], cancel));
  std::vector<FgAbGroup> cobjects;
  for (int n = 0; n <= N; ++n) cobjects.push_back(canon[n].group);
  std::vector<IntMat> ci, cp;
  for (int n = 0; n < N; ++n) {
    ci.push_back(canon[n + 1].to_canon.m.mul(gi[n]).mul(canon[n].from_canon.m));
    cp.push_back(canon[n].to_canon.m.mul(gp[n]).mul(canon[n + 1].from_canon.m));
  }
  std::map<std::pair<int, int>, IntMat> cs;
  for (auto& [key, m] : gs)
    cs.emplace(key, canon[key.second].to_canon.m.mul(m).mul(canon[key.second].from_canon.m));
  auto out = std::make_shared<TruncatedFunctor>(std::move(name), N, ring, std::move(cobjects),
                                                std::move(ci), std::move(cp), std::move(cs));
  // the conjugated generators must still be homomorphisms
  for (int n = 0; n < N; ++n) {
    if (!is_well_defined(AbMap(out->object(n), out->object(n + 1), out->gen_iota(n)), cancel))
      throw math_error("canonical_functor: iota image broken");
    if (!is_well_defined(AbMap(out->object(n + 1), out->object(n), out->gen_pi(n + 1)), cancel))
      throw math_error("canonical_functor: pi image broken");
  }
  return out;
}

}  // namespace

PartialInjection iota_chain(int m, int n) {
  if (m > n) throw math_error("iota_chain: m > n");
  std::vector<int> im(m);
  for (int i = 1; i <= m; ++i) im[i - 1] = i + (n - m);
  return PartialInjection(m, n, std::move(im));
}

std::optional<AbMap> restrict_map(const AbMap& f, const Subgroup& a, const Subgroup& b,
                                  const CancelToken* cancel) {
  IntMat moved = f.m.mul(a.incl.m);
  auto X = solve_matrix_mod(b.incl.m, f.tgt.rel, moved, cancel);
  if (!X) return std::nullopt;
  AbMap out(a.grp, b.grp, std::move(*X));
  if (!is_well_defined(out, cancel)) return std::nullopt;
  return out;
}

FunctorPtr delta(const TruncatedFunctor& t, const CancelToken* cancel) {
  int N = t.truncation();
  if (N < 1) throw math_error("delta: truncation is zero");
  int M = N - 1;
  std::vector<FgAbGroup> objects;
  std::vector<Canonicalization> canon;
  for (int n = 0; n <= M; ++n) {
    AbMap in(t.object(n), t.object(n + 1), t.gen_iota(n));
    auto [q, proj] = cokernel(in, cancel);
    (void)proj;  // presentation keeps the generators of T_{n+1}
    objects.push_back(q);
    canon.push_back(canonicalize(q, cancel));
  }
  auto induced = [&](const PartialInjection& f) {
    // value on cokernels descends from T(Sf) through the canonicalizations
    const IntMat& big = t.eval(f.stabilize()).dense();
    return canon[f.target()].to_canon.m.mul(big).mul(canon[f.source()].from_canon.m);
  };
  std::vector<IntMat> gi, gp;
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 0; n < M; ++n) {
    gi.push_back(induced(PartialInjection::iota(n)));
    gp.push_back(induced(PartialInjection::pi(n + 1)));
  }
  for (int n = 2; n <= M; ++n)
    for (int i = 1; i < n; ++i)
      gs.emplace(std::make_pair(i, n), induced(PartialInjection::transposition(i, n)));
  std::vector<FgAbGroup> cobjects;
  for (auto& c : canon) cobjects.push_back(c.group);
  auto out = std::make_shared<TruncatedFunctor>("D(" + t.name() + ")", M, t.ring(),
                                                std::move(cobjects), std::move(gi), std::move(gp),
                                                std::move(gs));
  auto rep = out->validate_atoms(std::min(M, 2), cancel);
  if (!rep.ok) throw math_error("delta: induced functor fails functoriality: " + rep.failure);
  return out;
}

std::string DegreeResult::str() const {
  if (exact) return std::to_string(value);
  return ">= " + std::to_string(value) + " (indeterminate at this truncation)";
}

DegreeResult degree(const TruncatedFunctor& t, const CancelToken* cancel) {
  FunctorPtr cur;
  const TruncatedFunctor* p = &t;
  for (int j = 0;; ++j) {
    if (p->is_zero(cancel)) return DegreeResult{j - 1, true};
    if (p->truncation() == 0) return DegreeResult{j, false};
    cur = delta(*p, cancel);
    p = cur.get();
  }
}

std::string HeightResult::str() const {
  if (exact) return std::to_string(value);
  return ">= " + std::to_string(value) + " (indeterminate at this truncation)";
}

CrossEffect cross_effect_projector(const TruncatedFunctor& t, int n,
                                   const std::vector<std::vector<int>>& partition,
                                   const CancelToken* cancel) {
  check_partition(n, partition);
  std::vector<int> S = union_of(partition);
  const FgAbGroup& Tn = t.object(n);
  IntMat P = t.eval_dense(PartialInjection::forget(n, complement_of(n, S)));
  IntMat id = IntMat::identity(Tn.ngens);
  for (const auto& part : partition) {
    if (part.size() != 1) throw math_error("cross_effect_projector: partition must be discrete");
    IntMat q = id.sub(t.eval_dense(PartialInjection::forget(n, part)));
    P = P.mul(q);
  }
  if (t.ring().kind == Ring::Kind::Fp) P.reduce_mod(Int(t.ring().p));
  CrossEffect out{n, partition, image(AbMap(Tn, Tn, P), cancel), {}};
  out.invariants = canonical_form(out.sub.grp, t.ring(), cancel);
  return out;
}

CrossEffect cross_effect_intersection(const TruncatedFunctor& t, int n,
                                      const std::vector<std::vector<int>>& partition,
                                      const CancelToken* cancel) {
  check_partition(n, partition);
  std::vector<int> S = union_of(partition);
  const FgAbGroup& Tn = t.object(n);
  std::vector<Subgroup> parts;
  parts.push_back(image(t.eval_map(PartialInjection::forget(n, complement_of(n, S))), cancel));
  for (const auto& part : partition)
    parts.push_back(kernel(t.eval_map(PartialInjection::forget(n, part)), cancel));
  CrossEffect out{n, partition, intersect_subgroups(parts, cancel), {}};
  out.invariants = canonical_form(out.sub.grp, t.ring(), cancel);
  return out;
}

CrossEffect cross_effect(const TruncatedFunctor& t, int n,
                         const std::vector<std::vector<int>>& partition,
                         const CancelToken* cancel) {
  bool discrete = true;
  for (const auto& p : partition)
    if (p.size() != 1) discrete = false;
  return discrete ? cross_effect_projector(t, n, partition, cancel)
                  : cross_effect_intersection(t, n, partition, cancel);
}

CrossEffect top_cross_effect(const TruncatedFunctor& t, int n, int k, const CancelToken* cancel) {
  if (k < 0 || k > n) throw math_error("top_cross_effect: k out of range");
  std::vector<std::vector<int>> partition;
  for (int i = n - k + 1; i <= n; ++i) partition.push_back({i});
  return cross_effect_projector(t, n, partition, cancel);
}

HeightResult height(const TruncatedFunctor& t, const CancelToken* cancel) {
  int N = t.truncation();
  HeightResult out;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) {
      check_cancel(cancel);
      CrossEffect ce = top_cross_effect(t, n, k, cancel);
      if (!ce.invariants.is_zero() && k > out.value) {
        out.value = k;
        out.witness_n = n;
        out.witness_k = k;
      }
    }
  if (N >= 0) {
    CrossEffect top = top_cross_effect(t, N, N, cancel);
    out.exact = top.invariants.is_zero();
    if (!out.exact) out.value = std::max(out.value, N);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> q;
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1) q.push_back(b + 1);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> discrete(const std::vector<int>& S) {
  std::vector<std::vector<int>> parts;
  for (int s : S) parts.push_back({s});
  return parts;
}

std::vector<int> apply_perm_to_set(const PartialInjection& g, const std::vector<int>& S) {
  std::vector<int> out;
  for (int s : S) out.push_back(g.apply(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DecompositionReport decompose(const TruncatedFunctor& t, int n, const CancelToken* cancel) {
  if (n > t.truncation()) throw math_error("decompose: object beyond truncation");
  Ring ring = t.ring();
  DecompositionReport rep;
  rep.n = n;
  std::map<std::vector<int>, Subgroup> subs;
  for (const auto& Q : all_subsets(n)) {
    CrossEffect ce = cross_effect_projector(t, n, discrete(Q), cancel);
    rep.summands.emplace(Q, ce.invariants);
    subs.emplace(Q, ce.sub);
  }

  // witness: ⊕_Q T_n[Q^δ] -> T_n by the inclusions
  FgAbGroup sum = FgAbGroup::zero();
  IntMat m(t.object(n).ngens, 0);
  for (auto& [Q, s] : subs) {
    sum = direct_sum(sum, s.grp);
    m = m.hstack(s.incl.m);
  }
  AbMap witness(sum, t.object(n), std::move(m));
  rep.witness_iso = is_isomorphism(witness, ring, cancel);
  rep.ranks_match =
      canonical_form(sum, ring, cancel) == canonical_form(t.object(n), ring, cancel);
  if (!rep.witness_iso) rep.failure = "summand inclusions do not give an isomorphism";
  if (!rep.ranks_match && rep.failure.empty()) rep.failure = "invariants of the sum differ";

  // permutations permute the summands through the action on subsets;
  // adjacent transpositions generate, so checking them suffices
  rep.equivariance_ok = true;
  for (int i = 1; i < n && rep.equivariance_ok; ++i) {
    PartialInjection g = PartialInjection::transposition(i, n);
    for (auto& [Q, s] : subs) {
      check_cancel(cancel);
      std::vector<int> gQ = apply_perm_to_set(g, Q);
      Subgroup moved{s.grp, AbMap(s.grp, t.object(n), t.eval_dense(g).mul(s.incl.m))};
      if (!subgroups_equal(moved, subs.at(gQ), ring, cancel)) {
        rep.equivariance_ok = false;
        rep.failure = "summand not permuted correctly by a transposition";
        break;
      }
    }
  }
  // G_n^k = Sigma_{n-k} x Sigma_k preserves T_n^k
  for (int k = 0; k <= n && rep.equivariance_ok; ++k) {
    std::vector<int> topQ;
    for (int i = n - k + 1; i <= n; ++i) topQ.push_back(i);
    const Subgroup& top = subs.at(topQ);
    for (int i = 1; i < n; ++i) {
      if (i == n - k) continue;  // the one generator crossing the blocks
      PartialInjection g = PartialInjection::transposition(i, n);
      Subgroup moved{top.grp, AbMap(top.grp, t.object(n), t.eval_dense(g).mul(top.incl.m))};
      if (!subgroup_leq(moved, top, ring, cancel)) {
        rep.equivariance_ok = false;
        rep.failure = "G_n^k does not preserve T_n^k at k=" + std::to_string(k);
        break;
      }
    }
  }
  return rep;
}

FunctorPtr functor_direct_sum(const TruncatedFunctor& a, const TruncatedFunctor& b,
                              const CancelToken* cancel) {
  if (a.truncation() != b.truncation()) throw math_error("direct_sum: truncation mismatch");
  if (!(a.ring() == b.ring())) throw math_error("direct_sum: ring mismatch");
  int N = a.truncation();
  std::vector<FgAbGroup> objects;
  std::vector<IntMat> gi, gp;
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 0; n <= N; ++n) objects.push_back(direct_sum(a.object(n), b.object(n)));
  for (int n = 0; n < N; ++n) {
    gi.push_back(direct_sum(AbMap(a.object(n), a.object(n + 1), a.gen_iota(n)),
                            AbMap(b.object(n), b.object(n + 1), b.gen_iota(n)))
                     .m);
    gp.push_back(direct_sum(AbMap(a.object(n + 1), a.object(n), a.gen_pi(n + 1)),
                            AbMap(b.object(n + 1), b.object(n), b.gen_pi(n + 1)))
                     .m);
  }
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i)
      gs.emplace(std::make_pair(i, n),
                 direct_sum(AbMap(a.object(n), a.object(n), a.gen_sigma(i, n)),
                            AbMap(b.object(n), b.object(n), b.gen_sigma(i, n)))
                     .m);
  return canonical_functor(a.name() + "+" + b.name(), N, a.ring(), std::move(objects),
                           std::move(gi), std::move(gp), std::move(gs), cancel);
}

FunctorPtr functor_tensor(const TruncatedFunctor& a, const TruncatedFunctor& b,
                          const CancelToken* cancel) {
  if (a.truncation() != b.truncation()) throw math_error("tensor: truncation mismatch");
  if (!(a.ring() == b.ring())) throw math_error("tensor: ring mismatch");
  int N = a.truncation();
  std::vector<FgAbGroup> objects;
  std::vector<IntMat> gi, gp;
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 0; n <= N; ++n) objects.push_back(tensor(a.object(n), b.object(n)));
  for (int n = 0; n < N; ++n) {
    gi.push_back(a.gen_iota(n).kronecker(b.gen_iota(n)));
    gp.push_back(a.gen_pi(n + 1).kronecker(b.gen_pi(n + 1)));
  }
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i)
      gs.emplace(std::make_pair(i, n), a.gen_sigma(i, n).kronecker(b.gen_sigma(i, n)));
  return canonical_functor("(" + a.name() + ")x(" + b.name() + ")", N, a.ring(),
                           std::move(objects), std::move(gi), std::move(gp), std::move(gs),
                           cancel);
}

FunctorPtr tensor_with_group(const TruncatedFunctor& a, const FgAbGroup& g,
                             const CancelToken* cancel) {
  int N = a.truncation();
  std::vector<FgAbGroup> objects;
  std::vector<IntMat> gi, gp;
  std::map<std::pair<int, int>, IntMat> gs;
  IntMat idg = IntMat::identity(g.ngens);
  for (int n = 0; n <= N; ++n) objects.push_back(tensor(a.object(n), g));
  for (int n = 0; n < N; ++n) {
    gi.push_back(a.gen_iota(n).kronecker(idg));
    gp.push_back(a.gen_pi(n + 1).kronecker(idg));
  }
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i)
      gs.emplace(std::make_pair(i, n), a.gen_sigma(i, n).kronecker(idg));
  return canonical_functor("(" + a.name() + ")xA", N, a.ring(), std::move(objects), std::move(gi),
                           std::move(gp), std::move(gs), cancel);
}

namespace {

// ordered set partitions of S into at least `min_parts` nonempty parts
void ordered_partitions_rec(const std::vector<int>& S, size_t idx,
                            std::vector<std::vector<int>>& cur,
                            std::vector<std::vector<std::vector<int>>>& out, size_t min_parts) {
  if (idx == S.size()) {
    if (cur.size() >= min_parts) out.push_back(cur);
    return;
  }
  for (auto& part : cur) {
    part.push_back(S[idx]);
    ordered_partitions_rec(S, idx + 1, cur, out, min_parts);
    part.pop_back();
  }
  cur.push_back({S[idx]});
  ordered_partitions_rec(S, idx + 1, cur, out, min_parts);
  cur.pop_back();
}

std::vector<std::vector<std::vector<int>>> ordered_partitions(const std::vector<int>& S,
                                                              size_t min_parts) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  ordered_partitions_rec(S, 0, cur, out, min_parts);
  return out;
}

std::string partition_str(int n, const std::vector<std::vector<int>>& parts) {
  std::ostringstream os;
  os << "n=" << n << " [";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "|";
    for (size_t j = 0; j < parts[i].size(); ++j) {
      if (j) os << ",";
      os << parts[i][j];
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

LemmaSuiteReport verify_lemma_suite(const TruncatedFunctor& t, int bound,
                                    const CancelToken* cancel) {
  LemmaSuiteReport rep;
  Ring ring = t.ring();
  int N = t.truncation();

  // (i) iota_m^n restricts to a bijection T_m^k -> T_n^k
  int bij_bound = std::min(N, std::max(bound, 5));
  for (int m = 0; m <= bij_bound && rep.bijection_ok; ++m)
    for (int n = m + 1; n <= bij_bound && rep.bijection_ok; ++n)
      for (int k = 0; k <= m; ++k) {
        check_cancel(cancel);
        CrossEffect X = top_cross_effect(t, m, k, cancel);
        CrossEffect Y = top_cross_effect(t, n, k, cancel);
        auto restricted = restrict_map(t.eval_map(iota_chain(m, n)), X.sub, Y.sub, cancel);
        if (!restricted || !is_isomorphism(*restricted, ring, cancel)) {
          rep.bijection_ok = false;
          rep.failure = "iota does not restrict to a bijection T_" + std::to_string(m) + "^" +
                        std::to_string(k) + " -> T_" + std::to_string(n) + "^" + std::to_string(k);
        }
      }

  // (ii) split three-term decomposition of T_n[S1 ⊔ S2 | rest]
  int ses_bound = std::min(N, bound);
  for (int n = 0; n <= ses_bound && rep.ses_ok; ++n) {
    for (const auto& S : all_subsets(n)) {
      if (S.size() < 2) continue;
      for (const auto& parts : ordered_partitions(S, 2)) {
        check_cancel(cancel);
        std::vector<std::vector<int>> rest(parts.begin() + 2, parts.end());
        auto with = [&](std::initializer_list<std::vector<int>> firsts) {
          std::vector<std::vector<int>> ps(firsts);
          ps.insert(ps.end(), rest.begin(), rest.end());
          return ps;
        };
        std::vector<int> s12 = parts[0];
        s12.insert(s12.end(), parts[1].begin(), parts[1].end());
        std::sort(s12.begin(), s12.end());
        Subgroup lhs = cross_effect(t, n, with({s12}), cancel).sub;
        Subgroup a = cross_effect(t, n, with({parts[0]}), cancel).sub;
        Subgroup b = cross_effect(t, n, with({parts[1]}), cancel).sub;
        Subgroup c = cross_effect(t, n, with({parts[0], parts[1]}), cancel).sub;
        FgAbGroup sumg = direct_sum(direct_sum(a.grp, b.grp), c.grp);
        AbMap sum_map(sumg, t.object(n), a.incl.m.hstack(b.incl.m).hstack(c.incl.m));
        if (!is_injective(sum_map, ring, cancel) ||
            !subgroups_equal(image(sum_map, cancel), lhs, ring, cancel)) {
          rep.ses_ok = false;
          rep.failure = "three-term splitting fails at " + partition_str(n, parts);
          break;
        }
      }
      if (!rep.ses_ok) break;
    }
  }

  // (iii) T_n[S|R^δ] = ⊕_{∅≠Q⊆S} T_n[(Q⊔R)^δ], equality of subgroups
  int gen_bound = std::min(N, std::min(bound + 1, 5));
  for (int n = 0; n <= gen_bound && rep.decomp_general_ok; ++n) {
    for (const auto& S : all_subsets(n)) {
      if (S.empty()) continue;
      for (const auto& R : all_subsets(n)) {
        bool disjoint = true;
        for (int r : R)
          if (std::find(S.begin(), S.end(), r) != S.end()) disjoint = false;
        if (!disjoint) continue;
        check_cancel(cancel);
        std::vector<std::vector<int>> parts{S};
        for (int r : R) parts.push_back({r});
        Subgroup lhs = cross_effect(t, n, parts, cancel).sub;
        std::vector<Subgroup> pieces;
        IntMat m(t.object(n).ngens, 0);
        FgAbGroup sumg = FgAbGroup::zero();
        for (const auto& Q : all_subsets(int(S.size()))) {
          if (Q.empty()) continue;
          std::vector<int> QR;
          for (int qi : Q) QR.push_back(S[qi - 1]);
          QR.insert(QR.end(), R.begin(), R.end());
          std::sort(QR.begin(), QR.end());
          Subgroup piece = cross_effect(t, n, discrete(QR), cancel).sub;
          sumg = direct_sum(sumg, piece.grp);
          m = m.hstack(piece.incl.m);
        }
        AbMap sum_map(sumg, t.object(n), std::move(m));
        if (!is_injective(sum_map, ring, cancel) ||
            !subgroups_equal(image(sum_map, cancel), lhs, ring, cancel)) {
          rep.decomp_general_ok = false;
          rep.failure = "general decomposition fails at " + partition_str(n, parts);
          break;
        }
      }
      if (!rep.decomp_general_ok) break;
    }
  }

  // (iv) height <= degree whenever both determinate
  DegreeResult d = degree(t, cancel);
  HeightResult h = height(t, cancel);
  if (d.exact && h.exact && h.value > d.value) {
    rep.height_le_degree = false;
    rep.failure = "height " + std::to_string(h.value) + " exceeds degree " +
                  std::to_string(d.value);
  }
  return rep;
}

}  // namespace sigmastab

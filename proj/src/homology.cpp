#include "sigmastab/homology.hpp"

#include <algorithm>

#include "sigmastab/echelon.hpp"

namespace sigmastab {

namespace {

long tuples_count(long q, int d) {
  long t = 1;
  for (int i = 0; i < d; ++i) {
    if (t > (1L << 40) / std::max(q, 1L)) return 1L << 40;
    t *= q;
  }
  return t;
}

// decode mixed-radix tuple index into nonidentity element indices g_1..g_d
void decode_tuple(long idx, long q, int d, std::vector<int>& out) {
  out.resize(d);
  for (int i = 0; i < d; ++i) {
    out[i] = int(idx % q) + 1;
    idx /= q;
  }
}

long encode_tuple(const std::vector<int>& g, long q) {
  long idx = 0;
  for (int i = int(g.size()) - 1; i >= 0; --i) idx = idx * q + (g[i] - 1);
  return idx;
}

void check_caps(const GModule& m, int d, const HomologyCaps& caps) {
  bool field = m.ring().is_field();
  long max_order = field ? caps.group_order_field : caps.group_order_z;
  int max_deg = field ? caps.max_deg_field : caps.max_deg_z;
  if (m.group()->order() > max_order)
    throw CapExceeded("bar complex: group order " + std::to_string(m.group()->order()) +
                      " exceeds the cap " + std::to_string(max_order) + " for ring " +
                      m.ring().str());
  if (d > max_deg)
    throw CapExceeded("bar complex: degree " + std::to_string(d) + " exceeds the cap " +
                      std::to_string(max_deg) + " for ring " + m.ring().str());
  long q = m.group()->order() - 1;
  long cols = tuples_count(q, d + 1) * std::max(m.carrier().ngens, 1);
  if (cols > caps.bar_max_columns)
    throw CapExceeded("bar complex: " + std::to_string(cols) +
                      " columns at degree " + std::to_string(d + 1) + " exceed the cap " +
                      std::to_string(caps.bar_max_columns));
}

// boundary of the normalized bar complex at degree k, as a sparse matrix
// C_k -> C_{k-1} with blocks of size rank(M)
SparseMat bar_boundary(const GModule& m, int k) {
  const auto& G = *m.group();
  long q = G.order() - 1;
  int r = m.carrier().ngens;
  long src_tuples = tuples_count(q, k), tgt_tuples = tuples_count(q, k - 1);
  SparseMat out(int(tgt_tuples * r), int(src_tuples * r));
  if (k == 0) return out;
  std::vector<int> g, h;
  std::vector<std::pair<int, Int>> entries;
  for (long t = 0; t < src_tuples; ++t) {
    decode_tuple(t, q, k, g);
    for (int c = 0; c < r; ++c) {
      entries.clear();
      // leading face: act by g_1^{-1} on the coefficient
      {
        h.assign(g.begin() + 1, g.end());
        long tt = encode_tuple(h, q);
        const IntMat& act = m.action(G.inv(g[0]));
        for (int rr = 0; rr < r; ++rr)
          if (act.at(rr, c) != 0) entries.emplace_back(int(tt * r + rr), act.at(rr, c));
      }
      // inner faces: merge adjacent entries, dropping degenerate tuples
      for (int i = 1; i < k; ++i) {
        int prod = G.mul(g[i - 1], g[i]);
        if (prod == 0) continue;
        h = g;
        h.erase(h.begin() + i);
        h[i - 1] = prod;
        long tt = encode_tuple(h, q);
        entries.emplace_back(int(tt * r + c), (i % 2) ? Int(-1) : Int(1));
      }
      // trailing face
      {
        h.assign(g.begin(), g.end() - 1);
        long tt = encode_tuple(h, q);
        entries.emplace_back(int(tt * r + c), (k % 2) ? Int(-1) : Int(1));
      }
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      // combine duplicates
      std::pair<int, Int> cur{-1, 0};
      for (auto& e : entries) {
        if (e.first == cur.first)
          cur.second += e.second;
        else {
          if (cur.first >= 0 && cur.second != 0) out.add_entry(cur.first, int(t * r + c), cur.second);
          cur = e;
        }
      }
      if (cur.first >= 0 && cur.second != 0) out.add_entry(cur.first, int(t * r + c), cur.second);
    }
  }
  return out;
}

FgAbGroup chain_group(const GModule& m, long tuples) {
  FgAbGroup g = FgAbGroup::zero();
  for (long t = 0; t < tuples; ++t) g = direct_sum(g, m.carrier());
  return g;
}

}  // namespace

Subquotient bar_complex_homology(const GModule& m, int d, const HomologyCaps& caps,
                                 const CancelToken* cancel) {
  check_caps(m, d, caps);
  if (m.ring().kind == Ring::Kind::Fp && m.ring().p != 2 && false) {}
  long q = m.group()->order() - 1;
  FgAbGroup Cd = chain_group(m, tuples_count(q, d));
  FgAbGroup Cprev = d == 0 ? FgAbGroup::zero() : chain_group(m, tuples_count(q, d - 1));
  SparseMat dd = d == 0 ? SparseMat(0, Cd.ngens) : bar_boundary(m, d);
  SparseMat dn = bar_boundary(m, d + 1);
  return homology_of_sparse_complex(dn, Cd, Cprev, dd, m.ring(), cancel);
}

HomologyValue bar_homology(const GModule& m, int d, const HomologyCaps& caps,
                           const CancelToken* cancel) {
  Subquotient sq = bar_complex_homology(m, d, caps, cancel);
  return HomologyValue{sq.H, canonical_form(sq.H, m.ring(), cancel)};
}

IntMat bar_chain_map(const GModule& ma, const GModule& mb, const GroupHom& phi,
                     const IntMat& iota, int d, const HomologyCaps& caps) {
  (void)caps;
  long qa = ma.group()->order() - 1, qb = mb.group()->order() - 1;
  int ra = ma.carrier().ngens, rb = mb.carrier().ngens;
  long ta = tuples_count(qa, d), tb = tuples_count(qb, d);
  IntMat out(int(tb * rb), int(ta * ra));
  std::vector<int> g, h;
  for (long t = 0; t < ta; ++t) {
    decode_tuple(t, qa, d, g);
    h.resize(d);
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      h[i] = phi.image[g[i]];
      if (h[i] == 0) ok = false;  // injective maps cannot hit the identity
    }
    if (!ok) throw math_error("bar_chain_map: group map not injective");
    long tt = encode_tuple(h, qb);
    for (int rr = 0; rr < rb; ++rr)
      for (int cc = 0; cc < ra; ++cc)
        if (iota.at(rr, cc) != 0) out.at(int(tt * rb + rr), int(t * ra + cc)) = iota.at(rr, cc);
  }
  if (mb.ring().kind == Ring::Kind::Fp) out.reduce_mod(Int(mb.ring().p));
  return out;
}

Subquotient resolution_homology(const FreeResolution& res, const GModule& m, int d,
                                const CancelToken* cancel) {
  if (res.max_degree() < d + 1) throw math_error("resolution_homology: resolution too short");
  CoeffComplex cx = coefficient_complex(res, m, d + 1);
  AbMap dd = d == 0 ? AbMap::zero_map(cx.C[0], FgAbGroup::zero()) : cx.d[d];
  return homology_of_complex(cx.d[d + 1], dd, m.ring(), cancel);
}

bool h0_matches_coinvariants(const GModule& m, const Subquotient& h0, Ring ring,
                             const CancelToken* cancel) {
  auto [coinv, proj] = coinvariants(m, cancel);
  return canonical_form(h0.H, ring, cancel) == canonical_form(coinv, ring, cancel);
}

GModule functor_module(const TruncatedFunctor& t, int n, const CancelToken* cancel) {
  (void)cancel;
  PermGroupPtr G = PermGroup::symmetric(n);
  std::vector<IntMat> acts;
  for (int i = 1; i < n; ++i) acts.push_back(t.eval_dense(PartialInjection::transposition(i, n)));
  if (n <= 1) acts.clear();
  return GModule(G, t.object(n), std::move(acts), t.ring());
}

std::vector<DecompositionBlock> decomposition_blocks(const TruncatedFunctor& t, int n,
                                                     const CancelToken* cancel) {
  std::vector<DecompositionBlock> out;
  for (int k = 0; k <= n; ++k) {
    CrossEffect ce = top_cross_effect(t, n, k, cancel);
    if (ce.invariants.is_zero() && is_zero_group(ce.sub.grp, t.ring(), cancel)) continue;
    PermGroupPtr P = PermGroup::young({n - k, k});
    // action of the Young generators on the summand, through the inclusion
    std::vector<IntMat> acts;
    for (int gi : P->generators()) {
      const auto& perm = P->elements()[gi];
      PartialInjection pi = PartialInjection::permutation(perm);
      auto restricted = restrict_map(t.eval_map(pi), ce.sub, ce.sub, cancel);
      if (!restricted)
        throw math_error("decomposition_blocks: summand not preserved by the Young subgroup");
      acts.push_back(restricted->m);
    }
    GModule mod(P, ce.sub.grp, std::move(acts), t.ring());
    // the first factor must act trivially (the summand is pulled back)
    int idx = 0;
    for (int gi : P->generators()) {
      const auto& perm = P->elements()[gi];
      bool first_block = true;
      for (int j = n - k + 1; j <= n; ++j)
        if (perm[j - 1] != j) first_block = false;
      if (first_block) {
        AbMap a(mod.carrier(), mod.carrier(), mod.action(gi));
        if (!maps_equal(a, AbMap::identity(mod.carrier()), cancel))
          throw math_error("decomposition_blocks: point-forgetting factor acts nontrivially");
      }
      ++idx;
    }
    out.push_back(DecompositionBlock{k, P, std::move(mod), ce.sub});
  }
  return out;
}

bool ShapiroCertificate::all_agree() const {
  for (const auto& c : cells)
    if (!c.skipped && !c.agree) return false;
  return true;
}

int ShapiroCertificate::computed_cells() const {
  int n = 0;
  for (const auto& c : cells)
    if (!c.skipped) ++n;
  return n;
}

ShapiroCertificate shapiro_reduce(const TruncatedFunctor& t, int n, int k, int max_deg,
                                  const HomologyCaps& caps, const CancelToken* cancel) {
  ShapiroCertificate cert;
  cert.n = n;
  cert.k = k;
  auto blocks = decomposition_blocks(t, n, cancel);
  const DecompositionBlock* blk = nullptr;
  for (auto& b : blocks)
    if (b.k == k) blk = &b;
  if (!blk) throw math_error("shapiro_reduce: T_n^k vanishes");
  PermGroupPtr G = PermGroup::symmetric(n);
  GModule ind = induced_module(G, blk->group, blk->module);
  Ring ring = t.ring();
  for (int d = 0; d <= max_deg; ++d) {
    ShapiroCell cell;
    cell.d = d;
    // reduced side: the Young subgroup with the summand coefficients
    if (ring.kind == Ring::Kind::Q) {
      if (d == 0) {
        auto [coinv, proj] = coinvariants(blk->module, cancel);
        cell.reduced_side = canonical_form(coinv, ring, cancel);
      } else {
        cell.reduced_side = CanonGroup{};
      }
    } else {
      FreeResolution res = small_resolution(blk->group, d + 1, ring, cancel);
      Subquotient sq = resolution_homology(res, blk->module, d, cancel);
      cell.reduced_side = canonical_form(sq.H, ring, cancel);
    }
    // induced side: the full symmetric group by the bar complex
    try {
      HomologyValue hv = bar_homology(ind, d, caps, cancel);
      cell.induced_side = hv.invariants;
      cell.agree = (cell.induced_side == cell.reduced_side);
    } catch (const CapExceeded&) {
      cell.skipped = true;
    }
    cert.cells.push_back(std::move(cell));
  }
  return cert;
}

BarStabMap bar_stabilisation_map(const TruncatedFunctor& t, int n, int d,
                                 const HomologyCaps& caps, const CancelToken* cancel) {
  if (n + 1 > t.truncation()) throw math_error("bar_stabilisation_map: beyond truncation");
  GModule a = functor_module(t, n, cancel);
  GModule b = functor_module(t, n + 1, cancel);
  // the group inclusion acts on the last n letters, matching iota's shift
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 2;
  GroupHom phi = GroupHom::from_letter_map(a.group(), b.group(), letters);
  const IntMat& iota = t.gen_iota(n);
  // the coefficient map must be equivariant for the shifted inclusion
  for (size_t gi = 0; gi < a.group()->generators().size(); ++gi) {
    int g = a.group()->generators()[gi];
    IntMat lhs = iota.mul(a.action(g));
    IntMat rhs = b.action(phi.image[g]).mul(iota);
    AbMap l(a.carrier(), b.carrier(), lhs), r(a.carrier(), b.carrier(), rhs);
    if (!maps_equal(l, r, cancel))
      throw math_error("bar_stabilisation_map: coefficient map is not equivariant");
  }
  BarStabMap out{bar_complex_homology(a, d, caps, cancel),
                 bar_complex_homology(b, d, caps, cancel), AbMap()};
  IntMat chain = bar_chain_map(a, b, phi, iota, d, caps);
  long qa = a.group()->order() - 1, qb = b.group()->order() - 1;
  FgAbGroup Ca = chain_group(a, tuples_count(qa, d));
  FgAbGroup Cb = chain_group(b, tuples_count(qb, d));
  out.map = induced_on_homology(out.src, out.tgt, AbMap(Ca, Cb, std::move(chain)), cancel);
  return out;
}

}  // namespace sigmastab

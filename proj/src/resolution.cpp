#include "sigmastab/resolution.hpp"

#include <algorithm>

#include "sigmastab/echelon.hpp"

namespace sigmastab {

namespace {

using Col = std::vector<std::pair<int, Int>>;  // sparse, rows increasing

long mod_pow(long b, long e, long p) {
  long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long to_mod(const Int& v, long p) {
  Int r = v % p;
  if (r < 0) r += p;
  return long(r);
}

// --- GF(2) echelon, bitset packed, optional transform block ---------------
class GF2Echelon {
 public:
  GF2Echelon(int arows, int trows, const CancelToken* cancel)
      : arows_(arows),
        trows_(trows),
        words_((arows + trows + 63) / 64),
        cancel_(cancel),
        pivot_(arows, -1) {}

  bool add(const Col& col, int seed) {
    std::vector<uint64_t> v(words_, 0);
    for (auto& [r, c] : col)
      if (to_mod(c, 2)) flip(v, r);
    if (seed >= 0) flip(v, arows_ + seed);
    check_cancel(cancel_);
    reduce(v);
    int r = top_row(v);
    if (r < 0) {
      Col combo;
      for (int t = 0; t < trows_; ++t)
        if (bit(v, arows_ + t)) combo.emplace_back(t, Int(1));
      if (!combo.empty()) kernels_.push_back(std::move(combo));
      return false;
    }
    pivot_[r] = int(store_.size());
    store_.push_back(std::move(v));
    return true;
  }

  bool contains(const Col& col) const {
    std::vector<uint64_t> v(words_, 0);
    for (auto& [r, c] : col)
      if (to_mod(c, 2)) flip(v, r);
    reduce(v);
    return top_row(v) < 0;
  }

  std::optional<Col> solve(const Col& col) const {
    std::vector<uint64_t> v(words_, 0);
    for (auto& [r, c] : col)
      if (to_mod(c, 2)) flip(v, r);
    reduce(v);
    if (top_row(v) >= 0) return std::nullopt;
    Col x;
    for (int t = 0; t < trows_; ++t)
      if (bit(v, arows_ + t)) x.emplace_back(t, Int(1));
    return x;
  }

  const std::vector<Col>& kernels() const { return kernels_; }
  int rank() const { return int(store_.size()); }

 private:
  static void flip(std::vector<uint64_t>& v, int b) { v[b >> 6] ^= (1ull << (b & 63)); }
  static bool bit(const std::vector<uint64_t>& v, int b) { return (v[b >> 6] >> (b & 63)) & 1; }
  int top_row(const std::vector<uint64_t>& v) const {
    int awords = (arows_ + 63) / 64;
    for (int w = 0; w < awords; ++w)
      if (v[w]) {
        int b = w * 64 + __builtin_ctzll(v[w]);
        return b < arows_ ? b : -1;
      }
    return -1;
  }
  void reduce(std::vector<uint64_t>& v) const {
    for (;;) {
      int r = top_row(v);
      if (r < 0 || pivot_[r] < 0) return;
      const auto& p = store_[pivot_[r]];
      for (int w = 0; w < words_; ++w) v[w] ^= p[w];
    }
  }

  int arows_, trows_, words_;
  const CancelToken* cancel_;
  std::vector<int> pivot_;
  std::vector<std::vector<uint64_t>> store_;
  std::vector<Col> kernels_;
};

// --- dense modular echelon for odd p ---------------------------------------
class FpEchelon {
 public:
  FpEchelon(int arows, int trows, long p, const CancelToken* cancel)
      : arows_(arows), trows_(trows), p_(p), cancel_(cancel), pivot_(arows, -1) {}

  bool add(const Col& col, int seed) {
    std::vector<long> v(arows_ + trows_, 0);
    for (auto& [r, c] : col) v[r] = to_mod(c, p_);
    if (seed >= 0) v[arows_ + seed] = 1;
    check_cancel(cancel_);
    reduce(v);
    int r = top_row(v);
    if (r < 0) {
      Col combo;
      for (int t = 0; t < trows_; ++t)
        if (v[arows_ + t]) combo.emplace_back(t, Int(v[arows_ + t]));
      if (!combo.empty()) kernels_.push_back(std::move(combo));
      return false;
    }
    pivot_[r] = int(store_.size());
    store_.push_back(std::move(v));
    return true;
  }

  bool contains(const Col& col) const {
    std::vector<long> v(arows_ + trows_, 0);
    for (auto& [r, c] : col) v[r] = to_mod(c, p_);
    reduce(v);
    return top_row(v) < 0;
  }

  std::optional<Col> solve(const Col& col) const {
    std::vector<long> v(arows_ + trows_, 0);
    for (auto& [r, c] : col) v[r] = to_mod(c, p_);
    reduce(v);
    if (top_row(v) >= 0) return std::nullopt;
    Col x;
    for (int t = 0; t < trows_; ++t)
      if (v[arows_ + t]) x.emplace_back(t, Int((p_ - v[arows_ + t]) % p_));
    return x;
  }

  const std::vector<Col>& kernels() const { return kernels_; }
  int rank() const { return int(store_.size()); }

 private:
  int top_row(const std::vector<long>& v) const {
    for (int r = 0; r < arows_; ++r)
      if (v[r]) return r;
    return -1;
  }
  void reduce(std::vector<long>& v) const {
    for (;;) {
      int r = top_row(v);
      if (r < 0 || pivot_[r] < 0) return;
      const auto& pc = store_[pivot_[r]];
      long f = v[r] * mod_pow(pc[r], p_ - 2, p_) % p_;
      for (size_t i = 0; i < v.size(); ++i)
        if (pc[i]) v[i] = ((v[i] - f * pc[i]) % p_ + p_) % p_;
    }
  }

  int arows_, trows_;
  long p_;
  const CancelToken* cancel_;
  std::vector<int> pivot_;
  std::vector<std::vector<long>> store_;
  std::vector<Col> kernels_;
};

// --- uniform facade ---------------------------------------------------------
class Eliminator {
 public:
  Eliminator(int arows, int trows, Ring ring, const CancelToken* cancel) : ring_(ring) {
    if (ring.kind == Ring::Kind::Z)
      z_.emplace(arows, trows > 0, cancel);
    else if (ring.p == 2)
      f2_.emplace(arows, trows, cancel);
    else
      fp_.emplace(arows, trows, ring.p, cancel);
  }

  bool add(const Col& col) {
    if (z_) return z_->add(col);
    if (f2_) return f2_->add(col, seed_++);
    return fp_->add(col, seed_++);
  }

  bool contains(const Col& col) const {
    if (z_) {
      std::vector<Int> dense(z_->rows());
      for (auto& [r, c] : col) dense[r] = c;
      return z_->contains(dense);
    }
    if (f2_) return f2_->contains(col);
    return fp_->contains(col);
  }

  // coefficients over the inserted columns
  std::optional<Col> solve(const Col& col) const {
    if (z_) {
      std::vector<Int> dense(z_->rows());
      for (auto& [r, c] : col) dense[r] = c;
      auto x = z_->solve_dense(dense);
      if (!x) return std::nullopt;
      Col out;
      for (int i = 0; i < int(x->size()); ++i)
        if ((*x)[i] != 0) out.emplace_back(i, (*x)[i]);
      return out;
    }
    if (f2_) return f2_->solve(col);
    return fp_->solve(col);
  }

  std::vector<Col> kernels() const {
    if (z_) {
      IntMat k = z_->kernel_basis();
      std::vector<Col> out;
      for (int c = 0; c < k.cols(); ++c) {
        Col col;
        for (int r = 0; r < k.rows(); ++r)
          if (k.at(r, c) != 0) col.emplace_back(r, k.at(r, c));
        out.push_back(std::move(col));
      }
      return out;
    }
    if (f2_) return f2_->kernels();
    return fp_->kernels();
  }

 private:
  Ring ring_;
  int seed_ = 0;
  std::optional<ColEchelon> z_;
  std::optional<GF2Echelon> f2_;
  std::optional<FpEchelon> fp_;
};

}  // namespace

FreeResolution small_resolution(const PermGroupPtr& G, int D, Ring ring,
                                const CancelToken* cancel) {
  if (ring.kind == Ring::Kind::Q)
    throw math_error("small_resolution: use the transfer shortcut over Q");
  long order = G->order();
  FreeResolution out;
  out.G = G;
  out.ring = ring;
  out.ranks.push_back(1);
  if (D < 1) return out;
  out.boundary.resize(1);  // index 0 unused

  // module generators of the augmentation ideal: g - 1 over a generating set
  std::vector<Col> kernel_gens;
  for (int g : G->small_generators()) {
    Col v;
    int a = std::min(0, g), b = std::max(0, g);
    if (g == 0) continue;  // trivial generator on a size-<=1 block
    v.emplace_back(a, a == 0 ? Int(-1) : Int(1));
    v.emplace_back(b, b == g ? Int(1) : Int(-1));
    kernel_gens.push_back(std::move(v));
  }
  if (kernel_gens.empty() && order > 1)
    throw math_error("small_resolution: no generators for a nontrivial group");

  for (int d = 1; d <= D; ++d) {
    check_cancel(cancel);
    int prev_rank = out.ranks.back();
    int rank = int(kernel_gens.size());
    out.ranks.push_back(rank);
    std::vector<RingVec> bd(rank);
    for (int j = 0; j < rank; ++j)
      for (auto& [idx, c] : kernel_gens[j])
        bd[j].terms.emplace_back(idx / order, idx % order, c);
    out.boundary.push_back(std::move(bd));
    if (d == D) break;

    // integer matrix of ∂_d on the Z-basis (columns g * e_j), then its kernel
    long rows = prev_rank * order, cols = rank * order;
    Eliminator ker(int(rows), int(cols), ring, cancel);
    for (int j = 0; j < rank; ++j)
      for (long g = 0; g < order; ++g) {
        // g * (kernel_gens[j]): translate every term
        Col col;
        for (auto& [idx, c] : kernel_gens[j])
          col.emplace_back(int((idx / order) * order + G->mul(int(g), int(idx % order))), c);
        std::sort(col.begin(), col.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        ker.add(col);
      }
    std::vector<Col> basis = ker.kernels();

    // greedy ZG-module generators of the kernel
    Eliminator span(int(cols), 0, ring, cancel);
    std::vector<Col> next_gens;
    for (const Col& v : basis) {
      if (span.contains(v)) continue;
      next_gens.push_back(v);
      for (long g = 0; g < order; ++g) {
        Col moved;
        for (auto& [idx, c] : v)
          moved.emplace_back(int((idx / order) * order + G->mul(int(g), int(idx % order))), c);
        std::sort(moved.begin(), moved.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        span.add(moved);
      }
    }
    kernel_gens = std::move(next_gens);
  }
  return out;
}

namespace {

std::vector<Int> ringvec_to_dense(const RingVec& rv, long order, int rank) {
  std::vector<Int> out(size_t(rank) * order);
  for (auto& [i, g, c] : rv.terms) out[size_t(i) * order + g] += c;
  return out;
}

}  // namespace

ResChainMap lift_chain_map(const FreeResolution& a, const FreeResolution& b, const GroupHom& phi,
                           int D, const CancelToken* cancel) {
  if (a.max_degree() < D || b.max_degree() < D)
    throw math_error("lift_chain_map: resolutions too short");
  if (!(a.ring == b.ring)) throw math_error("lift_chain_map: ring mismatch");
  long ordA = a.G->order(), ordB = b.G->order();
  ResChainMap out;
  out.psi.resize(D + 1);
  // psi_0 : ZG -> ZG', 1 -> 1
  out.psi[0] = {std::vector<Int>(size_t(b.ranks[0]) * ordB)};
  out.psi[0][0][0] = 1;

  for (int d = 1; d <= D; ++d) {
    check_cancel(cancel);
    // solver against the integer matrix of B's boundary ∂_d
    long rows = b.ranks[d - 1] * ordB, cols = b.ranks[d] * ordB;
    Eliminator solver(int(rows), int(cols), b.ring, cancel);
    for (int j = 0; j < b.ranks[d]; ++j) {
      std::vector<Int> base = ringvec_to_dense(b.boundary[d][j], ordB, b.ranks[d - 1]);
      for (long g = 0; g < ordB; ++g) {
        Col col;
        for (long idx = 0; idx < long(base.size()); ++idx)
          if (base[idx] != 0)
            col.emplace_back(int((idx / ordB) * ordB + b.G->mul(int(g), int(idx % ordB))),
                             base[idx]);
        std::sort(col.begin(), col.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        solver.add(col);
      }
    }
    out.psi[d].resize(a.ranks[d]);
    for (int j = 0; j < a.ranks[d]; ++j) {
      // rhs = psi_{d-1}(∂_d e_j), expanded phi-equivariantly
      std::vector<Int> rhs(size_t(b.ranks[d - 1]) * ordB);
      for (auto& [i, g, c] : a.boundary[d][j].terms) {
        int hg = phi.image[g];
        const std::vector<Int>& im = out.psi[d - 1][i];
        for (long idx = 0; idx < long(im.size()); ++idx)
          if (im[idx] != 0) {
            long tgt = (idx / ordB) * ordB + b.G->mul(hg, int(idx % ordB));
            rhs[tgt] += c * im[idx];
          }
      }
      Col rhs_sparse;
      for (long idx = 0; idx < long(rhs.size()); ++idx)
        if (rhs[idx] != 0) rhs_sparse.emplace_back(int(idx), rhs[idx]);
      auto x = solver.solve(rhs_sparse);
      if (!x) throw math_error("lift_chain_map: lifting failed (resolution not exact?)");
      // x is a combination of the inserted columns (j, g) of B's boundary:
      // psi_d(e_j) = sum x_{(j,g)} g*e_j
      std::vector<Int> img(size_t(b.ranks[d]) * ordB);
      for (auto& [col_idx, coeff] : *x) img[col_idx] += coeff;
      out.psi[d][j] = std::move(img);
    }
  }
  return out;
}

CoeffComplex coefficient_complex(const FreeResolution& f, const GModule& m, int D) {
  if (f.max_degree() < D) throw math_error("coefficient_complex: resolution too short");
  long order = f.G->order();
  CoeffComplex out;
  out.d.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    FgAbGroup c = FgAbGroup::zero();
    for (int j = 0; j < f.ranks[d]; ++j) c = direct_sum(c, m.carrier());
    out.C.push_back(std::move(c));
  }
  int r = m.carrier().ngens;
  for (int d = 1; d <= D; ++d) {
    IntMat mat(out.C[d - 1].ngens, out.C[d].ngens);
    for (int j = 0; j < f.ranks[d]; ++j)
      for (auto& [i, g, cf] : f.boundary[d][j].terms) {
        const IntMat& act = m.action(f.G->inv(g));
        for (int rr = 0; rr < r; ++rr)
          for (int cc = 0; cc < r; ++cc)
            if (act.at(rr, cc) != 0) mat.at(i * r + rr, j * r + cc) += cf * act.at(rr, cc);
      }
    if (m.ring().kind == Ring::Kind::Fp) mat.reduce_mod(Int(m.ring().p));
    out.d[d] = AbMap(out.C[d], out.C[d - 1], std::move(mat));
  }
  return out;
}

IntMat coefficient_chain_map(const FreeResolution& a, const FreeResolution& b,
                             const ResChainMap& psi, const GModule& ma, const GModule& mb,
                             const IntMat& iota, int d) {
  long ordB = b.G->order();
  int ra = ma.carrier().ngens, rb = mb.carrier().ngens;
  IntMat out(b.ranks[d] * rb, a.ranks[d] * ra);
  for (int j = 0; j < a.ranks[d]; ++j) {
    const std::vector<Int>& img = psi.psi[d][j];
    for (long idx = 0; idx < long(img.size()); ++idx) {
      if (img[idx] == 0) continue;
      int jp = int(idx / ordB), gp = int(idx % ordB);
      IntMat block = mb.action(b.G->inv(gp)).mul(iota);
      for (int rr = 0; rr < rb; ++rr)
        for (int cc = 0; cc < ra; ++cc)
          if (block.at(rr, cc) != 0) out.at(jp * rb + rr, j * ra + cc) += img[idx] * block.at(rr, cc);
    }
  }
  if (mb.ring().kind == Ring::Kind::Fp) out.reduce_mod(Int(mb.ring().p));
  return out;
}

}  // namespace sigmastab

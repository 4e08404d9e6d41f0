#include "sigmastab/functor.hpp"

#include <random>
#include <sstream>

namespace sigmastab {

TruncatedFunctor::TruncatedFunctor(std::string name, int N, Ring ring,
                                   std::vector<FgAbGroup> objects, std::vector<IntMat> gen_iota,
                                   std::vector<IntMat> gen_pi,
                                   std::map<std::pair<int, int>, IntMat> gen_sigma)
    : name_(std::move(name)),
      N_(N),
      ring_(ring),
      objects_(std::move(objects)),
      iota_(std::move(gen_iota)),
      pi_(std::move(gen_pi)),
      sigma_(std::move(gen_sigma)) {
  if (int(objects_.size()) != N_ + 1) throw math_error("TruncatedFunctor: need N+1 objects");
  if (int(iota_.size()) != N_) throw math_error("TruncatedFunctor: need N iota images");
  if (int(pi_.size()) != N_) throw math_error("TruncatedFunctor: need N pi images");
  for (int n = 0; n < N_; ++n) {
    if (iota_[n].rows() != objects_[n + 1].ngens || iota_[n].cols() != objects_[n].ngens)
      throw math_error("TruncatedFunctor: iota_" + std::to_string(n) + " has wrong shape");
    if (pi_[n].rows() != objects_[n].ngens || pi_[n].cols() != objects_[n + 1].ngens)
      throw math_error("TruncatedFunctor: pi_" + std::to_string(n + 1) + " has wrong shape");
  }
  for (int n = 2; n <= N_; ++n)
    for (int i = 1; i < n; ++i) {
      auto it = sigma_.find({i, n});
      if (it == sigma_.end())
        throw math_error("TruncatedFunctor: missing sigma_" + std::to_string(i) + "," +
                         std::to_string(n));
      if (it->second.rows() != objects_[n].ngens || it->second.cols() != objects_[n].ngens)
        throw math_error("TruncatedFunctor: sigma has wrong shape");
    }
  if (ring_.kind == Ring::Kind::Fp) {
    Int p(ring_.p);
    for (auto& m : iota_) m.reduce_mod(p);
    for (auto& m : pi_) m.reduce_mod(p);
    for (auto& [k, m] : sigma_) m.reduce_mod(p);
  }
  for (const auto& m : iota_) iota_sp_.push_back(SparseMat::from_dense(m));
  for (const auto& m : pi_) pi_sp_.push_back(SparseMat::from_dense(m));
  for (const auto& [k, m] : sigma_) sigma_sp_.emplace(k, SparseMat::from_dense(m));
}

const FgAbGroup& TruncatedFunctor::object(int n) const {
  if (n < 0 || n > N_) throw math_error("object index beyond truncation");
  return objects_[n];
}

const IntMat& TruncatedFunctor::gen_iota(int n) const {
  if (n < 0 || n >= N_) throw math_error("gen_iota out of range");
  return iota_[n];
}

const IntMat& TruncatedFunctor::gen_pi(int n) const {
  if (n < 1 || n > N_) throw math_error("gen_pi out of range");
  return pi_[n - 1];
}

const IntMat& TruncatedFunctor::gen_sigma(int i, int n) const {
  auto it = sigma_.find({i, n});
  if (it == sigma_.end()) throw math_error("gen_sigma out of range");
  return it->second;
}

const SparseMat& TruncatedFunctor::atom_matrix(const GenAtom& a) const {
  switch (a.kind) {
    case GenAtom::Kind::Iota:
      if (a.n < 0 || a.n >= N_) throw math_error("eval beyond truncation");
      return iota_sp_[a.n];
    case GenAtom::Kind::Pi:
      if (a.n < 1 || a.n > N_) throw math_error("eval beyond truncation");
      return pi_sp_[a.n - 1];
    case GenAtom::Kind::Sigma: {
      auto it = sigma_sp_.find({a.i, a.n});
      if (it == sigma_sp_.end()) throw math_error("eval beyond truncation");
      return it->second;
    }
  }
  throw math_error("bad atom");
}

const SparseMat& TruncatedFunctor::eval(const PartialInjection& f) const {
  if (f.source() > N_ || f.target() > N_) throw math_error("eval beyond truncation");
  {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return *it->second;
  }
  SparseMat acc = SparseMat::identity(objects_[f.source()].ngens);
  for (const GenAtom& a : decompose_into_generators(f)) {
    acc = atom_matrix(a).mul(acc);
    if (ring_.kind == Ring::Kind::Fp) acc.reduce_mod(Int(ring_.p));
  }
  std::lock_guard<std::mutex> lk(cache_mutex_);
  auto it = cache_.find(f);
  if (it == cache_.end()) it = cache_.emplace(f, std::make_unique<SparseMat>(std::move(acc))).first;
  return *it->second;
}

AbMap TruncatedFunctor::eval_map(const PartialInjection& f) const {
  return AbMap(objects_[f.source()], objects_[f.target()], eval_dense(f));
}

bool TruncatedFunctor::is_zero(const CancelToken* cancel) const {
  for (int n = 0; n <= N_; ++n)
    if (!is_zero_group(objects_[n], ring_, cancel)) return false;
  return true;
}

namespace {

std::vector<GenAtom> atoms_at(int n, int N) {
  std::vector<GenAtom> out;
  if (n < N) out.push_back({GenAtom::Kind::Iota, n, 0});
  if (n >= 1) out.push_back({GenAtom::Kind::Pi, n, 0});
  for (int i = 1; i < n; ++i) out.push_back({GenAtom::Kind::Sigma, n, i});
  return out;
}

}  // namespace

ValidationReport TruncatedFunctor::validate_atoms(int bound, const CancelToken* cancel) const {
  ValidationReport rep;
  for (int m = 0; m <= std::min(bound, N_); ++m)
    for (int n = 0; n <= std::min(bound, N_); ++n) {
      check_cancel(cancel);
      for (const auto& f : enumerate_hom(m, n))
        for (const GenAtom& a : atoms_at(n, N_)) {
          PartialInjection av = a.value();
          SparseMat rhs = atom_matrix(a).mul(eval(f));
          if (ring_.kind == Ring::Kind::Fp) rhs.reduce_mod(Int(ring_.p));
          const SparseMat& lhs = eval(compose(av, f));
          if (lhs == rhs) continue;
          AbMap l(objects_[m], objects_[av.target()], lhs.dense());
          AbMap r(objects_[m], objects_[av.target()], rhs.dense());
          if (maps_equal(l, r, cancel)) continue;
          rep.ok = false;
          rep.witness_f = f;
          rep.witness_g = av;
          rep.failure = "functoriality: T(g∘f) != T(g)T(f) at f=" + f.str() + ", g=" + av.str();
          return rep;
        }
    }
  return rep;
}

ValidationReport TruncatedFunctor::validate(int exhaustive_bound, int samples, uint64_t seed,
                                            const CancelToken* cancel) const {
  ValidationReport rep;
  auto fail = [&rep](std::string why) {
    rep.ok = false;
    rep.failure = std::move(why);
    return rep;
  };

  // generator images must be genuine homomorphisms of the carriers
  for (int n = 0; n < N_; ++n) {
    if (!is_well_defined(AbMap(objects_[n], objects_[n + 1], iota_[n]), cancel))
      return fail("iota_" + std::to_string(n) + " not well defined");
    if (!is_well_defined(AbMap(objects_[n + 1], objects_[n], pi_[n]), cancel))
      return fail("pi_" + std::to_string(n + 1) + " not well defined");
  }
  for (auto& [key, m] : sigma_)
    if (!is_well_defined(AbMap(objects_[key.second], objects_[key.second], m), cancel))
      return fail("sigma not well defined");

  // left-inverse relation on generators
  for (int n = 0; n < N_; ++n) {
    AbMap comp(objects_[n], objects_[n], pi_[n].mul(iota_[n]));
    if (!maps_equal(comp, AbMap::identity(objects_[n]), cancel))
      return fail("pi_" + std::to_string(n + 1) + " ∘ iota_" + std::to_string(n) + " != id");
  }

  auto check_pair = [&](const PartialInjection& f, const PartialInjection& g) -> bool {
    SparseMat rhs = eval(g).mul(eval(f));
    if (ring_.kind == Ring::Kind::Fp) rhs.reduce_mod(Int(ring_.p));
    const SparseMat& lhs = eval(compose(g, f));
    if (lhs == rhs) return true;
    AbMap l(objects_[f.source()], objects_[g.target()], lhs.dense());
    AbMap r(objects_[f.source()], objects_[g.target()], rhs.dense());
    return maps_equal(l, r, cancel);
  };

  int bound = std::min(N_, exhaustive_bound);
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c) {
        check_cancel(cancel);
        for (const auto& f : enumerate_hom(a, b))
          for (const auto& g : enumerate_hom(b, c))
            if (!check_pair(f, g)) {
              rep.witness_f = f;
              rep.witness_g = g;
              return fail("functoriality: T(g∘f) != T(g)T(f) at f=" + f.str() + ", g=" + g.str());
            }
      }

  if (N_ > bound && samples > 0) {
    std::mt19937_64 rng(seed ^ 0x5107a7);
    for (int t = 0; t < samples; ++t) {
      check_cancel(cancel);
      int a = int(rng() % (N_ + 1)), c = int(rng() % (N_ + 1));
      int b = bound + 1 + int(rng() % (N_ - bound));
      const auto& homs1 = enumerate_hom(a, b);
      const auto& homs2 = enumerate_hom(b, c);
      const auto& f = homs1[rng() % homs1.size()];
      const auto& g = homs2[rng() % homs2.size()];
      if (!check_pair(f, g)) {
        rep.witness_f = f;
        rep.witness_g = g;
        return fail("functoriality (sampled): T(g∘f) != T(g)T(f) at f=" + f.str() +
                    ", g=" + g.str());
      }
    }
  }
  return rep;
}

bool TruncatedFunctor::operator==(const TruncatedFunctor& o) const {
  return name_ == o.name_ && N_ == o.N_ && ring_ == o.ring_ && objects_ == o.objects_ &&
         iota_ == o.iota_ && pi_ == o.pi_ && sigma_ == o.sigma_;
}

}  // namespace sigmastab

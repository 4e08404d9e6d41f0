#include "sigmastab/examples.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace sigmastab {

namespace {

FgAbGroup carrier(Ring ring, int rank) {
  if (ring.kind == Ring::Kind::Fp)
    return FgAbGroup::from_invariants(std::vector<Int>(rank, Int(ring.p)), 0);
  return FgAbGroup::free_group(rank);
}

// Basis-indexed functor construction: a family is described by a basis per
// object and the partial action of the generator morphisms on basis
// elements (target index + sign, or nothing for zero).
template <class Basis>
struct BasisFamily {
  std::vector<std::vector<Basis>> bases;  // per object 0..N
  std::vector<std::map<Basis, int>> index;

  void build_index() {
    index.resize(bases.size());
    for (size_t n = 0; n < bases.size(); ++n)
      for (int i = 0; i < int(bases[n].size()); ++i) index[n].emplace(bases[n][i], i);
  }

  template <class Act>
  IntMat matrix(int src, int tgt, Act&& act) const {
    IntMat m(int(bases[tgt].size()), int(bases[src].size()));
    for (int c = 0; c < int(bases[src].size()); ++c) {
      auto out = act(bases[src][c]);
      if (!out) continue;
      auto it = index[tgt].find(out->first);
      if (it == index[tgt].end()) throw math_error("basis action left the basis");
      m.at(it->second, c) += out->second;
    }
    return m;
  }
};

}  // namespace

std::optional<int> GradedBasis::hconn() const {
  for (int k = 1; k < int(ranks.size()); ++k)
    if (ranks[k] != 0) return k - 1;
  return std::nullopt;  // label space has no reduced homology at all
}

void GradedBasis::check() const {
  if (ranks.empty() || ranks[0] != 1)
    throw math_error("GradedBasis: degree 0 must have rank 1 (path-connected unit class)");
  for (int r : ranks)
    if (r < 0) throw math_error("GradedBasis: negative rank");
}

int PartitionType::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

void PartitionType::check() const {
  for (int p : parts)
    if (p < 1) throw math_error("PartitionType: parts must be >= 1");
}

std::string PartitionType::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

bool partition_leq(const PartitionType& a, const PartitionType& b) {
  if (a.parts.size() > b.parts.size()) return false;
  std::vector<int> x = a.parts, y = b.parts;
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

FunctorPtr constant_functor(const CanonGroup& value, Ring ring, int N) {
  if (ring.kind != Ring::Kind::Z && !value.torsion.empty())
    throw math_error("constant_functor: torsion carrier requires ring Z");
  FgAbGroup g = ring.kind == Ring::Kind::Fp
                    ? carrier(ring, value.free_rank)
                    : FgAbGroup::from_invariants(value.torsion, value.free_rank);
  std::vector<FgAbGroup> objects(N + 1, g);
  std::vector<IntMat> gi(N, IntMat::identity(g.ngens)), gp(N, IntMat::identity(g.ngens));
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) gs.emplace(std::make_pair(i, n), IntMat::identity(g.ngens));
  std::string name = "const:" + value.str();
  return std::make_shared<TruncatedFunctor>(name, N, ring, std::move(objects), std::move(gi),
                                            std::move(gp), std::move(gs));
}

namespace {

using Decomp = std::vector<std::vector<int>>;  // parts sorted, sizes = lambda

void enumerate_decomps_rec(int n, const std::vector<int>& lambda, size_t pi,
                           std::vector<char>& used, Decomp& cur, std::vector<Decomp>& out) {
  if (pi == lambda.size()) {
    out.push_back(cur);
    return;
  }
  // choose a sorted subset of size lambda[pi] from the unused letters
  std::vector<int> avail;
  for (int i = 1; i <= n; ++i)
    if (!used[i]) avail.push_back(i);
  int k = lambda[pi];
  if (int(avail.size()) < k) return;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int from, int depth) {
    if (depth == k) {
      for (int v : pick) used[v] = 1;
      cur.push_back(pick);
      enumerate_decomps_rec(n, lambda, pi + 1, used, cur, out);
      cur.pop_back();
      for (int v : pick) used[v] = 0;
      return;
    }
    for (int idx = from; idx < int(avail.size()); ++idx) {
      if (used[avail[idx]]) continue;
      pick[depth] = avail[idx];
      rec(idx + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::vector<Decomp> enumerate_decomps(int n, const std::vector<int>& lambda) {
  std::vector<Decomp> out;
  std::vector<char> used(n + 1, 0);
  Decomp cur;
  enumerate_decomps_rec(n, lambda, 0, used, cur, out);
  return out;
}

// image of a decomposition under a partial injection, or nullopt when the
// morphism is undefined somewhere on its support
std::optional<Decomp> move_decomp(const PartialInjection& g, const Decomp& d) {
  Decomp out;
  for (const auto& part : d) {
    std::vector<int> moved;
    for (int s : part) {
      if (!g.defined(s)) return std::nullopt;
      moved.push_back(g.apply(s));
    }
    std::sort(moved.begin(), moved.end());
    out.push_back(std::move(moved));
  }
  return out;
}

FunctorPtr basis_partition_functor(const std::string& name,
                                   const std::vector<std::vector<int>>& types, Ring ring, int N) {
  BasisFamily<std::pair<int, Decomp>> fam;  // (type index, decomposition)
  fam.bases.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int ti = 0; ti < int(types.size()); ++ti)
      for (auto& d : enumerate_decomps(n, types[ti])) fam.bases[n].emplace_back(ti, d);
  fam.build_index();

  auto act = [&](const PartialInjection& g) {
    return [&fam, g](const std::pair<int, Decomp>& b)
               -> std::optional<std::pair<std::pair<int, Decomp>, Int>> {
      auto moved = move_decomp(g, b.second);
      if (!moved) return std::nullopt;
      return std::make_pair(std::make_pair(b.first, *moved), Int(1));
    };
  };

  std::vector<FgAbGroup> objects;
  for (int n = 0; n <= N; ++n) objects.push_back(carrier(ring, int(fam.bases[n].size())));
  std::vector<IntMat> gi, gp;
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 0; n < N; ++n) {
    gi.push_back(fam.matrix(n, n + 1, act(PartialInjection::iota(n))));
    gp.push_back(fam.matrix(n + 1, n, act(PartialInjection::pi(n + 1))));
  }
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i)
      gs.emplace(std::make_pair(i, n), fam.matrix(n, n, act(PartialInjection::transposition(i, n))));
  return std::make_shared<TruncatedFunctor>(name, N, ring, std::move(objects), std::move(gi),
                                            std::move(gp), std::move(gs));
}

}  // namespace

FunctorPtr partition_functor(const PartitionType& lambda, Ring ring, int N) {
  lambda.check();
  std::ostringstream name;
  name << "partition:";
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    if (i) name << ",";
    name << lambda.parts[i];
  }
  return basis_partition_functor(name.str(), {lambda.parts}, ring, N);
}

FunctorPtr interval_partition_functor(const PartitionType& lambda, const PartitionType& mu,
                                      Ring ring, int N) {
  lambda.check();
  mu.check();
  if (!partition_leq(lambda, mu))
    throw math_error("interval_partition_functor: lambda is not <= mu");
  // all ordered partitions nu with lambda <= nu <= mu
  std::vector<std::vector<int>> types;
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int remaining) {
    if (!cur.empty()) {
      PartitionType nu{cur};
      if (partition_leq(lambda, nu) && partition_leq(nu, mu)) types.push_back(cur);
    }
    for (int next = 1; next <= remaining; ++next) {
      cur.push_back(next);
      rec(cur, remaining - next);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(cur, mu.total());
  std::sort(types.begin(), types.end());
  std::ostringstream name;
  name << "interval:";
  for (size_t i = 0; i < lambda.parts.size(); ++i) name << (i ? "," : "") << lambda.parts[i];
  name << ";";
  for (size_t i = 0; i < mu.parts.size(); ++i) name << (i ? "," : "") << mu.parts[i];
  return basis_partition_functor(name.str(), types, ring, N);
}

namespace {

// word in the graded basis: one letter per position, (0,0) is the unit
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

void words_rec(const GradedBasis& basis, int n, int q, Word& cur, std::vector<Word>& out) {
  if (int(cur.size()) == n) {
    if (q == 0) out.push_back(cur);
    return;
  }
  cur.push_back({0, 0});
  words_rec(basis, n, q, cur, out);
  cur.pop_back();
  for (int g = 1; g <= basis.top() && g <= q; ++g)
    for (int t = 0; t < basis.ranks[g]; ++t) {
      cur.push_back({g, t});
      words_rec(basis, n, q - g, cur, out);
      cur.pop_back();
    }
}

}  // namespace

FunctorPtr kunneth_functor(const GradedBasis& basis, int q, Ring ring, int N) {
  basis.check();
  if (q < 0) throw math_error("kunneth_functor: q must be >= 0");
  BasisFamily<Word> fam;
  fam.bases.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    Word cur;
    words_rec(basis, n, q, cur, fam.bases[n]);
    std::sort(fam.bases[n].begin(), fam.bases[n].end());
  }
  fam.build_index();

  auto act = [&](const PartialInjection& g) {
    return [g](const Word& w) -> std::optional<std::pair<Word, Int>> {
      int m = g.source(), n = g.target();
      Word out(n, {0, 0});
      // Koszul sign: odd-degree letters pick up the sign of the permutation
      // induced on them
      std::vector<int> odd_targets;
      for (int i = 1; i <= m; ++i) {
        const Letter& l = w[i - 1];
        if (l.first == 0) continue;
        if (!g.defined(i)) return std::nullopt;
        out[g.apply(i) - 1] = l;
        if (l.first % 2 == 1) odd_targets.push_back(g.apply(i));
      }
      int inversions = 0;
      for (size_t a = 0; a < odd_targets.size(); ++a)
        for (size_t b = a + 1; b < odd_targets.size(); ++b)
          if (odd_targets[a] > odd_targets[b]) ++inversions;
      return std::make_pair(std::move(out), Int(inversions % 2 ? -1 : 1));
    };
  };

  std::vector<FgAbGroup> objects;
  for (int n = 0; n <= N; ++n) objects.push_back(carrier(ring, int(fam.bases[n].size())));
  std::vector<IntMat> gi, gp;
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 0; n < N; ++n) {
    gi.push_back(fam.matrix(n, n + 1, act(PartialInjection::iota(n))));
    gp.push_back(fam.matrix(n + 1, n, act(PartialInjection::pi(n + 1))));
  }
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i)
      gs.emplace(std::make_pair(i, n), fam.matrix(n, n, act(PartialInjection::transposition(i, n))));

  std::ostringstream name;
  bool is_circle = basis.ranks == std::vector<int>{1, 1};
  if (is_circle)
    name << "kunneth:circle,q=" << q;
  else {
    name << "kunneth:b=";
    for (size_t i = 0; i < basis.ranks.size(); ++i) name << (i ? "_" : "") << basis.ranks[i];
    name << ",q=" << q;
  }
  if (!(ring == Ring::ZZ())) name << "," << ring.str();
  return std::make_shared<TruncatedFunctor>(name.str(), N, ring, std::move(objects),
                                            std::move(gi), std::move(gp), std::move(gs));
}

SignAttemptReport sign_extension_attempt(int N, const CancelToken* cancel) {
  if (N < 2) throw math_error("sign_extension_attempt: needs truncation >= 2");
  IntMat id = IntMat::identity(2);
  IntMat swap(2, 2, {0, 1, 1, 0});
  std::vector<FgAbGroup> objects(N + 1, FgAbGroup::free_group(2));
  std::vector<IntMat> gi(N, id), gp(N, id);
  std::map<std::pair<int, int>, IntMat> gs;
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) gs.emplace(std::make_pair(i, n), swap);
  SignAttemptReport rep;
  rep.attempt = std::make_shared<TruncatedFunctor>("sign-attempt", N, Ring::ZZ(),
                                                   std::move(objects), std::move(gi),
                                                   std::move(gp), std::move(gs));
  rep.functoriality = rep.attempt->validate(std::min(N, 3), 0, 0, cancel);

  // permutations alone do carry the sign representation
  rep.perms_only_ok = true;
  for (int n = 2; n <= N && rep.perms_only_ok; ++n) {
    for (int i = 1; i < n; ++i) {
      if (!(swap.mul(swap) == id)) rep.perms_only_ok = false;
      if (i + 1 < n && !(swap.mul(swap).mul(swap) == swap)) rep.perms_only_ok = false;
    }
  }
  // and the iota-only subcategory is consistent: sigma_{i+1,n+1} iota_n = iota_n sigma_{i,n}
  rep.iota_only_ok = true;
  for (int n = 2; n + 1 <= N && rep.iota_only_ok; ++n)
    for (int i = 1; i < n; ++i)
      if (!(swap.mul(id) == id.mul(swap))) rep.iota_only_ok = false;
  return rep;
}

namespace {

std::optional<CanonGroup> parse_group_spec(const std::string& s) {
  CanonGroup out;
  if (s == "0") return out;
  std::istringstream is(s);
  std::string term;
  while (std::getline(is, term, '+')) {
    if (term == "Z") {
      out.free_rank += 1;
    } else if (term.rfind("Z^", 0) == 0) {
      try {
        out.free_rank += std::stoi(term.substr(2));
      } catch (...) {
        return std::nullopt;
      }
    } else if (term.rfind("Z/", 0) == 0) {
      try {
        Int d(term.substr(2));
        if (d < 2) return std::nullopt;
        out.torsion.push_back(d);
      } catch (...) {
        return std::nullopt;
      }
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

FunctorPtr build_family(const std::string& spec, int N, Ring ring) {
  std::string fam = spec, params;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    fam = spec.substr(0, pos);
    params = spec.substr(pos + 1);
  }
  try {
    if (fam == "const") {
      auto g = parse_group_spec(params.empty() ? "Z" : params);
      if (!g) throw math_error("bad group spec '" + params + "'");
      return constant_functor(*g, ring, N);
    }
    if (fam == "partition") return partition_functor({parse_int_list(params, ',')}, ring, N);
    if (fam == "interval") {
      auto semi = params.find(';');
      if (semi == std::string::npos) throw math_error("interval needs 'lambda;mu'");
      return interval_partition_functor({parse_int_list(params.substr(0, semi), ',')},
                                        {parse_int_list(params.substr(semi + 1), ',')}, ring, N);
    }
    if (fam == "kunneth") {
      GradedBasis basis;
      int q = -1;
      std::istringstream is(params);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        if (tok == "circle")
          basis = GradedBasis::circle();
        else if (tok.rfind("b=", 0) == 0) {
          basis.ranks.clear();
          for (int r : parse_int_list(tok.substr(2), '_')) basis.ranks.push_back(r);
        } else if (tok.rfind("q=", 0) == 0)
          q = std::stoi(tok.substr(2));
        else if (auto r = Ring::parse(tok))
          ring = *r;
        else
          throw math_error("bad kunneth parameter '" + tok + "'");
      }
      if (q < 0) throw math_error("kunneth needs q=<degree>");
      return kunneth_functor(basis, q, ring, N);
    }
    if (fam == "sign-attempt") return sign_extension_attempt(std::max(N, 2)).attempt;
  } catch (const std::invalid_argument&) {
    throw math_error("bad family parameters in '" + spec + "'");
  }
  throw math_error("unknown family '" + fam + "'");
}

std::vector<std::string> example_library_specs() {
  return {"const:Z",      "const:Z/4",    "partition:1",       "partition:1,1",
          "partition:2",  "partition:2,1", "interval:1;2",     "kunneth:circle,q=1",
          "kunneth:circle,q=2,Q", "kunneth:b=1_0_1,q=2"};
}

}  // namespace sigmastab

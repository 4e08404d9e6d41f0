#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sigmastab/abelian.hpp"
#include "sigmastab/partial_injection.hpp"
#include "sigmastab/ring.hpp"

namespace sigmastab {

struct ValidationReport {
  bool ok = true;
  std::string failure;  // first failing check, human readable
  std::optional<PartialInjection> witness_f, witness_g;

  std::string summary() const { return ok ? "PASS" : "FAIL: " + failure; }
};

// A functor from the truncation of the partial-injection category at N to
// finitely generated abelian groups. Objects are stored as canonical
// presentations, morphisms on the generators iota_n, pi_n and adjacent
// transpositions; everything else is expanded through a generator word and
// cached. Values are immutable after construction; the cache is fill-once
// behind a lock, so concurrent reads are safe.
class TruncatedFunctor {
 public:
  TruncatedFunctor(std::string name, int N, Ring ring, std::vector<FgAbGroup> objects,
                   std::vector<IntMat> gen_iota, std::vector<IntMat> gen_pi,
                   std::map<std::pair<int, int>, IntMat> gen_sigma);

  const std::string& name() const { return name_; }
  int truncation() const { return N_; }
  Ring ring() const { return ring_; }

  const FgAbGroup& object(int n) const;
  // T(iota_n): T_n -> T_{n+1}, 0 <= n <= N-1
  const IntMat& gen_iota(int n) const;
  // T(pi_n): T_n -> T_{n-1}, 1 <= n <= N
  const IntMat& gen_pi(int n) const;
  // T(sigma_{i,n}): T_n -> T_n, 2 <= n <= N, 1 <= i <= n-1
  const IntMat& gen_sigma(int i, int n) const;

  // Value on an arbitrary morphism, via a generator word (cached).
  const SparseMat& eval(const PartialInjection& f) const;
  IntMat eval_dense(const PartialInjection& f) const { return eval(f).dense(); }
  AbMap eval_map(const PartialInjection& f) const;

  bool is_zero(const CancelToken* cancel = nullptr) const;

  // Functoriality suite: T(g∘f) = T(g)∘T(f) exhaustively for objects up to
  // exhaustive_bound, plus seeded random samples on larger objects; also
  // checks pi∘iota = id and well-definedness of every generator image.
  ValidationReport validate(int exhaustive_bound = 5, int samples = 200,
                            uint64_t seed = 0, const CancelToken* cancel = nullptr) const;

  // Cheaper integrity check, equivalent to full functoriality by induction
  // on generator words: T(a∘f) = T(a)T(f) for every generator atom a and
  // every morphism f with objects up to the bound.
  ValidationReport validate_atoms(int bound, const CancelToken* cancel = nullptr) const;

  bool operator==(const TruncatedFunctor& o) const;

 private:
  const SparseMat& atom_matrix(const GenAtom& a) const;

  std::string name_;
  int N_;
  Ring ring_;
  std::vector<FgAbGroup> objects_;
  std::vector<IntMat> iota_, pi_;
  std::map<std::pair<int, int>, IntMat> sigma_;  // (i, n)
  std::vector<SparseMat> iota_sp_, pi_sp_;
  std::map<std::pair<int, int>, SparseMat> sigma_sp_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<PartialInjection, std::unique_ptr<SparseMat>, PartialInjectionHash>
      cache_;
};

using FunctorPtr = std::shared_ptr<const TruncatedFunctor>;

// Serialization: canonical "sigma-functor v1" text format, bit-exact
// round-trip.
std::string print_functor(const TruncatedFunctor& t);
struct ParseError {
  int line;
  std::string message;
};
// Returns the functor or a parse error with its line number.
std::variant<FunctorPtr, ParseError> parse_functor(const std::string& text);

}  // namespace sigmastab

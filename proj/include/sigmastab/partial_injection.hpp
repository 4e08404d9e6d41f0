#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sigmastab/int_types.hpp"

namespace sigmastab {

// A morphism m -> n of the category of partial injections: an injective map
// defined on a subset of {1..m} with values in {1..n}. Interfaces are
// 1-based; internally position i is stored at index i-1 with 0 for
// "undefined".
class PartialInjection {
 public:
  PartialInjection() : n_(0) {}
  PartialInjection(int m, int n) : n_(n), map_(m, 0) {}
  PartialInjection(int m, int n, std::vector<int> images);

  static PartialInjection identity(int n);
  // n -> n+1, i |-> i+1 (the added point sits at position 1 of the target)
  static PartialInjection iota(int n);
  // n+1 -> n, 1 undefined, i |-> i-1
  static PartialInjection pi(int n_plus_1);
  // endomorphism of n undefined exactly on S (1-based indices)
  static PartialInjection forget(int n, const std::vector<int>& S);
  // adjacent transposition (i, i+1) in Sigma_n
  static PartialInjection transposition(int i, int n);
  static PartialInjection permutation(const std::vector<int>& images);
  // n -> |S| sending the j-th smallest element of S to j, undefined off S
  static PartialInjection order_preserving_projection(int n, const std::vector<int>& S);

  int source() const { return int(map_.size()); }
  int target() const { return n_; }
  bool defined(int i) const { return map_[i - 1] != 0; }
  int apply(int i) const { return map_[i - 1]; }  // 0 when undefined
  int defined_count() const;

  // Sf: m+1 -> n+1 with 1 |-> 1 and i+1 |-> f(i)+1
  PartialInjection stabilize() const;

  bool is_identity() const;
  bool is_permutation() const { return source() == target() && defined_count() == source(); }

  bool operator==(const PartialInjection&) const = default;

  // text notation: "3->5:[2,-,4]"
  std::string str() const;
  static std::optional<PartialInjection> parse(const std::string& s);

  uint64_t hash() const;

 private:
  int n_;
  std::vector<int> map_;
};

// g after f; requires f.target == g.source.
PartialInjection compose(const PartialInjection& g, const PartialInjection& f);

struct PartialInjectionHash {
  size_t operator()(const PartialInjection& p) const { return size_t(p.hash()); }
};

// |Hom(m,n)| = sum_k C(m,k) C(n,k) k!
Int hom_count(int m, int n);
// All morphisms m -> n; throws if the count exceeds the bound. Results are
// memoized behind a lock; the returned reference stays valid.
const std::vector<PartialInjection>& enumerate_hom(int m, int n, long bound = 2'000'000);

// Word in the generators iota_n, pi_{n+1} and adjacent transpositions.
// Atoms are listed in application order: the first atom acts first.
struct GenAtom {
  enum class Kind { Iota, Pi, Sigma };
  Kind kind;
  int n;  // Iota: n -> n+1;  Pi: n -> n-1 (source size);  Sigma: object n
  int i;  // Sigma only: swaps i, i+1

  PartialInjection value() const;
  std::string str() const;
};
using GeneratorWord = std::vector<GenAtom>;

PartialInjection compose_word(const GeneratorWord& w, int source);
// A word whose composite equals f. Any valid word; no canonical form.
GeneratorWord decompose_into_generators(const PartialInjection& f);

// Adjacent-transposition word for a permutation given as images (1-based),
// listed in application order.
std::vector<int> adjacent_word(const std::vector<int>& images);

}  // namespace sigmastab

#pragma once

#include <map>
#include <set>

#include "sigmastab/functor.hpp"

namespace sigmastab {

// Difference functor: (ΔT)_n = coker(T(iota_n): T_n -> T_{n+1}), truncation
// drops by one. Induced morphisms descend from T(Sf).
FunctorPtr delta(const TruncatedFunctor& t, const CancelToken* cancel = nullptr);

struct DegreeResult {
  int value = -1;
  bool exact = true;  // false: "degree >= value, indeterminate at this truncation"
  std::string str() const;
};
DegreeResult degree(const TruncatedFunctor& t, const CancelToken* cancel = nullptr);

struct HeightResult {
  int value = -1;
  bool exact = true;  // false when T_N^N != 0, so the height may exceed N
  int witness_n = -1, witness_k = -1;
  std::string str() const;
};
HeightResult height(const TruncatedFunctor& t, const CancelToken* cancel = nullptr);

struct CrossEffect {
  int n;
  std::vector<std::vector<int>> partition;  // disjoint subsets of {1..n}
  Subgroup sub;                             // subgroup of T_n
  CanonGroup invariants;
};

// T_n[S_1|...|S_p] = im(Tf_{complement}) ∩ ker(Tf_{S_1}) ∩ ... For discrete
// partitions this is computed from the commuting-idempotent projector; for
// general partitions from kernels and images directly.
CrossEffect cross_effect(const TruncatedFunctor& t, int n,
                         const std::vector<std::vector<int>>& partition,
                         const CancelToken* cancel = nullptr);
// Both computation paths, for the agreement oracle.
CrossEffect cross_effect_projector(const TruncatedFunctor& t, int n,
                                   const std::vector<std::vector<int>>& partition,
                                   const CancelToken* cancel = nullptr);
CrossEffect cross_effect_intersection(const TruncatedFunctor& t, int n,
                                      const std::vector<std::vector<int>>& partition,
                                      const CancelToken* cancel = nullptr);
// T_n^k = T_n[{n-k+1,...,n}^delta]
CrossEffect top_cross_effect(const TruncatedFunctor& t, int n, int k,
                             const CancelToken* cancel = nullptr);

struct DecompositionReport {
  int n = 0;
  std::map<std::vector<int>, CanonGroup> summands;  // Q -> iso class of T_n[Q^delta]
  bool witness_iso = false;     // ⊕_Q T_n[Q^delta] -> T_n is an isomorphism
  bool ranks_match = false;     // invariants of the sum match T_n
  bool equivariance_ok = false; // permutations permute the summands; G_n^k preserves T_n^k
  std::string failure;
  bool ok() const { return witness_iso && ranks_match && equivariance_ok; }
};
DecompositionReport decompose(const TruncatedFunctor& t, int n,
                              const CancelToken* cancel = nullptr);

FunctorPtr functor_direct_sum(const TruncatedFunctor& a, const TruncatedFunctor& b,
                              const CancelToken* cancel = nullptr);
FunctorPtr functor_tensor(const TruncatedFunctor& a, const TruncatedFunctor& b,
                          const CancelToken* cancel = nullptr);
FunctorPtr tensor_with_group(const TruncatedFunctor& a, const FgAbGroup& g,
                             const CancelToken* cancel = nullptr);

struct LemmaSuiteReport {
  bool bijection_ok = true;      // T(iota_m^n) restricts to T_m^k ≅ T_n^k
  bool ses_ok = true;            // three-term splitting of T_n[S1⊔S2|...]
  bool decomp_general_ok = true; // T_n[S|R^δ] = ⊕_Q T_n[(Q⊔R)^δ]
  bool height_le_degree = true;
  std::string failure;
  bool ok() const { return bijection_ok && ses_ok && decomp_general_ok && height_le_degree; }
};
LemmaSuiteReport verify_lemma_suite(const TruncatedFunctor& t, int bound = 4,
                                    const CancelToken* cancel = nullptr);

// Helpers shared with the homology layer.
PartialInjection iota_chain(int m, int n);  // iota_{n-1} ∘ ... ∘ iota_m : m -> n
// Induced map A -> B between subgroups of the endpoints of f, when f maps
// im(A) into im(B); nullopt otherwise.
std::optional<AbMap> restrict_map(const AbMap& f, const Subgroup& a, const Subgroup& b,
                                  const CancelToken* cancel = nullptr);

}  // namespace sigmastab

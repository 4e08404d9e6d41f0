#pragma once

#include "sigmastab/functor.hpp"

namespace sigmastab {

// Free graded homology of a path-connected label space, given by ranks per
// degree; ranks[0] must be 1 (the unit class). Torsion input is rejected:
// the integral construction needs a free basis and field inputs are
// dimensions anyway.
struct GradedBasis {
  std::vector<int> ranks;

  static GradedBasis circle() { return GradedBasis{{1, 1}}; }
  int top() const { return int(ranks.size()) - 1; }
  // largest k with reduced ranks vanishing in degrees <= k; nullopt when all
  // reduced homology vanishes
  std::optional<int> hconn() const;
  void check() const;
};

// Ordered partition with all parts >= 1.
struct PartitionType {
  std::vector<int> parts;

  int total() const;
  void check() const;
  std::string str() const;
};

// |lambda| <= |mu| in the injection order on ordered partitions.
bool partition_leq(const PartitionType& a, const PartitionType& b);

FunctorPtr constant_functor(const CanonGroup& value, Ring ring, int N);
FunctorPtr partition_functor(const PartitionType& lambda, Ring ring, int N);
FunctorPtr interval_partition_functor(const PartitionType& lambda, const PartitionType& mu,
                                      Ring ring, int N);
FunctorPtr kunneth_functor(const GradedBasis& basis, int q, Ring ring, int N);

// The alternating-coefficients attempt: Z[Z/2] with permutations acting by
// sign and iota/pi the canonical inclusion/projection. This is expected to
// fail functoriality; the report carries the witness composite. Restricted
// checks (permutations only / iota only) are expected to pass.
struct SignAttemptReport {
  FunctorPtr attempt;
  ValidationReport functoriality;  // expected: ok == false
  bool perms_only_ok = false;
  bool iota_only_ok = false;
};
SignAttemptReport sign_extension_attempt(int N, const CancelToken* cancel = nullptr);

// Builders addressable as "family:params" spec strings:
//   const:Z   const:Z/4   const:Z^2+Z/2   partition:2,1   interval:1;2
//   kunneth:circle,q=1[,Q]   kunneth:b=1_0_1,q=2[,F2]   sign-attempt
FunctorPtr build_family(const std::string& spec, int N, Ring ring);

// Example library used by the acceptance and report tooling.
std::vector<std::string> example_library_specs();

}  // namespace sigmastab

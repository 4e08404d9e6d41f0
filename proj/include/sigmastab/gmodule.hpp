#pragma once

#include "sigmastab/abelian.hpp"
#include "sigmastab/perm_group.hpp"

namespace sigmastab {

// A G-module: presented carrier plus an action matrix per group element
// (built from the generator actions through the Cayley graph).
class GModule {
 public:
  GModule(PermGroupPtr G, FgAbGroup carrier, std::vector<IntMat> generator_actions,
          Ring ring = Ring::ZZ());

  const PermGroupPtr& group() const { return G_; }
  const FgAbGroup& carrier() const { return carrier_; }
  Ring ring() const { return ring_; }
  const IntMat& action(int element_index) const { return actions_[element_index]; }

  // action matrices are invertible homomorphisms and respect the product
  bool verify(const CancelToken* cancel = nullptr) const;

  static GModule trivial(PermGroupPtr G, FgAbGroup carrier, Ring ring = Ring::ZZ());

 private:
  PermGroupPtr G_;
  FgAbGroup carrier_;
  Ring ring_;
  std::vector<IntMat> actions_;
};

// Ind_H^G M: one copy of the carrier per coset gH, with the permuted block
// action g'(g ⊗ m) = g'g ⊗ m rewritten through coset representatives.
GModule induced_module(const PermGroupPtr& G, const PermGroupPtr& H, const GModule& m);

// Coinvariants M_G = M / <g m - m>, with the projection from the carrier.
std::pair<FgAbGroup, AbMap> coinvariants(const GModule& m, const CancelToken* cancel = nullptr);

}  // namespace sigmastab

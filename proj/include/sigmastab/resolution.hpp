#pragma once

#include "sigmastab/gmodule.hpp"

namespace sigmastab {

// One group-ring element of (ZG)^rank: (target generator, group element,
// coefficient) triples.
struct RingVec {
  std::vector<std::tuple<int, int, Int>> terms;
};

// Partial free resolution of the trivial module over the group ring, built
// degree by degree: F_0 = ZG -> Z, and each ∂_{d+1} maps onto ker ∂_d. Over
// F_p the same construction runs over the group algebra F_p G.
struct FreeResolution {
  PermGroupPtr G;
  Ring ring;                                    // Z or Fp
  std::vector<int> ranks;                       // F_0..F_D
  std::vector<std::vector<RingVec>> boundary;   // boundary[d][j] = ∂(e_j), d >= 1
  int max_degree() const { return int(ranks.size()) - 1; }
};

// Boundaries up to ∂_D; homology then computable through degree D-1.
FreeResolution small_resolution(const PermGroupPtr& G, int D, Ring ring,
                                const CancelToken* cancel = nullptr);

// phi-equivariant lift of the identity of Z: psi[d][j] is the image of the
// j-th ZG-generator of A's F_d, as a dense integer vector over B's Z-basis
// (generator-major, group-element-minor).
struct ResChainMap {
  std::vector<std::vector<std::vector<Int>>> psi;
};
ResChainMap lift_chain_map(const FreeResolution& a, const FreeResolution& b, const GroupHom& phi,
                           int D, const CancelToken* cancel = nullptr);

// C_* = M ⊗_{ZG} F_* as presented groups, with d[k] : C_k -> C_{k-1}.
struct CoeffComplex {
  std::vector<FgAbGroup> C;
  std::vector<AbMap> d;  // d[0] unused
};
CoeffComplex coefficient_complex(const FreeResolution& f, const GModule& m, int D);

// Chain-level map C^A_d -> C^B_d induced by a resolution chain map and a
// phi-equivariant coefficient map iota : M_A -> M_B.
IntMat coefficient_chain_map(const FreeResolution& a, const FreeResolution& b,
                             const ResChainMap& psi, const GModule& ma, const GModule& mb,
                             const IntMat& iota, int d);

}  // namespace sigmastab

#pragma once

#include "sigmastab/functor_ops.hpp"
#include "sigmastab/resolution.hpp"

namespace sigmastab {

// Resource caps for the normalized bar complex. Bar generator counts grow
// like (|G|-1)^d, so the engine refuses cells beyond these limits.
struct HomologyCaps {
  long group_order_field = 720;
  long group_order_z = 120;
  int max_deg_field = 3;
  int max_deg_z = 2;
  long bar_max_columns = 300000;  // tuples * carrier rank at degree d+1
};

struct CapExceeded : math_error {
  explicit CapExceeded(const std::string& w) : math_error(w) {}
};

struct HomologyValue {
  FgAbGroup H;
  CanonGroup invariants;  // ring-aware
};

// H_d(G; M) via the normalized bar complex with coefficients; exact over Z,
// F_p and Q (carriers are Z-presentations throughout).
Subquotient bar_complex_homology(const GModule& m, int d, const HomologyCaps& caps = {},
                                 const CancelToken* cancel = nullptr);
HomologyValue bar_homology(const GModule& m, int d, const HomologyCaps& caps = {},
                           const CancelToken* cancel = nullptr);

// Chain-level map of bar complexes at degree d induced by an injective group
// homomorphism and a phi-equivariant coefficient map.
IntMat bar_chain_map(const GModule& ma, const GModule& mb, const GroupHom& phi,
                     const IntMat& iota, int d, const HomologyCaps& caps = {});

// H_d(G; M) through a small adaptive free resolution (Z, F_p) or the
// averaging shortcut over Q (zero above degree 0). The resolution is taken
// from the caller so that it can be cached and shared with chain lifts.
Subquotient resolution_homology(const FreeResolution& res, const GModule& m, int d,
                                const CancelToken* cancel = nullptr);

// checks H_0 from the complex against coinvariants computed directly
bool h0_matches_coinvariants(const GModule& m, const Subquotient& h0, Ring ring,
                             const CancelToken* cancel = nullptr);

// Shapiro reduction certificate for one summand T_n^k of a functor:
// H_*(Sigma_n ; Ind_{S_{n-k} x S_k} T_n^k)  ==  H_*(S_{n-k} x S_k ; T_n^k).
struct ShapiroCell {
  int d;
  CanonGroup induced_side;  // bar on the induced module over Sigma_n
  CanonGroup reduced_side;  // homology of the Young subgroup with T_n^k
  bool agree = false;
  bool skipped = false;  // cap exceeded on the induced side
};
struct ShapiroCertificate {
  int n = 0, k = 0;
  std::vector<ShapiroCell> cells;
  bool all_agree() const;
  int computed_cells() const;
};
ShapiroCertificate shapiro_reduce(const TruncatedFunctor& t, int n, int k, int max_deg,
                                  const HomologyCaps& caps = {},
                                  const CancelToken* cancel = nullptr);

// The module T_n as a Sigma_n-module, and the blocks of its cross-effect
// decomposition as modules over the Young subgroups.
GModule functor_module(const TruncatedFunctor& t, int n, const CancelToken* cancel = nullptr);
struct DecompositionBlock {
  int k;
  PermGroupPtr group;  // Sigma_{n-k} x Sigma_k
  GModule module;      // carrier T_n^k
  Subgroup sub;        // inclusion into T_n
};
std::vector<DecompositionBlock> decomposition_blocks(const TruncatedFunctor& t, int n,
                                                     const CancelToken* cancel = nullptr);

// Direct stabilisation map H_d(S_n; T_n) -> H_d(S_{n+1}; T_{n+1}) computed by
// the explicit chain map of bar complexes (the oracle path; subject to caps).
struct BarStabMap {
  Subquotient src, tgt;
  AbMap map;
};
BarStabMap bar_stabilisation_map(const TruncatedFunctor& t, int n, int d,
                                 const HomologyCaps& caps = {},
                                 const CancelToken* cancel = nullptr);

}  // namespace sigmastab

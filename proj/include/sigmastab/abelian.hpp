#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigmastab/echelon.hpp"
#include "sigmastab/int_matrix.hpp"
#include "sigmastab/ring.hpp"
#include "sigmastab/smith.hpp"

namespace sigmastab {

// Finitely generated abelian group presented by an integer relation matrix
// whose columns are relators among ngens generators.
struct FgAbGroup {
  int ngens = 0;
  IntMat rel;  // ngens x (number of relators)

  FgAbGroup() : rel(0, 0) {}
  FgAbGroup(int n, IntMat r) : ngens(n), rel(std::move(r)) {}

  static FgAbGroup free_group(int rank) { return FgAbGroup(rank, IntMat(rank, 0)); }
  static FgAbGroup zero() { return free_group(0); }
  // Z/d1 + Z/d2 + ... + Z^free  (di >= 2)
  static FgAbGroup from_invariants(const std::vector<Int>& torsion, int free_rank);

  bool operator==(const FgAbGroup&) const = default;
};

// Homomorphism between presented groups, stored on generators.
struct AbMap {
  FgAbGroup src, tgt;
  IntMat m;  // tgt.ngens x src.ngens

  AbMap() : m(0, 0) {}
  AbMap(FgAbGroup s, FgAbGroup t, IntMat mat) : src(std::move(s)), tgt(std::move(t)), m(std::move(mat)) {}

  static AbMap identity(const FgAbGroup& g) { return AbMap(g, g, IntMat::identity(g.ngens)); }
  static AbMap zero_map(const FgAbGroup& s, const FgAbGroup& t) {
    return AbMap(s, t, IntMat(t.ngens, s.ngens));
  }
};

// Isomorphism class: invariant factors (>= 2, divisibility chain) plus rank.
struct CanonGroup {
  std::vector<Int> torsion;
  int free_rank = 0;

  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  bool operator==(const CanonGroup&) const = default;
  std::string str() const;
};

// Canonical presentation of a group together with the change-of-basis maps.
struct Canonicalization {
  CanonGroup invariants;
  FgAbGroup group;    // diag presentation: torsion relators only
  AbMap to_canon;     // original -> canonical
  AbMap from_canon;   // canonical -> original
};

struct Subgroup {
  FgAbGroup grp;
  AbMap incl;  // injective, into the ambient group
};

bool is_well_defined(const AbMap& f, const CancelToken* cancel = nullptr);
AbMap compose(const AbMap& g, const AbMap& f);
bool maps_equal(const AbMap& f, const AbMap& g, const CancelToken* cancel = nullptr);

Canonicalization canonicalize(const FgAbGroup& g, const CancelToken* cancel = nullptr);
CanonGroup canonical_form(const FgAbGroup& g, Ring ring = Ring::ZZ(),
                          const CancelToken* cancel = nullptr);
bool is_zero_group(const FgAbGroup& g, Ring ring = Ring::ZZ(),
                   const CancelToken* cancel = nullptr);

Subgroup kernel(const AbMap& f, const CancelToken* cancel = nullptr);
Subgroup image(const AbMap& f, const CancelToken* cancel = nullptr);
// Quotient target/im(f) plus the projection map.
std::pair<FgAbGroup, AbMap> cokernel(const AbMap& f, const CancelToken* cancel = nullptr);
Subgroup intersect_subgroups(const std::vector<Subgroup>& parts,
                             const CancelToken* cancel = nullptr);
Subgroup full_subgroup(const FgAbGroup& g);

bool is_injective(const AbMap& f, Ring ring = Ring::ZZ(), const CancelToken* cancel = nullptr);
bool is_isomorphism(const AbMap& f, Ring ring = Ring::ZZ(), const CancelToken* cancel = nullptr);

// x, as an element of tgt, lies in the subgroup im(incl)?
bool subgroup_contains(const Subgroup& s, const std::vector<Int>& x, Ring ring = Ring::ZZ(),
                       const CancelToken* cancel = nullptr);
bool subgroup_leq(const Subgroup& a, const Subgroup& b, Ring ring = Ring::ZZ(),
                  const CancelToken* cancel = nullptr);
bool subgroups_equal(const Subgroup& a, const Subgroup& b, Ring ring = Ring::ZZ(),
                     const CancelToken* cancel = nullptr);

// Sum of subgroups of a common ambient group.
Subgroup subgroup_sum(const std::vector<Subgroup>& parts, const CancelToken* cancel = nullptr);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
AbMap direct_sum(const AbMap& f, const AbMap& g);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);
AbMap tensor(const AbMap& f, const AbMap& g);

// Middle homology ker(d_here)/im(d_next) of  A --d_next--> B --d_here--> C,
// with witnesses: generators of H are cycles in B (columns of `lift`), and
// class_of expresses an arbitrary cycle in terms of them.
struct Subquotient {
  FgAbGroup H;
  IntMat lift;  // B.ngens x H.ngens
  std::vector<Int> class_of(const std::vector<Int>& cycle) const;

  IntMat cycle_basis;  // B.ngens x k, basis of the cycle lattice
};
Subquotient homology_of_complex(const AbMap& d_next, const AbMap& d_here,
                                Ring ring = Ring::ZZ(), const CancelToken* cancel = nullptr);

// Sparse variant for large chain groups: the boundary matrices are given
// columnwise and the relator lattice of H is accumulated by an echelon, so
// memory stays proportional to the number of nonzeros plus dim(C_d)^2.
Subquotient homology_of_sparse_complex(const SparseMat& d_next, const FgAbGroup& B,
                                       const FgAbGroup& C, const SparseMat& d_here,
                                       Ring ring = Ring::ZZ(),
                                       const CancelToken* cancel = nullptr);

// Induced map on homology from a chain map square: given subquotients at B
// and B' and a chain-level map F: B -> B' with F(cycles) ⊆ cycles' and
// F(boundaries) ⊆ boundaries', return the induced AbMap H -> H'.
AbMap induced_on_homology(const Subquotient& h, const Subquotient& h2, const AbMap& chain_map,
                          const CancelToken* cancel = nullptr);

// Left inverse certificate: rho with rho∘f = scale*id, scale != 0. Over Z
// and F_p the scale is 1 (for F_p the carrier relations absorb multiples of
// p); over Q any nonzero scale certifies split-injectivity.
struct SplitCertificate {
  AbMap rho;
  Int scale;
};
std::optional<SplitCertificate> left_inverse(const AbMap& f, Ring ring = Ring::ZZ(),
                                             const CancelToken* cancel = nullptr);

// Map between canonically presented groups induced by f when src/tgt are the
// canonicalizations of f's endpoints.
AbMap transport(const Canonicalization& src, const Canonicalization& tgt, const AbMap& f);

}  // namespace sigmastab

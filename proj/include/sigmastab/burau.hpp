#pragma once

#include "sigmastab/int_matrix.hpp"
#include "sigmastab/laurent.hpp"

namespace sigmastab {

// The Burau matrices for the braid-category generators, together with the
// attempted extension to the forgetful maps: iota_n prepends a zero
// coordinate and pi_{n+1} drops the first coordinate.
struct GeneratorAssignment {
  int max_n = 0;

  LaurentMatrix sigma(int i, int n, int eps = +1) const;  // n x n
  LaurentMatrix iota(int n) const;                         // (n+1) x n
  LaurentMatrix pi(int n_plus_1) const;                    // n x (n+1)
};

GeneratorAssignment burau_assignment(int max_n);

struct RelationInstance {
  std::string relation;  // "(i)", "(b)", "(c)", "(e)"
  std::string params;
  bool holds = false;
  std::string residual;          // nonzero difference, printed
  std::vector<std::string> vanishing_locus;  // rational t where the residual dies
  LaurentMatrix residual_matrix;
};

struct RelationReport {
  std::vector<RelationInstance> instances;
  bool all_hold() const;
  int first_failure_k = -1;  // smallest k with a failing edge relation, -1 if none
};

// Every relation instance with objects <= max_n, edge exponents <= K.
RelationReport check_relations(const GeneratorAssignment& a, int K = 8);

struct EdgeEffect {
  LaurentMatrix product;      // pi_{n+1} sigma_{1,n+1}^k iota_n
  LaurentMatrix closed_form;  // ((-t)^k + t)/(t+1) ⊕ I_{n-1}
  bool equal = false;
};
// Throws when the displayed division is not exact (it always is).
EdgeEffect edge_effect_value(const GeneratorAssignment& a, int k, int n);

// Specialize t := t0 (nonzero rational) and run the full relation suite:
// an instance holds at t0 exactly when its symbolic residual vanishes there.
RelationReport check_relations_at(const GeneratorAssignment& a, const Rat& t0, int K = 8);

// At t = 1 every entry evaluates to an integer (the sum of coefficients);
// exposed for the cross-check against the rank-one partition family.
IntMat evaluate_at_one(const LaurentMatrix& m);

}  // namespace sigmastab

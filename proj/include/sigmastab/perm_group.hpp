#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "sigmastab/int_types.hpp"
#include "sigmastab/partial_injection.hpp"

namespace sigmastab {

// Young subgroup Sigma_{b1} x ... x Sigma_{bk} of Sigma_n acting on
// consecutive blocks of {1..n}; the full symmetric group is one block.
// Elements are enumerated once; multiplication goes through an index table.
class PermGroup {
 public:
  static std::shared_ptr<const PermGroup> symmetric(int n);
  static std::shared_ptr<const PermGroup> young(std::vector<int> blocks);

  int degree() const { return degree_; }
  const std::vector<int>& blocks() const { return blocks_; }
  long order() const { return long(elements_.size()); }

  // elements as image vectors; index 0 is the identity
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  int index_of(const std::vector<int>& perm) const;
  bool contains(const std::vector<int>& perm) const;

  int mul(int a, int b) const;  // composition a∘b as functions
  int inv(int a) const;

  // generating set: adjacent transpositions inside each block, as element indices
  const std::vector<int>& generators() const { return generators_; }
  // smaller generating set (transposition + cycle per block), used by the
  // resolution builder to keep module ranks down
  const std::vector<int>& small_generators() const { return small_generators_; }

  // cosets g·H of a Young subgroup H (same degree): representative element
  // indices, and the coset id of every element
  struct Cosets {
    std::vector<int> reps;
    std::vector<int> coset_of;
  };
  Cosets cosets(const PermGroup& subgroup) const;

 private:
  explicit PermGroup(std::vector<int> blocks);

  int degree_ = 0;
  std::vector<int> blocks_;
  std::vector<std::vector<int>> elements_;
  std::unordered_map<uint64_t, int> index_;
  std::vector<int> generators_;
  std::vector<int> small_generators_;
  std::vector<int> inverse_;
  mutable std::vector<std::vector<int>> mul_table_;  // built eagerly

  static uint64_t key(const std::vector<int>& perm);
};

using PermGroupPtr = std::shared_ptr<const PermGroup>;

// An injective homomorphism between permutation groups given elementwise.
struct GroupHom {
  PermGroupPtr src, tgt;
  std::vector<int> image;  // element index in tgt per element index in src

  static GroupHom from_letter_map(const PermGroupPtr& src, const PermGroupPtr& tgt,
                                  const std::vector<int>& letter_image);
};

}  // namespace sigmastab

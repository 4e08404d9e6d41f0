#include "sigmastab/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace sigmastab {

uint64_t PermGroup::key(const std::vector<int>& perm) {
  uint64_t h = 1469598103934665603ull;
  for (int v : perm) {
    h ^= uint64_t(v);
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup::PermGroup(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  for (int b : blocks_) {
    if (b < 0) throw math_error("PermGroup: negative block");
    degree_ += b;
  }
  // enumerate block permutations as products
  std::vector<int> id(degree_);
  std::iota(id.begin(), id.end(), 1);
  std::vector<std::vector<int>> acc{id};
  int offset = 0;
  for (int b : blocks_) {
    std::vector<int> letters(b);
    std::iota(letters.begin(), letters.end(), offset + 1);
    std::vector<std::vector<int>> next;
    std::vector<int> perm = letters;
    std::sort(perm.begin(), perm.end());
    do {
      for (const auto& base : acc) {
        std::vector<int> e = base;
        for (int i = 0; i < b; ++i) e[offset + i] = perm[i];
        next.push_back(std::move(e));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc = std::move(next);
    offset += b;
  }
  std::sort(acc.begin(), acc.end());
  elements_ = std::move(acc);
  // identity sorts first among permutations of {1..n}? Not necessarily; force it.
  auto it = std::find(elements_.begin(), elements_.end(), id);
  std::iter_swap(elements_.begin(), it);
  for (int i = 0; i < int(elements_.size()); ++i) index_[key(elements_[i])] = i;

  inverse_.resize(elements_.size());
  for (int i = 0; i < int(elements_.size()); ++i) {
    std::vector<int> inv(degree_);
    for (int j = 1; j <= degree_; ++j) inv[elements_[i][j - 1] - 1] = j;
    inverse_[i] = index_.at(key(inv));
  }

  offset = 0;
  for (int b : blocks_) {
    for (int i = 1; i < b; ++i) {
      std::vector<int> t = id;
      std::swap(t[offset + i - 1], t[offset + i]);
      generators_.push_back(index_.at(key(t)));
      if (i == 1) small_generators_.push_back(generators_.back());
    }
    if (b >= 3) {
      std::vector<int> c = id;
      for (int i = 0; i < b; ++i) c[offset + i] = offset + 1 + (i + 1) % b;
      small_generators_.push_back(index_.at(key(c)));
    }
    offset += b;
  }

  mul_table_.assign(elements_.size(), std::vector<int>(elements_.size(), -1));
  for (int a = 0; a < int(elements_.size()); ++a)
    for (int b = 0; b < int(elements_.size()); ++b) {
      std::vector<int> c(degree_);
      for (int j = 1; j <= degree_; ++j) c[j - 1] = elements_[a][elements_[b][j - 1] - 1];
      mul_table_[a][b] = index_.at(key(c));
    }
}

std::shared_ptr<const PermGroup> PermGroup::symmetric(int n) {
  return std::shared_ptr<const PermGroup>(new PermGroup(std::vector<int>{n}));
}

std::shared_ptr<const PermGroup> PermGroup::young(std::vector<int> blocks) {
  std::vector<int> nz;
  for (int b : blocks)
    if (b > 0) nz.push_back(b);
  if (nz.empty()) nz.push_back(0);
  return std::shared_ptr<const PermGroup>(new PermGroup(std::move(nz)));
}

int PermGroup::index_of(const std::vector<int>& perm) const {
  auto it = index_.find(key(perm));
  if (it == index_.end()) throw math_error("PermGroup: element not in group");
  return it->second;
}

bool PermGroup::contains(const std::vector<int>& perm) const {
  if (int(perm.size()) != degree_) return false;
  auto it = index_.find(key(perm));
  return it != index_.end() && elements_[it->second] == perm;
}

int PermGroup::mul(int a, int b) const { return mul_table_[a][b]; }
int PermGroup::inv(int a) const { return inverse_[a]; }

PermGroup::Cosets PermGroup::cosets(const PermGroup& subgroup) const {
  if (subgroup.degree() != degree_) throw math_error("cosets: degree mismatch");
  Cosets out;
  out.coset_of.assign(elements_.size(), -1);
  for (int g = 0; g < int(elements_.size()); ++g) {
    if (out.coset_of[g] >= 0) continue;
    int c = int(out.reps.size());
    out.reps.push_back(g);
    for (int h = 0; h < int(subgroup.elements().size()); ++h) {
      int gh = mul(g, index_of(subgroup.elements()[h]));
      out.coset_of[gh] = c;
    }
  }
  return out;
}

GroupHom GroupHom::from_letter_map(const PermGroupPtr& src, const PermGroupPtr& tgt,
                                   const std::vector<int>& letter_image) {
  if (int(letter_image.size()) != src->degree())
    throw math_error("GroupHom: letter map has wrong length");
  GroupHom out{src, tgt, {}};
  out.image.resize(src->order());
  for (int g = 0; g < int(src->order()); ++g) {
    const auto& perm = src->elements()[g];
    std::vector<int> moved(tgt->degree());
    std::iota(moved.begin(), moved.end(), 1);
    for (int j = 1; j <= src->degree(); ++j) moved[letter_image[j - 1] - 1] = letter_image[perm[j - 1] - 1];
    out.image[g] = tgt->index_of(moved);
  }
  // homomorphism property
  for (int a = 0; a < int(src->order()); ++a)
    for (int b = 0; b < int(src->order()); ++b)
      if (out.image[src->mul(a, b)] != tgt->mul(out.image[a], out.image[b]))
        throw math_error("GroupHom: letter map does not induce a homomorphism");
  return out;
}

}  // namespace sigmastab

#include "sigmastab/gmodule.hpp"

#include <queue>

namespace sigmastab {

GModule::GModule(PermGroupPtr G, FgAbGroup carrier, std::vector<IntMat> generator_actions,
                 Ring ring)
    : G_(std::move(G)), carrier_(std::move(carrier)), ring_(ring) {
  const auto& gens = G_->generators();
  if (generator_actions.size() != gens.size())
    throw math_error("GModule: one action matrix per group generator required");
  for (auto& m : generator_actions)
    if (m.rows() != carrier_.ngens || m.cols() != carrier_.ngens)
      throw math_error("GModule: action matrix has wrong shape");
  if (ring_.kind == Ring::Kind::Fp)
    for (auto& m : generator_actions) m.reduce_mod(Int(ring_.p));

  // A(g∘h) = A(g)A(h): breadth-first closure from the identity
  actions_.assign(G_->order(), IntMat());
  std::vector<char> have(G_->order(), 0);
  actions_[0] = IntMat::identity(carrier_.ngens);
  have[0] = 1;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int e = bfs.front();
    bfs.pop();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int ge = G_->mul(gens[gi], e);
      if (have[ge]) continue;
      actions_[ge] = generator_actions[gi].mul(actions_[e]);
      if (ring_.kind == Ring::Kind::Fp) actions_[ge].reduce_mod(Int(ring_.p));
      have[ge] = 1;
      bfs.push(ge);
    }
  }
  for (char h : have)
    if (!h) throw math_error("GModule: generators do not generate the group");
}

bool GModule::verify(const CancelToken* cancel) const {
  for (long g = 0; g < G_->order(); ++g) {
    AbMap a(carrier_, carrier_, actions_[g]);
    if (!is_well_defined(a, cancel)) return false;
  }
  // invertibility via the inverse element
  for (long g = 0; g < G_->order(); ++g) {
    IntMat prod = actions_[G_->inv(int(g))].mul(actions_[g]);
    AbMap p(carrier_, carrier_, prod);
    if (!maps_equal(p, AbMap::identity(carrier_), cancel)) return false;
  }
  // product respected on generator pairs (the cache construction gives the
  // rest by induction)
  for (int a : G_->generators())
    for (long b = 0; b < G_->order(); ++b) {
      check_cancel(cancel);
      IntMat lhs = actions_[G_->mul(a, int(b))];
      IntMat rhs = actions_[a].mul(actions_[b]);
      if (ring_.kind == Ring::Kind::Fp) rhs.reduce_mod(Int(ring_.p));
      AbMap l(carrier_, carrier_, lhs), r(carrier_, carrier_, rhs);
      if (!maps_equal(l, r, cancel)) return false;
    }
  return true;
}

GModule GModule::trivial(PermGroupPtr G, FgAbGroup carrier, Ring ring) {
  std::vector<IntMat> gens(G->generators().size(), IntMat::identity(carrier.ngens));
  return GModule(std::move(G), std::move(carrier), std::move(gens), ring);
}

GModule induced_module(const PermGroupPtr& G, const PermGroupPtr& H, const GModule& m) {
  if (m.group()->degree() != H->degree() || H->degree() != G->degree())
    throw math_error("induced_module: degree mismatch");
  auto cosets = G->cosets(*H);
  int nc = int(cosets.reps.size());
  int r = m.carrier().ngens;

  FgAbGroup carrier = FgAbGroup::zero();
  for (int c = 0; c < nc; ++c) carrier = direct_sum(carrier, m.carrier());

  std::vector<IntMat> gen_actions;
  for (int gen : G->generators()) {
    IntMat a(nc * r, nc * r);
    for (int c = 0; c < nc; ++c) {
      int moved = G->mul(gen, cosets.reps[c]);
      int c2 = cosets.coset_of[moved];
      // h = rep(c2)^{-1} * gen * rep(c) lies in H
      int h_in_G = G->mul(G->inv(cosets.reps[c2]), moved);
      int h = m.group()->index_of(G->elements()[h_in_G]);
      const IntMat& block = m.action(h);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a.at(c2 * r + i, c * r + j) = block.at(i, j);
    }
    gen_actions.push_back(std::move(a));
  }
  return GModule(G, std::move(carrier), std::move(gen_actions), m.ring());
}

std::pair<FgAbGroup, AbMap> coinvariants(const GModule& m, const CancelToken* cancel) {
  (void)cancel;
  IntMat rel = m.carrier().rel;
  IntMat id = IntMat::identity(m.carrier().ngens);
  for (int gen : m.group()->generators()) rel = rel.hstack(m.action(gen).sub(id));
  FgAbGroup q(m.carrier().ngens, std::move(rel));
  return {q, AbMap(m.carrier(), q, id)};
}

}  // namespace sigmastab

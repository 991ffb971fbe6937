#pragma once

#include "fce/kanweighted.hpp"

namespace fce {

// a relator src ⇸ trg carried by a set-valued functor on op(src) × trg
struct Profunctor {
  Bifunctor data;
  Cat src() const { return data.base.A; }
  Cat trg() const { return data.base.B; }
  const FinSet& at(int a, int b) const { return data.at(a, b); }
  // f: a2 -> a1 in src, g: b1 -> b2 in trg
  int act(int f, int g, int x) const { return data.act(f, g, x); }
};
Profunctor make_profunctor(OpProd base, SetFunctor t);
Profunctor hom_pro(Cat a);
// identity-only bases; counts[a][b] is the size of the cross set
Profunctor discrete_pro(Cat a, Cat b, const std::vector<std::vector<int>>& counts);
// the same tables re-hosted on the pair base of model, so that parallel
// relators built independently can share 2-cells
Profunctor rebase_like(const Profunctor& model, Profunctor p);

// composition in diagram order: first p, then q; classes of p(a,x) × q(x,c)
// over the middle x, with the action on representatives re-verified
struct ProComposite {
  Profunctor left, right;
  Profunctor value;
  std::vector<CoendResult> pts;  // per object of the pair base of value
};
ProComposite pro_compose(const Profunctor& p, const Profunctor& q);

// horizontal pasting [x ⊗ y] -> [alpha(x) ⊗ beta(y)] on classes
SetNatComp pro_hcomp(const ProComposite& s, const ProComposite& t, const SetNatComp& alpha,
                     const SetNatComp& beta);

// hom ; p ≅ p and p ; hom ≅ p
struct UnitorResult {
  ProComposite composite;
  PointwiseIso iso;
};
UnitorResult unit_left(const Profunctor& p);
UnitorResult unit_right(const Profunctor& p);

// (p ; q) ; r ≅ p ; (q ; r) by regrouping representatives
struct AssociatorResult {
  ProComposite pq, qr;
  ProComposite left, right;
  PointwiseIso iso;
};
AssociatorResult associator(const Profunctor& p, const Profunctor& q, const Profunctor& r);

// coherence smoke tests for the pasting machinery
Verdict pentagon_check(const Profunctor& p, const Profunctor& q, const Profunctor& r,
                       const Profunctor& s);
Verdict triangle_check(const Profunctor& p, const Profunctor& q);

// hom(F-, =) on op(src) × trg, and hom(-, F=) on op(trg) × src
Profunctor embed_cov(const FinFunctor& f);
Profunctor embed_contra(const FinFunctor& f);
// embedding a composite against composing the embeddings; g after f
PointwiseIso embed_cov_compose_check(const FinFunctor& f, const FinFunctor& g);
PointwiseIso embed_contra_compose_check(const FinFunctor& f, const FinFunctor& g);

// the two embeddings of one functor are adjoint: the counit composes a
// compatible pair, the unit is the action on arrows; both zig-zag identities
// are traced element-wise through representatives
struct ProAdjunction {
  Profunctor cov, contra;
  ProComposite through_src;  // contra ; cov, on the target category
  ProComposite through_trg;  // cov ; contra, on the source category
  SetNatComp counit;         // through_src => hom
  SetNatComp unit;           // hom => through_trg
  bool ok = false;
  std::string reason;
};
ProAdjunction adjunction_for(const FinFunctor& f);

// full faithfulness read off the unit, against the direct hom comparison
struct FFReport {
  bool via_unit = false;
  bool direct = false;
  bool agree = false;
  int bad_src = -1, bad_trg = -1;  // first pair where the unit fails
  std::string reason;
};
FFReport fully_faithful_via_unit(const FinFunctor& f);

// pointwise families p(x,-) => h(a,-); right adjoint to composing with p
struct RanProResult {
  Profunctor value;
  std::vector<EndResult> pts;  // per object of the pair base of value
};
RanProResult ran_pro(const Profunctor& p, const Profunctor& h, long long cap = 1000000);
// the mapping bijection against a probe g: 2-cells g;p => h against g => ran
Witness ran_pro_universal(const Profunctor& p, const Profunctor& h, const Profunctor& g,
                          long long cap = 2000000);

// right lifting through k and right extension along h
RanProResult right_lift(const Profunctor& k, const Profunctor& l, long long cap = 1000000);
RanProResult right_extend(const Profunctor& l, const Profunctor& h, long long cap = 1000000);
// lifting/extending through hom changes nothing; lifting through a composite
// stages through its factors, and dually
PointwiseIso lift_unit_law(const Profunctor& l, long long cap = 1000000);
PointwiseIso extend_unit_law(const Profunctor& l, long long cap = 1000000);
PointwiseIso lift_compose_law(const Profunctor& h, const Profunctor& k, const Profunctor& l,
                              long long cap = 1000000);
PointwiseIso extend_compose_law(const Profunctor& l, const Profunctor& k, const Profunctor& h,
                                long long cap = 1000000);

// the category glued from src and trg with cross arrows the elements of p;
// inside its twisted arrows, the cross arrows reproduce the category of
// elements of the carrier
struct CollageResult {
  Cat cat;
  std::vector<int> obj_src, obj_trg;                 // object embeddings
  std::vector<int> mor_src, mor_trg;                 // morphism embeddings
  std::vector<std::vector<std::vector<int>>> cross;  // [a][b][x] -> morphism
  CatIso elements_iso;
};
CollageResult collage(const Profunctor& p);

// tensoring a copresheaf on the source along p
struct ProActionResult {
  SetFunctor value;              // on trg
  std::vector<CoendResult> pts;  // per object of trg
};
ProActionResult pro_action(const Profunctor& p, const SetFunctor& f);
PointwiseIso action_unit_law(Cat c, const SetFunctor& f);
PointwiseIso action_compose_law(const Profunctor& p, const Profunctor& q, const SetFunctor& f);

// f ⊣ g exactly when the covariant embedding of f matches the contravariant
// embedding of g; the finitely many 2-cells are searched for an inverse pair
struct AdjointnessReport {
  bool adjoint = false;
  SetNatComp iso;
  std::string reason;
};
AdjointnessReport adjoint_via_embeddings(const FinFunctor& f, const FinFunctor& g);

// presheaves are relators into the point, copresheaves relators out of it
Profunctor pro_from_presheaf(Cat c, const SetFunctor& w);  // w covariant on a cat shaped like op(c)
SetFunctor presheaf_from_pro(const Profunctor& p, Cat host);
Profunctor pro_from_copresheaf(const SetFunctor& f);
SetFunctor copresheaf_from_pro(const Profunctor& p);

}  // namespace fce

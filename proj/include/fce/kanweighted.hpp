#pragma once

#include "fce/coend.hpp"

namespace fce {

// one witness per object of the free variable, plus naturality of the
// comparison along every morphism
struct PointwiseIso {
  std::vector<Witness> at;
  bool natural = false;
  bool ok = false;
  std::string reason;
};

// ---- Yoneda expansions ----
// H(x) against the coend over c of H(c) x hom(c, x). Pass a covariant functor;
// a presheaf is the same thing on the opposite category.
PointwiseIso yoneda_expand_coend(const SetFunctor& h);
// H(x) against the end over c of H(c)^{hom(x, c)}.
PointwiseIso yoneda_expand_end(const SetFunctor& h, long long cap = 1000000);

// ---- pointwise Kan extensions of set-valued functors ----
struct LanResult {
  FinFunctor along;
  SetFunctor value;                  // on along.trg
  std::vector<Bifunctor> integrand;  // per target object d: hom(K-, d) x F-
  std::vector<CoendResult> pts;
  SetNatComp unit;  // f => value ∘ along
};
LanResult lan(const FinFunctor& k, const SetFunctor& f);

struct RanResult {
  FinFunctor along;
  SetFunctor value;
  std::vector<Bifunctor> integrand;  // per target object d: F-^{hom(d, K-)}
  std::vector<EndResult> pts;
  SetNatComp counit;  // value ∘ along => f
};
RanResult ran(const FinFunctor& k, const SetFunctor& f, long long cap = 1000000);

// transformations out of (into) the extension against transformations out of
// (into) the restriction, via the canonical pairing
Witness lan_universal(const LanResult& l, const SetFunctor& f, const SetFunctor& g,
                      long long cap = 2000000);
Witness ran_universal(const RanResult& r, const SetFunctor& f, const SetFunctor& g,
                      long long cap = 2000000);

// extension along the identity, and pasting of two extensions
PointwiseIso lan_identity_check(const SetFunctor& f);
PointwiseIso ran_identity_check(const SetFunctor& f, long long cap = 1000000);
PointwiseIso lan_compose_check(const FinFunctor& k1, const FinFunctor& k2, const SetFunctor& f);

// ---- comma categories and the conical formulas ----
struct CommaCat {
  Cat cat;
  std::vector<std::pair<int, int>> objs;  // (object of the source, morphism of the target)
  std::vector<int> mors;                  // comma morphism -> morphism of the source
  FinFunctor proj;
};
CommaCat comma_under(const FinFunctor& k, int d);  // objects (c, h: d -> Kc)
CommaCat comma_over(const FinFunctor& k, int d);   // objects (c, h: Kc -> d)
Witness ran_via_comma(const RanResult& r, const SetFunctor& f, int d, long long cap = 1000000);
Witness lan_via_comma(const LanResult& l, const SetFunctor& f, int d);

// ---- the codensity construction, packaged as a Kleisli category ----
struct KleisliResult {
  Cat cat;        // same objects; hom(c, c') = end over a of hom(c', Fa)^{hom(c, Fa)}
  FinFunctor embed;
};
KleisliResult codensity_kleisli(const FinFunctor& f, long long cap = 1000000);

// ---- weighted limits and colimits ----
// weight w for a colimit is a presheaf (covariant on the opposite category);
// weight w for a limit is covariant, and the limit is the set of
// transformations w => f
CoendResult weighted_colimit(Cat c, const SetFunctor& w, const SetFunctor& f);
EndResult weighted_limit(Cat c, const SetFunctor& w, const SetFunctor& f,
                         long long cap = 1000000);
Witness weighted_limit_is_nat(Cat c, const SetFunctor& w, const SetFunctor& f,
                              long long cap = 2000000);
// conical limit over the category of elements of the weight
Witness weighted_limit_via_elements(Cat c, const SetFunctor& w, const SetFunctor& f,
                                    long long cap = 1000000);
// w(b) as a gluing of hom-sets indexed by the elements of w
PointwiseIso copresheaf_as_colimit_of_representables(const SetFunctor& w);
// the category of elements itself, glued from one coslice per element: the
// collapse functor identifies (g, w(f)(u)) with (g ∘ f, u) and nothing else
struct ElementsColimitResult {
  Cat total;            // disjoint union of the coslices
  FinFunctor collapse;  // onto the category of elements
  Witness objects, morphisms;
  bool ok = false;
  std::string reason;
};
ElementsColimitResult elements_as_colimit(const SetFunctor& w);
// collapse along w -> terminal weight: weighted colimit onto the conical one,
// conical limit into the weighted one
std::vector<int> weighted_colimit_comparison(Cat c, const SetFunctor& w, const SetFunctor& f);
std::vector<int> weighted_limit_comparison(Cat c, const SetFunctor& w, const SetFunctor& f,
                                           long long cap = 1000000);
// lim^w (f ∘ j) against lim^{lan_j w} f
Witness weighted_limit_reindex(const FinFunctor& j, const SetFunctor& w, const SetFunctor& f,
                               long long cap = 1000000);
// an end is a limit weighted by the hom functor of the base
Witness end_as_hom_weighted_limit(const Bifunctor& t, long long cap = 1000000);
// a coend is a colimit weighted by the hom functor, contravariantly
Witness coend_as_hom_weighted_colimit(const Bifunctor& t);
// maps out of a fixed set into a weighted limit, against the weighted limit
// of the mapped diagram
Witness hom_commutes_with_weighted_limit(Cat c, const SetFunctor& w, const SetFunctor& f,
                                         const FinSet& x, long long cap = 1000000);
// the weighted colimit of f sends a pointwise pushout of weights to the
// pushout of the colimits; t1, t2 are transformations out of w0
Witness weight_pushout_cocontinuity(Cat c, const SetFunctor& w0, const SetFunctor& w1,
                                    const SetFunctor& w2, const SetNatComp& t1,
                                    const SetNatComp& t2, const SetFunctor& f);

// ---- functor tensor product and its two hom descriptions ----
CoendResult functor_tensor(Cat c, const SetFunctor& f, const SetFunctor& g);
Witness tensor_hom_left(Cat c, const SetFunctor& f, const SetFunctor& g, const FinSet& h,
                        long long cap = 2000000);
Witness tensor_hom_right(Cat c, const SetFunctor& f, const SetFunctor& g, const FinSet& h,
                         long long cap = 2000000);

// ---- Isbell conjugation ----
SetFunctor isbell_o(Cat c, const SetFunctor& x, long long cap = 1000000);
// cop hosts the resulting presheaf; it must be shaped like the opposite of c
SetFunctor isbell_spec(Cat c, Cat cop, const SetFunctor& y, long long cap = 1000000);
Witness isbell_adjunction(Cat c, const SetFunctor& x, const SetFunctor& y,
                          long long cap = 2000000);

// ---- nerve and realization along a two-sided functor ----
// phi lives on base = product(a, bop); x is a presheaf on a (covariant on a
// category shaped like op(a)); y is covariant on bop
struct RealizationResult {
  SetFunctor value;  // on base.right
  std::vector<Bifunctor> integrand;
  std::vector<CoendResult> pts;
};
RealizationResult realization(const ProdCat& base, const SetFunctor& phi, const SetFunctor& x,
                              long long cap = 1000000);
struct NerveResult {
  SetFunctor value;  // on aop
  std::vector<Bifunctor> integrand;
  std::vector<EndResult> pts;
};
NerveResult nerve(const ProdCat& base, Cat aop, const SetFunctor& phi, const SetFunctor& y,
                  long long cap = 1000000);
Witness nerve_realization_adjunction(const ProdCat& base, Cat aop, const SetFunctor& phi,
                                     const SetFunctor& x, const SetFunctor& y,
                                     long long cap = 2000000);

}  // namespace fce

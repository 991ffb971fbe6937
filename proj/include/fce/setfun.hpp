#pragma once

#include "fce/fincat.hpp"

#include <functional>

namespace fce {

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& w) : std::runtime_error("ShapeMismatch: " + w) {}
};
struct MissingLeg : std::runtime_error {
  explicit MissingLeg(const std::string& w) : std::runtime_error("MissingLeg: " + w) {}
};
struct SizeCapExceeded : std::runtime_error {
  explicit SizeCapExceeded(const std::string& w) : std::runtime_error("SizeCapExceeded: " + w) {}
};

struct FinSet {
  std::vector<std::string> elems;
  int size() const { return static_cast<int>(elems.size()); }
  int find(const std::string& e) const;
  static FinSet named(std::vector<std::string> es) { return FinSet{std::move(es)}; }
};

FinSet product_set(const FinSet& a, const FinSet& b);  // elements "(x,y)", index x*|b|+y

// finite function set cod^dom, elements "[v0,...,v{n-1}]" listing images in
// dom order; enumeration order is lexicographic in the image tuple
FinSet function_set(const FinSet& dom, const FinSet& cod);
std::vector<int> function_images(const FinSet& dom, const FinSet& cod, int fn);
int function_index(const FinSet& dom, const FinSet& cod, const std::vector<int>& images);

struct FinMap {
  FinSet dom, cod;
  std::vector<int> tab;
  int ap(int x) const { return tab[x]; }
  bool total() const;
};
bool is_bijection(const FinMap& m);

struct Verdict {
  bool ok = true;
  std::string witness;
};

struct SetFunctor {
  Cat base;
  std::vector<FinSet> ob;
  std::vector<std::vector<int>> mo;
  const FinSet& at(int c) const { return ob[c]; }
  int ap(int m, int x) const { return mo[m][x]; }
};

std::vector<std::string> validate_setfunctor(const SetFunctor& w);
SetFunctor bless_setfunctor(SetFunctor w);

SetFunctor representable_cov(Cat c, int c0);  // C(c0, -)
SetFunctor terminal_setfunctor(Cat c);
SetFunctor constant_setfunctor(Cat c, const FinSet& v);
SetFunctor setfunctor_product(const SetFunctor& a, const SetFunctor& b);
SetFunctor setfunctor_coproduct(const SetFunctor& a, const SetFunctor& b);
SetFunctor restrict_along(const FinFunctor& f, const SetFunctor& w);  // W ∘ F

// natural transformations between set-valued functors, as component tables
using SetNatComp = std::vector<std::vector<int>>;
SetNatComp identity_setnat(const SetFunctor& f);
std::vector<std::string> validate_setnat(const SetFunctor& f, const SetFunctor& g, const SetNatComp& t);
std::vector<SetNatComp> all_setnats(const SetFunctor& f, const SetFunctor& g, long long cap = 2000000);

// every functor c -> d, in lexicographic order of (object table, morphism table)
std::vector<FinFunctor> all_functors(Cat c, Cat d, long long cap = 2000000);

// ---- bifunctors on op(A) × B ----

struct OpProd {
  Cat A, B;
  Cat Aop;
  ProdCat prod;  // product(Aop, B)
  int ob(int a, int b) const { return prod.ob(a, b); }
  int mo(int f, int g) const { return prod.mo(f, g); }
  std::pair<int, int> ob_parts(int p) const { return prod.ob_parts(p); }
  std::pair<int, int> mo_parts(int p) const { return prod.mo_parts(p); }
};
OpProd op_prod(Cat a, Cat b);

struct Bifunctor {
  OpProd base;
  SetFunctor t;  // on base.prod.cat
  const FinSet& at(int a, int b) const { return t.ob[base.ob(a, b)]; }
  // f: a2 -> a1 in A (contravariant slot), g: b1 -> b2 in B; maps at(a1,b1) -> at(a2,b2)
  int act(int f, int g, int x) const { return t.mo[base.mo(f, g)][x]; }
};
Bifunctor make_bifunctor(OpProd base, SetFunctor t);
Bifunctor hom_bifunctor(Cat c);
// T(c,c') = hom_D(Fc, Gc') for parallel F, G: C -> D; elements are morphism ids of D
Bifunctor hom_along(const FinFunctor& f, const FinFunctor& g);

// natural transformation between bifunctors on the same OpProd base
struct BiNat {
  std::vector<std::vector<int>> comp;  // indexed by base.prod object
};
std::vector<std::string> validate_binat(const Bifunctor& p, const Bifunctor& q, const BiNat& t);

// ---- dinaturality / wedges (hexagon) ----

struct DinaturalFamily {
  Bifunctor P, Q;                      // same base C in both slots
  std::vector<std::vector<int>> comp;  // per object c: P(c,c) -> Q(c,c)
};
Verdict check_dinatural(const DinaturalFamily& a);

Verdict check_wedge(const FinSet& tip, const std::vector<std::vector<int>>& legs, const Bifunctor& f);
Verdict check_cowedge(const Bifunctor& f, const std::vector<std::vector<int>>& legs, const FinSet& tip);

// ---- extranaturality (three square families) ----

struct TriBase {  // A × B^op × B
  Cat A, B;
  Cat Bop;
  ProdCat inner;  // product(Bop, B)
  ProdCat full;   // product(A, inner.cat)
  int ob(int a, int b1, int b2) const { return full.ob(a, inner.ob(b1, b2)); }
  int mo(int f, int g1, int g2) const { return full.mo(f, inner.mo(g1, g2)); }
};
TriBase tri_base(Cat a, Cat b);

struct TriFunctor {
  TriBase base;
  SetFunctor t;
  const FinSet& at(int a, int b1, int b2) const { return t.ob[base.ob(a, b1, b2)]; }
  // f: a -> a' covariant; h: b -> b' contravariant slot; k: c -> c' covariant slot
  // maps at(a, b', c) -> at(a', b, c')
  int act(int f, int h, int k, int x) const { return t.mo[base.mo(f, h, k)][x]; }
};
TriFunctor make_trifunctor(TriBase base, SetFunctor t);

struct ExtranaturalFamily {
  TriFunctor P;  // on A × B^op × B
  TriFunctor Q;  // on A × C^op × C
  // comp[a][b][c]: P(a,b,b) -> Q(a,c,c)
  std::vector<std::vector<std::vector<std::vector<int>>>> comp;
};
struct ExtraVerdict {
  bool ok = true;
  int family = 0;  // 1 = naturality in a, 2 = cowedge in b, 3 = wedge in c
  std::string witness;
};
ExtraVerdict check_extranatural(const ExtranaturalFamily& a);

// reindexing along B × A^op × C^op: extranatural iff the image family is dinatural
DinaturalFamily reindex_extranatural(const ExtranaturalFamily& a);

// ---- composition rules for generalized naturality ----

// natural alpha: F => G (bifunctors), cowedge beta: G(x,x) -> tip; composite is a cowedge
std::vector<std::vector<int>> compose_nat_then_cowedge(const Bifunctor& f, const Bifunctor& g,
                                                       const BiNat& alpha,
                                                       const std::vector<std::vector<int>>& beta,
                                                       const FinSet& tip);
// wedge alpha: tip -> F(x,x), natural beta: F => G; composite is a wedge
std::vector<std::vector<int>> compose_wedge_then_nat(const FinSet& tip,
                                                     const std::vector<std::vector<int>>& alpha,
                                                     const Bifunctor& f, const Bifunctor& g,
                                                     const BiNat& beta);
// yanking: F, H functors C -> Sets, G on C × C^op × C;
// alpha[x][y]: F(y) -> G(x,x,y) natural in y, wedge-like in x;
// beta[x][y]: G(x,y,y) -> H(x) natural in x, cowedge-like in y;
// composite gamma_x = beta[x][x] ∘ alpha[x][x] : F(x) -> H(x) is natural
struct YankingData {
  SetFunctor F, H;
  TriFunctor G;
  std::vector<std::vector<std::vector<int>>> alpha, beta;
};
Verdict check_yanking_inputs(const YankingData& d);
std::vector<std::vector<int>> compose_yanking(const YankingData& d);

// ---- category of elements ----

struct ElementsCat {
  Cat cat;
  FinFunctor proj;  // Σ
  std::vector<std::pair<int, int>> obj_elt;   // object -> (c, u)
  std::vector<std::pair<int, int>> mor_lift;  // morphism -> (f in C, u at source)
  std::vector<std::vector<int>> obj_ix;       // [c][u] -> object
};
ElementsCat category_of_elements(const SetFunctor& w);

Verdict isofibration_check(const ElementsCat& e, const SetFunctor& w);
Verdict unique_lift_check(const ElementsCat& e, const SetFunctor& w);
// Σ for W = C(c0,-) matches the coslice c0/C via an explicit functor
CatIso elements_vs_coslice(const SetFunctor& w, int c0);
// strict pullback along the forgetful functor from a finite pointed-set fragment
CatIso elements_pullback_check(const SetFunctor& w);

}  // namespace fce

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fce {

// Finite category as explicit tables. Objects and morphisms are indexed
// densely; the string ids are opaque labels used for I/O and reports.
struct FinCategory {
  struct Mor {
    std::string id;
    int src = -1;
    int trg = -1;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;               // object -> morphism
  std::vector<std::vector<int>> comp;      // comp[g][f] = g∘f, -1 if not composable

  std::unordered_map<std::string, int> obj_ix;
  std::unordered_map<std::string, int> mor_ix;

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(morphisms.size()); }
  int src(int m) const { return morphisms[m].src; }
  int trg(int m) const { return morphisms[m].trg; }
  int id_of(int c) const { return identity[c]; }
  bool composable(int g, int f) const { return trg(f) == src(g); }
  int compose(int g, int f) const { return comp[g][f]; }
  bool is_identity(int m) const { return identity[src(m)] == m && src(m) == trg(m); }

  int obj(const std::string& id) const;
  int mor(const std::string& id) const;
  std::vector<int> hom(int a, int b) const;

  // -1 when m has no two-sided inverse
  int inverse(int m) const;
  bool is_iso(int m) const { return inverse(m) >= 0; }

  void reindex();
};

using Cat = std::shared_ptr<const FinCategory>;

struct Caps {
  int max_objects = 64;
  int max_morphisms = 512;
};

struct ValidationIssue {
  enum Kind { MissingIdentity, NonComposablePair, AssociativityViolation, UnitViolation, Malformed } kind;
  std::string detail;  // names the offending objects/morphisms
  std::string render() const;
};

std::vector<ValidationIssue> validate_category(const FinCategory& c, const Caps& caps = {});
// throws std::runtime_error listing the first issue
Cat bless(FinCategory c, const Caps& caps = {});

struct FinFunctor {
  Cat src, trg;
  std::vector<int> on_obj;
  std::vector<int> on_mor;

  int ob(int c) const { return on_obj[c]; }
  int mo(int f) const { return on_mor[f]; }
};

std::vector<std::string> validate_functor(const FinFunctor& f);
FinFunctor bless_functor(FinFunctor f);
FinFunctor identity_functor(Cat c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);  // g∘f
FinFunctor constant_functor(Cat src, Cat trg, int obj);
bool functor_eq(const FinFunctor& a, const FinFunctor& b);

// explicit invertible comparison functor; never found by search
struct CatIso {
  FinFunctor fwd;
  bool ok = false;
  std::string reason;
};
CatIso check_iso(const FinFunctor& f);

struct NatTransformation {
  FinFunctor src, trg;        // parallel functors
  std::vector<int> comp;      // object of src.src -> morphism of src.trg
};
std::vector<std::string> validate_nat(const NatTransformation& t);
NatTransformation identity_nat(const FinFunctor& f);
NatTransformation vcompose_nat(const NatTransformation& b, const NatTransformation& a);  // b∘a

Cat opposite(Cat c);

// Product category with pair index arithmetic kept alongside.
struct ProdCat {
  Cat left, right;
  Cat cat;
  int ob(int a, int b) const { return a * right->n_obj() + b; }
  int mo(int f, int g) const { return f * right->n_mor() + g; }
  std::pair<int, int> ob_parts(int p) const { return {p / right->n_obj(), p % right->n_obj()}; }
  std::pair<int, int> mo_parts(int p) const { return {p / right->n_mor(), p % right->n_mor()}; }
};
ProdCat product(Cat a, Cat b);
// (a, b) |-> (f a, g b) between two product categories
FinFunctor pair_functor(const ProdCat& s, const ProdCat& t, const FinFunctor& f,
                        const FinFunctor& g);

// Twisted arrows TW(C): objects are morphisms of C, a morphism f -> g is a
// pair (h, k) with k∘f∘h = g; second component is the projection to C^op × C.
struct TwistedArrows {
  Cat tw;
  ProdCat base;       // op(C) × C
  FinFunctor proj;    // tw -> base.cat
  std::vector<int> obj_of_mor;                    // object of tw per morphism of C
  std::vector<std::vector<int>> mor_pair;         // per tw-morphism: {h, k, src-obj(f), trg-obj(g)}
};
TwistedArrows twisted_arrows(Cat c);

// Coslice c0/C: objects are morphisms c0 -> x, morphisms are postcompositions.
struct Coslice {
  Cat cat;
  std::vector<int> obj_mor;   // coslice object -> morphism of C
  FinFunctor proj;            // to C, (c0 -> x) |-> x
};
Coslice coslice(Cat c, int c0);

// Strict pullback of F: A -> C <- B : G. Objects (a,b) with Fa = Gb,
// morphisms (f,g) with Ff = Gg.
struct PullbackCat {
  Cat cat;
  FinFunctor to_left, to_right;
  std::vector<std::pair<int, int>> obj_pairs;
  std::vector<std::pair<int, int>> mor_pairs;
};
PullbackCat pullback_category(const FinFunctor& f, const FinFunctor& g);

// builders used by fixtures and tests
FinCategory raw_terminal();
Cat terminal_cat();
Cat walking_arrow();
Cat walking_iso();
Cat discrete_cat(const std::string& name, const std::vector<std::string>& objects);
Cat from_monoid(const std::string& name, const std::vector<std::string>& elems,
                const std::vector<std::vector<int>>& mul, int unit);
Cat from_poset(const std::string& name, const std::vector<std::string>& objects,
               const std::vector<std::vector<bool>>& leq);
Cat from_acyclic_graph(const std::string& name, const std::vector<std::string>& objects,
                       const std::vector<std::pair<std::string, std::pair<int, int>>>& edges);

}  // namespace fce

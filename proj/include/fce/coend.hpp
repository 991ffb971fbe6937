#pragma once

#include "fce/setfun.hpp"

namespace fce {

// union-find whose canonical representative is the lexicographically least tag
struct QuotientSet {
  std::vector<std::string> tags;
  std::vector<int> parent;

  explicit QuotientSet(std::vector<std::string> t);
  int find(int x);
  void unite(int a, int b);

  struct Classes {
    FinSet carrier;          // class representatives, ordered lexicographically
    std::vector<int> cls;    // element -> class
    std::vector<int> rep;    // class -> element
  };
  Classes classes();
};

// explicit mutually inverse tables between two carriers
struct Witness {
  FinSet lhs, rhs;
  std::vector<int> fwd, bwd;
  bool ok = false;
  std::string reason;
};
Witness make_witness(FinSet lhs, FinSet rhs, std::vector<int> fwd, std::vector<int> bwd);

struct EndResult {
  FinSet carrier;                           // families printed as tuples
  std::vector<std::vector<int>> families;   // element -> (object -> point of T(c,c))
  std::vector<std::vector<int>> legs;       // object -> (element -> point of T(c,c))
  int find_family(const std::vector<int>& fam) const;
};
EndResult end_of(const Bifunctor& t, long long cap = 1000000);

struct CoendResult {
  FinSet carrier;                                // classes named by least tag "obj#elem"
  std::vector<std::vector<int>> inject;          // object -> (point of T(c,c) -> class)
  std::vector<std::pair<int, int>> class_rep;    // class -> (object, point)
};
CoendResult coend_of(const Bifunctor& t);

struct LimitResult {
  FinSet carrier;
  std::vector<std::vector<int>> families;
  std::vector<std::vector<int>> cone;
  int find_family(const std::vector<int>& fam) const;
};
LimitResult limit_of(const SetFunctor& f, long long cap = 1000000);

struct ColimitResult {
  FinSet carrier;
  std::vector<std::vector<int>> cocone;
  std::vector<std::pair<int, int>> class_rep;
};
ColimitResult colimit_of(const SetFunctor& f);

// unique factorizations through the universal objects; both re-verify their input
std::vector<int> mediator_into_end(const EndResult& e, const Bifunctor& t, const FinSet& tip,
                                   const std::vector<std::vector<int>>& legs);
std::vector<int> mediator_from_coend(const CoendResult& e, const Bifunctor& t,
                                     const std::vector<std::vector<int>>& legs, const FinSet& tip);

// a one-variable functor as a bifunctor with a mute twisted slot
Bifunctor lift_cov(const SetFunctor& w);
// w lives on the opposite of c (same morphism index set, flipped endpoints)
Bifunctor lift_contra(Cat c, const SetFunctor& w);

// reduction of ends to limits (and coends to colimits) over twisted arrows,
// with the canonical comparison verified to be a bijection
Witness end_via_twisted(const Bifunctor& t, long long cap = 1000000);
Witness coend_via_twisted(const Bifunctor& t);

// the set of natural transformations as an end of hom
EndResult nat_set(const FinFunctor& f, const FinFunctor& g, long long cap = 1000000);
std::vector<std::vector<int>> all_nats_brute(const FinFunctor& f, const FinFunctor& g);

// iterated ends against the end over a product base, all three comparisons
struct FubiniResult {
  EndResult full, ab, ba;
  Witness full_vs_ab, full_vs_ba, ab_vs_ba;
  bool ok = false;
  std::string reason;
};
FubiniResult fubini_check(const Bifunctor& t, const ProdCat& base, long long cap = 1000000);

// hom out of a set into an end, and out of a coend into a set
Witness hom_into_end(const Bifunctor& t, const FinSet& x, long long cap = 1000000);
Witness hom_out_of_coend(const Bifunctor& t, const FinSet& x, long long cap = 1000000);

// functoriality of the universal objects in the integrand
std::vector<int> end_map(const Bifunctor& ts, const Bifunctor& td, const BiNat& eta,
                         const EndResult& es, const EndResult& ed);
std::vector<int> coend_map(const Bifunctor& ts, const Bifunctor& td, const BiNat& eta,
                           const CoendResult& cs, const CoendResult& cd);

struct NotAnAdjunction : std::runtime_error {
  explicit NotAnAdjunction(const std::string& w) : std::runtime_error("NotAnAdjunction: " + w) {}
};
struct Adjunction {
  FinFunctor F, U;             // F: C -> D left adjoint to U: D -> C
  NatTransformation unit;      // id_C => U F
  NatTransformation counit;    // F U => id_D
};
Adjunction make_adjunction(FinFunctor f, FinFunctor u, std::vector<int> unit_comp,
                           std::vector<int> counit_comp);
// coend over C of G(Fc, c) against coend over D of G(d, Ud), for G on op(D) x C
Witness adjoint_shift(const Adjunction& a, const Bifunctor& g);

// finite groups, actions, and the orbit-category reconstruction of a G-set
struct Group {
  std::vector<std::string> elems;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  int unit = 0;
  int size() const { return static_cast<int>(elems.size()); }
  int inv(int a) const;
};
std::vector<std::string> validate_group(const Group& g);

struct GSet {
  FinSet elems;
  std::vector<std::vector<int>> act;  // act[g][x] = g.x
};
std::vector<std::string> validate_gset(const Group& g, const GSet& x);

struct OrbitCat {
  Cat cat;
  std::vector<std::vector<int>> subgroups;  // sorted element lists, sorted by (size, lex)
  std::vector<int> mor_rep;                 // morphism -> canonical coset representative
};
OrbitCat orbit_category(const Group& g);

Bifunctor elmendorf_bifunctor(const Group& g, const OrbitCat& orb, const GSet& x);
Witness elmendorf_reconstruction(const Group& g, const GSet& x);

}  // namespace fce

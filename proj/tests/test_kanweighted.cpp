#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fce/kanweighted.hpp"

#include <algorithm>

using namespace fce;

namespace {

Cat bz2() { return from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0); }

Cat chain3() {
  std::vector<std::vector<bool>> leq = {
      {true, true, true}, {false, true, true}, {false, false, true}};
  return from_poset("chain3", {"0", "1", "2"}, leq);
}

SetFunctor mk(Cat c, std::vector<FinSet> ob, std::vector<std::vector<int>> mo) {
  SetFunctor w;
  w.base = c;
  w.ob = std::move(ob);
  w.mo = std::move(mo);
  return bless_setfunctor(std::move(w));
}

// picks the unique lift when every hom set along the image is a singleton
// (also collapses onto a monoid unit, which sits at slot 0)
FinFunctor thin_functor(Cat s, Cat t, std::vector<int> on_obj) {
  FinFunctor f;
  f.src = s;
  f.trg = t;
  f.on_obj = std::move(on_obj);
  f.on_mor.resize(s->n_mor());
  for (int m = 0; m < s->n_mor(); ++m)
    f.on_mor[m] = t->hom(f.on_obj[s->src(m)], f.on_obj[s->trg(m)]).at(0);
  return bless_functor(f);
}

// fork with a merged pair downstream: the running example for weighted limits
SetFunctor fork_diagram(Cat c) {
  return mk(c, {FinSet{{"1", "2", "3"}}, FinSet{{"1", "2"}}},
            {{0, 1, 2}, {0, 1}, {0, 1, 1}});
}

SetFunctor two_point_weight(Cat c) {
  return mk(c, {FinSet{{"x0", "x1"}}, FinSet{{"y"}}}, {{0, 1}, {0}, {0, 0}});
}

SetFunctor gset3(Cat g) {
  return mk(g, {FinSet{{"x", "y", "z"}}}, {{0, 1, 2}, {0, 2, 1}});
}

int pos_in(const std::vector<int>& v, int m) {
  return static_cast<int>(std::find(v.begin(), v.end(), m) - v.begin());
}

bool is_perm(const std::vector<int>& v) {
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != i) return false;
  return true;
}

// hom(b, a) as a two-sided diagram on A x op(A), covariant in both slots
SetFunctor hom_two_sided(Cat a, const ProdCat& base) {
  SetFunctor phi;
  phi.base = base.cat;
  phi.ob.resize(base.cat->n_obj());
  for (int aa = 0; aa < a->n_obj(); ++aa)
    for (int bb = 0; bb < a->n_obj(); ++bb) {
      FinSet s;
      for (int m : a->hom(bb, aa)) s.elems.push_back(a->morphisms[m].id);
      phi.ob[base.ob(aa, bb)] = s;
    }
  phi.mo.resize(base.cat->n_mor());
  for (int u = 0; u < a->n_mor(); ++u)
    for (int v = 0; v < a->n_mor(); ++v) {
      std::vector<int> dom = a->hom(a->trg(v), a->src(u));
      std::vector<int> cod = a->hom(a->src(v), a->trg(u));
      std::vector<int>& tab = phi.mo[base.mo(u, v)];
      tab.resize(dom.size());
      for (int kp = 0; kp < static_cast<int>(dom.size()); ++kp)
        tab[kp] = pos_in(cod, a->compose(u, a->compose(dom[kp], v)));
    }
  return bless_setfunctor(std::move(phi));
}

}  // namespace

TEST_CASE("restriction to representables recovers the functor, coend form") {
  for (Cat c : {walking_arrow(), chain3(), walking_iso()}) {
    for (const SetFunctor& h :
         {representable_cov(c, 0),
          setfunctor_coproduct(representable_cov(c, 0), terminal_setfunctor(c))}) {
      PointwiseIso p = yoneda_expand_coend(h);
      CHECK_MESSAGE(p.ok, c->name << ": " << p.reason);
      CHECK(p.natural);
      for (int x = 0; x < c->n_obj(); ++x) CHECK(p.at[x].lhs.size() == h.ob[x].size());
    }
  }
  PointwiseIso p = yoneda_expand_coend(gset3(bz2()));
  CHECK_MESSAGE(p.ok, p.reason);
  CHECK(p.natural);
}

TEST_CASE("restriction to representables recovers the functor, end form") {
  for (Cat c : {walking_arrow(), chain3(), walking_iso()}) {
    for (const SetFunctor& h :
         {representable_cov(c, 0),
          setfunctor_coproduct(representable_cov(c, 0), terminal_setfunctor(c))}) {
      PointwiseIso p = yoneda_expand_end(h);
      CHECK_MESSAGE(p.ok, c->name << ": " << p.reason);
      CHECK(p.natural);
      for (int x = 0; x < c->n_obj(); ++x) CHECK(p.at[x].lhs.size() == h.ob[x].size());
    }
  }
  PointwiseIso p = yoneda_expand_end(gset3(bz2()));
  CHECK_MESSAGE(p.ok, p.reason);
  CHECK(p.natural);
}

TEST_CASE("both expansions work for presheaves via the opposite base") {
  Cat c = walking_arrow();
  SetFunctor x = representable_cov(opposite(c), 1);
  PointwiseIso pc = yoneda_expand_coend(x);
  CHECK_MESSAGE(pc.ok, pc.reason);
  CHECK(pc.natural);
  PointwiseIso pe = yoneda_expand_end(x);
  CHECK_MESSAGE(pe.ok, pe.reason);
  CHECK(pe.natural);
}

TEST_CASE("extending along the identity does nothing") {
  Cat c = walking_arrow();
  SetFunctor f = fork_diagram(c);
  PointwiseIso l = lan_identity_check(f);
  CHECK_MESSAGE(l.ok, l.reason);
  CHECK(l.natural);
  PointwiseIso r = ran_identity_check(f);
  CHECK_MESSAGE(r.ok, r.reason);
  CHECK(r.natural);
  SetFunctor g = gset3(bz2());
  CHECK(lan_identity_check(g).ok);
  CHECK(ran_identity_check(g).ok);
}

TEST_CASE("extending along a point inclusion spreads and cuts fibers") {
  Cat one = terminal_cat();
  Cat c = chain3();
  FinFunctor k = thin_functor(one, c, {0});
  SetFunctor f = mk(one, {FinSet{{"p", "q"}}}, {{0, 1}});
  LanResult l = lan(k, f);
  for (int d = 0; d < 3; ++d) CHECK(l.value.ob[d].size() == 2);
  for (int m = 0; m < c->n_mor(); ++m) CHECK(is_perm(l.value.mo[m]));
  RanResult r = ran(k, f);
  CHECK(r.value.ob[0].size() == 2);
  CHECK(r.value.ob[1].size() == 1);
  CHECK(r.value.ob[2].size() == 1);
}

TEST_CASE("extensions satisfy their mapping properties") {
  Cat one = terminal_cat();
  Cat c = chain3();
  FinFunctor k = thin_functor(one, c, {0});
  SetFunctor f = mk(one, {FinSet{{"p", "q"}}}, {{0, 1}});
  SetFunctor g1 = representable_cov(c, 0);
  SetFunctor g2 = setfunctor_coproduct(representable_cov(c, 0), representable_cov(c, 2));
  LanResult l = lan(k, f);
  RanResult r = ran(k, f);
  for (const SetFunctor& g : {g1, g2}) {
    Witness wl = lan_universal(l, f, g);
    CHECK_MESSAGE(wl.ok, wl.reason);
    Witness wr = ran_universal(r, f, g);
    CHECK_MESSAGE(wr.ok, wr.reason);
  }

  Cat m = bz2();
  FinFunctor km = thin_functor(one, m, {0});
  LanResult lm = lan(km, f);
  RanResult rm = ran(km, f);
  CHECK(lm.value.ob[0].size() == 4);
  CHECK(rm.value.ob[0].size() == 4);
  SetFunctor reg = mk(m, {FinSet{{"e", "s"}}}, {{0, 1}, {1, 0}});
  Witness wl = lan_universal(lm, f, reg);
  CHECK_MESSAGE(wl.ok, wl.reason);
  CHECK(wl.lhs.size() == 4);
  Witness wr = ran_universal(rm, f, reg);
  CHECK_MESSAGE(wr.ok, wr.reason);
  CHECK(wr.lhs.size() == 4);
}

TEST_CASE("extending in two hops equals extending along the composite") {
  Cat one = terminal_cat();
  Cat two = walking_arrow();
  Cat c = chain3();
  {
    FinFunctor k1 = thin_functor(one, two, {0});
    FinFunctor k2 = thin_functor(two, c, {0, 2});
    SetFunctor f = mk(one, {FinSet{{"p", "q"}}}, {{0, 1}});
    PointwiseIso p = lan_compose_check(k1, k2, f);
    CHECK_MESSAGE(p.ok, p.reason);
    CHECK(p.natural);
  }
  {
    FinFunctor k1 = thin_functor(two, c, {0, 2});
    FinFunctor k2 = thin_functor(c, bz2(), {0, 0, 0});
    PointwiseIso p = lan_compose_check(k1, k2, fork_diagram(two));
    CHECK_MESSAGE(p.ok, p.reason);
    CHECK(p.natural);
  }
}

TEST_CASE("pointwise formulas agree with the comma constructions") {
  Cat two = walking_arrow();
  Cat c = chain3();
  FinFunctor k = thin_functor(two, c, {0, 2});
  SetFunctor f = fork_diagram(two);
  LanResult l = lan(k, f);
  RanResult r = ran(k, f);
  for (int d = 0; d < c->n_obj(); ++d) {
    Witness wl = lan_via_comma(l, f, d);
    CHECK_MESSAGE(wl.ok, "at " << d << ": " << wl.reason);
    Witness wr = ran_via_comma(r, f, d);
    CHECK_MESSAGE(wr.ok, "at " << d << ": " << wr.reason);
  }
  CommaCat under = comma_under(k, 0);
  CHECK(under.cat->n_obj() == 2);
  CommaCat over = comma_over(k, 0);
  CHECK(over.cat->n_obj() == 1);
}

TEST_CASE("the codensity construction over the whole category is trivial") {
  Cat c = walking_arrow();
  KleisliResult kl = codensity_kleisli(identity_functor(c));
  CHECK(kl.cat->n_mor() == c->n_mor());
  CHECK(is_perm(kl.embed.on_mor));
  Cat d = chain3();
  KleisliResult kld = codensity_kleisli(identity_functor(d));
  CHECK(kld.cat->n_mor() == d->n_mor());
  CHECK(is_perm(kld.embed.on_mor));
}

TEST_CASE("codensity over a point measures maps into it") {
  Cat one = terminal_cat();
  Cat c = chain3();
  KleisliResult kl = codensity_kleisli(thin_functor(one, c, {2}));
  CHECK(kl.cat->n_obj() == 3);
  CHECK(kl.cat->n_mor() == 9);
  Cat m = bz2();
  KleisliResult klm = codensity_kleisli(thin_functor(one, m, {0}));
  CHECK(klm.cat->n_mor() == 4);
  CHECK(klm.embed.on_mor[0] != klm.embed.on_mor[1]);
}

TEST_CASE("a two-point weight carves out a kernel pair") {
  Cat c = walking_arrow();
  SetFunctor w = two_point_weight(c);
  SetFunctor f = fork_diagram(c);
  EndResult lim = weighted_limit(c, w, f);
  CHECK(lim.carrier.size() == 5);
  Witness wn = weighted_limit_is_nat(c, w, f);
  CHECK_MESSAGE(wn.ok, wn.reason);
  Witness we = weighted_limit_via_elements(c, w, f);
  CHECK_MESSAGE(we.ok, we.reason);
}

TEST_CASE("weighted limits with full weights agree with plain limits") {
  Cat c = walking_arrow();
  SetFunctor f = fork_diagram(c);
  std::vector<int> cmp = weighted_limit_comparison(c, terminal_setfunctor(c), f);
  CHECK(cmp.size() == 3);
  CHECK(is_perm(cmp));
  std::vector<int> col =
      weighted_colimit_comparison(c, terminal_setfunctor(opposite(c)), f);
  CHECK(col.size() == 2);
  CHECK(is_perm(col));
}

TEST_CASE("tensoring against a representable weight evaluates the diagram") {
  for (Cat c : {walking_arrow(), chain3()}) {
    SetFunctor f = c->n_obj() == 2 ? fork_diagram(c)
                                   : setfunctor_coproduct(representable_cov(c, 0),
                                                          representable_cov(c, 1));
    Cat cop = opposite(c);
    for (int c0 = 0; c0 < c->n_obj(); ++c0) {
      CoendResult t = functor_tensor(c, representable_cov(cop, c0), f);
      CHECK(t.carrier.size() == f.ob[c0].size());
      CoendResult wc = weighted_colimit(c, representable_cov(cop, c0), f);
      CHECK(wc.carrier.size() == f.ob[c0].size());
    }
  }
}

TEST_CASE("every copresheaf is glued from the shapes it classifies") {
  for (Cat c : {walking_arrow(), chain3()}) {
    SetFunctor f = setfunctor_coproduct(representable_cov(c, 0), terminal_setfunctor(c));
    PointwiseIso p = copresheaf_as_colimit_of_representables(f);
    CHECK_MESSAGE(p.ok, c->name << ": " << p.reason);
    CHECK(p.natural);
  }
  PointwiseIso p = copresheaf_as_colimit_of_representables(gset3(bz2()));
  CHECK_MESSAGE(p.ok, p.reason);
  CHECK(p.natural);
}

TEST_CASE("reindexing a weight along a functor preserves the weighted limit") {
  Cat two = walking_arrow();
  Cat c = chain3();
  FinFunctor j = thin_functor(two, c, {0, 2});
  SetFunctor w = two_point_weight(two);
  SetFunctor f = setfunctor_product(
      representable_cov(c, 0),
      setfunctor_coproduct(representable_cov(c, 0), representable_cov(c, 1)));
  Witness wit = weighted_limit_reindex(j, w, f);
  CHECK_MESSAGE(wit.ok, wit.reason);
}

TEST_CASE("an end is a limit weighted by the hom functor") {
  Witness w1 = end_as_hom_weighted_limit(hom_bifunctor(walking_arrow()));
  CHECK_MESSAGE(w1.ok, w1.reason);
  Witness w2 = end_as_hom_weighted_limit(hom_bifunctor(bz2()));
  CHECK_MESSAGE(w2.ok, w2.reason);
  CHECK(w2.lhs.size() == 2);
}

TEST_CASE("maps out of a tensor curry on either side") {
  Cat c = walking_arrow();
  Cat cop = opposite(c);
  SetFunctor f = setfunctor_coproduct(representable_cov(cop, 0), representable_cov(cop, 1));
  SetFunctor g = fork_diagram(c);
  for (int nh : {0, 1, 2}) {
    FinSet h = nh == 0 ? FinSet{} : (nh == 1 ? FinSet{{"h0"}} : FinSet{{"h0", "h1"}});
    Witness wl = tensor_hom_left(c, f, g, h);
    CHECK_MESSAGE(wl.ok, "left, |h|=" << nh << ": " << wl.reason);
    Witness wr = tensor_hom_right(c, f, g, h);
    CHECK_MESSAGE(wr.ok, "right, |h|=" << nh << ": " << wr.reason);
  }
}

TEST_CASE("conjugating a representable gives the homs out of its focus") {
  for (Cat c : {walking_arrow(), chain3()}) {
    Cat cop = opposite(c);
    for (int c0 = 0; c0 < c->n_obj(); ++c0) {
      SetFunctor o = isbell_o(c, representable_cov(cop, c0));
      for (int d = 0; d < c->n_obj(); ++d)
        CHECK(o.ob[d].size() == static_cast<int>(c->hom(c0, d).size()));
    }
  }
}

TEST_CASE("the two conjugations are adjoint to each other") {
  {
    Cat c = walking_arrow();
    Cat cop = opposite(c);
    SetFunctor x = mk(cop, {FinSet{{"x"}}, FinSet{{"z"}}}, {{0}, {0}, {0}});
    SetFunctor y = mk(c, {FinSet{{"u"}}, FinSet{{"w"}}}, {{0}, {0}, {0}});
    Witness w = isbell_adjunction(c, x, y);
    CHECK_MESSAGE(w.ok, w.reason);
    CHECK(w.lhs.size() == 0);
    CHECK(w.rhs.size() == 0);
  }
  {
    Cat m = bz2();
    Cat mop = opposite(m);
    SetFunctor x = mk(mop, {FinSet{{"e", "s"}}}, {{0, 1}, {1, 0}});
    SetFunctor y = mk(m, {FinSet{{"e", "s"}}}, {{0, 1}, {1, 0}});
    Witness w = isbell_adjunction(m, x, y);
    CHECK_MESSAGE(w.ok, w.reason);
    CHECK(w.lhs.size() == 2);
  }
}

TEST_CASE("a hom-shaped two-sided diagram realizes everything to itself") {
  for (Cat a : {walking_arrow(), bz2()}) {
    Cat aop = opposite(a);
    ProdCat base = product(a, aop);
    SetFunctor phi = hom_two_sided(a, base);
    SetFunctor x = setfunctor_coproduct(representable_cov(aop, 0),
                                        representable_cov(aop, a->n_obj() - 1));
    RealizationResult r = realization(base, phi, x);
    for (int b = 0; b < a->n_obj(); ++b) CHECK(r.value.ob[b].size() == x.ob[b].size());
    SetFunctor y = terminal_setfunctor(aop);
    NerveResult n = nerve(base, aop, phi, y);
    for (int o = 0; o < a->n_obj(); ++o) CHECK(n.value.ob[o].size() == y.ob[o].size());
  }
}

TEST_CASE("realization is left adjoint to the nerve") {
  Cat a = walking_arrow();
  Cat aop = opposite(a);
  ProdCat base = product(a, aop);
  SetFunctor phi = hom_two_sided(a, base);
  SetFunctor x = setfunctor_coproduct(representable_cov(aop, 0), representable_cov(aop, 1));
  for (const SetFunctor& y : {terminal_setfunctor(aop), representable_cov(aop, 1)}) {
    Witness w = nerve_realization_adjunction(base, aop, phi, x, y);
    CHECK_MESSAGE(w.ok, w.reason);
    CHECK(w.lhs.size() == w.rhs.size());
  }
  Cat g = bz2();
  Cat gop = opposite(g);
  ProdCat gbase = product(g, gop);
  SetFunctor gphi = hom_two_sided(g, gbase);
  SetFunctor gx = representable_cov(gop, 0);
  Witness w = nerve_realization_adjunction(gbase, gop, gphi, gx, gx);
  CHECK_MESSAGE(w.ok, w.reason);
  CHECK(w.lhs.size() == 2);
}

TEST_CASE("the unit sits inside the mapping bijection") {
  Cat one = terminal_cat();
  Cat c = chain3();
  FinFunctor k = thin_functor(one, c, {0});
  SetFunctor f = mk(one, {FinSet{{"p", "q"}}}, {{0, 1}});
  LanResult l = lan(k, f);
  Witness w = lan_universal(l, f, l.value);
  REQUIRE(w.ok);
  std::vector<SetNatComp> outs = all_setnats(l.value, l.value);
  SetNatComp idnat(c->n_obj());
  for (int d = 0; d < c->n_obj(); ++d) {
    idnat[d].resize(l.value.ob[d].size());
    for (int i = 0; i < l.value.ob[d].size(); ++i) idnat[d][i] = i;
  }
  int idx = static_cast<int>(std::find(outs.begin(), outs.end(), idnat) - outs.begin());
  std::vector<SetNatComp> ins = all_setnats(f, restrict_along(k, l.value));
  CHECK(ins[w.fwd[idx]] == l.unit);
  RanResult r = ran(k, f);
  std::vector<SetNatComp> rins = all_setnats(r.value, r.value);
  SetNatComp ridnat(c->n_obj());
  for (int d = 0; d < c->n_obj(); ++d) {
    ridnat[d].resize(r.value.ob[d].size());
    for (int i = 0; i < r.value.ob[d].size(); ++i) ridnat[d][i] = i;
  }
  Witness wr = ran_universal(r, f, r.value);
  REQUIRE(wr.ok);
  int ridx = static_cast<int>(std::find(rins.begin(), rins.end(), ridnat) - rins.begin());
  std::vector<SetNatComp> routs = all_setnats(restrict_along(k, r.value), f);
  CHECK(routs[wr.fwd[ridx]] == r.counit);
}

TEST_CASE("a representable weight evaluates the diagram at its focus") {
  Cat c = chain3();
  SetFunctor f = setfunctor_coproduct(representable_cov(c, 0), representable_cov(c, 1));
  for (int c0 = 0; c0 < c->n_obj(); ++c0)
    CHECK(weighted_limit(c, representable_cov(c, c0), f).carrier.size() ==
          f.ob[c0].size());
}

TEST_CASE("the category of elements is glued from coslices") {
  {
    SetFunctor w = terminal_setfunctor(chain3());
    ElementsColimitResult r = elements_as_colimit(w);
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(r.objects.rhs.size() == 3);
  }
  {
    Cat c = chain3();
    SetFunctor w = representable_cov(c, 0);
    ElementsColimitResult r = elements_as_colimit(w);
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(r.objects.rhs.size() == coslice(c, 0).cat->n_obj());
    CHECK(r.morphisms.rhs.size() == coslice(c, 0).cat->n_mor());
  }
  {
    ElementsColimitResult r = elements_as_colimit(fork_diagram(walking_arrow()));
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(r.objects.rhs.size() == 5);
  }
  {
    ElementsColimitResult r = elements_as_colimit(gset3(bz2()));
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(r.total->n_obj() == 6);
    CHECK(r.objects.rhs.size() == 3);
    CHECK(r.morphisms.rhs.size() == 6);
  }
}

TEST_CASE("a coend is a colimit weighted by homs") {
  Witness w1 = coend_as_hom_weighted_colimit(hom_bifunctor(walking_arrow()));
  CHECK_MESSAGE(w1.ok, w1.reason);
  Witness w2 = coend_as_hom_weighted_colimit(hom_bifunctor(bz2()));
  CHECK_MESSAGE(w2.ok, w2.reason);
  CHECK(w2.rhs.size() == 2);
}

TEST_CASE("mapping out of a set passes through weighted limits") {
  Cat c = walking_arrow();
  SetFunctor w = two_point_weight(c);
  SetFunctor f = fork_diagram(c);
  for (int nx : {0, 1, 2}) {
    FinSet x = nx == 0 ? FinSet{} : (nx == 1 ? FinSet{{"x0"}} : FinSet{{"x0", "x1"}});
    Witness wit = hom_commutes_with_weighted_limit(c, w, f, x);
    CHECK_MESSAGE(wit.ok, "|x|=" << nx << ": " << wit.reason);
  }
}

TEST_CASE("weighted colimits send weight pushouts to pushouts") {
  Cat c = walking_arrow();
  Cat cop = opposite(c);
  SetFunctor w0 = representable_cov(cop, 0);
  SetFunctor w1 = terminal_setfunctor(cop);
  SetFunctor w2 = representable_cov(cop, 1);
  SetNatComp t1 = {{0}, {}};
  SetNatComp t2 = {{0}, {}};
  SetFunctor f = fork_diagram(c);
  Witness w = weight_pushout_cocontinuity(c, w0, w1, w2, t1, t2, f);
  CHECK_MESSAGE(w.ok, w.reason);
  CHECK(w.lhs.size() == 2);
}

TEST_CASE("extensions valued in presheaves work through the product base") {
  Cat one = terminal_cat();
  Cat two = walking_arrow();
  Cat eop = opposite(walking_arrow());
  ProdCat s = product(one, eop);
  ProdCat t = product(two, eop);
  FinFunctor kk = pair_functor(s, t, thin_functor(one, two, {0}), identity_functor(eop));
  SetFunctor f2;
  f2.base = s.cat;
  f2.ob = {FinSet{{"p", "q"}}, FinSet{{"r"}}};
  f2.mo.resize(s.cat->n_mor());
  for (int m = 0; m < s.cat->n_mor(); ++m) {
    int a = s.cat->src(m);
    if (s.cat->trg(m) == a)
      f2.mo[m] = a == 0 ? std::vector<int>{0, 1} : std::vector<int>{0};
    else
      f2.mo[m] = {0};
  }
  f2 = bless_setfunctor(std::move(f2));
  LanResult l = lan(kk, f2);
  CHECK(l.value.ob[t.ob(0, 0)].size() == 2);
  CHECK(l.value.ob[t.ob(1, 0)].size() == 2);
  CHECK(l.value.ob[t.ob(0, 1)].size() == 1);
  CHECK(l.value.ob[t.ob(1, 1)].size() == 1);
  Witness w = lan_universal(l, f2, terminal_setfunctor(t.cat));
  CHECK_MESSAGE(w.ok, w.reason);
  CHECK(w.lhs.size() == 1);
}

TEST_CASE("mismatched shapes are rejected") {
  Cat c = walking_arrow();
  Cat d = chain3();
  SetFunctor f = fork_diagram(c);
  CHECK_THROWS_AS(lan(thin_functor(d, d, {0, 1, 2}), f), ShapeMismatch);
  CHECK_THROWS_AS(weighted_colimit(c, f, f), ShapeMismatch);
  CHECK_THROWS_AS(functor_tensor(c, f, f), ShapeMismatch);
  CHECK_THROWS_AS(weighted_limit(c, representable_cov(opposite(c), 0), f), ShapeMismatch);
}

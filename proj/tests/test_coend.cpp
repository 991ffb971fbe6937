#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fce/coend.hpp"

#include <algorithm>

using namespace fce;

namespace {

Cat bz2() { return from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0); }

std::vector<std::vector<int>> s3_mul() {
  std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> mul(6, std::vector<int>(6, -1));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) mul[i][j] = k;
    }
  return mul;
}

Cat bs3() { return from_monoid("BS3", {"e", "t01", "t12", "t02", "r1", "r2"}, s3_mul(), 0); }

Cat chain3() {
  std::vector<std::vector<bool>> leq = {
      {true, true, true}, {false, true, true}, {false, false, true}};
  return from_poset("chain3", {"0", "1", "2"}, leq);
}

// two maps into a common cospan leg; the end is their fiber product
Bifunctor cospan_integrand(Cat c) {
  OpProd base = op_prod(c, c);
  int i0 = c->mor("id0"), i1 = c->mor("id1"), a = c->mor("a");
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(4);
  t.ob[base.ob(0, 0)] = FinSet{{"a", "b"}};
  t.ob[base.ob(0, 1)] = FinSet{{"x", "y"}};
  t.ob[base.ob(1, 0)] = FinSet{{"w"}};
  t.ob[base.ob(1, 1)] = FinSet{{"u"}};
  t.mo.resize(9);
  t.mo[base.mo(i0, i0)] = {0, 1};
  t.mo[base.mo(i0, a)] = {0, 1};
  t.mo[base.mo(i0, i1)] = {0, 1};
  t.mo[base.mo(a, i0)] = {0};
  t.mo[base.mo(a, a)] = {0};
  t.mo[base.mo(a, i1)] = {0};
  t.mo[base.mo(i1, i0)] = {0};
  t.mo[base.mo(i1, a)] = {0};
  t.mo[base.mo(i1, i1)] = {0};
  return make_bifunctor(base, std::move(t));
}

// thin target: the morphism table of a functor is forced by its object table
FinFunctor thin_functor(Cat c, Cat d, std::vector<int> ob) {
  FinFunctor f;
  f.src = c;
  f.trg = d;
  f.on_obj = std::move(ob);
  for (int m = 0; m < c->n_mor(); ++m) {
    auto h = d->hom(f.on_obj[c->src(m)], f.on_obj[c->trg(m)]);
    REQUIRE(h.size() == 1);
    f.on_mor.push_back(h[0]);
  }
  return bless_functor(std::move(f));
}

// G(d, c) = hom_D(d, Fc) as an integrand on op(D) x C
Bifunctor hom_under_functor(const FinFunctor& f) {
  Cat c = f.src, d = f.trg;
  OpProd base = op_prod(d, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  std::vector<std::vector<std::vector<int>>> homs(d->n_obj(),
                                                  std::vector<std::vector<int>>(d->n_obj()));
  for (int x = 0; x < d->n_obj(); ++x)
    for (int y = 0; y < d->n_obj(); ++y) homs[x][y] = d->hom(x, y);
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) {
    auto [dd, cc] = base.ob_parts(o);
    FinSet hs;
    for (int m : homs[dd][f.ob(cc)]) hs.elems.push_back(d->morphisms[m].id);
    t.ob[o] = hs;
  }
  t.mo.resize(base.prod.cat->n_mor());
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) {
    auto [um, vm] = base.mo_parts(q);
    int d1 = d->trg(um), c1 = c->src(vm);
    int d2 = d->src(um), c2 = c->trg(vm);
    const auto& dom = homs[d1][f.ob(c1)];
    const auto& cod = homs[d2][f.ob(c2)];
    for (int h : dom) {
      int h2 = d->compose(f.mo(vm), d->compose(h, um));
      t.mo[q].push_back(
          static_cast<int>(std::find(cod.begin(), cod.end(), h2) - cod.begin()));
    }
  }
  return make_bifunctor(base, std::move(t));
}

// components of every transformation in an end of hom_along, as morphism indices
std::vector<std::vector<int>> nats_via_end(const FinFunctor& f, const FinFunctor& g) {
  Bifunctor ha = hom_along(f, g);
  EndResult e = end_of(ha);
  Cat d = f.trg;
  std::vector<std::vector<int>> out;
  for (const auto& fam : e.families) {
    std::vector<int> comp(f.src->n_obj());
    for (int x = 0; x < f.src->n_obj(); ++x) comp[x] = d->mor(ha.at(x, x).elems[fam[x]]);
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Group z2_group() { return {{"e", "s"}, {{0, 1}, {1, 0}}, 0}; }

Group z4_group() {
  Group g;
  g.elems = {"e", "a", "a2", "a3"};
  g.mul.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.mul[i][j] = (i + j) % 4;
  return g;
}

Group s3_group() { return {{"e", "t01", "t12", "t02", "r1", "r2"}, s3_mul(), 0}; }

}  // namespace

TEST_CASE("quotient sets pick the least tag as representative") {
  QuotientSet q({"b", "a", "c"});
  q.unite(0, 2);
  auto cls = q.classes();
  CHECK(cls.carrier.elems == std::vector<std::string>{"a", "b"});
  CHECK(cls.cls == std::vector<int>{1, 0, 1});
  CHECK(cls.rep == std::vector<int>{1, 0});
}

TEST_CASE("witnesses reject tables that are not mutually inverse") {
  Witness w = make_witness(FinSet{{"p", "q"}}, FinSet{{"x"}}, {0, 0}, {0});
  CHECK_FALSE(w.ok);
  CHECK(w.reason == "round trip fails at q");
  Witness v = make_witness(FinSet{{"p"}}, FinSet{{"x"}}, {0}, {0});
  CHECK(v.ok);
}

TEST_CASE("end over the walking arrow is the fiber product") {
  Cat c = walking_arrow();
  Bifunctor t = cospan_integrand(c);
  EndResult e = end_of(t);
  REQUIRE(e.carrier.size() == 1);
  CHECK(e.carrier.elems[0] == "(a,u)");
  CHECK(e.families[0] == std::vector<int>{0, 0});

  // independent recount: pairs matched under the two maps into T(0,1)
  std::vector<std::pair<int, int>> fiber;
  for (int i = 0; i < t.at(0, 0).size(); ++i)
    for (int j = 0; j < t.at(1, 1).size(); ++j)
      if (t.act(c->mor("id0"), c->mor("a"), i) == t.act(c->mor("a"), c->mor("id1"), j))
        fiber.push_back({i, j});
  REQUIRE(fiber.size() == e.families.size());
  for (size_t k = 0; k < fiber.size(); ++k) {
    CHECK(e.families[k][0] == fiber[k].first);
    CHECK(e.families[k][1] == fiber[k].second);
  }

  auto wedge = check_wedge(e.carrier, e.legs, t);
  CHECK(wedge.ok);
  CHECK(mediator_into_end(e, t, e.carrier, e.legs) == std::vector<int>{0});
}

TEST_CASE("coend over the walking arrow glues along the bridge element") {
  Cat c = walking_arrow();
  Bifunctor t = cospan_integrand(c);
  CoendResult co = coend_of(t);
  REQUIRE(co.carrier.size() == 2);
  CHECK(co.carrier.elems == std::vector<std::string>{"0#a", "0#b"});
  CHECK(co.inject[0] == std::vector<int>{0, 1});
  CHECK(co.inject[1] == std::vector<int>{0});
  CHECK(co.class_rep == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});

  auto cow = check_cowedge(t, co.inject, co.carrier);
  CHECK(cow.ok);
  auto med = mediator_from_coend(co, t, co.inject, co.carrier);
  CHECK(med == std::vector<int>{0, 1});
}

TEST_CASE("mediators refuse non-wedges") {
  Cat c = walking_arrow();
  Bifunctor t = cospan_integrand(c);
  EndResult e = end_of(t);
  std::vector<std::vector<int>> legs = {{1}, {0}};  // picks b at 0, u at 1: not a wedge
  CHECK_THROWS_AS(mediator_into_end(e, t, FinSet{{"pt"}}, legs), std::runtime_error);
  CoendResult co = coend_of(t);
  std::vector<std::vector<int>> split = {{0, 1}, {1}};  // sends u away from its class
  CHECK_THROWS_AS(mediator_from_coend(co, t, split, FinSet{{"p", "q"}}), std::runtime_error);
}

TEST_CASE("end of hom is the center, coend of hom the conjugacy classes") {
  Cat g = bs3();
  EndResult e = end_of(hom_bifunctor(g));
  REQUIRE(e.carrier.size() == 1);
  CHECK(e.carrier.elems[0] == "(e)");

  CoendResult co = coend_of(hom_bifunctor(g));
  REQUIRE(co.carrier.size() == 3);
  std::vector<int> sizes(3, 0);
  for (int cls : co.inject[0]) ++sizes[cls];
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 3});

  Cat z = bz2();
  EndResult ez = end_of(hom_bifunctor(z));
  CHECK(ez.carrier.elems == std::vector<std::string>{"(e)", "(s)"});
  CHECK(coend_of(hom_bifunctor(z)).carrier.size() == 2);

  Cat p = chain3();
  EndResult ep = end_of(hom_bifunctor(p));
  REQUIRE(ep.carrier.size() == 1);
  CHECK(ep.carrier.elems[0] == "(0<=0,1<=1,2<=2)");
  CHECK(coend_of(hom_bifunctor(p)).carrier.size() == 3);
}

TEST_CASE("ends and coends of lifted functors are limits and colimits") {
  Cat c = chain3();
  SetFunctor w = representable_cov(c, 0);
  EndResult e = end_of(lift_cov(w));
  LimitResult l = limit_of(w);
  CHECK(e.families == l.families);
  CHECK(e.carrier.elems == l.carrier.elems);
  CoendResult co = coend_of(lift_cov(w));
  ColimitResult cl = colimit_of(w);
  CHECK(co.inject == cl.cocone);
  CHECK(co.carrier.elems == cl.carrier.elems);

  SetFunctor pre = representable_cov(opposite(c), 0);
  EndResult e2 = end_of(lift_contra(c, pre));
  LimitResult l2 = limit_of(pre);
  CHECK(e2.families == l2.families);
  CHECK_THROWS_AS(lift_contra(c, w), ShapeMismatch);

  Cat iso = walking_iso();
  SetFunctor sw;
  sw.base = iso;
  sw.ob = {FinSet{{"x", "y"}}, FinSet{{"x", "y"}}};
  sw.mo = {{0, 1}, {0, 1}, {1, 0}, {1, 0}};
  sw = bless_setfunctor(std::move(sw));
  CHECK(limit_of(sw).carrier.size() == 2);
  CHECK(colimit_of(sw).carrier.size() == 2);
  CHECK(end_of(lift_cov(sw)).carrier.size() == 2);
}

TEST_CASE("solver honors the state cap") {
  CHECK_THROWS_AS(end_of(hom_bifunctor(bs3()), 3), SizeCapExceeded);
  CHECK_THROWS_AS(all_functors(chain3(), bs3(), 10), SizeCapExceeded);
}

TEST_CASE("twisted-arrow reductions agree with the direct computations") {
  Cat c = walking_arrow();
  Bifunctor t = cospan_integrand(c);
  CHECK(end_via_twisted(t).ok);
  CHECK(coend_via_twisted(t).ok);
  for (Cat x : {bz2(), chain3(), walking_iso()}) {
    CHECK(end_via_twisted(hom_bifunctor(x)).ok);
    CHECK(coend_via_twisted(hom_bifunctor(x)).ok);
  }
  CHECK(end_via_twisted(hom_bifunctor(bs3())).ok);
  CHECK(coend_via_twisted(hom_bifunctor(bs3())).ok);
}

TEST_CASE("functor enumeration matches hand counts") {
  CHECK(all_functors(walking_arrow(), walking_arrow()).size() == 3);
  CHECK(all_functors(chain3(), chain3()).size() == 10);
  CHECK(all_functors(bz2(), bz2()).size() == 2);
  CHECK(all_functors(chain3(), bz2()).size() == 4);
  for (const auto& f : all_functors(chain3(), chain3())) CHECK(validate_functor(f).empty());
}

TEST_CASE("ends of hom-along integrands enumerate natural transformations") {
  std::vector<Cat> cats = {walking_arrow(), chain3(), bz2(), walking_iso()};
  for (Cat c : cats)
    for (Cat d : cats) {
      auto fs = all_functors(c, d);
      for (const auto& f : fs)
        for (const auto& g : fs) {
          auto brute = all_nats_brute(f, g);
          std::sort(brute.begin(), brute.end());
          CHECK(nats_via_end(f, g) == brute);
        }
    }

  Cat c = walking_arrow();
  FinFunctor cst = constant_functor(c, c, 0);
  FinFunctor idc = identity_functor(c);
  auto nats = nats_via_end(cst, idc);
  REQUIRE(nats.size() == 1);
  CHECK(nats[0] == std::vector<int>{c->mor("id0"), c->mor("a")});
  CHECK(nats_via_end(idc, cst).empty());
}

TEST_CASE("iterated ends agree with the end over the product") {
  ProdCat p1 = product(walking_arrow(), walking_arrow());
  FubiniResult r1 = fubini_check(hom_bifunctor(p1.cat), p1);
  CHECK(r1.ok);
  CHECK(r1.full.carrier.size() == 1);
  CHECK(r1.ab.carrier.size() == 1);
  CHECK(r1.ba.carrier.size() == 1);

  ProdCat p2 = product(walking_arrow(), bz2());
  FubiniResult r2 = fubini_check(hom_bifunctor(p2.cat), p2);
  CHECK(r2.ok);
  CHECK(r2.full.carrier.size() == 2);

  ProdCat p3 = product(bz2(), bz2());
  FubiniResult r3 = fubini_check(hom_bifunctor(p3.cat), p3);
  CHECK(r3.ok);
  CHECK(r3.full.carrier.size() == 4);

  auto fs = all_functors(p1.cat, chain3());
  REQUIRE(fs.size() >= 2);
  FubiniResult r4 = fubini_check(hom_along(fs.front(), fs.back()), p1);
  CHECK(r4.ok);

  CHECK_THROWS_AS(fubini_check(hom_bifunctor(walking_arrow()), p1), ShapeMismatch);
}

TEST_CASE("maps into an end are families of maps into the integrand") {
  Bifunctor t = cospan_integrand(walking_arrow());
  for (int n : {0, 1, 2}) {
    FinSet x;
    for (int i = 0; i < n; ++i) x.elems.push_back("p" + std::to_string(i));
    CHECK(hom_into_end(t, x).ok);
  }
  CHECK(hom_into_end(hom_bifunctor(bz2()), FinSet{{"p", "q"}}).ok);
  CHECK(hom_into_end(hom_bifunctor(bs3()), FinSet{{"p"}}).ok);
  CHECK(hom_into_end(hom_bifunctor(chain3()), FinSet{{"p", "q"}}).ok);
}

TEST_CASE("maps out of a coend are families of maps out of the integrand") {
  Bifunctor t = cospan_integrand(walking_arrow());
  for (int n : {0, 1, 2}) {
    FinSet x;
    for (int i = 0; i < n; ++i) x.elems.push_back("p" + std::to_string(i));
    CHECK(hom_out_of_coend(t, x).ok);
  }
  CHECK(hom_out_of_coend(hom_bifunctor(bz2()), FinSet{{"p", "q"}}).ok);
  CHECK(hom_out_of_coend(hom_bifunctor(bs3()), FinSet{{"p"}}).ok);
  CHECK(hom_out_of_coend(hom_bifunctor(chain3()), FinSet{{"p", "q"}}).ok);
}

TEST_CASE("integrand transformations induce maps on ends and coends") {
  Cat z = bz2();
  Bifunctor h = hom_bifunctor(z);
  int s = z->mor("s");
  BiNat shift;  // postcompose with the involution; natural because Z/2 is abelian
  shift.comp = {{}};
  for (int m = 0; m < z->n_mor(); ++m) {
    int img = z->compose(s, m);
    const auto& elems = h.at(0, 0).elems;
    shift.comp[0].push_back(static_cast<int>(
        std::find(elems.begin(), elems.end(), z->morphisms[img].id) - elems.begin()));
  }
  EndResult e = end_of(h);
  auto m1 = end_map(h, h, shift, e, e);
  CHECK(m1 == std::vector<int>{1, 0});
  CHECK(m1[m1[0]] == 0);

  CoendResult co = coend_of(h);
  auto m2 = coend_map(h, h, shift, co, co);
  CHECK(m2 == std::vector<int>{1, 0});

  BiNat ident;
  ident.comp = {{0, 1}};
  CHECK(end_map(h, h, ident, e, e) == std::vector<int>{0, 1});

  Cat g = bs3();
  Bifunctor hg = hom_bifunctor(g);
  BiNat bad;  // left multiplication by a transposition is not central
  bad.comp = {{}};
  int t01 = g->mor("t01");
  for (int m = 0; m < g->n_mor(); ++m) {
    int img = g->compose(t01, m);
    const auto& elems = hg.at(0, 0).elems;
    bad.comp[0].push_back(static_cast<int>(
        std::find(elems.begin(), elems.end(), g->morphisms[img].id) - elems.begin()));
  }
  EndResult eg = end_of(hg);
  CHECK_THROWS_AS(end_map(hg, hg, bad, eg, eg), ShapeMismatch);
}

TEST_CASE("adjunctions validate units, counits, and triangles") {
  Cat c = chain3();
  FinFunctor f = thin_functor(c, c, {0, 2, 2});
  FinFunctor u = thin_functor(c, c, {0, 0, 2});
  std::vector<int> unit, counit;
  for (int x = 0; x < 3; ++x) unit.push_back(c->hom(x, u.ob(f.ob(x)))[0]);
  for (int y = 0; y < 3; ++y) counit.push_back(c->hom(f.ob(u.ob(y)), y)[0]);
  CHECK_NOTHROW(make_adjunction(f, u, unit, counit));

  // the reversed pair is not an adjunction whatever components are supplied
  std::vector<int> ids;
  for (int x = 0; x < 3; ++x) ids.push_back(c->id_of(x));
  CHECK_THROWS_AS(make_adjunction(u, f, ids, ids), NotAnAdjunction);

  Cat z = bz2();
  std::vector<int> e0 = {z->mor("e")}, s0 = {z->mor("s")};
  CHECK_NOTHROW(make_adjunction(identity_functor(z), identity_functor(z), s0, s0));
  CHECK_THROWS_AS(make_adjunction(identity_functor(z), identity_functor(z), s0, e0),
                  NotAnAdjunction);

  FinFunctor bang = constant_functor(c, terminal_cat(), 0);
  CHECK_THROWS_AS(make_adjunction(bang, bang, ids, ids), NotAnAdjunction);
}

TEST_CASE("coends shift across an adjunction") {
  Cat c = chain3();
  FinFunctor idc = identity_functor(c);
  std::vector<int> ids;
  for (int x = 0; x < 3; ++x) ids.push_back(c->id_of(x));
  Adjunction trivial = make_adjunction(idc, idc, ids, ids);
  Witness w0 = adjoint_shift(trivial, hom_bifunctor(c));
  CHECK(w0.ok);
  CHECK(w0.lhs.size() == 3);

  FinFunctor f = thin_functor(c, c, {0, 2, 2});
  FinFunctor u = thin_functor(c, c, {0, 0, 2});
  std::vector<int> unit, counit;
  for (int x = 0; x < 3; ++x) unit.push_back(c->hom(x, u.ob(f.ob(x)))[0]);
  for (int y = 0; y < 3; ++y) counit.push_back(c->hom(f.ob(u.ob(y)), y)[0]);
  Adjunction galois = make_adjunction(f, u, unit, counit);
  Witness w1 = adjoint_shift(galois, hom_under_functor(f));
  CHECK(w1.ok);
  CHECK(w1.lhs.size() == 2);
  CHECK(w1.rhs.size() == 2);

  Cat z = bz2();
  std::vector<int> s0 = {z->mor("s")};
  Adjunction twisted = make_adjunction(identity_functor(z), identity_functor(z), s0, s0);
  Witness w2 = adjoint_shift(twisted, hom_bifunctor(z));
  CHECK(w2.ok);
  CHECK(w2.fwd == std::vector<int>{1, 0});
}

TEST_CASE("a reflection onto the top object computes the colimit by evaluation") {
  Cat c = chain3();
  Cat one = terminal_cat();
  FinFunctor bang = constant_functor(c, one, 0);
  FinFunctor top;
  top.src = one;
  top.trg = c;
  top.on_obj = {2};
  top.on_mor = {c->id_of(2)};
  top = bless_functor(std::move(top));
  std::vector<int> unit, counit = {one->id_of(0)};
  for (int x = 0; x < 3; ++x) unit.push_back(c->hom(x, 2)[0]);
  Adjunction refl = make_adjunction(bang, top, unit, counit);

  for (SetFunctor w :
       {representable_cov(c, 0),
        setfunctor_coproduct(representable_cov(c, 0), representable_cov(c, 2))}) {
    OpProd base = op_prod(one, c);
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(c->n_obj());
    t.mo.resize(c->n_mor());
    for (int o = 0; o < base.prod.cat->n_obj(); ++o) t.ob[o] = w.ob[base.ob_parts(o).second];
    for (int q = 0; q < base.prod.cat->n_mor(); ++q) t.mo[q] = w.mo[base.mo_parts(q).second];
    Bifunctor g = make_bifunctor(base, std::move(t));
    Witness shift = adjoint_shift(refl, g);
    CHECK(shift.ok);
    CHECK(shift.lhs.size() == colimit_of(w).carrier.size());
    CHECK(shift.rhs.size() == w.ob[2].size());
  }
}

TEST_CASE("group and action validation catch broken tables") {
  CHECK(validate_group(z2_group()).empty());
  CHECK(validate_group(z4_group()).empty());
  CHECK(validate_group(s3_group()).empty());
  Group broken = {{"e", "s"}, {{0, 1}, {1, 1}}, 0};
  CHECK_FALSE(validate_group(broken).empty());
  Group wrong_unit = {{"e", "s"}, {{0, 1}, {1, 0}}, 1};
  CHECK_FALSE(validate_group(wrong_unit).empty());

  Group g = z2_group();
  GSet ok = {FinSet{{"x", "y"}}, {{0, 1}, {1, 0}}};
  CHECK(validate_gset(g, ok).empty());
  GSet lazy = {FinSet{{"x", "y"}}, {{1, 0}, {1, 0}}};
  CHECK_FALSE(validate_gset(g, lazy).empty());
}

TEST_CASE("the orbit category of Z/2 has two objects and four arrows") {
  OrbitCat orb = orbit_category(z2_group());
  REQUIRE(orb.cat->n_obj() == 2);
  CHECK(orb.cat->objects == std::vector<std::string>{"{e}", "{e,s}"});
  CHECK(orb.cat->n_mor() == 4);
  CHECK(orb.cat->hom(0, 0).size() == 2);
  CHECK(orb.cat->hom(0, 1).size() == 1);
  CHECK(orb.cat->hom(1, 0).empty());
  CHECK(orb.cat->hom(1, 1).size() == 1);

  OrbitCat o4 = orbit_category(z4_group());
  CHECK(o4.cat->objects ==
        std::vector<std::string>{"{e}", "{e,a2}", "{e,a,a2,a3}"});
}

TEST_CASE("a group action is recovered from its fixed-point data") {
  Group z2 = z2_group();
  GSet regular = {FinSet{{"x0", "x1"}}, {{0, 1}, {1, 0}}};
  GSet trivial = {FinSet{{"p", "q"}}, {{0, 1}, {0, 1}}};
  GSet mixed = {FinSet{{"a", "b", "c", "d"}}, {{0, 1, 2, 3}, {1, 0, 2, 3}}};
  for (const GSet& x : {regular, trivial, mixed}) {
    Witness w = elmendorf_reconstruction(z2, x);
    CHECK(w.ok);
    CHECK(w.rhs.elems == x.elems.elems);
  }

  Group one = {{"e"}, {{0}}, 0};
  GSet any = {FinSet{{"u", "v", "w"}}, {{0, 1, 2}}};
  CHECK(elmendorf_reconstruction(one, any).ok);

  Group z4 = z4_group();
  GSet cyc = {FinSet{{"0", "1", "2", "3"}},
              {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}};
  CHECK(elmendorf_reconstruction(z4, cyc).ok);
  GSet through_z2 = {FinSet{{"x", "y"}}, {{0, 1}, {1, 0}, {0, 1}, {1, 0}}};
  CHECK(elmendorf_reconstruction(z4, through_z2).ok);

  Group s3 = s3_group();
  GSet natural = {FinSet{{"0", "1", "2"}},
                  {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  CHECK(elmendorf_reconstruction(s3, natural).ok);
}

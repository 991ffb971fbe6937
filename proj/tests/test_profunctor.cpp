#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fce/profunctor.hpp"

#include <algorithm>
#include <random>

using namespace fce;

namespace {

Cat bz2() { return from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0); }

Cat chain2() {
  return from_poset("chain2", {"0", "1"}, {{true, true}, {false, true}});
}

Cat chain3() {
  std::vector<std::vector<bool>> leq = {
      {true, true, true}, {false, true, true}, {false, false, true}};
  return from_poset("chain3", {"0", "1", "2"}, leq);
}

Cat vee() {
  std::vector<std::vector<bool>> leq = {
      {true, true, true}, {false, true, false}, {false, false, true}};
  return from_poset("vee", {"x", "y", "z"}, leq);
}

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

FinFunctor collapse_endo(Cat g) {
  FinFunctor f;
  f.src = g;
  f.trg = g;
  f.on_obj = {0};
  f.on_mor.assign(g->n_mor(), g->id_of(0));
  return bless_functor(f);
}

SetFunctor mk(Cat c, std::vector<FinSet> ob, std::vector<std::vector<int>> mo) {
  SetFunctor w;
  w.base = c;
  w.ob = std::move(ob);
  w.mo = std::move(mo);
  return bless_setfunctor(std::move(w));
}

SetFunctor gset3(Cat g) {
  return mk(g, {FinSet{{"x", "y", "z"}}}, {{0, 1, 2}, {0, 2, 1}});
}

SetFunctor disc_copresheaf(Cat c, const std::vector<int>& sizes) {
  SetFunctor w;
  w.base = c;
  for (int o = 0; o < c->n_obj(); ++o) {
    FinSet s;
    for (int i = 0; i < sizes[o]; ++i) s.elems.push_back("u" + std::to_string(i));
    w.ob.push_back(s);
  }
  for (int m = 0; m < c->n_mor(); ++m) {
    std::vector<int> row(sizes[c->src(m)]);
    for (size_t i = 0; i < row.size(); ++i) row[i] = static_cast<int>(i);
    w.mo.push_back(std::move(row));
  }
  return bless_setfunctor(std::move(w));
}

int pos_in(const std::vector<int>& v, int m) {
  return static_cast<int>(std::find(v.begin(), v.end(), m) - v.begin());
}

SetNatComp after(const SetNatComp& second, const SetNatComp& first) {
  SetNatComp out(first.size());
  for (size_t o = 0; o < first.size(); ++o) {
    out[o].resize(first[o].size());
    for (size_t x = 0; x < first[o].size(); ++x) out[o][x] = second[o][first[o][x]];
  }
  return out;
}

SetNatComp fwds(const PointwiseIso& i) {
  SetNatComp out;
  for (const Witness& w : i.at) out.push_back(w.fwd);
  return out;
}

// evaluation at the identity inverts extension along the hom
void ran_hom_is_evaluation(Cat b, const Profunctor& h) {
  Profunctor ph = hom_pro(b);
  RanProResult ran = ran_pro(ph, h);
  Cat a = h.src();
  for (int aa = 0; aa < a->n_obj(); ++aa)
    for (int x = 0; x < b->n_obj(); ++x) {
      const EndResult& en = ran.pts[ran.value.data.base.ob(aa, x)];
      int idpos = pos_in(b->hom(x, x), b->id_of(x));
      std::vector<int> fwd(en.carrier.size());
      for (size_t n = 0; n < fwd.size(); ++n)
        fwd[n] = function_images(ph.at(x, x), h.at(aa, x), en.families[n][x])[idpos];
      std::vector<int> bwd(h.at(aa, x).size());
      for (int u = 0; u < h.at(aa, x).size(); ++u) {
        std::vector<int> fam(b->n_obj());
        for (int bb = 0; bb < b->n_obj(); ++bb) {
          auto ms = b->hom(x, bb);
          std::vector<int> im(ms.size());
          for (size_t i = 0; i < ms.size(); ++i) im[i] = h.act(a->id_of(aa), ms[i], u);
          fam[bb] = function_index(ph.at(x, bb), h.at(aa, bb), im);
        }
        bwd[u] = en.find_family(fam);
        REQUIRE(bwd[u] >= 0);
      }
      Witness w = make_witness(en.carrier, h.at(aa, x), fwd, bwd);
      CHECK(w.ok);
    }
}

// the same relator read against the opposite categories
Profunctor flip_pro(const Profunctor& p) {
  Cat A = p.src(), B = p.trg();
  OpProd base = op_prod(opposite(B), opposite(A));
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  for (int x = 0; x < B->n_obj(); ++x)
    for (int a = 0; a < A->n_obj(); ++a) t.ob[base.ob(x, a)] = p.at(a, x);
  t.mo.resize(base.prod.cat->n_mor());
  for (int m = 0; m < base.prod.cat->n_mor(); ++m) {
    auto [mx, my] = base.mo_parts(m);
    int x1 = B->src(mx), a1 = A->trg(my);
    std::vector<int> tab(p.at(a1, x1).size());
    for (size_t i = 0; i < tab.size(); ++i) tab[i] = p.act(my, mx, static_cast<int>(i));
    t.mo[m] = std::move(tab);
  }
  return make_profunctor(std::move(base), std::move(t));
}

}  // namespace

TEST_CASE("discrete composition multiplies count matrices") {
  Cat a = discrete_cat("A", {"a0", "a1"});
  Cat b = discrete_cat("B", {"b0"});
  Cat c = discrete_cat("C", {"c0"});
  Profunctor p = discrete_pro(a, b, {{2}, {3}});
  Profunctor q = discrete_pro(b, c, {{4}});
  ProComposite pc = pro_compose(p, q);
  CHECK(pc.value.at(0, 0).size() == 8);
  CHECK(pc.value.at(1, 0).size() == 12);

  std::mt19937 rng(7);
  Cat a2 = discrete_cat("A2", {"a0", "a1"});
  Cat b2 = discrete_cat("B2", {"b0", "b1"});
  Cat c2 = discrete_cat("C2", {"c0", "c1"});
  std::vector<std::vector<int>> pc1(2, std::vector<int>(2)), qc1(2, std::vector<int>(2));
  for (auto& row : pc1)
    for (int& v : row) v = static_cast<int>(rng() % 4);
  for (auto& row : qc1)
    for (int& v : row) v = static_cast<int>(rng() % 4);
  ProComposite r = pro_compose(discrete_pro(a2, b2, pc1), discrete_pro(b2, c2, qc1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(r.value.at(i, j).size() == pc1[i][0] * qc1[0][j] + pc1[i][1] * qc1[1][j]);
}

TEST_CASE("composing with the hom on either side changes nothing") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  Profunctor e = embed_cov(thin_functor(c2, c3, {0, 2}));
  UnitorResult l = unit_left(e);
  CHECK(l.iso.ok);
  CHECK(l.iso.natural);
  UnitorResult r = unit_right(e);
  CHECK(r.iso.ok);
  CHECK(r.iso.natural);

  Cat g = bz2();
  Profunctor hp = hom_pro(g);
  CHECK(unit_left(hp).iso.ok);
  CHECK(unit_right(hp).iso.ok);
}

TEST_CASE("regrouping a triple composite is a natural bijection") {
  Cat g = bz2();
  FinFunctor cz = collapse_endo(g);
  Profunctor p = hom_pro(g);
  Profunctor q = embed_cov(cz);
  Profunctor r = embed_contra(cz);
  AssociatorResult a = associator(p, q, r);
  CHECK(a.iso.ok);
  CHECK(a.iso.natural);
}

TEST_CASE("the pasting machinery satisfies pentagon and triangle coherence") {
  Cat g = bz2();
  FinFunctor cz = collapse_endo(g);
  Verdict pent = pentagon_check(hom_pro(g), embed_cov(cz), embed_contra(cz), hom_pro(g));
  CHECK(pent.ok);
  INFO(pent.witness);

  Cat c2 = chain2();
  Cat c3 = chain3();
  FinFunctor f = thin_functor(c2, c3, {0, 2});
  FinFunctor gg = thin_functor(c3, c2, {0, 0, 1});
  Verdict pent2 = pentagon_check(embed_cov(f), embed_cov(gg), embed_cov(f), embed_cov(gg));
  CHECK(pent2.ok);

  Verdict tri = triangle_check(embed_cov(cz), embed_contra(cz));
  CHECK(tri.ok);
  Verdict tri2 = triangle_check(embed_cov(f), embed_cov(gg));
  CHECK(tri2.ok);
}

TEST_CASE("embedding the identity tabulates the hom on both sides") {
  Cat c3 = chain3();
  Profunctor e = embed_cov(identity_functor(c3));
  Profunctor k = embed_contra(identity_functor(c3));
  Profunctor hp = hom_pro(c3);
  REQUIRE(e.data.t.ob.size() == hp.data.t.ob.size());
  for (size_t o = 0; o < hp.data.t.ob.size(); ++o) {
    CHECK(e.data.t.ob[o].elems == hp.data.t.ob[o].elems);
    CHECK(k.data.t.ob[o].elems == hp.data.t.ob[o].elems);
  }
  CHECK(e.data.t.mo == hp.data.t.mo);
  CHECK(k.data.t.mo == hp.data.t.mo);
}

TEST_CASE("embedding a constant functor tabulates homs at its value") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  FinFunctor k = constant_functor(c2, c3, 1);
  Profunctor cov = embed_cov(k);
  Profunctor con = embed_contra(k);
  for (int a = 0; a < 2; ++a) {
    CHECK(cov.at(a, 0).size() == 0);
    CHECK(cov.at(a, 1).size() == 1);
    CHECK(cov.at(a, 2).size() == 1);
    CHECK(con.at(0, a).size() == 1);
    CHECK(con.at(1, a).size() == 1);
    CHECK(con.at(2, a).size() == 0);
  }
}

TEST_CASE("embedding a composite matches composing the embeddings") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  FinFunctor f = thin_functor(c2, c3, {0, 2});
  FinFunctor g = thin_functor(c3, c2, {0, 0, 1});
  PointwiseIso cov = embed_cov_compose_check(f, g);
  CHECK(cov.ok);
  CHECK(cov.natural);
  PointwiseIso con = embed_contra_compose_check(f, g);
  CHECK(con.ok);
  CHECK(con.natural);

  Cat gz = bz2();
  FinFunctor cz = collapse_endo(gz);
  CHECK(embed_cov_compose_check(cz, cz).ok);
  CHECK(embed_contra_compose_check(cz, cz).ok);
}

TEST_CASE("every functor induces an adjunction between its embeddings") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  Cat v = vee();
  Cat d2 = discrete_cat("two", {"y", "z"});
  Cat wa = walking_arrow();
  Cat g = bz2();
  std::vector<FinFunctor> fs = {
      identity_functor(c3),          thin_functor(c2, c3, {0, 2}),
      thin_functor(c3, c2, {0, 0, 1}), collapse_endo(g),
      constant_functor(wa, wa, 0),   thin_functor(d2, v, {1, 2})};
  for (const FinFunctor& f : fs) {
    ProAdjunction adj = adjunction_for(f);
    INFO(adj.reason);
    CHECK(adj.ok);
  }
}

TEST_CASE("full faithfulness read off the unit matches the hom comparison") {
  Cat c3 = chain3();
  FFReport idr = fully_faithful_via_unit(identity_functor(c3));
  CHECK(idr.via_unit);
  CHECK(idr.direct);
  CHECK(idr.agree);

  Cat wa = walking_arrow();
  FFReport cr = fully_faithful_via_unit(constant_functor(wa, wa, 0));
  CHECK_FALSE(cr.via_unit);
  CHECK_FALSE(cr.direct);
  CHECK(cr.agree);
  CHECK(cr.bad_src == 1);
  CHECK(cr.bad_trg == 0);

  Cat v = vee();
  Cat d2 = discrete_cat("two", {"y", "z"});
  FFReport fr = fully_faithful_via_unit(thin_functor(d2, v, {1, 2}));
  CHECK(fr.via_unit);
  CHECK(fr.direct);
  CHECK(fr.agree);

  Cat g = bz2();
  FFReport gr = fully_faithful_via_unit(collapse_endo(g));
  CHECK_FALSE(gr.via_unit);
  CHECK_FALSE(gr.direct);
  CHECK(gr.agree);
}

TEST_CASE("extending along the hom evaluates away") {
  Cat g = bz2();
  ran_hom_is_evaluation(g, embed_cov(collapse_endo(g)));
  Cat c3 = chain3();
  ran_hom_is_evaluation(c3, hom_pro(c3));
}

TEST_CASE("extensions between discrete bases are matrices of function sets") {
  Cat x = discrete_cat("X", {"x0", "x1"});
  Cat b = discrete_cat("B", {"b0", "b1"});
  Cat a = discrete_cat("A", {"a0", "a1"});
  Profunctor p = discrete_pro(x, b, {{1, 2}, {0, 1}});
  Profunctor h = discrete_pro(a, b, {{2, 1}, {1, 0}});
  RanProResult ran = ran_pro(p, h);
  CHECK(ran.value.at(0, 0).size() == 2);
  CHECK(ran.value.at(0, 1).size() == 1);
  CHECK(ran.value.at(1, 0).size() == 0);
  CHECK(ran.value.at(1, 1).size() == 0);
}

TEST_CASE("the extension is right adjoint to composition") {
  Cat g = bz2();
  Profunctor p = embed_cov(collapse_endo(g));
  Profunctor h = hom_pro(g);
  Profunctor probe = hom_pro(g);
  Witness w = ran_pro_universal(p, h, probe);
  INFO(w.reason);
  CHECK(w.ok);
  CHECK(w.lhs.size() == w.rhs.size());
}

TEST_CASE("lifting or extending through the hom changes nothing") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  Profunctor e = embed_cov(thin_functor(c2, c3, {0, 2}));
  CHECK(lift_unit_law(e).ok);
  CHECK(extend_unit_law(e).ok);
  Cat g = bz2();
  Profunctor hp = hom_pro(g);
  CHECK(lift_unit_law(hp).ok);
  CHECK(extend_unit_law(hp).ok);
}

TEST_CASE("lifts and extensions through a composite stage through the factors") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  FinFunctor f = thin_functor(c2, c3, {0, 2});
  FinFunctor g = thin_functor(c3, c2, {0, 0, 1});
  PointwiseIso lc = lift_compose_law(embed_cov(f), embed_cov(g), hom_pro(c2));
  CHECK(lc.ok);
  CHECK(lc.natural);
  PointwiseIso ec = extend_compose_law(embed_cov(f), embed_cov(f), embed_cov(g));
  CHECK(ec.ok);
  CHECK(ec.natural);

  std::mt19937 rng(11);
  auto cnt = [&rng](int lo, int hi, int n, int m) {
    std::vector<std::vector<int>> t(n, std::vector<int>(m));
    for (auto& row : t)
      for (int& v : row) v = lo + static_cast<int>(rng() % (hi - lo + 1));
    return t;
  };
  Cat dc = discrete_cat("C", {"c0", "c1"});
  Cat dd = discrete_cat("D", {"d0", "d1"});
  Cat dd2 = discrete_cat("D2", {"e0", "e1"});
  Cat de = discrete_cat("E", {"v0", "v1"});
  Profunctor dh = discrete_pro(dc, dd, cnt(0, 1, 2, 2));
  Profunctor dk = discrete_pro(dd, dd2, cnt(0, 1, 2, 2));
  Profunctor dl = discrete_pro(dc, de, cnt(1, 2, 2, 2));
  CHECK(lift_compose_law(dh, dk, dl).ok);
  Profunctor xl = discrete_pro(de, dc, cnt(1, 2, 2, 2));
  Profunctor xk = discrete_pro(dd2, dc, cnt(0, 1, 2, 2));
  Profunctor xh = discrete_pro(dd, dd2, cnt(0, 1, 2, 2));
  CHECK(extend_compose_law(xl, xk, xh).ok);

  RanProResult dlift = right_lift(dk, discrete_pro(dd, de, {{1, 2}, {2, 1}}));
  for (int d2 = 0; d2 < 2; ++d2)
    for (int e = 0; e < 2; ++e) {
      int want = 1;
      for (int d = 0; d < 2; ++d) {
        int base = d == 0 ? (e == 0 ? 1 : 2) : (e == 0 ? 2 : 1);
        for (int i = 0; i < dk.at(d, d2).size(); ++i) want *= base;
      }
      CHECK(dlift.value.at(d2, e).size() == want);
    }
}

TEST_CASE("the collage of the empty relator is the disjoint union") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  OpProd base = op_prod(c2, c3);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.assign(base.prod.cat->n_obj(), FinSet{});
  t.mo.assign(base.prod.cat->n_mor(), {});
  CollageResult col = collage(make_profunctor(base, t));
  CHECK(col.cat->n_obj() == 5);
  CHECK(col.cat->n_mor() == 9);
  CHECK(col.cat->hom(col.obj_src[0], col.obj_trg[0]).empty());
  CHECK(col.elements_iso.ok);
}

TEST_CASE("a single cross element glues two points into the walking arrow") {
  Cat pt1 = terminal_cat();
  Cat pt2 = terminal_cat();
  OpProd base = op_prod(pt1, pt2);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob = {FinSet{{"p"}}};
  t.mo = {{0}};
  CollageResult col = collage(make_profunctor(base, t));
  CHECK(col.cat->n_obj() == 2);
  CHECK(col.cat->n_mor() == 3);
  CHECK(col.cat->hom(col.obj_src[0], col.obj_trg[0]).size() == 1);
  CHECK(col.cat->hom(col.obj_trg[0], col.obj_src[0]).empty());
  CHECK(col.elements_iso.ok);
}

TEST_CASE("hom collages tabulate the original homs and cross arrows compose by action") {
  Cat c3 = chain3();
  CollageResult col3 = collage(hom_pro(c3));
  CHECK(col3.cat->n_obj() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      size_t want = i <= j ? 1 : 0;
      CHECK(col3.cat->hom(col3.obj_src[i], col3.obj_src[j]).size() == want);
      CHECK(col3.cat->hom(col3.obj_trg[i], col3.obj_trg[j]).size() == want);
      CHECK(col3.cat->hom(col3.obj_src[i], col3.obj_trg[j]).size() == want);
      CHECK(col3.cat->hom(col3.obj_trg[i], col3.obj_src[j]).empty());
    }
  CHECK(col3.elements_iso.ok);

  Cat g = bz2();
  CollageResult colg = collage(hom_pro(g));
  CHECK(colg.cat->n_obj() == 2);
  CHECK(colg.cat->n_mor() == 6);
  int xe = colg.cross[0][0][0];
  int xs = colg.cross[0][0][1];
  CHECK(colg.cat->compose(xe, colg.mor_src[1]) == xs);
  CHECK(colg.cat->compose(colg.mor_trg[1], xe) == xs);
  CHECK(colg.elements_iso.ok);
}

TEST_CASE("tensoring a copresheaf with the hom gives it back") {
  Cat g = bz2();
  PointwiseIso u = action_unit_law(g, gset3(g));
  CHECK(u.ok);
  CHECK(u.natural);
  Cat c3 = chain3();
  CHECK(action_unit_law(c3, representable_cov(c3, 0)).ok);
  CHECK(action_unit_law(c3, setfunctor_coproduct(representable_cov(c3, 1),
                                                 terminal_setfunctor(c3)))
            .ok);
}

TEST_CASE("tensoring along a composite stages through the factors") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  Profunctor p = embed_cov(thin_functor(c2, c3, {0, 2}));
  Profunctor q = embed_cov(thin_functor(c3, c2, {0, 0, 1}));
  PointwiseIso a = action_compose_law(p, q, representable_cov(c2, 0));
  CHECK(a.ok);
  CHECK(a.natural);

  Cat g = bz2();
  CHECK(action_compose_law(hom_pro(g), embed_cov(collapse_endo(g)), gset3(g)).ok);

  Cat da = discrete_cat("A", {"a0", "a1"});
  Cat db = discrete_cat("B", {"b0", "b1"});
  Profunctor dp = discrete_pro(da, db, {{2, 0}, {1, 3}});
  SetFunctor f = disc_copresheaf(da, {2, 1});
  ProActionResult act = pro_action(dp, f);
  CHECK(act.value.ob[0].size() == 2 * 2 + 1 * 1);
  CHECK(act.value.ob[1].size() == 0 * 2 + 3 * 1);
}

TEST_CASE("adjointness of functors shows as matching embeddings") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  FinFunctor f = thin_functor(c2, c3, {0, 2});
  FinFunctor g = thin_functor(c3, c2, {0, 0, 1});
  FinFunctor g2 = thin_functor(c3, c2, {0, 1, 1});
  CHECK(adjoint_via_embeddings(f, g).adjoint);
  CHECK_FALSE(adjoint_via_embeddings(f, g2).adjoint);
  CHECK_FALSE(adjoint_via_embeddings(g, f).adjoint);

  Cat gz = bz2();
  CHECK_FALSE(adjoint_via_embeddings(identity_functor(gz), collapse_endo(gz)).adjoint);
}

TEST_CASE("relators against the point round-trip with presheaves") {
  Cat c3 = chain3();
  Cat host = opposite(c3);
  SetFunctor w = representable_cov(host, 0);
  Profunctor pw = pro_from_presheaf(c3, w);
  CHECK(pw.src() == c3);
  SetFunctor back = presheaf_from_pro(pw, host);
  REQUIRE(back.ob.size() == w.ob.size());
  for (size_t o = 0; o < w.ob.size(); ++o) CHECK(back.ob[o].elems == w.ob[o].elems);
  CHECK(back.mo == w.mo);

  Cat g = bz2();
  SetFunctor f = gset3(g);
  Profunctor pf = pro_from_copresheaf(f);
  CHECK(pf.trg() == g);
  SetFunctor back2 = copresheaf_from_pro(pf);
  for (size_t o = 0; o < f.ob.size(); ++o) CHECK(back2.ob[o].elems == f.ob[o].elems);
  CHECK(back2.mo == f.mo);
}

TEST_CASE("unitor and regrouping squares commute against a chosen 2-cell") {
  Cat g = bz2();
  Profunctor hp = hom_pro(g);
  auto nats = all_setnats(hp.data.t, hp.data.t);
  SetNatComp idn = identity_setnat(hp.data.t);
  SetNatComp alpha;
  for (const SetNatComp& t : nats)
    if (t != idn) alpha = t;
  REQUIRE_FALSE(alpha.empty());

  UnitorResult lu = unit_left(hp);
  SetNatComp whisker = pro_hcomp(lu.composite, lu.composite,
                                 identity_setnat(lu.composite.left.data.t), alpha);
  CHECK(after(alpha, fwds(lu.iso)) == after(fwds(lu.iso), whisker));
  UnitorResult ru = unit_right(hp);
  SetNatComp whisker2 = pro_hcomp(ru.composite, ru.composite, alpha,
                                  identity_setnat(ru.composite.right.data.t));
  CHECK(after(alpha, fwds(ru.iso)) == after(fwds(ru.iso), whisker2));

  AssociatorResult a = associator(hp, hp, hp);
  SetNatComp inner = pro_hcomp(a.qr, a.qr, alpha, identity_setnat(hp.data.t));
  SetNatComp rroute = pro_hcomp(a.right, a.right, identity_setnat(hp.data.t), inner);
  SetNatComp pqcell = pro_hcomp(a.pq, a.pq, identity_setnat(hp.data.t), alpha);
  SetNatComp lroute = pro_hcomp(a.left, a.left, pqcell, identity_setnat(hp.data.t));
  CHECK(after(rroute, fwds(a.iso)) == after(fwds(a.iso), lroute));
}

TEST_CASE("tensoring with a presheaf is composition with the flipped relator") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  Profunctor p = embed_cov(thin_functor(c2, c3, {0, 2}));
  Profunctor fp = flip_pro(p);
  SetFunctor w = representable_cov(fp.src(), 2);
  Profunctor wp = pro_from_presheaf(c3, w);
  ProComposite via_comp = pro_compose(p, wp);
  ProActionResult via_act = pro_action(fp, w);
  for (int a = 0; a < c2->n_obj(); ++a) {
    CHECK(via_comp.pts[via_comp.value.data.base.ob(a, 0)].inject == via_act.pts[a].inject);
    CHECK(via_comp.value.at(a, 0).size() ==
          static_cast<int>(via_act.value.ob[a].size()));
  }
}

TEST_CASE("shape guards reject mismatched relators") {
  Cat c2 = chain2();
  Cat c3 = chain3();
  Profunctor e = embed_cov(thin_functor(c2, c3, {0, 2}));
  CHECK_THROWS_AS(pro_compose(e, e), ShapeMismatch);
  CHECK_THROWS_AS(discrete_pro(walking_arrow(), c2, {{1}, {1}}), ShapeMismatch);
  CHECK_THROWS_AS(rebase_like(hom_pro(c2), hom_pro(c3)), ShapeMismatch);
  Cat g = bz2();
  CHECK_THROWS_AS(pro_action(e, gset3(g)), ShapeMismatch);
  CHECK_THROWS_AS(ran_pro(e, hom_pro(c2)), ShapeMismatch);
}

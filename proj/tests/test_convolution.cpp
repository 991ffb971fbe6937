#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fce/convolution.hpp"
#include "fce/kanweighted.hpp"

#include <algorithm>
#include <random>

using namespace fce;

namespace {

MonoidalStructure z2() {
  return discrete_monoidal("Z2", {"0", "1"}, {{0, 1}, {1, 0}}, 0);
}

MonoidalStructure z4() {
  return discrete_monoidal("Z4", {"0", "1", "2", "3"},
                           {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, 0);
}

MonoidalStructure idem() {
  return discrete_monoidal("M2", {"e", "a"}, {{0, 1}, {1, 1}}, 0);
}

// right-zero rows below the unit row: associative but not commutative
MonoidalStructure skew3() {
  return discrete_monoidal("R3", {"e", "p", "q"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
}

Cat chain2() { return from_poset("chain2", {"0", "1"}, {{true, true}, {false, true}}); }

Cat vee() {
  std::vector<std::vector<bool>> leq = {
      {true, true, true}, {false, true, false}, {false, false, true}};
  return from_poset("vee", {"x", "y", "z"}, leq);
}

Cat bz2() { return from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0); }

SetFunctor mk(Cat c, std::vector<FinSet> ob, std::vector<std::vector<int>> mo) {
  SetFunctor w;
  w.base = c;
  w.ob = std::move(ob);
  w.mo = std::move(mo);
  return bless_setfunctor(std::move(w));
}

SetFunctor disc(Cat c, const std::vector<int>& sizes) {
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

// functor on the walking arrow: two fibers and a transition map
SetFunctor arrow_fun(Cat wa, int n0, int n1, const std::vector<int>& step) {
  FinSet s0, s1;
  for (int i = 0; i < n0; ++i) s0.elems.push_back("a" + std::to_string(i));
  for (int i = 0; i < n1; ++i) s1.elems.push_back("b" + std::to_string(i));
  SetFunctor w;
  w.base = wa;
  w.ob = {s0, s1};
  w.mo.resize(wa->n_mor());
  std::vector<int> i0(n0), i1(n1);
  for (int i = 0; i < n0; ++i) i0[i] = i;
  for (int i = 0; i < n1; ++i) i1[i] = i;
  w.mo[wa->id_of(0)] = i0;
  w.mo[wa->id_of(1)] = i1;
  w.mo[wa->hom(0, 1).at(0)] = step;
  return bless_setfunctor(std::move(w));
}

FinFunctor disc_mon_map(Cat s, Cat t, std::vector<int> on_obj) {
  FinFunctor f;
  f.src = s;
  f.trg = t;
  f.on_mor = on_obj;
  f.on_obj = std::move(on_obj);
  return bless_functor(std::move(f));
}

std::vector<int> seeded_sizes(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> out(n);
  for (int& v : out) v = d(rng);
  return out;
}

bool same_setfunctor(const SetFunctor& a, const SetFunctor& b) {
  if (a.ob.size() != b.ob.size() || a.mo.size() != b.mo.size()) return false;
  for (size_t o = 0; o < a.ob.size(); ++o)
    if (a.ob[o].elems != b.ob[o].elems) return false;
  for (size_t m = 0; m < a.mo.size(); ++m)
    if (a.mo[m] != b.mo[m]) return false;
  return true;
}

}  // namespace

TEST_CASE("monoidal builders validate coherence and detect symmetry") {
  MonoidalStructure m = z2();
  CHECK(m.symmetric);
  CHECK(m.tob(1, 1) == 0);
  CHECK(m.unit == 0);
  CHECK(idem().symmetric);
  CHECK(z4().symmetric);
  CHECK_FALSE(skew3().symmetric);

  MonoidalStructure mm = meet_monoidal(chain2(), 1);
  CHECK(mm.symmetric);
  CHECK(mm.tob(0, 1) == 0);
  CHECK(mm.tob(1, 1) == 1);

  CHECK_THROWS_AS(discrete_monoidal("bad", {"x", "y"}, {{0, 1}, {0, 0}}, 0),
                  AssociativityIsoFailure);
  CHECK_THROWS_AS(discrete_monoidal("bad", {"x", "y"}, {{0, 1}, {1, 0}}, 1), UnitIsoFailure);
  CHECK_THROWS_AS(meet_monoidal(vee(), 0), ShapeMismatch);
}

TEST_CASE("convolution carriers sum the tensor fibers on a discrete base") {
  MonoidalStructure m = z2();
  SetFunctor f = disc(m.base, {2, 3});
  SetFunctor g = disc(m.base, {1, 1});
  DayResult conv = day_convolve(f, g, m);
  CHECK(conv.value.ob[0].size() == 5);
  CHECK(conv.value.ob[1].size() == 5);

  MonoidalStructure m4 = z4();
  MonoidalStructure mi = idem();
  std::mt19937 rng(901);
  for (int trial = 0; trial < 10; ++trial) {
    const MonoidalStructure& mm = trial % 2 == 0 ? m4 : mi;
    int n = mm.base->n_obj();
    std::vector<int> fs = seeded_sizes(rng, n, 0, 3);
    std::vector<int> gs = seeded_sizes(rng, n, 0, 3);
    DayResult c = day_convolve(disc(mm.base, fs), disc(mm.base, gs), mm);
    for (int x = 0; x < n; ++x) {
      int expect = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (mm.tob(a, b) == x) expect += fs[a] * gs[b];
      CHECK(c.value.ob[x].size() == expect);
    }
  }
}

TEST_CASE("unit laws collapse convolution with the represented unit") {
  MonoidalStructure m = z2();
  SetFunctor f = disc(m.base, {2, 3});
  PointwiseIso r = day_unit_right(f, m);
  CHECK(r.ok);
  CHECK(r.natural);
  PointwiseIso l = day_unit_left(f, m);
  CHECK(l.ok);
  CHECK(l.natural);

  MonoidalStructure mi = idem();
  SetFunctor fi = disc(mi.base, {1, 2});
  CHECK(day_unit_right(fi, mi).ok);
  CHECK(day_unit_left(fi, mi).ok);

  MonoidalStructure mm = meet_monoidal(chain2(), 1);
  SetFunctor fa = arrow_fun(mm.base, 2, 2, {1, 1});
  PointwiseIso ra = day_unit_right(fa, mm);
  CHECK(ra.ok);
  CHECK(ra.natural);
  CHECK(day_unit_left(fa, mm).ok);
}

TEST_CASE("associativity collapse is a natural bijection") {
  MonoidalStructure m4 = z4();
  SetFunctor f = disc(m4.base, {1, 2, 0, 1});
  SetFunctor g = disc(m4.base, {2, 1, 1, 0});
  SetFunctor h = disc(m4.base, {1, 1, 1, 1});
  PointwiseIso a4 = day_assoc(f, g, h, m4);
  CHECK(a4.ok);
  CHECK(a4.natural);

  MonoidalStructure mi = idem();
  PointwiseIso ai = day_assoc(disc(mi.base, {2, 1}), disc(mi.base, {1, 2}),
                              disc(mi.base, {1, 1}), mi);
  CHECK(ai.ok);
  CHECK(ai.natural);

  MonoidalStructure mm = meet_monoidal(chain2(), 1);
  PointwiseIso am = day_assoc(arrow_fun(mm.base, 1, 2, {0}), arrow_fun(mm.base, 2, 1, {0, 0}),
                              arrow_fun(mm.base, 1, 1, {0}), mm);
  CHECK(am.ok);
  CHECK(am.natural);
}

TEST_CASE("the exponential carrier is the expected function space") {
  MonoidalStructure m1 = discrete_monoidal("pt", {"*"}, {{0}}, 0);
  SetFunctor g = disc(m1.base, {2});
  SetFunctor h = disc(m1.base, {3});
  DayHomResult dh = day_hom(g, h, m1);
  CHECK(dh.value.ob[0].size() == 9);
}

TEST_CASE("exponential at the represented unit recovers the target") {
  MonoidalStructure m = z2();
  Cat base = m.base;
  SetFunctor yi = representable_cov(base, m.unit);
  SetFunctor h = disc(base, {2, 1});
  DayHomResult dh = day_hom(yi, h, m);
  for (int x = 0; x < base->n_obj(); ++x) {
    std::vector<int> fwd(dh.pts[x].carrier.size());
    for (size_t el = 0; el < fwd.size(); ++el)
      fwd[el] = function_images(yi.ob[m.unit], h.ob[m.tob(m.unit, x)],
                                dh.pts[x].families[el][m.unit])[0];
    std::vector<int> bwd(h.ob[x].size());
    for (int v = 0; v < h.ob[x].size(); ++v) {
      std::vector<int> fam(base->n_obj());
      for (int c = 0; c < base->n_obj(); ++c) {
        auto ws = base->hom(m.unit, c);
        std::vector<int> images(ws.size());
        for (size_t jj = 0; jj < ws.size(); ++jj)
          images[jj] = h.mo[m.tmo(ws[jj], base->id_of(x))][v];
        fam[c] = function_index(yi.ob[c], h.ob[m.tob(c, x)], images);
      }
      bwd[v] = dh.pts[x].find_family(fam);
      REQUIRE(bwd[v] >= 0);
    }
    Witness w = make_witness(dh.pts[x].carrier, h.ob[x], fwd, bwd);
    CHECK(w.ok);
  }
}

TEST_CASE("the exponential transposes the convolution") {
  MonoidalStructure m = z2();
  Witness w = day_hom_adjunction(disc(m.base, {1, 1}), disc(m.base, {1, 1}),
                                 disc(m.base, {2, 1}), m);
  CHECK(w.ok);
  CHECK(w.lhs.size() == w.rhs.size());

  MonoidalStructure mi = idem();
  Witness wi = day_hom_adjunction(disc(mi.base, {1, 1}), disc(mi.base, {1, 1}),
                                  disc(mi.base, {2, 2}), mi);
  CHECK(wi.ok);

  MonoidalStructure ms = skew3();
  CHECK_THROWS_AS(day_hom_adjunction(disc(ms.base, {1, 1, 1}), disc(ms.base, {1, 1, 1}),
                                     disc(ms.base, {1, 1, 1}), ms),
                  ShapeMismatch);
}

TEST_CASE("derived relator structures validate") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  CHECK(dz2.rho_w[0].ok);
  CHECK(dz2.lam_w[0].ok);
  CHECK(dz2.assoc_w[0].ok);
  day_promonoidal(z4());
  day_promonoidal(idem());
  day_promonoidal(meet_monoidal(chain2(), 1));

  cauchy_promonoidal(terminal_cat());
  PromonoidalStructure cb = cauchy_promonoidal(bz2());
  CHECK(cb.assoc_w[0].lhs.size() == 8);
  cauchy_promonoidal(walking_arrow());

  auto rho = dz2.rho;
  rho[0][0] = 5;
  CHECK_THROWS_AS(promonoidal_validate(dz2.square, dz2.p, dz2.j, dz2.alpha, rho, dz2.lambda),
                  UnitIsoFailure);
  auto alpha = cb.alpha;
  REQUIRE(alpha[0].size() >= 2);
  alpha[0][1] = alpha[0][0];
  CHECK_THROWS_AS(promonoidal_validate(cb.square, cb.p, cb.j, alpha, cb.rho, cb.lambda),
                  AssociativityIsoFailure);
}

TEST_CASE("a derived relator convolution reproduces the direct form") {
  for (MonoidalStructure m : {z2(), idem()}) {
    PromonoidalStructure ps = day_promonoidal(m);
    SetFunctor f = disc(m.base, {2, 1});
    SetFunctor g = disc(m.base, {1, 2});
    DayResult direct = day_convolve(f, g, m);
    DayResult relator = p_convolve(f, g, ps);
    CHECK(same_setfunctor(direct.value, relator.value));
  }
}

TEST_CASE("relator convolution satisfies unit and associativity laws") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  SetFunctor f = disc(dz2.base, {1, 2});
  CHECK(p_unit_right(f, dz2).ok);
  CHECK(p_unit_left(f, dz2).ok);
  PointwiseIso pa = p_assoc(f, disc(dz2.base, {2, 1}), disc(dz2.base, {1, 1}), dz2);
  CHECK(pa.ok);
  CHECK(pa.natural);

  PromonoidalStructure di = day_promonoidal(idem());
  SetFunctor fi = disc(di.base, {2, 1});
  CHECK(p_unit_right(fi, di).ok);
  CHECK(p_unit_left(fi, di).ok);

  Cat g = bz2();
  PromonoidalStructure cb = cauchy_promonoidal(g);
  SetFunctor reg = mk(g, {FinSet{{"e", "s"}}}, {{0, 1}, {1, 0}});
  SetFunctor triv = mk(g, {FinSet{{"p", "q"}}}, {{0, 1}, {0, 1}});
  CHECK(p_unit_right(reg, cb).ok);
  CHECK(p_unit_left(reg, cb).ok);
  PointwiseIso ca = p_assoc(reg, triv, reg, cb);
  CHECK(ca.ok);
  CHECK(ca.natural);

  Cat wa = walking_arrow();
  PromonoidalStructure cw = cauchy_promonoidal(wa);
  SetFunctor fa = arrow_fun(wa, 2, 1, {0, 0});
  CHECK(p_unit_right(fa, cw).ok);
  CHECK(p_unit_left(fa, cw).ok);
}

TEST_CASE("double-hom convolution is the pointwise product") {
  Cat g = bz2();
  PromonoidalStructure cb = cauchy_promonoidal(g);
  SetFunctor reg = mk(g, {FinSet{{"e", "s"}}}, {{0, 1}, {1, 0}});
  SetFunctor triv = mk(g, {FinSet{{"p", "q"}}}, {{0, 1}, {0, 1}});
  PointwiseIso i = cauchy_is_pointwise(reg, triv, cb);
  CHECK(i.ok);
  CHECK(i.natural);
  CHECK(i.at[0].lhs.size() == 4);

  Cat wa = walking_arrow();
  PromonoidalStructure cw = cauchy_promonoidal(wa);
  PointwiseIso iw = cauchy_is_pointwise(arrow_fun(wa, 2, 1, {0, 0}),
                                        arrow_fun(wa, 1, 2, {1}), cw);
  CHECK(iw.ok);
  CHECK(iw.natural);

  PromonoidalStructure dz2 = day_promonoidal(z2());
  CHECK_THROWS_AS(
      cauchy_is_pointwise(disc(dz2.base, {1, 1}), disc(dz2.base, {1, 1}), dz2),
      ShapeMismatch);
}

TEST_CASE("the hom relator is a kernel for any validated structure") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  Kernel k1 = hom_kernel(dz2);
  CHECK(k1.ok);

  PromonoidalStructure di = day_promonoidal(idem());
  CHECK(hom_kernel(di).ok);

  PromonoidalStructure cb = cauchy_promonoidal(bz2());
  Kernel k2 = hom_kernel(cb);
  CHECK(k2.ok);
  CHECK(k2.k1[0].lhs.size() == 4);
}

TEST_CASE("strict tensor functors induce kernels that compose") {
  MonoidalStructure m4 = z4();
  MonoidalStructure m2 = z2();
  FinFunctor mod2 = disc_mon_map(m4.base, m2.base, {0, 1, 0, 1});
  Kernel km = functor_kernel(mod2, m4, m2);
  CHECK(km.ok);

  FinFunctor dbl = disc_mon_map(m2.base, m4.base, {0, 2});
  Kernel kd = functor_kernel(dbl, m2, m4);
  CHECK(kd.ok);

  Kernel comp = compose_kernels(dbl, mod2, m2, m4, m2);
  CHECK(comp.ok);
  Kernel comp2 = compose_kernels(mod2, dbl, m4, m2, m4);
  CHECK(comp2.ok);

  FinFunctor skewed = disc_mon_map(m4.base, m2.base, {0, 1, 1, 0});
  CHECK_THROWS_AS(functor_kernel(skewed, m4, m2), ShapeMismatch);
}

TEST_CASE("mediator-free checking disproves or forces") {
  MonoidalStructure m2 = z2();
  PromonoidalStructure dz2 = day_promonoidal(m2);
  Profunctor id_pro = discrete_pro(m2.base, m2.base, {{1, 0}, {0, 1}});
  Kernel forced = kernel_check(id_pro, dz2, dz2);
  CHECK(forced.ok);

  Profunctor bumped = discrete_pro(m2.base, m2.base, {{1, 1}, {0, 1}});
  Kernel bad = kernel_check(bumped, dz2, dz2);
  CHECK_FALSE(bad.ok);
  CHECK(bad.reason.find("disagree") != std::string::npos);

  PromonoidalStructure cb = cauchy_promonoidal(bz2());
  Kernel wide = kernel_check(hom_pro(cb.base), cb, cb);
  CHECK_FALSE(wide.ok);
  CHECK(wide.reason.find("mediators") != std::string::npos);
}

TEST_CASE("the hom kernel transform is the identity") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  Kernel k = hom_kernel(dz2);
  Cat base = dz2.base;
  SetFunctor f = disc(base, {2, 3});
  FourierResult four = fourier(k, f);
  for (int x = 0; x < base->n_obj(); ++x) {
    std::vector<int> fwd(four.pts[x].carrier.size(), -1);
    for (int c = 0; c < base->n_obj(); ++c) {
      auto us = base->hom(c, x);
      for (size_t u = 0; u < us.size(); ++u)
        for (int s = 0; s < f.ob[c].size(); ++s) {
          int cls = four.pts[x].inject[c][u * f.ob[c].size() + s];
          int img = f.mo[us[u]][s];
          REQUIRE((fwd[cls] == -1 || fwd[cls] == img));
          fwd[cls] = img;
        }
    }
    std::vector<int> bwd(f.ob[x].size());
    auto xs = base->hom(x, x);
    int idpos = static_cast<int>(std::find(xs.begin(), xs.end(), base->id_of(x)) - xs.begin());
    for (int s = 0; s < f.ob[x].size(); ++s)
      bwd[s] = four.pts[x].inject[x][idpos * f.ob[x].size() + s];
    Witness w = make_witness(four.pts[x].carrier, f.ob[x], fwd, bwd);
    CHECK(w.ok);
  }
}

TEST_CASE("the transform sends the source unit to the target unit") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  PointwiseIso u1 = fourier_unit_law(hom_kernel(dz2), dz2, dz2);
  CHECK(u1.ok);
  CHECK(u1.natural);

  PromonoidalStructure cb = cauchy_promonoidal(bz2());
  PointwiseIso u2 = fourier_unit_law(hom_kernel(cb), cb, cb);
  CHECK(u2.ok);
  CHECK(u2.natural);

  MonoidalStructure m4 = z4();
  MonoidalStructure m2 = z2();
  FinFunctor mod2 = disc_mon_map(m4.base, m2.base, {0, 1, 0, 1});
  Kernel km = functor_kernel(mod2, m4, m2);
  PointwiseIso u3 = fourier_unit_law(km, day_promonoidal(m4), day_promonoidal(m2));
  CHECK(u3.ok);
  CHECK(u3.natural);
}

TEST_CASE("the transform of a convolution is the convolution of transforms") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  Kernel kh = hom_kernel(dz2);
  SetFunctor f = disc(dz2.base, {1, 2});
  SetFunctor g = disc(dz2.base, {2, 1});
  PointwiseIso p1 = parseval(kh, f, g, dz2, dz2);
  CHECK(p1.ok);
  CHECK(p1.natural);

  Cat grp = bz2();
  PromonoidalStructure cb = cauchy_promonoidal(grp);
  SetFunctor reg = mk(grp, {FinSet{{"e", "s"}}}, {{0, 1}, {1, 0}});
  SetFunctor triv = mk(grp, {FinSet{{"p", "q"}}}, {{0, 1}, {0, 1}});
  PointwiseIso p2 = parseval(hom_kernel(cb), reg, triv, cb, cb);
  CHECK(p2.ok);
  CHECK(p2.natural);

  MonoidalStructure m4 = z4();
  MonoidalStructure m2 = z2();
  FinFunctor mod2 = disc_mon_map(m4.base, m2.base, {0, 1, 0, 1});
  Kernel km = functor_kernel(mod2, m4, m2);
  PromonoidalStructure pa4 = day_promonoidal(m4);
  PromonoidalStructure pa2 = day_promonoidal(m2);
  SetFunctor f4 = disc(m4.base, {1, 1, 0, 1});
  SetFunctor g4 = disc(m4.base, {0, 1, 1, 1});
  PointwiseIso p3 = parseval(km, f4, g4, pa4, pa2);
  CHECK(p3.ok);
  CHECK(p3.natural);
}

TEST_CASE("the transform adjunction is a bijection of 2-cell sets") {
  PromonoidalStructure dz2 = day_promonoidal(z2());
  Kernel kh = hom_kernel(dz2);
  Witness w1 = fourier_adjunction(kh, disc(dz2.base, {1, 2}), disc(dz2.base, {2, 1}));
  CHECK(w1.ok);
  CHECK(w1.lhs.size() == w1.rhs.size());

  MonoidalStructure m4 = z4();
  MonoidalStructure m2 = z2();
  FinFunctor mod2 = disc_mon_map(m4.base, m2.base, {0, 1, 0, 1});
  Kernel km = functor_kernel(mod2, m4, m2);
  Witness w2 = fourier_adjunction(km, disc(m4.base, {1, 1, 0, 1}), disc(m2.base, {1, 2}));
  CHECK(w2.ok);
}

TEST_CASE("a functor kernel transform matches the left extension along it") {
  MonoidalStructure m4 = z4();
  MonoidalStructure m2 = z2();
  FinFunctor mod2 = disc_mon_map(m4.base, m2.base, {0, 1, 0, 1});
  Kernel km = functor_kernel(mod2, m4, m2);
  SetFunctor f4 = disc(m4.base, {2, 1, 1, 0});
  FourierResult four = fourier(km, f4);
  LanResult ext = lan(mod2, f4);
  CHECK(same_setfunctor(four.value, ext.value));
}

#include "fce/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace fce {

namespace {

std::string pad2(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

struct Run {
  SuiteOptions opt;
  std::vector<CheckReport> out;

  long long cap(long long dflt) const { return opt.cap > 0 ? opt.cap : dflt; }

  template <typename Body>
  void check(const std::string& name, const std::string& inputs, Body body) {
    CheckReport r;
    r.check = name;
    r.inputs = hex64(fnv1a(inputs + ";seed=" + std::to_string(opt.seed)));
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexample = e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    out.push_back(std::move(r));
  }
};

void fail(CheckReport& r, const std::string& why) {
  r.pass = false;
  if (r.counterexample.empty()) r.counterexample = why;
}

// ---- nat-as-end ----

void nat_check(Run& run, const std::string& name, const std::string& inputs, const FinFunctor& f,
               const FinFunctor& g, int expect = -1) {
  run.check(name, inputs, [&](CheckReport& r) {
    EndResult e = nat_set(f, g, run.cap(1000000));
    std::vector<std::vector<int>> brute = all_nats_brute(f, g);
    r.carriers = {{"nat-end", e.carrier.size()}, {"nat-brute", static_cast<int>(brute.size())}};
    r.pass = true;
    if (e.carrier.size() != static_cast<int>(brute.size()))
      fail(r, "end has " + std::to_string(e.carrier.size()) + " families, brute count is " +
                  std::to_string(brute.size()));
    std::set<std::vector<int>> seen;
    for (size_t el = 0; el < e.families.size() && r.pass; ++el) {
      std::vector<int> comp(f.src->n_obj());
      for (int c = 0; c < f.src->n_obj(); ++c)
        comp[c] = f.trg->hom(f.ob(c), g.ob(c))[e.families[el][c]];
      if (std::find(brute.begin(), brute.end(), comp) == brute.end())
        fail(r, "end family " + e.carrier.elems[el] + " is not a natural transformation");
      if (!seen.insert(comp).second)
        fail(r, "end family " + e.carrier.elems[el] + " duplicates an earlier one");
    }
    if (expect >= 0 && r.pass && e.carrier.size() != expect)
      fail(r, "expected cardinality " + std::to_string(expect));
  });
}

void suite_nat_as_end(Run& run) {
  std::vector<NamedFunctor> fs = corpus_functors();
  auto named = [&](const std::string& n) {
    for (const auto& f : fs)
      if (f.name == n) return f.f;
    throw std::logic_error("corpus functor " + n);
  };
  nat_check(run, "nat-as-end/bundled-const0-id", "const0_arrow;id_arrow",
            named("const0_arrow"), named("id_arrow"), 1);
  std::mt19937_64 rng(run.opt.seed);
  for (int t = 0; t < 50; ++t) {
    Cat s = seeded_category(rng);
    Cat d = seeded_category(rng);
    FinFunctor f = seeded_functor(s, d, rng);
    FinFunctor g = seeded_functor(s, d, rng);
    nat_check(run, "nat-as-end/seeded-" + pad2(t),
              "trial=" + std::to_string(t) + ";" + s->name + "->" + d->name, f, g);
  }
}

// ---- fubini ----

// the hom table of c spread over its squared base, so erratic carriers can be
// summed with a functor whose diagonal coend is never empty
SetFunctor hom_carrier(Cat c, const OpProd& sq) {
  SetFunctor h;
  h.base = sq.prod.cat;
  h.ob.resize(sq.prod.cat->n_obj());
  for (int p = 0; p < c->n_obj(); ++p)
    for (int q = 0; q < c->n_obj(); ++q) {
      std::vector<std::string> names;
      for (int m : c->hom(p, q)) names.push_back(c->morphisms[m].id);
      h.ob[sq.ob(p, q)] = FinSet{names};
    }
  h.mo.resize(sq.prod.cat->n_mor());
  for (int f = 0; f < c->n_mor(); ++f)
    for (int g = 0; g < c->n_mor(); ++g) {
      const auto& dom = c->hom(c->trg(f), c->src(g));
      const auto& cod = c->hom(c->src(f), c->trg(g));
      std::vector<int> tab(dom.size());
      for (size_t i = 0; i < dom.size(); ++i) {
        int y = c->compose(g, c->compose(dom[i], f));
        tab[i] = (int)(std::find(cod.begin(), cod.end(), y) - cod.begin());
      }
      h.mo[sq.mo(f, g)] = tab;
    }
  return bless_setfunctor(std::move(h));
}

void suite_fubini(Run& run) {
  std::mt19937_64 rng(run.opt.seed);
  for (int t = 0; t < 30; ++t) {
    Cat a = seeded_two_object_category(rng);
    Cat b = seeded_two_object_category(rng);
    ProdCat p = product(a, b);
    OpProd sq = op_prod(p.cat, p.cat);
    SetFunctor carrier;
    if (t % 3 == 0) {
      carrier = hom_carrier(p.cat, sq);
    } else if (t % 3 == 1) {
      int c0 = (int)(rng() % sq.prod.cat->n_obj());
      carrier = setfunctor_coproduct(hom_carrier(p.cat, sq),
                                     representable_cov(sq.prod.cat, c0));
    } else {
      carrier = seeded_representable_sum(sq.prod.cat, rng, 2);
    }
    int total = 0;
    for (const auto& s : carrier.ob) total += s.size();
    Bifunctor tf = make_bifunctor(sq, carrier);
    run.check("fubini/seeded-" + pad2(t),
              "trial=" + std::to_string(t) + ";" + a->name + "x" + b->name,
              [&](CheckReport& r) {
                FubiniResult fu = fubini_check(tf, p, run.cap(1000000));
                r.carriers = {{"elements", total},
                              {"full", fu.full.carrier.size()},
                              {"ab", fu.ab.carrier.size()},
                              {"ba", fu.ba.carrier.size()}};
                r.pass = fu.ok && total <= 40;
                if (!fu.ok) fail(r, fu.reason);
                if (total > 40) fail(r, "carrier exceeds the 40-element budget");
              });
  }
}

// ---- ninja ----

void suite_ninja(Run& run) {
  std::mt19937_64 rng(run.opt.seed);
  for (int t = 0; t < 30; ++t) {
    bool pre = t >= 15;
    Cat c = seeded_category(rng);
    if (pre) c = opposite(c);
    int widest = 0;
    for (int x = 0; x < c->n_obj(); ++x)
      for (int y = 0; y < c->n_obj(); ++y)
        widest = std::max(widest, static_cast<int>(c->hom(x, y).size()));
    SetFunctor h = seeded_copresheaf(c, rng, widest >= 6 ? 1 : 2);
    int total = 0;
    for (const auto& s : h.ob) total += s.size();
    std::string label = pre ? "ninja/pre-" : "ninja/co-";
    std::string inputs = "trial=" + std::to_string(t) + ";" + c->name;
    run.check(label + pad2(t) + "-density", inputs, [&](CheckReport& r) {
      PointwiseIso i = yoneda_expand_coend(h);
      r.carriers = {{"H", total}};
      r.pass = i.ok && i.natural;
      if (!r.pass) fail(r, i.reason.empty() ? "comparison not natural" : i.reason);
    });
    run.check(label + pad2(t) + "-cotensor", inputs, [&](CheckReport& r) {
      PointwiseIso i = yoneda_expand_end(h, run.cap(1000000));
      r.carriers = {{"H", total}};
      r.pass = i.ok && i.natural;
      if (!r.pass) fail(r, i.reason.empty() ? "comparison not natural" : i.reason);
    });
  }
}

// ---- elmendorf ----

void suite_elmendorf(Run& run) {
  Group g = group_z2();
  for (const auto& [name, x] : bundled_z2_gsets()) {
    run.check("elmendorf/" + name, "Z2;" + name, [&](CheckReport& r) {
      Witness w = elmendorf_reconstruction(g, x);
      r.carriers = {{"coend", w.lhs.size()}, {"X", x.elems.size()}};
      r.pass = w.ok;
      if (!w.ok) fail(r, w.reason);
    });
  }
}

// ---- relt-adjunction ----

void suite_relt(Run& run) {
  for (const auto& nf : corpus_functors()) {
    run.check("relt-adjunction/zigzag-" + nf.name, nf.name, [&](CheckReport& r) {
      ProAdjunction a = adjunction_for(nf.f);
      r.pass = a.ok;
      if (!a.ok) fail(r, a.reason);
    });
  }
  std::mt19937_64 rng(run.opt.seed);
  std::vector<std::pair<std::string, FinFunctor>> pool;
  for (std::string n : {"arrow", "BZ2", "poset3"})
    for (const auto& c : corpus_categories())
      if (c.name == n) pool.push_back({"id_" + n, identity_functor(c.cat)});
  for (const auto& nf : corpus_functors())
    if (nf.name == "const0_arrow" || nf.name == "orb_collapse" || nf.name == "z2_in_s3")
      pool.push_back({nf.name, nf.f});
  for (int t = 0; t < 14; ++t) {
    Cat s = seeded_category(rng);
    Cat d = seeded_category(rng);
    pool.push_back({"seeded-" + pad2(t), seeded_functor(s, d, rng)});
  }
  int ff = 0, not_ff = 0;
  for (const auto& [name, f] : pool) {
    run.check("relt-adjunction/ff-" + name, name, [&](CheckReport& r) {
      FFReport rep = fully_faithful_via_unit(f);
      (rep.direct ? ff : not_ff)++;
      r.carriers = {{"via-unit", rep.via_unit ? 1 : 0}, {"direct", rep.direct ? 1 : 0}};
      r.pass = rep.agree;
      if (!rep.agree) fail(r, rep.reason);
    });
  }
  run.check("relt-adjunction/ff-mix", "pool", [&](CheckReport& r) {
    r.carriers = {{"fully-faithful", ff}, {"not", not_ff}};
    r.pass = ff >= 3 && not_ff >= 3;
    if (!r.pass) fail(r, "pool must contain at least 3 of each verdict");
  });
}

// ---- isbell ----

void suite_isbell(Run& run) {
  {
    Cat m = from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0);
    Cat mop = opposite(m);
    SetFunctor x, y;
    x.base = mop;
    x.ob = {FinSet{{"e", "s"}}};
    x.mo = {{0, 1}, {1, 0}};
    x = bless_setfunctor(std::move(x));
    y.base = m;
    y.ob = {FinSet{{"e", "s"}}};
    y.mo = {{0, 1}, {1, 0}};
    y = bless_setfunctor(std::move(y));
    run.check("isbell/bundled-bz2-regular", "BZ2", [&](CheckReport& r) {
      Witness w = isbell_adjunction(m, x, y, run.cap(2000000));
      r.carriers = {{"lhs", w.lhs.size()}, {"rhs", w.rhs.size()}};
      r.pass = w.ok;
      if (!w.ok) fail(r, w.reason);
    });
  }
  std::mt19937_64 rng(run.opt.seed);
  std::vector<Cat> bases = {walking_arrow(), discrete_cat("disc2", {"a", "b"}),
                            from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0)};
  for (int t = 0; t < 6; ++t) {
    Cat c = bases[t % bases.size()];
    Cat cop = opposite(c);
    SetFunctor x = seeded_copresheaf(cop, rng, 2);
    SetFunctor y = seeded_copresheaf(c, rng, 2);
    run.check("isbell/seeded-" + pad2(t), "trial=" + std::to_string(t) + ";" + c->name,
              [&](CheckReport& r) {
                Witness w = isbell_adjunction(c, x, y, run.cap(2000000));
                r.carriers = {{"lhs", w.lhs.size()}, {"rhs", w.rhs.size()}};
                r.pass = w.ok;
                if (!w.ok) fail(r, w.reason);
              });
  }
}

// ---- parseval ----

SetFunctor disc_sizes(Cat c, const std::vector<int>& sizes) {
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

void iso_check(Run& run, const std::string& name, const std::string& inputs,
               const std::function<PointwiseIso()>& make) {
  run.check(name, inputs, [&](CheckReport& r) {
    PointwiseIso i = make();
    if (!i.at.empty()) r.carriers = {{"at0", i.at[0].lhs.size()}};
    r.pass = i.ok && i.natural;
    if (!r.pass) fail(r, i.reason.empty() ? "comparison not natural" : i.reason);
  });
}

void suite_parseval(Run& run) {
  MonoidalStructure m2 = monoidal_z2();
  PromonoidalStructure dz2 = day_promonoidal(m2);
  Kernel kh = hom_kernel(dz2);
  SetFunctor f = disc_sizes(m2.base, {1, 2});
  SetFunctor g = disc_sizes(m2.base, {2, 1});
  iso_check(run, "parseval/hom-day-z2", "Z2", [&] { return parseval(kh, f, g, dz2, dz2); });
  iso_check(run, "parseval/unit-law-hom-z2", "Z2", [&] { return fourier_unit_law(kh, dz2, dz2); });
  run.check("parseval/adjunction-hom-z2", "Z2", [&](CheckReport& r) {
    Witness w = fourier_adjunction(kh, f, g, run.cap(2000000));
    r.carriers = {{"cells", w.lhs.size()}};
    r.pass = w.ok && w.lhs.size() == w.rhs.size();
    if (!w.ok) fail(r, w.reason);
  });

  Cat grp = from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0);
  PromonoidalStructure cb = cauchy_promonoidal(grp);
  Kernel kc = hom_kernel(cb);
  SetFunctor reg, triv;
  reg.base = grp;
  reg.ob = {FinSet{{"e", "s"}}};
  reg.mo = {{0, 1}, {1, 0}};
  reg = bless_setfunctor(std::move(reg));
  triv.base = grp;
  triv.ob = {FinSet{{"p", "q"}}};
  triv.mo = {{0, 1}, {0, 1}};
  triv = bless_setfunctor(std::move(triv));
  iso_check(run, "parseval/hom-cauchy-bz2", "BZ2",
            [&] { return parseval(kc, reg, triv, cb, cb); });
  iso_check(run, "parseval/unit-law-hom-cauchy-bz2", "BZ2",
            [&] { return fourier_unit_law(kc, cb, cb); });

  MonoidalStructure m4 = discrete_monoidal(
      "Z4", {"0", "1", "2", "3"},
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, 0);
  FinFunctor mod2;
  mod2.src = m4.base;
  mod2.trg = m2.base;
  mod2.on_obj = {0, 1, 0, 1};
  mod2.on_mor = {0, 1, 0, 1};
  mod2 = bless_functor(std::move(mod2));
  Kernel km = functor_kernel(mod2, m4, m2);
  PromonoidalStructure pa4 = day_promonoidal(m4);
  SetFunctor f4 = disc_sizes(m4.base, {1, 1, 0, 1});
  SetFunctor g4 = disc_sizes(m4.base, {0, 1, 1, 1});
  iso_check(run, "parseval/functor-mod2", "Z4->Z2",
            [&] { return parseval(km, f4, g4, pa4, dz2); });
  iso_check(run, "parseval/unit-law-mod2", "Z4->Z2",
            [&] { return fourier_unit_law(km, pa4, dz2); });
}

// ---- pullback-form ----

void suite_pullback_form(Run& run) {
  run.check("pullback-form/bundled", "walking-arrow", [&](CheckReport& r) {
    Bifunctor t = pullback_end_fixture();
    Cat c = t.base.A;
    int step = c->hom(0, 1).at(0);
    EndResult e = end_of(t, run.cap(1000000));
    std::vector<std::pair<int, int>> fiber;
    for (int x0 = 0; x0 < t.at(0, 0).size(); ++x0)
      for (int x1 = 0; x1 < t.at(1, 1).size(); ++x1)
        if (t.act(c->id_of(0), step, x0) == t.act(step, c->id_of(1), x1))
          fiber.push_back({x0, x1});
    r.carriers = {{"end", e.carrier.size()}, {"fiber-product", static_cast<int>(fiber.size())}};
    r.pass = e.carrier.size() == static_cast<int>(fiber.size());
    for (const auto& [x0, x1] : fiber)
      if (e.find_family({x0, x1}) < 0) {
        fail(r, "fiber pair (" + t.at(0, 0).elems[x0] + "," + t.at(1, 1).elems[x1] +
                    ") missing from the end");
        break;
      }
    if (r.pass && e.carrier.size() != 1) fail(r, "fixture should have carrier 1");
    if (!r.pass && r.counterexample.empty()) fail(r, "end and fiber product differ in size");
  });
}

// ---- center ----

void suite_center(Run& run) {
  Group s3 = group_s3();
  int n = s3.size();
  int center = 0;
  for (int a = 0; a < n; ++a) {
    bool commutes = true;
    for (int b = 0; b < n && commutes; ++b) commutes = s3.mul[a][b] == s3.mul[b][a];
    if (commutes) ++center;
  }
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int conj = s3.mul[s3.mul[b][a]][s3.inv(b)];
      int ra = cls[a];
      while (cls[ra] != ra) ra = cls[ra];
      int rc = cls[conj];
      while (cls[rc] != rc) rc = cls[rc];
      cls[std::max(ra, rc)] = std::min(ra, rc);
    }
  int conj_classes = 0;
  for (int i = 0; i < n; ++i)
    if (cls[i] == i) ++conj_classes;

  Cat c = from_monoid("BS3", s3.elems, s3.mul, s3.unit);
  Bifunctor hb = hom_bifunctor(c);
  run.check("center/end-is-center", "BS3", [&](CheckReport& r) {
    EndResult e = end_of(hb, run.cap(1000000));
    r.carriers = {{"end", e.carrier.size()}, {"center", center}};
    r.pass = e.carrier.size() == center && center == 1;
    if (!r.pass) fail(r, "end of hom should match the centre of S3");
  });
  run.check("center/coend-is-conjugacy", "BS3", [&](CheckReport& r) {
    CoendResult e = coend_of(hb);
    r.carriers = {{"coend", e.carrier.size()}, {"conjugacy-classes", conj_classes}};
    r.pass = e.carrier.size() == conj_classes && conj_classes == 3;
    if (!r.pass) fail(r, "coend of hom should match the conjugacy classes of S3");
  });
}

// ---- weighted ----

void suite_weighted(Run& run) {
  KernelPairFixture kp = kernel_pair_fixture();
  run.check("weighted/kernel-pair", "bundled", [&](CheckReport& r) {
    int step = kp.base->hom(0, 1).at(0);
    std::vector<int> fiber(kp.f.ob[1].size(), 0);
    for (int x : kp.f.mo[step]) ++fiber[x];
    int oracle = 0;
    for (int k : fiber) oracle += k * k;
    EndResult e = weighted_limit(kp.base, kp.w, kp.f, run.cap(1000000));
    r.carriers = {{"weighted-limit", e.carrier.size()}, {"kernel-pair", oracle}};
    r.pass = e.carrier.size() == oracle && oracle == kp.expected;
    if (!r.pass) fail(r, "weighted limit is not the kernel pair");
  });
  run.check("weighted/kernel-pair-via-elements", "bundled", [&](CheckReport& r) {
    Witness w = weighted_limit_via_elements(kp.base, kp.w, kp.f, run.cap(1000000));
    r.carriers = {{"weighted", w.lhs.size()}, {"conical", w.rhs.size()}};
    r.pass = w.ok;
    if (!w.ok) fail(r, w.reason);
  });
  std::mt19937_64 rng(run.opt.seed);
  for (int t = 0; t < 30; ++t) {
    Cat c = seeded_category(rng);
    int widest = 0;
    for (int x = 0; x < c->n_obj(); ++x)
      for (int y = 0; y < c->n_obj(); ++y)
        widest = std::max(widest, static_cast<int>(c->hom(x, y).size()));
    int me = widest >= 6 ? 1 : 2;
    SetFunctor w = seeded_copresheaf(c, rng, me);
    SetFunctor f = seeded_copresheaf(c, rng, me);
    run.check("weighted/seeded-" + pad2(t), "trial=" + std::to_string(t) + ";" + c->name,
              [&](CheckReport& r) {
                Witness wi = weighted_limit_via_elements(c, w, f, run.cap(1000000));
                r.carriers = {{"weighted", wi.lhs.size()}, {"conical", wi.rhs.size()}};
                r.pass = wi.ok;
                if (!wi.ok) fail(r, wi.reason);
              });
  }
}

// ---- day-laws ----

void suite_day_laws(Run& run) {
  for (MonoidalStructure m : {monoidal_z2(), monoidal_idem()}) {
    std::string base = m.base->name;
    SetFunctor f = disc_sizes(m.base, {1, 2});
    SetFunctor g = disc_sizes(m.base, {2, 1});
    SetFunctor h = disc_sizes(m.base, {1, 1});
    iso_check(run, "day-laws/unit-right-" + base, base, [&] { return day_unit_right(f, m); });
    iso_check(run, "day-laws/unit-left-" + base, base, [&] { return day_unit_left(f, m); });
    iso_check(run, "day-laws/assoc-" + base, base, [&] { return day_assoc(f, g, h, m); });
    PromonoidalStructure ps = day_promonoidal(m);
    iso_check(run, "day-laws/relator-unit-right-" + base, base,
              [&] { return p_unit_right(f, ps); });
    iso_check(run, "day-laws/relator-unit-left-" + base, base,
              [&] { return p_unit_left(f, ps); });
    iso_check(run, "day-laws/relator-assoc-" + base, base, [&] { return p_assoc(f, g, h, ps); });
  }
  std::mt19937_64 rng(run.opt.seed);
  std::vector<Cat> bases = {from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0), walking_arrow(),
                            walking_iso()};
  std::vector<PromonoidalStructure> cs;
  for (const Cat& c : bases) cs.push_back(cauchy_promonoidal(c));
  for (int t = 0; t < 20; ++t) {
    size_t pick = t % bases.size();
    Cat c = bases[pick];
    SetFunctor f = seeded_copresheaf(c, rng, 2);
    SetFunctor g = seeded_copresheaf(c, rng, 2);
    iso_check(run, "day-laws/cauchy-pointwise-" + pad2(t),
              "trial=" + std::to_string(t) + ";" + c->name,
              [&] { return cauchy_is_pointwise(f, g, cs[pick]); });
  }
}

using SuiteFn = void (*)(Run&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"nat-as-end", suite_nat_as_end},
      {"fubini", suite_fubini},
      {"ninja", suite_ninja},
      {"elmendorf", suite_elmendorf},
      {"relt-adjunction", suite_relt},
      {"isbell", suite_isbell},
      {"parseval", suite_parseval},
      {"pullback-form", suite_pullback_form},
      {"center", suite_center},
      {"weighted", suite_weighted},
      {"day-laws", suite_day_laws},
  };
  return suites;
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  names.push_back("all");
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  bool found = false;
  for (const auto& [n, fn] : registry())
    if (n == name || name == "all") {
      Run run;
      run.opt = opt;
      fn(run);
      for (auto& r : run.out) out.push_back(std::move(r));
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite: " + name);
  std::sort(out.begin(), out.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return out;
}

}  // namespace fce

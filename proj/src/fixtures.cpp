#include "fce/fixtures.hpp"

#include <algorithm>
#include <array>

namespace fce {

namespace {

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

// permutations of three letters in lexicographic order; index 2 is the
// order-two transposition used by the Z/2 embedding
struct S3Table {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
};
S3Table s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  S3Table t;
  for (const auto& q : perms)
    t.names.push_back("p" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  t.mul.assign(perms.size(), std::vector<int>(perms.size(), -1));
  for (size_t a = 0; a < perms.size(); ++a)
    for (size_t b = 0; b < perms.size(); ++b) {
      std::array<int, 3> ab = {perms[a][perms[b][0]], perms[a][perms[b][1]],
                               perms[a][perms[b][2]]};
      t.mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return t;
}

Cat bs3() {
  S3Table t = s3_table();
  return from_monoid("BS3", t.names, t.mul, 0);
}

// object assignment plus the unique morphism fill-in of a thin target
FinFunctor thin_functor(Cat s, Cat t, std::vector<int> on_obj) {
  FinFunctor f;
  f.src = s;
  f.trg = t;
  f.on_obj = std::move(on_obj);
  f.on_mor.resize(s->n_mor());
  for (int m = 0; m < s->n_mor(); ++m)
    f.on_mor[m] = t->hom(f.on_obj[s->src(m)], f.on_obj[s->trg(m)]).at(0);
  return bless_functor(std::move(f));
}

FinFunctor to_terminal(Cat s) {
  FinFunctor f;
  f.src = s;
  f.trg = terminal_cat();
  f.on_obj.assign(s->n_obj(), 0);
  f.on_mor.assign(s->n_mor(), 0);
  return bless_functor(std::move(f));
}

GSet gset(std::vector<std::string> elems, std::vector<std::vector<int>> act) {
  GSet x;
  x.elems.elems = std::move(elems);
  x.act = std::move(act);
  return x;
}

}  // namespace

MonoidalStructure monoidal_z2() {
  return discrete_monoidal("Z2", {"0", "1"}, {{0, 1}, {1, 0}}, 0);
}

MonoidalStructure monoidal_idem() {
  return discrete_monoidal("M2", {"e", "a"}, {{0, 1}, {1, 1}}, 0);
}

std::vector<NamedCat> corpus_categories() {
  return {
      {"terminal", terminal_cat()},
      {"arrow", walking_arrow()},
      {"iso", walking_iso()},
      {"poset3", chain3()},
      {"BZ2", from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0)},
      {"BS3", bs3()},
      {"OrbZ2", orbit_category(group_z2()).cat},
      {"Z2", monoidal_z2().base},
      {"M2", monoidal_idem().base},
  };
}

std::vector<NamedFunctor> corpus_functors() {
  std::vector<NamedCat> cs = corpus_categories();
  auto cat = [&](const std::string& n) {
    for (const auto& c : cs)
      if (c.name == n) return c.cat;
    throw std::logic_error("corpus: " + n);
  };
  Cat arrow = cat("arrow"), iso = cat("iso"), bz2 = cat("BZ2"), s3 = cat("BS3");
  std::vector<NamedFunctor> out;
  out.push_back({"id_arrow", identity_functor(arrow)});
  out.push_back({"const0_arrow", thin_functor(arrow, arrow, {0, 0})});
  out.push_back({"arrow_to_iso", thin_functor(arrow, iso, {0, 1})});
  out.push_back({"iso_collapse", to_terminal(iso)});
  {
    FinFunctor f;
    f.src = bz2;
    f.trg = s3;
    f.on_obj = {0};
    f.on_mor = {0, 2};
    out.push_back({"z2_in_s3", bless_functor(std::move(f))});
  }
  out.push_back({"poset3_step", thin_functor(cat("poset3"), arrow, {0, 0, 1})});
  out.push_back({"orb_collapse", to_terminal(cat("OrbZ2"))});
  {
    Cat z2 = cat("Z2");
    FinFunctor f;
    f.src = z2;
    f.trg = z2;
    f.on_obj = {1, 0};
    f.on_mor = {z2->id_of(1), z2->id_of(0)};
    out.push_back({"disc_swap", bless_functor(std::move(f))});
  }
  out.push_back({"point_in_bz2", constant_functor(cat("terminal"), bz2, 0)});
  return out;
}

Group group_z2() {
  Group g;
  g.elems = {"e", "s"};
  g.mul = {{0, 1}, {1, 0}};
  g.unit = 0;
  return g;
}

Group group_s3() {
  S3Table t = s3_table();
  Group g;
  g.elems = t.names;
  g.mul = t.mul;
  g.unit = 0;
  return g;
}

std::vector<std::pair<std::string, GSet>> bundled_z2_gsets() {
  return {
      {"trivial2", gset({"p", "q"}, {{0, 1}, {0, 1}})},
      {"regular", gset({"e", "s"}, {{0, 1}, {1, 0}})},
      {"mixed3", gset({"f", "x", "y"}, {{0, 1, 2}, {0, 2, 1}})},
  };
}

KernelPairFixture kernel_pair_fixture() {
  KernelPairFixture out;
  out.base = walking_arrow();
  int step = out.base->hom(0, 1).at(0);
  SetFunctor w;
  w.base = out.base;
  w.ob = {FinSet{{"w0", "w1"}}, FinSet{{"v"}}};
  w.mo.resize(out.base->n_mor());
  w.mo[out.base->id_of(0)] = {0, 1};
  w.mo[out.base->id_of(1)] = {0};
  w.mo[step] = {0, 0};
  out.w = bless_setfunctor(std::move(w));
  SetFunctor f;
  f.base = out.base;
  f.ob = {FinSet{{"1", "2", "3"}}, FinSet{{"1", "2"}}};
  f.mo.resize(out.base->n_mor());
  f.mo[out.base->id_of(0)] = {0, 1, 2};
  f.mo[out.base->id_of(1)] = {0, 1};
  f.mo[step] = {0, 0, 1};
  out.f = bless_setfunctor(std::move(f));
  out.expected = 5;
  return out;
}

Bifunctor pullback_end_fixture() {
  Cat c = walking_arrow();
  int step = c->hom(0, 1).at(0);
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  t.ob[base.ob(0, 0)] = FinSet{{"a1", "a2"}};
  t.ob[base.ob(1, 1)] = FinSet{{"b1"}};
  t.ob[base.ob(0, 1)] = FinSet{{"c1", "c2"}};
  t.ob[base.ob(1, 0)] = FinSet{{"s"}};
  t.mo.resize(base.prod.cat->n_mor());
  t.mo[base.mo(c->id_of(0), c->id_of(0))] = {0, 1};
  t.mo[base.mo(c->id_of(1), c->id_of(1))] = {0};
  t.mo[base.mo(c->id_of(0), c->id_of(1))] = {0, 1};
  t.mo[base.mo(c->id_of(1), c->id_of(0))] = {0};
  t.mo[base.mo(c->id_of(0), step)] = {0, 1};  // leg out of T(0,0)
  t.mo[base.mo(step, c->id_of(1))] = {0};     // leg out of T(1,1)
  t.mo[base.mo(step, c->id_of(0))] = {0};     // s -> a1
  t.mo[base.mo(c->id_of(1), step)] = {0};     // s -> b1
  t.mo[base.mo(step, step)] = {0};            // s -> c1
  return make_bifunctor(std::move(base), std::move(t));
}

Cat seeded_category(std::mt19937_64& rng) {
  static const std::vector<Cat> family = {
      terminal_cat(),
      walking_arrow(),
      walking_iso(),
      chain3(),
      vee(),
      discrete_cat("disc2", {"a", "b"}),
      discrete_cat("disc3", {"a", "b", "c"}),
      from_monoid("BZ2", {"e", "s"}, {{0, 1}, {1, 0}}, 0),
      from_monoid("BZ3", {"e", "r", "rr"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0),
      from_monoid("BM2", {"e", "a"}, {{0, 1}, {1, 1}}, 0),
      bs3(),
  };
  std::uniform_int_distribution<size_t> d(0, family.size() - 1);
  return family[d(rng)];
}

Cat seeded_two_object_category(std::mt19937_64& rng) {
  static const std::vector<Cat> family = {
      walking_arrow(),
      walking_iso(),
      discrete_cat("disc2", {"a", "b"}),
  };
  std::uniform_int_distribution<size_t> d(0, family.size() - 1);
  return family[d(rng)];
}

FinFunctor seeded_functor(Cat s, Cat t, std::mt19937_64& rng) {
  std::vector<FinFunctor> fs = all_functors(s, t);
  if (fs.empty()) throw std::logic_error("seeded_functor: no functors " + s->name + " -> " + t->name);
  std::uniform_int_distribution<size_t> d(0, fs.size() - 1);
  return fs[d(rng)];
}

SetFunctor seeded_copresheaf(Cat c, std::mt19937_64& rng, int max_elems) {
  std::uniform_int_distribution<int> ds(0, max_elems);
  for (int attempt = 0; attempt < 15; ++attempt) {
    SetFunctor w;
    w.base = c;
    w.ob.resize(c->n_obj());
    for (int o = 0; o < c->n_obj(); ++o)
      for (int i = ds(rng); i > 0; --i)
        w.ob[o].elems.push_back("x" + std::to_string(o) + "_" + std::to_string(i));
    bool feasible = true;
    w.mo.resize(c->n_mor());
    for (int m = 0; m < c->n_mor() && feasible; ++m) {
      const FinSet& dom = w.ob[c->src(m)];
      const FinSet& cod = w.ob[c->trg(m)];
      if (c->is_identity(m)) {
        w.mo[m].resize(dom.size());
        for (int x = 0; x < dom.size(); ++x) w.mo[m][x] = x;
        continue;
      }
      if (cod.size() == 0 && dom.size() > 0) {
        feasible = false;
        break;
      }
      std::uniform_int_distribution<int> dv(0, cod.size() - 1);
      w.mo[m].resize(dom.size());
      for (int x = 0; x < dom.size(); ++x) w.mo[m][x] = dv(rng);
    }
    if (feasible && validate_setfunctor(w).empty()) return bless_setfunctor(std::move(w));
  }
  return seeded_representable_sum(c, rng);
}

SetFunctor seeded_representable_sum(Cat c, std::mt19937_64& rng, int parts) {
  std::uniform_int_distribution<int> dk(0, parts);
  int k = dk(rng);
  SetFunctor out = constant_setfunctor(c, FinSet{});
  std::uniform_int_distribution<int> dob(0, c->n_obj() - 1);
  for (int i = 0; i < k; ++i)
    out = setfunctor_coproduct(out, representable_cov(c, dob(rng)));
  return out;
}

}  // namespace fce

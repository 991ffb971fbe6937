#include "fce/setfun.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

namespace fce {

namespace {

std::string paren(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace

int FinSet::find(const std::string& e) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == e) return i;
  return -1;
}

FinSet product_set(const FinSet& a, const FinSet& b) {
  FinSet p;
  p.elems.reserve(static_cast<size_t>(a.size()) * b.size());
  for (const auto& x : a.elems)
    for (const auto& y : b.elems) p.elems.push_back(paren(x, y));
  return p;
}

FinSet function_set(const FinSet& dom, const FinSet& cod) {
  long long n = 1;
  for (int i = 0; i < dom.size(); ++i) {
    n *= cod.size();
    if (n > 200000) throw SizeCapExceeded("function set larger than 200000");
  }
  FinSet out;
  out.elems.reserve(static_cast<size_t>(n));
  std::vector<int> img(dom.size(), 0);
  for (long long k = 0; k < n; ++k) {
    std::vector<std::string> names;
    names.reserve(img.size());
    for (int v : img) names.push_back(cod.elems[v]);
    out.elems.push_back("[" + join(names, ",") + "]");
    for (int i = dom.size() - 1; i >= 0; --i) {
      if (++img[i] < cod.size()) break;
      img[i] = 0;
    }
  }
  return out;
}

std::vector<int> function_images(const FinSet& dom, const FinSet& cod, int fn) {
  std::vector<int> img(dom.size(), 0);
  for (int i = dom.size() - 1; i >= 0; --i) {
    img[i] = fn % cod.size();
    fn /= cod.size();
  }
  return img;
}

int function_index(const FinSet& dom, const FinSet& cod, const std::vector<int>& images) {
  int ix = 0;
  for (int i = 0; i < dom.size(); ++i) ix = ix * cod.size() + images[i];
  return ix;
}

bool FinMap::total() const {
  if (static_cast<int>(tab.size()) != dom.size()) return false;
  for (int v : tab)
    if (v < 0 || v >= cod.size()) return false;
  return true;
}

bool is_bijection(const FinMap& m) {
  if (!m.total() || m.dom.size() != m.cod.size()) return false;
  std::vector<bool> hit(m.cod.size(), false);
  for (int v : m.tab) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<std::string> validate_setfunctor(const SetFunctor& w) {
  std::vector<std::string> issues;
  if (!w.base) return {"no base category"};
  const auto& c = *w.base;
  if (static_cast<int>(w.ob.size()) != c.n_obj()) return {"object table has wrong length"};
  if (static_cast<int>(w.mo.size()) != c.n_mor()) return {"morphism table has wrong length"};
  for (int m = 0; m < c.n_mor(); ++m) {
    const auto& t = w.mo[m];
    if (static_cast<int>(t.size()) != w.ob[c.src(m)].size()) {
      issues.push_back("table for " + c.morphisms[m].id + " has wrong domain size");
      continue;
    }
    for (int v : t)
      if (v < 0 || v >= w.ob[c.trg(m)].size()) {
        issues.push_back("table for " + c.morphisms[m].id + " maps outside its codomain");
        break;
      }
  }
  if (!issues.empty()) return issues;
  for (int x = 0; x < c.n_obj(); ++x)
    for (int u = 0; u < w.ob[x].size(); ++u)
      if (w.mo[c.id_of(x)][u] != u) {
        issues.push_back("identity at " + c.objects[x] + " does not act as identity");
        break;
      }
  for (int g = 0; g < c.n_mor(); ++g)
    for (int f = 0; f < c.n_mor(); ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      for (int u = 0; u < w.ob[c.src(f)].size(); ++u)
        if (w.mo[gf][u] != w.mo[g][w.mo[f][u]]) {
          issues.push_back("functoriality fails on (" + c.morphisms[g].id + ", " +
                           c.morphisms[f].id + ")");
          goto next_pair;
        }
    next_pair:;
    }
  return issues;
}

SetFunctor bless_setfunctor(SetFunctor w) {
  auto issues = validate_setfunctor(w);
  if (!issues.empty()) throw std::runtime_error("invalid set functor: " + issues.front());
  return w;
}

SetFunctor representable_cov(Cat c, int c0) {
  SetFunctor w;
  w.base = c;
  std::vector<std::vector<int>> homs(c->n_obj());
  w.ob.resize(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x) {
    homs[x] = c->hom(c0, x);
    for (int h : homs[x]) w.ob[x].elems.push_back(c->morphisms[h].id);
  }
  w.mo.resize(c->n_mor());
  for (int f = 0; f < c->n_mor(); ++f) {
    const auto& dom = homs[c->src(f)];
    const auto& cod = homs[c->trg(f)];
    for (int h : dom) {
      int fh = c->compose(f, h);
      int pos = static_cast<int>(std::find(cod.begin(), cod.end(), fh) - cod.begin());
      w.mo[f].push_back(pos);
    }
  }
  return bless_setfunctor(std::move(w));
}

SetFunctor terminal_setfunctor(Cat c) { return constant_setfunctor(std::move(c), FinSet{{"*"}}); }

SetFunctor constant_setfunctor(Cat c, const FinSet& v) {
  SetFunctor w;
  w.base = std::move(c);
  w.ob.assign(w.base->n_obj(), v);
  std::vector<int> idt(v.size());
  for (int i = 0; i < v.size(); ++i) idt[i] = i;
  w.mo.assign(w.base->n_mor(), idt);
  return w;
}

SetFunctor setfunctor_product(const SetFunctor& a, const SetFunctor& b) {
  if (a.base != b.base) throw ShapeMismatch("product of set functors on different bases");
  SetFunctor w;
  w.base = a.base;
  const auto& c = *a.base;
  for (int x = 0; x < c.n_obj(); ++x) w.ob.push_back(product_set(a.ob[x], b.ob[x]));
  w.mo.resize(c.n_mor());
  for (int f = 0; f < c.n_mor(); ++f) {
    int bs = b.ob[c.src(f)].size(), bt = b.ob[c.trg(f)].size();
    for (int x = 0; x < a.ob[c.src(f)].size(); ++x)
      for (int y = 0; y < bs; ++y) w.mo[f].push_back(a.mo[f][x] * bt + b.mo[f][y]);
  }
  return w;
}

SetFunctor setfunctor_coproduct(const SetFunctor& a, const SetFunctor& b) {
  if (a.base != b.base) throw ShapeMismatch("coproduct of set functors on different bases");
  SetFunctor w;
  w.base = a.base;
  const auto& c = *a.base;
  for (int x = 0; x < c.n_obj(); ++x) {
    FinSet s;
    for (const auto& e : a.ob[x].elems) s.elems.push_back("inl(" + e + ")");
    for (const auto& e : b.ob[x].elems) s.elems.push_back("inr(" + e + ")");
    w.ob.push_back(std::move(s));
  }
  w.mo.resize(c.n_mor());
  for (int f = 0; f < c.n_mor(); ++f) {
    int na = a.ob[c.src(f)].size();
    int ta = a.ob[c.trg(f)].size();
    for (int x = 0; x < na; ++x) w.mo[f].push_back(a.mo[f][x]);
    for (int y = 0; y < b.ob[c.src(f)].size(); ++y) w.mo[f].push_back(ta + b.mo[f][y]);
  }
  return w;
}

SetFunctor restrict_along(const FinFunctor& f, const SetFunctor& w) {
  if (f.trg != w.base) throw ShapeMismatch("restriction along a functor into a different base");
  SetFunctor out;
  out.base = f.src;
  for (int x = 0; x < f.src->n_obj(); ++x) out.ob.push_back(w.ob[f.ob(x)]);
  for (int m = 0; m < f.src->n_mor(); ++m) out.mo.push_back(w.mo[f.mo(m)]);
  return out;
}

SetNatComp identity_setnat(const SetFunctor& f) {
  SetNatComp t(f.ob.size());
  for (size_t x = 0; x < f.ob.size(); ++x) {
    t[x].resize(f.ob[x].size());
    std::iota(t[x].begin(), t[x].end(), 0);
  }
  return t;
}

std::vector<std::string> validate_setnat(const SetFunctor& f, const SetFunctor& g,
                                         const SetNatComp& t) {
  if (f.base != g.base) return {"functors live on different bases"};
  const auto& c = *f.base;
  if (static_cast<int>(t.size()) != c.n_obj()) return {"component list has wrong length"};
  for (int x = 0; x < c.n_obj(); ++x) {
    if (static_cast<int>(t[x].size()) != f.ob[x].size())
      return {"component at " + c.objects[x] + " has wrong domain"};
    for (int v : t[x])
      if (v < 0 || v >= g.ob[x].size())
        return {"component at " + c.objects[x] + " maps outside its codomain"};
  }
  std::vector<std::string> issues;
  for (int m = 0; m < c.n_mor(); ++m)
    for (int u = 0; u < f.ob[c.src(m)].size(); ++u)
      if (t[c.trg(m)][f.mo[m][u]] != g.mo[m][t[c.src(m)][u]]) {
        issues.push_back("square for " + c.morphisms[m].id + " fails at element " +
                         f.ob[c.src(m)].elems[u]);
        break;
      }
  return issues;
}

std::vector<SetNatComp> all_setnats(const SetFunctor& f, const SetFunctor& g, long long cap) {
  if (f.base != g.base) throw ShapeMismatch("naturality search on different bases");
  const auto& c = *f.base;
  int n = c.n_obj();
  std::vector<SetNatComp> out;
  SetNatComp cur(n);
  long long visited = 0;

  // morphisms grouped by the larger endpoint, so each new component is
  // checked against everything already fixed
  std::vector<std::vector<int>> check_at(n);
  for (int m = 0; m < c.n_mor(); ++m) check_at[std::max(c.src(m), c.trg(m))].push_back(m);

  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    int dn = f.ob[k].size(), cn = g.ob[k].size();
    long long count = 1;
    for (int i = 0; i < dn; ++i) {
      count *= cn;
      if (count > cap) throw SizeCapExceeded("too many candidate components");
    }
    std::vector<int> img(dn, 0);
    for (long long it = 0; it < count; ++it) {
      if (++visited > cap) throw SizeCapExceeded("naturality search exceeded cap");
      cur[k] = img;
      bool ok = true;
      for (int m : check_at[k]) {
        for (int u = 0; u < f.ob[c.src(m)].size() && ok; ++u)
          if (cur[c.trg(m)][f.mo[m][u]] != g.mo[m][cur[c.src(m)][u]]) ok = false;
        if (!ok) break;
      }
      if (ok) go(k + 1);
      for (int i = dn - 1; i >= 0; --i) {
        if (++img[i] < cn) break;
        img[i] = 0;
      }
    }
  };
  go(0);
  return out;
}

std::vector<FinFunctor> all_functors(Cat c, Cat d, long long cap) {
  int no = c->n_obj(), nm = c->n_mor();
  std::vector<std::vector<std::array<int, 3>>> triples(nm);  // (f, g, g∘f) at max index
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c->composable(g, f)) {
        int h = c->compose(g, f);
        triples[std::max({f, g, h})].push_back({f, g, h});
      }

  std::vector<FinFunctor> out;
  std::vector<int> ob(no, 0), mo(nm, -1);
  long long states = 0;

  std::function<void(int)> mors = [&](int k) {
    if (k == nm) {
      FinFunctor fn;
      fn.src = c;
      fn.trg = d;
      fn.on_obj = ob;
      fn.on_mor = mo;
      out.push_back(std::move(fn));
      return;
    }
    std::vector<int> cands;
    if (c->is_identity(k))
      cands = {d->id_of(ob[c->src(k)])};
    else
      cands = d->hom(ob[c->src(k)], ob[c->trg(k)]);
    for (int v : cands) {
      if (++states > cap) throw SizeCapExceeded("functor enumeration exceeded cap");
      mo[k] = v;
      bool ok = true;
      for (const auto& [f, g, h] : triples[k])
        if (d->compose(mo[g], mo[f]) != mo[h]) {
          ok = false;
          break;
        }
      if (ok) mors(k + 1);
    }
    mo[k] = -1;
  };
  std::function<void(int)> objs = [&](int k) {
    if (k == no) {
      mors(0);
      return;
    }
    for (int v = 0; v < d->n_obj(); ++v) {
      if (++states > cap) throw SizeCapExceeded("functor enumeration exceeded cap");
      ob[k] = v;
      objs(k + 1);
    }
  };
  if (no == 0)
    mors(0);
  else
    objs(0);
  return out;
}

OpProd op_prod(Cat a, Cat b) {
  OpProd p;
  p.A = std::move(a);
  p.B = std::move(b);
  p.Aop = opposite(p.A);
  p.prod = product(p.Aop, p.B);
  return p;
}

Bifunctor make_bifunctor(OpProd base, SetFunctor t) {
  if (t.base != base.prod.cat) throw ShapeMismatch("bifunctor tables not on op(A) x B");
  Bifunctor f;
  f.base = std::move(base);
  f.t = bless_setfunctor(std::move(t));
  return f;
}

Bifunctor hom_bifunctor(Cat c) { return hom_along(identity_functor(c), identity_functor(c)); }

Bifunctor hom_along(const FinFunctor& f, const FinFunctor& g) {
  if (f.src != g.src || f.trg != g.trg) throw ShapeMismatch("hom_along needs parallel functors");
  Cat c = f.src;
  Cat d = f.trg;
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  std::vector<std::vector<std::vector<int>>> homs(c->n_obj(),
                                                  std::vector<std::vector<int>>(c->n_obj()));
  for (int a = 0; a < c->n_obj(); ++a)
    for (int b = 0; b < c->n_obj(); ++b) homs[a][b] = d->hom(f.ob(a), g.ob(b));
  t.ob.resize(base.prod.cat->n_obj());
  for (int p = 0; p < base.prod.cat->n_obj(); ++p) {
    auto [a, b] = base.ob_parts(p);
    for (int h : homs[a][b]) t.ob[p].elems.push_back(d->morphisms[h].id);
  }
  t.mo.resize(base.prod.cat->n_mor());
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) {
    auto [fm, gm] = base.mo_parts(q);
    // fm: a2 -> a1 in A, gm: b1 -> b2 in B; table hom(Fa1,Gb1) -> hom(Fa2,Gb2)
    int a1 = c->trg(fm), a2 = c->src(fm);
    int b1 = c->src(gm), b2 = c->trg(gm);
    const auto& dom = homs[a1][b1];
    const auto& cod = homs[a2][b2];
    for (int h : dom) {
      int v = d->compose(g.mo(gm), d->compose(h, f.mo(fm)));
      int pos = static_cast<int>(std::find(cod.begin(), cod.end(), v) - cod.begin());
      t.mo[q].push_back(pos);
    }
  }
  return make_bifunctor(base, std::move(t));
}

std::vector<std::string> validate_binat(const Bifunctor& p, const Bifunctor& q, const BiNat& t) {
  if (p.base.A != q.base.A || p.base.B != q.base.B) return {"bifunctors on different bases"};
  Cat pc = p.base.prod.cat;
  if (static_cast<int>(t.comp.size()) != pc->n_obj()) return {"component list has wrong length"};
  for (int o = 0; o < pc->n_obj(); ++o) {
    if (static_cast<int>(t.comp[o].size()) != p.t.ob[o].size())
      return {"component at " + pc->objects[o] + " has wrong domain"};
    for (int v : t.comp[o])
      if (v < 0 || v >= q.t.ob[o].size())
        return {"component at " + pc->objects[o] + " maps outside its codomain"};
  }
  std::vector<std::string> issues;
  for (int m = 0; m < pc->n_mor(); ++m) {
    int s = pc->src(m), e = pc->trg(m);
    for (int u = 0; u < p.t.ob[s].size(); ++u)
      if (t.comp[e][p.t.mo[m][u]] != q.t.mo[m][t.comp[s][u]]) {
        issues.push_back("square for " + pc->morphisms[m].id + " fails");
        break;
      }
  }
  return issues;
}

Verdict check_dinatural(const DinaturalFamily& a) {
  if (a.P.base.A != a.P.base.B || a.Q.base.A != a.Q.base.B || a.P.base.A != a.Q.base.A)
    throw ShapeMismatch("dinaturality needs both bifunctors on op(C) x C for one C");
  Cat c = a.P.base.A;
  if (static_cast<int>(a.comp.size()) != c->n_obj())
    throw ShapeMismatch("component list has wrong length");
  for (int x = 0; x < c->n_obj(); ++x) {
    if (static_cast<int>(a.comp[x].size()) != a.P.at(x, x).size())
      throw ShapeMismatch("component at " + c->objects[x] + " has wrong domain");
    for (int v : a.comp[x])
      if (v < 0 || v >= a.Q.at(x, x).size())
        throw ShapeMismatch("component at " + c->objects[x] + " maps outside its codomain");
  }
  for (int f = 0; f < c->n_mor(); ++f) {
    int s = c->src(f), e = c->trg(f);
    int is = c->id_of(s), ie = c->id_of(e);
    for (int x = 0; x < a.P.at(e, s).size(); ++x) {
      int lhs = a.Q.act(is, f, a.comp[s][a.P.act(f, is, x)]);
      int rhs = a.Q.act(f, ie, a.comp[e][a.P.act(ie, f, x)]);
      if (lhs != rhs)
        return {false, "hexagon for " + c->morphisms[f].id + " fails at element " +
                           a.P.at(e, s).elems[x]};
    }
  }
  return {true, ""};
}

Verdict check_wedge(const FinSet& tip, const std::vector<std::vector<int>>& legs,
                    const Bifunctor& f) {
  if (f.base.A != f.base.B) throw ShapeMismatch("wedge target must live on op(C) x C for one C");
  Cat c = f.base.A;
  if (static_cast<int>(legs.size()) != c->n_obj()) throw MissingLeg("one leg per object required");
  for (int x = 0; x < c->n_obj(); ++x) {
    if (static_cast<int>(legs[x].size()) != tip.size())
      throw ShapeMismatch("leg at " + c->objects[x] + " has wrong domain");
    for (int v : legs[x])
      if (v < 0 || v >= f.at(x, x).size())
        throw ShapeMismatch("leg at " + c->objects[x] + " maps outside its codomain");
  }
  for (int m = 0; m < c->n_mor(); ++m) {
    int s = c->src(m), e = c->trg(m);
    for (int u = 0; u < tip.size(); ++u) {
      int lhs = f.act(c->id_of(s), m, legs[s][u]);
      int rhs = f.act(m, c->id_of(e), legs[e][u]);
      if (lhs != rhs)
        return {false,
                "wedge square for " + c->morphisms[m].id + " fails at " + tip.elems[u]};
    }
  }
  return {true, ""};
}

Verdict check_cowedge(const Bifunctor& f, const std::vector<std::vector<int>>& legs,
                      const FinSet& tip) {
  if (f.base.A != f.base.B) throw ShapeMismatch("cowedge source must live on op(C) x C for one C");
  Cat c = f.base.A;
  if (static_cast<int>(legs.size()) != c->n_obj()) throw MissingLeg("one leg per object required");
  for (int x = 0; x < c->n_obj(); ++x) {
    if (static_cast<int>(legs[x].size()) != f.at(x, x).size())
      throw ShapeMismatch("leg at " + c->objects[x] + " has wrong domain");
    for (int v : legs[x])
      if (v < 0 || v >= tip.size())
        throw ShapeMismatch("leg at " + c->objects[x] + " maps outside its codomain");
  }
  for (int m = 0; m < c->n_mor(); ++m) {
    int s = c->src(m), e = c->trg(m);
    for (int x = 0; x < f.at(e, s).size(); ++x) {
      int lhs = legs[s][f.act(m, c->id_of(s), x)];
      int rhs = legs[e][f.act(c->id_of(e), m, x)];
      if (lhs != rhs)
        return {false, "cowedge square for " + c->morphisms[m].id + " fails at " +
                           f.at(e, s).elems[x]};
    }
  }
  return {true, ""};
}

TriBase tri_base(Cat a, Cat b) {
  TriBase t;
  t.A = std::move(a);
  t.B = std::move(b);
  t.Bop = opposite(t.B);
  t.inner = product(t.Bop, t.B);
  t.full = product(t.A, t.inner.cat);
  return t;
}

TriFunctor make_trifunctor(TriBase base, SetFunctor t) {
  if (t.base != base.full.cat) throw ShapeMismatch("trifunctor tables not on A x op(B) x B");
  TriFunctor f;
  f.base = std::move(base);
  f.t = bless_setfunctor(std::move(t));
  return f;
}

ExtraVerdict check_extranatural(const ExtranaturalFamily& a) {
  if (a.P.base.A != a.Q.base.A) throw ShapeMismatch("families must share the plain variable");
  Cat A = a.P.base.A, B = a.P.base.B, C = a.Q.base.B;
  if (static_cast<int>(a.comp.size()) != A->n_obj())
    throw ShapeMismatch("component cube has wrong length");
  for (int x = 0; x < A->n_obj(); ++x) {
    if (static_cast<int>(a.comp[x].size()) != B->n_obj())
      throw ShapeMismatch("component cube has wrong length");
    for (int y = 0; y < B->n_obj(); ++y) {
      if (static_cast<int>(a.comp[x][y].size()) != C->n_obj())
        throw ShapeMismatch("component cube has wrong length");
      for (int z = 0; z < C->n_obj(); ++z) {
        if (static_cast<int>(a.comp[x][y][z].size()) != a.P.at(x, y, y).size())
          throw ShapeMismatch("component has wrong domain");
        for (int v : a.comp[x][y][z])
          if (v < 0 || v >= a.Q.at(x, z, z).size())
            throw ShapeMismatch("component maps outside its codomain");
      }
    }
  }
  for (int f = 0; f < A->n_mor(); ++f) {
    int s = A->src(f), e = A->trg(f);
    for (int b = 0; b < B->n_obj(); ++b)
      for (int z = 0; z < C->n_obj(); ++z)
        for (int x = 0; x < a.P.at(s, b, b).size(); ++x) {
          int lhs = a.Q.act(f, C->id_of(z), C->id_of(z), a.comp[s][b][z][x]);
          int rhs = a.comp[e][b][z][a.P.act(f, B->id_of(b), B->id_of(b), x)];
          if (lhs != rhs)
            return {false, 1, "naturality square for " + A->morphisms[f].id + " fails"};
        }
  }
  for (int g = 0; g < B->n_mor(); ++g) {
    int s = B->src(g), e = B->trg(g);
    for (int x = 0; x < A->n_obj(); ++x)
      for (int z = 0; z < C->n_obj(); ++z)
        for (int u = 0; u < a.P.at(x, e, s).size(); ++u) {
          int lhs = a.comp[x][e][z][a.P.act(A->id_of(x), B->id_of(e), g, u)];
          int rhs = a.comp[x][s][z][a.P.act(A->id_of(x), g, B->id_of(s), u)];
          if (lhs != rhs)
            return {false, 2, "cowedge square for " + B->morphisms[g].id + " fails"};
        }
  }
  for (int h = 0; h < C->n_mor(); ++h) {
    int s = C->src(h), e = C->trg(h);
    for (int x = 0; x < A->n_obj(); ++x)
      for (int b = 0; b < B->n_obj(); ++b)
        for (int u = 0; u < a.P.at(x, b, b).size(); ++u) {
          int lhs = a.Q.act(A->id_of(x), C->id_of(s), h, a.comp[x][b][s][u]);
          int rhs = a.Q.act(A->id_of(x), h, C->id_of(e), a.comp[x][b][e][u]);
          if (lhs != rhs)
            return {false, 3, "wedge square for " + C->morphisms[h].id + " fails"};
        }
  }
  return {true, 0, ""};
}

DinaturalFamily reindex_extranatural(const ExtranaturalFamily& a) {
  Cat A = a.P.base.A, B = a.P.base.B, C = a.Q.base.B;
  Cat Aop = opposite(A), Cop = opposite(C);
  ProdCat mid = product(Aop, Cop);
  ProdCat m = product(B, mid.cat);
  Cat M = m.cat;

  auto ob_parts = [&](int o) {
    auto [b, ac] = m.ob_parts(o);
    auto [x, z] = mid.ob_parts(ac);
    return std::tuple<int, int, int>(b, x, z);
  };
  auto mo_parts = [&](int q) {
    auto [b, ac] = m.mo_parts(q);
    auto [x, z] = mid.mo_parts(ac);
    return std::tuple<int, int, int>(b, x, z);
  };

  OpProd base = op_prod(M, M);
  SetFunctor pt, qt;
  pt.base = base.prod.cat;
  qt.base = base.prod.cat;
  pt.ob.resize(base.prod.cat->n_obj());
  qt.ob.resize(base.prod.cat->n_obj());
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) {
    auto [m1, m2] = base.ob_parts(o);
    auto [b1, a1, c1] = ob_parts(m1);
    auto [b2, a2, c2] = ob_parts(m2);
    (void)a2;
    (void)c2;
    pt.ob[o] = a.P.at(a1, b1, b2);
    qt.ob[o] = a.Q.at(a1, c2, c1);
  }
  pt.mo.resize(base.prod.cat->n_mor());
  qt.mo.resize(base.prod.cat->n_mor());
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) {
    auto [fm, gm] = base.mo_parts(q);
    // fm is an M-morphism used contravariantly, gm covariantly
    auto [bf, af, cf] = mo_parts(fm);  // af: A-mor trg(fm).a -> src(fm).a, cf likewise in C
    auto [bg, ag, cg] = mo_parts(gm);
    (void)ag;
    auto [mt_b, mt_a, mt_c] = ob_parts(M->trg(fm));
    auto [gs_b, gs_a, gs_c] = ob_parts(M->src(gm));
    (void)gs_a;
    const auto& pdom = a.P.at(mt_a, mt_b, gs_b);
    const auto& qdom = a.Q.at(mt_a, gs_c, mt_c);
    for (int x = 0; x < pdom.size(); ++x) pt.mo[q].push_back(a.P.act(af, bf, bg, x));
    for (int x = 0; x < qdom.size(); ++x) qt.mo[q].push_back(a.Q.act(af, cg, cf, x));
  }

  DinaturalFamily out;
  out.P = make_bifunctor(base, std::move(pt));
  out.Q = make_bifunctor(base, std::move(qt));
  out.comp.resize(M->n_obj());
  for (int o = 0; o < M->n_obj(); ++o) {
    auto [b, x, z] = ob_parts(o);
    out.comp[o] = a.comp[x][b][z];
  }
  return out;
}

std::vector<std::vector<int>> compose_nat_then_cowedge(const Bifunctor& f, const Bifunctor& g,
                                                       const BiNat& alpha,
                                                       const std::vector<std::vector<int>>& beta,
                                                       const FinSet& tip) {
  auto issues = validate_binat(f, g, alpha);
  if (!issues.empty()) throw ShapeMismatch("first factor is not natural: " + issues.front());
  auto w = check_cowedge(g, beta, tip);
  if (!w.ok) throw ShapeMismatch("second factor is not a cowedge: " + w.witness);
  Cat c = f.base.A;
  std::vector<std::vector<int>> out(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x) {
    int o = f.base.ob(x, x);
    for (int u = 0; u < f.at(x, x).size(); ++u) out[x].push_back(beta[x][alpha.comp[o][u]]);
  }
  auto post = check_cowedge(f, out, tip);
  if (!post.ok) throw std::runtime_error("composite failed to be a cowedge: " + post.witness);
  return out;
}

std::vector<std::vector<int>> compose_wedge_then_nat(const FinSet& tip,
                                                     const std::vector<std::vector<int>>& alpha,
                                                     const Bifunctor& f, const Bifunctor& g,
                                                     const BiNat& beta) {
  auto w = check_wedge(tip, alpha, f);
  if (!w.ok) throw ShapeMismatch("first factor is not a wedge: " + w.witness);
  auto issues = validate_binat(f, g, beta);
  if (!issues.empty()) throw ShapeMismatch("second factor is not natural: " + issues.front());
  Cat c = f.base.A;
  std::vector<std::vector<int>> out(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x) {
    int o = f.base.ob(x, x);
    for (int u = 0; u < tip.size(); ++u) out[x].push_back(beta.comp[o][alpha[x][u]]);
  }
  auto post = check_wedge(tip, out, g);
  if (!post.ok) throw std::runtime_error("composite failed to be a wedge: " + post.witness);
  return out;
}

Verdict check_yanking_inputs(const YankingData& d) {
  Cat c = d.F.base;
  if (d.H.base != c || d.G.base.A != c || d.G.base.B != c)
    throw ShapeMismatch("yanking data must live over a single category");
  int n = c->n_obj();
  if (static_cast<int>(d.alpha.size()) != n || static_cast<int>(d.beta.size()) != n)
    throw ShapeMismatch("component grids have wrong length");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(d.alpha[x].size()) != n || static_cast<int>(d.beta[x].size()) != n)
      throw ShapeMismatch("component grids have wrong length");
    for (int y = 0; y < n; ++y) {
      if (static_cast<int>(d.alpha[x][y].size()) != d.F.ob[y].size())
        throw ShapeMismatch("alpha component has wrong domain");
      if (static_cast<int>(d.beta[x][y].size()) != d.G.at(x, y, y).size())
        throw ShapeMismatch("beta component has wrong domain");
    }
  }
  // alpha natural in the covariant variable
  for (int x = 0; x < n; ++x)
    for (int m = 0; m < c->n_mor(); ++m) {
      int s = c->src(m), e = c->trg(m);
      for (int u = 0; u < d.F.ob[s].size(); ++u)
        if (d.alpha[x][e][d.F.mo[m][u]] !=
            d.G.act(c->id_of(x), c->id_of(x), m, d.alpha[x][s][u]))
          return {false, "alpha not natural at " + c->morphisms[m].id};
    }
  // alpha wedge-like in the twisted variable
  for (int y = 0; y < n; ++y)
    for (int m = 0; m < c->n_mor(); ++m) {
      int s = c->src(m), e = c->trg(m);
      for (int u = 0; u < d.F.ob[y].size(); ++u)
        if (d.G.act(m, c->id_of(s), c->id_of(y), d.alpha[s][y][u]) !=
            d.G.act(c->id_of(e), m, c->id_of(y), d.alpha[e][y][u]))
          return {false, "alpha not extranatural at " + c->morphisms[m].id};
    }
  // beta natural in the plain variable
  for (int y = 0; y < n; ++y)
    for (int m = 0; m < c->n_mor(); ++m) {
      int s = c->src(m), e = c->trg(m);
      for (int u = 0; u < d.G.at(s, y, y).size(); ++u)
        if (d.beta[e][y][d.G.act(m, c->id_of(y), c->id_of(y), u)] !=
            d.H.mo[m][d.beta[s][y][u]])
          return {false, "beta not natural at " + c->morphisms[m].id};
    }
  // beta cowedge-like in the twisted variable
  for (int x = 0; x < n; ++x)
    for (int m = 0; m < c->n_mor(); ++m) {
      int s = c->src(m), e = c->trg(m);
      for (int u = 0; u < d.G.at(x, e, s).size(); ++u)
        if (d.beta[x][s][d.G.act(c->id_of(x), m, c->id_of(s), u)] !=
            d.beta[x][e][d.G.act(c->id_of(x), c->id_of(e), m, u)])
          return {false, "beta not extranatural at " + c->morphisms[m].id};
    }
  return {true, ""};
}

std::vector<std::vector<int>> compose_yanking(const YankingData& d) {
  auto in = check_yanking_inputs(d);
  if (!in.ok) throw ShapeMismatch("yanking inputs invalid: " + in.witness);
  Cat c = d.F.base;
  std::vector<std::vector<int>> gamma(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x)
    for (int u = 0; u < d.F.ob[x].size(); ++u)
      gamma[x].push_back(d.beta[x][x][d.alpha[x][x][u]]);
  auto issues = validate_setnat(d.F, d.H, gamma);
  if (!issues.empty())
    throw std::runtime_error("yanking composite not natural: " + issues.front());
  return gamma;
}

ElementsCat category_of_elements(const SetFunctor& w) {
  const auto& c = *w.base;
  ElementsCat out;
  out.obj_ix.assign(c.n_obj(), {});
  FinCategory e;
  e.name = "el(" + c.name + ")";
  for (int x = 0; x < c.n_obj(); ++x)
    for (int u = 0; u < w.ob[x].size(); ++u) {
      out.obj_ix[x].push_back(static_cast<int>(e.objects.size()));
      out.obj_elt.push_back({x, u});
      e.objects.push_back(paren(c.objects[x], w.ob[x].elems[u]));
    }
  std::map<std::pair<int, int>, int> mix;
  for (int f = 0; f < c.n_mor(); ++f)
    for (int u = 0; u < w.ob[c.src(f)].size(); ++u) {
      mix[{f, u}] = static_cast<int>(e.morphisms.size());
      out.mor_lift.push_back({f, u});
      FinCategory::Mor m;
      m.id = c.morphisms[f].id + "@" + e.objects[out.obj_ix[c.src(f)][u]];
      m.src = out.obj_ix[c.src(f)][u];
      m.trg = out.obj_ix[c.trg(f)][w.mo[f][u]];
      e.morphisms.push_back(m);
    }
  e.identity.resize(e.objects.size());
  for (size_t o = 0; o < out.obj_elt.size(); ++o) {
    auto [x, u] = out.obj_elt[o];
    e.identity[o] = mix[{c.id_of(x), u}];
  }
  e.comp.assign(e.morphisms.size(), std::vector<int>(e.morphisms.size(), -1));
  for (size_t m1 = 0; m1 < out.mor_lift.size(); ++m1)
    for (size_t m2 = 0; m2 < out.mor_lift.size(); ++m2) {
      if (e.morphisms[m2].src != e.morphisms[m1].trg) continue;
      auto [f, u] = out.mor_lift[m1];
      auto [g, v] = out.mor_lift[m2];
      (void)v;
      e.comp[m2][m1] = mix[{c.compose(g, f), u}];
    }
  Caps caps{std::max(64, static_cast<int>(e.objects.size())),
            std::max(512, static_cast<int>(e.morphisms.size()))};
  out.cat = bless(std::move(e), caps);
  out.proj.src = out.cat;
  out.proj.trg = w.base;
  for (auto [x, u] : out.obj_elt) {
    (void)u;
    out.proj.on_obj.push_back(x);
  }
  for (auto [f, u] : out.mor_lift) {
    (void)u;
    out.proj.on_mor.push_back(f);
  }
  out.proj = bless_functor(out.proj);
  return out;
}

Verdict unique_lift_check(const ElementsCat& e, const SetFunctor& w) {
  const auto& c = *w.base;
  for (size_t o = 0; o < e.obj_elt.size(); ++o)
    for (int f = 0; f < c.n_mor(); ++f) {
      if (c.src(f) != e.obj_elt[o].first) continue;
      int count = 0;
      for (int m = 0; m < e.cat->n_mor(); ++m)
        if (e.cat->src(m) == static_cast<int>(o) && e.proj.mo(m) == f) ++count;
      if (count != 1)
        return {false, "object " + e.cat->objects[o] + " has " + std::to_string(count) +
                           " lifts of " + c.morphisms[f].id};
    }
  return {true, ""};
}

Verdict isofibration_check(const ElementsCat& e, const SetFunctor& w) {
  const auto& c = *w.base;
  for (size_t o = 0; o < e.obj_elt.size(); ++o) {
    auto [x, u] = e.obj_elt[o];
    for (int f = 0; f < c.n_mor(); ++f) {
      if (c.trg(f) != x || !c.is_iso(f)) continue;
      int v = w.mo[c.inverse(f)][u];
      // the lift of f ending at (x,u) starts at (src f, v)
      int lift = -1;
      for (int m = 0; m < e.cat->n_mor(); ++m)
        if (e.proj.mo(m) == f && e.cat->src(m) == e.obj_ix[c.src(f)][v]) lift = m;
      if (lift < 0 || e.cat->trg(lift) != static_cast<int>(o))
        return {false, "no lift of " + c.morphisms[f].id + " at " + e.cat->objects[o]};
      if (!e.cat->is_iso(lift))
        return {false, "lift of " + c.morphisms[f].id + " at " + e.cat->objects[o] +
                           " is not invertible"};
    }
  }
  return {true, ""};
}

CatIso elements_vs_coslice(const SetFunctor& w, int c0) {
  Cat c = w.base;
  ElementsCat el = category_of_elements(w);
  Coslice cs = coslice(c, c0);
  std::unordered_map<int, int> mor_to_cs;
  for (size_t o = 0; o < cs.obj_mor.size(); ++o) mor_to_cs[cs.obj_mor[o]] = static_cast<int>(o);

  FinFunctor h;
  h.src = el.cat;
  h.trg = cs.cat;
  for (auto [x, u] : el.obj_elt) {
    int m = c->mor(w.ob[x].elems[u]);  // representable: elements are morphism names
    if (c->src(m) != c0 || c->trg(m) != x) return {h, false, "functor not representable at " + w.ob[x].elems[u]};
    h.on_obj.push_back(mor_to_cs.at(m));
  }
  for (auto [f, u] : el.mor_lift) {
    int g = c->mor(w.ob[c->src(f)].elems[u]);
    // coslice morphism f@g
    std::string nm = c->morphisms[f].id + "@" + c->morphisms[g].id;
    h.on_mor.push_back(cs.cat->mor(nm));
  }
  auto issues = validate_functor(h);
  if (!issues.empty()) return {h, false, issues.front()};
  return check_iso(h);
}

CatIso elements_pullback_check(const SetFunctor& w) {
  const auto& c = *w.base;

  auto enc = [](const FinSet& s) { return "{" + join(s.elems, ",") + "}"; };

  // plain fragment: the subcategory of finite sets generated by the value tables
  std::vector<std::string> sobj;
  std::vector<FinSet> sval;
  std::unordered_map<std::string, int> sobj_ix;
  std::vector<int> wob(c.n_obj());
  for (int x = 0; x < c.n_obj(); ++x) {
    std::string k = enc(w.ob[x]);
    auto it = sobj_ix.find(k);
    if (it == sobj_ix.end()) {
      sobj_ix[k] = static_cast<int>(sobj.size());
      wob[x] = static_cast<int>(sobj.size());
      sobj.push_back(k);
      sval.push_back(w.ob[x]);
    } else {
      wob[x] = it->second;
    }
  }

  struct Tab {
    int dom, cod;
    std::vector<int> t;
    std::string name;
  };
  std::vector<Tab> mors;
  std::map<std::tuple<int, int, std::vector<int>>, int> tab_ix;
  auto add = [&](int dom, int cod, std::vector<int> t, const std::string& forced_name) {
    auto key = std::make_tuple(dom, cod, t);
    auto it = tab_ix.find(key);
    if (it != tab_ix.end()) return it->second;
    std::string nm = forced_name;
    if (nm.empty()) {
      std::vector<std::string> imgs;
      for (int v : t) imgs.push_back(sval[cod].elems[v]);
      nm = sobj[dom] + "-[" + join(imgs, ",") + "]->" + sobj[cod];
    }
    int ix = static_cast<int>(mors.size());
    tab_ix[key] = ix;
    mors.push_back({dom, cod, std::move(t), nm});
    if (mors.size() > 4096) throw SizeCapExceeded("generated set fragment too large");
    return ix;
  };
  std::vector<int> sid(sobj.size());
  for (size_t s = 0; s < sobj.size(); ++s) {
    std::vector<int> idt(sval[s].size());
    for (int i = 0; i < sval[s].size(); ++i) idt[i] = i;
    sid[s] = add(static_cast<int>(s), static_cast<int>(s), idt, "id@" + sobj[s]);
  }
  std::vector<int> wmo(c.n_mor());
  for (int f = 0; f < c.n_mor(); ++f) wmo[f] = add(wob[c.src(f)], wob[c.trg(f)], w.mo[f], "");
  for (bool grew = true; grew;) {
    grew = false;
    size_t n0 = mors.size();
    for (size_t i = 0; i < n0; ++i)
      for (size_t j = 0; j < n0; ++j) {
        if (mors[i].cod != mors[j].dom) continue;
        std::vector<int> t(mors[i].t.size());
        for (size_t u = 0; u < t.size(); ++u) t[u] = mors[j].t[mors[i].t[u]];
        add(mors[i].dom, mors[j].cod, std::move(t), "");
      }
    grew = mors.size() > n0;
  }

  FinCategory plain;
  plain.name = "sets<" + c.name + ">";
  plain.objects = sobj;
  for (const auto& m : mors) {
    FinCategory::Mor mm;
    mm.id = m.name;
    mm.src = m.dom;
    mm.trg = m.cod;
    plain.morphisms.push_back(mm);
  }
  plain.identity = sid;
  plain.comp.assign(mors.size(), std::vector<int>(mors.size(), -1));
  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      if (mors[i].cod != mors[j].dom) continue;
      std::vector<int> t(mors[i].t.size());
      for (size_t u = 0; u < t.size(); ++u) t[u] = mors[j].t[mors[i].t[u]];
      plain.comp[j][i] = tab_ix.at(std::make_tuple(mors[i].dom, mors[j].cod, t));
    }
  Caps pcaps{std::max(64, static_cast<int>(sobj.size())),
             std::max(512, static_cast<int>(mors.size()))};
  Cat plain_cat = bless(std::move(plain), pcaps);

  // pointed fragment: same sets with a chosen element, point-preserving tables
  FinCategory ptd;
  ptd.name = "sets*<" + c.name + ">";
  std::vector<std::vector<int>> pobj(sobj.size());
  std::vector<std::pair<int, int>> pobj_parts;
  for (size_t s = 0; s < sobj.size(); ++s)
    for (int u = 0; u < sval[s].size(); ++u) {
      pobj[s].push_back(static_cast<int>(ptd.objects.size()));
      pobj_parts.push_back({static_cast<int>(s), u});
      ptd.objects.push_back(sobj[s] + "@" + sval[s].elems[u]);
    }
  std::map<std::pair<int, int>, int> pmor_ix;  // (plain morphism, point) -> ptd morphism
  std::vector<std::pair<int, int>> pmor_parts;
  for (size_t m = 0; m < mors.size(); ++m)
    for (int u = 0; u < sval[mors[m].dom].size(); ++u) {
      pmor_ix[{static_cast<int>(m), u}] = static_cast<int>(ptd.morphisms.size());
      pmor_parts.push_back({static_cast<int>(m), u});
      FinCategory::Mor mm;
      mm.id = mors[m].name + "@" + sval[mors[m].dom].elems[u];
      mm.src = pobj[mors[m].dom][u];
      mm.trg = pobj[mors[m].cod][mors[m].t[u]];
      ptd.morphisms.push_back(mm);
    }
  ptd.identity.resize(ptd.objects.size());
  for (size_t o = 0; o < pobj_parts.size(); ++o)
    ptd.identity[o] = pmor_ix.at({sid[pobj_parts[o].first], pobj_parts[o].second});
  ptd.comp.assign(ptd.morphisms.size(), std::vector<int>(ptd.morphisms.size(), -1));
  for (size_t m1 = 0; m1 < pmor_parts.size(); ++m1)
    for (size_t m2 = 0; m2 < pmor_parts.size(); ++m2) {
      if (ptd.morphisms[m2].src != ptd.morphisms[m1].trg) continue;
      auto [t1, u1] = pmor_parts[m1];
      auto [t2, u2] = pmor_parts[m2];
      (void)u2;
      ptd.comp[m2][m1] = pmor_ix.at({plain_cat->compose(t2, t1), u1});
    }
  Caps qcaps{std::max(64, static_cast<int>(ptd.objects.size())),
             std::max(512, static_cast<int>(ptd.morphisms.size()))};
  Cat ptd_cat = bless(std::move(ptd), qcaps);

  FinFunctor u;  // forget the point
  u.src = ptd_cat;
  u.trg = plain_cat;
  for (auto [s, p] : pobj_parts) {
    (void)p;
    u.on_obj.push_back(s);
  }
  for (auto [m, p] : pmor_parts) {
    (void)p;
    u.on_mor.push_back(m);
  }
  u = bless_functor(u);

  FinFunctor wf;  // the functor under scrutiny, valued in the plain fragment
  wf.src = w.base;
  wf.trg = plain_cat;
  wf.on_obj = wob;
  wf.on_mor = wmo;
  wf = bless_functor(wf);

  PullbackCat pb = pullback_category(wf, u);
  ElementsCat el = category_of_elements(w);

  std::map<std::pair<int, int>, int> pb_obj, pb_mor;
  for (size_t o = 0; o < pb.obj_pairs.size(); ++o) pb_obj[pb.obj_pairs[o]] = static_cast<int>(o);
  for (size_t m = 0; m < pb.mor_pairs.size(); ++m) pb_mor[pb.mor_pairs[m]] = static_cast<int>(m);

  FinFunctor h;
  h.src = el.cat;
  h.trg = pb.cat;
  for (auto [x, e] : el.obj_elt) h.on_obj.push_back(pb_obj.at({x, pobj[wob[x]][e]}));
  for (auto [f, e] : el.mor_lift) h.on_mor.push_back(pb_mor.at({f, pmor_ix.at({wmo[f], e})}));
  auto issues = validate_functor(h);
  if (!issues.empty()) return {h, false, issues.front()};
  return check_iso(h);
}

}  // namespace fce

#include "fce/coend.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace fce {

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string tuple_name(const std::vector<std::string>& parts) {
  return "(" + join(parts, ",") + ")";
}

// binary constraint L[x_s] == R[x_t] between finite-domain variables
struct BinCon {
  int s, t;
  std::vector<int> L, R;
};

std::vector<std::vector<int>> solve_families(const std::vector<int>& domsz,
                                             const std::vector<BinCon>& cons, long long cap,
                                             const char* what) {
  int n = static_cast<int>(domsz.size());
  std::vector<std::vector<char>> alive(n);
  for (int i = 0; i < n; ++i) alive[i].assign(domsz[i], 1);

  // arc consistency to a fixpoint before enumerating
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : cons) {
      for (int v = 0; v < domsz[c.s]; ++v) {
        if (!alive[c.s][v]) continue;
        bool sup = false;
        for (int w = 0; w < domsz[c.t] && !sup; ++w)
          if (alive[c.t][w] && c.L[v] == c.R[w]) sup = true;
        if (!sup) {
          alive[c.s][v] = 0;
          changed = true;
        }
      }
      for (int w = 0; w < domsz[c.t]; ++w) {
        if (!alive[c.t][w]) continue;
        bool sup = false;
        for (int v = 0; v < domsz[c.s] && !sup; ++v)
          if (alive[c.s][v] && c.L[v] == c.R[w]) sup = true;
        if (!sup) {
          alive[c.t][w] = 0;
          changed = true;
        }
      }
    }
  }

  std::vector<std::vector<const BinCon*>> at(n);
  for (const auto& c : cons) at[std::max(c.s, c.t)].push_back(&c);

  std::vector<std::vector<int>> sols;
  std::vector<int> cur(n, -1);
  long long states = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      sols.push_back(cur);
      return;
    }
    for (int v = 0; v < domsz[k]; ++v) {
      if (!alive[k][v]) continue;
      if (++states > cap)
        throw SizeCapExceeded(std::string(what) + " exceeded " + std::to_string(cap) +
                              " partial states");
      cur[k] = v;
      bool ok = true;
      for (const BinCon* c : at[k]) {
        if (c->L[cur[c->s]] != c->R[cur[c->t]]) {
          ok = false;
          break;
        }
      }
      if (ok) rec(k + 1);
    }
    cur[k] = -1;
  };
  rec(0);
  return sols;
}

}  // namespace

QuotientSet::QuotientSet(std::vector<std::string> t) : tags(std::move(t)) {
  parent.resize(tags.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
}

int QuotientSet::find(int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void QuotientSet::unite(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return;
  if (tags[rb] < tags[ra]) std::swap(ra, rb);
  parent[rb] = ra;
}

QuotientSet::Classes QuotientSet::classes() {
  std::vector<int> roots;
  for (size_t i = 0; i < tags.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
  std::sort(roots.begin(), roots.end(),
            [&](int a, int b) { return tags[a] < tags[b]; });
  Classes out;
  std::vector<int> pos(tags.size(), -1);
  for (size_t k = 0; k < roots.size(); ++k) {
    pos[roots[k]] = static_cast<int>(k);
    out.carrier.elems.push_back(tags[roots[k]]);
    out.rep.push_back(roots[k]);
  }
  out.cls.resize(tags.size());
  for (size_t i = 0; i < tags.size(); ++i) out.cls[i] = pos[find(static_cast<int>(i))];
  return out;
}

Witness make_witness(FinSet lhs, FinSet rhs, std::vector<int> fwd, std::vector<int> bwd) {
  Witness w;
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  w.fwd = std::move(fwd);
  w.bwd = std::move(bwd);
  if (static_cast<int>(w.fwd.size()) != w.lhs.size() ||
      static_cast<int>(w.bwd.size()) != w.rhs.size()) {
    w.reason = "comparison tables have the wrong length";
    return w;
  }
  for (int v : w.fwd)
    if (v < 0 || v >= w.rhs.size()) {
      w.reason = "forward table maps outside the codomain";
      return w;
    }
  for (int v : w.bwd)
    if (v < 0 || v >= w.lhs.size()) {
      w.reason = "backward table maps outside the codomain";
      return w;
    }
  for (int i = 0; i < w.lhs.size(); ++i)
    if (w.bwd[w.fwd[i]] != i) {
      w.reason = "round trip fails at " + w.lhs.elems[i];
      return w;
    }
  for (int j = 0; j < w.rhs.size(); ++j)
    if (w.fwd[w.bwd[j]] != j) {
      w.reason = "round trip fails at " + w.rhs.elems[j];
      return w;
    }
  w.ok = true;
  return w;
}

int EndResult::find_family(const std::vector<int>& fam) const {
  auto it = std::lower_bound(families.begin(), families.end(), fam);
  if (it == families.end() || *it != fam) return -1;
  return static_cast<int>(it - families.begin());
}

int LimitResult::find_family(const std::vector<int>& fam) const {
  auto it = std::lower_bound(families.begin(), families.end(), fam);
  if (it == families.end() || *it != fam) return -1;
  return static_cast<int>(it - families.begin());
}

EndResult end_of(const Bifunctor& t, long long cap) {
  if (t.base.A != t.base.B) throw ShapeMismatch("ends need an integrand on op(C) x C");
  Cat c = t.base.A;
  std::vector<int> domsz(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x) domsz[x] = t.at(x, x).size();
  std::vector<BinCon> cons;
  for (int f = 0; f < c->n_mor(); ++f) {
    if (c->is_identity(f)) continue;
    int s = c->src(f), e = c->trg(f);
    BinCon bc;
    bc.s = s;
    bc.t = e;
    for (int x = 0; x < domsz[s]; ++x) bc.L.push_back(t.act(c->id_of(s), f, x));
    for (int y = 0; y < domsz[e]; ++y) bc.R.push_back(t.act(f, c->id_of(e), y));
    cons.push_back(std::move(bc));
  }
  EndResult out;
  out.families = solve_families(domsz, cons, cap, "end computation");
  for (const auto& fam : out.families) {
    std::vector<std::string> parts;
    for (int x = 0; x < c->n_obj(); ++x) parts.push_back(t.at(x, x).elems[fam[x]]);
    out.carrier.elems.push_back(tuple_name(parts));
  }
  out.legs.assign(c->n_obj(), {});
  for (int x = 0; x < c->n_obj(); ++x)
    for (const auto& fam : out.families) out.legs[x].push_back(fam[x]);
  return out;
}

CoendResult coend_of(const Bifunctor& t) {
  if (t.base.A != t.base.B) throw ShapeMismatch("coends need an integrand on op(C) x C");
  Cat c = t.base.A;
  std::vector<int> off(c->n_obj() + 1, 0);
  std::vector<std::string> tags;
  for (int x = 0; x < c->n_obj(); ++x) {
    off[x + 1] = off[x] + t.at(x, x).size();
    for (const auto& e : t.at(x, x).elems) tags.push_back(c->objects[x] + "#" + e);
  }
  QuotientSet q(std::move(tags));
  for (int f = 0; f < c->n_mor(); ++f) {
    int s = c->src(f), e = c->trg(f);
    for (int x = 0; x < t.at(e, s).size(); ++x)
      q.unite(off[s] + t.act(f, c->id_of(s), x), off[e] + t.act(c->id_of(e), f, x));
  }
  auto cls = q.classes();
  CoendResult out;
  out.carrier = std::move(cls.carrier);
  out.inject.assign(c->n_obj(), {});
  for (int x = 0; x < c->n_obj(); ++x)
    for (int u = 0; u < t.at(x, x).size(); ++u) out.inject[x].push_back(cls.cls[off[x] + u]);
  for (int r : cls.rep) {
    int x = 0;
    while (off[x + 1] <= r) ++x;
    out.class_rep.push_back({x, r - off[x]});
  }
  return out;
}

LimitResult limit_of(const SetFunctor& f, long long cap) {
  const auto& c = *f.base;
  std::vector<int> domsz(c.n_obj());
  for (int x = 0; x < c.n_obj(); ++x) domsz[x] = f.ob[x].size();
  std::vector<BinCon> cons;
  for (int m = 0; m < c.n_mor(); ++m) {
    if (c.is_identity(m)) continue;
    BinCon bc;
    bc.s = c.src(m);
    bc.t = c.trg(m);
    bc.L = f.mo[m];
    for (int y = 0; y < domsz[bc.t]; ++y) bc.R.push_back(y);
    cons.push_back(std::move(bc));
  }
  LimitResult out;
  out.families = solve_families(domsz, cons, cap, "limit computation");
  for (const auto& fam : out.families) {
    std::vector<std::string> parts;
    for (int x = 0; x < c.n_obj(); ++x) parts.push_back(f.ob[x].elems[fam[x]]);
    out.carrier.elems.push_back(tuple_name(parts));
  }
  out.cone.assign(c.n_obj(), {});
  for (int x = 0; x < c.n_obj(); ++x)
    for (const auto& fam : out.families) out.cone[x].push_back(fam[x]);
  return out;
}

ColimitResult colimit_of(const SetFunctor& f) {
  const auto& c = *f.base;
  std::vector<int> off(c.n_obj() + 1, 0);
  std::vector<std::string> tags;
  for (int x = 0; x < c.n_obj(); ++x) {
    off[x + 1] = off[x] + f.ob[x].size();
    for (const auto& e : f.ob[x].elems) tags.push_back(c.objects[x] + "#" + e);
  }
  QuotientSet q(std::move(tags));
  for (int m = 0; m < c.n_mor(); ++m)
    for (int u = 0; u < f.ob[c.src(m)].size(); ++u)
      q.unite(off[c.src(m)] + u, off[c.trg(m)] + f.mo[m][u]);
  auto cls = q.classes();
  ColimitResult out;
  out.carrier = std::move(cls.carrier);
  out.cocone.assign(c.n_obj(), {});
  for (int x = 0; x < c.n_obj(); ++x)
    for (int u = 0; u < f.ob[x].size(); ++u) out.cocone[x].push_back(cls.cls[off[x] + u]);
  for (int r : cls.rep) {
    int x = 0;
    while (off[x + 1] <= r) ++x;
    out.class_rep.push_back({x, r - off[x]});
  }
  return out;
}

std::vector<int> mediator_into_end(const EndResult& e, const Bifunctor& t, const FinSet& tip,
                                   const std::vector<std::vector<int>>& legs) {
  auto w = check_wedge(tip, legs, t);
  if (!w.ok) throw std::runtime_error("mediator source is not a wedge: " + w.witness);
  Cat c = t.base.A;
  std::vector<int> out;
  for (int u = 0; u < tip.size(); ++u) {
    std::vector<int> fam(c->n_obj());
    for (int x = 0; x < c->n_obj(); ++x) fam[x] = legs[x][u];
    int ix = e.find_family(fam);
    if (ix < 0) throw std::runtime_error("wedge image is not a family of the end");
    out.push_back(ix);
  }
  return out;
}

std::vector<int> mediator_from_coend(const CoendResult& e, const Bifunctor& t,
                                     const std::vector<std::vector<int>>& legs,
                                     const FinSet& tip) {
  auto w = check_cowedge(t, legs, tip);
  if (!w.ok) throw std::runtime_error("mediator target is not a cowedge: " + w.witness);
  Cat c = t.base.A;
  std::vector<int> out(e.carrier.size(), -1);
  for (int x = 0; x < c->n_obj(); ++x)
    for (int u = 0; u < t.at(x, x).size(); ++u) {
      int cl = e.inject[x][u];
      if (out[cl] < 0) out[cl] = legs[x][u];
      if (out[cl] != legs[x][u])
        throw std::runtime_error("cowedge is not constant on the class of " +
                                 e.carrier.elems[cl]);
    }
  for (int v : out)
    if (v < 0) throw std::runtime_error("coend class not covered by any leg");
  return out;
}

Bifunctor lift_cov(const SetFunctor& w) {
  OpProd base = op_prod(w.base, w.base);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) t.ob[o] = w.ob[base.ob_parts(o).second];
  t.mo.resize(base.prod.cat->n_mor());
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) t.mo[q] = w.mo[base.mo_parts(q).second];
  return make_bifunctor(base, std::move(t));
}

Bifunctor lift_contra(Cat c, const SetFunctor& w) {
  if (w.base->n_mor() != c->n_mor() || w.base->n_obj() != c->n_obj())
    throw ShapeMismatch("contravariant lift needs a presheaf on the opposite category");
  for (int m = 0; m < c->n_mor(); ++m)
    if (w.base->src(m) != c->trg(m) || w.base->trg(m) != c->src(m))
      throw ShapeMismatch("contravariant lift needs a presheaf on the opposite category");
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) t.ob[o] = w.ob[base.ob_parts(o).first];
  t.mo.resize(base.prod.cat->n_mor());
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) t.mo[q] = w.mo[base.mo_parts(q).first];
  return make_bifunctor(base, std::move(t));
}

Witness end_via_twisted(const Bifunctor& t, long long cap) {
  Cat c = t.base.A;
  TwistedArrows k = twisted_arrows(c);
  SetFunctor d;
  d.base = k.tw;
  d.ob.resize(k.tw->n_obj());
  d.mo.resize(k.tw->n_mor());
  for (int o = 0; o < k.tw->n_obj(); ++o) d.ob[o] = t.t.ob[k.proj.ob(o)];
  for (int m = 0; m < k.tw->n_mor(); ++m) d.mo[m] = t.t.mo[k.proj.mo(m)];
  d = bless_setfunctor(std::move(d));

  LimitResult lim = limit_of(d, cap);
  EndResult e = end_of(t, cap);

  std::vector<int> mor_of_obj(k.tw->n_obj());
  for (int m = 0; m < c->n_mor(); ++m) mor_of_obj[k.obj_of_mor[m]] = m;

  std::vector<int> fwd, bwd;
  for (const auto& fam : e.families) {
    std::vector<int> tfam(k.tw->n_obj());
    for (int o = 0; o < k.tw->n_obj(); ++o) {
      int f = mor_of_obj[o];
      tfam[o] = t.act(c->id_of(c->src(f)), f, fam[c->src(f)]);
    }
    int ix = lim.find_family(tfam);
    if (ix < 0) return {e.carrier, lim.carrier, {}, {}, false, "image family missing"};
    fwd.push_back(ix);
  }
  for (const auto& tfam : lim.families) {
    std::vector<int> fam(c->n_obj());
    for (int x = 0; x < c->n_obj(); ++x) fam[x] = tfam[k.obj_of_mor[c->id_of(x)]];
    int ix = e.find_family(fam);
    if (ix < 0) return {e.carrier, lim.carrier, {}, {}, false, "restriction is not a family"};
    bwd.push_back(ix);
  }
  return make_witness(e.carrier, lim.carrier, fwd, bwd);
}

Witness coend_via_twisted(const Bifunctor& t) {
  Cat c = t.base.A;
  TwistedArrows k = twisted_arrows(c);
  Cat kop = opposite(k.tw);

  // object f: c -> c' carries the off-diagonal value T(c', c); the opposite of
  // a square (h, k): f -> g acts by T(k, h): T(trg g, src g) -> T(trg f, src f)
  SetFunctor e;
  e.base = kop;
  e.ob.resize(kop->n_obj());
  e.mo.resize(kop->n_mor());
  std::vector<int> mor_of_obj(k.tw->n_obj());
  for (int m = 0; m < c->n_mor(); ++m) mor_of_obj[k.obj_of_mor[m]] = m;
  for (int o = 0; o < kop->n_obj(); ++o) {
    int f = mor_of_obj[o];
    e.ob[o] = t.at(c->trg(f), c->src(f));
  }
  for (int m = 0; m < kop->n_mor(); ++m) {
    int h = k.mor_pair[m][0], kk = k.mor_pair[m][1];
    e.mo[m] = t.t.mo[t.base.mo(kk, h)];
  }
  e = bless_setfunctor(std::move(e));

  ColimitResult col = colimit_of(e);
  CoendResult co = coend_of(t);

  if (col.carrier.size() != co.carrier.size())
    return {co.carrier, col.carrier, {}, {}, false, "class counts differ"};

  std::vector<int> fwd(co.carrier.size(), -1), bwd(col.carrier.size(), -1);
  for (int x = 0; x < c->n_obj(); ++x)
    for (int u = 0; u < t.at(x, x).size(); ++u) {
      int lhs = co.inject[x][u];
      int rhs = col.cocone[k.obj_of_mor[c->id_of(x)]][u];
      if (fwd[lhs] >= 0 && fwd[lhs] != rhs)
        return {co.carrier, col.carrier, {}, {}, false, "comparison not constant on classes"};
      fwd[lhs] = rhs;
    }
  for (int o = 0; o < kop->n_obj(); ++o) {
    int f = mor_of_obj[o];
    int s = c->src(f);
    for (int u = 0; u < e.ob[o].size(); ++u) {
      int lhs = co.inject[s][t.act(f, c->id_of(s), u)];
      int rhs = col.cocone[o][u];
      if (bwd[rhs] >= 0 && bwd[rhs] != lhs)
        return {co.carrier, col.carrier, {}, {}, false, "comparison not constant on classes"};
      bwd[rhs] = lhs;
    }
  }
  return make_witness(co.carrier, col.carrier, fwd, bwd);
}

EndResult nat_set(const FinFunctor& f, const FinFunctor& g, long long cap) {
  return end_of(hom_along(f, g), cap);
}

std::vector<std::vector<int>> all_nats_brute(const FinFunctor& f, const FinFunctor& g) {
  Cat c = f.src;
  Cat d = f.trg;
  std::vector<std::vector<int>> cands(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x) cands[x] = d->hom(f.ob(x), g.ob(x));
  std::vector<std::vector<int>> out;
  std::vector<int> pick(c->n_obj(), 0);
  while (true) {
    std::vector<int> comp(c->n_obj());
    bool possible = true;
    for (int x = 0; x < c->n_obj(); ++x) {
      if (cands[x].empty()) {
        possible = false;
        break;
      }
      comp[x] = cands[x][pick[x]];
    }
    if (!possible) return out;
    bool natural = true;
    for (int m = 0; m < c->n_mor() && natural; ++m)
      if (d->compose(comp[c->trg(m)], f.mo(m)) != d->compose(g.mo(m), comp[c->src(m)]))
        natural = false;
    if (natural) out.push_back(comp);
    int i = c->n_obj() - 1;
    while (i >= 0) {
      if (++pick[i] < static_cast<int>(cands[i].size())) break;
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

namespace {

struct InnerEnds {
  std::vector<EndResult> ends;  // indexed by contra * n + cov
  Bifunctor s;
};

// ends over the right factor, packaged as an integrand over the left factor
InnerEnds end_along_right(const Bifunctor& t, const ProdCat& p, long long cap) {
  Cat a = p.left, b = p.right;
  OpProd bb = op_prod(b, b);
  int na = a->n_obj();
  InnerEnds out;
  out.ends.resize(na * na);
  for (int a1 = 0; a1 < na; ++a1)
    for (int a2 = 0; a2 < na; ++a2) {
      SetFunctor tb;
      tb.base = bb.prod.cat;
      tb.ob.resize(bb.prod.cat->n_obj());
      tb.mo.resize(bb.prod.cat->n_mor());
      for (int o = 0; o < bb.prod.cat->n_obj(); ++o) {
        auto [b1, b2] = bb.ob_parts(o);
        tb.ob[o] = t.at(p.ob(a1, b1), p.ob(a2, b2));
      }
      for (int q = 0; q < bb.prod.cat->n_mor(); ++q) {
        auto [gm, gm2] = bb.mo_parts(q);
        tb.mo[q] = t.t.mo[t.base.mo(p.mo(a->id_of(a1), gm), p.mo(a->id_of(a2), gm2))];
      }
      out.ends[a1 * na + a2] = end_of(make_bifunctor(bb, std::move(tb)), cap);
    }
  OpProd aa = op_prod(a, a);
  SetFunctor s;
  s.base = aa.prod.cat;
  s.ob.resize(aa.prod.cat->n_obj());
  s.mo.resize(aa.prod.cat->n_mor());
  for (int o = 0; o < aa.prod.cat->n_obj(); ++o) {
    auto [a1, a2] = aa.ob_parts(o);
    s.ob[o] = out.ends[a1 * na + a2].carrier;
  }
  for (int q = 0; q < aa.prod.cat->n_mor(); ++q) {
    auto [fm, fm2] = aa.mo_parts(q);
    int s1 = a->trg(fm), s2 = a->src(fm2);
    int t1 = a->src(fm), t2 = a->trg(fm2);
    const auto& dom = out.ends[s1 * na + s2];
    const auto& cod = out.ends[t1 * na + t2];
    for (const auto& fam : dom.families) {
      std::vector<int> img(b->n_obj());
      for (int x = 0; x < b->n_obj(); ++x)
        img[x] = t.act(p.mo(fm, b->id_of(x)), p.mo(fm2, b->id_of(x)), fam[x]);
      int ix = cod.find_family(img);
      if (ix < 0) throw std::runtime_error("inner end families are not stable under the action");
      s.mo[q].push_back(ix);
    }
  }
  out.s = make_bifunctor(aa, std::move(s));
  return out;
}

// ends over the left factor, packaged as an integrand over the right factor
InnerEnds end_along_left(const Bifunctor& t, const ProdCat& p, long long cap) {
  Cat a = p.left, b = p.right;
  OpProd aa = op_prod(a, a);
  int nb = b->n_obj();
  InnerEnds out;
  out.ends.resize(nb * nb);
  for (int b1 = 0; b1 < nb; ++b1)
    for (int b2 = 0; b2 < nb; ++b2) {
      SetFunctor ta;
      ta.base = aa.prod.cat;
      ta.ob.resize(aa.prod.cat->n_obj());
      ta.mo.resize(aa.prod.cat->n_mor());
      for (int o = 0; o < aa.prod.cat->n_obj(); ++o) {
        auto [a1, a2] = aa.ob_parts(o);
        ta.ob[o] = t.at(p.ob(a1, b1), p.ob(a2, b2));
      }
      for (int q = 0; q < aa.prod.cat->n_mor(); ++q) {
        auto [fm, fm2] = aa.mo_parts(q);
        ta.mo[q] = t.t.mo[t.base.mo(p.mo(fm, b->id_of(b1)), p.mo(fm2, b->id_of(b2)))];
      }
      out.ends[b1 * nb + b2] = end_of(make_bifunctor(aa, std::move(ta)), cap);
    }
  OpProd bbb = op_prod(b, b);
  SetFunctor s;
  s.base = bbb.prod.cat;
  s.ob.resize(bbb.prod.cat->n_obj());
  s.mo.resize(bbb.prod.cat->n_mor());
  for (int o = 0; o < bbb.prod.cat->n_obj(); ++o) {
    auto [b1, b2] = bbb.ob_parts(o);
    s.ob[o] = out.ends[b1 * nb + b2].carrier;
  }
  for (int q = 0; q < bbb.prod.cat->n_mor(); ++q) {
    auto [gm, gm2] = bbb.mo_parts(q);
    int s1 = b->trg(gm), s2 = b->src(gm2);
    int t1 = b->src(gm), t2 = b->trg(gm2);
    const auto& dom = out.ends[s1 * nb + s2];
    const auto& cod = out.ends[t1 * nb + t2];
    for (const auto& fam : dom.families) {
      std::vector<int> img(a->n_obj());
      for (int x = 0; x < a->n_obj(); ++x)
        img[x] = t.act(p.mo(a->id_of(x), gm), p.mo(a->id_of(x), gm2), fam[x]);
      int ix = cod.find_family(img);
      if (ix < 0) throw std::runtime_error("inner end families are not stable under the action");
      s.mo[q].push_back(ix);
    }
  }
  out.s = make_bifunctor(bbb, std::move(s));
  return out;
}

}  // namespace

FubiniResult fubini_check(const Bifunctor& t, const ProdCat& base, long long cap) {
  if (t.base.A != base.cat || t.base.B != base.cat)
    throw ShapeMismatch("integrand must live on the given product base");
  Cat a = base.left, b = base.right;
  int na = a->n_obj(), nb = b->n_obj();

  FubiniResult out;
  out.full = end_of(t, cap);
  InnerEnds right = end_along_right(t, base, cap);
  out.ab = end_of(right.s, cap);
  InnerEnds left = end_along_left(t, base, cap);
  out.ba = end_of(left.s, cap);

  auto flatten_ab = [&](const std::vector<int>& yfam) {
    std::vector<int> x(base.cat->n_obj());
    for (int ai = 0; ai < na; ++ai) {
      const auto& inner = right.ends[ai * na + ai].families[yfam[ai]];
      for (int bi = 0; bi < nb; ++bi) x[base.ob(ai, bi)] = inner[bi];
    }
    return x;
  };
  auto flatten_ba = [&](const std::vector<int>& yfam) {
    std::vector<int> x(base.cat->n_obj());
    for (int bi = 0; bi < nb; ++bi) {
      const auto& inner = left.ends[bi * nb + bi].families[yfam[bi]];
      for (int ai = 0; ai < na; ++ai) x[base.ob(ai, bi)] = inner[ai];
    }
    return x;
  };
  auto group_ab = [&](const std::vector<int>& xfam) {
    std::vector<int> y(na);
    for (int ai = 0; ai < na; ++ai) {
      std::vector<int> inner(nb);
      for (int bi = 0; bi < nb; ++bi) inner[bi] = xfam[base.ob(ai, bi)];
      y[ai] = right.ends[ai * na + ai].find_family(inner);
      if (y[ai] < 0) return std::vector<int>{};
    }
    return y;
  };
  auto group_ba = [&](const std::vector<int>& xfam) {
    std::vector<int> y(nb);
    for (int bi = 0; bi < nb; ++bi) {
      std::vector<int> inner(na);
      for (int ai = 0; ai < na; ++ai) inner[ai] = xfam[base.ob(ai, bi)];
      y[bi] = left.ends[bi * nb + bi].find_family(inner);
      if (y[bi] < 0) return std::vector<int>{};
    }
    return y;
  };

  auto compare = [&](const EndResult& lhs, const EndResult& rhs, auto&& to_rhs, auto&& to_lhs) {
    std::vector<int> fwd, bwd;
    for (const auto& fam : lhs.families) {
      int ix = rhs.find_family(to_rhs(fam));
      if (ix < 0) return Witness{lhs.carrier, rhs.carrier, {}, {}, false, "image family missing"};
      fwd.push_back(ix);
    }
    for (const auto& fam : rhs.families) {
      auto img = to_lhs(fam);
      int ix = lhs.find_family(img);
      if (ix < 0) return Witness{lhs.carrier, rhs.carrier, {}, {}, false, "image family missing"};
      bwd.push_back(ix);
    }
    return make_witness(lhs.carrier, rhs.carrier, fwd, bwd);
  };

  out.full_vs_ab = compare(out.full, out.ab, group_ab, flatten_ab);
  out.full_vs_ba = compare(out.full, out.ba, group_ba, flatten_ba);
  out.ab_vs_ba = compare(
      out.ab, out.ba, [&](const std::vector<int>& y) { return group_ba(flatten_ab(y)); },
      [&](const std::vector<int>& y) { return group_ab(flatten_ba(y)); });
  out.ok = out.full_vs_ab.ok && out.full_vs_ba.ok && out.ab_vs_ba.ok;
  if (!out.ok)
    out.reason = !out.full_vs_ab.ok   ? out.full_vs_ab.reason
                 : !out.full_vs_ba.ok ? out.full_vs_ba.reason
                                      : out.ab_vs_ba.reason;
  return out;
}

Witness hom_into_end(const Bifunctor& t, const FinSet& x, long long cap) {
  Cat c = t.base.A;
  EndResult e = end_of(t, cap);
  FinSet lhs = function_set(x, e.carrier);

  OpProd base = op_prod(c, c);
  SetFunctor g;
  g.base = base.prod.cat;
  g.ob.resize(base.prod.cat->n_obj());
  g.mo.resize(base.prod.cat->n_mor());
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) {
    auto [c1, c2] = base.ob_parts(o);
    g.ob[o] = function_set(x, t.at(c1, c2));
  }
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) {
    auto [fm, gm] = base.mo_parts(q);
    int s1 = c->trg(fm), s2 = c->src(gm);
    int t1 = c->src(fm), t2 = c->trg(gm);
    const auto& dom = t.at(s1, s2);
    const auto& cod = t.at(t1, t2);
    int nfun = g.ob[base.prod.cat->src(q)].size();
    for (int fn = 0; fn < nfun; ++fn) {
      auto img = function_images(x, dom, fn);
      for (auto& v : img) v = t.act(fm, gm, v);
      g.mo[q].push_back(function_index(x, cod, img));
    }
  }
  Bifunctor gb = make_bifunctor(base, std::move(g));
  EndResult rhs = end_of(gb, cap);

  std::vector<int> fwd, bwd;
  for (int fn = 0; fn < lhs.size(); ++fn) {
    auto img = function_images(x, e.carrier, fn);
    std::vector<int> fam(c->n_obj());
    for (int ci = 0; ci < c->n_obj(); ++ci) {
      std::vector<int> comp(x.size());
      for (int u = 0; u < x.size(); ++u) comp[u] = e.families[img[u]][ci];
      fam[ci] = function_index(x, t.at(ci, ci), comp);
    }
    int ix = rhs.find_family(fam);
    if (ix < 0) return {lhs, rhs.carrier, {}, {}, false, "image family missing"};
    fwd.push_back(ix);
  }
  for (const auto& fam : rhs.families) {
    std::vector<int> img(x.size());
    bool good = true;
    for (int u = 0; u < x.size() && good; ++u) {
      std::vector<int> pt(c->n_obj());
      for (int ci = 0; ci < c->n_obj(); ++ci)
        pt[ci] = function_images(x, t.at(ci, ci), fam[ci])[u];
      int ix = e.find_family(pt);
      if (ix < 0) good = false;
      img[u] = ix;
    }
    if (!good) return {lhs, rhs.carrier, {}, {}, false, "component family missing"};
    bwd.push_back(function_index(x, e.carrier, img));
  }
  return make_witness(lhs, rhs.carrier, fwd, bwd);
}

Witness hom_out_of_coend(const Bifunctor& t, const FinSet& x, long long cap) {
  Cat c = t.base.A;
  CoendResult co = coend_of(t);
  FinSet lhs = function_set(co.carrier, x);

  OpProd base = op_prod(c, c);
  SetFunctor g;
  g.base = base.prod.cat;
  g.ob.resize(base.prod.cat->n_obj());
  g.mo.resize(base.prod.cat->n_mor());
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) {
    auto [c1, c2] = base.ob_parts(o);
    g.ob[o] = function_set(t.at(c2, c1), x);
  }
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) {
    auto [fm, gm] = base.mo_parts(q);
    int s1 = c->trg(fm), s2 = c->src(gm);
    int t1 = c->src(fm), t2 = c->trg(gm);
    const auto& dom = t.at(s2, s1);
    const auto& cod = t.at(t2, t1);
    int nfun = g.ob[base.prod.cat->src(q)].size();
    for (int fn = 0; fn < nfun; ++fn) {
      auto img = function_images(dom, x, fn);
      std::vector<int> img2(cod.size());
      for (int y = 0; y < cod.size(); ++y) img2[y] = img[t.act(gm, fm, y)];
      g.mo[q].push_back(function_index(cod, x, img2));
    }
  }
  Bifunctor gb = make_bifunctor(base, std::move(g));
  EndResult rhs = end_of(gb, cap);

  std::vector<int> fwd, bwd;
  for (int fn = 0; fn < lhs.size(); ++fn) {
    auto img = function_images(co.carrier, x, fn);
    std::vector<int> fam(c->n_obj());
    for (int ci = 0; ci < c->n_obj(); ++ci) {
      std::vector<int> comp(t.at(ci, ci).size());
      for (int u = 0; u < t.at(ci, ci).size(); ++u) comp[u] = img[co.inject[ci][u]];
      fam[ci] = function_index(t.at(ci, ci), x, comp);
    }
    int ix = rhs.find_family(fam);
    if (ix < 0) return {lhs, rhs.carrier, {}, {}, false, "image family missing"};
    fwd.push_back(ix);
  }
  for (const auto& fam : rhs.families) {
    std::vector<int> img(co.carrier.size(), -1);
    for (int ci = 0; ci < c->n_obj(); ++ci) {
      auto comp = function_images(t.at(ci, ci), x, fam[ci]);
      for (int u = 0; u < t.at(ci, ci).size(); ++u) {
        int cl = co.inject[ci][u];
        if (img[cl] >= 0 && img[cl] != comp[u])
          return {lhs, rhs.carrier, {}, {}, false, "family not constant on classes"};
        img[cl] = comp[u];
      }
    }
    bwd.push_back(function_index(co.carrier, x, img));
  }
  return make_witness(lhs, rhs.carrier, fwd, bwd);
}

std::vector<int> end_map(const Bifunctor& ts, const Bifunctor& td, const BiNat& eta,
                         const EndResult& es, const EndResult& ed) {
  auto issues = validate_binat(ts, td, eta);
  if (!issues.empty()) throw ShapeMismatch("not natural: " + issues.front());
  Cat c = ts.base.A;
  std::vector<int> out;
  for (const auto& fam : es.families) {
    std::vector<int> img(c->n_obj());
    for (int x = 0; x < c->n_obj(); ++x) img[x] = eta.comp[ts.base.ob(x, x)][fam[x]];
    int ix = ed.find_family(img);
    if (ix < 0) throw std::runtime_error("image of an end family is not a family");
    out.push_back(ix);
  }
  return out;
}

std::vector<int> coend_map(const Bifunctor& ts, const Bifunctor& td, const BiNat& eta,
                           const CoendResult& cs, const CoendResult& cd) {
  auto issues = validate_binat(ts, td, eta);
  if (!issues.empty()) throw ShapeMismatch("not natural: " + issues.front());
  Cat c = ts.base.A;
  std::vector<int> out(cs.carrier.size(), -1);
  for (int x = 0; x < c->n_obj(); ++x)
    for (int u = 0; u < ts.at(x, x).size(); ++u) {
      int from = cs.inject[x][u];
      int to = cd.inject[x][eta.comp[ts.base.ob(x, x)][u]];
      if (out[from] >= 0 && out[from] != to)
        throw std::runtime_error("induced map is not constant on classes");
      out[from] = to;
    }
  return out;
}

Adjunction make_adjunction(FinFunctor f, FinFunctor u, std::vector<int> unit_comp,
                           std::vector<int> counit_comp) {
  if (f.src != u.trg || f.trg != u.src) throw NotAnAdjunction("functors are not opposed");
  Adjunction a;
  a.F = bless_functor(std::move(f));
  a.U = bless_functor(std::move(u));
  a.unit = NatTransformation{identity_functor(a.F.src), compose_functors(a.U, a.F),
                             std::move(unit_comp)};
  a.counit = NatTransformation{compose_functors(a.F, a.U), identity_functor(a.F.trg),
                               std::move(counit_comp)};
  auto iu = validate_nat(a.unit);
  if (!iu.empty()) throw NotAnAdjunction("unit: " + iu.front());
  auto ic = validate_nat(a.counit);
  if (!ic.empty()) throw NotAnAdjunction("counit: " + ic.front());
  Cat c = a.F.src, d = a.F.trg;
  for (int x = 0; x < c->n_obj(); ++x)
    if (d->compose(a.counit.comp[a.F.ob(x)], a.F.mo(a.unit.comp[x])) != d->id_of(a.F.ob(x)))
      throw NotAnAdjunction("triangle fails at " + c->objects[x]);
  for (int y = 0; y < d->n_obj(); ++y)
    if (c->compose(a.U.mo(a.counit.comp[y]), a.unit.comp[a.U.ob(y)]) != c->id_of(a.U.ob(y)))
      throw NotAnAdjunction("triangle fails at " + d->objects[y]);
  return a;
}

Witness adjoint_shift(const Adjunction& a, const Bifunctor& g) {
  Cat c = a.F.src, d = a.F.trg;
  if (g.base.A != d || g.base.B != c)
    throw ShapeMismatch("integrand must pair the right category with the left");

  OpProd cc = op_prod(c, c);
  SetFunctor p;
  p.base = cc.prod.cat;
  p.ob.resize(cc.prod.cat->n_obj());
  p.mo.resize(cc.prod.cat->n_mor());
  for (int o = 0; o < cc.prod.cat->n_obj(); ++o) {
    auto [c1, c2] = cc.ob_parts(o);
    p.ob[o] = g.at(a.F.ob(c1), c2);
  }
  for (int q = 0; q < cc.prod.cat->n_mor(); ++q) {
    auto [fm, gm] = cc.mo_parts(q);
    p.mo[q] = g.t.mo[g.base.mo(a.F.mo(fm), gm)];
  }
  Bifunctor pb = make_bifunctor(cc, std::move(p));

  OpProd dd = op_prod(d, d);
  SetFunctor q;
  q.base = dd.prod.cat;
  q.ob.resize(dd.prod.cat->n_obj());
  q.mo.resize(dd.prod.cat->n_mor());
  for (int o = 0; o < dd.prod.cat->n_obj(); ++o) {
    auto [d1, d2] = dd.ob_parts(o);
    q.ob[o] = g.at(d1, a.U.ob(d2));
  }
  for (int qq = 0; qq < dd.prod.cat->n_mor(); ++qq) {
    auto [um, vm] = dd.mo_parts(qq);
    q.mo[qq] = g.t.mo[g.base.mo(um, a.U.mo(vm))];
  }
  Bifunctor qb = make_bifunctor(dd, std::move(q));

  CoendResult cp = coend_of(pb);
  CoendResult cq = coend_of(qb);

  std::vector<int> fwd(cp.carrier.size(), -1), bwd(cq.carrier.size(), -1);
  for (int x = 0; x < c->n_obj(); ++x)
    for (int u = 0; u < pb.at(x, x).size(); ++u) {
      int from = cp.inject[x][u];
      int fx = a.F.ob(x);
      int to = cq.inject[fx][g.act(d->id_of(fx), a.unit.comp[x], u)];
      if (fwd[from] >= 0 && fwd[from] != to)
        return {cp.carrier, cq.carrier, {}, {}, false, "shift map not constant on classes"};
      fwd[from] = to;
    }
  for (int y = 0; y < d->n_obj(); ++y)
    for (int v = 0; v < qb.at(y, y).size(); ++v) {
      int from = cq.inject[y][v];
      int uy = a.U.ob(y);
      int to = cp.inject[uy][g.act(a.counit.comp[y], c->id_of(uy), v)];
      if (bwd[from] >= 0 && bwd[from] != to)
        return {cp.carrier, cq.carrier, {}, {}, false, "shift map not constant on classes"};
      bwd[from] = to;
    }
  for (int i = 0; i < static_cast<int>(fwd.size()); ++i)
    if (fwd[i] < 0) return {cp.carrier, cq.carrier, {}, {}, false, "class not covered"};
  for (int j = 0; j < static_cast<int>(bwd.size()); ++j)
    if (bwd[j] < 0) return {cp.carrier, cq.carrier, {}, {}, false, "class not covered"};
  return make_witness(cp.carrier, cq.carrier, fwd, bwd);
}

int Group::inv(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mul[a][b] == unit && mul[b][a] == unit) return b;
  return -1;
}

std::vector<std::string> validate_group(const Group& g) {
  std::vector<std::string> issues;
  int n = g.size();
  if (static_cast<int>(g.mul.size()) != n) return {"multiplication table has wrong shape"};
  for (const auto& row : g.mul)
    if (static_cast<int>(row.size()) != n) return {"multiplication table has wrong shape"};
  for (int a = 0; a < n; ++a)
    if (g.mul[g.unit][a] != a || g.mul[a][g.unit] != a) {
      issues.push_back("unit fails at " + g.elems[a]);
      break;
    }
  for (int a = 0; a < n && issues.empty(); ++a)
    for (int b = 0; b < n && issues.empty(); ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
          issues.push_back("associativity fails at (" + g.elems[a] + "," + g.elems[b] + "," +
                           g.elems[c] + ")");
          break;
        }
  for (int a = 0; a < n; ++a)
    if (g.inv(a) < 0) {
      issues.push_back(g.elems[a] + " has no inverse");
      break;
    }
  return issues;
}

std::vector<std::string> validate_gset(const Group& g, const GSet& x) {
  std::vector<std::string> issues;
  if (static_cast<int>(x.act.size()) != g.size()) return {"action table has wrong shape"};
  for (const auto& row : x.act)
    if (static_cast<int>(row.size()) != x.elems.size()) return {"action table has wrong shape"};
  for (int u = 0; u < x.elems.size(); ++u)
    if (x.act[g.unit][u] != u) {
      issues.push_back("unit does not act as identity");
      break;
    }
  for (int a = 0; a < g.size() && issues.empty(); ++a)
    for (int b = 0; b < g.size() && issues.empty(); ++b)
      for (int u = 0; u < x.elems.size(); ++u)
        if (x.act[g.mul[a][b]][u] != x.act[a][x.act[b][u]]) {
          issues.push_back("action is not multiplicative at (" + g.elems[a] + "," + g.elems[b] +
                           ")");
          break;
        }
  return issues;
}

namespace {

std::vector<std::vector<int>> enumerate_subgroups(const Group& g) {
  int n = g.size();
  if (n > 16) throw SizeCapExceeded("group too large for subgroup enumeration");
  std::vector<std::vector<int>> subs;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (!(mask >> g.unit & 1)) continue;
    std::vector<int> h;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) h.push_back(i);
    bool closed = true;
    for (int a : h)
      for (int b : h)
        if (!(mask >> g.mul[a][b] & 1)) closed = false;
    for (int a : h)
      if (!(mask >> g.inv(a) & 1)) closed = false;
    if (closed) subs.push_back(h);
  }
  std::sort(subs.begin(), subs.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return subs;
}

std::string subgroup_name(const Group& g, const std::vector<int>& h) {
  std::vector<std::string> names;
  for (int a : h) names.push_back(g.elems[a]);
  return "{" + join(names, ",") + "}";
}

// distinct cosets gK listed by ascending canonical (least) representative
std::vector<int> coset_reps(const Group& g, const std::vector<int>& k) {
  std::vector<int> rep;
  std::vector<char> seen(g.size(), 0);
  for (int a = 0; a < g.size(); ++a) {
    if (seen[a]) continue;
    rep.push_back(a);
    for (int b : k) seen[g.mul[a][b]] = 1;
  }
  return rep;
}

int coset_of(const Group& g, const std::vector<int>& k, const std::vector<int>& reps, int a) {
  int least = -1;
  for (int b : k) {
    int ab = g.mul[a][b];
    if (least < 0 || ab < least) least = ab;
  }
  for (size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == least) return static_cast<int>(i);
  return -1;
}

bool conjugate_into(const Group& g, const std::vector<int>& h, const std::vector<int>& k, int a) {
  int ai = g.inv(a);
  for (int x : h) {
    int c = g.mul[ai][g.mul[x][a]];
    if (std::find(k.begin(), k.end(), c) == k.end()) return false;
  }
  return true;
}

}  // namespace

OrbitCat orbit_category(const Group& g) {
  auto gi = validate_group(g);
  if (!gi.empty()) throw std::runtime_error("invalid group: " + gi.front());
  OrbitCat out;
  out.subgroups = enumerate_subgroups(g);
  int ns = static_cast<int>(out.subgroups.size());

  FinCategory c;
  c.name = "Orb(" + join(g.elems, "") + ")";
  for (const auto& h : out.subgroups) c.objects.push_back(subgroup_name(g, h));

  std::map<std::tuple<int, int, int>, int> ix;  // (H, K, rep) -> morphism
  for (int hi = 0; hi < ns; ++hi)
    for (int ki = 0; ki < ns; ++ki) {
      const auto& h = out.subgroups[hi];
      const auto& k = out.subgroups[ki];
      auto reps = coset_reps(g, k);
      for (int r : reps) {
        if (!conjugate_into(g, h, k, r)) continue;
        ix[{hi, ki, r}] = static_cast<int>(c.morphisms.size());
        out.mor_rep.push_back(r);
        FinCategory::Mor m;
        m.id = g.elems[r] + ":" + c.objects[hi] + ">" + c.objects[ki];
        m.src = hi;
        m.trg = ki;
        c.morphisms.push_back(m);
      }
    }
  c.identity.resize(ns);
  for (int hi = 0; hi < ns; ++hi) {
    const auto& h = out.subgroups[hi];
    auto reps = coset_reps(g, h);
    int r = reps[coset_of(g, h, reps, g.unit)];
    c.identity[hi] = ix.at({hi, hi, r});
  }
  c.comp.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (size_t m1 = 0; m1 < c.morphisms.size(); ++m1)
    for (size_t m2 = 0; m2 < c.morphisms.size(); ++m2) {
      if (c.morphisms[m2].src != c.morphisms[m1].trg) continue;
      int hi = c.morphisms[m1].src, li = c.morphisms[m2].trg;
      const auto& l = out.subgroups[li];
      auto reps = coset_reps(g, l);
      int r = reps[coset_of(g, l, reps, g.mul[out.mor_rep[m1]][out.mor_rep[m2]])];
      c.comp[m2][m1] = ix.at({hi, li, r});
    }
  Caps caps{std::max(64, ns), std::max(512, static_cast<int>(c.morphisms.size()))};
  out.cat = bless(std::move(c), caps);
  return out;
}

namespace {

struct OrbData {
  std::vector<std::vector<int>> fix;   // object -> fixed points of X, ascending
  std::vector<std::vector<int>> reps;  // object -> coset representatives, ascending
};

OrbData orb_data(const Group& g, const OrbitCat& orb, const GSet& x) {
  OrbData d;
  for (const auto& h : orb.subgroups) {
    std::vector<int> fix;
    for (int u = 0; u < x.elems.size(); ++u) {
      bool ok = true;
      for (int a : h)
        if (x.act[a][u] != u) ok = false;
      if (ok) fix.push_back(u);
    }
    d.fix.push_back(std::move(fix));
    d.reps.push_back(coset_reps(g, h));
  }
  return d;
}

}  // namespace

Bifunctor elmendorf_bifunctor(const Group& g, const OrbitCat& orb, const GSet& x) {
  auto xi = validate_gset(g, x);
  if (!xi.empty()) throw std::runtime_error("invalid action: " + xi.front());
  OrbData d = orb_data(g, orb, x);
  Cat c = orb.cat;
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  t.mo.resize(base.prod.cat->n_mor());
  for (int o = 0; o < base.prod.cat->n_obj(); ++o) {
    auto [hi, ki] = base.ob_parts(o);
    FinSet fx, cs;
    for (int u : d.fix[hi]) fx.elems.push_back(x.elems.elems[u]);
    for (int r : d.reps[ki]) cs.elems.push_back(g.elems[r]);
    t.ob[o] = product_set(fx, cs);
  }
  for (int q = 0; q < base.prod.cat->n_mor(); ++q) {
    auto [fm, gm] = base.mo_parts(q);
    // fm: H2 -> H1 used contravariantly, gm: K1 -> K2
    int h1 = c->trg(fm), h2 = c->src(fm);
    int k1 = c->src(gm), k2 = c->trg(gm);
    int rf = orb.mor_rep[fm], rg = orb.mor_rep[gm];
    const auto& k2sub = orb.subgroups[k2];
    int ncs1 = static_cast<int>(d.reps[k1].size());
    for (int ui = 0; ui < static_cast<int>(d.fix[h1].size()); ++ui)
      for (int ci = 0; ci < ncs1; ++ci) {
        int u2 = x.act[rf][d.fix[h1][ui]];
        int upos = static_cast<int>(std::find(d.fix[h2].begin(), d.fix[h2].end(), u2) -
                                    d.fix[h2].begin());
        int a2 = g.mul[d.reps[k1][ci]][rg];
        int cpos = coset_of(g, k2sub, d.reps[k2], a2);
        t.mo[q].push_back(upos * static_cast<int>(d.reps[k2].size()) + cpos);
      }
  }
  return make_bifunctor(base, std::move(t));
}

Witness elmendorf_reconstruction(const Group& g, const GSet& x) {
  OrbitCat orb = orbit_category(g);
  Bifunctor t = elmendorf_bifunctor(g, orb, x);
  OrbData d = orb_data(g, orb, x);
  Cat c = orb.cat;

  CoendResult co = coend_of(t);
  std::vector<std::vector<int>> legs(c->n_obj());
  for (int o = 0; o < c->n_obj(); ++o) {
    int ncs = static_cast<int>(d.reps[o].size());
    for (int ui = 0; ui < static_cast<int>(d.fix[o].size()); ++ui)
      for (int ci = 0; ci < ncs; ++ci) legs[o].push_back(x.act[d.reps[o][ci]][d.fix[o][ui]]);
  }
  std::vector<int> fwd = mediator_from_coend(co, t, legs, x.elems);

  int o0 = -1;
  for (int o = 0; o < c->n_obj(); ++o)
    if (orb.subgroups[o].size() == 1) o0 = o;
  std::vector<int> bwd;
  int ncs0 = static_cast<int>(d.reps[o0].size());
  int upos_unit = static_cast<int>(std::find(d.reps[o0].begin(), d.reps[o0].end(), g.unit) -
                                   d.reps[o0].begin());
  for (int u = 0; u < x.elems.size(); ++u) bwd.push_back(co.inject[o0][u * ncs0 + upos_unit]);
  return make_witness(co.carrier, x.elems, fwd, bwd);
}

}  // namespace fce

#include "fce/kanweighted.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fce {

namespace {

struct Homs {
  std::vector<std::vector<FinSet>> set;               // [a][b]
  std::vector<std::vector<std::vector<int>>> mors;    // [a][b] -> morphism ids
  std::vector<int> pos;                               // morphism -> slot in its hom-set
};

Homs all_homs(Cat c) {
  Homs h;
  h.set.assign(c->n_obj(), std::vector<FinSet>(c->n_obj()));
  h.mors.assign(c->n_obj(), std::vector<std::vector<int>>(c->n_obj()));
  h.pos.assign(c->n_mor(), -1);
  for (int m = 0; m < c->n_mor(); ++m) {
    int a = c->src(m), b = c->trg(m);
    h.pos[m] = static_cast<int>(h.mors[a][b].size());
    h.mors[a][b].push_back(m);
    h.set[a][b].elems.push_back(c->morphisms[m].id);
  }
  return h;
}

bool op_shaped(Cat c, Cat d) {
  if (!c || !d) return false;
  if (c->n_obj() != d->n_obj() || c->n_mor() != d->n_mor()) return false;
  for (int m = 0; m < c->n_mor(); ++m)
    if (c->src(m) != d->trg(m) || c->trg(m) != d->src(m)) return false;
  for (int i = 0; i < c->n_obj(); ++i)
    if (c->id_of(i) != d->id_of(i)) return false;
  return true;
}

Witness fail_witness(FinSet lhs, FinSet rhs, const std::string& reason) {
  Witness w;
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  w.reason = reason;
  return w;
}

FinSet indexed_set(const std::string& stem, int n) {
  FinSet s;
  for (int i = 0; i < n; ++i) s.elems.push_back(stem + std::to_string(i));
  return s;
}

int locate_nat(const std::vector<SetNatComp>& nats, const SetNatComp& t) {
  auto it = std::find(nats.begin(), nats.end(), t);
  return it == nats.end() ? -1 : static_cast<int>(it - nats.begin());
}

struct Union {
  std::vector<int> up;
  explicit Union(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
  // class index per element, classes ordered by least member
  std::vector<int> classes(std::vector<int>* reps = nullptr) {
    std::vector<int> cls(up.size(), -1);
    int n = 0;
    for (int i = 0; i < static_cast<int>(up.size()); ++i)
      if (find(i) == i) {
        cls[i] = n++;
        if (reps) reps->push_back(i);
      }
    for (int i = 0; i < static_cast<int>(up.size()); ++i) cls[i] = cls[find(i)];
    return cls;
  }
};

void fold_reason(PointwiseIso& out, const Witness& w, const std::string& where) {
  if (!w.ok && out.ok) {
    out.ok = false;
    out.reason = where + ": " + w.reason;
  }
}

}  // namespace

PointwiseIso yoneda_expand_coend(const SetFunctor& h) {
  Cat c = h.base;
  Homs hm = all_homs(c);
  OpProd base = op_prod(c, c);
  int no = c->n_obj(), nm = c->n_mor();
  PointwiseIso out;
  out.ok = true;
  std::vector<CoendResult> cos;
  for (int x = 0; x < no; ++x) {
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) t.ob[base.ob(a, b)] = product_set(h.ob[b], hm.set[a][x]);
    t.mo.resize(t.base->n_mor());
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) {
        int a1 = c->trg(u), b1 = c->src(v);
        int nh1 = hm.set[a1][x].size(), nh2 = hm.set[c->src(u)][x].size();
        std::vector<int>& tab = t.mo[base.mo(u, v)];
        tab.resize(t.ob[base.ob(a1, b1)].size());
        for (int uu = 0; uu < h.ob[b1].size(); ++uu)
          for (int kp = 0; kp < nh1; ++kp)
            tab[uu * nh1 + kp] =
                h.mo[v][uu] * nh2 + hm.pos[c->compose(hm.mors[a1][x][kp], u)];
      }
    Bifunctor bt = make_bifunctor(base, bless_setfunctor(std::move(t)));
    CoendResult co = coend_of(bt);
    std::vector<std::vector<int>> legs(no);
    for (int a = 0; a < no; ++a) {
      int nh = hm.set[a][x].size();
      legs[a].resize(bt.at(a, a).size());
      for (int uu = 0; uu < h.ob[a].size(); ++uu)
        for (int kp = 0; kp < nh; ++kp) legs[a][uu * nh + kp] = h.mo[hm.mors[a][x][kp]][uu];
    }
    Witness w;
    try {
      std::vector<int> fwd = mediator_from_coend(co, bt, legs, h.ob[x]);
      std::vector<int> bwd(h.ob[x].size());
      int nhx = hm.set[x][x].size();
      int idp = hm.pos[c->id_of(x)];
      for (int v = 0; v < h.ob[x].size(); ++v) bwd[v] = co.inject[x][v * nhx + idp];
      w = make_witness(co.carrier, h.ob[x], std::move(fwd), std::move(bwd));
    } catch (const std::exception& ex) {
      w = fail_witness(co.carrier, h.ob[x], ex.what());
    }
    fold_reason(out, w, "at " + c->objects[x]);
    cos.push_back(std::move(co));
    out.at.push_back(std::move(w));
  }
  out.natural = out.ok;
  if (out.ok)
    for (int f = 0; f < nm && out.natural; ++f) {
      int x = c->src(f), x2 = c->trg(f);
      int nh2 = hm.set[x2][x2].size();
      (void)nh2;
      for (int a = 0; a < no && out.natural; ++a) {
        int nh = hm.set[a][x].size(), nhp = hm.set[a][x2].size();
        for (int uu = 0; uu < h.ob[a].size() && out.natural; ++uu)
          for (int kp = 0; kp < nh; ++kp) {
            int lhs = h.mo[f][out.at[x].fwd[cos[x].inject[a][uu * nh + kp]]];
            int knew = c->compose(f, hm.mors[a][x][kp]);
            int rhs = out.at[x2].fwd[cos[x2].inject[a][uu * nhp + hm.pos[knew]]];
            if (lhs != rhs) {
              out.natural = false;
              out.ok = false;
              out.reason = "comparison not natural along " + c->morphisms[f].id;
              break;
            }
          }
      }
    }
  return out;
}

PointwiseIso yoneda_expand_end(const SetFunctor& h, long long cap) {
  Cat c = h.base;
  Homs hm = all_homs(c);
  OpProd base = op_prod(c, c);
  int no = c->n_obj(), nm = c->n_mor();
  PointwiseIso out;
  out.ok = true;
  std::vector<EndResult> ends;
  for (int x = 0; x < no; ++x) {
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) t.ob[base.ob(a, b)] = function_set(hm.set[x][a], h.ob[b]);
    t.mo.resize(t.base->n_mor());
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) {
        int a1 = c->trg(u), b1 = c->src(v);
        int a2 = c->src(u), b2 = c->trg(v);
        std::vector<int>& tab = t.mo[base.mo(u, v)];
        tab.resize(t.ob[base.ob(a1, b1)].size());
        int nk2 = hm.set[x][a2].size();
        for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
          std::vector<int> imgs = function_images(hm.set[x][a1], h.ob[b1], fn);
          std::vector<int> imgs2(nk2);
          for (int kp = 0; kp < nk2; ++kp)
            imgs2[kp] = h.mo[v][imgs[hm.pos[c->compose(u, hm.mors[x][a2][kp])]]];
          tab[fn] = function_index(hm.set[x][a2], h.ob[b2], imgs2);
        }
      }
    EndResult e = end_of(make_bifunctor(base, bless_setfunctor(std::move(t))), cap);
    int idp = hm.pos[c->id_of(x)];
    std::vector<int> fwd(e.carrier.size()), bwd(h.ob[x].size(), -1);
    for (int i = 0; i < e.carrier.size(); ++i)
      fwd[i] = function_images(hm.set[x][x], h.ob[x], e.families[i][x])[idp];
    for (int v = 0; v < h.ob[x].size(); ++v) {
      std::vector<int> fam(no);
      for (int a = 0; a < no; ++a) {
        int nk = hm.set[x][a].size();
        std::vector<int> imgs(nk);
        for (int kp = 0; kp < nk; ++kp) imgs[kp] = h.mo[hm.mors[x][a][kp]][v];
        fam[a] = function_index(hm.set[x][a], h.ob[a], imgs);
      }
      bwd[v] = e.find_family(fam);
    }
    Witness w;
    if (std::find(bwd.begin(), bwd.end(), -1) != bwd.end())
      w = fail_witness(e.carrier, h.ob[x], "restriction family is not a point of the end");
    else
      w = make_witness(e.carrier, h.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + c->objects[x]);
    ends.push_back(std::move(e));
    out.at.push_back(std::move(w));
  }
  out.natural = out.ok;
  if (out.ok)
    for (int f = 0; f < nm && out.natural; ++f) {
      int x = c->src(f), x2 = c->trg(f);
      for (int i = 0; i < ends[x].carrier.size() && out.natural; ++i) {
        std::vector<int> fam2(no);
        for (int a = 0; a < no; ++a) {
          std::vector<int> imgs = function_images(hm.set[x][a], h.ob[a], ends[x].families[i][a]);
          int nk2 = hm.set[x2][a].size();
          std::vector<int> imgs2(nk2);
          for (int kp = 0; kp < nk2; ++kp)
            imgs2[kp] = imgs[hm.pos[c->compose(hm.mors[x2][a][kp], f)]];
          fam2[a] = function_index(hm.set[x2][a], h.ob[a], imgs2);
        }
        int j = ends[x2].find_family(fam2);
        if (j < 0 || out.at[x2].fwd[j] != h.mo[f][out.at[x].fwd[i]]) {
          out.natural = false;
          out.ok = false;
          out.reason = "comparison not natural along " + c->morphisms[f].id;
        }
      }
    }
  return out;
}

LanResult lan(const FinFunctor& k, const SetFunctor& f) {
  if (f.base != k.src) throw ShapeMismatch("left extension needs a diagram on the source of the functor");
  Cat c = k.src, d = k.trg;
  Homs hd = all_homs(d);
  OpProd base = op_prod(c, c);
  int no = c->n_obj(), nm = c->n_mor();
  LanResult out;
  out.along = k;
  for (int dd = 0; dd < d->n_obj(); ++dd) {
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) t.ob[base.ob(a, b)] = product_set(hd.set[k.ob(a)][dd], f.ob[b]);
    t.mo.resize(t.base->n_mor());
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) {
        int a1 = c->trg(u), b1 = c->src(v), b2 = c->trg(v);
        int nf1 = f.ob[b1].size(), nf2 = f.ob[b2].size();
        const std::vector<int>& homs1 = hd.mors[k.ob(a1)][dd];
        std::vector<int>& tab = t.mo[base.mo(u, v)];
        tab.resize(t.ob[base.ob(a1, b1)].size());
        for (int hp = 0; hp < static_cast<int>(homs1.size()); ++hp)
          for (int uu = 0; uu < nf1; ++uu)
            tab[hp * nf1 + uu] =
                hd.pos[d->compose(homs1[hp], k.mo(u))] * nf2 + f.mo[v][uu];
      }
    out.integrand.push_back(make_bifunctor(base, bless_setfunctor(std::move(t))));
    out.pts.push_back(coend_of(out.integrand.back()));
  }
  SetFunctor val;
  val.base = d;
  for (int dd = 0; dd < d->n_obj(); ++dd) val.ob.push_back(out.pts[dd].carrier);
  val.mo.resize(d->n_mor());
  for (int w = 0; w < d->n_mor(); ++w) {
    int d1 = d->src(w), d2 = d->trg(w);
    std::vector<int> tab(out.pts[d1].carrier.size(), -1);
    for (int a = 0; a < no; ++a) {
      int nf = f.ob[a].size();
      const std::vector<int>& homs1 = hd.mors[k.ob(a)][d1];
      for (int hp = 0; hp < static_cast<int>(homs1.size()); ++hp)
        for (int uu = 0; uu < nf; ++uu) {
          int cls = out.pts[d1].inject[a][hp * nf + uu];
          int img = out.pts[d2].inject[a][hd.pos[d->compose(w, homs1[hp])] * nf + uu];
          if (tab[cls] < 0)
            tab[cls] = img;
          else if (tab[cls] != img)
            throw std::runtime_error("left extension action is not constant on classes");
        }
    }
    val.mo[w] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(val));
  out.unit.resize(no);
  for (int a = 0; a < no; ++a) {
    int nf = f.ob[a].size();
    int idp = hd.pos[d->id_of(k.ob(a))];
    out.unit[a].resize(nf);
    for (int u = 0; u < nf; ++u) out.unit[a][u] = out.pts[k.ob(a)].inject[a][idp * nf + u];
  }
  return out;
}

RanResult ran(const FinFunctor& k, const SetFunctor& f, long long cap) {
  if (f.base != k.src) throw ShapeMismatch("right extension needs a diagram on the source of the functor");
  Cat c = k.src, d = k.trg;
  Homs hd = all_homs(d);
  OpProd base = op_prod(c, c);
  int no = c->n_obj(), nm = c->n_mor();
  RanResult out;
  out.along = k;
  for (int dd = 0; dd < d->n_obj(); ++dd) {
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) t.ob[base.ob(a, b)] = function_set(hd.set[dd][k.ob(a)], f.ob[b]);
    t.mo.resize(t.base->n_mor());
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) {
        int a1 = c->trg(u), b1 = c->src(v);
        int a2 = c->src(u), b2 = c->trg(v);
        const std::vector<int>& homs2 = hd.mors[dd][k.ob(a2)];
        std::vector<int>& tab = t.mo[base.mo(u, v)];
        tab.resize(t.ob[base.ob(a1, b1)].size());
        for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
          std::vector<int> imgs = function_images(hd.set[dd][k.ob(a1)], f.ob[b1], fn);
          std::vector<int> imgs2(homs2.size());
          for (int hp = 0; hp < static_cast<int>(homs2.size()); ++hp)
            imgs2[hp] = f.mo[v][imgs[hd.pos[d->compose(k.mo(u), homs2[hp])]]];
          tab[fn] = function_index(hd.set[dd][k.ob(a2)], f.ob[b2], imgs2);
        }
      }
    out.integrand.push_back(make_bifunctor(base, bless_setfunctor(std::move(t))));
    out.pts.push_back(end_of(out.integrand.back(), cap));
  }
  SetFunctor val;
  val.base = d;
  for (int dd = 0; dd < d->n_obj(); ++dd) val.ob.push_back(out.pts[dd].carrier);
  val.mo.resize(d->n_mor());
  for (int w = 0; w < d->n_mor(); ++w) {
    int d1 = d->src(w), d2 = d->trg(w);
    std::vector<int> tab(out.pts[d1].carrier.size());
    for (int i = 0; i < out.pts[d1].carrier.size(); ++i) {
      std::vector<int> fam(no);
      for (int a = 0; a < no; ++a) {
        const std::vector<int>& homs2 = hd.mors[d2][k.ob(a)];
        std::vector<int> imgs = function_images(hd.set[d1][k.ob(a)], f.ob[a],
                                                out.pts[d1].families[i][a]);
        std::vector<int> imgs2(homs2.size());
        for (int hp = 0; hp < static_cast<int>(homs2.size()); ++hp)
          imgs2[hp] = imgs[hd.pos[d->compose(homs2[hp], w)]];
        fam[a] = function_index(hd.set[d2][k.ob(a)], f.ob[a], imgs2);
      }
      tab[i] = out.pts[d2].find_family(fam);
      if (tab[i] < 0) throw std::runtime_error("right extension action escapes the end");
    }
    val.mo[w] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(val));
  out.counit.resize(no);
  for (int a = 0; a < no; ++a) {
    int ka = k.ob(a);
    int idp = hd.pos[d->id_of(ka)];
    out.counit[a].resize(out.pts[ka].carrier.size());
    for (int i = 0; i < out.pts[ka].carrier.size(); ++i)
      out.counit[a][i] =
          function_images(hd.set[ka][ka], f.ob[a], out.pts[ka].families[i][a])[idp];
  }
  return out;
}

Witness lan_universal(const LanResult& l, const SetFunctor& f, const SetFunctor& g, long long cap) {
  Cat c = l.along.src, d = l.along.trg;
  if (f.base != c || g.base != d) throw ShapeMismatch("probe must be parallel to the extension");
  Homs hd = all_homs(d);
  std::vector<SetNatComp> outs = all_setnats(l.value, g, cap);
  std::vector<SetNatComp> ins = all_setnats(f, restrict_along(l.along, g), cap);
  FinSet lhs = indexed_set("t", static_cast<int>(outs.size()));
  FinSet rhs = indexed_set("t", static_cast<int>(ins.size()));
  std::vector<int> fwd(outs.size()), bwd(ins.size());
  for (int i = 0; i < static_cast<int>(outs.size()); ++i) {
    SetNatComp tau(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      int nf = f.ob[a].size();
      int idp = hd.pos[d->id_of(l.along.ob(a))];
      tau[a].resize(nf);
      for (int u = 0; u < nf; ++u)
        tau[a][u] = outs[i][l.along.ob(a)][l.pts[l.along.ob(a)].inject[a][idp * nf + u]];
    }
    fwd[i] = locate_nat(ins, tau);
    if (fwd[i] < 0) return fail_witness(lhs, rhs, "restricted transformation is not natural");
  }
  for (int j = 0; j < static_cast<int>(ins.size()); ++j) {
    SetNatComp eta(d->n_obj());
    for (int dd = 0; dd < d->n_obj(); ++dd) {
      std::vector<int> tab(l.pts[dd].carrier.size(), -1);
      for (int a = 0; a < c->n_obj(); ++a) {
        int nf = f.ob[a].size();
        const std::vector<int>& homs = hd.mors[l.along.ob(a)][dd];
        for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp)
          for (int u = 0; u < nf; ++u) {
            int cls = l.pts[dd].inject[a][hp * nf + u];
            int val = g.mo[homs[hp]][ins[j][a][u]];
            if (tab[cls] < 0)
              tab[cls] = val;
            else if (tab[cls] != val)
              return fail_witness(lhs, rhs, "extended transformation is not constant on classes");
          }
      }
      eta[dd] = std::move(tab);
    }
    bwd[j] = locate_nat(outs, eta);
    if (bwd[j] < 0) return fail_witness(lhs, rhs, "extended transformation is not natural");
  }
  return make_witness(lhs, rhs, std::move(fwd), std::move(bwd));
}

Witness ran_universal(const RanResult& r, const SetFunctor& f, const SetFunctor& g, long long cap) {
  Cat c = r.along.src, d = r.along.trg;
  if (f.base != c || g.base != d) throw ShapeMismatch("probe must be parallel to the extension");
  Homs hd = all_homs(d);
  std::vector<SetNatComp> ins = all_setnats(g, r.value, cap);
  std::vector<SetNatComp> outs = all_setnats(restrict_along(r.along, g), f, cap);
  FinSet lhs = indexed_set("t", static_cast<int>(ins.size()));
  FinSet rhs = indexed_set("t", static_cast<int>(outs.size()));
  std::vector<int> fwd(ins.size()), bwd(outs.size());
  for (int i = 0; i < static_cast<int>(ins.size()); ++i) {
    SetNatComp tau(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      int ka = r.along.ob(a);
      int idp = hd.pos[d->id_of(ka)];
      tau[a].resize(g.ob[ka].size());
      for (int y = 0; y < g.ob[ka].size(); ++y)
        tau[a][y] = function_images(hd.set[ka][ka], f.ob[a],
                                    r.pts[ka].families[ins[i][ka][y]][a])[idp];
    }
    fwd[i] = locate_nat(outs, tau);
    if (fwd[i] < 0) return fail_witness(lhs, rhs, "restricted transformation is not natural");
  }
  for (int j = 0; j < static_cast<int>(outs.size()); ++j) {
    SetNatComp eta(d->n_obj());
    for (int dd = 0; dd < d->n_obj(); ++dd) {
      eta[dd].resize(g.ob[dd].size());
      for (int y = 0; y < g.ob[dd].size(); ++y) {
        std::vector<int> fam(c->n_obj());
        for (int a = 0; a < c->n_obj(); ++a) {
          const std::vector<int>& homs = hd.mors[dd][r.along.ob(a)];
          std::vector<int> imgs(homs.size());
          for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp)
            imgs[hp] = outs[j][a][g.mo[homs[hp]][y]];
          fam[a] = function_index(hd.set[dd][r.along.ob(a)], f.ob[a], imgs);
        }
        eta[dd][y] = r.pts[dd].find_family(fam);
        if (eta[dd][y] < 0)
          return fail_witness(lhs, rhs, "pairing does not land in the end");
      }
    }
    bwd[j] = locate_nat(ins, eta);
    if (bwd[j] < 0) return fail_witness(lhs, rhs, "extended transformation is not natural");
  }
  return make_witness(lhs, rhs, std::move(fwd), std::move(bwd));
}

PointwiseIso lan_identity_check(const SetFunctor& f) {
  Cat c = f.base;
  LanResult l = lan(identity_functor(c), f);
  Homs hm = all_homs(c);
  PointwiseIso out;
  out.ok = true;
  for (int x = 0; x < c->n_obj(); ++x) {
    std::vector<std::vector<int>> legs(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      int nf = f.ob[a].size();
      const std::vector<int>& homs = hm.mors[a][x];
      legs[a].resize(l.integrand[x].at(a, a).size());
      for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp)
        for (int u = 0; u < nf; ++u) legs[a][hp * nf + u] = f.mo[homs[hp]][u];
    }
    Witness w;
    try {
      std::vector<int> fwd = mediator_from_coend(l.pts[x], l.integrand[x], legs, f.ob[x]);
      std::vector<int> bwd(f.ob[x].size());
      int idp = hm.pos[c->id_of(x)];
      for (int v = 0; v < f.ob[x].size(); ++v)
        bwd[v] = l.pts[x].inject[x][idp * f.ob[x].size() + v];
      w = make_witness(l.pts[x].carrier, f.ob[x], std::move(fwd), std::move(bwd));
    } catch (const std::exception& ex) {
      w = fail_witness(l.pts[x].carrier, f.ob[x], ex.what());
    }
    fold_reason(out, w, "at " + c->objects[x]);
    out.at.push_back(std::move(w));
  }
  out.natural = out.ok;
  if (out.ok)
    for (int m = 0; m < c->n_mor() && out.natural; ++m) {
      int x = c->src(m), x2 = c->trg(m);
      for (int cls = 0; cls < l.pts[x].carrier.size(); ++cls)
        if (f.mo[m][out.at[x].fwd[cls]] != out.at[x2].fwd[l.value.mo[m][cls]]) {
          out.natural = false;
          out.ok = false;
          out.reason = "comparison not natural along " + c->morphisms[m].id;
          break;
        }
    }
  return out;
}

PointwiseIso ran_identity_check(const SetFunctor& f, long long cap) {
  Cat c = f.base;
  RanResult r = ran(identity_functor(c), f, cap);
  Homs hm = all_homs(c);
  PointwiseIso out;
  out.ok = true;
  for (int x = 0; x < c->n_obj(); ++x) {
    int idp = hm.pos[c->id_of(x)];
    std::vector<int> fwd(r.pts[x].carrier.size()), bwd(f.ob[x].size(), -1);
    for (int i = 0; i < r.pts[x].carrier.size(); ++i)
      fwd[i] = function_images(hm.set[x][x], f.ob[x], r.pts[x].families[i][x])[idp];
    for (int v = 0; v < f.ob[x].size(); ++v) {
      std::vector<int> fam(c->n_obj());
      for (int a = 0; a < c->n_obj(); ++a) {
        const std::vector<int>& homs = hm.mors[x][a];
        std::vector<int> imgs(homs.size());
        for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp)
          imgs[hp] = f.mo[homs[hp]][v];
        fam[a] = function_index(hm.set[x][a], f.ob[a], imgs);
      }
      bwd[v] = r.pts[x].find_family(fam);
    }
    Witness w;
    if (std::find(bwd.begin(), bwd.end(), -1) != bwd.end())
      w = fail_witness(r.pts[x].carrier, f.ob[x], "restriction family is not a point of the end");
    else
      w = make_witness(r.pts[x].carrier, f.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + c->objects[x]);
    out.at.push_back(std::move(w));
  }
  out.natural = out.ok;
  if (out.ok)
    for (int m = 0; m < c->n_mor() && out.natural; ++m) {
      int x = c->src(m), x2 = c->trg(m);
      for (int i = 0; i < r.pts[x].carrier.size(); ++i)
        if (f.mo[m][out.at[x].fwd[i]] != out.at[x2].fwd[r.value.mo[m][i]]) {
          out.natural = false;
          out.ok = false;
          out.reason = "comparison not natural along " + c->morphisms[m].id;
          break;
        }
    }
  return out;
}

PointwiseIso lan_compose_check(const FinFunctor& k1, const FinFunctor& k2, const SetFunctor& f) {
  if (f.base != k1.src) throw ShapeMismatch("diagram must live on the source of the first functor");
  if (k2.src != k1.trg) throw ShapeMismatch("extensions do not paste");
  FinFunctor kk = compose_functors(k2, k1);
  LanResult lf = lan(kk, f);
  LanResult l1 = lan(k1, f);
  LanResult l2 = lan(k2, l1.value);
  Cat c = k1.src, d = k1.trg, e = k2.trg;
  Homs hd = all_homs(d), he = all_homs(e);
  PointwiseIso out;
  out.ok = true;
  for (int ee = 0; ee < e->n_obj(); ++ee) {
    std::vector<std::vector<int>> legs(d->n_obj());
    for (int dd = 0; dd < d->n_obj(); ++dd) {
      int nl = l1.pts[dd].carrier.size();
      const std::vector<int>& homs = he.mors[k2.ob(dd)][ee];
      legs[dd].resize(l2.integrand[ee].at(dd, dd).size());
      for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp)
        for (int w = 0; w < nl; ++w) {
          auto [c0, pt] = l1.pts[dd].class_rep[w];
          int nf = f.ob[c0].size();
          int h1 = hd.mors[k1.ob(c0)][dd][pt / nf];
          int flat = e->compose(homs[hp], k2.mo(h1));
          legs[dd][hp * nl + w] = lf.pts[ee].inject[c0][he.pos[flat] * nf + pt % nf];
        }
    }
    Witness w;
    try {
      std::vector<int> fwd = mediator_from_coend(l2.pts[ee], l2.integrand[ee], legs,
                                                 lf.pts[ee].carrier);
      std::vector<int> bwd(lf.pts[ee].carrier.size(), -1);
      bool constant = true;
      std::string bad;
      for (int c0 = 0; c0 < c->n_obj() && constant; ++c0) {
        int nf = f.ob[c0].size();
        int d0 = k1.ob(c0);
        int idp = hd.pos[d->id_of(d0)];
        const std::vector<int>& homs = he.mors[kk.ob(c0)][ee];
        for (int gp = 0; gp < static_cast<int>(homs.size()); ++gp)
          for (int u = 0; u < nf; ++u) {
            int cls = lf.pts[ee].inject[c0][gp * nf + u];
            int wcls = l1.pts[d0].inject[c0][idp * nf + u];
            int val = l2.pts[ee].inject[d0][he.pos[homs[gp]] * l1.pts[d0].carrier.size() + wcls];
            if (bwd[cls] < 0)
              bwd[cls] = val;
            else if (bwd[cls] != val) {
              constant = false;
              bad = lf.pts[ee].carrier.elems[cls];
              break;
            }
          }
      }
      if (!constant)
        w = fail_witness(l2.pts[ee].carrier, lf.pts[ee].carrier,
                         "nesting map is not constant on " + bad);
      else
        w = make_witness(l2.pts[ee].carrier, lf.pts[ee].carrier, std::move(fwd), std::move(bwd));
    } catch (const std::exception& ex) {
      w = fail_witness(l2.pts[ee].carrier, lf.pts[ee].carrier, ex.what());
    }
    fold_reason(out, w, "at " + e->objects[ee]);
    out.at.push_back(std::move(w));
  }
  out.natural = out.ok;
  if (out.ok)
    for (int m = 0; m < e->n_mor() && out.natural; ++m) {
      int x = e->src(m), x2 = e->trg(m);
      for (int cls = 0; cls < l2.pts[x].carrier.size(); ++cls)
        if (lf.value.mo[m][out.at[x].fwd[cls]] != out.at[x2].fwd[l2.value.mo[m][cls]]) {
          out.natural = false;
          out.ok = false;
          out.reason = "comparison not natural along " + e->morphisms[m].id;
          break;
        }
    }
  return out;
}

namespace {

CommaCat comma_build(const FinFunctor& k, int d, bool under) {
  Cat c = k.src, dd = k.trg;
  CommaCat out;
  FinCategory s;
  s.name = under ? dd->objects[d] + "/" + c->name : c->name + "/" + dd->objects[d];
  std::map<std::pair<int, int>, int> objix;
  for (int c0 = 0; c0 < c->n_obj(); ++c0) {
    std::vector<int> hs = under ? dd->hom(d, k.ob(c0)) : dd->hom(k.ob(c0), d);
    for (int h : hs) {
      objix[{c0, h}] = static_cast<int>(s.objects.size());
      s.objects.push_back("(" + c->objects[c0] + "," + dd->morphisms[h].id + ")");
      out.objs.push_back({c0, h});
    }
  }
  std::map<std::tuple<int, int, int>, int> ix;  // (g, src obj, trg obj)
  for (int o1 = 0; o1 < static_cast<int>(out.objs.size()); ++o1) {
    auto [c0, h] = out.objs[o1];
    for (int g = 0; g < c->n_mor(); ++g) {
      if (c->src(g) != c0) continue;
      if (under) {
        int h2 = dd->compose(k.mo(g), h);
        int o2 = objix.at({c->trg(g), h2});
        FinCategory::Mor m;
        m.id = c->morphisms[g].id + "@" + s.objects[o1] + ">" + s.objects[o2];
        m.src = o1;
        m.trg = o2;
        ix[{g, o1, o2}] = static_cast<int>(s.morphisms.size());
        s.morphisms.push_back(m);
        out.mors.push_back(g);
      } else {
        for (int h2 : dd->hom(k.ob(c->trg(g)), d)) {
          if (dd->compose(h2, k.mo(g)) != h) continue;
          int o2 = objix.at({c->trg(g), h2});
          FinCategory::Mor m;
          m.id = c->morphisms[g].id + "@" + s.objects[o1] + ">" + s.objects[o2];
          m.src = o1;
          m.trg = o2;
          ix[{g, o1, o2}] = static_cast<int>(s.morphisms.size());
          s.morphisms.push_back(m);
          out.mors.push_back(g);
        }
      }
    }
  }
  s.identity.resize(s.objects.size());
  for (int o = 0; o < static_cast<int>(out.objs.size()); ++o)
    s.identity[o] = ix.at({c->id_of(out.objs[o].first), o, o});
  s.comp.assign(s.morphisms.size(), std::vector<int>(s.morphisms.size(), -1));
  for (const auto& [t1, m1] : ix)
    for (const auto& [t2, m2] : ix) {
      auto [g1, a1, b1] = t1;
      auto [g2, a2, b2] = t2;
      if (a2 != b1) continue;
      s.comp[m2][m1] = ix.at({c->compose(g2, g1), a1, b2});
    }
  Caps caps;
  caps.max_objects = std::max(64, static_cast<int>(s.objects.size()));
  caps.max_morphisms = std::max(512, static_cast<int>(s.morphisms.size()));
  out.cat = bless(std::move(s), caps);
  FinFunctor proj;
  proj.src = out.cat;
  proj.trg = c;
  for (auto& [c0, h] : out.objs) {
    (void)h;
    proj.on_obj.push_back(c0);
  }
  proj.on_mor = out.mors;
  out.proj = bless_functor(proj);
  return out;
}

}  // namespace

CommaCat comma_under(const FinFunctor& k, int d) { return comma_build(k, d, true); }
CommaCat comma_over(const FinFunctor& k, int d) { return comma_build(k, d, false); }

Witness ran_via_comma(const RanResult& r, const SetFunctor& f, int d, long long cap) {
  Cat c = r.along.src;
  Cat dd = r.along.trg;
  Homs hd = all_homs(dd);
  CommaCat comma = comma_under(r.along, d);
  LimitResult lim = limit_of(restrict_along(comma.proj, f), cap);
  int nob = static_cast<int>(comma.objs.size());
  std::vector<int> fwd(r.pts[d].carrier.size(), -1), bwd(lim.carrier.size(), -1);
  for (int i = 0; i < r.pts[d].carrier.size(); ++i) {
    std::vector<int> fam(nob);
    for (int o = 0; o < nob; ++o) {
      auto [c0, h] = comma.objs[o];
      fam[o] = function_images(hd.set[d][r.along.ob(c0)], f.ob[c0],
                               r.pts[d].families[i][c0])[hd.pos[h]];
    }
    fwd[i] = lim.find_family(fam);
    if (fwd[i] < 0)
      return fail_witness(r.pts[d].carrier, lim.carrier, "end family does not restrict to a cone");
  }
  for (int j = 0; j < lim.carrier.size(); ++j) {
    std::vector<int> fam(c->n_obj());
    for (int c0 = 0; c0 < c->n_obj(); ++c0) {
      const std::vector<int>& homs = hd.mors[d][r.along.ob(c0)];
      std::vector<int> imgs(homs.size());
      for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp) {
        auto it = std::find(comma.objs.begin(), comma.objs.end(),
                            std::make_pair(c0, homs[hp]));
        imgs[hp] = lim.families[j][static_cast<int>(it - comma.objs.begin())];
      }
      fam[c0] = function_index(hd.set[d][r.along.ob(c0)], f.ob[c0], imgs);
    }
    bwd[j] = r.pts[d].find_family(fam);
    if (bwd[j] < 0)
      return fail_witness(r.pts[d].carrier, lim.carrier, "cone does not assemble to an end family");
  }
  return make_witness(r.pts[d].carrier, lim.carrier, std::move(fwd), std::move(bwd));
}

Witness lan_via_comma(const LanResult& l, const SetFunctor& f, int d) {
  Cat c = l.along.src;
  Cat dd = l.along.trg;
  Homs hd = all_homs(dd);
  CommaCat comma = comma_over(l.along, d);
  ColimitResult co = colimit_of(restrict_along(comma.proj, f));
  std::vector<int> fwd(l.pts[d].carrier.size(), -1), bwd(co.carrier.size(), -1);
  for (int o = 0; o < static_cast<int>(comma.objs.size()); ++o) {
    auto [c0, h] = comma.objs[o];
    int nf = f.ob[c0].size();
    for (int u = 0; u < nf; ++u) {
      int cls1 = l.pts[d].inject[c0][hd.pos[h] * nf + u];
      int cls2 = co.cocone[o][u];
      if (fwd[cls1] < 0)
        fwd[cls1] = cls2;
      else if (fwd[cls1] != cls2)
        return fail_witness(l.pts[d].carrier, co.carrier,
                            "gluing is not constant on " + l.pts[d].carrier.elems[cls1]);
      if (bwd[cls2] < 0)
        bwd[cls2] = cls1;
      else if (bwd[cls2] != cls1)
        return fail_witness(l.pts[d].carrier, co.carrier,
                            "gluing is not constant on " + co.carrier.elems[cls2]);
    }
  }
  return make_witness(l.pts[d].carrier, co.carrier, std::move(fwd), std::move(bwd));
}

KleisliResult codensity_kleisli(const FinFunctor& f, long long cap) {
  Cat a = f.src, c = f.trg;
  Homs hc = all_homs(c);
  OpProd base = op_prod(a, a);
  int nao = a->n_obj(), nam = a->n_mor(), nco = c->n_obj();
  std::vector<std::vector<EndResult>> ends(nco, std::vector<EndResult>(nco));
  for (int x = 0; x < nco; ++x)
    for (int y = 0; y < nco; ++y) {
      SetFunctor t;
      t.base = base.prod.cat;
      t.ob.resize(t.base->n_obj());
      for (int p = 0; p < nao; ++p)
        for (int q = 0; q < nao; ++q)
          t.ob[base.ob(p, q)] = function_set(hc.set[y][f.ob(p)], hc.set[x][f.ob(q)]);
      t.mo.resize(t.base->n_mor());
      for (int u = 0; u < nam; ++u)
        for (int v = 0; v < nam; ++v) {
          int p1 = a->trg(u), q1 = a->src(v), q2 = a->trg(v);
          int p2 = a->src(u);
          std::vector<int>& tab = t.mo[base.mo(u, v)];
          tab.resize(t.ob[base.ob(p1, q1)].size());
          const std::vector<int>& dom2 = hc.mors[y][f.ob(p2)];
          for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
            std::vector<int> imgs = function_images(hc.set[y][f.ob(p1)], hc.set[x][f.ob(q1)], fn);
            std::vector<int> imgs2(dom2.size());
            for (int gp = 0; gp < static_cast<int>(dom2.size()); ++gp) {
              int mid = hc.mors[x][f.ob(q1)][imgs[hc.pos[c->compose(f.mo(u), dom2[gp])]]];
              imgs2[gp] = hc.pos[c->compose(f.mo(v), mid)];
            }
            tab[fn] = function_index(hc.set[y][f.ob(p2)], hc.set[x][f.ob(q2)], imgs2);
          }
        }
      ends[x][y] = end_of(make_bifunctor(base, bless_setfunctor(std::move(t))), cap);
    }
  FinCategory s;
  s.name = "Kl(" + c->name + ")";
  s.objects = c->objects;
  std::vector<std::vector<int>> offset(nco, std::vector<int>(nco));
  for (int x = 0; x < nco; ++x)
    for (int y = 0; y < nco; ++y) {
      offset[x][y] = static_cast<int>(s.morphisms.size());
      for (int i = 0; i < ends[x][y].carrier.size(); ++i) {
        FinCategory::Mor m;
        m.id = c->objects[x] + ">" + c->objects[y] + ":" + ends[x][y].carrier.elems[i];
        m.src = x;
        m.trg = y;
        s.morphisms.push_back(m);
      }
    }
  s.identity.resize(nco);
  for (int x = 0; x < nco; ++x) {
    std::vector<int> fam(nao);
    for (int p = 0; p < nao; ++p) {
      std::vector<int> imgs(hc.set[x][f.ob(p)].size());
      for (int gp = 0; gp < static_cast<int>(imgs.size()); ++gp) imgs[gp] = gp;
      fam[p] = function_index(hc.set[x][f.ob(p)], hc.set[x][f.ob(p)], imgs);
    }
    int i = ends[x][x].find_family(fam);
    if (i < 0) throw std::runtime_error("codensity identity escapes the end");
    s.identity[x] = offset[x][x] + i;
  }
  s.comp.assign(s.morphisms.size(), std::vector<int>(s.morphisms.size(), -1));
  for (int x = 0; x < nco; ++x)
    for (int y = 0; y < nco; ++y)
      for (int i = 0; i < ends[x][y].carrier.size(); ++i)
        for (int z = 0; z < nco; ++z)
          for (int j = 0; j < ends[y][z].carrier.size(); ++j) {
            std::vector<int> fam(nao);
            for (int p = 0; p < nao; ++p) {
              std::vector<int> in1 = function_images(hc.set[y][f.ob(p)], hc.set[x][f.ob(p)],
                                                     ends[x][y].families[i][p]);
              std::vector<int> in2 = function_images(hc.set[z][f.ob(p)], hc.set[y][f.ob(p)],
                                                     ends[y][z].families[j][p]);
              std::vector<int> imgs(in2.size());
              for (int gp = 0; gp < static_cast<int>(in2.size()); ++gp)
                imgs[gp] = in1[in2[gp]];
              fam[p] = function_index(hc.set[z][f.ob(p)], hc.set[x][f.ob(p)], imgs);
            }
            int r = ends[x][z].find_family(fam);
            if (r < 0) throw std::runtime_error("codensity composite escapes the end");
            s.comp[offset[y][z] + j][offset[x][y] + i] = offset[x][z] + r;
          }
  Caps caps;
  caps.max_objects = std::max(64, static_cast<int>(s.objects.size()));
  caps.max_morphisms = std::max(512, static_cast<int>(s.morphisms.size()));
  KleisliResult out;
  out.cat = bless(std::move(s), caps);
  FinFunctor emb;
  emb.src = c;
  emb.trg = out.cat;
  for (int x = 0; x < nco; ++x) emb.on_obj.push_back(x);
  for (int m = 0; m < c->n_mor(); ++m) {
    int x = c->src(m), y = c->trg(m);
    std::vector<int> fam(nao);
    for (int p = 0; p < nao; ++p) {
      const std::vector<int>& dom = hc.mors[y][f.ob(p)];
      std::vector<int> imgs(dom.size());
      for (int gp = 0; gp < static_cast<int>(dom.size()); ++gp)
        imgs[gp] = hc.pos[c->compose(dom[gp], m)];
      fam[p] = function_index(hc.set[y][f.ob(p)], hc.set[x][f.ob(p)], imgs);
    }
    int i = ends[x][y].find_family(fam);
    if (i < 0) throw std::runtime_error("codensity unit escapes the end");
    emb.on_mor.push_back(offset[x][y] + i);
  }
  out.embed = bless_functor(emb);
  return out;
}

CoendResult weighted_colimit(Cat c, const SetFunctor& w, const SetFunctor& f) {
  if (!op_shaped(c, w.base)) throw ShapeMismatch("colimit weight must be a presheaf on the base");
  if (f.base != c) throw ShapeMismatch("diagram must live on the base");
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(t.base->n_obj());
  for (int a = 0; a < c->n_obj(); ++a)
    for (int b = 0; b < c->n_obj(); ++b) t.ob[base.ob(a, b)] = product_set(w.ob[a], f.ob[b]);
  t.mo.resize(t.base->n_mor());
  for (int u = 0; u < c->n_mor(); ++u)
    for (int v = 0; v < c->n_mor(); ++v) {
      int a1 = c->trg(u), b1 = c->src(v), b2 = c->trg(v);
      std::vector<int>& tab = t.mo[base.mo(u, v)];
      tab.resize(t.ob[base.ob(a1, b1)].size());
      int nf1 = f.ob[b1].size(), nf2 = f.ob[b2].size();
      for (int x = 0; x < w.ob[a1].size(); ++x)
        for (int y = 0; y < nf1; ++y) tab[x * nf1 + y] = w.mo[u][x] * nf2 + f.mo[v][y];
    }
  return coend_of(make_bifunctor(base, bless_setfunctor(std::move(t))));
}

EndResult weighted_limit(Cat c, const SetFunctor& w, const SetFunctor& f, long long cap) {
  if (w.base != c || f.base != c) throw ShapeMismatch("weight and diagram must live on the base");
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(t.base->n_obj());
  for (int a = 0; a < c->n_obj(); ++a)
    for (int b = 0; b < c->n_obj(); ++b) t.ob[base.ob(a, b)] = function_set(w.ob[a], f.ob[b]);
  t.mo.resize(t.base->n_mor());
  for (int u = 0; u < c->n_mor(); ++u)
    for (int v = 0; v < c->n_mor(); ++v) {
      int a1 = c->trg(u), b1 = c->src(v);
      int a2 = c->src(u), b2 = c->trg(v);
      std::vector<int>& tab = t.mo[base.mo(u, v)];
      tab.resize(t.ob[base.ob(a1, b1)].size());
      for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
        std::vector<int> imgs = function_images(w.ob[a1], f.ob[b1], fn);
        std::vector<int> imgs2(w.ob[a2].size());
        for (int x = 0; x < w.ob[a2].size(); ++x) imgs2[x] = f.mo[v][imgs[w.mo[u][x]]];
        tab[fn] = function_index(w.ob[a2], f.ob[b2], imgs2);
      }
    }
  return end_of(make_bifunctor(base, bless_setfunctor(std::move(t))), cap);
}

Witness weighted_limit_is_nat(Cat c, const SetFunctor& w, const SetFunctor& f, long long cap) {
  EndResult lim = weighted_limit(c, w, f, cap);
  std::vector<SetNatComp> nats = all_setnats(w, f, cap);
  FinSet rhs = indexed_set("t", static_cast<int>(nats.size()));
  std::vector<int> fwd(lim.carrier.size()), bwd(nats.size());
  for (int i = 0; i < lim.carrier.size(); ++i) {
    SetNatComp t(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a)
      t[a] = function_images(w.ob[a], f.ob[a], lim.families[i][a]);
    fwd[i] = locate_nat(nats, t);
    if (fwd[i] < 0) return fail_witness(lim.carrier, rhs, "end family is not natural");
  }
  for (int j = 0; j < static_cast<int>(nats.size()); ++j) {
    std::vector<int> fam(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) fam[a] = function_index(w.ob[a], f.ob[a], nats[j][a]);
    bwd[j] = lim.find_family(fam);
    if (bwd[j] < 0) return fail_witness(lim.carrier, rhs, "natural family escapes the end");
  }
  return make_witness(lim.carrier, rhs, std::move(fwd), std::move(bwd));
}

Witness weighted_limit_via_elements(Cat c, const SetFunctor& w, const SetFunctor& f,
                                    long long cap) {
  EndResult lim = weighted_limit(c, w, f, cap);
  ElementsCat elt = category_of_elements(w);
  LimitResult con = limit_of(restrict_along(elt.proj, f), cap);
  int nob = static_cast<int>(elt.obj_elt.size());
  std::vector<int> fwd(lim.carrier.size()), bwd(con.carrier.size());
  for (int i = 0; i < lim.carrier.size(); ++i) {
    std::vector<int> fam(nob);
    for (int o = 0; o < nob; ++o) {
      auto [c0, u] = elt.obj_elt[o];
      fam[o] = function_images(w.ob[c0], f.ob[c0], lim.families[i][c0])[u];
    }
    fwd[i] = con.find_family(fam);
    if (fwd[i] < 0)
      return fail_witness(lim.carrier, con.carrier, "weighted family does not give a cone");
  }
  for (int j = 0; j < con.carrier.size(); ++j) {
    std::vector<int> fam(c->n_obj());
    for (int c0 = 0; c0 < c->n_obj(); ++c0) {
      std::vector<int> imgs(w.ob[c0].size());
      for (int u = 0; u < w.ob[c0].size(); ++u) imgs[u] = con.families[j][elt.obj_ix[c0][u]];
      fam[c0] = function_index(w.ob[c0], f.ob[c0], imgs);
    }
    bwd[j] = lim.find_family(fam);
    if (bwd[j] < 0)
      return fail_witness(lim.carrier, con.carrier, "cone does not give a weighted family");
  }
  return make_witness(lim.carrier, con.carrier, std::move(fwd), std::move(bwd));
}

PointwiseIso copresheaf_as_colimit_of_representables(const SetFunctor& w) {
  Cat c = w.base;
  Homs hm = all_homs(c);
  ElementsCat elt = category_of_elements(w);
  Cat kop = opposite(elt.cat);
  int nob = static_cast<int>(elt.obj_elt.size());
  PointwiseIso out;
  out.ok = true;
  std::vector<ColimitResult> cols;
  for (int b = 0; b < c->n_obj(); ++b) {
    SetFunctor dg;
    dg.base = kop;
    dg.ob.resize(nob);
    for (int o = 0; o < nob; ++o) dg.ob[o] = hm.set[elt.obj_elt[o].first][b];
    dg.mo.resize(kop->n_mor());
    for (int m = 0; m < kop->n_mor(); ++m) {
      int g = elt.mor_lift[m].first;
      int a2 = c->trg(g);
      const std::vector<int>& homs2 = hm.mors[a2][b];
      std::vector<int>& tab = dg.mo[m];
      tab.resize(homs2.size());
      for (int kp = 0; kp < static_cast<int>(homs2.size()); ++kp)
        tab[kp] = hm.pos[c->compose(homs2[kp], g)];
    }
    ColimitResult co = colimit_of(bless_setfunctor(std::move(dg)));
    std::vector<int> fwd(co.carrier.size(), -1);
    bool constant = true;
    for (int o = 0; o < nob && constant; ++o) {
      auto [a, u] = elt.obj_elt[o];
      const std::vector<int>& homs = hm.mors[a][b];
      for (int kp = 0; kp < static_cast<int>(homs.size()); ++kp) {
        int cls = co.cocone[o][kp];
        int val = w.mo[homs[kp]][u];
        if (fwd[cls] < 0)
          fwd[cls] = val;
        else if (fwd[cls] != val) {
          constant = false;
          break;
        }
      }
    }
    Witness wit;
    if (!constant)
      wit = fail_witness(co.carrier, w.ob[b], "evaluation is not constant on classes");
    else {
      std::vector<int> bwd(w.ob[b].size());
      for (int v = 0; v < w.ob[b].size(); ++v)
        bwd[v] = co.cocone[elt.obj_ix[b][v]][hm.pos[c->id_of(b)]];
      wit = make_witness(co.carrier, w.ob[b], std::move(fwd), std::move(bwd));
    }
    fold_reason(out, wit, "at " + c->objects[b]);
    cols.push_back(std::move(co));
    out.at.push_back(std::move(wit));
  }
  out.natural = out.ok;
  if (out.ok)
    for (int g = 0; g < c->n_mor() && out.natural; ++g) {
      int b = c->src(g), b2 = c->trg(g);
      for (int o = 0; o < nob && out.natural; ++o) {
        int a = elt.obj_elt[o].first;
        const std::vector<int>& homs = hm.mors[a][b];
        for (int kp = 0; kp < static_cast<int>(homs.size()); ++kp) {
          int lhs = w.mo[g][out.at[b].fwd[cols[b].cocone[o][kp]]];
          int rhs = out.at[b2].fwd[cols[b2].cocone[o][hm.pos[c->compose(g, homs[kp])]]];
          if (lhs != rhs) {
            out.natural = false;
            out.ok = false;
            out.reason = "gluing not natural along " + c->morphisms[g].id;
            break;
          }
        }
      }
    }
  return out;
}

ElementsColimitResult elements_as_colimit(const SetFunctor& w) {
  Cat c = w.base;
  ElementsCat elt = category_of_elements(w);
  std::vector<Coslice> cos;
  std::vector<std::vector<int>> obj_at(c->n_obj());  // coslice object per C-morphism
  std::vector<std::map<std::pair<int, int>, int>> mor_at(c->n_obj());  // (h, f) -> coslice mor
  for (int a = 0; a < c->n_obj(); ++a) {
    cos.push_back(coslice(c, a));
    obj_at[a].assign(c->n_mor(), -1);
    for (int o = 0; o < cos[a].cat->n_obj(); ++o) obj_at[a][cos[a].obj_mor[o]] = o;
    for (int m = 0; m < cos[a].cat->n_mor(); ++m)
      mor_at[a][{cos[a].proj.on_mor[m], cos[a].obj_mor[cos[a].cat->src(m)]}] = m;
  }
  std::vector<std::vector<int>> ooff(c->n_obj()), moff(c->n_obj());
  FinCategory s;
  s.name = "glue(" + c->name + ")";
  for (int a = 0; a < c->n_obj(); ++a) {
    ooff[a].resize(w.ob[a].size());
    moff[a].resize(w.ob[a].size());
    for (int u = 0; u < w.ob[a].size(); ++u) {
      std::string tag = "(" + c->objects[a] + "#" + w.ob[a].elems[u] + "):";
      ooff[a][u] = static_cast<int>(s.objects.size());
      moff[a][u] = static_cast<int>(s.morphisms.size());
      for (const auto& o : cos[a].cat->objects) s.objects.push_back(tag + o);
      for (const auto& m : cos[a].cat->morphisms) {
        FinCategory::Mor mm;
        mm.id = tag + m.id;
        mm.src = ooff[a][u] + m.src;
        mm.trg = ooff[a][u] + m.trg;
        s.morphisms.push_back(mm);
      }
      for (int o = 0; o < cos[a].cat->n_obj(); ++o)
        s.identity.push_back(moff[a][u] + cos[a].cat->id_of(o));
    }
  }
  s.comp.assign(s.morphisms.size(), std::vector<int>(s.morphisms.size(), -1));
  for (int a = 0; a < c->n_obj(); ++a)
    for (int u = 0; u < w.ob[a].size(); ++u)
      for (int m2 = 0; m2 < cos[a].cat->n_mor(); ++m2)
        for (int m1 = 0; m1 < cos[a].cat->n_mor(); ++m1) {
          int r = cos[a].cat->compose(m2, m1);
          if (r >= 0) s.comp[moff[a][u] + m2][moff[a][u] + m1] = moff[a][u] + r;
        }
  ElementsColimitResult out;
  Caps caps;
  caps.max_objects = std::max(64, static_cast<int>(s.objects.size()));
  caps.max_morphisms = std::max(512, static_cast<int>(s.morphisms.size()));
  out.total = bless(std::move(s), caps);
  std::map<std::pair<int, int>, int> elift;  // (C-morphism, source element object) -> morphism
  for (int m = 0; m < elt.cat->n_mor(); ++m)
    elift[{elt.mor_lift[m].first, elt.cat->src(m)}] = m;
  FinFunctor th;
  th.src = out.total;
  th.trg = elt.cat;
  th.on_obj.resize(out.total->n_obj());
  th.on_mor.resize(out.total->n_mor());
  for (int a = 0; a < c->n_obj(); ++a)
    for (int u = 0; u < w.ob[a].size(); ++u) {
      for (int o = 0; o < cos[a].cat->n_obj(); ++o) {
        int f = cos[a].obj_mor[o];
        th.on_obj[ooff[a][u] + o] = elt.obj_ix[c->trg(f)][w.mo[f][u]];
      }
      for (int m = 0; m < cos[a].cat->n_mor(); ++m) {
        int h = cos[a].proj.on_mor[m];
        th.on_mor[moff[a][u] + m] =
            elift.at({h, th.on_obj[ooff[a][u] + cos[a].cat->src(m)]});
      }
    }
  out.collapse = bless_functor(th);
  Union ou(out.total->n_obj()), mu(out.total->n_mor());
  for (int f = 0; f < c->n_mor(); ++f) {
    int a = c->src(f), b = c->trg(f);
    for (int u = 0; u < w.ob[a].size(); ++u) {
      int v = w.mo[f][u];
      for (int o = 0; o < cos[b].cat->n_obj(); ++o) {
        int g = cos[b].obj_mor[o];
        ou.unite(ooff[b][v] + o, ooff[a][u] + obj_at[a][c->compose(g, f)]);
      }
      for (int m = 0; m < cos[b].cat->n_mor(); ++m) {
        int h = cos[b].proj.on_mor[m];
        int g = cos[b].obj_mor[cos[b].cat->src(m)];
        mu.unite(moff[b][v] + m, moff[a][u] + mor_at[a].at({h, c->compose(g, f)}));
      }
    }
  }
  out.ok = true;
  std::vector<int> oreps, mreps;
  std::vector<int> ocls = ou.classes(&oreps), mcls = mu.classes(&mreps);
  std::vector<int> ofwd(oreps.size(), -1), mfwd(mreps.size(), -1);
  for (int o = 0; o < out.total->n_obj(); ++o) {
    int& slot = ofwd[ocls[o]];
    if (slot < 0)
      slot = th.on_obj[o];
    else if (slot != th.on_obj[o]) {
      out.ok = false;
      out.reason = "collapse is not constant on the glued object " + out.total->objects[o];
    }
  }
  for (int m = 0; m < out.total->n_mor(); ++m) {
    int& slot = mfwd[mcls[m]];
    if (slot < 0)
      slot = th.on_mor[m];
    else if (slot != th.on_mor[m]) {
      out.ok = false;
      out.reason = "collapse is not constant on the glued morphism " + out.total->morphisms[m].id;
    }
  }
  FinSet olhs, mlhs, orhs, mrhs;
  for (int r : oreps) olhs.elems.push_back(out.total->objects[r]);
  for (int r : mreps) mlhs.elems.push_back(out.total->morphisms[r].id);
  orhs.elems = elt.cat->objects;
  for (const auto& m : elt.cat->morphisms) mrhs.elems.push_back(m.id);
  std::vector<int> obwd(elt.cat->n_obj()), mbwd(elt.cat->n_mor());
  for (int eo = 0; eo < elt.cat->n_obj(); ++eo) {
    auto [b, v] = elt.obj_elt[eo];
    obwd[eo] = ocls[ooff[b][v] + obj_at[b][c->id_of(b)]];
  }
  for (int em = 0; em < elt.cat->n_mor(); ++em) {
    auto [a, u] = elt.obj_elt[elt.cat->src(em)];
    int h = elt.mor_lift[em].first;
    mbwd[em] = mcls[moff[a][u] + mor_at[a].at({h, c->id_of(a)})];
  }
  out.objects = out.ok ? make_witness(olhs, orhs, ofwd, obwd)
                       : fail_witness(olhs, orhs, out.reason);
  out.morphisms = out.ok ? make_witness(mlhs, mrhs, mfwd, mbwd)
                         : fail_witness(mlhs, mrhs, out.reason);
  if (out.ok && (!out.objects.ok || !out.morphisms.ok)) {
    out.ok = false;
    out.reason = out.objects.ok ? out.morphisms.reason : out.objects.reason;
  }
  return out;
}

std::vector<int> weighted_colimit_comparison(Cat c, const SetFunctor& w, const SetFunctor& f) {
  CoendResult wc = weighted_colimit(c, w, f);
  ColimitResult con = colimit_of(f);
  std::vector<int> out(wc.carrier.size(), -1);
  for (int a = 0; a < c->n_obj(); ++a) {
    int nf = f.ob[a].size();
    for (int x = 0; x < w.ob[a].size(); ++x)
      for (int y = 0; y < nf; ++y) {
        int cls = wc.inject[a][x * nf + y];
        int val = con.cocone[a][y];
        if (out[cls] < 0)
          out[cls] = val;
        else if (out[cls] != val)
          throw std::runtime_error("collapse is not constant on classes");
      }
  }
  return out;
}

std::vector<int> weighted_limit_comparison(Cat c, const SetFunctor& w, const SetFunctor& f,
                                           long long cap) {
  LimitResult con = limit_of(f, cap);
  EndResult wl = weighted_limit(c, w, f, cap);
  std::vector<int> out(con.carrier.size());
  for (int j = 0; j < con.carrier.size(); ++j) {
    std::vector<int> fam(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      std::vector<int> imgs(w.ob[a].size(), con.families[j][a]);
      fam[a] = function_index(w.ob[a], f.ob[a], imgs);
    }
    out[j] = wl.find_family(fam);
    if (out[j] < 0) throw std::runtime_error("constant family escapes the weighted limit");
  }
  return out;
}

Witness weighted_limit_reindex(const FinFunctor& j, const SetFunctor& w, const SetFunctor& f,
                               long long cap) {
  if (w.base != j.src || f.base != j.trg) throw ShapeMismatch("weight and diagram do not match the functor");
  Cat c = j.src, d = j.trg;
  Homs hd = all_homs(d);
  EndResult lim1 = weighted_limit(c, w, restrict_along(j, f), cap);
  LanResult lw = lan(j, w);
  EndResult lim2 = weighted_limit(d, lw.value, f, cap);
  std::vector<int> fwd(lim1.carrier.size(), -1), bwd(lim2.carrier.size(), -1);
  for (int i = 0; i < lim1.carrier.size(); ++i) {
    std::vector<int> fam(d->n_obj());
    for (int dd = 0; dd < d->n_obj(); ++dd) {
      std::vector<int> imgs(lw.value.ob[dd].size(), -1);
      for (int c0 = 0; c0 < c->n_obj(); ++c0) {
        int nw = w.ob[c0].size();
        const std::vector<int>& homs = hd.mors[j.ob(c0)][dd];
        std::vector<int> wimgs = function_images(w.ob[c0], f.ob[j.ob(c0)], lim1.families[i][c0]);
        for (int hp = 0; hp < static_cast<int>(homs.size()); ++hp)
          for (int x = 0; x < nw; ++x) {
            int cls = lw.pts[dd].inject[c0][hp * nw + x];
            int val = f.mo[homs[hp]][wimgs[x]];
            if (imgs[cls] < 0)
              imgs[cls] = val;
            else if (imgs[cls] != val)
              return fail_witness(lim1.carrier, lim2.carrier,
                                  "pairing is not constant on classes");
          }
      }
      fam[dd] = function_index(lw.value.ob[dd], f.ob[dd], imgs);
    }
    fwd[i] = lim2.find_family(fam);
    if (fwd[i] < 0)
      return fail_witness(lim1.carrier, lim2.carrier, "pairing escapes the reindexed limit");
  }
  for (int i = 0; i < lim2.carrier.size(); ++i) {
    std::vector<int> fam(c->n_obj());
    for (int c0 = 0; c0 < c->n_obj(); ++c0) {
      int dd = j.ob(c0);
      int idp = hd.pos[d->id_of(dd)];
      int nw = w.ob[c0].size();
      std::vector<int> vimgs = function_images(lw.value.ob[dd], f.ob[dd], lim2.families[i][dd]);
      std::vector<int> imgs(nw);
      for (int x = 0; x < nw; ++x) imgs[x] = vimgs[lw.pts[dd].inject[c0][idp * nw + x]];
      fam[c0] = function_index(w.ob[c0], f.ob[j.ob(c0)], imgs);
    }
    bwd[i] = lim1.find_family(fam);
    if (bwd[i] < 0)
      return fail_witness(lim1.carrier, lim2.carrier, "restriction escapes the original limit");
  }
  return make_witness(lim1.carrier, lim2.carrier, std::move(fwd), std::move(bwd));
}

Witness end_as_hom_weighted_limit(const Bifunctor& t, long long cap) {
  if (t.base.A != t.base.B) throw ShapeMismatch("hom weight needs an integrand on op(C) x C");
  Cat c = t.base.A;
  Homs hm = all_homs(c);
  Cat pc = t.base.prod.cat;
  SetFunctor w;
  w.base = pc;
  w.ob.resize(pc->n_obj());
  for (int p = 0; p < pc->n_obj(); ++p) {
    auto [aa, bb] = t.base.ob_parts(p);
    w.ob[p] = hm.set[aa][bb];
  }
  w.mo.resize(pc->n_mor());
  for (int m = 0; m < pc->n_mor(); ++m) {
    auto [u, v] = t.base.mo_parts(m);
    const std::vector<int>& homs = hm.mors[c->trg(u)][c->src(v)];
    w.mo[m].resize(homs.size());
    for (int kp = 0; kp < static_cast<int>(homs.size()); ++kp)
      w.mo[m][kp] = hm.pos[c->compose(v, c->compose(homs[kp], u))];
  }
  EndResult e1 = end_of(t, cap);
  EndResult wl = weighted_limit(pc, bless_setfunctor(std::move(w)), t.t, cap);
  std::vector<int> fwd(e1.carrier.size()), bwd(wl.carrier.size());
  for (int i = 0; i < e1.carrier.size(); ++i) {
    std::vector<int> fam(pc->n_obj());
    for (int p = 0; p < pc->n_obj(); ++p) {
      auto [aa, bb] = t.base.ob_parts(p);
      const std::vector<int>& homs = hm.mors[aa][bb];
      std::vector<int> imgs(homs.size());
      for (int kp = 0; kp < static_cast<int>(homs.size()); ++kp)
        imgs[kp] = t.act(c->id_of(aa), homs[kp], e1.families[i][aa]);
      fam[p] = function_index(hm.set[aa][bb], t.t.ob[p], imgs);
    }
    fwd[i] = wl.find_family(fam);
    if (fwd[i] < 0)
      return fail_witness(e1.carrier, wl.carrier, "wedge family is not hom-weighted");
  }
  for (int i = 0; i < wl.carrier.size(); ++i) {
    std::vector<int> fam(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      int p = t.base.ob(a, a);
      fam[a] = function_images(hm.set[a][a], t.t.ob[p], wl.families[i][p])[hm.pos[c->id_of(a)]];
    }
    bwd[i] = e1.find_family(fam);
    if (bwd[i] < 0)
      return fail_witness(e1.carrier, wl.carrier, "hom-weighted family is not a wedge");
  }
  return make_witness(e1.carrier, wl.carrier, std::move(fwd), std::move(bwd));
}

Witness coend_as_hom_weighted_colimit(const Bifunctor& t) {
  if (t.base.A != t.base.B) throw ShapeMismatch("hom weight needs an integrand on op(C) x C");
  Cat c = t.base.A;
  Homs hm = all_homs(c);
  Cat pc = t.base.prod.cat;
  SetFunctor w;
  w.base = opposite(pc);
  w.ob.resize(pc->n_obj());
  for (int p = 0; p < pc->n_obj(); ++p) {
    auto [aa, bb] = t.base.ob_parts(p);
    w.ob[p] = hm.set[bb][aa];
  }
  w.mo.resize(pc->n_mor());
  for (int m = 0; m < pc->n_mor(); ++m) {
    auto [u, v] = t.base.mo_parts(m);
    const std::vector<int>& dom = hm.mors[c->trg(v)][c->src(u)];
    w.mo[m].resize(dom.size());
    for (int kp = 0; kp < static_cast<int>(dom.size()); ++kp)
      w.mo[m][kp] = hm.pos[c->compose(u, c->compose(dom[kp], v))];
  }
  CoendResult wc = weighted_colimit(pc, bless_setfunctor(std::move(w)), t.t);
  CoendResult co = coend_of(t);
  std::vector<int> fwd(wc.carrier.size(), -1), bwd(co.carrier.size());
  for (int p = 0; p < pc->n_obj(); ++p) {
    auto [aa, bb] = t.base.ob_parts(p);
    const std::vector<int>& homs = hm.mors[bb][aa];
    int nt = t.t.ob[p].size();
    for (int kp = 0; kp < static_cast<int>(homs.size()); ++kp)
      for (int x = 0; x < nt; ++x) {
        int cls = wc.inject[p][kp * nt + x];
        int val = co.inject[bb][t.act(homs[kp], c->id_of(bb), x)];
        if (fwd[cls] < 0)
          fwd[cls] = val;
        else if (fwd[cls] != val)
          return fail_witness(wc.carrier, co.carrier, "collapse is not constant on classes");
      }
  }
  for (int i = 0; i < co.carrier.size(); ++i) {
    auto [cc, xx] = co.class_rep[i];
    int p = t.base.ob(cc, cc);
    bwd[i] = wc.inject[p][hm.pos[c->id_of(cc)] * t.t.ob[p].size() + xx];
  }
  return make_witness(wc.carrier, co.carrier, std::move(fwd), std::move(bwd));
}

Witness hom_commutes_with_weighted_limit(Cat c, const SetFunctor& w, const SetFunctor& f,
                                         const FinSet& x, long long cap) {
  EndResult lim = weighted_limit(c, w, f, cap);
  FinSet lhs = function_set(x, lim.carrier);
  SetFunctor fx;
  fx.base = c;
  fx.ob.resize(c->n_obj());
  for (int a = 0; a < c->n_obj(); ++a) fx.ob[a] = function_set(x, f.ob[a]);
  fx.mo.resize(c->n_mor());
  for (int m = 0; m < c->n_mor(); ++m) {
    int a = c->src(m), b = c->trg(m);
    fx.mo[m].resize(fx.ob[a].size());
    for (int fn = 0; fn < fx.ob[a].size(); ++fn) {
      std::vector<int> imgs = function_images(x, f.ob[a], fn);
      for (int& i : imgs) i = f.mo[m][i];
      fx.mo[m][fn] = function_index(x, f.ob[b], imgs);
    }
  }
  EndResult lim2 = weighted_limit(c, w, bless_setfunctor(fx), cap);
  std::vector<int> fwd(lhs.size()), bwd(lim2.carrier.size());
  for (int k = 0; k < lhs.size(); ++k) {
    std::vector<int> ki = function_images(x, lim.carrier, k);
    std::vector<int> fam(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      std::vector<int> imgs(w.ob[a].size());
      for (int wv = 0; wv < w.ob[a].size(); ++wv) {
        std::vector<int> per(x.size());
        for (int xi = 0; xi < x.size(); ++xi)
          per[xi] = function_images(w.ob[a], f.ob[a], lim.families[ki[xi]][a])[wv];
        imgs[wv] = function_index(x, f.ob[a], per);
      }
      fam[a] = function_index(w.ob[a], fx.ob[a], imgs);
    }
    fwd[k] = lim2.find_family(fam);
    if (fwd[k] < 0)
      return fail_witness(lhs, lim2.carrier, "pointwise families are not a weighted family");
  }
  for (int j = 0; j < lim2.carrier.size(); ++j) {
    std::vector<int> per(x.size());
    for (int xi = 0; xi < x.size(); ++xi) {
      std::vector<int> fam(c->n_obj());
      for (int a = 0; a < c->n_obj(); ++a) {
        std::vector<int> imgs(w.ob[a].size());
        for (int wv = 0; wv < w.ob[a].size(); ++wv) {
          int fn = function_images(w.ob[a], fx.ob[a], lim2.families[j][a])[wv];
          imgs[wv] = function_images(x, f.ob[a], fn)[xi];
        }
        fam[a] = function_index(w.ob[a], f.ob[a], imgs);
      }
      per[xi] = lim.find_family(fam);
      if (per[xi] < 0)
        return fail_witness(lhs, lim2.carrier, "slice family escapes the weighted limit");
    }
    bwd[j] = function_index(x, lim.carrier, per);
  }
  return make_witness(lhs, lim2.carrier, std::move(fwd), std::move(bwd));
}

Witness weight_pushout_cocontinuity(Cat c, const SetFunctor& w0, const SetFunctor& w1,
                                    const SetFunctor& w2, const SetNatComp& t1,
                                    const SetNatComp& t2, const SetFunctor& f) {
  Cat host = w0.base;
  if (w1.base != host || w2.base != host)
    throw ShapeMismatch("the three weights must share one presheaf base");
  for (int m = 0; m < host->n_mor(); ++m) {
    int a = host->src(m), b = host->trg(m);
    for (int z = 0; z < w0.ob[a].size(); ++z) {
      if (t1[b][w0.mo[m][z]] != w1.mo[m][t1[a][z]] ||
          t2[b][w0.mo[m][z]] != w2.mo[m][t2[a][z]])
        throw ShapeMismatch("span legs are not natural");
    }
  }
  int no = c->n_obj();
  std::vector<std::vector<int>> cls(no);
  std::vector<std::vector<int>> reps(no);
  SetFunctor p;
  p.base = host;
  p.ob.resize(no);
  for (int a = 0; a < no; ++a) {
    int n1 = w1.ob[a].size();
    Union u(n1 + w2.ob[a].size());
    for (int z = 0; z < w0.ob[a].size(); ++z) u.unite(t1[a][z], n1 + t2[a][z]);
    cls[a] = u.classes(&reps[a]);
    for (int r = 0; r < static_cast<int>(reps[a].size()); ++r)
      p.ob[a].elems.push_back("p" + std::to_string(r));
  }
  p.mo.resize(host->n_mor());
  for (int m = 0; m < host->n_mor(); ++m) {
    int a = host->src(m), b = host->trg(m);
    int n1a = w1.ob[a].size(), n1b = w1.ob[b].size();
    p.mo[m].assign(reps[a].size(), -1);
    for (int i = 0; i < n1a + w2.ob[a].size(); ++i) {
      int img = i < n1a ? cls[b][w1.mo[m][i]] : cls[b][n1b + w2.mo[m][i - n1a]];
      int& slot = p.mo[m][cls[a][i]];
      if (slot < 0)
        slot = img;
      else if (slot != img)
        throw std::runtime_error("pushout weight action is not constant on classes");
    }
  }
  SetFunctor pw = bless_setfunctor(std::move(p));
  CoendResult a0 = weighted_colimit(c, w0, f);
  CoendResult a1 = weighted_colimit(c, w1, f);
  CoendResult a2 = weighted_colimit(c, w2, f);
  CoendResult ap = weighted_colimit(c, pw, f);
  std::vector<int> g1(a0.carrier.size(), -1), g2(a0.carrier.size(), -1);
  for (int a = 0; a < no; ++a) {
    int nf = f.ob[a].size();
    for (int z = 0; z < w0.ob[a].size(); ++z)
      for (int y = 0; y < nf; ++y) {
        int c0 = a0.inject[a][z * nf + y];
        int i1 = a1.inject[a][t1[a][z] * nf + y];
        int i2 = a2.inject[a][t2[a][z] * nf + y];
        if (g1[c0] < 0) g1[c0] = i1;
        if (g2[c0] < 0) g2[c0] = i2;
        if (g1[c0] != i1 || g2[c0] != i2)
          throw std::runtime_error("induced colimit maps are not constant on classes");
      }
  }
  Union qu(a1.carrier.size() + a2.carrier.size());
  for (int i = 0; i < a0.carrier.size(); ++i) qu.unite(g1[i], a1.carrier.size() + g2[i]);
  std::vector<int> qreps;
  std::vector<int> qcls = qu.classes(&qreps);
  FinSet q = indexed_set("q", static_cast<int>(qreps.size()));
  std::vector<int> fwd(ap.carrier.size(), -1), bwd(q.size(), -1);
  for (int a = 0; a < no; ++a) {
    int nf = f.ob[a].size();
    int n1 = w1.ob[a].size();
    for (int i = 0; i < n1 + w2.ob[a].size(); ++i)
      for (int y = 0; y < nf; ++y) {
        int clsp = ap.inject[a][cls[a][i] * nf + y];
        int side = i < n1 ? a1.inject[a][i * nf + y]
                          : static_cast<int>(a1.carrier.size()) +
                                a2.inject[a][(i - n1) * nf + y];
        int val = qcls[side];
        if (fwd[clsp] < 0)
          fwd[clsp] = val;
        else if (fwd[clsp] != val)
          return fail_witness(ap.carrier, q, "comparison is not constant on classes");
        if (bwd[val] < 0)
          bwd[val] = clsp;
        else if (bwd[val] != clsp)
          return fail_witness(ap.carrier, q, "comparison is not constant on classes");
      }
  }
  return make_witness(ap.carrier, q, std::move(fwd), std::move(bwd));
}

CoendResult functor_tensor(Cat c, const SetFunctor& f, const SetFunctor& g) {
  if (!op_shaped(c, f.base)) throw ShapeMismatch("left tensor factor must be a presheaf on the base");
  if (g.base != c) throw ShapeMismatch("right tensor factor must live on the base");
  OpProd base = op_prod(c, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(t.base->n_obj());
  for (int a = 0; a < c->n_obj(); ++a)
    for (int b = 0; b < c->n_obj(); ++b) t.ob[base.ob(a, b)] = product_set(f.ob[a], g.ob[b]);
  t.mo.resize(t.base->n_mor());
  for (int u = 0; u < c->n_mor(); ++u)
    for (int v = 0; v < c->n_mor(); ++v) {
      int a1 = c->trg(u), b1 = c->src(v), b2 = c->trg(v);
      std::vector<int>& tab = t.mo[base.mo(u, v)];
      tab.resize(t.ob[base.ob(a1, b1)].size());
      int ng1 = g.ob[b1].size(), ng2 = g.ob[b2].size();
      for (int x = 0; x < f.ob[a1].size(); ++x)
        for (int y = 0; y < ng1; ++y) tab[x * ng1 + y] = f.mo[u][x] * ng2 + g.mo[v][y];
    }
  return coend_of(make_bifunctor(base, bless_setfunctor(std::move(t))));
}

Witness tensor_hom_left(Cat c, const SetFunctor& f, const SetFunctor& g, const FinSet& h,
                        long long cap) {
  CoendResult ten = functor_tensor(c, f, g);
  FinSet lhs = function_set(ten.carrier, h);
  SetFunctor gh;
  gh.base = f.base;
  gh.ob.resize(c->n_obj());
  for (int a = 0; a < c->n_obj(); ++a) gh.ob[a] = function_set(g.ob[a], h);
  gh.mo.resize(c->n_mor());
  for (int m = 0; m < c->n_mor(); ++m) {
    int a = c->src(m), b = c->trg(m);
    gh.mo[m].resize(gh.ob[b].size());
    for (int fn = 0; fn < gh.ob[b].size(); ++fn) {
      std::vector<int> imgs = function_images(g.ob[b], h, fn);
      std::vector<int> imgs2(g.ob[a].size());
      for (int v = 0; v < g.ob[a].size(); ++v) imgs2[v] = imgs[g.mo[m][v]];
      gh.mo[m][fn] = function_index(g.ob[a], h, imgs2);
    }
  }
  std::vector<SetNatComp> nats = all_setnats(f, bless_setfunctor(std::move(gh)), cap);
  FinSet rhs = indexed_set("t", static_cast<int>(nats.size()));
  std::vector<int> fwd(lhs.size()), bwd(nats.size());
  for (int k = 0; k < lhs.size(); ++k) {
    std::vector<int> kim = function_images(ten.carrier, h, k);
    SetNatComp tau(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      int ng = g.ob[a].size();
      tau[a].resize(f.ob[a].size());
      for (int u = 0; u < f.ob[a].size(); ++u) {
        std::vector<int> imgs(ng);
        for (int v = 0; v < ng; ++v) imgs[v] = kim[ten.inject[a][u * ng + v]];
        tau[a][u] = function_index(g.ob[a], h, imgs);
      }
    }
    fwd[k] = locate_nat(nats, tau);
    if (fwd[k] < 0) return fail_witness(lhs, rhs, "curried map is not natural");
  }
  for (int j = 0; j < static_cast<int>(nats.size()); ++j) {
    std::vector<int> tab(ten.carrier.size(), -1);
    for (int a = 0; a < c->n_obj(); ++a) {
      int ng = g.ob[a].size();
      for (int u = 0; u < f.ob[a].size(); ++u) {
        std::vector<int> imgs = function_images(g.ob[a], h, nats[j][a][u]);
        for (int v = 0; v < ng; ++v) {
          int cls = ten.inject[a][u * ng + v];
          if (tab[cls] < 0)
            tab[cls] = imgs[v];
          else if (tab[cls] != imgs[v])
            return fail_witness(lhs, rhs, "uncurried map is not constant on classes");
        }
      }
    }
    bwd[j] = function_index(ten.carrier, h, tab);
  }
  return make_witness(lhs, rhs, std::move(fwd), std::move(bwd));
}

Witness tensor_hom_right(Cat c, const SetFunctor& f, const SetFunctor& g, const FinSet& h,
                         long long cap) {
  CoendResult ten = functor_tensor(c, f, g);
  FinSet lhs = function_set(ten.carrier, h);
  SetFunctor fh;
  fh.base = c;
  fh.ob.resize(c->n_obj());
  for (int a = 0; a < c->n_obj(); ++a) fh.ob[a] = function_set(f.ob[a], h);
  fh.mo.resize(c->n_mor());
  for (int m = 0; m < c->n_mor(); ++m) {
    int a = c->src(m), b = c->trg(m);
    fh.mo[m].resize(fh.ob[a].size());
    for (int fn = 0; fn < fh.ob[a].size(); ++fn) {
      std::vector<int> imgs = function_images(f.ob[a], h, fn);
      std::vector<int> imgs2(f.ob[b].size());
      for (int x = 0; x < f.ob[b].size(); ++x) imgs2[x] = imgs[f.mo[m][x]];
      fh.mo[m][fn] = function_index(f.ob[b], h, imgs2);
    }
  }
  std::vector<SetNatComp> nats = all_setnats(g, bless_setfunctor(std::move(fh)), cap);
  FinSet rhs = indexed_set("t", static_cast<int>(nats.size()));
  std::vector<int> fwd(lhs.size()), bwd(nats.size());
  for (int k = 0; k < lhs.size(); ++k) {
    std::vector<int> kim = function_images(ten.carrier, h, k);
    SetNatComp sig(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      int ng = g.ob[a].size();
      sig[a].resize(ng);
      for (int v = 0; v < ng; ++v) {
        std::vector<int> imgs(f.ob[a].size());
        for (int u = 0; u < f.ob[a].size(); ++u) imgs[u] = kim[ten.inject[a][u * ng + v]];
        sig[a][v] = function_index(f.ob[a], h, imgs);
      }
    }
    fwd[k] = locate_nat(nats, sig);
    if (fwd[k] < 0) return fail_witness(lhs, rhs, "curried map is not natural");
  }
  for (int j = 0; j < static_cast<int>(nats.size()); ++j) {
    std::vector<int> tab(ten.carrier.size(), -1);
    for (int a = 0; a < c->n_obj(); ++a) {
      int ng = g.ob[a].size();
      for (int v = 0; v < ng; ++v) {
        std::vector<int> imgs = function_images(f.ob[a], h, nats[j][a][v]);
        for (int u = 0; u < f.ob[a].size(); ++u) {
          int cls = ten.inject[a][u * ng + v];
          if (tab[cls] < 0)
            tab[cls] = imgs[u];
          else if (tab[cls] != imgs[u])
            return fail_witness(lhs, rhs, "uncurried map is not constant on classes");
        }
      }
    }
    bwd[j] = function_index(ten.carrier, h, tab);
  }
  return make_witness(lhs, rhs, std::move(fwd), std::move(bwd));
}

namespace {

struct IsbellHalf {
  SetFunctor value;
  std::vector<EndResult> pts;
};

IsbellHalf isbell_o_full(Cat c, const SetFunctor& x, long long cap) {
  if (!op_shaped(c, x.base)) throw ShapeMismatch("conjugation input must be a presheaf on the base");
  Homs hm = all_homs(c);
  OpProd base = op_prod(c, c);
  int no = c->n_obj(), nm = c->n_mor();
  IsbellHalf out;
  for (int d = 0; d < no; ++d) {
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) t.ob[base.ob(a, b)] = function_set(x.ob[b], hm.set[a][d]);
    t.mo.resize(t.base->n_mor());
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) {
        int a1 = c->trg(u), b1 = c->src(v);
        int a2 = c->src(u), b2 = c->trg(v);
        std::vector<int>& tab = t.mo[base.mo(u, v)];
        tab.resize(t.ob[base.ob(a1, b1)].size());
        for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
          std::vector<int> imgs = function_images(x.ob[b1], hm.set[a1][d], fn);
          std::vector<int> imgs2(x.ob[b2].size());
          for (int xx = 0; xx < x.ob[b2].size(); ++xx)
            imgs2[xx] = hm.pos[c->compose(hm.mors[a1][d][imgs[x.mo[v][xx]]], u)];
          tab[fn] = function_index(x.ob[b2], hm.set[a2][d], imgs2);
        }
      }
    out.pts.push_back(end_of(make_bifunctor(base, bless_setfunctor(std::move(t))), cap));
  }
  SetFunctor val;
  val.base = c;
  for (int d = 0; d < no; ++d) val.ob.push_back(out.pts[d].carrier);
  val.mo.resize(nm);
  for (int m = 0; m < nm; ++m) {
    int d1 = c->src(m), d2 = c->trg(m);
    val.mo[m].resize(out.pts[d1].carrier.size());
    for (int i = 0; i < out.pts[d1].carrier.size(); ++i) {
      std::vector<int> fam(no);
      for (int a = 0; a < no; ++a) {
        std::vector<int> imgs =
            function_images(x.ob[a], hm.set[a][d1], out.pts[d1].families[i][a]);
        std::vector<int> imgs2(imgs.size());
        for (int xx = 0; xx < static_cast<int>(imgs.size()); ++xx)
          imgs2[xx] = hm.pos[c->compose(m, hm.mors[a][d1][imgs[xx]])];
        fam[a] = function_index(x.ob[a], hm.set[a][d2], imgs2);
      }
      val.mo[m][i] = out.pts[d2].find_family(fam);
      if (val.mo[m][i] < 0) throw std::runtime_error("conjugate action escapes the end");
    }
  }
  out.value = bless_setfunctor(std::move(val));
  return out;
}

IsbellHalf isbell_spec_full(Cat c, Cat cop, const SetFunctor& y, long long cap) {
  if (!op_shaped(c, cop)) throw ShapeMismatch("carrier of the conjugate must be shaped like the opposite");
  if (y.base != c) throw ShapeMismatch("conjugation input must live on the base");
  Homs hm = all_homs(c);
  OpProd base = op_prod(c, c);
  int no = c->n_obj(), nm = c->n_mor();
  IsbellHalf out;
  for (int a = 0; a < no; ++a) {
    SetFunctor t;
    t.base = base.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int d1 = 0; d1 < no; ++d1)
      for (int d2 = 0; d2 < no; ++d2)
        t.ob[base.ob(d1, d2)] = function_set(y.ob[d1], hm.set[a][d2]);
    t.mo.resize(t.base->n_mor());
    for (int u = 0; u < nm; ++u)
      for (int v = 0; v < nm; ++v) {
        int d1 = c->trg(u), e1 = c->src(v);
        int d2 = c->src(u), e2 = c->trg(v);
        std::vector<int>& tab = t.mo[base.mo(u, v)];
        tab.resize(t.ob[base.ob(d1, e1)].size());
        for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
          std::vector<int> imgs = function_images(y.ob[d1], hm.set[a][e1], fn);
          std::vector<int> imgs2(y.ob[d2].size());
          for (int yy = 0; yy < y.ob[d2].size(); ++yy)
            imgs2[yy] = hm.pos[c->compose(v, hm.mors[a][e1][imgs[y.mo[u][yy]]])];
          tab[fn] = function_index(y.ob[d2], hm.set[a][e2], imgs2);
        }
      }
    out.pts.push_back(end_of(make_bifunctor(base, bless_setfunctor(std::move(t))), cap));
  }
  SetFunctor val;
  val.base = cop;
  for (int a = 0; a < no; ++a) val.ob.push_back(out.pts[a].carrier);
  val.mo.resize(nm);
  for (int m = 0; m < nm; ++m) {
    int a1 = c->src(m), a2 = c->trg(m);
    val.mo[m].resize(out.pts[a2].carrier.size());
    for (int i = 0; i < out.pts[a2].carrier.size(); ++i) {
      std::vector<int> fam(no);
      for (int d = 0; d < no; ++d) {
        std::vector<int> imgs =
            function_images(y.ob[d], hm.set[a2][d], out.pts[a2].families[i][d]);
        std::vector<int> imgs2(imgs.size());
        for (int yy = 0; yy < static_cast<int>(imgs.size()); ++yy)
          imgs2[yy] = hm.pos[c->compose(hm.mors[a2][d][imgs[yy]], m)];
        fam[d] = function_index(y.ob[d], hm.set[a1][d], imgs2);
      }
      val.mo[m][i] = out.pts[a1].find_family(fam);
      if (val.mo[m][i] < 0) throw std::runtime_error("conjugate action escapes the end");
    }
  }
  out.value = bless_setfunctor(std::move(val));
  return out;
}

}  // namespace

SetFunctor isbell_o(Cat c, const SetFunctor& x, long long cap) {
  return isbell_o_full(c, x, cap).value;
}

SetFunctor isbell_spec(Cat c, Cat cop, const SetFunctor& y, long long cap) {
  return isbell_spec_full(c, cop, y, cap).value;
}

Witness isbell_adjunction(Cat c, const SetFunctor& x, const SetFunctor& y, long long cap) {
  Homs hm = all_homs(c);
  IsbellHalf ox = isbell_o_full(c, x, cap);
  IsbellHalf sy = isbell_spec_full(c, x.base, y, cap);
  std::vector<SetNatComp> lnat = all_setnats(x, sy.value, cap);
  std::vector<SetNatComp> rnat = all_setnats(y, ox.value, cap);
  FinSet lhs = indexed_set("t", static_cast<int>(lnat.size()));
  FinSet rhs = indexed_set("t", static_cast<int>(rnat.size()));
  std::vector<int> fwd(lnat.size()), bwd(rnat.size());
  for (int i = 0; i < static_cast<int>(lnat.size()); ++i) {
    SetNatComp sig(c->n_obj());
    for (int d = 0; d < c->n_obj(); ++d) {
      sig[d].resize(y.ob[d].size());
      for (int yy = 0; yy < y.ob[d].size(); ++yy) {
        std::vector<int> fam(c->n_obj());
        for (int a = 0; a < c->n_obj(); ++a) {
          std::vector<int> imgs(x.ob[a].size());
          for (int xx = 0; xx < x.ob[a].size(); ++xx)
            imgs[xx] = function_images(y.ob[d], hm.set[a][d],
                                       sy.pts[a].families[lnat[i][a][xx]][d])[yy];
          fam[a] = function_index(x.ob[a], hm.set[a][d], imgs);
        }
        sig[d][yy] = ox.pts[d].find_family(fam);
        if (sig[d][yy] < 0) return fail_witness(lhs, rhs, "swapped pairing escapes the end");
      }
    }
    fwd[i] = locate_nat(rnat, sig);
    if (fwd[i] < 0) return fail_witness(lhs, rhs, "swapped pairing is not natural");
  }
  for (int i = 0; i < static_cast<int>(rnat.size()); ++i) {
    SetNatComp tau(c->n_obj());
    for (int a = 0; a < c->n_obj(); ++a) {
      tau[a].resize(x.ob[a].size());
      for (int xx = 0; xx < x.ob[a].size(); ++xx) {
        std::vector<int> fam(c->n_obj());
        for (int d = 0; d < c->n_obj(); ++d) {
          std::vector<int> imgs(y.ob[d].size());
          for (int yy = 0; yy < y.ob[d].size(); ++yy)
            imgs[yy] = function_images(x.ob[a], hm.set[a][d],
                                       ox.pts[d].families[rnat[i][d][yy]][a])[xx];
          fam[d] = function_index(y.ob[d], hm.set[a][d], imgs);
        }
        tau[a][xx] = sy.pts[a].find_family(fam);
        if (tau[a][xx] < 0) return fail_witness(lhs, rhs, "swapped pairing escapes the end");
      }
    }
    bwd[i] = locate_nat(lnat, tau);
    if (bwd[i] < 0) return fail_witness(lhs, rhs, "swapped pairing is not natural");
  }
  return make_witness(lhs, rhs, std::move(fwd), std::move(bwd));
}

RealizationResult realization(const ProdCat& base, const SetFunctor& phi, const SetFunctor& x,
                              long long cap) {
  (void)cap;
  if (phi.base != base.cat) throw ShapeMismatch("two-sided diagram must live on the product base");
  if (!op_shaped(base.left, x.base)) throw ShapeMismatch("input must be a presheaf on the left factor");
  Cat a = base.left, b = base.right;
  OpProd ip = op_prod(a, a);
  RealizationResult out;
  for (int bb = 0; bb < b->n_obj(); ++bb) {
    SetFunctor t;
    t.base = ip.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int a1 = 0; a1 < a->n_obj(); ++a1)
      for (int a2 = 0; a2 < a->n_obj(); ++a2)
        t.ob[ip.ob(a1, a2)] = product_set(x.ob[a1], phi.ob[base.ob(a2, bb)]);
    t.mo.resize(t.base->n_mor());
    int bid = b->id_of(bb);
    for (int u = 0; u < a->n_mor(); ++u)
      for (int v = 0; v < a->n_mor(); ++v) {
        int a1 = a->trg(u), c1 = a->src(v), c2 = a->trg(v);
        std::vector<int>& tab = t.mo[ip.mo(u, v)];
        tab.resize(t.ob[ip.ob(a1, c1)].size());
        int np1 = phi.ob[base.ob(c1, bb)].size(), np2 = phi.ob[base.ob(c2, bb)].size();
        for (int xx = 0; xx < x.ob[a1].size(); ++xx)
          for (int pp = 0; pp < np1; ++pp)
            tab[xx * np1 + pp] = x.mo[u][xx] * np2 + phi.mo[base.mo(v, bid)][pp];
      }
    out.integrand.push_back(make_bifunctor(ip, bless_setfunctor(std::move(t))));
    out.pts.push_back(coend_of(out.integrand.back()));
  }
  SetFunctor val;
  val.base = b;
  for (int bb = 0; bb < b->n_obj(); ++bb) val.ob.push_back(out.pts[bb].carrier);
  val.mo.resize(b->n_mor());
  for (int g = 0; g < b->n_mor(); ++g) {
    int b1 = b->src(g), b2 = b->trg(g);
    std::vector<int> tab(out.pts[b1].carrier.size(), -1);
    for (int a0 = 0; a0 < a->n_obj(); ++a0) {
      int aid = a->id_of(a0);
      int np1 = phi.ob[base.ob(a0, b1)].size(), np2 = phi.ob[base.ob(a0, b2)].size();
      (void)np2;
      for (int xx = 0; xx < x.ob[a0].size(); ++xx)
        for (int pp = 0; pp < np1; ++pp) {
          int cls = out.pts[b1].inject[a0][xx * np1 + pp];
          int img = out.pts[b2].inject[a0][xx * phi.ob[base.ob(a0, b2)].size() +
                                           phi.mo[base.mo(aid, g)][pp]];
          if (tab[cls] < 0)
            tab[cls] = img;
          else if (tab[cls] != img)
            throw std::runtime_error("realization action is not constant on classes");
        }
    }
    val.mo[g] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(val));
  return out;
}

NerveResult nerve(const ProdCat& base, Cat aop, const SetFunctor& phi, const SetFunctor& y,
                  long long cap) {
  if (phi.base != base.cat) throw ShapeMismatch("two-sided diagram must live on the product base");
  if (y.base != base.right) throw ShapeMismatch("input must live on the right factor");
  if (!op_shaped(base.left, aop)) throw ShapeMismatch("carrier must be shaped like the opposite of the left factor");
  Cat a = base.left, b = base.right;
  OpProd ip = op_prod(b, b);
  NerveResult out;
  for (int aa = 0; aa < a->n_obj(); ++aa) {
    SetFunctor t;
    t.base = ip.prod.cat;
    t.ob.resize(t.base->n_obj());
    for (int b1 = 0; b1 < b->n_obj(); ++b1)
      for (int b2 = 0; b2 < b->n_obj(); ++b2)
        t.ob[ip.ob(b1, b2)] = function_set(phi.ob[base.ob(aa, b1)], y.ob[b2]);
    t.mo.resize(t.base->n_mor());
    int aid = a->id_of(aa);
    for (int u = 0; u < b->n_mor(); ++u)
      for (int v = 0; v < b->n_mor(); ++v) {
        int b1 = b->trg(u), e1 = b->src(v);
        int b2 = b->src(u), e2 = b->trg(v);
        std::vector<int>& tab = t.mo[ip.mo(u, v)];
        tab.resize(t.ob[ip.ob(b1, e1)].size());
        const FinSet& dom2 = phi.ob[base.ob(aa, b2)];
        for (int fn = 0; fn < static_cast<int>(tab.size()); ++fn) {
          std::vector<int> imgs = function_images(phi.ob[base.ob(aa, b1)], y.ob[e1], fn);
          std::vector<int> imgs2(dom2.size());
          for (int pp = 0; pp < dom2.size(); ++pp)
            imgs2[pp] = y.mo[v][imgs[phi.mo[base.mo(aid, u)][pp]]];
          tab[fn] = function_index(dom2, y.ob[e2], imgs2);
        }
      }
    out.integrand.push_back(make_bifunctor(ip, bless_setfunctor(std::move(t))));
    out.pts.push_back(end_of(out.integrand.back(), cap));
  }
  SetFunctor val;
  val.base = aop;
  for (int aa = 0; aa < a->n_obj(); ++aa) val.ob.push_back(out.pts[aa].carrier);
  val.mo.resize(a->n_mor());
  for (int m = 0; m < a->n_mor(); ++m) {
    int a1 = a->src(m), a2 = a->trg(m);
    val.mo[m].resize(out.pts[a2].carrier.size());
    for (int i = 0; i < out.pts[a2].carrier.size(); ++i) {
      std::vector<int> fam(b->n_obj());
      for (int bb = 0; bb < b->n_obj(); ++bb) {
        int bid = b->id_of(bb);
        std::vector<int> imgs = function_images(phi.ob[base.ob(a2, bb)], y.ob[bb],
                                                out.pts[a2].families[i][bb]);
        const FinSet& dom1 = phi.ob[base.ob(a1, bb)];
        std::vector<int> imgs2(dom1.size());
        for (int pp = 0; pp < dom1.size(); ++pp) imgs2[pp] = imgs[phi.mo[base.mo(m, bid)][pp]];
        fam[bb] = function_index(dom1, y.ob[bb], imgs2);
      }
      val.mo[m][i] = out.pts[a1].find_family(fam);
      if (val.mo[m][i] < 0) throw std::runtime_error("nerve action escapes the end");
    }
  }
  out.value = bless_setfunctor(std::move(val));
  return out;
}

Witness nerve_realization_adjunction(const ProdCat& base, Cat aop, const SetFunctor& phi,
                                     const SetFunctor& x, const SetFunctor& y, long long cap) {
  if (x.base != aop) throw ShapeMismatch("presheaf must live on the declared opposite carrier");
  RealizationResult r = realization(base, phi, x, cap);
  NerveResult n = nerve(base, aop, phi, y, cap);
  Cat a = base.left, b = base.right;
  std::vector<SetNatComp> outs = all_setnats(r.value, y, cap);
  std::vector<SetNatComp> ins = all_setnats(x, n.value, cap);
  FinSet lhs = indexed_set("t", static_cast<int>(outs.size()));
  FinSet rhs = indexed_set("t", static_cast<int>(ins.size()));
  std::vector<int> fwd(outs.size()), bwd(ins.size());
  for (int i = 0; i < static_cast<int>(outs.size()); ++i) {
    SetNatComp tau(a->n_obj());
    for (int aa = 0; aa < a->n_obj(); ++aa) {
      tau[aa].resize(x.ob[aa].size());
      for (int xx = 0; xx < x.ob[aa].size(); ++xx) {
        std::vector<int> fam(b->n_obj());
        for (int bb = 0; bb < b->n_obj(); ++bb) {
          const FinSet& ph = phi.ob[base.ob(aa, bb)];
          std::vector<int> imgs(ph.size());
          for (int pp = 0; pp < ph.size(); ++pp)
            imgs[pp] = outs[i][bb][r.pts[bb].inject[aa][xx * ph.size() + pp]];
          fam[bb] = function_index(ph, y.ob[bb], imgs);
        }
        tau[aa][xx] = n.pts[aa].find_family(fam);
        if (tau[aa][xx] < 0) return fail_witness(lhs, rhs, "transpose escapes the end");
      }
    }
    fwd[i] = locate_nat(ins, tau);
    if (fwd[i] < 0) return fail_witness(lhs, rhs, "transpose is not natural");
  }
  for (int j = 0; j < static_cast<int>(ins.size()); ++j) {
    SetNatComp eta(b->n_obj());
    for (int bb = 0; bb < b->n_obj(); ++bb) {
      std::vector<int> tab(r.pts[bb].carrier.size(), -1);
      for (int aa = 0; aa < a->n_obj(); ++aa) {
        const FinSet& ph = phi.ob[base.ob(aa, bb)];
        for (int xx = 0; xx < x.ob[aa].size(); ++xx) {
          std::vector<int> imgs = function_images(ph, y.ob[bb],
                                                  n.pts[aa].families[ins[j][aa][xx]][bb]);
          for (int pp = 0; pp < ph.size(); ++pp) {
            int cls = r.pts[bb].inject[aa][xx * ph.size() + pp];
            if (tab[cls] < 0)
              tab[cls] = imgs[pp];
            else if (tab[cls] != imgs[pp])
              return fail_witness(lhs, rhs, "transpose is not constant on classes");
          }
        }
      }
      eta[bb] = std::move(tab);
    }
    bwd[j] = locate_nat(outs, eta);
    if (bwd[j] < 0) return fail_witness(lhs, rhs, "transpose is not natural");
  }
  return make_witness(lhs, rhs, std::move(fwd), std::move(bwd));
}

}  // namespace fce

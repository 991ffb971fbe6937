#include "fce/profunctor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace fce {

namespace {

struct Homs {
  std::vector<std::vector<FinSet>> set;             // [a][b]
  std::vector<std::vector<std::vector<int>>> mors;  // [a][b] -> morphism ids
  std::vector<int> pos;                             // morphism -> slot in its hom-set
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

FinSet indexed_set(const std::string& stem, int n) {
  FinSet s;
  for (int i = 0; i < n; ++i) s.elems.push_back(stem + std::to_string(i));
  return s;
}

int locate_nat(const std::vector<SetNatComp>& nats, const SetNatComp& t) {
  auto it = std::find(nats.begin(), nats.end(), t);
  return it == nats.end() ? -1 : static_cast<int>(it - nats.begin());
}

void fold_reason(PointwiseIso& out, const Witness& w, const std::string& where) {
  if (!w.ok && out.ok) {
    out.ok = false;
    out.reason = where + ": " + w.reason;
  }
}

// the same tables viewed on a base built elsewhere with the same shape
SetFunctor on_base(SetFunctor t, Cat base) {
  if (t.base->n_obj() != base->n_obj() || t.base->n_mor() != base->n_mor())
    throw ShapeMismatch("tables moved onto a base of a different shape");
  t.base = base;
  return t;
}

std::vector<std::string> nat_issues(const SetFunctor& f, const SetFunctor& g, const SetNatComp& t) {
  return validate_setnat(f, on_base(g, f.base), t);
}

void fold_nat(PointwiseIso& out, const std::vector<std::string>& issues) {
  out.natural = issues.empty();
  if (!issues.empty() && out.ok) {
    out.ok = false;
    out.reason = "naturality: " + issues.front();
  }
}

SetNatComp iso_fwd(const PointwiseIso& i) {
  SetNatComp out;
  for (const Witness& w : i.at) out.push_back(w.fwd);
  return out;
}

SetNatComp compose_comp(const SetNatComp& second, const SetNatComp& first) {
  SetNatComp out(first.size());
  for (size_t o = 0; o < first.size(); ++o) {
    out[o].resize(first[o].size());
    for (size_t x = 0; x < first[o].size(); ++x) out[o][x] = second[o][first[o][x]];
  }
  return out;
}

void merge_image(std::vector<int>& tab, int slot, int img, const char* what) {
  if (tab[slot] == -1)
    tab[slot] = img;
  else if (tab[slot] != img)
    throw std::runtime_error(std::string(what) + " is not constant on classes");
}

}  // namespace

Profunctor make_profunctor(OpProd base, SetFunctor t) {
  Profunctor p;
  p.data = make_bifunctor(std::move(base), std::move(t));
  return p;
}

Profunctor hom_pro(Cat a) {
  Profunctor p;
  p.data = hom_bifunctor(a);
  return p;
}

Profunctor discrete_pro(Cat a, Cat b, const std::vector<std::vector<int>>& counts) {
  if (a->n_mor() != a->n_obj() || b->n_mor() != b->n_obj())
    throw ShapeMismatch("discrete relator over a base with non-identity arrows");
  if (static_cast<int>(counts.size()) != a->n_obj())
    throw ShapeMismatch("discrete relator table has wrong height");
  OpProd base = op_prod(a, b);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  for (int x = 0; x < a->n_obj(); ++x) {
    if (static_cast<int>(counts[x].size()) != b->n_obj())
      throw ShapeMismatch("discrete relator table has wrong width");
    for (int y = 0; y < b->n_obj(); ++y) t.ob[base.ob(x, y)] = indexed_set("x", counts[x][y]);
  }
  for (int m = 0; m < base.prod.cat->n_mor(); ++m) {
    std::vector<int> row(t.ob[base.prod.cat->src(m)].size());
    std::iota(row.begin(), row.end(), 0);
    t.mo.push_back(std::move(row));
  }
  return make_profunctor(std::move(base), std::move(t));
}

Profunctor rebase_like(const Profunctor& model, Profunctor p) {
  if (model.src() != p.src() || model.trg() != p.trg())
    throw ShapeMismatch("rebase between relators with different endpoints");
  return make_profunctor(model.data.base, on_base(std::move(p.data.t), model.data.base.prod.cat));
}

ProComposite pro_compose(const Profunctor& p, const Profunctor& q) {
  if (p.trg() != q.src()) throw ShapeMismatch("relator composition with mismatched middle");
  Cat A = p.src(), B = p.trg(), C = q.trg();
  OpProd vb = op_prod(A, C);
  OpProd mid = op_prod(B, B);
  ProComposite out;
  out.left = p;
  out.right = q;
  out.pts.resize(vb.prod.cat->n_obj());
  SetFunctor t;
  t.base = vb.prod.cat;
  t.ob.resize(vb.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int c = 0; c < C->n_obj(); ++c) {
      SetFunctor diag;
      diag.base = mid.prod.cat;
      for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
        auto [x1, x2] = mid.ob_parts(o);
        diag.ob.push_back(product_set(p.at(a, x2), q.at(x1, c)));
      }
      for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
        auto [fm, gm] = mid.mo_parts(m);
        int d1 = B->trg(fm), d2 = B->src(gm);
        int dq = q.at(d1, c).size();
        int cq = q.at(B->src(fm), c).size();
        std::vector<int> tab(p.at(a, d2).size() * dq);
        for (int i = 0; i < p.at(a, d2).size(); ++i) {
          int iv = p.act(A->id_of(a), gm, i);
          for (int j = 0; j < dq; ++j) tab[i * dq + j] = iv * cq + q.act(fm, C->id_of(c), j);
        }
        diag.mo.push_back(std::move(tab));
      }
      CoendResult co = coend_of(make_bifunctor(mid, std::move(diag)));
      t.ob[vb.ob(a, c)] = co.carrier;
      out.pts[vb.ob(a, c)] = std::move(co);
    }
  t.mo.resize(vb.prod.cat->n_mor());
  for (int m = 0; m < vb.prod.cat->n_mor(); ++m) {
    auto [um, wm] = vb.mo_parts(m);
    int a1 = A->trg(um), c1 = C->src(wm);
    int a2 = A->src(um), c2 = C->trg(wm);
    const CoendResult& dom = out.pts[vb.ob(a1, c1)];
    const CoendResult& cod = out.pts[vb.ob(a2, c2)];
    std::vector<int> tab(dom.carrier.size(), -1);
    for (int x = 0; x < B->n_obj(); ++x) {
      int dq = q.at(x, c1).size();
      int cq = q.at(x, c2).size();
      for (int i = 0; i < p.at(a1, x).size(); ++i) {
        int iv = p.act(um, B->id_of(x), i);
        for (int j = 0; j < dq; ++j) {
          int img = cod.inject[x][iv * cq + q.act(B->id_of(x), wm, j)];
          merge_image(tab, dom.inject[x][i * dq + j], img, "composite action");
        }
      }
    }
    t.mo[m] = std::move(tab);
  }
  out.value = make_profunctor(std::move(vb), std::move(t));
  return out;
}

SetNatComp pro_hcomp(const ProComposite& s, const ProComposite& t, const SetNatComp& alpha,
                     const SetNatComp& beta) {
  if (alpha.size() != s.left.data.t.ob.size() || beta.size() != s.right.data.t.ob.size())
    throw ShapeMismatch("pasting with 2-cells of the wrong shape");
  Cat A = s.value.src(), C = s.value.trg(), B = s.left.trg();
  const OpProd& vb = s.value.data.base;
  SetNatComp out(s.value.data.t.ob.size());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int c = 0; c < C->n_obj(); ++c) {
      int o = vb.ob(a, c);
      out[o].assign(s.pts[o].carrier.size(), -1);
      for (int x = 0; x < B->n_obj(); ++x) {
        int ds = s.right.at(x, c).size();
        int dt = t.right.at(x, c).size();
        for (int i = 0; i < s.left.at(a, x).size(); ++i) {
          int iv = alpha[s.left.data.base.ob(a, x)][i];
          for (int j = 0; j < ds; ++j) {
            int img = t.pts[o].inject[x][iv * dt + beta[s.right.data.base.ob(x, c)][j]];
            merge_image(out[o], s.pts[o].inject[x][i * ds + j], img, "pasted 2-cell");
          }
        }
      }
    }
  return out;
}

UnitorResult unit_left(const Profunctor& p) {
  Cat A = p.src(), B = p.trg();
  Homs ha = all_homs(A);
  UnitorResult out;
  out.composite = pro_compose(hom_pro(A), p);
  out.iso.ok = true;
  const OpProd& vb = out.composite.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int b = 0; b < B->n_obj(); ++b) {
      int o = vb.ob(a, b);
      const CoendResult& co = out.composite.pts[o];
      std::vector<int> f(co.carrier.size(), -1);
      for (int x = 0; x < A->n_obj(); ++x) {
        int dp = p.at(x, b).size();
        for (int i = 0; i < ha.set[a][x].size(); ++i)
          for (int j = 0; j < dp; ++j)
            merge_image(f, co.inject[x][i * dp + j], p.act(ha.mors[a][x][i], B->id_of(b), j),
                        "unit collapse");
      }
      int dp = p.at(a, b).size();
      std::vector<int> bwd(dp);
      for (int v = 0; v < dp; ++v) bwd[v] = co.inject[a][ha.pos[A->id_of(a)] * dp + v];
      Witness w = make_witness(co.carrier, p.at(a, b), f, bwd);
      fold_reason(out.iso, w, "at (" + A->objects[a] + ", " + B->objects[b] + ")");
      fwd[o] = std::move(f);
      out.iso.at.push_back(std::move(w));
    }
  fold_nat(out.iso, nat_issues(out.composite.value.data.t, p.data.t, fwd));
  return out;
}

UnitorResult unit_right(const Profunctor& p) {
  Cat A = p.src(), B = p.trg();
  Homs hb = all_homs(B);
  UnitorResult out;
  out.composite = pro_compose(p, hom_pro(B));
  out.iso.ok = true;
  const OpProd& vb = out.composite.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int b = 0; b < B->n_obj(); ++b) {
      int o = vb.ob(a, b);
      const CoendResult& co = out.composite.pts[o];
      std::vector<int> f(co.carrier.size(), -1);
      for (int x = 0; x < B->n_obj(); ++x) {
        int dh = hb.set[x][b].size();
        for (int i = 0; i < p.at(a, x).size(); ++i)
          for (int j = 0; j < dh; ++j)
            merge_image(f, co.inject[x][i * dh + j], p.act(A->id_of(a), hb.mors[x][b][j], i),
                        "unit collapse");
      }
      int dh = hb.set[b][b].size();
      std::vector<int> bwd(p.at(a, b).size());
      for (int v = 0; v < p.at(a, b).size(); ++v)
        bwd[v] = co.inject[b][v * dh + hb.pos[B->id_of(b)]];
      Witness w = make_witness(co.carrier, p.at(a, b), f, bwd);
      fold_reason(out.iso, w, "at (" + A->objects[a] + ", " + B->objects[b] + ")");
      fwd[o] = std::move(f);
      out.iso.at.push_back(std::move(w));
    }
  fold_nat(out.iso, nat_issues(out.composite.value.data.t, p.data.t, fwd));
  return out;
}

AssociatorResult associator(const Profunctor& p, const Profunctor& q, const Profunctor& r) {
  Cat A = p.src(), B = p.trg(), C = q.trg(), D = r.trg();
  AssociatorResult out;
  out.pq = pro_compose(p, q);
  out.qr = pro_compose(q, r);
  out.left = pro_compose(out.pq.value, r);
  out.right = pro_compose(p, out.qr.value);
  out.iso.ok = true;
  const OpProd& vb = out.left.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int d = 0; d < D->n_obj(); ++d) {
      int o = vb.ob(a, d);
      const CoendResult& lco = out.left.pts[o];
      const CoendResult& rco = out.right.pts[o];
      std::vector<int> f(lco.carrier.size(), -1);
      for (int c0 = 0; c0 < C->n_obj(); ++c0) {
        int dr = r.at(c0, d).size();
        const CoendResult& pqc = out.pq.pts[out.pq.value.data.base.ob(a, c0)];
        for (int b0 = 0; b0 < B->n_obj(); ++b0) {
          int dq = q.at(b0, c0).size();
          int nqr = out.qr.value.at(b0, d).size();
          const CoendResult& qrc = out.qr.pts[out.qr.value.data.base.ob(b0, d)];
          for (int x = 0; x < p.at(a, b0).size(); ++x)
            for (int y = 0; y < dq; ++y) {
              int w = pqc.inject[b0][x * dq + y];
              for (int z = 0; z < dr; ++z) {
                int k = lco.inject[c0][w * dr + z];
                int img = rco.inject[b0][x * nqr + qrc.inject[c0][y * dr + z]];
                merge_image(f, k, img, "regrouping");
              }
            }
        }
      }
      std::vector<int> bwd(rco.carrier.size(), -1);
      for (int b0 = 0; b0 < B->n_obj(); ++b0) {
        int nqr = out.qr.value.at(b0, d).size();
        const CoendResult& qrc = out.qr.pts[out.qr.value.data.base.ob(b0, d)];
        for (int c0 = 0; c0 < C->n_obj(); ++c0) {
          int dr = r.at(c0, d).size();
          int dq = q.at(b0, c0).size();
          const CoendResult& pqc = out.pq.pts[out.pq.value.data.base.ob(a, c0)];
          for (int x = 0; x < p.at(a, b0).size(); ++x)
            for (int y = 0; y < dq; ++y)
              for (int z = 0; z < dr; ++z) {
                int k = rco.inject[b0][x * nqr + qrc.inject[c0][y * dr + z]];
                int img = lco.inject[c0][pqc.inject[b0][x * dq + y] * dr + z];
                merge_image(bwd, k, img, "regrouping");
              }
        }
      }
      Witness w = make_witness(lco.carrier, rco.carrier, f, bwd);
      fold_reason(out.iso, w, "at (" + A->objects[a] + ", " + D->objects[d] + ")");
      fwd[o] = std::move(f);
      out.iso.at.push_back(std::move(w));
    }
  fold_nat(out.iso, nat_issues(out.left.value.data.t, out.right.value.data.t, fwd));
  return out;
}

Verdict pentagon_check(const Profunctor& p, const Profunctor& q, const Profunctor& r,
                       const Profunctor& s) {
  AssociatorResult apqr = associator(p, q, r);
  AssociatorResult aqrs = associator(q, r, s);
  Profunctor pq = apqr.pq.value, qr = apqr.qr.value, rs = aqrs.qr.value;
  AssociatorResult a1 = associator(pq, r, s);
  AssociatorResult a2 = associator(p, q, rs);
  AssociatorResult a3 = associator(p, qr, s);
  SetNatComp w1 = pro_hcomp(a1.left, a3.left, iso_fwd(apqr.iso), identity_setnat(s.data.t));
  SetNatComp w2 = iso_fwd(a3.iso);
  SetNatComp w3 = pro_hcomp(a3.right, a2.right, identity_setnat(p.data.t), iso_fwd(aqrs.iso));
  SetNatComp via_middle = compose_comp(w3, compose_comp(w2, w1));
  SetNatComp direct = compose_comp(iso_fwd(a2.iso), iso_fwd(a1.iso));
  Verdict out;
  Cat pair = a1.left.value.data.t.base;
  for (int o = 0; o < pair->n_obj() && out.ok; ++o)
    for (size_t k = 0; k < via_middle[o].size(); ++k)
      if (via_middle[o][k] != direct[o][k]) {
        out.ok = false;
        out.witness = "pentagon routes disagree at " + pair->objects[o] + " on " +
                      a1.left.value.data.t.ob[o].elems[k];
        break;
      }
  return out;
}

Verdict triangle_check(const Profunctor& p, const Profunctor& q) {
  UnitorResult ru = unit_right(p);
  UnitorResult lu = unit_left(q);
  AssociatorResult a = associator(p, hom_pro(p.trg()), q);
  ProComposite pq = pro_compose(p, q);
  SetNatComp via_right =
      compose_comp(pro_hcomp(a.right, pq, identity_setnat(p.data.t), iso_fwd(lu.iso)), iso_fwd(a.iso));
  SetNatComp via_left = pro_hcomp(a.left, pq, iso_fwd(ru.iso), identity_setnat(q.data.t));
  Verdict out;
  Cat pair = a.left.value.data.t.base;
  for (int o = 0; o < pair->n_obj() && out.ok; ++o)
    for (size_t k = 0; k < via_left[o].size(); ++k)
      if (via_left[o][k] != via_right[o][k]) {
        out.ok = false;
        out.witness = "triangle routes disagree at " + pair->objects[o] + " on " +
                      a.left.value.data.t.ob[o].elems[k];
        break;
      }
  return out;
}

Profunctor embed_cov(const FinFunctor& f) {
  Cat A = f.src, B = f.trg;
  Homs hb = all_homs(B);
  OpProd base = op_prod(A, B);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int b = 0; b < B->n_obj(); ++b) t.ob[base.ob(a, b)] = hb.set[f.ob(a)][b];
  t.mo.resize(base.prod.cat->n_mor());
  for (int m = 0; m < base.prod.cat->n_mor(); ++m) {
    auto [um, vm] = base.mo_parts(m);
    const auto& dom = hb.mors[f.ob(A->trg(um))][B->src(vm)];
    std::vector<int> tab(dom.size());
    for (size_t i = 0; i < dom.size(); ++i)
      tab[i] = hb.pos[B->compose(vm, B->compose(dom[i], f.mo(um)))];
    t.mo[m] = std::move(tab);
  }
  return make_profunctor(std::move(base), std::move(t));
}

Profunctor embed_contra(const FinFunctor& f) {
  Cat A = f.src, B = f.trg;
  Homs hb = all_homs(B);
  OpProd base = op_prod(B, A);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  for (int b = 0; b < B->n_obj(); ++b)
    for (int a = 0; a < A->n_obj(); ++a) t.ob[base.ob(b, a)] = hb.set[b][f.ob(a)];
  t.mo.resize(base.prod.cat->n_mor());
  for (int m = 0; m < base.prod.cat->n_mor(); ++m) {
    auto [um, wm] = base.mo_parts(m);
    const auto& dom = hb.mors[B->trg(um)][f.ob(A->src(wm))];
    std::vector<int> tab(dom.size());
    for (size_t i = 0; i < dom.size(); ++i)
      tab[i] = hb.pos[B->compose(f.mo(wm), B->compose(dom[i], um))];
    t.mo[m] = std::move(tab);
  }
  return make_profunctor(std::move(base), std::move(t));
}

PointwiseIso embed_cov_compose_check(const FinFunctor& f, const FinFunctor& g) {
  Cat A = f.src, B = f.trg, C = g.trg;
  FinFunctor gf = compose_functors(g, f);
  Homs hb = all_homs(B);
  Homs hc = all_homs(C);
  ProComposite comp = pro_compose(embed_cov(f), embed_cov(g));
  Profunctor whole = embed_cov(gf);
  PointwiseIso out;
  out.ok = true;
  const OpProd& vb = comp.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int c = 0; c < C->n_obj(); ++c) {
      int o = vb.ob(a, c);
      const CoendResult& co = comp.pts[o];
      std::vector<int> fv(co.carrier.size(), -1);
      for (int x = 0; x < B->n_obj(); ++x) {
        const auto& us = hb.mors[f.ob(a)][x];
        const auto& qs = hc.mors[g.ob(x)][c];
        for (size_t i = 0; i < us.size(); ++i)
          for (size_t j = 0; j < qs.size(); ++j)
            merge_image(fv, co.inject[x][static_cast<int>(i * qs.size() + j)],
                        hc.pos[C->compose(qs[j], g.mo(us[i]))], "embedding collapse");
      }
      int fa = f.ob(a);
      int dq = hc.set[g.ob(fa)][c].size();
      std::vector<int> bwd(whole.at(a, c).size());
      for (int v = 0; v < whole.at(a, c).size(); ++v)
        bwd[v] = co.inject[fa][hb.pos[B->id_of(fa)] * dq + v];
      Witness w = make_witness(co.carrier, whole.at(a, c), fv, bwd);
      fold_reason(out, w, "at (" + A->objects[a] + ", " + C->objects[c] + ")");
      fwd[o] = std::move(fv);
      out.at.push_back(std::move(w));
    }
  fold_nat(out, nat_issues(comp.value.data.t, whole.data.t, fwd));
  return out;
}

PointwiseIso embed_contra_compose_check(const FinFunctor& f, const FinFunctor& g) {
  Cat A = f.src, B = f.trg, C = g.trg;
  FinFunctor gf = compose_functors(g, f);
  Homs hb = all_homs(B);
  Homs hc = all_homs(C);
  ProComposite comp = pro_compose(embed_contra(g), embed_contra(f));
  Profunctor whole = embed_contra(gf);
  PointwiseIso out;
  out.ok = true;
  const OpProd& vb = comp.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int c = 0; c < C->n_obj(); ++c)
    for (int a = 0; a < A->n_obj(); ++a) {
      int o = vb.ob(c, a);
      const CoendResult& co = comp.pts[o];
      std::vector<int> fv(co.carrier.size(), -1);
      for (int x = 0; x < B->n_obj(); ++x) {
        const auto& qs = hc.mors[c][g.ob(x)];
        const auto& us = hb.mors[x][f.ob(a)];
        for (size_t i = 0; i < qs.size(); ++i)
          for (size_t j = 0; j < us.size(); ++j)
            merge_image(fv, co.inject[x][static_cast<int>(i * us.size() + j)],
                        hc.pos[C->compose(g.mo(us[j]), qs[i])], "embedding collapse");
      }
      int fa = f.ob(a);
      int du = hb.set[fa][fa].size();
      std::vector<int> bwd(whole.at(c, a).size());
      for (int v = 0; v < whole.at(c, a).size(); ++v)
        bwd[v] = co.inject[fa][v * du + hb.pos[B->id_of(fa)]];
      Witness w = make_witness(co.carrier, whole.at(c, a), fv, bwd);
      fold_reason(out, w, "at (" + C->objects[c] + ", " + A->objects[a] + ")");
      fwd[o] = std::move(fv);
      out.at.push_back(std::move(w));
    }
  fold_nat(out, nat_issues(comp.value.data.t, whole.data.t, fwd));
  return out;
}

ProAdjunction adjunction_for(const FinFunctor& f) {
  Cat A = f.src, B = f.trg;
  Homs ha = all_homs(A);
  Homs hb = all_homs(B);
  ProAdjunction out;
  out.cov = embed_cov(f);
  out.contra = embed_contra(f);
  out.through_src = pro_compose(out.contra, out.cov);
  out.through_trg = pro_compose(out.cov, out.contra);
  out.ok = true;
  const OpProd& sb = out.through_src.value.data.base;
  out.counit.resize(sb.prod.cat->n_obj());
  for (int b1 = 0; b1 < B->n_obj(); ++b1)
    for (int b2 = 0; b2 < B->n_obj(); ++b2) {
      int o = sb.ob(b1, b2);
      const CoendResult& co = out.through_src.pts[o];
      out.counit[o].assign(co.carrier.size(), -1);
      for (int x = 0; x < A->n_obj(); ++x) {
        const auto& us = hb.mors[b1][f.ob(x)];
        const auto& vs = hb.mors[f.ob(x)][b2];
        for (size_t i = 0; i < us.size(); ++i)
          for (size_t j = 0; j < vs.size(); ++j) {
            int k = co.inject[x][static_cast<int>(i * vs.size() + j)];
            int img = hb.pos[B->compose(vs[j], us[i])];
            if (out.counit[o][k] == -1)
              out.counit[o][k] = img;
            else if (out.counit[o][k] != img) {
              out.ok = false;
              out.reason = "counit is not constant on classes at (" + B->objects[b1] + ", " +
                           B->objects[b2] + ")";
              return out;
            }
          }
      }
    }
  const OpProd& tb = out.through_trg.value.data.base;
  out.unit.resize(tb.prod.cat->n_obj());
  for (int a1 = 0; a1 < A->n_obj(); ++a1)
    for (int a2 = 0; a2 < A->n_obj(); ++a2) {
      int o = tb.ob(a1, a2);
      const CoendResult& co = out.through_trg.pts[o];
      int fx = f.ob(a1);
      int dv = hb.set[fx][f.ob(a2)].size();
      const auto& hs = ha.mors[a1][a2];
      out.unit[o].resize(hs.size());
      for (size_t i = 0; i < hs.size(); ++i)
        out.unit[o][i] = co.inject[fx][hb.pos[B->id_of(fx)] * dv + hb.pos[f.mo(hs[i])]];
    }
  auto ce = nat_issues(out.through_src.value.data.t, hom_pro(B).data.t, out.counit);
  if (!ce.empty()) {
    out.ok = false;
    out.reason = "counit naturality: " + ce.front();
    return out;
  }
  auto ue = nat_issues(on_base(hom_pro(A).data.t, tb.prod.cat), out.through_trg.value.data.t,
                       out.unit);
  if (!ue.empty()) {
    out.ok = false;
    out.reason = "unit naturality: " + ue.front();
    return out;
  }
  for (int a = 0; a < A->n_obj(); ++a) {
    int o = tb.ob(a, a);
    int cls = out.unit[o][ha.pos[A->id_of(a)]];
    auto [xm, pt] = out.through_trg.pts[o].class_rep[cls];
    int dv = hb.set[xm][f.ob(a)].size();
    int pp = hb.mors[f.ob(a)][xm][pt / dv];
    int qq = hb.mors[xm][f.ob(a)][pt % dv];
    int round = B->compose(qq, pp);
    for (int b = 0; b < B->n_obj(); ++b) {
      for (int u : hb.mors[f.ob(a)][b])
        if (B->compose(u, round) != u) {
          out.ok = false;
          out.reason = "zig-zag on the covariant side fails at " + A->objects[a];
          return out;
        }
      for (int h : hb.mors[b][f.ob(a)])
        if (B->compose(round, h) != h) {
          out.ok = false;
          out.reason = "zig-zag on the contravariant side fails at " + A->objects[a];
          return out;
        }
    }
  }
  return out;
}

FFReport fully_faithful_via_unit(const FinFunctor& f) {
  Cat A = f.src, B = f.trg;
  Homs ha = all_homs(A);
  Homs hb = all_homs(B);
  ProAdjunction adj = adjunction_for(f);
  FFReport out;
  if (!adj.ok) {
    out.reason = adj.reason;
    return out;
  }
  out.via_unit = true;
  const OpProd& tb = adj.through_trg.value.data.base;
  for (int a1 = 0; a1 < A->n_obj(); ++a1)
    for (int a2 = 0; a2 < A->n_obj(); ++a2) {
      int o = tb.ob(a1, a2);
      std::vector<char> hit(adj.through_trg.pts[o].carrier.size(), 0);
      bool good = adj.unit[o].size() == hit.size();
      for (int i : adj.unit[o]) {
        if (hit[i]) good = false;
        hit[i] = 1;
      }
      if (!good) {
        if (out.via_unit) {
          out.bad_src = a1;
          out.bad_trg = a2;
        }
        out.via_unit = false;
      }
    }
  out.direct = true;
  for (int a1 = 0; a1 < A->n_obj(); ++a1)
    for (int a2 = 0; a2 < A->n_obj(); ++a2) {
      std::vector<char> hit(hb.set[f.ob(a1)][f.ob(a2)].size(), 0);
      bool good = ha.mors[a1][a2].size() == hit.size();
      for (int h : ha.mors[a1][a2]) {
        int i = hb.pos[f.mo(h)];
        if (hit[i]) good = false;
        hit[i] = 1;
      }
      if (!good) {
        if (out.direct && out.bad_src == -1) {
          out.bad_src = a1;
          out.bad_trg = a2;
        }
        out.direct = false;
      }
    }
  out.agree = out.via_unit == out.direct;
  if (!out.agree)
    out.reason = "unit verdict disagrees with the hom comparison";
  else if (!out.via_unit)
    out.reason = "hom comparison fails at (" + A->objects[out.bad_src] + ", " +
                 A->objects[out.bad_trg] + ")";
  return out;
}

RanProResult ran_pro(const Profunctor& p, const Profunctor& h, long long cap) {
  if (p.trg() != h.trg()) throw ShapeMismatch("extension along a relator with a different target");
  Cat X = p.src(), B = p.trg(), A = h.src();
  OpProd vb = op_prod(A, X);
  OpProd mid = op_prod(B, B);
  RanProResult out;
  out.pts.resize(vb.prod.cat->n_obj());
  SetFunctor t;
  t.base = vb.prod.cat;
  t.ob.resize(vb.prod.cat->n_obj());
  for (int a = 0; a < A->n_obj(); ++a)
    for (int x = 0; x < X->n_obj(); ++x) {
      SetFunctor diag;
      diag.base = mid.prod.cat;
      for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
        auto [b1, b2] = mid.ob_parts(o);
        diag.ob.push_back(function_set(p.at(x, b1), h.at(a, b2)));
      }
      for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
        auto [fm, gm] = mid.mo_parts(m);
        int d1 = B->trg(fm), d2 = B->src(gm);
        int b1p = B->src(fm), b2p = B->trg(gm);
        const FinSet& dd = p.at(x, d1);
        const FinSet& dc = h.at(a, d2);
        const FinSet& cd = p.at(x, b1p);
        const FinSet& cc = h.at(a, b2p);
        std::vector<int> tab(function_set(dd, dc).size());
        for (size_t pi = 0; pi < tab.size(); ++pi) {
          auto im = function_images(dd, dc, static_cast<int>(pi));
          std::vector<int> nim(cd.size());
          for (int kk = 0; kk < cd.size(); ++kk)
            nim[kk] = h.act(A->id_of(a), gm, im[p.act(X->id_of(x), fm, kk)]);
          tab[pi] = function_index(cd, cc, nim);
        }
        diag.mo.push_back(std::move(tab));
      }
      EndResult en = end_of(make_bifunctor(mid, std::move(diag)), cap);
      t.ob[vb.ob(a, x)] = en.carrier;
      out.pts[vb.ob(a, x)] = std::move(en);
    }
  t.mo.resize(vb.prod.cat->n_mor());
  for (int m = 0; m < vb.prod.cat->n_mor(); ++m) {
    auto [um, wm] = vb.mo_parts(m);
    int a1 = A->trg(um), x1 = X->src(wm);
    int a2 = A->src(um), x2 = X->trg(wm);
    const EndResult& dom = out.pts[vb.ob(a1, x1)];
    const EndResult& cod = out.pts[vb.ob(a2, x2)];
    std::vector<int> tab(dom.carrier.size());
    for (size_t e = 0; e < tab.size(); ++e) {
      std::vector<int> fam(B->n_obj());
      for (int b = 0; b < B->n_obj(); ++b) {
        auto im = function_images(p.at(x1, b), h.at(a1, b), dom.families[e][b]);
        std::vector<int> nim(p.at(x2, b).size());
        for (int kk = 0; kk < p.at(x2, b).size(); ++kk)
          nim[kk] = h.act(um, B->id_of(b), im[p.act(wm, B->id_of(b), kk)]);
        fam[b] = function_index(p.at(x2, b), h.at(a2, b), nim);
      }
      int e2 = cod.find_family(fam);
      if (e2 < 0) throw std::runtime_error("extension action escapes the end");
      tab[e] = e2;
    }
    t.mo[m] = std::move(tab);
  }
  out.value = make_profunctor(std::move(vb), std::move(t));
  return out;
}

Witness ran_pro_universal(const Profunctor& p, const Profunctor& h, const Profunctor& g,
                          long long cap) {
  RanProResult ran = ran_pro(p, h, cap);
  ProComposite gp = pro_compose(g, p);
  Cat A = g.src(), X = g.trg(), B = p.trg();
  std::vector<SetNatComp> ins =
      all_setnats(gp.value.data.t, on_base(h.data.t, gp.value.data.t.base), cap);
  std::vector<SetNatComp> outs =
      all_setnats(g.data.t, on_base(ran.value.data.t, g.data.t.base), cap);
  FinSet lhs = indexed_set("t", static_cast<int>(ins.size()));
  FinSet rhs = indexed_set("t", static_cast<int>(outs.size()));
  std::vector<int> fwd(ins.size(), -1), bwd(outs.size(), -1);
  for (size_t n = 0; n < ins.size(); ++n) {
    const SetNatComp& al = ins[n];
    SetNatComp tau(g.data.t.ob.size());
    for (int a = 0; a < A->n_obj(); ++a)
      for (int x = 0; x < X->n_obj(); ++x) {
        int o = g.data.base.ob(a, x);
        tau[o].resize(g.at(a, x).size());
        for (int s = 0; s < g.at(a, x).size(); ++s) {
          std::vector<int> fam(B->n_obj());
          for (int b = 0; b < B->n_obj(); ++b) {
            int dp = p.at(x, b).size();
            std::vector<int> im(dp);
            for (int kk = 0; kk < dp; ++kk) {
              int gpo = gp.value.data.base.ob(a, b);
              im[kk] = al[gpo][gp.pts[gpo].inject[x][s * dp + kk]];
            }
            fam[b] = function_index(p.at(x, b), h.at(a, b), im);
          }
          int e = ran.pts[ran.value.data.base.ob(a, x)].find_family(fam);
          if (e < 0) {
            Witness w;
            w.lhs = lhs;
            w.rhs = rhs;
            w.reason = "transpose escapes the end";
            return w;
          }
          tau[o][s] = e;
        }
      }
    fwd[n] = locate_nat(outs, tau);
    if (fwd[n] < 0) {
      Witness w;
      w.lhs = lhs;
      w.rhs = rhs;
      w.reason = "transpose is not among the enumerated 2-cells";
      return w;
    }
  }
  for (size_t n = 0; n < outs.size(); ++n) {
    const SetNatComp& tau = outs[n];
    SetNatComp al(gp.value.data.t.ob.size());
    for (int a = 0; a < A->n_obj(); ++a)
      for (int b = 0; b < B->n_obj(); ++b) {
        int o = gp.value.data.base.ob(a, b);
        const CoendResult& co = gp.pts[o];
        al[o].assign(co.carrier.size(), -1);
        for (int x = 0; x < X->n_obj(); ++x) {
          int dp = p.at(x, b).size();
          for (int s = 0; s < g.at(a, x).size(); ++s) {
            int e = tau[g.data.base.ob(a, x)][s];
            const auto& fam = ran.pts[ran.value.data.base.ob(a, x)].families[e];
            auto im = function_images(p.at(x, b), h.at(a, b), fam[b]);
            for (int kk = 0; kk < dp; ++kk)
              merge_image(al[o], co.inject[x][s * dp + kk], im[kk], "transpose");
          }
        }
      }
    bwd[n] = locate_nat(ins, al);
    if (bwd[n] < 0) {
      Witness w;
      w.lhs = lhs;
      w.rhs = rhs;
      w.reason = "transpose is not among the enumerated 2-cells";
      return w;
    }
  }
  return make_witness(lhs, rhs, fwd, bwd);
}

RanProResult right_lift(const Profunctor& k, const Profunctor& l, long long cap) {
  if (k.src() != l.src()) throw ShapeMismatch("lift of relators with different sources");
  Cat C = k.src(), D = k.trg(), E = l.trg();
  OpProd vb = op_prod(D, E);
  OpProd mid = op_prod(C, C);
  RanProResult out;
  out.pts.resize(vb.prod.cat->n_obj());
  SetFunctor t;
  t.base = vb.prod.cat;
  t.ob.resize(vb.prod.cat->n_obj());
  for (int d = 0; d < D->n_obj(); ++d)
    for (int e = 0; e < E->n_obj(); ++e) {
      SetFunctor diag;
      diag.base = mid.prod.cat;
      for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
        auto [c1, c2] = mid.ob_parts(o);
        diag.ob.push_back(function_set(k.at(c2, d), l.at(c1, e)));
      }
      for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
        auto [fm, gm] = mid.mo_parts(m);
        const FinSet& dd = k.at(C->src(gm), d);
        const FinSet& dc = l.at(C->trg(fm), e);
        const FinSet& cd = k.at(C->trg(gm), d);
        const FinSet& cc = l.at(C->src(fm), e);
        std::vector<int> tab(function_set(dd, dc).size());
        for (size_t pi = 0; pi < tab.size(); ++pi) {
          auto im = function_images(dd, dc, static_cast<int>(pi));
          std::vector<int> nim(cd.size());
          for (int kk = 0; kk < cd.size(); ++kk)
            nim[kk] = l.act(fm, E->id_of(e), im[k.act(gm, D->id_of(d), kk)]);
          tab[pi] = function_index(cd, cc, nim);
        }
        diag.mo.push_back(std::move(tab));
      }
      EndResult en = end_of(make_bifunctor(mid, std::move(diag)), cap);
      t.ob[vb.ob(d, e)] = en.carrier;
      out.pts[vb.ob(d, e)] = std::move(en);
    }
  t.mo.resize(vb.prod.cat->n_mor());
  for (int m = 0; m < vb.prod.cat->n_mor(); ++m) {
    auto [um, wm] = vb.mo_parts(m);
    int d1 = D->trg(um), e1 = E->src(wm);
    int d2 = D->src(um), e2 = E->trg(wm);
    const EndResult& dom = out.pts[vb.ob(d1, e1)];
    const EndResult& cod = out.pts[vb.ob(d2, e2)];
    std::vector<int> tab(dom.carrier.size());
    for (size_t e = 0; e < tab.size(); ++e) {
      std::vector<int> fam(C->n_obj());
      for (int c = 0; c < C->n_obj(); ++c) {
        auto im = function_images(k.at(c, d1), l.at(c, e1), dom.families[e][c]);
        std::vector<int> nim(k.at(c, d2).size());
        for (int kk = 0; kk < k.at(c, d2).size(); ++kk)
          nim[kk] = l.act(C->id_of(c), wm, im[k.act(C->id_of(c), um, kk)]);
        fam[c] = function_index(k.at(c, d2), l.at(c, e2), nim);
      }
      int e2x = cod.find_family(fam);
      if (e2x < 0) throw std::runtime_error("lift action escapes the end");
      tab[e] = e2x;
    }
    t.mo[m] = std::move(tab);
  }
  out.value = make_profunctor(std::move(vb), std::move(t));
  return out;
}

RanProResult right_extend(const Profunctor& l, const Profunctor& h, long long cap) {
  if (l.trg() != h.trg()) throw ShapeMismatch("extension of relators with different targets");
  Cat E = l.src(), A = l.trg(), D = h.src();
  OpProd vb = op_prod(E, D);
  OpProd mid = op_prod(A, A);
  RanProResult out;
  out.pts.resize(vb.prod.cat->n_obj());
  SetFunctor t;
  t.base = vb.prod.cat;
  t.ob.resize(vb.prod.cat->n_obj());
  for (int e = 0; e < E->n_obj(); ++e)
    for (int d = 0; d < D->n_obj(); ++d) {
      SetFunctor diag;
      diag.base = mid.prod.cat;
      for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
        auto [a1, a2] = mid.ob_parts(o);
        diag.ob.push_back(function_set(h.at(d, a1), l.at(e, a2)));
      }
      for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
        auto [fm, gm] = mid.mo_parts(m);
        const FinSet& dd = h.at(d, A->trg(fm));
        const FinSet& dc = l.at(e, A->src(gm));
        const FinSet& cd = h.at(d, A->src(fm));
        const FinSet& cc = l.at(e, A->trg(gm));
        std::vector<int> tab(function_set(dd, dc).size());
        for (size_t pi = 0; pi < tab.size(); ++pi) {
          auto im = function_images(dd, dc, static_cast<int>(pi));
          std::vector<int> nim(cd.size());
          for (int kk = 0; kk < cd.size(); ++kk)
            nim[kk] = l.act(E->id_of(e), gm, im[h.act(D->id_of(d), fm, kk)]);
          tab[pi] = function_index(cd, cc, nim);
        }
        diag.mo.push_back(std::move(tab));
      }
      EndResult en = end_of(make_bifunctor(mid, std::move(diag)), cap);
      t.ob[vb.ob(e, d)] = en.carrier;
      out.pts[vb.ob(e, d)] = std::move(en);
    }
  t.mo.resize(vb.prod.cat->n_mor());
  for (int m = 0; m < vb.prod.cat->n_mor(); ++m) {
    auto [um, wm] = vb.mo_parts(m);
    int e1 = E->trg(um), d1 = D->src(wm);
    int e2 = E->src(um), d2 = D->trg(wm);
    const EndResult& dom = out.pts[vb.ob(e1, d1)];
    const EndResult& cod = out.pts[vb.ob(e2, d2)];
    std::vector<int> tab(dom.carrier.size());
    for (size_t e = 0; e < tab.size(); ++e) {
      std::vector<int> fam(A->n_obj());
      for (int a = 0; a < A->n_obj(); ++a) {
        auto im = function_images(h.at(d1, a), l.at(e1, a), dom.families[e][a]);
        std::vector<int> nim(h.at(d2, a).size());
        for (int kk = 0; kk < h.at(d2, a).size(); ++kk)
          nim[kk] = l.act(um, A->id_of(a), im[h.act(wm, A->id_of(a), kk)]);
        fam[a] = function_index(h.at(d2, a), l.at(e2, a), nim);
      }
      int e2x = cod.find_family(fam);
      if (e2x < 0) throw std::runtime_error("extension action escapes the end");
      tab[e] = e2x;
    }
    t.mo[m] = std::move(tab);
  }
  out.value = make_profunctor(std::move(vb), std::move(t));
  return out;
}

PointwiseIso lift_unit_law(const Profunctor& l, long long cap) {
  Cat C = l.src(), E = l.trg();
  Homs hc = all_homs(C);
  RanProResult lf = right_lift(hom_pro(C), l, cap);
  PointwiseIso out;
  out.ok = true;
  const OpProd& vb = lf.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int d = 0; d < C->n_obj(); ++d)
    for (int e = 0; e < E->n_obj(); ++e) {
      int o = vb.ob(d, e);
      const EndResult& en = lf.pts[o];
      std::vector<int> fv(en.carrier.size());
      for (size_t n = 0; n < fv.size(); ++n)
        fv[n] = function_images(hc.set[d][d], l.at(d, e), en.families[n][d])[hc.pos[C->id_of(d)]];
      std::vector<int> bwd(l.at(d, e).size(), -1);
      for (int u = 0; u < l.at(d, e).size(); ++u) {
        std::vector<int> fam(C->n_obj());
        for (int c = 0; c < C->n_obj(); ++c) {
          std::vector<int> im(hc.set[c][d].size());
          for (size_t i = 0; i < im.size(); ++i)
            im[i] = l.act(hc.mors[c][d][i], E->id_of(e), u);
          fam[c] = function_index(hc.set[c][d], l.at(c, e), im);
        }
        bwd[u] = en.find_family(fam);
      }
      Witness w = make_witness(en.carrier, l.at(d, e), fv, bwd);
      fold_reason(out, w, "at (" + C->objects[d] + ", " + E->objects[e] + ")");
      fwd[o] = std::move(fv);
      out.at.push_back(std::move(w));
    }
  fold_nat(out, nat_issues(lf.value.data.t, l.data.t, fwd));
  return out;
}

PointwiseIso extend_unit_law(const Profunctor& l, long long cap) {
  Cat E = l.src(), A = l.trg();
  Homs ha = all_homs(A);
  RanProResult ex = right_extend(l, hom_pro(A), cap);
  PointwiseIso out;
  out.ok = true;
  const OpProd& vb = ex.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int e = 0; e < E->n_obj(); ++e)
    for (int d = 0; d < A->n_obj(); ++d) {
      int o = vb.ob(e, d);
      const EndResult& en = ex.pts[o];
      std::vector<int> fv(en.carrier.size());
      for (size_t n = 0; n < fv.size(); ++n)
        fv[n] = function_images(ha.set[d][d], l.at(e, d), en.families[n][d])[ha.pos[A->id_of(d)]];
      std::vector<int> bwd(l.at(e, d).size(), -1);
      for (int u = 0; u < l.at(e, d).size(); ++u) {
        std::vector<int> fam(A->n_obj());
        for (int a = 0; a < A->n_obj(); ++a) {
          std::vector<int> im(ha.set[d][a].size());
          for (size_t i = 0; i < im.size(); ++i)
            im[i] = l.act(E->id_of(e), ha.mors[d][a][i], u);
          fam[a] = function_index(ha.set[d][a], l.at(e, a), im);
        }
        bwd[u] = en.find_family(fam);
      }
      Witness w = make_witness(en.carrier, l.at(e, d), fv, bwd);
      fold_reason(out, w, "at (" + E->objects[e] + ", " + A->objects[d] + ")");
      fwd[o] = std::move(fv);
      out.at.push_back(std::move(w));
    }
  fold_nat(out, nat_issues(ex.value.data.t, l.data.t, fwd));
  return out;
}

PointwiseIso lift_compose_law(const Profunctor& h, const Profunctor& k, const Profunctor& l,
                              long long cap) {
  Cat C = h.src(), D = h.trg(), D2 = k.trg(), E = l.trg();
  ProComposite hk = pro_compose(h, k);
  RanProResult lhs = right_lift(hk.value, l, cap);
  RanProResult hl = right_lift(h, l, cap);
  RanProResult rhs = right_lift(k, hl.value, cap);
  PointwiseIso out;
  out.ok = true;
  const OpProd& vb = lhs.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int d2 = 0; d2 < D2->n_obj(); ++d2)
    for (int e = 0; e < E->n_obj(); ++e) {
      int o = vb.ob(d2, e);
      const EndResult& len = lhs.pts[o];
      const EndResult& ren = rhs.pts[rhs.value.data.base.ob(d2, e)];
      std::vector<int> fv(len.carrier.size(), -1);
      for (size_t n = 0; n < fv.size(); ++n) {
        std::vector<int> psi(D->n_obj());
        for (int d = 0; d < D->n_obj(); ++d) {
          int dk = k.at(d, d2).size();
          const EndResult& hle = hl.pts[hl.value.data.base.ob(d, e)];
          std::vector<int> im(dk);
          for (int kk = 0; kk < dk; ++kk) {
            std::vector<int> chi(C->n_obj());
            for (int c = 0; c < C->n_obj(); ++c) {
              int hko = hk.value.data.base.ob(c, d2);
              auto phi = function_images(hk.value.at(c, d2), l.at(c, e), len.families[n][c]);
              std::vector<int> cim(h.at(c, d).size());
              for (int x = 0; x < h.at(c, d).size(); ++x)
                cim[x] = phi[hk.pts[hko].inject[d][x * dk + kk]];
              chi[c] = function_index(h.at(c, d), l.at(c, e), cim);
            }
            im[kk] = hle.find_family(chi);
            if (im[kk] < 0) throw std::runtime_error("staged lift escapes the inner end");
          }
          psi[d] = function_index(k.at(d, d2), hle.carrier, im);
        }
        fv[n] = ren.find_family(psi);
        if (fv[n] < 0) throw std::runtime_error("staged lift escapes the outer end");
      }
      std::vector<int> bwd(ren.carrier.size(), -1);
      for (size_t n = 0; n < bwd.size(); ++n) {
        std::vector<int> fam(C->n_obj());
        for (int c = 0; c < C->n_obj(); ++c) {
          int hko = hk.value.data.base.ob(c, d2);
          const CoendResult& co = hk.pts[hko];
          std::vector<int> im(co.carrier.size(), -1);
          for (int d = 0; d < D->n_obj(); ++d) {
            int dk = k.at(d, d2).size();
            const EndResult& hle = hl.pts[hl.value.data.base.ob(d, e)];
            auto psi = function_images(k.at(d, d2), hle.carrier, ren.families[n][d]);
            for (int x = 0; x < h.at(c, d).size(); ++x)
              for (int kk = 0; kk < dk; ++kk) {
                auto chi = function_images(h.at(c, d), l.at(c, e), hle.families[psi[kk]][c]);
                merge_image(im, co.inject[d][x * dk + kk], chi[x], "staged lift");
              }
          }
          fam[c] = function_index(hk.value.at(c, d2), l.at(c, e), im);
        }
        bwd[n] = len.find_family(fam);
        if (bwd[n] < 0) throw std::runtime_error("staged lift escapes the outer end");
      }
      Witness w = make_witness(len.carrier, ren.carrier, fv, bwd);
      fold_reason(out, w, "at (" + D2->objects[d2] + ", " + E->objects[e] + ")");
      fwd[o] = std::move(fv);
      out.at.push_back(std::move(w));
    }
  fold_nat(out, nat_issues(lhs.value.data.t, rhs.value.data.t, fwd));
  return out;
}

PointwiseIso extend_compose_law(const Profunctor& l, const Profunctor& k, const Profunctor& h,
                                long long cap) {
  Cat E = l.src(), A = l.trg(), D2 = k.src(), D = h.src();
  ProComposite hk = pro_compose(h, k);
  RanProResult lhs = right_extend(l, hk.value, cap);
  RanProResult lk = right_extend(l, k, cap);
  RanProResult rhs = right_extend(lk.value, h, cap);
  PointwiseIso out;
  out.ok = true;
  const OpProd& vb = lhs.value.data.base;
  SetNatComp fwd(vb.prod.cat->n_obj());
  for (int e = 0; e < E->n_obj(); ++e)
    for (int d = 0; d < D->n_obj(); ++d) {
      int o = vb.ob(e, d);
      const EndResult& len = lhs.pts[o];
      const EndResult& ren = rhs.pts[rhs.value.data.base.ob(e, d)];
      std::vector<int> fv(len.carrier.size(), -1);
      for (size_t n = 0; n < fv.size(); ++n) {
        std::vector<int> psi(D2->n_obj());
        for (int d2 = 0; d2 < D2->n_obj(); ++d2) {
          int dh = h.at(d, d2).size();
          const EndResult& lke = lk.pts[lk.value.data.base.ob(e, d2)];
          std::vector<int> im(dh);
          for (int x = 0; x < dh; ++x) {
            std::vector<int> chi(A->n_obj());
            for (int a = 0; a < A->n_obj(); ++a) {
              int hko = hk.value.data.base.ob(d, a);
              auto phi = function_images(hk.value.at(d, a), l.at(e, a), len.families[n][a]);
              int dk = k.at(d2, a).size();
              std::vector<int> cim(dk);
              for (int kk = 0; kk < dk; ++kk)
                cim[kk] = phi[hk.pts[hko].inject[d2][x * dk + kk]];
              chi[a] = function_index(k.at(d2, a), l.at(e, a), cim);
            }
            im[x] = lke.find_family(chi);
            if (im[x] < 0) throw std::runtime_error("staged extension escapes the inner end");
          }
          psi[d2] = function_index(h.at(d, d2), lke.carrier, im);
        }
        fv[n] = ren.find_family(psi);
        if (fv[n] < 0) throw std::runtime_error("staged extension escapes the outer end");
      }
      std::vector<int> bwd(ren.carrier.size(), -1);
      for (size_t n = 0; n < bwd.size(); ++n) {
        std::vector<int> fam(A->n_obj());
        for (int a = 0; a < A->n_obj(); ++a) {
          int hko = hk.value.data.base.ob(d, a);
          const CoendResult& co = hk.pts[hko];
          std::vector<int> im(co.carrier.size(), -1);
          for (int d2 = 0; d2 < D2->n_obj(); ++d2) {
            int dk = k.at(d2, a).size();
            const EndResult& lke = lk.pts[lk.value.data.base.ob(e, d2)];
            auto psi = function_images(h.at(d, d2), lke.carrier, ren.families[n][d2]);
            for (int x = 0; x < h.at(d, d2).size(); ++x)
              for (int kk = 0; kk < dk; ++kk) {
                auto chi = function_images(k.at(d2, a), l.at(e, a), lke.families[psi[x]][a]);
                merge_image(im, co.inject[d2][x * dk + kk], chi[kk], "staged extension");
              }
          }
          fam[a] = function_index(hk.value.at(d, a), l.at(e, a), im);
        }
        bwd[n] = len.find_family(fam);
        if (bwd[n] < 0) throw std::runtime_error("staged extension escapes the outer end");
      }
      Witness w = make_witness(len.carrier, ren.carrier, fv, bwd);
      fold_reason(out, w, "at (" + E->objects[e] + ", " + D->objects[d] + ")");
      fwd[o] = std::move(fv);
      out.at.push_back(std::move(w));
    }
  fold_nat(out, nat_issues(lhs.value.data.t, rhs.value.data.t, fwd));
  return out;
}

CollageResult collage(const Profunctor& p) {
  Cat A = p.src(), B = p.trg();
  CollageResult out;
  FinCategory c;
  c.name = "collage(" + A->name + ", " + B->name + ")";
  for (int a = 0; a < A->n_obj(); ++a) {
    out.obj_src.push_back(static_cast<int>(c.objects.size()));
    c.objects.push_back("a:" + A->objects[a]);
  }
  for (int b = 0; b < B->n_obj(); ++b) {
    out.obj_trg.push_back(static_cast<int>(c.objects.size()));
    c.objects.push_back("b:" + B->objects[b]);
  }
  for (int m = 0; m < A->n_mor(); ++m) {
    out.mor_src.push_back(static_cast<int>(c.morphisms.size()));
    c.morphisms.push_back({"a:" + A->morphisms[m].id, out.obj_src[A->src(m)],
                           out.obj_src[A->trg(m)]});
  }
  for (int m = 0; m < B->n_mor(); ++m) {
    out.mor_trg.push_back(static_cast<int>(c.morphisms.size()));
    c.morphisms.push_back({"b:" + B->morphisms[m].id, out.obj_trg[B->src(m)],
                           out.obj_trg[B->trg(m)]});
  }
  out.cross.assign(A->n_obj(), std::vector<std::vector<int>>(B->n_obj()));
  for (int a = 0; a < A->n_obj(); ++a)
    for (int b = 0; b < B->n_obj(); ++b)
      for (int x = 0; x < p.at(a, b).size(); ++x) {
        out.cross[a][b].push_back(static_cast<int>(c.morphisms.size()));
        c.morphisms.push_back({"p:" + A->objects[a] + ">" + B->objects[b] + ":" +
                                   p.at(a, b).elems[x],
                               out.obj_src[a], out.obj_trg[b]});
      }
  c.identity.assign(c.objects.size(), -1);
  for (int a = 0; a < A->n_obj(); ++a) c.identity[out.obj_src[a]] = out.mor_src[A->id_of(a)];
  for (int b = 0; b < B->n_obj(); ++b) c.identity[out.obj_trg[b]] = out.mor_trg[B->id_of(b)];
  int n = static_cast<int>(c.morphisms.size());
  c.comp.assign(n, std::vector<int>(n, -1));
  for (int m2 = 0; m2 < A->n_mor(); ++m2)
    for (int m1 = 0; m1 < A->n_mor(); ++m1)
      if (A->comp[m2][m1] != -1)
        c.comp[out.mor_src[m2]][out.mor_src[m1]] = out.mor_src[A->comp[m2][m1]];
  for (int m2 = 0; m2 < B->n_mor(); ++m2)
    for (int m1 = 0; m1 < B->n_mor(); ++m1)
      if (B->comp[m2][m1] != -1)
        c.comp[out.mor_trg[m2]][out.mor_trg[m1]] = out.mor_trg[B->comp[m2][m1]];
  for (int f = 0; f < A->n_mor(); ++f) {
    int a2 = A->src(f), a = A->trg(f);
    for (int b = 0; b < B->n_obj(); ++b)
      for (int x = 0; x < p.at(a, b).size(); ++x)
        c.comp[out.cross[a][b][x]][out.mor_src[f]] =
            out.cross[a2][b][p.act(f, B->id_of(b), x)];
  }
  for (int v = 0; v < B->n_mor(); ++v) {
    int b = B->src(v), b2 = B->trg(v);
    for (int a = 0; a < A->n_obj(); ++a)
      for (int x = 0; x < p.at(a, b).size(); ++x)
        c.comp[out.mor_trg[v]][out.cross[a][b][x]] =
            out.cross[a][b2][p.act(A->id_of(a), v, x)];
  }
  Caps caps;
  caps.max_objects = std::max(64, static_cast<int>(c.objects.size()));
  caps.max_morphisms = std::max(512, n);
  out.cat = bless(std::move(c), caps);

  TwistedArrows tw = twisted_arrows(out.cat);
  FinCategory fr;
  fr.name = "cross(" + out.cat->name + ")";
  std::vector<int> fr_obj(tw.tw->n_obj(), -1);
  for (int a = 0; a < A->n_obj(); ++a)
    for (int b = 0; b < B->n_obj(); ++b)
      for (int cm : out.cross[a][b]) {
        int two = tw.obj_of_mor[cm];
        fr_obj[two] = static_cast<int>(fr.objects.size());
        fr.objects.push_back(tw.tw->objects[two]);
      }
  std::vector<int> fr_mor(tw.tw->n_mor(), -1);
  for (int m = 0; m < tw.tw->n_mor(); ++m) {
    int s = tw.tw->src(m), t = tw.tw->trg(m);
    if (fr_obj[s] < 0 || fr_obj[t] < 0) continue;
    fr_mor[m] = static_cast<int>(fr.morphisms.size());
    fr.morphisms.push_back({tw.tw->morphisms[m].id, fr_obj[s], fr_obj[t]});
  }
  fr.identity.assign(fr.objects.size(), -1);
  for (int two = 0; two < tw.tw->n_obj(); ++two)
    if (fr_obj[two] >= 0) fr.identity[fr_obj[two]] = fr_mor[tw.tw->id_of(two)];
  fr.comp.assign(fr.morphisms.size(), std::vector<int>(fr.morphisms.size(), -1));
  for (int m2 = 0; m2 < tw.tw->n_mor(); ++m2) {
    if (fr_mor[m2] < 0) continue;
    for (int m1 = 0; m1 < tw.tw->n_mor(); ++m1) {
      if (fr_mor[m1] < 0 || tw.tw->comp[m2][m1] == -1) continue;
      fr.comp[fr_mor[m2]][fr_mor[m1]] = fr_mor[tw.tw->comp[m2][m1]];
    }
  }
  Caps fcaps;
  fcaps.max_objects = std::max(64, static_cast<int>(fr.objects.size()));
  fcaps.max_morphisms = std::max(512, static_cast<int>(fr.morphisms.size()));
  Cat frag = bless(std::move(fr), fcaps);

  std::map<std::tuple<int, int, int>, int> twix;
  for (int m = 0; m < tw.tw->n_mor(); ++m)
    twix[{tw.mor_pair[m][0], tw.mor_pair[m][1], tw.mor_pair[m][2]}] = m;
  ElementsCat el = category_of_elements(p.data.t);
  FinFunctor j;
  j.src = el.cat;
  j.trg = frag;
  for (int eo = 0; eo < el.cat->n_obj(); ++eo) {
    auto [o, u] = el.obj_elt[eo];
    auto [a, b] = p.data.base.ob_parts(o);
    j.on_obj.push_back(fr_obj[tw.obj_of_mor[out.cross[a][b][u]]]);
  }
  for (int em = 0; em < el.cat->n_mor(); ++em) {
    auto [pm, u] = el.mor_lift[em];
    auto [fa, fb] = p.data.base.mo_parts(pm);
    int a1 = A->trg(fa), b1 = B->src(fb);
    auto it = twix.find({out.mor_src[fa], out.mor_trg[fb], out.cross[a1][b1][u]});
    if (it == twix.end()) throw std::runtime_error("glued twisted arrow is missing");
    j.on_mor.push_back(fr_mor[it->second]);
  }
  out.elements_iso = check_iso(bless_functor(std::move(j)));
  return out;
}

ProActionResult pro_action(const Profunctor& p, const SetFunctor& f) {
  if (f.base != p.src()) throw ShapeMismatch("action on a copresheaf over a different base");
  Cat A = p.src(), B = p.trg();
  OpProd mid = op_prod(A, A);
  ProActionResult out;
  out.pts.resize(B->n_obj());
  SetFunctor t;
  t.base = B;
  t.ob.resize(B->n_obj());
  for (int b = 0; b < B->n_obj(); ++b) {
    SetFunctor diag;
    diag.base = mid.prod.cat;
    for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
      auto [a1, a2] = mid.ob_parts(o);
      diag.ob.push_back(product_set(p.at(a1, b), f.ob[a2]));
    }
    for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
      auto [fm, gm] = mid.mo_parts(m);
      int d1 = A->trg(fm), d2 = A->src(gm);
      int dn = static_cast<int>(f.ob[d2].size());
      int cn = static_cast<int>(f.ob[A->trg(gm)].size());
      std::vector<int> tab(p.at(d1, b).size() * dn);
      for (int i = 0; i < p.at(d1, b).size(); ++i) {
        int iv = p.act(fm, B->id_of(b), i);
        for (int j = 0; j < dn; ++j) tab[i * dn + j] = iv * cn + f.mo[gm][j];
      }
      diag.mo.push_back(std::move(tab));
    }
    CoendResult co = coend_of(make_bifunctor(mid, std::move(diag)));
    t.ob[b] = co.carrier;
    out.pts[b] = std::move(co);
  }
  t.mo.resize(B->n_mor());
  for (int g = 0; g < B->n_mor(); ++g) {
    int b1 = B->src(g), b2 = B->trg(g);
    std::vector<int> tab(out.pts[b1].carrier.size(), -1);
    for (int a = 0; a < A->n_obj(); ++a) {
      int dn = static_cast<int>(f.ob[a].size());
      for (int i = 0; i < p.at(a, b1).size(); ++i) {
        int iv = p.act(A->id_of(a), g, i);
        for (int j = 0; j < dn; ++j)
          merge_image(tab, out.pts[b1].inject[a][i * dn + j],
                      out.pts[b2].inject[a][iv * dn + j], "tensor action");
      }
    }
    t.mo[g] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(t));
  return out;
}

PointwiseIso action_unit_law(Cat c, const SetFunctor& f) {
  if (f.base != c) throw ShapeMismatch("copresheaf over a different base");
  Homs hc = all_homs(c);
  ProActionResult act = pro_action(hom_pro(c), f);
  PointwiseIso out;
  out.ok = true;
  SetNatComp fwd(c->n_obj());
  for (int b = 0; b < c->n_obj(); ++b) {
    const CoendResult& co = act.pts[b];
    std::vector<int> fv(co.carrier.size(), -1);
    for (int a = 0; a < c->n_obj(); ++a) {
      int dn = static_cast<int>(f.ob[a].size());
      for (size_t i = 0; i < hc.mors[a][b].size(); ++i)
        for (int j = 0; j < dn; ++j)
          merge_image(fv, co.inject[a][static_cast<int>(i) * dn + j],
                      f.mo[hc.mors[a][b][i]][j], "unit collapse");
    }
    int dn = static_cast<int>(f.ob[b].size());
    std::vector<int> bwd(dn);
    for (int u = 0; u < dn; ++u) bwd[u] = co.inject[b][hc.pos[c->id_of(b)] * dn + u];
    Witness w = make_witness(co.carrier, f.ob[b], fv, bwd);
    fold_reason(out, w, "at " + c->objects[b]);
    fwd[b] = std::move(fv);
    out.at.push_back(std::move(w));
  }
  auto issues = validate_setnat(act.value, f, fwd);
  fold_nat(out, issues);
  return out;
}

PointwiseIso action_compose_law(const Profunctor& p, const Profunctor& q, const SetFunctor& f) {
  Cat A = p.src(), B = p.trg(), C = q.trg();
  ProComposite pq = pro_compose(p, q);
  ProActionResult lhs = pro_action(pq.value, f);
  ProActionResult pf = pro_action(p, f);
  ProActionResult rhs = pro_action(q, pf.value);
  PointwiseIso out;
  out.ok = true;
  SetNatComp fwd(C->n_obj());
  for (int c = 0; c < C->n_obj(); ++c) {
    const CoendResult& lco = lhs.pts[c];
    const CoendResult& rco = rhs.pts[c];
    std::vector<int> fv(lco.carrier.size(), -1);
    std::vector<int> bwd(rco.carrier.size(), -1);
    for (int a = 0; a < A->n_obj(); ++a) {
      int dn = static_cast<int>(f.ob[a].size());
      int o = pq.value.data.base.ob(a, c);
      for (int b = 0; b < B->n_obj(); ++b) {
        int dq = q.at(b, c).size();
        int npf = static_cast<int>(pf.value.ob[b].size());
        for (int x = 0; x < p.at(a, b).size(); ++x)
          for (int y = 0; y < dq; ++y) {
            int w = pq.pts[o].inject[b][x * dq + y];
            for (int u = 0; u < dn; ++u) {
              int k = lco.inject[a][w * dn + u];
              int inner = pf.pts[b].inject[a][x * dn + u];
              int img = rco.inject[b][y * npf + inner];
              merge_image(fv, k, img, "regrouped tensor");
              merge_image(bwd, img, k, "regrouped tensor");
            }
          }
      }
    }
    Witness w = make_witness(lco.carrier, rco.carrier, fv, bwd);
    fold_reason(out, w, "at " + C->objects[c]);
    fwd[c] = std::move(fv);
    out.at.push_back(std::move(w));
  }
  auto issues = validate_setnat(lhs.value, rhs.value, fwd);
  fold_nat(out, issues);
  return out;
}

AdjointnessReport adjoint_via_embeddings(const FinFunctor& f, const FinFunctor& g) {
  if (f.src != g.trg || f.trg != g.src)
    throw ShapeMismatch("candidate adjoints must run in opposite directions");
  Profunctor pf = embed_cov(f);
  Profunctor pg = rebase_like(pf, embed_contra(g));
  AdjointnessReport out;
  auto nats = all_setnats(pf.data.t, pg.data.t);
  for (const SetNatComp& t : nats) {
    bool bij = true;
    for (size_t o = 0; o < t.size() && bij; ++o) {
      if (t[o].size() != pg.data.t.ob[o].elems.size()) {
        bij = false;
        break;
      }
      std::vector<char> hit(t[o].size(), 0);
      for (int i : t[o]) {
        if (hit[i]) {
          bij = false;
          break;
        }
        hit[i] = 1;
      }
    }
    if (bij) {
      out.adjoint = true;
      out.iso = t;
      return out;
    }
  }
  out.reason = "no invertible 2-cell between the embeddings";
  return out;
}

Profunctor pro_from_presheaf(Cat c, const SetFunctor& w) {
  if (!op_shaped(c, w.base)) throw ShapeMismatch("presheaf host is not shaped like the opposite");
  OpProd base = op_prod(c, terminal_cat());
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob = w.ob;
  t.mo = w.mo;
  return make_profunctor(std::move(base), std::move(t));
}

SetFunctor presheaf_from_pro(const Profunctor& p, Cat host) {
  if (p.trg()->n_obj() != 1 || p.trg()->n_mor() != 1)
    throw ShapeMismatch("presheaf relator must land in the point");
  if (!op_shaped(p.src(), host))
    throw ShapeMismatch("presheaf host is not shaped like the opposite");
  SetFunctor out;
  out.base = host;
  out.ob = p.data.t.ob;
  out.mo = p.data.t.mo;
  return bless_setfunctor(std::move(out));
}

Profunctor pro_from_copresheaf(const SetFunctor& f) {
  OpProd base = op_prod(terminal_cat(), f.base);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob = f.ob;
  t.mo = f.mo;
  return make_profunctor(std::move(base), std::move(t));
}

SetFunctor copresheaf_from_pro(const Profunctor& p) {
  if (p.src()->n_obj() != 1 || p.src()->n_mor() != 1)
    throw ShapeMismatch("copresheaf relator must start at the point");
  SetFunctor out;
  out.base = p.trg();
  out.ob = p.data.t.ob;
  out.mo = p.data.t.mo;
  return bless_setfunctor(std::move(out));
}

}  // namespace fce

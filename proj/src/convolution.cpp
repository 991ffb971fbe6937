#include "fce/convolution.hpp"

#include <algorithm>
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

void merge_image(std::vector<int>& tab, int slot, int img, const char* what) {
  if (tab[slot] == -1)
    tab[slot] = img;
  else if (tab[slot] != img)
    throw std::runtime_error(std::string(what) + " is not constant on classes");
}

std::vector<int> invert_or_holes(const std::vector<int>& fwd, int rhs) {
  std::vector<int> bwd(rhs, -1);
  for (size_t i = 0; i < fwd.size(); ++i)
    if (fwd[i] >= 0 && fwd[i] < rhs && bwd[fwd[i]] == -1) bwd[fwd[i]] = static_cast<int>(i);
  return bwd;
}

Witness table_witness(const FinSet& l, const FinSet& r, std::vector<int> fwd) {
  std::vector<int> bwd = invert_or_holes(fwd, r.size());
  return make_witness(l, r, std::move(fwd), std::move(bwd));
}

int aix(int n, int a, int b, int c) { return (a * n + b) * n + c; }
int qix(int n, int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; }
int kix(int nA, int nC, int a, int b, int x) { return (a * nA + b) * nC + x; }

// evaluation of a tensor-ed pair index without carrying the product category
struct Dec3 {
  int p, s, t;
};
Dec3 dec3(int point, int ns, int nt) {
  return {point / (ns * nt), (point % (ns * nt)) / nt, point % nt};
}

// domain of a unit comparison: the collapse of unit x relator with one slot pinned
CoendResult unit_box(const ProdCat& sq, const Profunctor& p, const SetFunctor& j, int a, int b,
                     bool unit_first) {
  Cat base = sq.left;
  OpProd mid = op_prod(base, base);
  SetFunctor diag;
  diag.base = mid.prod.cat;
  auto slot = [&](int y) { return unit_first ? sq.ob(y, a) : sq.ob(a, y); };
  for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
    auto [y1, y2] = mid.ob_parts(o);
    diag.ob.push_back(product_set(j.ob[y2], p.at(slot(y1), b)));
  }
  int idb = base->id_of(b);
  for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
    auto [um, vm] = mid.mo_parts(m);
    int d1 = base->trg(um), d2 = base->src(vm);
    int np1 = p.at(slot(d1), b).size();
    int np2 = p.at(slot(base->src(um)), b).size();
    std::vector<int> tab(static_cast<size_t>(j.ob[d2].size()) * np1);
    int pm = unit_first ? sq.mo(um, base->id_of(a)) : sq.mo(base->id_of(a), um);
    for (int jj = 0; jj < j.ob[d2].size(); ++jj)
      for (int pp = 0; pp < np1; ++pp)
        tab[jj * np1 + pp] = j.mo[vm][jj] * np2 + p.act(pm, idb, pp);
    diag.mo.push_back(std::move(tab));
  }
  return coend_of(make_bifunctor(mid, std::move(diag)));
}

// the two collapsed associativity carriers; `lhs` nests in the second slot
CoendResult side_box(const ProdCat& sq, const Profunctor& p, int a, int b, int c, int d,
                     bool lhs) {
  Cat base = sq.left;
  OpProd mid = op_prod(base, base);
  SetFunctor diag;
  diag.base = mid.prod.cat;
  for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
    auto [y1, y2] = mid.ob_parts(o);
    if (lhs)
      diag.ob.push_back(product_set(p.at(sq.ob(a, y1), d), p.at(sq.ob(b, c), y2)));
    else
      diag.ob.push_back(product_set(p.at(sq.ob(a, b), y2), p.at(sq.ob(y1, c), d)));
  }
  int idd = base->id_of(d);
  for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
    auto [um, vm] = mid.mo_parts(m);
    int d1 = base->trg(um), d2 = base->src(vm);
    std::vector<int> tab;
    if (lhs) {
      int np1 = p.at(sq.ob(a, d1), d).size(), nq1 = p.at(sq.ob(b, c), d2).size();
      int nq2 = p.at(sq.ob(b, c), base->trg(vm)).size();
      int bc = sq.cat->id_of(sq.ob(b, c));
      tab.resize(static_cast<size_t>(np1) * nq1);
      for (int pp = 0; pp < np1; ++pp)
        for (int qq = 0; qq < nq1; ++qq)
          tab[pp * nq1 + qq] =
              p.act(sq.mo(base->id_of(a), um), idd, pp) * nq2 + p.act(bc, vm, qq);
    } else {
      int np1 = p.at(sq.ob(a, b), d2).size(), nq1 = p.at(sq.ob(d1, c), d).size();
      int nq2 = p.at(sq.ob(base->src(um), c), d).size();
      int ab = sq.cat->id_of(sq.ob(a, b));
      tab.resize(static_cast<size_t>(np1) * nq1);
      for (int pp = 0; pp < np1; ++pp)
        for (int qq = 0; qq < nq1; ++qq)
          tab[pp * nq1 + qq] =
              p.act(ab, vm, pp) * nq2 + p.act(sq.mo(um, base->id_of(c)), idd, qq);
    }
    diag.mo.push_back(std::move(tab));
  }
  return coend_of(make_bifunctor(mid, std::move(diag)));
}

CoendResult kernel_lhs_box(const Profunctor& k, const PromonoidalStructure& pc, int a, int b,
                           int x) {
  Cat A = k.src(), C = k.trg();
  Cat sqc = pc.square.cat;
  OpProd mid = op_prod(sqc, sqc);
  SetFunctor diag;
  diag.base = mid.prod.cat;
  for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
    auto [q1, q2] = mid.ob_parts(o);
    auto [y2, z2] = pc.square.ob_parts(q2);
    diag.ob.push_back(product_set(pc.p.at(q1, x), product_set(k.at(a, y2), k.at(b, z2))));
  }
  int idx = C->id_of(x), ida = A->id_of(a), idb = A->id_of(b);
  for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
    auto [um, vm] = mid.mo_parts(m);
    int q1 = sqc->trg(um), q2 = sqc->src(vm);
    auto [y1, z1] = pc.square.ob_parts(q2);
    auto [va, vb] = pc.square.mo_parts(vm);
    auto [y3, z3] = pc.square.ob_parts(sqc->trg(vm));
    int nw = pc.p.at(q1, x).size();
    int nu1 = k.at(a, y1).size(), nv1 = k.at(b, z1).size();
    int nu2 = k.at(a, y3).size(), nv2 = k.at(b, z3).size();
    std::vector<int> tab(static_cast<size_t>(nw) * nu1 * nv1);
    for (int w = 0; w < nw; ++w)
      for (int u = 0; u < nu1; ++u)
        for (int v = 0; v < nv1; ++v)
          tab[(static_cast<size_t>(w) * nu1 + u) * nv1 + v] =
              (pc.p.act(um, idx, w) * nu2 + k.act(ida, va, u)) * nv2 + k.act(idb, vb, v);
    diag.mo.push_back(std::move(tab));
  }
  return coend_of(make_bifunctor(mid, std::move(diag)));
}

CoendResult kernel_rhs_box(const Profunctor& k, const PromonoidalStructure& pa, int a, int b,
                           int x) {
  Cat A = k.src(), C = k.trg();
  OpProd mid = op_prod(A, A);
  int pair = pa.square.ob(a, b);
  SetFunctor diag;
  diag.base = mid.prod.cat;
  for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
    auto [c1, c2] = mid.ob_parts(o);
    diag.ob.push_back(product_set(k.at(c1, x), pa.p.at(pair, c2)));
  }
  int idx = C->id_of(x);
  int sqid = pa.square.cat->id_of(pair);
  for (int m = 0; m < mid.prod.cat->n_mor(); ++m) {
    auto [um, vm] = mid.mo_parts(m);
    int d1 = A->trg(um), d2 = A->src(vm);
    int nu1 = k.at(d1, x).size(), np1 = pa.p.at(pair, d2).size();
    int np2 = pa.p.at(pair, A->trg(vm)).size();
    std::vector<int> tab(static_cast<size_t>(nu1) * np1);
    for (int u = 0; u < nu1; ++u)
      for (int pp = 0; pp < np1; ++pp)
        tab[u * np1 + pp] = k.act(um, idx, u) * np2 + pa.p.act(sqid, vm, pp);
    diag.mo.push_back(std::move(tab));
  }
  return coend_of(make_bifunctor(mid, std::move(diag)));
}

int invert_mor(Cat c, int m) {
  int a = c->src(m), b = c->trg(m);
  for (int g = 0; g < c->n_mor(); ++g)
    if (c->src(g) == b && c->trg(g) == a && c->compose(g, m) == c->id_of(a) &&
        c->compose(m, g) == c->id_of(b))
      return g;
  return -1;
}

}  // namespace

MonoidalStructure make_monoidal(Cat c, FinFunctor tensor, int unit, std::vector<int> assoc,
                                std::vector<int> lun, std::vector<int> run) {
  MonoidalStructure m;
  m.base = c;
  m.square = product(c, c);
  if (!tensor.src || tensor.src->n_obj() != m.square.cat->n_obj() ||
      tensor.src->n_mor() != m.square.cat->n_mor())
    throw ShapeMismatch("tensor is not a functor out of the squared base");
  if (tensor.trg != c) throw ShapeMismatch("tensor lands outside the base");
  tensor.src = m.square.cat;
  m.tensor = bless_functor(std::move(tensor));
  int n = c->n_obj();
  if (unit < 0 || unit >= n) throw ShapeMismatch("unit object out of range");
  m.unit = unit;
  if (static_cast<int>(assoc.size()) != n * n * n || static_cast<int>(lun.size()) != n ||
      static_cast<int>(run.size()) != n)
    throw ShapeMismatch("coherence tables have the wrong size");
  m.assoc = std::move(assoc);
  m.lun = std::move(lun);
  m.run = std::move(run);

  m.assoc_inv.resize(m.assoc.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        int ix = aix(n, a, b, d);
        int mor = m.assoc[ix];
        int want_s = m.tob(m.tob(a, b), d), want_t = m.tob(a, m.tob(b, d));
        if (mor < 0 || mor >= c->n_mor() || c->src(mor) != want_s || c->trg(mor) != want_t)
          throw AssociativityIsoFailure("component at (" + c->objects[a] + ", " + c->objects[b] +
                                        ", " + c->objects[d] + ") has wrong endpoints");
        int inv = invert_mor(c, mor);
        if (inv < 0)
          throw AssociativityIsoFailure("component at (" + c->objects[a] + ", " + c->objects[b] +
                                        ", " + c->objects[d] + ") is not invertible");
        m.assoc_inv[ix] = inv;
      }
  m.lun_inv.resize(n);
  m.run_inv.resize(n);
  for (int a = 0; a < n; ++a) {
    if (c->src(m.lun[a]) != m.tob(unit, a) || c->trg(m.lun[a]) != a)
      throw UnitIsoFailure("left unitor at " + c->objects[a] + " has wrong endpoints");
    if (c->src(m.run[a]) != m.tob(a, unit) || c->trg(m.run[a]) != a)
      throw UnitIsoFailure("right unitor at " + c->objects[a] + " has wrong endpoints");
    m.lun_inv[a] = invert_mor(c, m.lun[a]);
    m.run_inv[a] = invert_mor(c, m.run[a]);
    if (m.lun_inv[a] < 0 || m.run_inv[a] < 0)
      throw UnitIsoFailure("unitor at " + c->objects[a] + " is not invertible");
  }

  for (int u = 0; u < c->n_mor(); ++u)
    for (int v = 0; v < c->n_mor(); ++v)
      for (int w = 0; w < c->n_mor(); ++w) {
        int l = c->compose(m.assoc[aix(n, c->trg(u), c->trg(v), c->trg(w))],
                           m.tmo(m.tmo(u, v), w));
        int r = c->compose(m.tmo(u, m.tmo(v, w)),
                           m.assoc[aix(n, c->src(u), c->src(v), c->src(w))]);
        if (l != r)
          throw AssociativityIsoFailure("associator is not natural along (" +
                                        c->morphisms[u].id + ", " + c->morphisms[v].id + ", " +
                                        c->morphisms[w].id + ")");
      }
  int idu = c->id_of(unit);
  for (int u = 0; u < c->n_mor(); ++u) {
    if (c->compose(m.lun[c->trg(u)], m.tmo(idu, u)) != c->compose(u, m.lun[c->src(u)]))
      throw UnitIsoFailure("left unitor is not natural along " + c->morphisms[u].id);
    if (c->compose(m.run[c->trg(u)], m.tmo(u, idu)) != c->compose(u, m.run[c->src(u)]))
      throw UnitIsoFailure("right unitor is not natural along " + c->morphisms[u].id);
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) {
          int top = c->compose(m.assoc[aix(n, a, b, m.tob(d, e))],
                               m.assoc[aix(n, m.tob(a, b), d, e)]);
          int bot = c->compose(
              m.tmo(c->id_of(a), m.assoc[aix(n, b, d, e)]),
              c->compose(m.assoc[aix(n, a, m.tob(b, d), e)],
                         m.tmo(m.assoc[aix(n, a, b, d)], c->id_of(e))));
          if (top != bot)
            throw AssociativityIsoFailure("pentagon fails at (" + c->objects[a] + ", " +
                                          c->objects[b] + ", " + c->objects[d] + ", " +
                                          c->objects[e] + ")");
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int l = c->compose(m.tmo(c->id_of(a), m.lun[b]), m.assoc[aix(n, a, unit, b)]);
      if (l != m.tmo(m.run[a], c->id_of(b)))
        throw UnitIsoFailure("triangle fails at (" + c->objects[a] + ", " + c->objects[b] + ")");
    }

  m.symmetric = true;
  for (int a = 0; a < n && m.symmetric; ++a)
    for (int b = 0; b < n && m.symmetric; ++b)
      if (m.tob(a, b) != m.tob(b, a)) m.symmetric = false;
  for (int u = 0; u < c->n_mor() && m.symmetric; ++u)
    for (int v = 0; v < c->n_mor() && m.symmetric; ++v)
      if (m.tmo(u, v) != m.tmo(v, u)) m.symmetric = false;
  return m;
}

MonoidalStructure discrete_monoidal(const std::string& name,
                                    const std::vector<std::string>& elems,
                                    const std::vector<std::vector<int>>& mult, int unit) {
  int n = static_cast<int>(elems.size());
  if (static_cast<int>(mult.size()) != n)
    throw ShapeMismatch("multiplication table has wrong height");
  for (const auto& row : mult)
    if (static_cast<int>(row.size()) != n)
      throw ShapeMismatch("multiplication table has wrong width");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw AssociativityIsoFailure("multiplication is not associative at (" + elems[a] +
                                        ", " + elems[b] + ", " + elems[c] + ")");
  for (int a = 0; a < n; ++a)
    if (mult[unit][a] != a || mult[a][unit] != a)
      throw UnitIsoFailure("unit law fails at " + elems[a]);
  Cat c = discrete_cat(name, elems);
  ProdCat sq = product(c, c);
  FinFunctor tensor;
  tensor.src = sq.cat;
  tensor.trg = c;
  tensor.on_obj.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tensor.on_obj[sq.ob(a, b)] = mult[a][b];
  tensor.on_mor = tensor.on_obj;
  std::vector<int> assoc(n * n * n), lun(n), run(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) assoc[aix(n, a, b, d)] = c->id_of(mult[mult[a][b]][d]);
  for (int a = 0; a < n; ++a) lun[a] = run[a] = c->id_of(a);
  return make_monoidal(c, std::move(tensor), unit, std::move(assoc), std::move(lun),
                       std::move(run));
}

MonoidalStructure meet_monoidal(Cat poset, int top) {
  int n = poset->n_obj();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto h = poset->hom(a, b);
      if (h.size() > 1) throw ShapeMismatch("base is not thin");
      le[a][b] = !h.empty();
    }
  for (int a = 0; a < n; ++a)
    if (!le[a][top]) throw ShapeMismatch("unit is not the top element");
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int m = 0; m < n; ++m) {
        if (!le[m][a] || !le[m][b]) continue;
        bool best = true;
        for (int z = 0; z < n; ++z)
          if (le[z][a] && le[z][b] && !le[z][m]) best = false;
        if (best) {
          meet[a][b] = m;
          break;
        }
      }
      if (meet[a][b] < 0)
        throw ShapeMismatch("poset lacks a meet for (" + poset->objects[a] + ", " +
                            poset->objects[b] + ")");
    }
  ProdCat sq = product(poset, poset);
  FinFunctor tensor;
  tensor.src = sq.cat;
  tensor.trg = poset;
  tensor.on_obj.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tensor.on_obj[sq.ob(a, b)] = meet[a][b];
  tensor.on_mor.resize(sq.cat->n_mor());
  for (int u = 0; u < poset->n_mor(); ++u)
    for (int v = 0; v < poset->n_mor(); ++v) {
      int s = meet[poset->src(u)][poset->src(v)], t = meet[poset->trg(u)][poset->trg(v)];
      tensor.on_mor[sq.mo(u, v)] = poset->hom(s, t).at(0);
    }
  std::vector<int> assoc(n * n * n), lun(n), run(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) assoc[aix(n, a, b, d)] = poset->id_of(meet[meet[a][b]][d]);
  for (int a = 0; a < n; ++a) lun[a] = run[a] = poset->id_of(a);
  return make_monoidal(poset, std::move(tensor), top, std::move(assoc), std::move(lun),
                       std::move(run));
}

DayResult day_convolve(const SetFunctor& f, const SetFunctor& g, const MonoidalStructure& m) {
  if (f.base != m.base || g.base != m.base)
    throw ShapeMismatch("convolution factors live on a different base");
  Cat base = m.base;
  Cat sqc = m.square.cat;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  OpProd mid = op_prod(sqc, sqc);
  DayResult out;
  out.pts.resize(n);
  out.value.base = base;
  out.value.ob.resize(n);
  for (int x = 0; x < n; ++x) {
    SetFunctor diag;
    diag.base = mid.prod.cat;
    for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
      auto [q1, q2] = mid.ob_parts(o);
      auto [a2, b2] = m.square.ob_parts(q2);
      diag.ob.push_back(product_set(hd.set[m.tensor.ob(q1)][x], product_set(f.ob[a2], g.ob[b2])));
    }
    for (int mm = 0; mm < mid.prod.cat->n_mor(); ++mm) {
      auto [um, vm] = mid.mo_parts(mm);
      int q1 = sqc->trg(um), q2 = sqc->src(vm);
      auto [a1, b1] = m.square.ob_parts(q2);
      auto [va, vb] = m.square.mo_parts(vm);
      auto [a3, b3] = m.square.ob_parts(sqc->trg(vm));
      const auto& homs1 = hd.mors[m.tensor.ob(q1)][x];
      int nf1 = f.ob[a1].size(), ng1 = g.ob[b1].size();
      int nf2 = f.ob[a3].size(), ng2 = g.ob[b3].size();
      std::vector<int> tab(homs1.size() * static_cast<size_t>(nf1) * ng1);
      for (size_t hh = 0; hh < homs1.size(); ++hh) {
        int hp = hd.pos[base->compose(homs1[hh], m.tensor.mo(um))];
        for (int s = 0; s < nf1; ++s)
          for (int t = 0; t < ng1; ++t)
            tab[(hh * nf1 + s) * ng1 + t] =
                (hp * nf2 + f.mo[va][s]) * ng2 + g.mo[vb][t];
      }
      diag.mo.push_back(std::move(tab));
    }
    CoendResult co = coend_of(make_bifunctor(mid, std::move(diag)));
    out.value.ob[x] = co.carrier;
    out.pts[x] = std::move(co);
  }
  out.value.mo.resize(base->n_mor());
  for (int w = 0; w < base->n_mor(); ++w) {
    int x1 = base->src(w), x2 = base->trg(w);
    std::vector<int> tab(out.pts[x1].carrier.size(), -1);
    for (int q = 0; q < sqc->n_obj(); ++q) {
      auto [aa, bb] = m.square.ob_parts(q);
      const auto& homs1 = hd.mors[m.tensor.ob(q)][x1];
      int nf = f.ob[aa].size(), ng = g.ob[bb].size();
      for (size_t hh = 0; hh < homs1.size(); ++hh) {
        int hp = hd.pos[base->compose(w, homs1[hh])];
        for (int s = 0; s < nf; ++s)
          for (int t = 0; t < ng; ++t)
            merge_image(tab, out.pts[x1].inject[q][(hh * nf + s) * ng + t],
                        out.pts[x2].inject[q][(static_cast<size_t>(hp) * nf + s) * ng + t],
                        "convolution transport");
      }
    }
    out.value.mo[w] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(out.value));
  return out;
}

PointwiseIso day_unit_right(const SetFunctor& f, const MonoidalStructure& m) {
  Cat base = m.base;
  Homs hd = all_homs(base);
  SetFunctor yi = representable_cov(base, m.unit);
  DayResult conv = day_convolve(f, yi, m);
  PointwiseIso out;
  out.ok = true;
  int idu = hd.pos[base->id_of(m.unit)];
  for (int x = 0; x < base->n_obj(); ++x) {
    std::vector<int> fwd(conv.pts[x].carrier.size(), -1);
    for (int q = 0; q < m.square.cat->n_obj(); ++q) {
      auto [cc, dd] = m.square.ob_parts(q);
      const auto& homs1 = hd.mors[m.tob(cc, dd)][x];
      int nf = f.ob[cc].size(), nj = yi.ob[dd].size();
      for (size_t hh = 0; hh < homs1.size(); ++hh)
        for (int s = 0; s < nf; ++s)
          for (int jj = 0; jj < nj; ++jj) {
            int mw = hd.mors[m.unit][dd][jj];
            int m1 = base->compose(base->compose(homs1[hh], m.tmo(base->id_of(cc), mw)),
                                   m.run_inv[cc]);
            merge_image(fwd, conv.pts[x].inject[q][(hh * nf + s) * nj + jj], f.mo[m1][s],
                        "right unit collapse");
          }
    }
    std::vector<int> bwd(f.ob[x].size());
    int q0 = m.square.ob(x, m.unit);
    int njj = yi.ob[m.unit].size();
    for (int s = 0; s < f.ob[x].size(); ++s)
      bwd[s] = conv.pts[x].inject[q0][(static_cast<size_t>(hd.pos[m.run[x]]) * f.ob[x].size() + s) *
                                          njj +
                                      idu];
    Witness w = make_witness(conv.value.ob[x], f.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + base->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(conv.value, f, iso_fwd(out)));
  return out;
}

PointwiseIso day_unit_left(const SetFunctor& f, const MonoidalStructure& m) {
  Cat base = m.base;
  Homs hd = all_homs(base);
  SetFunctor yi = representable_cov(base, m.unit);
  DayResult conv = day_convolve(yi, f, m);
  PointwiseIso out;
  out.ok = true;
  int idu = hd.pos[base->id_of(m.unit)];
  for (int x = 0; x < base->n_obj(); ++x) {
    std::vector<int> fwd(conv.pts[x].carrier.size(), -1);
    for (int q = 0; q < m.square.cat->n_obj(); ++q) {
      auto [dd, cc] = m.square.ob_parts(q);
      const auto& homs1 = hd.mors[m.tob(dd, cc)][x];
      int nj = yi.ob[dd].size(), nf = f.ob[cc].size();
      for (size_t hh = 0; hh < homs1.size(); ++hh)
        for (int jj = 0; jj < nj; ++jj)
          for (int s = 0; s < nf; ++s) {
            int mw = hd.mors[m.unit][dd][jj];
            int m1 = base->compose(base->compose(homs1[hh], m.tmo(mw, base->id_of(cc))),
                                   m.lun_inv[cc]);
            merge_image(fwd, conv.pts[x].inject[q][(hh * nj + jj) * nf + s], f.mo[m1][s],
                        "left unit collapse");
          }
    }
    std::vector<int> bwd(f.ob[x].size());
    int q0 = m.square.ob(m.unit, x);
    for (int s = 0; s < f.ob[x].size(); ++s)
      bwd[s] = conv.pts[x].inject[q0][(static_cast<size_t>(hd.pos[m.lun[x]]) * yi.ob[m.unit].size() +
                                       idu) *
                                          f.ob[x].size() +
                                      s];
    Witness w = make_witness(conv.value.ob[x], f.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + base->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(conv.value, f, iso_fwd(out)));
  return out;
}

PointwiseIso day_assoc(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                       const MonoidalStructure& m) {
  Cat base = m.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  DayResult fg = day_convolve(f, g, m);
  DayResult gh = day_convolve(g, h, m);
  DayResult lhs = day_convolve(fg.value, h, m);
  DayResult rhs = day_convolve(f, gh.value, m);
  PointwiseIso out;
  out.ok = true;
  for (int d = 0; d < n; ++d) {
    std::vector<int> fwd(lhs.pts[d].carrier.size(), -1);
    for (int q = 0; q < m.square.cat->n_obj(); ++q) {
      auto [c, e] = m.square.ob_parts(q);
      const auto& uhoms = hd.mors[m.tob(c, e)][d];
      int nfg = fg.value.ob[c].size(), nh = h.ob[e].size();
      for (size_t uu = 0; uu < uhoms.size(); ++uu)
        for (int mc = 0; mc < nfg; ++mc)
          for (int hh = 0; hh < nh; ++hh) {
            int cls = lhs.pts[d].inject[q][(uu * nfg + mc) * nh + hh];
            auto [q2, pt2] = fg.pts[c].class_rep[mc];
            auto [a, b] = m.square.ob_parts(q2);
            Dec3 in = dec3(pt2, f.ob[a].size(), g.ob[b].size());
            int mv = hd.mors[m.tob(a, b)][c][in.p];
            int w =
                base->compose(base->compose(uhoms[uu], m.tmo(mv, base->id_of(e))),
                              m.assoc_inv[aix(n, a, b, e)]);
            int be = m.tob(b, e);
            int inner =
                gh.pts[be].inject[m.square.ob(b, e)]
                                 [(static_cast<size_t>(hd.pos[base->id_of(be)]) * g.ob[b].size() +
                                   in.t) *
                                      h.ob[e].size() +
                                  hh];
            int ngh = gh.value.ob[be].size();
            int img = rhs.pts[d].inject[m.square.ob(a, be)]
                                       [(static_cast<size_t>(hd.pos[w]) * f.ob[a].size() + in.s) *
                                            ngh +
                                        inner];
            merge_image(fwd, cls, img, "associativity collapse");
          }
    }
    std::vector<int> bwd(rhs.pts[d].carrier.size(), -1);
    for (int q = 0; q < m.square.cat->n_obj(); ++q) {
      auto [a, y] = m.square.ob_parts(q);
      const auto& uhoms = hd.mors[m.tob(a, y)][d];
      int nf = f.ob[a].size(), ngh = gh.value.ob[y].size();
      for (size_t uu = 0; uu < uhoms.size(); ++uu)
        for (int s = 0; s < nf; ++s)
          for (int mc = 0; mc < ngh; ++mc) {
            int cls = rhs.pts[d].inject[q][(uu * nf + s) * ngh + mc];
            auto [q2, pt2] = gh.pts[y].class_rep[mc];
            auto [b, e] = m.square.ob_parts(q2);
            Dec3 in = dec3(pt2, g.ob[b].size(), h.ob[e].size());
            int mv = hd.mors[m.tob(b, e)][y][in.p];
            int w = base->compose(base->compose(uhoms[uu], m.tmo(base->id_of(a), mv)),
                                  m.assoc[aix(n, a, b, e)]);
            int ab = m.tob(a, b);
            int mid =
                fg.pts[ab].inject[m.square.ob(a, b)]
                                 [(static_cast<size_t>(hd.pos[base->id_of(ab)]) * nf + s) *
                                      g.ob[b].size() +
                                  in.s];
            int img = lhs.pts[d].inject[m.square.ob(ab, e)]
                                       [(static_cast<size_t>(hd.pos[w]) * fg.value.ob[ab].size() +
                                         mid) *
                                            h.ob[e].size() +
                                        in.t];
            merge_image(bwd, cls, img, "associativity expansion");
          }
    }
    Witness w = make_witness(lhs.pts[d].carrier, rhs.pts[d].carrier, std::move(fwd),
                             std::move(bwd));
    fold_reason(out, w, "at " + base->objects[d]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(lhs.value, rhs.value, iso_fwd(out)));
  return out;
}

DayHomResult day_hom(const SetFunctor& g, const SetFunctor& h, const MonoidalStructure& m,
                     long long cap) {
  if (g.base != m.base || h.base != m.base)
    throw ShapeMismatch("exponential factors live on a different base");
  Cat base = m.base;
  int n = base->n_obj();
  OpProd mid = op_prod(base, base);
  DayHomResult out;
  out.pts.resize(n);
  out.value.base = base;
  out.value.ob.resize(n);
  for (int x = 0; x < n; ++x) {
    SetFunctor diag;
    diag.base = mid.prod.cat;
    for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
      auto [c1, c2] = mid.ob_parts(o);
      diag.ob.push_back(function_set(g.ob[c1], h.ob[m.tob(c2, x)]));
    }
    int idx = base->id_of(x);
    for (int mm = 0; mm < mid.prod.cat->n_mor(); ++mm) {
      auto [um, vm] = mid.mo_parts(mm);
      int d1 = base->trg(um), d2 = base->src(vm);
      const FinSet& dd = g.ob[d1];
      const FinSet& dc = h.ob[m.tob(d2, x)];
      const FinSet& cd = g.ob[base->src(um)];
      const FinSet& cc = h.ob[m.tob(base->trg(vm), x)];
      std::vector<int> tab(function_set(dd, dc).size());
      for (size_t pi = 0; pi < tab.size(); ++pi) {
        auto im = function_images(dd, dc, static_cast<int>(pi));
        std::vector<int> nim(cd.size());
        for (int kk = 0; kk < cd.size(); ++kk)
          nim[kk] = h.mo[m.tmo(vm, idx)][im[g.mo[um][kk]]];
        tab[pi] = function_index(cd, cc, nim);
      }
      diag.mo.push_back(std::move(tab));
    }
    EndResult en = end_of(make_bifunctor(mid, std::move(diag)), cap);
    out.value.ob[x] = en.carrier;
    out.pts[x] = std::move(en);
  }
  out.value.mo.resize(base->n_mor());
  for (int v = 0; v < base->n_mor(); ++v) {
    int x1 = base->src(v), x2 = base->trg(v);
    std::vector<int> tab(out.pts[x1].carrier.size());
    for (size_t el = 0; el < tab.size(); ++el) {
      std::vector<int> fam(n);
      for (int c = 0; c < n; ++c) {
        auto im = function_images(g.ob[c], h.ob[m.tob(c, x1)], out.pts[x1].families[el][c]);
        std::vector<int> nim(im.size());
        for (size_t kk = 0; kk < im.size(); ++kk)
          nim[kk] = h.mo[m.tmo(base->id_of(c), v)][im[kk]];
        fam[c] = function_index(g.ob[c], h.ob[m.tob(c, x2)], nim);
      }
      tab[el] = out.pts[x2].find_family(fam);
      if (tab[el] < 0) throw std::runtime_error("exponential action escapes the end");
    }
    out.value.mo[v] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(out.value));
  return out;
}

Witness day_hom_adjunction(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                           const MonoidalStructure& m, long long cap) {
  if (!m.symmetric) throw ShapeMismatch("transpose requires a symmetric tensor");
  Cat base = m.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  DayResult conv = day_convolve(f, g, m);
  DayHomResult dh = day_hom(g, h, m, cap);
  std::vector<SetNatComp> lhs_nats = all_setnats(conv.value, h, cap);
  std::vector<SetNatComp> rhs_nats = all_setnats(f, dh.value, cap);
  Witness bad;
  bad.lhs = indexed_set("cell", static_cast<int>(lhs_nats.size()));
  bad.rhs = indexed_set("cell", static_cast<int>(rhs_nats.size()));

  std::vector<int> fwd(lhs_nats.size(), -1);
  for (size_t i = 0; i < lhs_nats.size(); ++i) {
    const SetNatComp& tau = lhs_nats[i];
    SetNatComp sig(n);
    for (int x = 0; x < n; ++x) {
      sig[x].resize(f.ob[x].size());
      for (int u = 0; u < f.ob[x].size(); ++u) {
        std::vector<int> fam(n);
        for (int c = 0; c < n; ++c) {
          int cx = m.tob(c, x);
          std::vector<int> images(g.ob[c].size());
          for (int v = 0; v < g.ob[c].size(); ++v)
            images[v] =
                tau[cx][conv.pts[cx].inject[m.square.ob(x, c)]
                                           [(static_cast<size_t>(hd.pos[base->id_of(cx)]) *
                                                 f.ob[x].size() +
                                             u) *
                                                g.ob[c].size() +
                                            v]];
          fam[c] = function_index(g.ob[c], h.ob[cx], images);
        }
        sig[x][u] = dh.pts[x].find_family(fam);
        if (sig[x][u] < 0) {
          bad.reason = "transpose escapes the end at " + base->objects[x];
          return bad;
        }
      }
    }
    fwd[i] = locate_nat(rhs_nats, sig);
    if (fwd[i] < 0) {
      bad.reason = "transpose is not among the enumerated 2-cells";
      return bad;
    }
  }

  std::vector<int> bwd(rhs_nats.size(), -1);
  for (size_t jdx = 0; jdx < rhs_nats.size(); ++jdx) {
    const SetNatComp& sig = rhs_nats[jdx];
    SetNatComp tau(n);
    for (int y = 0; y < n; ++y) tau[y].assign(conv.pts[y].carrier.size(), -1);
    for (int y = 0; y < n; ++y)
      for (int q = 0; q < m.square.cat->n_obj(); ++q) {
        auto [a, b] = m.square.ob_parts(q);
        const auto& homs1 = hd.mors[m.tob(a, b)][y];
        for (size_t pp = 0; pp < homs1.size(); ++pp)
          for (int s = 0; s < f.ob[a].size(); ++s)
            for (int t = 0; t < g.ob[b].size(); ++t) {
              int cls = conv.pts[y].inject[q][(pp * f.ob[a].size() + s) * g.ob[b].size() + t];
              auto fam = dh.pts[a].families[sig[a][s]];
              int val0 = function_images(g.ob[b], h.ob[m.tob(b, a)], fam[b])[t];
              merge_image(tau[y], cls, h.mo[homs1[pp]][val0], "transpose counit");
            }
      }
    bwd[jdx] = locate_nat(lhs_nats, tau);
    if (bwd[jdx] < 0) {
      bad.reason = "counit transpose is not among the enumerated 2-cells";
      return bad;
    }
  }
  return make_witness(bad.lhs, bad.rhs, std::move(fwd), std::move(bwd));
}

PromonoidalStructure promonoidal_validate(const ProdCat& square, Profunctor p, SetFunctor j,
                                          std::vector<std::vector<int>> alpha,
                                          std::vector<std::vector<int>> rho,
                                          std::vector<std::vector<int>> lambda) {
  if (square.left != square.right) throw ShapeMismatch("pair category must square one base");
  if (p.src() != square.cat || p.trg() != square.left)
    throw ShapeMismatch("relator does not run from the pair category to the base");
  if (j.base != square.left) throw ShapeMismatch("unit lives on a different base");
  Cat base = square.left;
  int n = base->n_obj();
  if (static_cast<int>(alpha.size()) != n * n * n * n ||
      static_cast<int>(rho.size()) != n * n || static_cast<int>(lambda.size()) != n * n)
    throw ShapeMismatch("comparison tables have the wrong size");
  Homs hd = all_homs(base);

  PromonoidalStructure out;
  out.base = base;
  out.square = square;
  out.p = std::move(p);
  out.j = std::move(j);
  out.alpha = std::move(alpha);
  out.rho = std::move(rho);
  out.lambda = std::move(lambda);

  out.assoc_lhs.resize(n * n * n * n);
  out.assoc_rhs.resize(n * n * n * n);
  out.assoc_w.resize(n * n * n * n);
  out.alpha_inv.resize(n * n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int ix = qix(n, a, b, c, d);
          out.assoc_lhs[ix] = side_box(square, out.p, a, b, c, d, true);
          out.assoc_rhs[ix] = side_box(square, out.p, a, b, c, d, false);
          std::string where = "(" + base->objects[a] + ", " + base->objects[b] + ", " +
                              base->objects[c] + "; " + base->objects[d] + ")";
          if (out.alpha[ix].size() != static_cast<size_t>(out.assoc_lhs[ix].carrier.size()))
            throw AssociativityIsoFailure("table at " + where + " has the wrong size");
          Witness w = table_witness(out.assoc_lhs[ix].carrier, out.assoc_rhs[ix].carrier,
                                    out.alpha[ix]);
          if (!w.ok) throw AssociativityIsoFailure("at " + where + ": " + w.reason);
          out.alpha_inv[ix] = w.bwd;
          out.assoc_w[ix] = std::move(w);
        }

  auto unit_side = [&](bool first, const std::vector<std::vector<int>>& tab,
                       std::vector<CoendResult>& doms, std::vector<std::vector<int>>& inv,
                       std::vector<Witness>& wit, const char* label) {
    doms.resize(n * n);
    inv.resize(n * n);
    wit.resize(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ix = a * n + b;
        doms[ix] = unit_box(square, out.p, out.j, a, b, first);
        std::string where = std::string(label) + " at (" + base->objects[a] + ", " +
                            base->objects[b] + ")";
        if (tab[ix].size() != static_cast<size_t>(doms[ix].carrier.size()))
          throw UnitIsoFailure(where + ": table has the wrong size");
        Witness w = table_witness(doms[ix].carrier, hd.set[a][b], tab[ix]);
        if (!w.ok) throw UnitIsoFailure(where + ": " + w.reason);
        inv[ix] = w.bwd;
        wit[ix] = std::move(w);
      }
    // naturality: contravariant in the pinned slot, covariant in the target
    for (int u = 0; u < base->n_mor(); ++u)
      for (int gg = 0; gg < base->n_mor(); ++gg) {
        int a = base->trg(u), a2 = base->src(u);
        int b = base->src(gg), b2 = base->trg(gg);
        const CoendResult& d1 = doms[a * n + b];
        const CoendResult& d2 = doms[a2 * n + b2];
        std::vector<int> tr(d1.carrier.size(), -1);
        for (int y = 0; y < n; ++y) {
          int slot1 = first ? square.ob(y, a) : square.ob(a, y);
          int np1 = out.p.at(slot1, b).size();
          int np2 = out.p.at(first ? square.ob(y, a2) : square.ob(a2, y), b2).size();
          int pm = first ? square.mo(base->id_of(y), u) : square.mo(u, base->id_of(y));
          for (int jj = 0; jj < out.j.ob[y].size(); ++jj)
            for (int pp = 0; pp < np1; ++pp)
              merge_image(tr, d1.inject[y][jj * np1 + pp],
                          d2.inject[y][jj * np2 + out.p.act(pm, gg, pp)], "unit transport");
        }
        for (size_t cls = 0; cls < tr.size(); ++cls) {
          int hm = hd.mors[a][b][tab[a * n + b][cls]];
          int hm2 = base->compose(gg, base->compose(hm, u));
          if (tab[a2 * n + b2][tr[cls]] != hd.pos[hm2])
            throw UnitIsoFailure(std::string(label) + " is not natural along (" +
                                 base->morphisms[u].id + ", " + base->morphisms[gg].id + ")");
        }
      }
  };
  unit_side(true, out.rho, out.rho_dom, out.rho_inv, out.rho_w, "first-slot unit");
  unit_side(false, out.lambda, out.lam_dom, out.lambda_inv, out.lam_w, "second-slot unit");

  for (int u = 0; u < base->n_mor(); ++u)
    for (int v = 0; v < base->n_mor(); ++v)
      for (int w = 0; w < base->n_mor(); ++w)
        for (int gg = 0; gg < base->n_mor(); ++gg) {
          int a = base->trg(u), a2 = base->src(u);
          int b = base->trg(v), b2 = base->src(v);
          int c = base->trg(w), c2 = base->src(w);
          int d = base->src(gg), d2 = base->trg(gg);
          int ix1 = qix(n, a, b, c, d), ix2 = qix(n, a2, b2, c2, d2);
          const CoendResult& l1 = out.assoc_lhs[ix1];
          const CoendResult& l2 = out.assoc_lhs[ix2];
          std::vector<int> tl(l1.carrier.size(), -1);
          for (int y = 0; y < n; ++y) {
            int np1 = out.p.at(square.ob(a, y), d).size();
            int nq1 = out.p.at(square.ob(b, c), y).size();
            int nq2 = out.p.at(square.ob(b2, c2), y).size();
            for (int pp = 0; pp < np1; ++pp)
              for (int qq = 0; qq < nq1; ++qq)
                merge_image(tl, l1.inject[y][pp * nq1 + qq],
                            l2.inject[y][out.p.act(square.mo(u, base->id_of(y)), gg, pp) * nq2 +
                                         out.p.act(square.mo(v, w), base->id_of(y), qq)],
                            "associativity transport");
          }
          const CoendResult& r1 = out.assoc_rhs[ix1];
          const CoendResult& r2 = out.assoc_rhs[ix2];
          std::vector<int> tr(r1.carrier.size(), -1);
          for (int x = 0; x < n; ++x) {
            int np1 = out.p.at(square.ob(a, b), x).size();
            int nq1 = out.p.at(square.ob(x, c), d).size();
            int nq2 = out.p.at(square.ob(x, c2), d2).size();
            for (int pp = 0; pp < np1; ++pp)
              for (int qq = 0; qq < nq1; ++qq)
                merge_image(tr, r1.inject[x][pp * nq1 + qq],
                            r2.inject[x][out.p.act(square.mo(u, v), base->id_of(x), pp) * nq2 +
                                         out.p.act(square.mo(base->id_of(x), w), gg, qq)],
                            "associativity transport");
          }
          for (size_t cls = 0; cls < tl.size(); ++cls)
            if (out.alpha[ix2][tl[cls]] != tr[out.alpha[ix1][cls]])
              throw AssociativityIsoFailure(
                  "mediator is not natural along (" + base->morphisms[u].id + ", " +
                  base->morphisms[v].id + ", " + base->morphisms[w].id + "; " +
                  base->morphisms[gg].id + ")");
        }
  return out;
}

PromonoidalStructure day_promonoidal(const MonoidalStructure& m) {
  Cat base = m.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  const ProdCat& sq = m.square;

  OpProd pb = op_prod(sq.cat, base);
  SetFunctor t;
  t.base = pb.prod.cat;
  t.ob.resize(pb.prod.cat->n_obj());
  for (int q = 0; q < sq.cat->n_obj(); ++q)
    for (int c = 0; c < n; ++c) t.ob[pb.ob(q, c)] = hd.set[m.tensor.ob(q)][c];
  t.mo.resize(pb.prod.cat->n_mor());
  for (int um = 0; um < sq.cat->n_mor(); ++um)
    for (int vm = 0; vm < base->n_mor(); ++vm) {
      int q1 = sq.cat->trg(um), c1 = base->src(vm);
      const auto& homs1 = hd.mors[m.tensor.ob(q1)][c1];
      std::vector<int> tab(homs1.size());
      for (size_t hh = 0; hh < homs1.size(); ++hh)
        tab[hh] = hd.pos[base->compose(vm, base->compose(homs1[hh], m.tensor.mo(um)))];
      t.mo[pb.mo(um, vm)] = std::move(tab);
    }
  Profunctor p = make_profunctor(std::move(pb), std::move(t));
  SetFunctor j = representable_cov(base, m.unit);

  std::vector<std::vector<int>> alpha(n * n * n * n), rho(n * n), lambda(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          CoendResult lhs = side_box(sq, p, a, b, c, d, true);
          CoendResult rhs = side_box(sq, p, a, b, c, d, false);
          std::vector<int> tab(lhs.carrier.size(), -1);
          int x0 = m.tob(a, b);
          int idpos = hd.pos[base->id_of(x0)];
          int nq2 = hd.set[m.tob(x0, c)][d].size();
          for (int y = 0; y < n; ++y) {
            const auto& ps = hd.mors[m.tob(a, y)][d];
            const auto& qs = hd.mors[m.tob(b, c)][y];
            for (size_t pp = 0; pp < ps.size(); ++pp)
              for (size_t qq = 0; qq < qs.size(); ++qq) {
                int w1 = base->compose(
                    base->compose(ps[pp], m.tmo(base->id_of(a), qs[qq])),
                    m.assoc[aix(n, a, b, c)]);
                merge_image(tab, lhs.inject[y][pp * qs.size() + qq],
                            rhs.inject[x0][idpos * nq2 + hd.pos[w1]], "derived associativity");
              }
          }
          alpha[qix(n, a, b, c, d)] = std::move(tab);
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CoendResult rdom = unit_box(sq, p, j, a, b, true);
      std::vector<int> rtab(rdom.carrier.size(), -1);
      for (int y = 0; y < n; ++y) {
        const auto& ws = hd.mors[m.unit][y];
        const auto& us = hd.mors[m.tob(y, a)][b];
        for (size_t jj = 0; jj < ws.size(); ++jj)
          for (size_t pp = 0; pp < us.size(); ++pp) {
            int m1 = base->compose(
                base->compose(us[pp], m.tmo(ws[jj], base->id_of(a))), m.lun_inv[a]);
            merge_image(rtab, rdom.inject[y][jj * us.size() + pp], hd.pos[m1],
                        "derived first-slot unit");
          }
      }
      rho[a * n + b] = std::move(rtab);

      CoendResult ldom = unit_box(sq, p, j, a, b, false);
      std::vector<int> ltab(ldom.carrier.size(), -1);
      for (int z = 0; z < n; ++z) {
        const auto& ws = hd.mors[m.unit][z];
        const auto& us = hd.mors[m.tob(a, z)][b];
        for (size_t jj = 0; jj < ws.size(); ++jj)
          for (size_t pp = 0; pp < us.size(); ++pp) {
            int m1 = base->compose(
                base->compose(us[pp], m.tmo(base->id_of(a), ws[jj])), m.run_inv[a]);
            merge_image(ltab, ldom.inject[z][jj * us.size() + pp], hd.pos[m1],
                        "derived second-slot unit");
          }
      }
      lambda[a * n + b] = std::move(ltab);
    }
  return promonoidal_validate(sq, std::move(p), std::move(j), std::move(alpha), std::move(rho),
                              std::move(lambda));
}

PromonoidalStructure cauchy_promonoidal(Cat c) {
  Homs hd = all_homs(c);
  int n = c->n_obj();
  ProdCat sq = product(c, c);

  OpProd pb = op_prod(sq.cat, c);
  SetFunctor t;
  t.base = pb.prod.cat;
  t.ob.resize(pb.prod.cat->n_obj());
  for (int q = 0; q < sq.cat->n_obj(); ++q) {
    auto [a, b] = sq.ob_parts(q);
    for (int x = 0; x < n; ++x) t.ob[pb.ob(q, x)] = product_set(hd.set[a][x], hd.set[b][x]);
  }
  t.mo.resize(pb.prod.cat->n_mor());
  for (int um = 0; um < sq.cat->n_mor(); ++um)
    for (int vm = 0; vm < c->n_mor(); ++vm) {
      int q1 = sq.cat->trg(um), x1 = c->src(vm);
      auto [ua, ub] = sq.mo_parts(um);
      auto [a1, b1] = sq.ob_parts(q1);
      const auto& h1 = hd.mors[a1][x1];
      const auto& h2 = hd.mors[b1][x1];
      int nb2 = hd.set[c->src(ub)][c->trg(vm)].size();
      std::vector<int> tab(h1.size() * h2.size());
      for (size_t i = 0; i < h1.size(); ++i)
        for (size_t k = 0; k < h2.size(); ++k)
          tab[i * h2.size() + k] =
              hd.pos[c->compose(vm, c->compose(h1[i], ua))] * nb2 +
              hd.pos[c->compose(vm, c->compose(h2[k], ub))];
      t.mo[pb.mo(um, vm)] = std::move(tab);
    }
  Profunctor p = make_profunctor(std::move(pb), std::move(t));
  SetFunctor j = terminal_setfunctor(c);

  std::vector<std::vector<int>> alpha(n * n * n * n), rho(n * n), lambda(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          CoendResult lhs = side_box(sq, p, a, b, cc, d, true);
          CoendResult rhs = side_box(sq, p, a, b, cc, d, false);
          std::vector<int> tab(lhs.carrier.size(), -1);
          int idd = hd.pos[c->id_of(d)];
          int nq2 = p.at(sq.ob(d, cc), d).size();
          for (int y = 0; y < n; ++y) {
            int nyd = hd.set[y][d].size();
            int nby = hd.set[b][y].size(), ncy = hd.set[cc][y].size();
            int nbd = hd.set[b][d].size(), ncd = hd.set[cc][d].size();
            for (int pa = 0; pa < hd.set[a][d].size(); ++pa)
              for (int py = 0; py < nyd; ++py)
                for (int vb = 0; vb < nby; ++vb)
                  for (int vc = 0; vc < ncy; ++vc) {
                    int my = hd.mors[y][d][py];
                    int nb = hd.pos[c->compose(my, hd.mors[b][y][vb])];
                    int nc = hd.pos[c->compose(my, hd.mors[cc][y][vc])];
                    int pp2 = pa * nbd + nb;
                    int qq2 = idd * ncd + nc;
                    merge_image(tab,
                                lhs.inject[y][(pa * nyd + py) * (nby * ncy) + vb * ncy + vc],
                                rhs.inject[d][pp2 * nq2 + qq2], "derived associativity");
                  }
          }
          alpha[qix(n, a, b, cc, d)] = std::move(tab);
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CoendResult rdom = unit_box(sq, p, j, a, b, true);
      std::vector<int> rtab(rdom.carrier.size(), -1);
      for (int y = 0; y < n; ++y) {
        int nyb = hd.set[y][b].size(), nab = hd.set[a][b].size();
        for (int uy = 0; uy < nyb; ++uy)
          for (int va = 0; va < nab; ++va)
            merge_image(rtab, rdom.inject[y][uy * nab + va], va, "derived first-slot unit");
      }
      rho[a * n + b] = std::move(rtab);

      CoendResult ldom = unit_box(sq, p, j, a, b, false);
      std::vector<int> ltab(ldom.carrier.size(), -1);
      for (int z = 0; z < n; ++z) {
        int nab = hd.set[a][b].size(), nzb = hd.set[z][b].size();
        for (int va = 0; va < nab; ++va)
          for (int uz = 0; uz < nzb; ++uz)
            merge_image(ltab, ldom.inject[z][va * nzb + uz], va, "derived second-slot unit");
      }
      lambda[a * n + b] = std::move(ltab);
    }
  return promonoidal_validate(sq, std::move(p), std::move(j), std::move(alpha), std::move(rho),
                              std::move(lambda));
}

DayResult p_convolve(const SetFunctor& f, const SetFunctor& g, const PromonoidalStructure& ps) {
  if (f.base != ps.base || g.base != ps.base)
    throw ShapeMismatch("convolution factors live on a different base");
  Cat base = ps.base;
  Cat sqc = ps.square.cat;
  int n = base->n_obj();
  OpProd mid = op_prod(sqc, sqc);
  DayResult out;
  out.pts.resize(n);
  out.value.base = base;
  out.value.ob.resize(n);
  for (int x = 0; x < n; ++x) {
    SetFunctor diag;
    diag.base = mid.prod.cat;
    for (int o = 0; o < mid.prod.cat->n_obj(); ++o) {
      auto [q1, q2] = mid.ob_parts(o);
      auto [a2, b2] = ps.square.ob_parts(q2);
      diag.ob.push_back(product_set(ps.p.at(q1, x), product_set(f.ob[a2], g.ob[b2])));
    }
    int idx = base->id_of(x);
    for (int mm = 0; mm < mid.prod.cat->n_mor(); ++mm) {
      auto [um, vm] = mid.mo_parts(mm);
      int q1 = sqc->trg(um), q2 = sqc->src(vm);
      auto [a1, b1] = ps.square.ob_parts(q2);
      auto [va, vb] = ps.square.mo_parts(vm);
      auto [a3, b3] = ps.square.ob_parts(sqc->trg(vm));
      int np1 = ps.p.at(q1, x).size();
      int nf1 = f.ob[a1].size(), ng1 = g.ob[b1].size();
      int nf2 = f.ob[a3].size(), ng2 = g.ob[b3].size();
      std::vector<int> tab(static_cast<size_t>(np1) * nf1 * ng1);
      for (int pp = 0; pp < np1; ++pp) {
        int hp = ps.p.act(um, idx, pp);
        for (int s = 0; s < nf1; ++s)
          for (int t = 0; t < ng1; ++t)
            tab[(static_cast<size_t>(pp) * nf1 + s) * ng1 + t] =
                (hp * nf2 + f.mo[va][s]) * ng2 + g.mo[vb][t];
      }
      diag.mo.push_back(std::move(tab));
    }
    CoendResult co = coend_of(make_bifunctor(mid, std::move(diag)));
    out.value.ob[x] = co.carrier;
    out.pts[x] = std::move(co);
  }
  out.value.mo.resize(base->n_mor());
  for (int w = 0; w < base->n_mor(); ++w) {
    int x1 = base->src(w), x2 = base->trg(w);
    std::vector<int> tab(out.pts[x1].carrier.size(), -1);
    for (int q = 0; q < sqc->n_obj(); ++q) {
      auto [aa, bb] = ps.square.ob_parts(q);
      int np = ps.p.at(q, x1).size();
      int nf = f.ob[aa].size(), ng = g.ob[bb].size();
      int sqid = sqc->id_of(q);
      for (int pp = 0; pp < np; ++pp) {
        int hp = ps.p.act(sqid, w, pp);
        for (int s = 0; s < nf; ++s)
          for (int t = 0; t < ng; ++t)
            merge_image(tab, out.pts[x1].inject[q][(static_cast<size_t>(pp) * nf + s) * ng + t],
                        out.pts[x2].inject[q][(static_cast<size_t>(hp) * nf + s) * ng + t],
                        "convolution transport");
      }
    }
    out.value.mo[w] = std::move(tab);
  }
  out.value = bless_setfunctor(std::move(out.value));
  return out;
}

PointwiseIso p_unit_right(const SetFunctor& f, const PromonoidalStructure& ps) {
  Cat base = ps.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  DayResult conv = p_convolve(f, ps.j, ps);
  PointwiseIso out;
  out.ok = true;
  for (int x = 0; x < n; ++x) {
    std::vector<int> fwd(conv.pts[x].carrier.size(), -1);
    for (int q = 0; q < ps.square.cat->n_obj(); ++q) {
      auto [a, b] = ps.square.ob_parts(q);
      int np = ps.p.at(q, x).size();
      int nf = f.ob[a].size(), nj = ps.j.ob[b].size();
      for (int pp = 0; pp < np; ++pp)
        for (int s = 0; s < nf; ++s)
          for (int jj = 0; jj < nj; ++jj) {
            int cls2 = ps.lam_dom[a * n + x].inject[b][jj * np + pp];
            int hm = hd.mors[a][x][ps.lambda[a * n + x][cls2]];
            merge_image(fwd, conv.pts[x].inject[q][(static_cast<size_t>(pp) * nf + s) * nj + jj],
                        f.mo[hm][s], "second-slot unit collapse");
          }
    }
    std::vector<int> bwd(f.ob[x].size());
    int q0 = ps.lambda_inv[x * n + x][hd.pos[base->id_of(x)]];
    auto [z0, pt0] = ps.lam_dom[x * n + x].class_rep[q0];
    int np0 = ps.p.at(ps.square.ob(x, z0), x).size();
    int jj0 = pt0 / np0, pp0 = pt0 % np0;
    int nj0 = ps.j.ob[z0].size();
    for (int s = 0; s < f.ob[x].size(); ++s)
      bwd[s] = conv.pts[x].inject[ps.square.ob(x, z0)]
                                 [(static_cast<size_t>(pp0) * f.ob[x].size() + s) * nj0 + jj0];
    Witness w = make_witness(conv.value.ob[x], f.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + base->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(conv.value, f, iso_fwd(out)));
  return out;
}

PointwiseIso p_unit_left(const SetFunctor& f, const PromonoidalStructure& ps) {
  Cat base = ps.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  DayResult conv = p_convolve(ps.j, f, ps);
  PointwiseIso out;
  out.ok = true;
  for (int x = 0; x < n; ++x) {
    std::vector<int> fwd(conv.pts[x].carrier.size(), -1);
    for (int q = 0; q < ps.square.cat->n_obj(); ++q) {
      auto [a, b] = ps.square.ob_parts(q);
      int np = ps.p.at(q, x).size();
      int nj = ps.j.ob[a].size(), nf = f.ob[b].size();
      for (int pp = 0; pp < np; ++pp)
        for (int jj = 0; jj < nj; ++jj)
          for (int s = 0; s < nf; ++s) {
            int cls2 = ps.rho_dom[b * n + x].inject[a][jj * np + pp];
            int hm = hd.mors[b][x][ps.rho[b * n + x][cls2]];
            merge_image(fwd, conv.pts[x].inject[q][(static_cast<size_t>(pp) * nj + jj) * nf + s],
                        f.mo[hm][s], "first-slot unit collapse");
          }
    }
    std::vector<int> bwd(f.ob[x].size());
    int q0 = ps.rho_inv[x * n + x][hd.pos[base->id_of(x)]];
    auto [y0, pt0] = ps.rho_dom[x * n + x].class_rep[q0];
    int np0 = ps.p.at(ps.square.ob(y0, x), x).size();
    int jj0 = pt0 / np0, pp0 = pt0 % np0;
    for (int s = 0; s < f.ob[x].size(); ++s)
      bwd[s] = conv.pts[x].inject[ps.square.ob(y0, x)]
                                 [(static_cast<size_t>(pp0) * ps.j.ob[y0].size() + jj0) *
                                      f.ob[x].size() +
                                  s];
    Witness w = make_witness(conv.value.ob[x], f.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + base->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(conv.value, f, iso_fwd(out)));
  return out;
}

PointwiseIso p_assoc(const SetFunctor& f, const SetFunctor& g, const SetFunctor& h,
                     const PromonoidalStructure& ps) {
  Cat base = ps.base;
  int n = base->n_obj();
  DayResult fg = p_convolve(f, g, ps);
  DayResult gh = p_convolve(g, h, ps);
  DayResult lhs = p_convolve(fg.value, h, ps);
  DayResult rhs = p_convolve(f, gh.value, ps);
  PointwiseIso out;
  out.ok = true;
  for (int d = 0; d < n; ++d) {
    std::vector<int> fwd(lhs.pts[d].carrier.size(), -1);
    for (int q = 0; q < ps.square.cat->n_obj(); ++q) {
      auto [c, e] = ps.square.ob_parts(q);
      int np = ps.p.at(q, d).size();
      int nfg = fg.value.ob[c].size(), nh = h.ob[e].size();
      for (int pp = 0; pp < np; ++pp)
        for (int mc = 0; mc < nfg; ++mc)
          for (int hh = 0; hh < nh; ++hh) {
            int cls = lhs.pts[d].inject[q][(static_cast<size_t>(pp) * nfg + mc) * nh + hh];
            auto [q2, pt2] = fg.pts[c].class_rep[mc];
            auto [a, b] = ps.square.ob_parts(q2);
            Dec3 in = dec3(pt2, f.ob[a].size(), g.ob[b].size());
            int ix = qix(n, a, b, e, d);
            int rcls = ps.assoc_rhs[ix].inject[c][in.p * np + pp];
            int lcls = ps.alpha_inv[ix][rcls];
            auto [y, pt3] = ps.assoc_lhs[ix].class_rep[lcls];
            int nq = ps.p.at(ps.square.ob(b, e), y).size();
            int ppl = pt3 / nq, qql = pt3 % nq;
            int inner = gh.pts[y].inject[ps.square.ob(b, e)]
                                        [(static_cast<size_t>(qql) * g.ob[b].size() + in.t) *
                                             h.ob[e].size() +
                                         hh];
            int img = rhs.pts[d].inject[ps.square.ob(a, y)]
                                       [(static_cast<size_t>(ppl) * f.ob[a].size() + in.s) *
                                            gh.value.ob[y].size() +
                                        inner];
            merge_image(fwd, cls, img, "associativity collapse");
          }
    }
    std::vector<int> bwd(rhs.pts[d].carrier.size(), -1);
    for (int q = 0; q < ps.square.cat->n_obj(); ++q) {
      auto [a, y] = ps.square.ob_parts(q);
      int np = ps.p.at(q, d).size();
      int nf = f.ob[a].size(), ngh = gh.value.ob[y].size();
      for (int pp = 0; pp < np; ++pp)
        for (int s = 0; s < nf; ++s)
          for (int mc = 0; mc < ngh; ++mc) {
            int cls = rhs.pts[d].inject[q][(static_cast<size_t>(pp) * nf + s) * ngh + mc];
            auto [q2, pt2] = gh.pts[y].class_rep[mc];
            auto [b, e] = ps.square.ob_parts(q2);
            Dec3 in = dec3(pt2, g.ob[b].size(), h.ob[e].size());
            int ix = qix(n, a, b, e, d);
            int lcls = ps.assoc_lhs[ix].inject[y][pp * ps.p.at(q2, y).size() + in.p];
            int rcls = ps.alpha[ix][lcls];
            auto [x, pt3] = ps.assoc_rhs[ix].class_rep[rcls];
            int nq = ps.p.at(ps.square.ob(x, e), d).size();
            int ppr = pt3 / nq, qqr = pt3 % nq;
            int mid = fg.pts[x].inject[ps.square.ob(a, b)]
                                      [(static_cast<size_t>(ppr) * nf + s) * g.ob[b].size() +
                                       in.s];
            int img = lhs.pts[d].inject[ps.square.ob(x, e)]
                                       [(static_cast<size_t>(qqr) * fg.value.ob[x].size() + mid) *
                                            h.ob[e].size() +
                                        in.t];
            merge_image(bwd, cls, img, "associativity expansion");
          }
    }
    Witness w = make_witness(lhs.pts[d].carrier, rhs.pts[d].carrier, std::move(fwd),
                             std::move(bwd));
    fold_reason(out, w, "at " + base->objects[d]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(lhs.value, rhs.value, iso_fwd(out)));
  return out;
}

PointwiseIso cauchy_is_pointwise(const SetFunctor& f, const SetFunctor& g,
                                 const PromonoidalStructure& ps) {
  Cat base = ps.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        if (ps.p.at(ps.square.ob(a, b), x).size() !=
            hd.set[a][x].size() * hd.set[b][x].size())
          throw ShapeMismatch("structure is not the double-hom relator");
  DayResult conv = p_convolve(f, g, ps);
  SetFunctor prod = setfunctor_product(f, g);
  PointwiseIso out;
  out.ok = true;
  for (int x = 0; x < n; ++x) {
    int nf = f.ob[x].size(), ng = g.ob[x].size();
    std::vector<int> fwd(conv.pts[x].carrier.size(), -1);
    for (int q = 0; q < ps.square.cat->n_obj(); ++q) {
      auto [a, b] = ps.square.ob_parts(q);
      int nbx = hd.set[b][x].size();
      int np = ps.p.at(q, x).size();
      int nfa = f.ob[a].size(), ngb = g.ob[b].size();
      for (int pp = 0; pp < np; ++pp)
        for (int s = 0; s < nfa; ++s)
          for (int t = 0; t < ngb; ++t) {
            int mua = hd.mors[a][x][pp / nbx];
            int mub = hd.mors[b][x][pp % nbx];
            merge_image(fwd,
                        conv.pts[x].inject[q][(static_cast<size_t>(pp) * nfa + s) * ngb + t],
                        f.mo[mua][s] * ng + g.mo[mub][t], "pointwise collapse");
          }
    }
    std::vector<int> bwd(static_cast<size_t>(nf) * ng);
    int nxx = hd.set[x][x].size();
    int pid = hd.pos[base->id_of(x)] * nxx + hd.pos[base->id_of(x)];
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < ng; ++j)
        bwd[i * ng + j] = conv.pts[x].inject[ps.square.ob(x, x)]
                                            [(static_cast<size_t>(pid) * nf + i) * ng + j];
    Witness w = make_witness(conv.value.ob[x], prod.ob[x], std::move(fwd), std::move(bwd));
    fold_reason(out, w, "at " + base->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(conv.value, prod, iso_fwd(out)));
  return out;
}

Kernel kernel_check(const Profunctor& k, const PromonoidalStructure& pa,
                    const PromonoidalStructure& pc, const KernelMediators& med) {
  if (k.src() != pa.base || k.trg() != pc.base)
    throw ShapeMismatch("kernel endpoints do not match the structures");
  Cat A = k.src(), C = k.trg();
  int nA = A->n_obj(), nC = C->n_obj();
  if (med.k1.size() != static_cast<size_t>(nA) * nA * nC ||
      med.k2.size() != static_cast<size_t>(nC))
    throw ShapeMismatch("mediator tables have the wrong shape");

  Kernel out;
  out.k = k;
  out.ok = true;
  out.k1_lhs.resize(static_cast<size_t>(nA) * nA * nC);
  out.k1_rhs.resize(out.k1_lhs.size());
  out.k1.resize(out.k1_lhs.size());
  auto fail = [&](const std::string& r) {
    if (out.ok) {
      out.ok = false;
      out.reason = r;
    }
  };
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nA; ++b)
      for (int x = 0; x < nC; ++x) {
        int ix = kix(nA, nC, a, b, x);
        out.k1_lhs[ix] = kernel_lhs_box(k, pc, a, b, x);
        out.k1_rhs[ix] = kernel_rhs_box(k, pa, a, b, x);
        std::string where = "k1 at ((" + A->objects[a] + ", " + A->objects[b] + "); " +
                            C->objects[x] + ")";
        if (med.k1[ix].size() != static_cast<size_t>(out.k1_lhs[ix].carrier.size())) {
          fail(where + ": table has the wrong size");
          out.k1[ix] = table_witness(out.k1_lhs[ix].carrier, out.k1_rhs[ix].carrier,
                                     std::vector<int>(out.k1_lhs[ix].carrier.size(), -1));
          continue;
        }
        Witness w = table_witness(out.k1_lhs[ix].carrier, out.k1_rhs[ix].carrier, med.k1[ix]);
        if (!w.ok) fail(where + ": " + w.reason);
        out.k1[ix] = std::move(w);
      }

  ProActionResult act = pro_action(k, pa.j);
  out.k2_dom = act.pts;
  out.k2.resize(nC);
  for (int x = 0; x < nC; ++x) {
    std::string where = "k2 at " + C->objects[x];
    if (med.k2[x].size() != static_cast<size_t>(out.k2_dom[x].carrier.size())) {
      fail(where + ": table has the wrong size");
      out.k2[x] = table_witness(out.k2_dom[x].carrier, pc.j.ob[x],
                                std::vector<int>(out.k2_dom[x].carrier.size(), -1));
      continue;
    }
    Witness w = table_witness(out.k2_dom[x].carrier, pc.j.ob[x], med.k2[x]);
    if (!w.ok) fail(where + ": " + w.reason);
    out.k2[x] = std::move(w);
  }

  if (out.ok) {
    for (int fa = 0; fa < A->n_mor() && out.ok; ++fa)
      for (int fb = 0; fb < A->n_mor() && out.ok; ++fb)
        for (int gx = 0; gx < C->n_mor() && out.ok; ++gx) {
          int a = A->trg(fa), a2 = A->src(fa);
          int b = A->trg(fb), b2 = A->src(fb);
          int x = C->src(gx), x2 = C->trg(gx);
          int ix1 = kix(nA, nC, a, b, x), ix2 = kix(nA, nC, a2, b2, x2);
          const CoendResult& l1 = out.k1_lhs[ix1];
          const CoendResult& l2 = out.k1_lhs[ix2];
          std::vector<int> tl(l1.carrier.size(), -1);
          for (int q = 0; q < pc.square.cat->n_obj(); ++q) {
            auto [y, z] = pc.square.ob_parts(q);
            int nw = pc.p.at(q, x).size();
            int nu1 = k.at(a, y).size(), nv1 = k.at(b, z).size();
            int nu2 = k.at(a2, y).size(), nv2 = k.at(b2, z).size();
            int sqid = pc.square.cat->id_of(q);
            for (int w = 0; w < nw; ++w)
              for (int u = 0; u < nu1; ++u)
                for (int v = 0; v < nv1; ++v)
                  merge_image(
                      tl, l1.inject[q][(static_cast<size_t>(w) * nu1 + u) * nv1 + v],
                      l2.inject[q][(static_cast<size_t>(pc.p.act(sqid, gx, w)) * nu2 +
                                    k.act(fa, C->id_of(y), u)) *
                                       nv2 +
                                   k.act(fb, C->id_of(z), v)],
                      "kernel transport");
          }
          const CoendResult& r1 = out.k1_rhs[ix1];
          const CoendResult& r2 = out.k1_rhs[ix2];
          std::vector<int> tr(r1.carrier.size(), -1);
          for (int c = 0; c < nA; ++c) {
            int nu1 = k.at(c, x).size(), nu2 = k.at(c, x2).size();
            int np1 = pa.p.at(pa.square.ob(a, b), c).size();
            int np2 = pa.p.at(pa.square.ob(a2, b2), c).size();
            int idc = A->id_of(c);
            for (int u = 0; u < nu1; ++u)
              for (int pp = 0; pp < np1; ++pp)
                merge_image(tr, r1.inject[c][u * np1 + pp],
                            r2.inject[c][k.act(idc, gx, u) * np2 +
                                         pa.p.act(pa.square.mo(fa, fb), idc, pp)],
                            "kernel transport");
          }
          for (size_t cls = 0; cls < tl.size() && out.ok; ++cls)
            if (out.k1[ix2].fwd[tl[cls]] != tr[out.k1[ix1].fwd[cls]])
              fail("k1 is not natural along (" + A->morphisms[fa].id + ", " +
                   A->morphisms[fb].id + "; " + C->morphisms[gx].id + ")");
        }
    auto issues = validate_setnat(act.value, pc.j, med.k2);
    if (!issues.empty()) fail("k2 naturality: " + issues.front());
  }
  return out;
}

Kernel kernel_check(const Profunctor& k, const PromonoidalStructure& pa,
                    const PromonoidalStructure& pc) {
  if (k.src() != pa.base || k.trg() != pc.base)
    throw ShapeMismatch("kernel endpoints do not match the structures");
  Cat A = k.src(), C = k.trg();
  int nA = A->n_obj(), nC = C->n_obj();
  bool thin = true;
  std::string obstruction;
  for (int a = 0; a < nA && obstruction.empty(); ++a)
    for (int b = 0; b < nA && obstruction.empty(); ++b)
      for (int x = 0; x < nC && obstruction.empty(); ++x) {
        CoendResult l = kernel_lhs_box(k, pc, a, b, x);
        CoendResult r = kernel_rhs_box(k, pa, a, b, x);
        if (l.carrier.size() != r.carrier.size())
          obstruction = "k1 carriers disagree at ((" + A->objects[a] + ", " + A->objects[b] +
                        "); " + C->objects[x] + "): " + std::to_string(l.carrier.size()) +
                        " vs " + std::to_string(r.carrier.size());
        if (l.carrier.size() > 1) thin = false;
      }
  ProActionResult act = pro_action(k, pa.j);
  for (int x = 0; x < nC && obstruction.empty(); ++x) {
    if (act.pts[x].carrier.size() != pc.j.ob[x].size())
      obstruction = "k2 carriers disagree at " + C->objects[x] + ": " +
                    std::to_string(act.pts[x].carrier.size()) + " vs " +
                    std::to_string(pc.j.ob[x].size());
    if (act.pts[x].carrier.size() > 1) thin = false;
  }
  if (!obstruction.empty()) {
    Kernel out;
    out.k = k;
    out.ok = false;
    out.reason = obstruction;
    return out;
  }
  if (!thin) {
    Kernel out;
    out.k = k;
    out.ok = false;
    out.reason = "carriers are not all singletons; supply mediators or use a provenance builder";
    return out;
  }
  KernelMediators med;
  med.k1.resize(static_cast<size_t>(nA) * nA * nC);
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nA; ++b)
      for (int x = 0; x < nC; ++x) {
        int sz = kernel_lhs_box(k, pc, a, b, x).carrier.size();
        med.k1[kix(nA, nC, a, b, x)].assign(sz, 0);
      }
  med.k2.resize(nC);
  for (int x = 0; x < nC; ++x) med.k2[x].assign(act.pts[x].carrier.size(), 0);
  return kernel_check(k, pa, pc, med);
}

Kernel hom_kernel(const PromonoidalStructure& ps) {
  Cat base = ps.base;
  Homs hd = all_homs(base);
  int n = base->n_obj();
  Profunctor k = hom_pro(base);
  KernelMediators med;
  med.k1.resize(static_cast<size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x) {
        CoendResult lhs = kernel_lhs_box(k, ps, a, b, x);
        CoendResult rhs = kernel_rhs_box(k, ps, a, b, x);
        std::vector<int> tab(lhs.carrier.size(), -1);
        int idx = hd.pos[base->id_of(x)];
        int npx = ps.p.at(ps.square.ob(a, b), x).size();
        for (int q = 0; q < ps.square.cat->n_obj(); ++q) {
          auto [y, z] = ps.square.ob_parts(q);
          int nw = ps.p.at(q, x).size();
          const auto& us = hd.mors[a][y];
          const auto& vs = hd.mors[b][z];
          for (int w = 0; w < nw; ++w)
            for (size_t u = 0; u < us.size(); ++u)
              for (size_t v = 0; v < vs.size(); ++v) {
                int pp = ps.p.act(ps.square.mo(us[u], vs[v]), base->id_of(x), w);
                merge_image(tab,
                            lhs.inject[q][(static_cast<size_t>(w) * us.size() + u) * vs.size() +
                                          v],
                            rhs.inject[x][idx * npx + pp], "hom kernel collapse");
              }
        }
        med.k1[kix(n, n, a, b, x)] = std::move(tab);
      }
  ProActionResult act = pro_action(k, ps.j);
  med.k2.resize(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> tab(act.pts[x].carrier.size(), -1);
    for (int c = 0; c < n; ++c) {
      const auto& us = hd.mors[c][x];
      int nj = ps.j.ob[c].size();
      for (size_t u = 0; u < us.size(); ++u)
        for (int jj = 0; jj < nj; ++jj)
          merge_image(tab, act.pts[x].inject[c][u * nj + jj], ps.j.mo[us[u]][jj],
                      "hom kernel unit");
    }
    med.k2[x] = std::move(tab);
  }
  return kernel_check(k, ps, ps, med);
}

Kernel functor_kernel(const FinFunctor& f, const MonoidalStructure& ma,
                      const MonoidalStructure& mc) {
  if (f.src != ma.base || f.trg != mc.base)
    throw ShapeMismatch("kernel functor does not match the structures");
  Cat A = ma.base, C = mc.base;
  int nA = A->n_obj(), nC = C->n_obj();
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nA; ++b)
      if (f.ob(ma.tob(a, b)) != mc.tob(f.ob(a), f.ob(b)))
        throw ShapeMismatch("kernel functor must preserve the tensor strictly");
  if (f.ob(ma.unit) != mc.unit)
    throw ShapeMismatch("kernel functor must preserve the unit strictly");
  for (int u = 0; u < A->n_mor(); ++u)
    for (int v = 0; v < A->n_mor(); ++v)
      if (f.mo(ma.tmo(u, v)) != mc.tmo(f.mo(u), f.mo(v)))
        throw ShapeMismatch("kernel functor must preserve the tensor strictly");

  PromonoidalStructure pa = day_promonoidal(ma);
  PromonoidalStructure pc = day_promonoidal(mc);
  Homs hdA = all_homs(A);
  Homs hdC = all_homs(C);
  Profunctor k = embed_cov(f);
  KernelMediators med;
  med.k1.resize(static_cast<size_t>(nA) * nA * nC);
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nA; ++b)
      for (int x = 0; x < nC; ++x) {
        CoendResult lhs = kernel_lhs_box(k, pc, a, b, x);
        CoendResult rhs = kernel_rhs_box(k, pa, a, b, x);
        std::vector<int> tab(lhs.carrier.size(), -1);
        int c0 = ma.tob(a, b);
        int idpos = hdA.pos[A->id_of(c0)];
        int np0 = pa.p.at(pa.square.ob(a, b), c0).size();
        for (int q = 0; q < pc.square.cat->n_obj(); ++q) {
          auto [y, z] = pc.square.ob_parts(q);
          const auto& ws = hdC.mors[mc.tob(y, z)][x];
          const auto& us = hdC.mors[f.ob(a)][y];
          const auto& vs = hdC.mors[f.ob(b)][z];
          for (size_t w = 0; w < ws.size(); ++w)
            for (size_t u = 0; u < us.size(); ++u)
              for (size_t v = 0; v < vs.size(); ++v) {
                int m0 = C->compose(ws[w], mc.tmo(us[u], vs[v]));
                merge_image(tab,
                            lhs.inject[q][(w * us.size() + u) * vs.size() + v],
                            rhs.inject[c0][hdC.pos[m0] * np0 + idpos], "embedding collapse");
              }
        }
        med.k1[kix(nA, nC, a, b, x)] = std::move(tab);
      }
  ProActionResult act = pro_action(k, pa.j);
  med.k2.resize(nC);
  for (int x = 0; x < nC; ++x) {
    std::vector<int> tab(act.pts[x].carrier.size(), -1);
    for (int c = 0; c < nA; ++c) {
      const auto& us = hdC.mors[f.ob(c)][x];
      const auto& js = hdA.mors[ma.unit][c];
      for (size_t u = 0; u < us.size(); ++u)
        for (size_t jj = 0; jj < js.size(); ++jj)
          merge_image(tab, act.pts[x].inject[c][u * js.size() + jj],
                      hdC.pos[C->compose(us[u], f.mo(js[jj]))], "embedding unit");
    }
    med.k2[x] = std::move(tab);
  }
  return kernel_check(k, pa, pc, med);
}

Kernel compose_kernels(const FinFunctor& f, const FinFunctor& g, const MonoidalStructure& ma,
                       const MonoidalStructure& mb, const MonoidalStructure& mc) {
  if (f.trg != g.src) throw ShapeMismatch("kernels do not share the middle base");
  Kernel ka = functor_kernel(f, ma, mb);
  Kernel kb = functor_kernel(g, mb, mc);
  if (!ka.ok || !kb.ok) {
    Kernel out;
    out.ok = false;
    out.reason = !ka.ok ? ka.reason : kb.reason;
    return out;
  }
  FinFunctor gf = compose_functors(g, f);
  Kernel kc = functor_kernel(gf, ma, mc);
  PromonoidalStructure pa = day_promonoidal(ma);
  PromonoidalStructure pc = day_promonoidal(mc);
  Cat A = ma.base, C = mc.base;
  int nA = A->n_obj(), nC = C->n_obj();
  ProComposite comp = pro_compose(ka.k, kb.k);
  PointwiseIso iso = embed_cov_compose_check(f, g);
  if (!iso.ok) {
    Kernel out;
    out.ok = false;
    out.reason = "embedding composition does not collapse: " + iso.reason;
    return out;
  }

  KernelMediators med;
  med.k1.resize(static_cast<size_t>(nA) * nA * nC);
  for (int a = 0; a < nA; ++a)
    for (int b = 0; b < nA; ++b)
      for (int x = 0; x < nC; ++x) {
        int ix = kix(nA, nC, a, b, x);
        CoendResult lhs = kernel_lhs_box(comp.value, pc, a, b, x);
        std::vector<int> tl(lhs.carrier.size(), -1);
        for (int q = 0; q < pc.square.cat->n_obj(); ++q) {
          auto [y, z] = pc.square.ob_parts(q);
          int nw = pc.p.at(q, x).size();
          int nu1 = comp.value.at(a, y).size(), nv1 = comp.value.at(b, z).size();
          int nu2 = kc.k.at(a, y).size(), nv2 = kc.k.at(b, z).size();
          for (int w = 0; w < nw; ++w)
            for (int u = 0; u < nu1; ++u)
              for (int v = 0; v < nv1; ++v)
                merge_image(tl,
                            lhs.inject[q][(static_cast<size_t>(w) * nu1 + u) * nv1 + v],
                            kc.k1_lhs[ix].inject[q][(static_cast<size_t>(w) * nu2 +
                                                     iso.at[a * nC + y].fwd[u]) *
                                                        nv2 +
                                                    iso.at[b * nC + z].fwd[v]],
                            "composite transport");
        }
        CoendResult rhs = kernel_rhs_box(comp.value, pa, a, b, x);
        std::vector<int> trt(rhs.carrier.size(), -1);
        for (int c = 0; c < nA; ++c) {
          int nu1 = comp.value.at(c, x).size();
          int nu2 = kc.k.at(c, x).size();
          int np = pa.p.at(pa.square.ob(a, b), c).size();
          for (int u = 0; u < nu1; ++u)
            for (int pp = 0; pp < np; ++pp)
              merge_image(trt, rhs.inject[c][u * np + pp],
                          kc.k1_rhs[ix].inject[c][iso.at[c * nC + x].fwd[u] * np + pp],
                          "composite transport");
        }
        std::vector<int> trinv = invert_or_holes(trt, kc.k1_rhs[ix].carrier.size());
        std::vector<int> tab(lhs.carrier.size(), -1);
        for (size_t cls = 0; cls < tab.size(); ++cls)
          tab[cls] = trinv[kc.k1[ix].fwd[tl[cls]]];
        med.k1[ix] = std::move(tab);
      }
  ProActionResult act = pro_action(comp.value, pa.j);
  med.k2.resize(nC);
  for (int x = 0; x < nC; ++x) {
    std::vector<int> t2(act.pts[x].carrier.size(), -1);
    for (int c = 0; c < nA; ++c) {
      int nu = comp.value.at(c, x).size();
      int nj = pa.j.ob[c].size();
      for (int u = 0; u < nu; ++u)
        for (int jj = 0; jj < nj; ++jj)
          merge_image(t2, act.pts[x].inject[c][u * nj + jj],
                      kc.k2_dom[x].inject[c][iso.at[c * nC + x].fwd[u] * nj + jj],
                      "composite transport");
    }
    std::vector<int> tab(t2.size());
    for (size_t cls = 0; cls < t2.size(); ++cls) tab[cls] = kc.k2[x].fwd[t2[cls]];
    med.k2[x] = std::move(tab);
  }
  return kernel_check(comp.value, pa, pc, med);
}

FourierResult fourier(const Kernel& k, const SetFunctor& f) {
  if (f.base != k.k.src()) throw ShapeMismatch("transform input lives on a different base");
  ProActionResult act = pro_action(k.k, f);
  return {std::move(act.value), std::move(act.pts)};
}

FourierAdjoint fourier_right_adjoint(const Kernel& k, const SetFunctor& g, long long cap) {
  if (g.base != k.k.trg()) throw ShapeMismatch("transform input lives on a different base");
  RanProResult rp = ran_pro(k.k, pro_from_copresheaf(g), cap);
  FourierAdjoint out;
  out.value = copresheaf_from_pro(rp.value);
  out.pts = std::move(rp.pts);
  return out;
}

Witness fourier_adjunction(const Kernel& k, const SetFunctor& f, const SetFunctor& g,
                           long long cap) {
  Cat A = k.k.src(), C = k.k.trg();
  FourierResult four = fourier(k, f);
  FourierAdjoint radj = fourier_right_adjoint(k, g, cap);
  std::vector<SetNatComp> lhs_nats = all_setnats(four.value, g, cap);
  std::vector<SetNatComp> rhs_nats = all_setnats(f, radj.value, cap);
  Witness bad;
  bad.lhs = indexed_set("cell", static_cast<int>(lhs_nats.size()));
  bad.rhs = indexed_set("cell", static_cast<int>(rhs_nats.size()));

  std::vector<int> fwd(lhs_nats.size(), -1);
  for (size_t i = 0; i < lhs_nats.size(); ++i) {
    const SetNatComp& tau = lhs_nats[i];
    SetNatComp sig(A->n_obj());
    for (int a = 0; a < A->n_obj(); ++a) {
      sig[a].resize(f.ob[a].size());
      for (int s = 0; s < f.ob[a].size(); ++s) {
        std::vector<int> fam(C->n_obj());
        for (int x = 0; x < C->n_obj(); ++x) {
          std::vector<int> images(k.k.at(a, x).size());
          for (int u = 0; u < k.k.at(a, x).size(); ++u)
            images[u] = tau[x][four.pts[x].inject[a][u * f.ob[a].size() + s]];
          fam[x] = function_index(k.k.at(a, x), g.ob[x], images);
        }
        sig[a][s] = radj.pts[a].find_family(fam);
        if (sig[a][s] < 0) {
          bad.reason = "transform transpose escapes the end at " + A->objects[a];
          return bad;
        }
      }
    }
    fwd[i] = locate_nat(rhs_nats, sig);
    if (fwd[i] < 0) {
      bad.reason = "transform transpose is not among the enumerated 2-cells";
      return bad;
    }
  }
  std::vector<int> bwd(rhs_nats.size(), -1);
  for (size_t jdx = 0; jdx < rhs_nats.size(); ++jdx) {
    const SetNatComp& sig = rhs_nats[jdx];
    SetNatComp tau(C->n_obj());
    for (int x = 0; x < C->n_obj(); ++x) {
      tau[x].assign(four.pts[x].carrier.size(), -1);
      for (int a = 0; a < A->n_obj(); ++a) {
        int nf = f.ob[a].size();
        for (int u = 0; u < k.k.at(a, x).size(); ++u)
          for (int s = 0; s < nf; ++s) {
            auto images = function_images(k.k.at(a, x), g.ob[x], radj.pts[a].families[sig[a][s]][x]);
            merge_image(tau[x], four.pts[x].inject[a][u * nf + s], images[u],
                        "transform counit");
          }
      }
    }
    bwd[jdx] = locate_nat(lhs_nats, tau);
    if (bwd[jdx] < 0) {
      bad.reason = "transform counit is not among the enumerated 2-cells";
      return bad;
    }
  }
  return make_witness(bad.lhs, bad.rhs, std::move(fwd), std::move(bwd));
}

PointwiseIso parseval(const Kernel& k, const SetFunctor& f, const SetFunctor& g,
                      const PromonoidalStructure& pa, const PromonoidalStructure& pc) {
  PointwiseIso out;
  out.ok = true;
  if (!k.ok) {
    out.ok = false;
    out.reason = "kernel without verified mediators: " + k.reason;
    return out;
  }
  Cat A = k.k.src(), C = k.k.trg();
  if (f.base != A || g.base != A || pa.base != A || pc.base != C)
    throw ShapeMismatch("transform factors live on a different base");
  int nA = A->n_obj(), nC = C->n_obj();
  DayResult conv = p_convolve(f, g, pa);
  FourierResult lt = fourier(k, conv.value);
  FourierResult ff = fourier(k, f);
  FourierResult fg = fourier(k, g);
  DayResult rt = p_convolve(ff.value, fg.value, pc);

  for (int x = 0; x < nC; ++x) {
    std::vector<int> fwd(lt.pts[x].carrier.size(), -1);
    for (int c = 0; c < nA; ++c) {
      int nu = k.k.at(c, x).size();
      int nq = conv.value.ob[c].size();
      for (int u = 0; u < nu; ++u)
        for (int q = 0; q < nq; ++q) {
          int cls = lt.pts[x].inject[c][u * nq + q];
          auto [q2, pt2] = conv.pts[c].class_rep[q];
          auto [a, b] = pa.square.ob_parts(q2);
          Dec3 in = dec3(pt2, f.ob[a].size(), g.ob[b].size());
          int ix = kix(nA, nC, a, b, x);
          int np = pa.p.at(q2, c).size();
          int r = k.k1_rhs[ix].inject[c][u * np + in.p];
          int l = k.k1[ix].bwd[r];
          auto [qyz, pt3] = k.k1_lhs[ix].class_rep[l];
          auto [y, z] = pc.square.ob_parts(qyz);
          Dec3 lft = dec3(pt3, k.k.at(a, y).size(), k.k.at(b, z).size());
          int phi = ff.pts[y].inject[a][lft.s * f.ob[a].size() + in.s];
          int psi = fg.pts[z].inject[b][lft.t * g.ob[b].size() + in.t];
          int img = rt.pts[x].inject[qyz][(static_cast<size_t>(lft.p) * ff.value.ob[y].size() +
                                           phi) *
                                              fg.value.ob[z].size() +
                                          psi];
          merge_image(fwd, cls, img, "transform of a convolution");
        }
    }
    std::vector<int> bwd(rt.pts[x].carrier.size(), -1);
    for (int qyz = 0; qyz < pc.square.cat->n_obj(); ++qyz) {
      auto [y, z] = pc.square.ob_parts(qyz);
      int nw = pc.p.at(qyz, x).size();
      int nph = ff.value.ob[y].size(), nps = fg.value.ob[z].size();
      for (int w = 0; w < nw; ++w)
        for (int phi = 0; phi < nph; ++phi)
          for (int psi = 0; psi < nps; ++psi) {
            int cls = rt.pts[x].inject[qyz][(static_cast<size_t>(w) * nph + phi) * nps + psi];
            auto [a, ptf] = ff.pts[y].class_rep[phi];
            int uu = ptf / f.ob[a].size(), s = ptf % f.ob[a].size();
            auto [b, ptg] = fg.pts[z].class_rep[psi];
            int vv = ptg / g.ob[b].size(), t = ptg % g.ob[b].size();
            int ix = kix(nA, nC, a, b, x);
            int nv = k.k.at(b, z).size();
            int l = k.k1_lhs[ix].inject[qyz][(static_cast<size_t>(w) * k.k.at(a, y).size() + uu) *
                                                 nv +
                                             vv];
            int r = k.k1[ix].fwd[l];
            auto [c, ptr] = k.k1_rhs[ix].class_rep[r];
            int np = pa.p.at(pa.square.ob(a, b), c).size();
            int u = ptr / np, pp = ptr % np;
            int q = conv.pts[c].inject[pa.square.ob(a, b)]
                                      [(static_cast<size_t>(pp) * f.ob[a].size() + s) *
                                           g.ob[b].size() +
                                       t];
            int img = lt.pts[x].inject[c][u * conv.value.ob[c].size() + q];
            merge_image(bwd, cls, img, "inverse transform of a convolution");
          }
    }
    Witness w = make_witness(lt.pts[x].carrier, rt.pts[x].carrier, std::move(fwd),
                             std::move(bwd));
    fold_reason(out, w, "at " + C->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(lt.value, rt.value, iso_fwd(out)));
  return out;
}

PointwiseIso fourier_unit_law(const Kernel& k, const PromonoidalStructure& pa,
                              const PromonoidalStructure& pc) {
  PointwiseIso out;
  out.ok = true;
  if (!k.ok) {
    out.ok = false;
    out.reason = "kernel without verified mediators: " + k.reason;
    return out;
  }
  if (pa.base != k.k.src() || pc.base != k.k.trg())
    throw ShapeMismatch("structures do not match the kernel");
  FourierResult four = fourier(k, pa.j);
  Cat C = k.k.trg();
  for (int x = 0; x < C->n_obj(); ++x) {
    Witness w = make_witness(four.value.ob[x], pc.j.ob[x], k.k2[x].fwd, k.k2[x].bwd);
    fold_reason(out, w, "at " + C->objects[x]);
    out.at.push_back(std::move(w));
  }
  fold_nat(out, validate_setnat(four.value, pc.j, iso_fwd(out)));
  return out;
}

}  // namespace fce

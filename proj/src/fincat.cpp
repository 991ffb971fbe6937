#include "fce/fincat.hpp"

#include <algorithm>
#include <map>

namespace fce {

namespace {

std::string paren(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

int FinCategory::obj(const std::string& id) const {
  auto it = obj_ix.find(id);
  if (it == obj_ix.end()) throw std::runtime_error("unknown object: " + id);
  return it->second;
}

int FinCategory::mor(const std::string& id) const {
  auto it = mor_ix.find(id);
  if (it == mor_ix.end()) throw std::runtime_error("unknown morphism: " + id);
  return it->second;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < n_mor(); ++m)
    if (src(m) == a && trg(m) == b) out.push_back(m);
  return out;
}

int FinCategory::inverse(int m) const {
  for (int g : hom(trg(m), src(m)))
    if (compose(g, m) == id_of(src(m)) && compose(m, g) == id_of(trg(m))) return g;
  return -1;
}

void FinCategory::reindex() {
  obj_ix.clear();
  mor_ix.clear();
  for (int i = 0; i < n_obj(); ++i) obj_ix[objects[i]] = i;
  for (int i = 0; i < n_mor(); ++i) mor_ix[morphisms[i].id] = i;
}

std::string ValidationIssue::render() const {
  static const char* names[] = {"MissingIdentity", "NonComposablePair", "AssociativityViolation",
                                "UnitViolation", "Malformed"};
  return std::string(names[kind]) + ": " + detail;
}

std::vector<ValidationIssue> validate_category(const FinCategory& c, const Caps& caps) {
  std::vector<ValidationIssue> out;
  auto bad = [&](ValidationIssue::Kind k, const std::string& d) { out.push_back({k, d}); };

  if (c.n_obj() > caps.max_objects || c.n_mor() > caps.max_morphisms) {
    bad(ValidationIssue::Malformed, "size cap exceeded (" + std::to_string(c.n_obj()) + " objects, " +
                                        std::to_string(c.n_mor()) + " morphisms)");
    return out;
  }
  {
    std::unordered_map<std::string, int> seen;
    for (const auto& o : c.objects)
      if (++seen[o] == 2) bad(ValidationIssue::Malformed, "duplicate object id " + o);
    seen.clear();
    for (const auto& m : c.morphisms)
      if (++seen[m.id] == 2) bad(ValidationIssue::Malformed, "duplicate morphism id " + m.id);
  }
  for (const auto& m : c.morphisms)
    if (m.src < 0 || m.src >= c.n_obj() || m.trg < 0 || m.trg >= c.n_obj())
      bad(ValidationIssue::Malformed, "morphism " + m.id + " has out-of-range endpoints");
  if (static_cast<int>(c.identity.size()) != c.n_obj() ||
      static_cast<int>(c.comp.size()) != c.n_mor())
    bad(ValidationIssue::Malformed, "identity/composition table shape mismatch");
  for (const auto& row : c.comp)
    if (static_cast<int>(row.size()) != c.n_mor())
      bad(ValidationIssue::Malformed, "composition table row of wrong length");
  if (!out.empty()) return out;

  for (int o = 0; o < c.n_obj(); ++o) {
    int e = c.identity[o];
    if (e < 0 || e >= c.n_mor() || c.src(e) != o || c.trg(e) != o)
      bad(ValidationIssue::MissingIdentity, "object " + c.objects[o] + " lacks a well-typed identity");
  }
  if (!out.empty()) return out;

  for (int g = 0; g < c.n_mor(); ++g)
    for (int f = 0; f < c.n_mor(); ++f) {
      int gf = c.comp[g][f];
      if (!c.composable(g, f)) {
        if (gf != -1)
          bad(ValidationIssue::NonComposablePair,
              "(" + c.morphisms[g].id + ", " + c.morphisms[f].id + ") is not composable but has a table entry");
        continue;
      }
      if (gf < 0 || gf >= c.n_mor()) {
        bad(ValidationIssue::NonComposablePair,
            "(" + c.morphisms[g].id + ", " + c.morphisms[f].id + ") lacks a composite");
        continue;
      }
      if (c.src(gf) != c.src(f) || c.trg(gf) != c.trg(g))
        bad(ValidationIssue::NonComposablePair,
            "composite " + c.morphisms[gf].id + " of (" + c.morphisms[g].id + ", " + c.morphisms[f].id +
                ") has wrong endpoints");
    }
  if (!out.empty()) return out;

  for (int f = 0; f < c.n_mor(); ++f) {
    if (c.comp[c.id_of(c.trg(f))][f] != f || c.comp[f][c.id_of(c.src(f))] != f)
      bad(ValidationIssue::UnitViolation, "identity laws fail at " + c.morphisms[f].id);
  }

  // adjacency by source object keeps the triple scan near-linear in composable triples
  std::vector<std::vector<int>> out_of(c.n_obj());
  for (int m = 0; m < c.n_mor(); ++m) out_of[c.src(m)].push_back(m);
  for (int f = 0; f < c.n_mor(); ++f)
    for (int g : out_of[c.trg(f)])
      for (int h : out_of[c.trg(g)])
        if (c.comp[h][c.comp[g][f]] != c.comp[c.comp[h][g]][f]) {
          bad(ValidationIssue::AssociativityViolation,
              "(" + c.morphisms[h].id + ", " + c.morphisms[g].id + ", " + c.morphisms[f].id + ")");
          return out;
        }
  return out;
}

Cat bless(FinCategory c, const Caps& caps) {
  c.reindex();
  auto issues = validate_category(c, caps);
  if (!issues.empty()) throw std::runtime_error("invalid category " + c.name + ": " + issues[0].render());
  return std::make_shared<const FinCategory>(std::move(c));
}

std::vector<std::string> validate_functor(const FinFunctor& f) {
  std::vector<std::string> out;
  const auto& A = *f.src;
  const auto& B = *f.trg;
  if (static_cast<int>(f.on_obj.size()) != A.n_obj() || static_cast<int>(f.on_mor.size()) != A.n_mor()) {
    out.push_back("object/morphism map shape mismatch");
    return out;
  }
  for (int o : f.on_obj)
    if (o < 0 || o >= B.n_obj()) return {"object image out of range"};
  for (int m : f.on_mor)
    if (m < 0 || m >= B.n_mor()) return {"morphism image out of range"};
  for (int m = 0; m < A.n_mor(); ++m)
    if (B.src(f.on_mor[m]) != f.on_obj[A.src(m)] || B.trg(f.on_mor[m]) != f.on_obj[A.trg(m)])
      out.push_back("endpoints not preserved at " + A.morphisms[m].id);
  for (int o = 0; o < A.n_obj(); ++o)
    if (f.on_mor[A.id_of(o)] != B.id_of(f.on_obj[o]))
      out.push_back("identity not preserved at " + A.objects[o]);
  for (int g = 0; g < A.n_mor(); ++g)
    for (int h = 0; h < A.n_mor(); ++h)
      if (A.composable(g, h) && f.on_mor[A.compose(g, h)] != B.compose(f.on_mor[g], f.on_mor[h]))
        out.push_back("composition not preserved at (" + A.morphisms[g].id + ", " + A.morphisms[h].id + ")");
  return out;
}

FinFunctor bless_functor(FinFunctor f) {
  auto issues = validate_functor(f);
  if (!issues.empty()) throw std::runtime_error("invalid functor: " + issues[0]);
  return f;
}

FinFunctor identity_functor(Cat c) {
  FinFunctor f;
  f.src = f.trg = c;
  f.on_obj.resize(c->n_obj());
  f.on_mor.resize(c->n_mor());
  for (int i = 0; i < c->n_obj(); ++i) f.on_obj[i] = i;
  for (int i = 0; i < c->n_mor(); ++i) f.on_mor[i] = i;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.trg.get() != g.src.get()) throw std::runtime_error("functor composition: middle categories differ");
  FinFunctor h;
  h.src = f.src;
  h.trg = g.trg;
  h.on_obj.reserve(f.on_obj.size());
  h.on_mor.reserve(f.on_mor.size());
  for (int o : f.on_obj) h.on_obj.push_back(g.on_obj[o]);
  for (int m : f.on_mor) h.on_mor.push_back(g.on_mor[m]);
  return h;
}

FinFunctor constant_functor(Cat src, Cat trg, int obj) {
  FinFunctor f;
  f.src = src;
  f.trg = trg;
  f.on_obj.assign(src->n_obj(), obj);
  f.on_mor.assign(src->n_mor(), trg->id_of(obj));
  return f;
}

bool functor_eq(const FinFunctor& a, const FinFunctor& b) {
  return a.src.get() == b.src.get() && a.trg.get() == b.trg.get() && a.on_obj == b.on_obj &&
         a.on_mor == b.on_mor;
}

CatIso check_iso(const FinFunctor& f) {
  CatIso iso;
  iso.fwd = f;
  auto issues = validate_functor(f);
  if (!issues.empty()) {
    iso.reason = "not a functor: " + issues[0];
    return iso;
  }
  const auto& A = *f.src;
  const auto& B = *f.trg;
  if (A.n_obj() != B.n_obj() || A.n_mor() != B.n_mor()) {
    iso.reason = "cardinality mismatch";
    return iso;
  }
  std::vector<int> oseen(B.n_obj(), -1), mseen(B.n_mor(), -1);
  for (int o = 0; o < A.n_obj(); ++o) {
    if (oseen[f.on_obj[o]] >= 0) {
      iso.reason = "objects " + A.objects[oseen[f.on_obj[o]]] + " and " + A.objects[o] + " collide";
      return iso;
    }
    oseen[f.on_obj[o]] = o;
  }
  for (int m = 0; m < A.n_mor(); ++m) {
    if (mseen[f.on_mor[m]] >= 0) {
      iso.reason = "morphisms " + A.morphisms[mseen[f.on_mor[m]]].id + " and " + A.morphisms[m].id + " collide";
      return iso;
    }
    mseen[f.on_mor[m]] = m;
  }
  FinFunctor inv;
  inv.src = f.trg;
  inv.trg = f.src;
  inv.on_obj.assign(oseen.begin(), oseen.end());
  inv.on_mor.assign(mseen.begin(), mseen.end());
  auto inv_issues = validate_functor(inv);
  if (!inv_issues.empty()) {
    iso.reason = "inverse fails: " + inv_issues[0];
    return iso;
  }
  iso.ok = true;
  return iso;
}

std::vector<std::string> validate_nat(const NatTransformation& t) {
  std::vector<std::string> out;
  const auto& F = t.src;
  const auto& G = t.trg;
  if (F.src.get() != G.src.get() || F.trg.get() != G.trg.get()) return {"functors not parallel"};
  const auto& C = *F.src;
  const auto& D = *F.trg;
  if (static_cast<int>(t.comp.size()) != C.n_obj()) return {"component table shape mismatch"};
  for (int c = 0; c < C.n_obj(); ++c) {
    int m = t.comp[c];
    if (m < 0 || m >= D.n_mor() || D.src(m) != F.on_obj[c] || D.trg(m) != G.on_obj[c])
      out.push_back("component at " + C.objects[c] + " is not Fc -> Gc");
  }
  if (!out.empty()) return out;
  for (int f = 0; f < C.n_mor(); ++f) {
    int lhs = D.compose(G.on_mor[f], t.comp[C.src(f)]);
    int rhs = D.compose(t.comp[C.trg(f)], F.on_mor[f]);
    if (lhs != rhs) out.push_back("naturality fails at " + C.morphisms[f].id);
  }
  return out;
}

NatTransformation identity_nat(const FinFunctor& f) {
  NatTransformation t;
  t.src = t.trg = f;
  t.comp.reserve(f.on_obj.size());
  for (int o : f.on_obj) t.comp.push_back(f.trg->id_of(o));
  return t;
}

NatTransformation vcompose_nat(const NatTransformation& b, const NatTransformation& a) {
  NatTransformation t;
  t.src = a.src;
  t.trg = b.trg;
  const auto& D = *a.src.trg;
  t.comp.reserve(a.comp.size());
  for (size_t c = 0; c < a.comp.size(); ++c) t.comp.push_back(D.compose(b.comp[c], a.comp[c]));
  return t;
}

Cat opposite(Cat c) {
  FinCategory o;
  o.name = c->name + "^op";
  o.objects = c->objects;
  o.morphisms = c->morphisms;
  for (auto& m : o.morphisms) std::swap(m.src, m.trg);
  o.identity = c->identity;
  o.comp.assign(c->n_mor(), std::vector<int>(c->n_mor(), -1));
  for (int g = 0; g < c->n_mor(); ++g)
    for (int f = 0; f < c->n_mor(); ++f) o.comp[g][f] = c->comp[f][g];
  Caps caps{std::max(64, c->n_obj()), std::max(512, c->n_mor())};
  return bless(std::move(o), caps);
}

ProdCat product(Cat a, Cat b) {
  FinCategory p;
  p.name = "(" + a->name + "x" + b->name + ")";
  for (const auto& x : a->objects)
    for (const auto& y : b->objects) p.objects.push_back(paren(x, y));
  for (const auto& f : a->morphisms)
    for (const auto& g : b->morphisms) {
      FinCategory::Mor m;
      m.id = paren(f.id, g.id);
      p.morphisms.push_back(m);
    }
  int nb = b->n_obj(), mb = b->n_mor();
  for (int f = 0; f < a->n_mor(); ++f)
    for (int g = 0; g < b->n_mor(); ++g) {
      auto& m = p.morphisms[f * mb + g];
      m.src = a->src(f) * nb + b->src(g);
      m.trg = a->trg(f) * nb + b->trg(g);
    }
  p.identity.resize(a->n_obj() * nb);
  for (int x = 0; x < a->n_obj(); ++x)
    for (int y = 0; y < nb; ++y) p.identity[x * nb + y] = a->id_of(x) * mb + b->id_of(y);
  p.comp.assign(p.morphisms.size(), std::vector<int>(p.morphisms.size(), -1));
  for (int f2 = 0; f2 < a->n_mor(); ++f2)
    for (int g2 = 0; g2 < b->n_mor(); ++g2)
      for (int f1 = 0; f1 < a->n_mor(); ++f1)
        for (int g1 = 0; g1 < b->n_mor(); ++g1) {
          if (!a->composable(f2, f1) || !b->composable(g2, g1)) continue;
          p.comp[f2 * mb + g2][f1 * mb + g1] = a->compose(f2, f1) * mb + b->compose(g2, g1);
        }
  Caps caps;
  caps.max_objects = std::max(caps.max_objects, a->n_obj() * b->n_obj());
  caps.max_morphisms = std::max(caps.max_morphisms, a->n_mor() * b->n_mor());
  ProdCat out;
  out.left = a;
  out.right = b;
  out.cat = bless(std::move(p), caps);
  return out;
}

FinFunctor pair_functor(const ProdCat& s, const ProdCat& t, const FinFunctor& f,
                        const FinFunctor& g) {
  FinFunctor out;
  out.src = s.cat;
  out.trg = t.cat;
  out.on_obj.resize(s.cat->n_obj());
  for (int a = 0; a < s.left->n_obj(); ++a)
    for (int b = 0; b < s.right->n_obj(); ++b)
      out.on_obj[s.ob(a, b)] = t.ob(f.ob(a), g.ob(b));
  out.on_mor.resize(s.cat->n_mor());
  for (int u = 0; u < s.left->n_mor(); ++u)
    for (int v = 0; v < s.right->n_mor(); ++v)
      out.on_mor[s.mo(u, v)] = t.mo(f.mo(u), g.mo(v));
  return bless_functor(out);
}

TwistedArrows twisted_arrows(Cat c) {
  TwistedArrows tw;
  tw.base = product(opposite(c), c);
  FinCategory t;
  t.name = "TW(" + c->name + ")";
  tw.obj_of_mor.resize(c->n_mor());
  for (int f = 0; f < c->n_mor(); ++f) {
    tw.obj_of_mor[f] = static_cast<int>(t.objects.size());
    t.objects.push_back(c->morphisms[f].id);
  }
  // morphism f -> g labeled by (h: d -> src f, k: trg f -> d') with k∘f∘h = g
  std::map<std::tuple<int, int, int>, int> ix;  // (f, h, k) -> morphism index
  for (int f = 0; f < c->n_mor(); ++f)
    for (int h = 0; h < c->n_mor(); ++h) {
      if (c->trg(h) != c->src(f)) continue;
      int fh = c->compose(f, h);
      for (int k = 0; k < c->n_mor(); ++k) {
        if (c->src(k) != c->trg(f)) continue;
        int g = c->compose(k, fh);
        FinCategory::Mor m;
        m.id = paren(c->morphisms[h].id, c->morphisms[k].id) + "@" + c->morphisms[f].id;
        m.src = tw.obj_of_mor[f];
        m.trg = tw.obj_of_mor[g];
        ix[{f, h, k}] = static_cast<int>(t.morphisms.size());
        t.morphisms.push_back(m);
        tw.mor_pair.push_back({h, k, f, g});
      }
    }
  t.identity.resize(t.objects.size());
  for (int f = 0; f < c->n_mor(); ++f)
    t.identity[tw.obj_of_mor[f]] = ix.at({f, c->id_of(c->src(f)), c->id_of(c->trg(f))});
  t.comp.assign(t.morphisms.size(), std::vector<int>(t.morphisms.size(), -1));
  for (size_t m1 = 0; m1 < tw.mor_pair.size(); ++m1)
    for (size_t m2 = 0; m2 < tw.mor_pair.size(); ++m2) {
      const auto& a = tw.mor_pair[m1];  // f -> g
      const auto& b = tw.mor_pair[m2];  // g -> e
      if (a[3] != b[2]) continue;
      int h = c->compose(a[0], b[0]);
      int k = c->compose(b[1], a[1]);
      t.comp[m2][m1] = ix.at({a[2], h, k});
    }
  Caps caps;
  caps.max_objects = std::max(64, c->n_mor());
  caps.max_morphisms = std::max(512, static_cast<int>(t.morphisms.size()));
  Cat twc = bless(std::move(t), caps);
  FinFunctor proj;
  proj.src = twc;
  proj.trg = tw.base.cat;
  proj.on_obj.resize(twc->n_obj());
  proj.on_mor.resize(twc->n_mor());
  for (int f = 0; f < c->n_mor(); ++f)
    proj.on_obj[tw.obj_of_mor[f]] = tw.base.ob(c->src(f), c->trg(f));
  for (size_t m = 0; m < tw.mor_pair.size(); ++m)
    proj.on_mor[m] = tw.base.mo(tw.mor_pair[m][0], tw.mor_pair[m][1]);
  tw.tw = twc;
  tw.proj = bless_functor(proj);
  return tw;
}

Coslice coslice(Cat c, int c0) {
  Coslice out;
  FinCategory s;
  s.name = c->objects[c0] + "/" + c->name;
  std::vector<int> obj_of(c->n_mor(), -1);
  for (int f = 0; f < c->n_mor(); ++f)
    if (c->src(f) == c0) {
      obj_of[f] = static_cast<int>(s.objects.size());
      s.objects.push_back(c->morphisms[f].id);
      out.obj_mor.push_back(f);
    }
  std::map<std::pair<int, int>, int> ix;  // (h, f) -> morphism index
  for (int f = 0; f < c->n_mor(); ++f) {
    if (obj_of[f] < 0) continue;
    for (int h = 0; h < c->n_mor(); ++h) {
      if (c->src(h) != c->trg(f)) continue;
      FinCategory::Mor m;
      m.id = c->morphisms[h].id + "@" + c->morphisms[f].id;
      m.src = obj_of[f];
      m.trg = obj_of[c->compose(h, f)];
      ix[{h, f}] = static_cast<int>(s.morphisms.size());
      s.morphisms.push_back(m);
    }
  }
  s.identity.resize(s.objects.size());
  for (int f = 0; f < c->n_mor(); ++f)
    if (obj_of[f] >= 0) s.identity[obj_of[f]] = ix.at({c->id_of(c->trg(f)), f});
  s.comp.assign(s.morphisms.size(), std::vector<int>(s.morphisms.size(), -1));
  for (const auto& [hk1, m1] : ix)
    for (const auto& [hk2, m2] : ix) {
      auto [h1, f1] = hk1;
      auto [h2, f2] = hk2;
      if (f2 != c->compose(h1, f1)) continue;
      s.comp[m2][m1] = ix.at({c->compose(h2, h1), f1});
    }
  Caps caps;
  caps.max_objects = std::max(64, static_cast<int>(s.objects.size()));
  caps.max_morphisms = std::max(512, static_cast<int>(s.morphisms.size()));
  out.cat = bless(std::move(s), caps);
  FinFunctor proj;
  proj.src = out.cat;
  proj.trg = c;
  for (int f : out.obj_mor) proj.on_obj.push_back(c->trg(f));
  proj.on_mor.resize(out.cat->n_mor());
  for (const auto& [hk, m] : ix) proj.on_mor[m] = hk.first;
  out.proj = bless_functor(proj);
  return out;
}

PullbackCat pullback_category(const FinFunctor& f, const FinFunctor& g) {
  if (f.trg.get() != g.trg.get()) throw std::runtime_error("pullback: targets differ");
  const auto& A = *f.src;
  const auto& B = *g.src;
  PullbackCat out;
  FinCategory p;
  p.name = "(" + A.name + "x_" + f.trg->name + B.name + ")";
  std::map<std::pair<int, int>, int> oix, mix;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b)
      if (f.on_obj[a] == g.on_obj[b]) {
        oix[{a, b}] = static_cast<int>(p.objects.size());
        p.objects.push_back(paren(A.objects[a], B.objects[b]));
        out.obj_pairs.push_back({a, b});
      }
  for (int m = 0; m < A.n_mor(); ++m)
    for (int n = 0; n < B.n_mor(); ++n)
      if (f.on_mor[m] == g.on_mor[n]) {
        FinCategory::Mor mm;
        mm.id = paren(A.morphisms[m].id, B.morphisms[n].id);
        mm.src = oix.at({A.src(m), B.src(n)});
        mm.trg = oix.at({A.trg(m), B.trg(n)});
        mix[{m, n}] = static_cast<int>(p.morphisms.size());
        p.morphisms.push_back(mm);
        out.mor_pairs.push_back({m, n});
      }
  p.identity.resize(p.objects.size());
  for (const auto& [ab, o] : oix) p.identity[o] = mix.at({A.id_of(ab.first), B.id_of(ab.second)});
  p.comp.assign(p.morphisms.size(), std::vector<int>(p.morphisms.size(), -1));
  for (const auto& [mn1, i1] : mix)
    for (const auto& [mn2, i2] : mix) {
      if (!A.composable(mn2.first, mn1.first) || !B.composable(mn2.second, mn1.second)) continue;
      p.comp[i2][i1] = mix.at({A.compose(mn2.first, mn1.first), B.compose(mn2.second, mn1.second)});
    }
  Caps caps;
  caps.max_objects = std::max(64, static_cast<int>(p.objects.size()));
  caps.max_morphisms = std::max(512, static_cast<int>(p.morphisms.size()));
  out.cat = bless(std::move(p), caps);
  FinFunctor pl, pr;
  pl.src = pr.src = out.cat;
  pl.trg = f.src;
  pr.trg = g.src;
  for (auto [a, b] : out.obj_pairs) {
    pl.on_obj.push_back(a);
    pr.on_obj.push_back(b);
  }
  for (auto [m, n] : out.mor_pairs) {
    pl.on_mor.push_back(m);
    pr.on_mor.push_back(n);
  }
  out.to_left = bless_functor(pl);
  out.to_right = bless_functor(pr);
  return out;
}

FinCategory raw_terminal() {
  FinCategory c;
  c.name = "1";
  c.objects = {"*"};
  c.morphisms = {{"id*", 0, 0}};
  c.identity = {0};
  c.comp = {{0}};
  return c;
}

Cat terminal_cat() {
  static Cat t = bless(raw_terminal());
  return t;
}

Cat walking_arrow() {
  FinCategory c;
  c.name = "2";
  c.objects = {"0", "1"};
  c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}};
  c.identity = {0, 1};
  c.comp = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
  return bless(std::move(c));
}

Cat walking_iso() {
  FinCategory c;
  c.name = "I";
  c.objects = {"0", "1"};
  c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
  c.identity = {0, 1};
  c.comp.assign(4, std::vector<int>(4, -1));
  auto set = [&](int g, int f, int gf) { c.comp[g][f] = gf; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(1, 2, 2);
  set(3, 1, 3);
  set(0, 3, 3);
  set(3, 2, 0);
  set(2, 3, 1);
  return bless(std::move(c));
}

Cat discrete_cat(const std::string& name, const std::vector<std::string>& objects) {
  FinCategory c;
  c.name = name;
  c.objects = objects;
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
    c.morphisms.push_back({"id" + objects[i], i, i});
    c.identity.push_back(i);
  }
  c.comp.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (size_t i = 0; i < c.morphisms.size(); ++i) c.comp[i][i] = static_cast<int>(i);
  return bless(std::move(c));
}

Cat from_monoid(const std::string& name, const std::vector<std::string>& elems,
                const std::vector<std::vector<int>>& mul, int unit) {
  FinCategory c;
  c.name = name;
  c.objects = {"*"};
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) c.morphisms.push_back({elems[i], 0, 0});
  c.identity = {unit};
  c.comp = mul;
  return bless(std::move(c));
}

Cat from_poset(const std::string& name, const std::vector<std::string>& objects,
               const std::vector<std::vector<bool>>& leq) {
  FinCategory c;
  c.name = name;
  c.objects = objects;
  int n = static_cast<int>(objects.size());
  std::vector<std::vector<int>> ix(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) {
        ix[a][b] = static_cast<int>(c.morphisms.size());
        c.morphisms.push_back({objects[a] + "<=" + objects[b], a, b});
      }
  c.identity.resize(n);
  for (int a = 0; a < n; ++a) {
    if (ix[a][a] < 0) throw std::runtime_error("poset: missing reflexivity at " + objects[a]);
    c.identity[a] = ix[a][a];
  }
  c.comp.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        if (ix[a][b] >= 0 && ix[b][d] >= 0) {
          if (ix[a][d] < 0) throw std::runtime_error("poset: not transitive");
          c.comp[ix[b][d]][ix[a][b]] = ix[a][d];
        }
  return bless(std::move(c));
}

Cat from_acyclic_graph(const std::string& name, const std::vector<std::string>& objects,
                       const std::vector<std::pair<std::string, std::pair<int, int>>>& edges) {
  FinCategory c;
  c.name = name;
  c.objects = objects;
  int n = static_cast<int>(objects.size());
  // paths as edge index sequences; identity = empty path at each object
  struct Path {
    std::vector<int> es;
    int src, trg;
  };
  std::vector<Path> paths;
  std::map<std::vector<int>, int> seen;  // nonempty edge sequences
  for (int a = 0; a < n; ++a) paths.push_back({{}, a, a});
  for (size_t e = 0; e < edges.size(); ++e) {
    paths.push_back({{static_cast<int>(e)}, edges[e].second.first, edges[e].second.second});
    seen[{static_cast<int>(e)}] = static_cast<int>(paths.size()) - 1;
  }
  for (size_t i = n; i < paths.size(); ++i) {
    if (paths.size() > 4096) throw std::runtime_error("free category too large (is the graph acyclic?)");
    for (size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].second.first != paths[i].trg) continue;
      auto es = paths[i].es;
      es.push_back(static_cast<int>(e));
      if (seen.count(es)) continue;
      paths.push_back({es, paths[i].src, edges[e].second.second});
      seen[es] = static_cast<int>(paths.size()) - 1;
    }
  }
  auto path_name = [&](const Path& p) {
    if (p.es.empty()) return "id" + objects[p.src];
    std::string s;
    for (auto it = p.es.rbegin(); it != p.es.rend(); ++it) {
      if (!s.empty()) s += ".";
      s += edges[*it].first;
    }
    return s;
  };
  for (const auto& p : paths) c.morphisms.push_back({path_name(p), p.src, p.trg});
  c.identity.resize(n);
  for (int a = 0; a < n; ++a) c.identity[a] = a;
  auto find_path = [&](const std::vector<int>& es, int a) {
    return es.empty() ? a : seen.at(es);
  };
  c.comp.assign(paths.size(), std::vector<int>(paths.size(), -1));
  for (size_t g = 0; g < paths.size(); ++g)
    for (size_t f = 0; f < paths.size(); ++f) {
      if (paths[f].trg != paths[g].src) continue;
      auto es = paths[f].es;
      es.insert(es.end(), paths[g].es.begin(), paths[g].es.end());
      c.comp[g][f] = find_path(es, paths[f].src);
    }
  Caps caps;
  caps.max_objects = std::max(64, n);
  caps.max_morphisms = std::max(512, static_cast<int>(paths.size()));
  return bless(std::move(c), caps);
}

}  // namespace fce

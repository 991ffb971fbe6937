#include "fce/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fce {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field `" + key + "`");
  return *it;
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

int lookup(const std::unordered_map<std::string, int>& ix, const std::string& id,
           const std::string& where) {
  auto it = ix.find(id);
  if (it == ix.end()) throw ParseError(where + ": unknown id `" + id + "`");
  return it->second;
}

Cat category_from(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a category document");
  FinCategory c;
  c.name = j.value("name", "unnamed");
  std::unordered_map<std::string, int> oix, mix;
  for (const auto& o : field(j, "objects", where)) {
    std::string id = str(o, where + ".objects");
    if (!oix.emplace(id, c.n_obj()).second)
      throw ParseError(where + ".objects: duplicate `" + id + "`");
    c.objects.push_back(id);
  }
  for (const auto& m : field(j, "morphisms", where)) {
    FinCategory::Mor mor;
    mor.id = str(field(m, "id", where + ".morphisms"), where + ".morphisms.id");
    mor.src = lookup(oix, str(field(m, "src", where + ".morphisms"), where), where + ".morphisms");
    mor.trg = lookup(oix, str(field(m, "trg", where + ".morphisms"), where), where + ".morphisms");
    if (!mix.emplace(mor.id, c.n_mor()).second)
      throw ParseError(where + ".morphisms: duplicate `" + mor.id + "`");
    c.morphisms.push_back(std::move(mor));
  }
  c.identity.assign(c.n_obj(), -1);
  for (const auto& [obj, mor] : field(j, "identities", where).items())
    c.identity[lookup(oix, obj, where + ".identities")] =
        lookup(mix, str(mor, where + ".identities"), where + ".identities");
  c.comp.assign(c.n_mor(), std::vector<int>(c.n_mor(), -1));
  int k = 0;
  for (const auto& t : field(j, "composition", where)) {
    std::string at = where + ".composition[" + std::to_string(k++) + "]";
    if (!t.is_array() || t.size() != 3) throw ParseError(at + ": expected a triple [g, f, gf]");
    int g = lookup(mix, str(t[0], at), at);
    int f = lookup(mix, str(t[1], at), at);
    int gf = lookup(mix, str(t[2], at), at);
    if (c.comp[g][f] >= 0 && c.comp[g][f] != gf) throw ParseError(at + ": conflicting entry");
    c.comp[g][f] = gf;
  }
  return bless(std::move(c));
}

json category_json(const Cat& c) {
  json j;
  j["name"] = c->name;
  j["objects"] = c->objects;
  json mors = json::array();
  for (const auto& m : c->morphisms)
    mors.push_back({{"id", m.id}, {"src", c->objects[m.src]}, {"trg", c->objects[m.trg]}});
  j["morphisms"] = std::move(mors);
  json ids = json::object();
  for (int o = 0; o < c->n_obj(); ++o) ids[c->objects[o]] = c->morphisms[c->id_of(o)].id;
  j["identities"] = std::move(ids);
  json comp = json::array();
  for (int g = 0; g < c->n_mor(); ++g)
    for (int f = 0; f < c->n_mor(); ++f)
      if (c->composable(g, f))
        comp.push_back({c->morphisms[g].id, c->morphisms[f].id, c->morphisms[c->compose(g, f)].id});
  j["composition"] = std::move(comp);
  return j;
}

// hosted sections must agree with the structure already in memory
void match_category(const json& j, const Cat& host, const std::string& where) {
  Cat fresh = category_from(j, where);
  if (category_json(fresh).dump() != category_json(host).dump())
    throw ShapeMismatch(where + " does not match the hosting category " + host->name);
}

SetFunctor setfunctor_from(const json& j, Cat host, const std::string& where) {
  SetFunctor w;
  w.base = host;
  w.ob.resize(host->n_obj());
  const json& elems = field(j, "elements", where);
  for (int o = 0; o < host->n_obj(); ++o) {
    auto it = elems.find(host->objects[o]);
    if (it == elems.end()) continue;
    for (const auto& e : *it) w.ob[o].elems.push_back(str(e, where + ".elements"));
  }
  w.mo.resize(host->n_mor());
  const json& maps = field(j, "maps", where);
  for (int m = 0; m < host->n_mor(); ++m) {
    const FinSet& dom = w.ob[host->src(m)];
    const FinSet& cod = w.ob[host->trg(m)];
    std::vector<int> tab(dom.size(), -1);
    auto it = maps.find(host->morphisms[m].id);
    if (it != maps.end()) {
      std::string at = where + ".maps." + host->morphisms[m].id;
      for (const auto& [x, y] : it->items()) {
        int xi = dom.find(x);
        if (xi < 0) throw ParseError(at + ": unknown element `" + x + "`");
        int yi = cod.find(str(y, at));
        if (yi < 0) throw ParseError(at + ": unknown image `" + y.get<std::string>() + "`");
        tab[xi] = yi;
      }
    }
    for (int x = 0; x < dom.size(); ++x)
      if (tab[x] < 0)
        throw ParseError(where + ".maps." + host->morphisms[m].id + ": no image for `" +
                         dom.elems[x] + "`");
    w.mo[m] = std::move(tab);
  }
  return bless_setfunctor(std::move(w));
}

json setfunctor_json(const SetFunctor& w) {
  json j;
  j["base"] = category_json(w.base);
  json elems = json::object();
  for (int o = 0; o < w.base->n_obj(); ++o) elems[w.base->objects[o]] = w.ob[o].elems;
  j["elements"] = std::move(elems);
  json maps = json::object();
  for (int m = 0; m < w.base->n_mor(); ++m) {
    json tab = json::object();
    const FinSet& dom = w.ob[w.base->src(m)];
    const FinSet& cod = w.ob[w.base->trg(m)];
    for (int x = 0; x < dom.size(); ++x) tab[dom.elems[x]] = cod.elems[w.mo[m][x]];
    maps[w.base->morphisms[m].id] = std::move(tab);
  }
  j["maps"] = std::move(maps);
  return j;
}

Profunctor profunctor_from(const json& j, Cat src, Cat trg, const std::string& where) {
  OpProd base = op_prod(src, trg);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  const json& elems = field(j, "elements", where);
  for (int a = 0; a < src->n_obj(); ++a) {
    auto row = elems.find(src->objects[a]);
    if (row == elems.end()) continue;
    for (int b = 0; b < trg->n_obj(); ++b) {
      auto cell = row->find(trg->objects[b]);
      if (cell == row->end()) continue;
      for (const auto& e : *cell)
        t.ob[base.ob(a, b)].elems.push_back(str(e, where + ".elements"));
    }
  }
  t.mo.resize(base.prod.cat->n_mor());
  const json& acts = field(j, "actions", where);
  for (int f = 0; f < src->n_mor(); ++f)
    for (int g = 0; g < trg->n_mor(); ++g) {
      const FinSet& dom = t.ob[base.ob(src->trg(f), trg->src(g))];
      const FinSet& cod = t.ob[base.ob(src->src(f), trg->trg(g))];
      std::string at =
          where + ".actions." + src->morphisms[f].id + "." + trg->morphisms[g].id;
      std::vector<int> tab(dom.size(), -1);
      auto row = acts.find(src->morphisms[f].id);
      if (row != acts.end()) {
        auto cell = row->find(trg->morphisms[g].id);
        if (cell != row->end())
          for (const auto& [x, y] : cell->items()) {
            int xi = dom.find(x);
            if (xi < 0) throw ParseError(at + ": unknown element `" + x + "`");
            int yi = cod.find(str(y, at));
            if (yi < 0) throw ParseError(at + ": unknown image `" + y.get<std::string>() + "`");
            tab[xi] = yi;
          }
      }
      for (int x = 0; x < dom.size(); ++x)
        if (tab[x] < 0) throw ParseError(at + ": no image for `" + dom.elems[x] + "`");
      t.mo[base.mo(f, g)] = std::move(tab);
    }
  return make_profunctor(std::move(base), std::move(t));
}

json profunctor_json(const Profunctor& p) {
  Cat src = p.src(), trg = p.trg();
  json j;
  if (src.get() == trg.get()) {
    j["base"] = category_json(src);
  } else {
    j["source"] = category_json(src);
    j["target"] = category_json(trg);
  }
  json elems = json::object();
  for (int a = 0; a < src->n_obj(); ++a) {
    json row = json::object();
    for (int b = 0; b < trg->n_obj(); ++b) row[trg->objects[b]] = p.at(a, b).elems;
    elems[src->objects[a]] = std::move(row);
  }
  j["elements"] = std::move(elems);
  json acts = json::object();
  for (int f = 0; f < src->n_mor(); ++f) {
    json row = json::object();
    for (int g = 0; g < trg->n_mor(); ++g) {
      const FinSet& dom = p.at(src->trg(f), trg->src(g));
      const FinSet& cod = p.at(src->src(f), trg->trg(g));
      json tab = json::object();
      for (int x = 0; x < dom.size(); ++x) tab[dom.elems[x]] = cod.elems[p.act(f, g, x)];
      row[trg->morphisms[g].id] = std::move(tab);
    }
    acts[src->morphisms[f].id] = std::move(row);
  }
  j["actions"] = std::move(acts);
  return j;
}

// int tables keyed by nested object ids, innermost a plain array
std::vector<std::vector<int>> int_table(const json& j, const Cat& c, int depth,
                                        const std::string& where) {
  int n = c->n_obj();
  int total = 1;
  for (int d = 0; d < depth; ++d) total *= n;
  std::vector<std::vector<int>> out(total);
  std::vector<int> tuple;
  auto walk = [&](auto&& self, const json& node, int d) -> void {
    if (d == depth) {
      if (!node.is_array()) throw ParseError(where + ": expected an array of integers");
      int ix = 0;
      for (int v : tuple) ix = ix * n + v;
      out[ix] = node.get<std::vector<int>>();
      return;
    }
    for (const auto& [key, sub] : node.items()) {
      tuple.push_back(lookup(c->obj_ix, key, where));
      self(self, sub, d + 1);
      tuple.pop_back();
    }
  };
  walk(walk, j, 0);
  return out;
}

json int_table_json(const std::vector<std::vector<int>>& tab, const Cat& c, int depth) {
  int n = c->n_obj();
  auto emit = [&](auto&& self, int d, int ix) -> json {
    if (d == depth) return json(tab[ix]);
    json node = json::object();
    for (int v = 0; v < n; ++v) node[c->objects[v]] = self(self, d + 1, ix * n + v);
    return node;
  };
  return emit(emit, 0, 0);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DocKind sniff_kind(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw ParseError("top level: expected an object");
  if (j.contains("P")) return DocKind::Promonoidal;
  if (j.contains("tensor")) return DocKind::Monoidal;
  if (j.contains("actions")) return DocKind::Profunctor;
  if (j.contains("maps")) return DocKind::SetFunctor;
  if (j.contains("on_objects")) return DocKind::Functor;
  if (j.contains("objects")) return DocKind::Category;
  throw ParseError("top level: unrecognized document kind");
}

std::string kind_name(DocKind k) {
  switch (k) {
    case DocKind::Category: return "category";
    case DocKind::Functor: return "functor";
    case DocKind::SetFunctor: return "setfunctor";
    case DocKind::Profunctor: return "profunctor";
    case DocKind::Monoidal: return "monoidal";
    case DocKind::Promonoidal: return "promonoidal";
  }
  return "unknown";
}

Cat category_from_json(const std::string& text) { return category_from(parse(text), "category"); }

std::string category_to_json(const Cat& c) { return category_json(c).dump(2) + "\n"; }

FinFunctor functor_from_json(const std::string& text) {
  json j = parse(text);
  FinFunctor f;
  f.src = category_from(field(j, "source", "functor"), "functor.source");
  f.trg = category_from(field(j, "target", "functor"), "functor.target");
  f.on_obj.assign(f.src->n_obj(), -1);
  for (const auto& [c, d] : field(j, "on_objects", "functor").items())
    f.on_obj[lookup(f.src->obj_ix, c, "functor.on_objects")] =
        lookup(f.trg->obj_ix, str(d, "functor.on_objects"), "functor.on_objects");
  f.on_mor.assign(f.src->n_mor(), -1);
  for (const auto& [m, i] : field(j, "on_morphisms", "functor").items())
    f.on_mor[lookup(f.src->mor_ix, m, "functor.on_morphisms")] =
        lookup(f.trg->mor_ix, str(i, "functor.on_morphisms"), "functor.on_morphisms");
  for (int c = 0; c < f.src->n_obj(); ++c)
    if (f.on_obj[c] < 0)
      throw ParseError("functor.on_objects: no image for `" + f.src->objects[c] + "`");
  for (int m = 0; m < f.src->n_mor(); ++m)
    if (f.on_mor[m] < 0)
      throw ParseError("functor.on_morphisms: no image for `" + f.src->morphisms[m].id + "`");
  return bless_functor(std::move(f));
}

std::string functor_to_json(const FinFunctor& f) {
  json j;
  j["source"] = category_json(f.src);
  j["target"] = category_json(f.trg);
  json oo = json::object();
  for (int c = 0; c < f.src->n_obj(); ++c) oo[f.src->objects[c]] = f.trg->objects[f.ob(c)];
  j["on_objects"] = std::move(oo);
  json om = json::object();
  for (int m = 0; m < f.src->n_mor(); ++m)
    om[f.src->morphisms[m].id] = f.trg->morphisms[f.mo(m)].id;
  j["on_morphisms"] = std::move(om);
  return j.dump(2) + "\n";
}

SetFunctor setfunctor_from_json(const std::string& text) {
  json j = parse(text);
  Cat base = category_from(field(j, "base", "setfunctor"), "setfunctor.base");
  return setfunctor_from(j, base, "setfunctor");
}

SetFunctor setfunctor_from_json(const std::string& text, Cat host) {
  json j = parse(text);
  match_category(field(j, "base", "setfunctor"), host, "setfunctor.base");
  return setfunctor_from(j, host, "setfunctor");
}

std::string setfunctor_to_json(const SetFunctor& w) { return setfunctor_json(w).dump(2) + "\n"; }

Profunctor profunctor_from_json(const std::string& text) {
  json j = parse(text);
  if (j.contains("base")) {
    Cat c = category_from(field(j, "base", "profunctor"), "profunctor.base");
    return profunctor_from(j, c, c, "profunctor");
  }
  Cat src = category_from(field(j, "source", "profunctor"), "profunctor.source");
  Cat trg = category_from(field(j, "target", "profunctor"), "profunctor.target");
  return profunctor_from(j, src, trg, "profunctor");
}

Profunctor profunctor_from_json(const std::string& text, Cat src, Cat trg) {
  json j = parse(text);
  if (j.contains("base")) {
    if (src.get() != trg.get())
      throw ShapeMismatch("profunctor document has one base but two hosts were supplied");
    match_category(field(j, "base", "profunctor"), src, "profunctor.base");
  } else {
    match_category(field(j, "source", "profunctor"), src, "profunctor.source");
    match_category(field(j, "target", "profunctor"), trg, "profunctor.target");
  }
  return profunctor_from(j, src, trg, "profunctor");
}

std::string profunctor_to_json(const Profunctor& p) { return profunctor_json(p).dump(2) + "\n"; }

MonoidalStructure monoidal_from_json(const std::string& text) {
  json j = parse(text);
  Cat c = category_from(j, "monoidal");
  ProdCat square = product(c, c);
  FinFunctor tensor;
  tensor.src = square.cat;
  tensor.trg = c;
  tensor.on_obj.assign(square.cat->n_obj(), -1);
  tensor.on_mor.assign(square.cat->n_mor(), -1);
  const json& t = field(j, "tensor", "monoidal");
  for (const auto& [a, row] : field(t, "on_objects", "monoidal.tensor").items()) {
    int ai = lookup(c->obj_ix, a, "monoidal.tensor.on_objects");
    for (const auto& [b, v] : row.items())
      tensor.on_obj[square.ob(ai, lookup(c->obj_ix, b, "monoidal.tensor.on_objects"))] =
          lookup(c->obj_ix, str(v, "monoidal.tensor.on_objects"), "monoidal.tensor.on_objects");
  }
  for (const auto& [f, row] : field(t, "on_morphisms", "monoidal.tensor").items()) {
    int fi = lookup(c->mor_ix, f, "monoidal.tensor.on_morphisms");
    for (const auto& [g, v] : row.items())
      tensor.on_mor[square.mo(fi, lookup(c->mor_ix, g, "monoidal.tensor.on_morphisms"))] =
          lookup(c->mor_ix, str(v, "monoidal.tensor.on_morphisms"), "monoidal.tensor.on_morphisms");
  }
  for (int p = 0; p < square.cat->n_obj(); ++p)
    if (tensor.on_obj[p] < 0) throw ParseError("monoidal.tensor.on_objects: incomplete table");
  for (int p = 0; p < square.cat->n_mor(); ++p)
    if (tensor.on_mor[p] < 0) throw ParseError("monoidal.tensor.on_morphisms: incomplete table");
  int unit = lookup(c->obj_ix, str(field(j, "unit", "monoidal"), "monoidal.unit"), "monoidal.unit");

  int n = c->n_obj();
  auto tob = [&](int a, int b) { return tensor.on_obj[square.ob(a, b)]; };
  std::vector<int> assoc(n * n * n), lun(n), run(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        assoc[(a * n + b) * n + d] = c->id_of(tob(tob(a, b), d));
  for (int a = 0; a < n; ++a) {
    lun[a] = c->id_of(tob(unit, a));
    run[a] = c->id_of(tob(a, unit));
  }
  if (j.contains("associator"))
    for (const auto& [a, r1] : j["associator"].items())
      for (const auto& [b, r2] : r1.items())
        for (const auto& [d, v] : r2.items())
          assoc[(lookup(c->obj_ix, a, "monoidal.associator") * n +
                 lookup(c->obj_ix, b, "monoidal.associator")) *
                    n +
                lookup(c->obj_ix, d, "monoidal.associator")] =
              lookup(c->mor_ix, str(v, "monoidal.associator"), "monoidal.associator");
  if (j.contains("unitors")) {
    const json& u = j["unitors"];
    if (u.contains("left"))
      for (const auto& [a, v] : u["left"].items())
        lun[lookup(c->obj_ix, a, "monoidal.unitors.left")] =
            lookup(c->mor_ix, str(v, "monoidal.unitors.left"), "monoidal.unitors.left");
    if (u.contains("right"))
      for (const auto& [a, v] : u["right"].items())
        run[lookup(c->obj_ix, a, "monoidal.unitors.right")] =
            lookup(c->mor_ix, str(v, "monoidal.unitors.right"), "monoidal.unitors.right");
  }
  return make_monoidal(c, std::move(tensor), unit, std::move(assoc), std::move(lun),
                       std::move(run));
}

std::string monoidal_to_json(const MonoidalStructure& m) {
  Cat c = m.base;
  json j = category_json(c);
  json oo = json::object(), om = json::object();
  for (int a = 0; a < c->n_obj(); ++a) {
    json row = json::object();
    for (int b = 0; b < c->n_obj(); ++b) row[c->objects[b]] = c->objects[m.tob(a, b)];
    oo[c->objects[a]] = std::move(row);
  }
  for (int f = 0; f < c->n_mor(); ++f) {
    json row = json::object();
    for (int g = 0; g < c->n_mor(); ++g)
      row[c->morphisms[g].id] = c->morphisms[m.tmo(f, g)].id;
    om[c->morphisms[f].id] = std::move(row);
  }
  j["tensor"] = {{"on_objects", std::move(oo)}, {"on_morphisms", std::move(om)}};
  j["unit"] = c->objects[m.unit];
  int n = c->n_obj();
  json assoc = json::object(), lft = json::object(), rgt = json::object();
  for (int a = 0; a < n; ++a) {
    json r1 = json::object();
    for (int b = 0; b < n; ++b) {
      json r2 = json::object();
      for (int d = 0; d < n; ++d)
        r2[c->objects[d]] = c->morphisms[m.assoc[(a * n + b) * n + d]].id;
      r1[c->objects[b]] = std::move(r2);
    }
    assoc[c->objects[a]] = std::move(r1);
    lft[c->objects[a]] = c->morphisms[m.lun[a]].id;
    rgt[c->objects[a]] = c->morphisms[m.run[a]].id;
  }
  j["associator"] = std::move(assoc);
  j["unitors"] = {{"left", std::move(lft)}, {"right", std::move(rgt)}};
  return j.dump(2) + "\n";
}

PromonoidalStructure promonoidal_from_json(const std::string& text) {
  json j = parse(text);
  Cat c = category_from(j, "promonoidal");
  ProdCat square = product(c, c);

  const json& pj = field(j, "P", "promonoidal");
  OpProd base = op_prod(square.cat, c);
  SetFunctor t;
  t.base = base.prod.cat;
  t.ob.resize(base.prod.cat->n_obj());
  const json& elems = field(pj, "elements", "promonoidal.P");
  for (int a = 0; a < c->n_obj(); ++a) {
    auto r1 = elems.find(c->objects[a]);
    if (r1 == elems.end()) continue;
    for (int b = 0; b < c->n_obj(); ++b) {
      auto r2 = r1->find(c->objects[b]);
      if (r2 == r1->end()) continue;
      for (int x = 0; x < c->n_obj(); ++x) {
        auto cell = r2->find(c->objects[x]);
        if (cell == r2->end()) continue;
        for (const auto& e : *cell)
          t.ob[base.ob(square.ob(a, b), x)].elems.push_back(str(e, "promonoidal.P.elements"));
      }
    }
  }
  t.mo.resize(base.prod.cat->n_mor());
  const json& acts = field(pj, "actions", "promonoidal.P");
  for (int f = 0; f < c->n_mor(); ++f)
    for (int g = 0; g < c->n_mor(); ++g)
      for (int h = 0; h < c->n_mor(); ++h) {
        int pm = square.mo(f, g);
        const FinSet& dom = t.ob[base.ob(square.ob(c->trg(f), c->trg(g)), c->src(h))];
        const FinSet& cod = t.ob[base.ob(square.ob(c->src(f), c->src(g)), c->trg(h))];
        std::string at = "promonoidal.P.actions." + c->morphisms[f].id + "." +
                         c->morphisms[g].id + "." + c->morphisms[h].id;
        std::vector<int> tab(dom.size(), -1);
        auto r1 = acts.find(c->morphisms[f].id);
        if (r1 != acts.end()) {
          auto r2 = r1->find(c->morphisms[g].id);
          if (r2 != r1->end()) {
            auto cell = r2->find(c->morphisms[h].id);
            if (cell != r2->end())
              for (const auto& [x, y] : cell->items()) {
                int xi = dom.find(x);
                if (xi < 0) throw ParseError(at + ": unknown element `" + x + "`");
                int yi = cod.find(str(y, at));
                if (yi < 0) throw ParseError(at + ": unknown image");
                tab[xi] = yi;
              }
          }
        }
        for (int x = 0; x < dom.size(); ++x)
          if (tab[x] < 0) throw ParseError(at + ": no image for `" + dom.elems[x] + "`");
        t.mo[base.mo(pm, h)] = std::move(tab);
      }
  Profunctor p = make_profunctor(std::move(base), std::move(t));

  SetFunctor unit = setfunctor_from(field(j, "J", "promonoidal"), c, "promonoidal.J");
  auto alpha = int_table(field(j, "alpha", "promonoidal"), c, 4, "promonoidal.alpha");
  auto rho = int_table(field(j, "rho", "promonoidal"), c, 2, "promonoidal.rho");
  auto lambda = int_table(field(j, "lambda", "promonoidal"), c, 2, "promonoidal.lambda");
  return promonoidal_validate(square, std::move(p), std::move(unit), std::move(alpha),
                              std::move(rho), std::move(lambda));
}

std::string promonoidal_to_json(const PromonoidalStructure& ps) {
  Cat c = ps.base;
  json j = category_json(c);
  json elems = json::object(), acts = json::object();
  for (int a = 0; a < c->n_obj(); ++a) {
    json r1 = json::object();
    for (int b = 0; b < c->n_obj(); ++b) {
      json r2 = json::object();
      for (int x = 0; x < c->n_obj(); ++x)
        r2[c->objects[x]] = ps.p.at(ps.square.ob(a, b), x).elems;
      r1[c->objects[b]] = std::move(r2);
    }
    elems[c->objects[a]] = std::move(r1);
  }
  for (int f = 0; f < c->n_mor(); ++f) {
    json r1 = json::object();
    for (int g = 0; g < c->n_mor(); ++g) {
      json r2 = json::object();
      for (int h = 0; h < c->n_mor(); ++h) {
        const FinSet& dom = ps.p.at(ps.square.ob(c->trg(f), c->trg(g)), c->src(h));
        json tab = json::object();
        for (int x = 0; x < dom.size(); ++x) {
          int y = ps.p.act(ps.square.mo(f, g), h, x);
          tab[dom.elems[x]] =
              ps.p.at(ps.square.ob(c->src(f), c->src(g)), c->trg(h)).elems[y];
        }
        r2[c->morphisms[h].id] = std::move(tab);
      }
      r1[c->morphisms[g].id] = std::move(r2);
    }
    acts[c->morphisms[f].id] = std::move(r1);
  }
  j["P"] = {{"elements", std::move(elems)}, {"actions", std::move(acts)}};
  json unit = setfunctor_json(ps.j);
  unit.erase("base");
  j["J"] = std::move(unit);
  j["alpha"] = int_table_json(ps.alpha, c, 4);
  j["rho"] = int_table_json(ps.rho, c, 2);
  j["lambda"] = int_table_json(ps.lambda, c, 2);
  return j.dump(2) + "\n";
}

}  // namespace fce

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fce/coend.hpp"
#include "fce/convolution.hpp"
#include "fce/fincat.hpp"
#include "fce/json_io.hpp"
#include "fce/kanweighted.hpp"
#include "fce/profunctor.hpp"
#include "fce/setfun.hpp"
#include "fce/suites.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace fce;

namespace {

struct Options {
  std::string format = "text";
  unsigned seed = 17;
  long long cap = 0;  // 0 keeps the library defaults
  bool timings = false;
};

long long cap_or(const Options& opt, long long dflt) { return opt.cap > 0 ? opt.cap : dflt; }

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

json sizes_json(const SetFunctor& w) {
  json a = json::array();
  for (int o = 0; o < w.base->n_obj(); ++o)
    a.push_back({{"object", w.base->objects[o]}, {"size", (int)w.ob[o].size()}});
  return a;
}

std::string sizes_text(const SetFunctor& w) {
  std::ostringstream os;
  for (int o = 0; o < w.base->n_obj(); ++o)
    os << "  " << w.base->objects[o] << ": " << w.ob[o].size() << "\n";
  return os.str();
}

json witness_json(const Witness& w) {
  return {{"ok", w.ok},
          {"reason", w.reason},
          {"lhs", {{"size", w.lhs.size()}, {"elements", w.lhs.elems}}},
          {"rhs", {{"size", w.rhs.size()}, {"elements", w.rhs.elems}}},
          {"fwd", w.fwd},
          {"bwd", w.bwd}};
}

std::string witness_text(const std::string& label, const Witness& w) {
  std::ostringstream os;
  os << label << ": " << (w.ok ? "ok" : "FAIL") << "\n";
  os << "  lhs: " << w.lhs.size() << " element(s), rhs: " << w.rhs.size() << " element(s)\n";
  if (!w.ok) os << "  reason: " << w.reason << "\n";
  return os.str();
}

// A two-object base with a single crossing arrow admits a direct fiber
// computation the end can be compared against.
bool arrow_shaped(const Cat& c, int& s, int& t, int& u) {
  if (c->n_obj() != 2 || c->n_mor() != 3) return false;
  for (int m = 0; m < c->n_mor(); ++m)
    if (!c->is_identity(m)) {
      u = m;
      s = c->src(m);
      t = c->trg(m);
      return s != t;
    }
  return false;
}

int cmd_validate(const Options& opt, const std::string& path) {
  std::string text = read_file(path);
  DocKind k = sniff_kind(text);
  json out = {{"kind", kind_name(k)}, {"ok", true}};
  std::ostringstream os;
  switch (k) {
    case DocKind::Category: {
      Cat c = category_from_json(text);
      out["name"] = c->name;
      out["objects"] = c->n_obj();
      out["morphisms"] = c->n_mor();
      os << "category " << c->name << ": ok (" << c->n_obj() << " objects, " << c->n_mor()
         << " morphisms)\n";
      break;
    }
    case DocKind::Functor: {
      FinFunctor f = functor_from_json(text);
      out["source"] = f.src->name;
      out["target"] = f.trg->name;
      os << "functor " << f.src->name << " -> " << f.trg->name << ": ok\n";
      break;
    }
    case DocKind::SetFunctor: {
      SetFunctor w = setfunctor_from_json(text);
      int total = 0;
      for (const auto& s : w.ob) total += s.size();
      out["base"] = w.base->name;
      out["elements"] = total;
      os << "set-valued functor on " << w.base->name << ": ok (" << total << " elements)\n";
      break;
    }
    case DocKind::Profunctor: {
      Profunctor p = profunctor_from_json(text);
      int total = 0;
      for (int a = 0; a < p.src()->n_obj(); ++a)
        for (int b = 0; b < p.trg()->n_obj(); ++b) total += p.at(a, b).size();
      out["source"] = p.src()->name;
      out["target"] = p.trg()->name;
      out["elements"] = total;
      os << "relator " << p.src()->name << " -> " << p.trg()->name << ": ok (" << total
         << " elements)\n";
      break;
    }
    case DocKind::Monoidal: {
      MonoidalStructure m = monoidal_from_json(text);
      out["base"] = m.base->name;
      out["unit"] = m.base->objects[m.unit];
      out["symmetric"] = m.symmetric;
      os << "monoidal base " << m.base->name << ": ok (unit " << m.base->objects[m.unit]
         << (m.symmetric ? ", symmetric" : "") << ")\n";
      break;
    }
    case DocKind::Promonoidal: {
      PromonoidalStructure ps = promonoidal_from_json(text);
      out["base"] = ps.base->name;
      os << "promonoidal base " << ps.base->name << ": ok\n";
      break;
    }
  }
  emit(opt, out, os.str());
  return 0;
}

int cmd_end(const Options& opt, const std::string& path) {
  Profunctor p = profunctor_from_json(read_file(path));
  if (p.src() != p.trg())
    throw ShapeMismatch("an end needs both variables on one base; give the document a `base`");
  Cat c = p.src();
  EndResult r = end_of(p.data, cap_or(opt, 1000000));
  json elems = json::array();
  std::ostringstream os;
  os << "end carrier: " << r.carrier.size() << "\n";
  for (int el = 0; el < r.carrier.size(); ++el) {
    json comp = json::object();
    os << "  " << r.carrier.elems[el] << ":";
    for (int o = 0; o < c->n_obj(); ++o) {
      const std::string& name = p.at(o, o).elems[r.families[el][o]];
      comp[c->objects[o]] = name;
      os << " " << c->objects[o] << "=" << name;
    }
    os << "\n";
    elems.push_back({{"element", r.carrier.elems[el]}, {"components", comp}});
  }
  json out = {{"op", "end"}, {"carrier", r.carrier.size()}, {"elements", elems}};
  int s = 0, t = 0, u = 0;
  bool matched = true;
  if (arrow_shaped(c, s, t, u)) {
    std::set<std::pair<int, int>> fiber, ends;
    for (int x = 0; x < p.at(s, s).size(); ++x)
      for (int y = 0; y < p.at(t, t).size(); ++y)
        if (p.act(c->id_of(s), u, x) == p.act(u, c->id_of(t), y)) fiber.insert({x, y});
    for (int el = 0; el < r.carrier.size(); ++el)
      ends.insert({r.families[el][s], r.families[el][t]});
    matched = fiber == ends;
    out["cross_check"] = {{"kind", "fiber product over the single arrow"},
                          {"size", (int)fiber.size()},
                          {"match", matched}};
    os << "cross-check (fiber product over the single arrow): " << fiber.size() << " element(s), "
       << (matched ? "match" : "MISMATCH") << "\n";
  }
  emit(opt, out, os.str());
  return matched ? 0 : 1;
}

int cmd_coend(const Options& opt, const std::string& path) {
  Profunctor p = profunctor_from_json(read_file(path));
  if (p.src() != p.trg())
    throw ShapeMismatch("a coend needs both variables on one base; give the document a `base`");
  Cat c = p.src();
  CoendResult r = coend_of(p.data);
  std::vector<std::vector<std::string>> members(r.carrier.size());
  for (int o = 0; o < c->n_obj(); ++o)
    for (int x = 0; x < p.at(o, o).size(); ++x)
      members[r.inject[o][x]].push_back(c->objects[o] + "#" + p.at(o, o).elems[x]);
  json classes = json::array();
  std::ostringstream os;
  os << "coend carrier: " << r.carrier.size() << "\n";
  for (int k = 0; k < r.carrier.size(); ++k) {
    classes.push_back({{"element", r.carrier.elems[k]}, {"members", members[k]}});
    os << "  " << r.carrier.elems[k] << ": {";
    for (size_t i = 0; i < members[k].size(); ++i) os << (i ? ", " : "") << members[k][i];
    os << "}\n";
  }
  emit(opt, {{"op", "coend"}, {"carrier", r.carrier.size()}, {"classes", classes}}, os.str());
  return 0;
}

int cmd_lan(const Options& opt, const std::string& fpath, const std::string& wpath) {
  FinFunctor k = functor_from_json(read_file(fpath));
  SetFunctor f = setfunctor_from_json(read_file(wpath), k.src);
  LanResult r = lan(k, f);
  std::ostringstream os;
  os << "left extension along " << k.src->name << " -> " << k.trg->name << "\n" << sizes_text(r.value);
  json out = {{"op", "lan"},
              {"sizes", sizes_json(r.value)},
              {"value", json::parse(setfunctor_to_json(r.value))},
              {"unit", r.unit}};
  emit(opt, out, os.str());
  return 0;
}

int cmd_ran(const Options& opt, const std::string& fpath, const std::string& wpath) {
  FinFunctor k = functor_from_json(read_file(fpath));
  SetFunctor f = setfunctor_from_json(read_file(wpath), k.src);
  RanResult r = ran(k, f, cap_or(opt, 1000000));
  std::ostringstream os;
  os << "right extension along " << k.src->name << " -> " << k.trg->name << "\n"
     << sizes_text(r.value);
  json out = {{"op", "ran"},
              {"sizes", sizes_json(r.value)},
              {"value", json::parse(setfunctor_to_json(r.value))},
              {"counit", r.counit}};
  emit(opt, out, os.str());
  return 0;
}

int cmd_wlim(const Options& opt, const std::string& wpath, const std::string& dpath) {
  SetFunctor f = setfunctor_from_json(read_file(dpath));
  SetFunctor w = setfunctor_from_json(read_file(wpath), f.base);
  EndResult r = weighted_limit(f.base, w, f, cap_or(opt, 1000000));
  std::ostringstream os;
  os << "weighted limit carrier: " << r.carrier.size() << "\n";
  for (const auto& e : r.carrier.elems) os << "  " << e << "\n";
  emit(opt, {{"op", "wlim"}, {"carrier", r.carrier.size()}, {"elements", r.carrier.elems}},
       os.str());
  return 0;
}

int cmd_wcolim(const Options& opt, const std::string& wpath, const std::string& dpath) {
  SetFunctor f = setfunctor_from_json(read_file(dpath));
  Cat cop = opposite(f.base);
  SetFunctor w = setfunctor_from_json(read_file(wpath), cop);
  CoendResult r = weighted_colimit(f.base, w, f);
  std::ostringstream os;
  os << "weighted colimit carrier: " << r.carrier.size() << "\n";
  for (const auto& e : r.carrier.elems) os << "  " << e << "\n";
  emit(opt, {{"op", "wcolim"}, {"carrier", r.carrier.size()}, {"elements", r.carrier.elems}},
       os.str());
  return 0;
}

int cmd_compose_pro(const Options& opt, const std::string& ppath, const std::string& qpath) {
  Profunctor p = profunctor_from_json(read_file(ppath));
  std::string qtext = read_file(qpath);
  Profunctor q0 = profunctor_from_json(qtext);
  Profunctor q = profunctor_from_json(qtext, p.trg(), q0.trg());
  ProComposite r = pro_compose(p, q);
  Cat a = r.value.src(), b = r.value.trg();
  json sizes = json::array();
  std::ostringstream os;
  os << "composite relator " << a->name << " -> " << b->name << "\n";
  for (int i = 0; i < a->n_obj(); ++i)
    for (int j = 0; j < b->n_obj(); ++j) {
      sizes.push_back({{"source", a->objects[i]},
                       {"target", b->objects[j]},
                       {"size", r.value.at(i, j).size()}});
      os << "  (" << a->objects[i] << ", " << b->objects[j] << "): " << r.value.at(i, j).size()
         << "\n";
    }
  json out = {{"op", "compose-pro"},
              {"sizes", sizes},
              {"value", json::parse(profunctor_to_json(r.value))}};
  emit(opt, out, os.str());
  return 0;
}

int cmd_collage(const Options& opt, const std::string& path) {
  Profunctor p = profunctor_from_json(read_file(path));
  CollageResult r = collage(p);
  std::ostringstream os;
  os << "collage category " << r.cat->name << ": " << r.cat->n_obj() << " objects, "
     << r.cat->n_mor() << " morphisms\n";
  os << "crossing elements agree with the relator: " << (r.elements_iso.ok ? "ok" : "FAIL")
     << "\n";
  if (!r.elements_iso.ok) os << "  reason: " << r.elements_iso.reason << "\n";
  json out = {{"op", "collage"},
              {"category", json::parse(category_to_json(r.cat))},
              {"elements_agree", r.elements_iso.ok},
              {"reason", r.elements_iso.reason}};
  emit(opt, out, os.str());
  return r.elements_iso.ok ? 0 : 1;
}

int cmd_day(const Options& opt, const std::string& fpath, const std::string& gpath,
            const std::string& mpath) {
  MonoidalStructure m = monoidal_from_json(read_file(mpath));
  SetFunctor f = setfunctor_from_json(read_file(fpath), m.base);
  SetFunctor g = setfunctor_from_json(read_file(gpath), m.base);
  DayResult r = day_convolve(f, g, m);
  std::ostringstream os;
  os << "convolution on " << m.base->name << "\n" << sizes_text(r.value);
  json out = {{"op", "day"},
              {"sizes", sizes_json(r.value)},
              {"value", json::parse(setfunctor_to_json(r.value))}};
  emit(opt, out, os.str());
  return 0;
}

PromonoidalStructure load_structure(const std::string& text) {
  if (sniff_kind(text) == DocKind::Monoidal) return day_promonoidal(monoidal_from_json(text));
  return promonoidal_from_json(text);
}

int cmd_fourier(const Options& opt, const std::string& hom, const std::string& kpath,
                const std::string& spath, const std::string& tpath, const std::string& fpath) {
  Kernel k;
  Cat a;
  if (!hom.empty()) {
    PromonoidalStructure ps = load_structure(read_file(hom));
    a = ps.base;
    k = hom_kernel(ps);
  } else {
    PromonoidalStructure pa = load_structure(read_file(spath));
    PromonoidalStructure pc = load_structure(read_file(tpath));
    a = pa.base;
    Profunctor kp = profunctor_from_json(read_file(kpath), pa.base, pc.base);
    k = kernel_check(kp, pa, pc);
  }
  std::ostringstream os;
  if (!k.ok) {
    os << "kernel rejected: " << k.reason << "\n";
    emit(opt, {{"op", "fourier"}, {"kernel_ok", false}, {"reason", k.reason}}, os.str());
    return 1;
  }
  SetFunctor f = setfunctor_from_json(read_file(fpath), a);
  FourierResult r = fourier(k, f);
  os << "transform on " << r.value.base->name << "\n" << sizes_text(r.value);
  json out = {{"op", "fourier"},
              {"kernel_ok", true},
              {"sizes", sizes_json(r.value)},
              {"value", json::parse(setfunctor_to_json(r.value))}};
  emit(opt, out, os.str());
  return 0;
}

int cmd_isbell(const Options& opt, const std::string& xpath, const std::string& ypath) {
  SetFunctor y = setfunctor_from_json(read_file(ypath));
  Cat cop = opposite(y.base);
  SetFunctor x = setfunctor_from_json(read_file(xpath), cop);
  Witness w = isbell_adjunction(y.base, x, y, cap_or(opt, 2000000));
  emit(opt, {{"op", "isbell"}, {"witness", witness_json(w)}},
       witness_text("conjugation adjunction on " + y.base->name, w));
  return w.ok ? 0 : 1;
}

int cmd_nerve(const Options& opt, const std::string& cpath, const std::string& ppath,
              const std::string& xpath, const std::string& ypath) {
  Cat c = category_from_json(read_file(cpath));
  Cat aop = opposite(c);
  ProdCat base = product(c, aop);
  SetFunctor phi = setfunctor_from_json(read_file(ppath), base.cat);
  SetFunctor x = setfunctor_from_json(read_file(xpath), aop);
  SetFunctor y = setfunctor_from_json(read_file(ypath), aop);
  Witness w = nerve_realization_adjunction(base, aop, phi, x, y, cap_or(opt, 2000000));
  emit(opt, {{"op", "nerve"}, {"witness", witness_json(w)}},
       witness_text("nerve/realization adjunction over " + c->name, w));
  return w.ok ? 0 : 1;
}

int cmd_check(const Options& opt, const std::string& suite) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  SuiteOptions sopt;
  sopt.seed = opt.seed;
  sopt.cap = opt.cap;
  std::vector<CheckReport> reports = run_suite(suite, sopt);
  int failed = 0;
  json checks = json::array();
  std::ostringstream os;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.check << " [" << r.inputs << "]";
    json carriers = json::array();
    for (const auto& [name, n] : r.carriers) {
      carriers.push_back({{"name", name}, {"size", n}});
      os << " " << name << "=" << n;
    }
    if (!r.pass && !r.counterexample.empty()) os << " -- " << r.counterexample;
    if (opt.timings) os << " (" << r.wall_ms << " ms)";
    os << "\n";
    json jr = {{"check", r.check},
               {"inputs", r.inputs},
               {"pass", r.pass},
               {"carriers", carriers},
               {"counterexample", r.counterexample}};
    if (opt.timings) jr["wall_ms"] = r.wall_ms;
    checks.push_back(jr);
  }
  os << (reports.size() - failed) << "/" << reports.size() << " checks passed\n";
  json out = {{"suite", suite},
              {"seed", opt.seed},
              {"checks", checks},
              {"passed", (int)reports.size() - failed},
              {"failed", failed}};
  emit(opt, out, os.str());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite co/end calculus toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for generated checks")->capture_default_str();
  app.add_option("--cap", opt.cap, "size cap for enumerated carriers (0 keeps defaults)")
      ->envname("COEND_CAP");
  app.add_flag("--timings", opt.timings, "include wall times in reports");

  std::string a1, a2, a3, a4, homPath, kPath, srcPath, trgPath;

  auto* vValidate = app.add_subcommand("validate", "parse a document and report its shape");
  vValidate->add_option("file", a1, "input document")->required();
  auto* vEnd = app.add_subcommand("end", "end of a two-variable diagram over one base");
  vEnd->add_option("file", a1, "relator document with a single base")->required();
  auto* vCoend = app.add_subcommand("coend", "coend of a two-variable diagram over one base");
  vCoend->add_option("file", a1, "relator document with a single base")->required();
  auto* vLan = app.add_subcommand("lan", "left extension of a diagram along a functor");
  vLan->add_option("functor", a1, "functor document")->required();
  vLan->add_option("diagram", a2, "set-valued functor on the source")->required();
  auto* vRan = app.add_subcommand("ran", "right extension of a diagram along a functor");
  vRan->add_option("functor", a1, "functor document")->required();
  vRan->add_option("diagram", a2, "set-valued functor on the source")->required();
  auto* vWlim = app.add_subcommand("wlim", "limit of a diagram weighted by a covariant weight");
  vWlim->add_option("weight", a1, "weight on the diagram base")->required();
  vWlim->add_option("diagram", a2, "set-valued functor")->required();
  auto* vWcolim =
      app.add_subcommand("wcolim", "colimit of a diagram weighted by a contravariant weight");
  vWcolim->add_option("weight", a1, "weight on the opposite of the diagram base")->required();
  vWcolim->add_option("diagram", a2, "set-valued functor")->required();
  auto* vCompose = app.add_subcommand("compose-pro", "composite of two relators over the middle");
  vCompose->add_option("first", a1, "relator document")->required();
  vCompose->add_option("second", a2, "relator whose source matches the first target")->required();
  auto* vCollage = app.add_subcommand("collage", "glue the endpoints of a relator into a category");
  vCollage->add_option("file", a1, "relator document")->required();
  auto* vDay = app.add_subcommand("day", "convolve two set-valued functors over a monoidal base");
  vDay->add_option("left", a1, "set-valued functor")->required();
  vDay->add_option("right", a2, "set-valued functor")->required();
  vDay->add_option("structure", a3, "monoidal structure document")->required();
  auto* vFourier = app.add_subcommand("fourier", "transform a diagram along a kernel");
  vFourier->add_option("--hom", homPath, "structure whose double hom is the kernel");
  vFourier->add_option("--pro", kPath, "kernel relator document");
  vFourier->add_option("--src", srcPath, "structure on the kernel source");
  vFourier->add_option("--trg", trgPath, "structure on the kernel target");
  vFourier->add_option("diagram", a1, "set-valued functor on the kernel source")->required();
  auto* vIsbell = app.add_subcommand("isbell", "conjugation adjunction witness for a pair");
  vIsbell->add_option("presheaf", a1, "set-valued functor on the opposite of the base")->required();
  vIsbell->add_option("copresheaf", a2, "set-valued functor on the base")->required();
  auto* vNerve = app.add_subcommand("nerve", "nerve/realization adjunction along a two-sided diagram");
  vNerve->add_option("category", a1, "base category document")->required();
  vNerve->add_option("diagram", a2, "set-valued functor on base x opposite")->required();
  vNerve->add_option("presheaf", a3, "set-valued functor on the opposite")->required();
  vNerve->add_option("copresheaf", a4, "second set-valued functor on the opposite")->required();
  auto* vCheck = app.add_subcommand("check", "run a named suite of verified isomorphisms");
  std::string suiteArg;
  vCheck->add_option("suite", suiteArg, "one of: " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(vValidate)) return cmd_validate(opt, a1);
    if (app.got_subcommand(vEnd)) return cmd_end(opt, a1);
    if (app.got_subcommand(vCoend)) return cmd_coend(opt, a1);
    if (app.got_subcommand(vLan)) return cmd_lan(opt, a1, a2);
    if (app.got_subcommand(vRan)) return cmd_ran(opt, a1, a2);
    if (app.got_subcommand(vWlim)) return cmd_wlim(opt, a1, a2);
    if (app.got_subcommand(vWcolim)) return cmd_wcolim(opt, a1, a2);
    if (app.got_subcommand(vCompose)) return cmd_compose_pro(opt, a1, a2);
    if (app.got_subcommand(vCollage)) return cmd_collage(opt, a1);
    if (app.got_subcommand(vDay)) return cmd_day(opt, a1, a2, a3);
    if (app.got_subcommand(vFourier)) {
      if (homPath.empty() && (kPath.empty() || srcPath.empty() || trgPath.empty()))
        throw std::invalid_argument("fourier needs --hom or all of --pro/--src/--trg");
      return cmd_fourier(opt, homPath, kPath, srcPath, trgPath, a1);
    }
    if (app.got_subcommand(vIsbell)) return cmd_isbell(opt, a1, a2);
    if (app.got_subcommand(vNerve)) return cmd_nerve(opt, a1, a2, a3, a4);
    if (app.got_subcommand(vCheck)) return cmd_check(opt, suiteArg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

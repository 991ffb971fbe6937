#pragma once

#include "fce/convolution.hpp"

namespace fce {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& w) : std::runtime_error("ParseError: " + w) {}
};

// document kind, sniffed from the fields present at the top level
enum class DocKind { Category, Functor, SetFunctor, Profunctor, Monoidal, Promonoidal };
DocKind sniff_kind(const std::string& text);
std::string kind_name(DocKind k);

// categories: objects, morphisms (id/src/trg), identities, composition triples
Cat category_from_json(const std::string& text);
std::string category_to_json(const Cat& c);

// functors embed their source and target category documents
FinFunctor functor_from_json(const std::string& text);
std::string functor_to_json(const FinFunctor& f);

// set-valued functors: base category, per-object element lists, per-morphism
// mapping tables; the hosted variant requires the base section to match
SetFunctor setfunctor_from_json(const std::string& text);
SetFunctor setfunctor_from_json(const std::string& text, Cat host);
std::string setfunctor_to_json(const SetFunctor& w);

// relators: source/target categories (or one "base" for both slots), element
// lists per object pair, action tables per morphism pair
Profunctor profunctor_from_json(const std::string& text);
Profunctor profunctor_from_json(const std::string& text, Cat src, Cat trg);
std::string profunctor_to_json(const Profunctor& p);

// category document extended with tensor/unit and optional coherence tables
MonoidalStructure monoidal_from_json(const std::string& text);
std::string monoidal_to_json(const MonoidalStructure& m);

// category document extended with P, J, alpha, rho, lambda tables
PromonoidalStructure promonoidal_from_json(const std::string& text);
std::string promonoidal_to_json(const PromonoidalStructure& ps);

std::string read_file(const std::string& path);

}  // namespace fce

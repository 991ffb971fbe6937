#pragma once

#include <random>

#include "fce/convolution.hpp"

namespace fce {

// bundled corpus of small categories, stable names and order
struct NamedCat {
  std::string name;
  Cat cat;
};
std::vector<NamedCat> corpus_categories();

// bundled functors between corpus members
struct NamedFunctor {
  std::string name;
  FinFunctor f;
};
std::vector<NamedFunctor> corpus_functors();

Group group_z2();
Group group_s3();
// trivial pair, the regular action, and a fixed point glued to a swapped pair
std::vector<std::pair<std::string, GSet>> bundled_z2_gsets();

// weight {w0,w1} -> {v} against the function {1,2,3} -> {1,2}; the weighted
// limit is the kernel pair, five elements by the fiber-count oracle
struct KernelPairFixture {
  Cat base;
  SetFunctor w, f;
  int expected = 5;
};
KernelPairFixture kernel_pair_fixture();

// bifunctor on the walking arrow whose end is a one-element fiber product
Bifunctor pullback_end_fixture();

MonoidalStructure monoidal_z2();
MonoidalStructure monoidal_idem();

// seeded generators; every draw comes from the supplied engine only
Cat seeded_category(std::mt19937_64& rng);            // <= 3 objects, <= 9 morphisms
Cat seeded_two_object_category(std::mt19937_64& rng);
FinFunctor seeded_functor(Cat s, Cat t, std::mt19937_64& rng);
SetFunctor seeded_copresheaf(Cat c, std::mt19937_64& rng, int max_elems = 3);
// always functorial: a coproduct of up to `parts` representables
SetFunctor seeded_representable_sum(Cat c, std::mt19937_64& rng, int parts = 2);

}  // namespace fce

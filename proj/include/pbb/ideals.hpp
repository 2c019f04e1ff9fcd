#pragma once

// Generator lists of the relation ideals I_1 and I_2 for a finite biquandle,
// instantiated over all elements/pairs/triples with subscript expressions
// resolved through the operation tables. Generated over exact integers with
// the circle variable substituted at construction time.

#include <string>
#include <vector>

#include "pbb/biquandle.hpp"
#include "pbb/poly.hpp"

namespace pbb {

struct IdealSpec {
  int variant = 0;             // j in {1, 2}
  long long delta = 1;
  bool delta_symbolic = false;
  BracketVars vars;            // variable naming for the biquandle size
  Ring ring;                   // integer ring over vars.count() variables
  std::vector<Poly> gens;      // ordered: family, then subscripts row-major
  std::vector<int> family_counts;  // per arity-1/2/3 family
  uint64_t biquandle_hash = 0;

  std::string manifest() const;   // canonical description
  uint64_t key() const { return fnv1a(manifest()); }
};

// delta_symbolic keeps the circle variable in the generators; delta is then
// ignored.
IdealSpec build_ideal(const Biquandle& b, int variant, long long delta,
                      bool delta_symbolic = false);

// Number of generators before syntactic dedup: 4m + 7m^2 + 22m^3 for j=1,
// 2m + 5m^2 + 16m^3 for j=2.
long long expected_generator_count(int variant, int m);

}  // namespace pbb

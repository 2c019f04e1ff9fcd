#pragma once

// Buchberger with Gebauer-Moller pair elimination and sugar selection,
// over GF(p). Produces reduced monic bases, so results are canonical.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pbb/poly.hpp"

namespace pbb {

struct GroebnerBasis {
  Ring ring;                 // ring.p > 0
  std::vector<Poly> g;       // inter-reduced, monic, sorted by leading monomial
  std::string order = "degrevlex";
};

struct GbProgress {
  size_t pairs_left = 0;
  size_t basis_size = 0;
  int sugar = 0;
  size_t reductions = 0;
};
using ProgressFn = std::function<void(const GbProgress&)>;

GroebnerBasis buchberger(const Ring& ring, std::vector<Poly> gens,
                         const ProgressFn& progress = {});

// Fully reduced normal form; zero iff p is in the ideal over GF(p).
Poly normal_form(const Poly& p, const GroebnerBasis& G);

enum class Membership { NotInIdealOverZ, InconclusiveMemberModP };

// Reduce p mod prime against a basis of gens mod prime. A nonzero normal
// form certifies non-membership over Z; a zero one certifies nothing.
Membership certify_nonmembership(const Ring& ring_z, const Poly& p,
                                 const std::vector<Poly>& gens, uint64_t prime,
                                 Poly* nf_out = nullptr,
                                 const ProgressFn& progress = {});

}  // namespace pbb

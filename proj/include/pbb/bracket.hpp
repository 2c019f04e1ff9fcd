#pragma once

// The parity-biquandle bracket: state expansion over the three resolutions
// per crossing (oriented smoothing / disoriented smoothing / graphical
// vertex), assembly into a linear combination of irreducible framed graphs
// with integer polynomial coefficients, and minimality certification via
// ideal non-membership.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbb/biquandle.hpp"
#include "pbb/diagram.hpp"
#include "pbb/graphs.hpp"
#include "pbb/groebner.hpp"
#include "pbb/ideals.hpp"
#include "pbb/poly.hpp"

namespace pbb {

struct RawState {
  Monomial mono;           // product of the n crossing variables
  int delta_exponent = 0;  // circles removed at state level
  FramedGraph graph;
};

// Exactly 3^n entries, one per resolution vector (base-3 digits, crossing
// ids ascending; digit 0 = oriented, 1 = disoriented, 2 = vertex).
std::vector<RawState> expand_states(const OrientedDiagram& d,
                                    const Coloring& f, const Biquandle& b);

// The monomial of the all-vertex state.
Monomial all_vertex_monomial(const OrientedDiagram& d, const Coloring& f,
                             const Biquandle& b);

struct BracketTerm {
  Poly coeff;
  int vertices = 0;
};

struct BracketValue {
  BracketVars vars;
  Ring ring;  // integer coefficients; delta is a variable when symbolic
  int variant = 0;
  bool delta_symbolic = false;
  long long delta = 1;
  std::map<std::string, BracketTerm> terms;  // canonical code -> coefficient
};

// delta = nullopt keeps the circle variable symbolic.
BracketValue bracket(const OrientedDiagram& d, const Coloring& f,
                     const Biquandle& b, int variant,
                     std::optional<long long> delta);

// One entry per coloring, in enumerate_colorings order.
std::vector<BracketValue> bracket_multiset(const OrientedDiagram& d,
                                           const Biquandle& b, int variant,
                                           std::optional<long long> delta);

struct ReducedBracket {
  uint64_t prime = 0;
  std::map<std::string, std::pair<Poly, int>> terms;  // code -> (NF, vertices)
};

ReducedBracket reduce_bracket(const BracketValue& v, const GroebnerBasis& G);
std::string reduced_to_string(const BracketVars& vars, const ReducedBracket& r);

// Multiset equality modulo the ideal behind G.
bool multisets_equal_mod(const std::vector<BracketValue>& a,
                         const std::vector<BracketValue>& b,
                         const BracketVars& vars, const GroebnerBasis& G);

// Irreducible graphs of maximal vertex count whose coefficient has nonzero
// normal form.
std::vector<std::pair<std::string, int>> leading_terms(const BracketValue& v,
                                                       const GroebnerBasis& G);

enum class Verdict { Minimal, LowerBoundOnly, NoCertificate };

struct ColoringReport {
  Coloring coloring;
  std::string all_vertex_monomial;
  std::string all_vertex_nf;
  bool all_vertex_nonzero = false;
  std::vector<std::pair<std::string, int>> leading;  // code, vertices
};

struct MinimalityCertificate {
  std::string diagram;
  std::string biquandle_hash;
  int crossings = 0;
  int variant = 0;
  long long delta = 1;
  uint64_t prime = 0;
  std::string order = "degrevlex";
  Verdict verdict = Verdict::NoCertificate;
  int best_certified_vertices = -1;
  std::string witness_code;
  bool witness_irreducible_j1 = false;
  bool witness_irreducible_j2 = false;
  std::vector<ColoringReport> colorings;
};

MinimalityCertificate certify_minimality(const OrientedDiagram& d,
                                         const Biquandle& b, int variant,
                                         long long delta,
                                         const GroebnerBasis& G);

std::string certificate_json(const MinimalityCertificate& c);
std::string certificate_summary(const MinimalityCertificate& c);

const char* to_string(Verdict v);

}  // namespace pbb

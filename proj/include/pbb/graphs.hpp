#pragma once

// Abstract 4-valent graphs with a cross structure (framed 4-graphs), plus
// vertexless circles. Half-edges of vertex v are 4v..4v+3; the opposite
// pairs are (4v, 4v+1) and (4v+2, 4v+3), so opposite(h) = h ^ 1. Edges are
// a perfect matching `mate` on half-edges. Equality of graphs is isomorphism
// respecting the pairing, decided through canonical double-occurrence codes.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pbb/error.hpp"

namespace pbb {

class FramedGraph {
public:
  FramedGraph() = default;
  FramedGraph(int vertices, std::vector<int> mate, int free_circles = 0);

  int vertices() const { return nv_; }
  int free_circles() const { return circles_; }
  int mate(int h) const { return mate_[h]; }
  static int opposite(int h) { return h ^ 1; }
  static int vertex_of(int h) { return h / 4; }

  // Closed unicursal walks, one per component, as vertex sequences.
  std::vector<std::vector<int>> unicursal_components() const;

  bool operator==(const FramedGraph&) const = default;

private:
  int nv_ = 0;
  std::vector<int> mate_;
  int circles_ = 0;
};

struct CanonicalCode {
  std::string text;  // versioned, equal iff graphs are isomorphic
  int vertices = 0;
  int circles = 0;
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const FramedGraph& g);

// Rebuilds a representative graph from a code; canonical_code of the result
// equals the input.
FramedGraph reconstruct(const CanonicalCode& code);

struct ReductionSite {
  int kind = 1;            // 1 = loop move, 2 = bigon move
  int v1 = -1, v2 = -1;    // v2 unused for kind 1
  int h1 = -1, h2 = -1;    // defining half-edges (loop ends / one bigon edge)
  int h3 = -1, h4 = -1;    // second bigon edge (kind 2)
};

// Decreasing move sites: bigons for variant 1, bigons and loops for
// variant 2. Loops on opposite half-edges are not reducible; bigons need
// non-opposite half-edge pairs at both endpoints and distinct vertices.
std::vector<ReductionSite> find_reductions(const FramedGraph& g, int variant);

// Removes the site's vertices by splicing strands straight through them;
// returns the new graph and the number of vertexless circles created.
std::pair<FramedGraph, int> reduce_at(const FramedGraph& g,
                                      const ReductionSite& site);

struct NormalForm {
  CanonicalCode code;
  int delta_exponent = 0;
};

// Unique irreducible form: apply decreasing moves until none remains, then
// strip circles into the exponent. A vertexless state keeps one circle; a
// graph with vertices keeps none.
NormalForm normalize(const FramedGraph& g, int variant,
                     std::mt19937_64* rng = nullptr);

}  // namespace pbb

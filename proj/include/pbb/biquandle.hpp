#pragma once

// Finite biquandles: operation tables, axiom checking, colorings.
//
// Crossing convention (pinned repo-wide, validated by the golden tests):
// at a positive crossing the S-arguments are (x, y) = (under-in, over-out),
// with  over-in = over-out * under-in  and  under-out = under-in o over-out;
// at a negative crossing the roles of inputs and outputs swap, so
// (x, y) = (under-out, over-in),  under-in = under-out o over-in,
// over-out = over-in * under-out.  State variables are subscripted by (x, y).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbb/diagram.hpp"
#include "pbb/error.hpp"

namespace pbb {

struct AxiomWitness {
  std::string axiom;        // "R1".."R4.1".."R4.3"
  std::vector<int> tuple;   // witnessing elements
};

struct AxiomReport {
  bool r1 = false, r2 = false, r3 = false, r4 = false;
  std::vector<AxiomWitness> failures;
  bool pass() const { return r1 && r2 && r3 && r4; }
};

class Biquandle {
public:
  // Tables are row-major with 1-based entries; circ[(x-1)*m + (y-1)] = x o y.
  Biquandle(int m, std::vector<int> circ, std::vector<int> star);

  int size() const { return m_; }
  int circ(int x, int y) const { return circ_[(x - 1) * m_ + (y - 1)]; }
  int star(int x, int y) const { return star_[(x - 1) * m_ + (y - 1)]; }

  AxiomReport verify() const;
  bool valid() const { return valid_; }

  // (under_out, over_out) from (under_in, over_in); requires valid().
  std::pair<int, int> crossing_map(int sign, int under_in, int over_in) const;
  // (under_in, over_in) from (under_out, over_out).
  std::pair<int, int> crossing_map_rev(int sign, int under_out,
                                       int over_out) const;
  // Variable subscript pair at a crossing, from the incident semiarc colors.
  std::pair<int, int> subscript(int sign, int under_in, int over_in) const;
  // S^{-1}(a, b) for S(x, y) = (y * x, x o y).
  std::pair<int, int> s_inverse(int a, int b) const {
    int i = (a - 1) * m_ + (b - 1);
    return {sinv_x_[i], sinv_y_[i]};
  }

  uint64_t hash() const;
  std::string hash_hex() const { return hex64(hash()); }
  std::string to_json() const;

  static Biquandle from_json_text(const std::string& text);
  static Biquandle from_matrix_text(const std::string& text);
  static Biquandle load_file(const std::string& path);
  static Biquandle trivial(int m);

private:
  void require_valid() const;

  int m_;
  std::vector<uint8_t> circ_, star_;
  // alpha_inv[(u-1)*m + (o-1)]: the w with w * u = o.
  // beta_inv[(o-1)*m + (u-1)]: the w with w o o = u.
  std::vector<uint8_t> alpha_inv_, beta_inv_;
  std::vector<uint8_t> sinv_x_, sinv_y_;  // S^{-1}(a,b) componentwise
  bool valid_ = false;
};

using Coloring = std::vector<uint8_t>;  // semiarc id -> color in 1..m

bool coloring_valid(const OrientedDiagram& d, const Biquandle& b,
                    const Coloring& f);

// All colorings, sorted lexicographically by the assignment vector.
std::vector<Coloring> enumerate_colorings(const OrientedDiagram& d,
                                          const Biquandle& b);

}  // namespace pbb

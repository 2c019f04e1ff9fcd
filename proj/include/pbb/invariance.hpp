#pragma once

// Seeded fuzz harnesses: random virtual diagrams, random Reidemeister moves,
// and the bracket-multiset invariance suite that jointly validates the skein
// conventions, the ideal transcription and the graph reductions.

#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "pbb/bracket.hpp"

namespace pbb {

OrientedDiagram random_diagram(std::mt19937_64& rng, int max_crossings,
                               int max_components = 3);

std::optional<std::pair<OrientedDiagram, MoveSpec>> random_move(
    const OrientedDiagram& d, std::mt19937_64& rng, int max_crossings);

struct FuzzConfig {
  uint64_t seed = 1;
  int cases = 100;
  int max_crossings = 6;
};

struct FuzzResult {
  int cases_run = 0;
  int failures = 0;
  std::vector<std::string> messages;
  bool ok() const { return failures == 0 && cases_run > 0; }
};

struct InvarianceOracle {
  const Biquandle* biquandle;
  int variant;
  const GroebnerBasis* gb;
  long long delta;
};

// Bracket multisets before/after one random move, compared modulo the ideal.
FuzzResult invariance_fuzz(const std::vector<InvarianceOracle>& oracles,
                           const FuzzConfig& cfg, std::ostream* log = nullptr);

// Coloring counts before/after one random move.
FuzzResult coloring_count_fuzz(const std::vector<const Biquandle*>& bqs,
                               const FuzzConfig& cfg,
                               std::ostream* log = nullptr);

// State-sum evaluation at A=D=1, B=E=-1, C=F=0, circle=2, summed over all
// colorings, before/after one random move.
FuzzResult eval_sum_fuzz(const std::vector<const Biquandle*>& bqs,
                         const FuzzConfig& cfg, std::ostream* log = nullptr);

}  // namespace pbb

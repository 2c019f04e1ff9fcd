#include "pbb/invariance.hpp"

#include <algorithm>
#include <sstream>

namespace pbb {

OrientedDiagram random_diagram(std::mt19937_64& rng, int max_crossings,
                               int max_components) {
  int n = (int)(rng() % (max_crossings + 1));
  int nc = 1 + (int)(rng() % max_components);
  std::vector<Passage> tokens;
  for (int id = 1; id <= n; ++id) {
    int sign = (rng() & 1) ? 1 : -1;
    tokens.push_back({id, Role::Over, sign});
    tokens.push_back({id, Role::Under, sign});
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);
  // Random split points into nc (possibly empty) components.
  std::vector<int> cut(nc - 1);
  for (int& c : cut) c = (int)(rng() % (tokens.size() + 1));
  std::sort(cut.begin(), cut.end());
  std::vector<std::vector<Passage>> comps;
  size_t start = 0;
  for (int c : cut) {
    comps.push_back({tokens.begin() + start, tokens.begin() + c});
    start = c;
  }
  comps.push_back({tokens.begin() + start, tokens.end()});
  return OrientedDiagram(std::move(comps));
}

std::optional<std::pair<OrientedDiagram, MoveSpec>> random_move(
    const OrientedDiagram& d, std::mt19937_64& rng, int max_crossings) {
  std::vector<MoveSpec> moves;
  std::vector<PassagePos> positions;
  const auto& comps = d.components();
  for (int c = 0; c < (int)comps.size(); ++c) {
    int len = (int)comps[c].size();
    if (len == 0) positions.push_back({c, 0});
    for (int i = 0; i < len; ++i) positions.push_back({c, i});
  }
  int n = d.crossing_count();
  if (n + 1 <= max_crossings) {
    for (const auto& p : positions)
      for (int v = 0; v < 4; ++v) {
        MoveSpec m;
        m.kind = MoveKind::R1Insert;
        m.site1 = p;
        m.variant = v;
        moves.push_back(m);
      }
  }
  if (n + 2 <= max_crossings) {
    for (const auto& p : positions)
      for (const auto& q : positions)
        for (int v = 0; v < 4; ++v) {
          MoveSpec m;
          m.kind = MoveKind::R2Insert;
          m.site1 = p;
          m.site2 = q;
          m.variant = v;
          moves.push_back(m);
        }
  }
  for (auto& m : find_r1_deletes(d)) moves.push_back(m);
  for (auto& m : find_r2_deletes(d)) moves.push_back(m);
  for (auto& m : find_r3_moves(d)) moves.push_back(m);
  if (moves.empty()) return std::nullopt;
  MoveSpec pick = moves[rng() % moves.size()];
  return std::make_pair(apply_move(d, pick), pick);
}

namespace {

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1-insert";
    case MoveKind::R1Delete: return "R1-delete";
    case MoveKind::R2Insert: return "R2-insert";
    case MoveKind::R2Delete: return "R2-delete";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

}  // namespace

FuzzResult invariance_fuzz(const std::vector<InvarianceOracle>& oracles,
                           const FuzzConfig& cfg, std::ostream* log) {
  FuzzResult res;
  std::mt19937_64 rng(cfg.seed);
  while (res.cases_run < cfg.cases) {
    OrientedDiagram d = random_diagram(rng, cfg.max_crossings);
    auto moved = random_move(d, rng, cfg.max_crossings + 2);
    if (!moved) continue;
    const InvarianceOracle& o = oracles[rng() % oracles.size()];
    BracketVars vars{o.biquandle->size()};
    auto before = bracket_multiset(d, *o.biquandle, o.variant, o.delta);
    auto after =
        bracket_multiset(moved->first, *o.biquandle, o.variant, o.delta);
    bool same = multisets_equal_mod(before, after, vars, *o.gb);
    ++res.cases_run;
    if (!same) {
      ++res.failures;
      std::ostringstream os;
      os << "multiset changed: " << d.to_string() << " --"
         << kind_name(moved->second.kind) << "--> "
         << moved->first.to_string() << " (variant " << o.variant << ")";
      res.messages.push_back(os.str());
    }
    if (log)
      (*log) << "case " << res.cases_run << ": " << kind_name(moved->second.kind)
             << " n=" << d.crossing_count() << " variant=" << o.variant
             << (same ? " ok" : " FAIL") << "\n";
  }
  return res;
}

FuzzResult coloring_count_fuzz(const std::vector<const Biquandle*>& bqs,
                               const FuzzConfig& cfg, std::ostream* log) {
  FuzzResult res;
  std::mt19937_64 rng(cfg.seed);
  while (res.cases_run < cfg.cases) {
    OrientedDiagram d = random_diagram(rng, cfg.max_crossings);
    auto moved = random_move(d, rng, cfg.max_crossings + 2);
    if (!moved) continue;
    const Biquandle* b = bqs[rng() % bqs.size()];
    size_t c1 = enumerate_colorings(d, *b).size();
    size_t c2 = enumerate_colorings(moved->first, *b).size();
    ++res.cases_run;
    if (c1 != c2) {
      ++res.failures;
      std::ostringstream os;
      os << "coloring count changed " << c1 << " -> " << c2 << ": "
         << d.to_string() << " --" << kind_name(moved->second.kind) << "--> "
         << moved->first.to_string();
      res.messages.push_back(os.str());
    }
    if (log)
      (*log) << "case " << res.cases_run << ": counts " << c1 << "/" << c2
             << (c1 == c2 ? " ok" : " FAIL") << "\n";
  }
  return res;
}

FuzzResult eval_sum_fuzz(const std::vector<const Biquandle*>& bqs,
                         const FuzzConfig& cfg, std::ostream* log) {
  FuzzResult res;
  std::mt19937_64 rng(cfg.seed);
  auto total = [](const OrientedDiagram& d, const Biquandle& b) {
    BracketVars vars{b.size()};
    std::vector<long long> vals(vars.count(), 0);
    long long letter_val[6] = {1, -1, 0, 1, -1, 0};
    for (int L = 0; L < 6; ++L)
      for (int x = 1; x <= b.size(); ++x)
        for (int y = 1; y <= b.size(); ++y)
          vals[vars.id(L, x, y)] = letter_val[L];
    vals[vars.delta_id()] = 2;
    Ring ring = vars.ring();
    long long sum = 0;
    for (const Coloring& f : enumerate_colorings(d, b)) {
      for (const RawState& st : expand_states(d, f, b)) {
        long long v = eval_all(ring, Poly::from_terms(ring, {{st.mono, 1}}), vals);
        if (v == 0) continue;
        for (int i = 0; i < st.delta_exponent; ++i) v *= 2;
        sum += v;
      }
    }
    return sum;
  };
  while (res.cases_run < cfg.cases) {
    OrientedDiagram d = random_diagram(rng, cfg.max_crossings);
    auto moved = random_move(d, rng, cfg.max_crossings + 2);
    if (!moved) continue;
    const Biquandle* b = bqs[rng() % bqs.size()];
    long long s1 = total(d, *b), s2 = total(moved->first, *b);
    ++res.cases_run;
    if (s1 != s2) {
      ++res.failures;
      std::ostringstream os;
      os << "evaluation sum changed " << s1 << " -> " << s2 << ": "
         << d.to_string() << " --" << kind_name(moved->second.kind) << "--> "
         << moved->first.to_string();
      res.messages.push_back(os.str());
    }
    if (log)
      (*log) << "case " << res.cases_run << ": sums " << s1 << "/" << s2
             << (s1 == s2 ? " ok" : " FAIL") << "\n";
  }
  return res;
}

}  // namespace pbb

#include "pbb/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace pbb {

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

OrientedDiagram::OrientedDiagram(std::vector<std::vector<Passage>> comps)
    : comps_(std::move(comps)) {
  validate_and_index();
}

void OrientedDiagram::validate_and_index() {
  struct Seen {
    int count = 0;
    int sign = 0;
    bool over = false, under = false;
    PassagePos over_pos, under_pos;
  };
  std::map<int, Seen> seen;
  for (int c = 0; c < (int)comps_.size(); ++c) {
    for (int i = 0; i < (int)comps_[c].size(); ++i) {
      const Passage& p = comps_[c][i];
      if (p.crossing <= 0)
        throw Error(ErrorKind::SyntaxError, "crossing ids must be positive");
      if (p.sign != 1 && p.sign != -1)
        throw Error(ErrorKind::SyntaxError, "crossing sign must be +1 or -1");
      Seen& s = seen[p.crossing];
      s.count++;
      if (s.count == 1) s.sign = p.sign;
      if (s.sign != p.sign)
        throw Error(ErrorKind::SignMismatch,
                    "crossing " + std::to_string(p.crossing) +
                        " occurs with both signs");
      if (p.role == Role::Over) {
        if (s.over)
          throw Error(ErrorKind::UnpairedCrossing,
                      "crossing " + std::to_string(p.crossing) +
                          " passed over twice");
        s.over = true;
        s.over_pos = {c, i};
      } else {
        if (s.under)
          throw Error(ErrorKind::UnpairedCrossing,
                      "crossing " + std::to_string(p.crossing) +
                          " passed under twice");
        s.under = true;
        s.under_pos = {c, i};
      }
    }
  }
  for (auto& [id, s] : seen) {
    if (!(s.over && s.under))
      throw Error(ErrorKind::UnpairedCrossing,
                  "crossing " + std::to_string(id) +
                      " must occur once over and once under");
  }
  n_ = static_cast<int>(seen.size());

  comp_arc_offset_.assign(comps_.size() + 1, 0);
  int off = 0;
  for (size_t c = 0; c < comps_.size(); ++c) {
    comp_arc_offset_[c] = off;
    off += comps_[c].empty() ? 1 : static_cast<int>(comps_[c].size());
  }
  comp_arc_offset_[comps_.size()] = off;
  total_semiarcs_ = off;

  ids_.clear();
  ends_.clear();
  for (auto& [id, s] : seen) {
    CrossingEnds e;
    e.sign = s.sign;
    e.over_pos = s.over_pos;
    e.under_pos = s.under_pos;
    e.over_in = semiarc_before(s.over_pos.comp, s.over_pos.idx);
    e.over_out = semiarc_after(s.over_pos.comp, s.over_pos.idx);
    e.under_in = semiarc_before(s.under_pos.comp, s.under_pos.idx);
    e.under_out = semiarc_after(s.under_pos.comp, s.under_pos.idx);
    ids_.push_back(id);
    ends_.push_back(e);
  }
}

int OrientedDiagram::semiarc_after(int comp, int idx) const {
  return comp_arc_offset_[comp] + idx;
}

int OrientedDiagram::semiarc_before(int comp, int idx) const {
  int len = static_cast<int>(comps_[comp].size());
  return comp_arc_offset_[comp] + (idx + len - 1) % len;
}

std::vector<SemiarcDesc> OrientedDiagram::semiarcs() const {
  std::vector<SemiarcDesc> out(total_semiarcs_);
  for (int c = 0; c < (int)comps_.size(); ++c) {
    if (comps_[c].empty()) {
      SemiarcDesc d;
      d.id = comp_arc_offset_[c];
      d.closed = true;
      d.comp = c;
      out[d.id] = d;
      continue;
    }
    int len = static_cast<int>(comps_[c].size());
    for (int i = 0; i < len; ++i) {
      SemiarcDesc d;
      d.id = semiarc_after(c, i);
      d.comp = c;
      d.tail_crossing = comps_[c][i].crossing;
      d.tail_role = comps_[c][i].role;
      d.head_crossing = comps_[c][(i + 1) % len].crossing;
      d.head_role = comps_[c][(i + 1) % len].role;
      out[d.id] = d;
    }
  }
  return out;
}

std::vector<int> OrientedDiagram::crossing_ids() const { return ids_; }

const CrossingEnds& OrientedDiagram::crossing(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw Error(ErrorKind::SiteNotFound,
                "no crossing " + std::to_string(id));
  return ends_[it - ids_.begin()];
}

// ---- parsing ---------------------------------------------------------------

namespace {

std::vector<Passage> parse_component(const std::string& text) {
  std::vector<Passage> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '(') {
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != ')')
      throw Error(ErrorKind::SyntaxError, "expected ')' in crossing-free circle");
    ++i;
    skip_ws();
    if (i != text.size())
      throw Error(ErrorKind::SyntaxError, "unexpected text after '()'");
    return out;
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    char r = (char)std::toupper((unsigned char)text[i]);
    if (r != 'O' && r != 'U')
      throw Error(ErrorKind::SyntaxError,
                  std::string("expected O or U, got '") + text[i] + "'");
    ++i;
    skip_ws();
    if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
      throw Error(ErrorKind::SyntaxError, "expected crossing id");
    int id = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      id = id * 10 + (text[i] - '0');
      ++i;
    }
    skip_ws();
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw Error(ErrorKind::SyntaxError, "expected sign + or -");
    int sign = text[i] == '+' ? 1 : -1;
    ++i;
    out.push_back({id, r == 'O' ? Role::Over : Role::Under, sign});
    skip_ws();
  }
  return out;
}

}  // namespace

OrientedDiagram parse_gauss(const std::string& text) {
  std::vector<std::vector<Passage>> comps;
  std::string cur;
  std::vector<std::string> parts;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  for (const auto& part : parts) {
    bool blank = std::all_of(part.begin(), part.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank && parts.size() > 1)
      throw Error(ErrorKind::SyntaxError, "empty component");
    if (blank) continue;  // empty diagram ""
    comps.push_back(parse_component(part));
  }
  return OrientedDiagram(std::move(comps));
}

std::string OrientedDiagram::to_string() const {
  std::ostringstream os;
  for (size_t c = 0; c < comps_.size(); ++c) {
    if (c) os << ",";
    if (comps_[c].empty()) {
      os << "()";
      continue;
    }
    for (const Passage& p : comps_[c]) {
      os << (p.role == Role::Over ? 'O' : 'U') << p.crossing
         << (p.sign > 0 ? '+' : '-');
    }
  }
  return os.str();
}

namespace {

// Token for canonicalization: (role, relabeled id, sign).
struct CanonTok {
  int role, id, sign;
  auto operator<=>(const CanonTok&) const = default;
};

}  // namespace

std::string OrientedDiagram::canonical_string() const {
  // Minimize, over component orders and rotations, the token sequence with
  // crossing ids renumbered by first occurrence.
  int nc = static_cast<int>(comps_.size());
  std::vector<std::vector<CanonTok>> best;  // per-component chosen words
  std::vector<std::vector<std::vector<Passage>>> rots(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& w = comps_[c];
    if (w.empty()) {
      rots[c].push_back(w);
      continue;
    }
    for (size_t s = 0; s < w.size(); ++s) {
      std::vector<Passage> r(w.begin() + s, w.end());
      r.insert(r.end(), w.begin(), w.begin() + s);
      rots[c].push_back(std::move(r));
    }
  }

  struct State {
    std::vector<int> used;
    std::vector<std::vector<Passage>> words;
  };
  std::vector<State> frontier{State{}};
  for (int step = 0; step < nc; ++step) {
    std::vector<std::vector<CanonTok>> cand_tok;
    std::vector<State> cand_state;
    for (const State& st : frontier) {
      for (int c = 0; c < nc; ++c) {
        if (std::find(st.used.begin(), st.used.end(), c) != st.used.end())
          continue;
        for (const auto& rot : rots[c]) {
          State ns = st;
          ns.used.push_back(c);
          ns.words.push_back(rot);
          // Relabel full prefix by first occurrence.
          std::map<int, int> relabel;
          std::vector<CanonTok> toks;
          for (const auto& w : ns.words) {
            for (const Passage& p : w) {
              auto [it, fresh] =
                  relabel.try_emplace(p.crossing, (int)relabel.size() + 1);
              toks.push_back({p.role == Role::Over ? 0 : 1, it->second, p.sign});
            }
            toks.push_back({2, 0, 0});  // component separator
          }
          cand_tok.push_back(std::move(toks));
          cand_state.push_back(std::move(ns));
        }
      }
    }
    auto mn = std::min_element(cand_tok.begin(), cand_tok.end());
    std::vector<State> next;
    for (size_t k = 0; k < cand_tok.size(); ++k)
      if (cand_tok[k] == *mn) next.push_back(cand_state[k]);
    // Identical token prefixes continue identically.
    frontier.assign(1, next.front());
  }
  std::vector<std::vector<Passage>> words = frontier.front().words;
  std::map<int, int> relabel;
  std::ostringstream os;
  for (size_t c = 0; c < words.size(); ++c) {
    if (c) os << ",";
    if (words[c].empty()) {
      os << "()";
      continue;
    }
    for (const Passage& p : words[c]) {
      auto [it, fresh] = relabel.try_emplace(p.crossing, (int)relabel.size() + 1);
      os << (p.role == Role::Over ? 'O' : 'U') << it->second
         << (p.sign > 0 ? '+' : '-');
    }
  }
  return os.str();
}

bool OrientedDiagram::equal_up_to_rotation(const OrientedDiagram& o) const {
  return canonical_string() == o.canonical_string();
}

// ---- PD codes --------------------------------------------------------------

// X[a,b,c,d]: edge labels counterclockwise starting at the incoming under
// strand. Under strand runs a -> c. The over pair is {b, d}; directions are
// inferred so that every edge label has exactly one head and one tail.
OrientedDiagram parse_pd(const std::string& text) {
  struct Xc {
    int a, b, c, d;
  };
  std::vector<Xc> xs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace((unsigned char)text[i]) || text[i] == ',' ||
            text[i] == ';'))
      ++i;
  };
  skip();
  // Optional PD[...] wrapper.
  if (text.compare(i, 3, "PD[") == 0) i += 3;
  while (i < text.size()) {
    skip();
    if (i >= text.size() || text[i] == ']') break;
    if (text[i] != 'X')
      throw Error(ErrorKind::SyntaxError, "expected X[...] in PD code");
    ++i;
    if (i >= text.size() || text[i] != '[')
      throw Error(ErrorKind::SyntaxError, "expected '[' after X");
    ++i;
    int vals[4];
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
        throw Error(ErrorKind::SyntaxError, "expected edge label in PD code");
      int v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        v = v * 10 + (text[i++] - '0');
      vals[k] = v;
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw Error(ErrorKind::SyntaxError, "expected ',' in X[...]");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ']')
      throw Error(ErrorKind::SyntaxError, "expected ']' closing X[...]");
    ++i;
    xs.push_back({vals[0], vals[1], vals[2], vals[3]});
    skip();
  }
  if (xs.empty()) return OrientedDiagram(std::vector<std::vector<Passage>>{});

  int ncross = static_cast<int>(xs.size());
  // Slot bookkeeping: each edge label must appear once as a tail (leaving a
  // crossing) and once as a head (entering one).
  std::map<int, int> heads, tails;
  auto add_head = [&](int e) {
    if (++heads[e] > 1)
      throw Error(ErrorKind::SyntaxError,
                  "edge " + std::to_string(e) + " enters two crossings");
  };
  auto add_tail = [&](int e) {
    if (++tails[e] > 1)
      throw Error(ErrorKind::SyntaxError,
                  "edge " + std::to_string(e) + " leaves two crossings");
  };
  for (const Xc& x : xs) {
    add_head(x.a);
    add_tail(x.c);
  }
  // Decide over-strand direction per crossing: b->d or d->b. Backtracking
  // over the two choices, constrained by head/tail uniqueness.
  std::vector<int> dir(ncross, -2);  // 0: b->d, 1: d->b
  std::function<bool(int)> solve = [&](int k) -> bool {
    if (k == ncross) return true;
    const Xc& x = xs[k];
    for (int choice = 0; choice < 2; ++choice) {
      // choice 0: over strand runs b -> d, so b enters (head) and d leaves.
      int head = choice == 0 ? x.b : x.d;
      int tail = choice == 0 ? x.d : x.b;
      if (heads[head] == 0 && tails[tail] == 0) {
        heads[head]++;
        tails[tail]++;
        dir[k] = choice;
        if (solve(k + 1)) return true;
        heads[head]--;
        tails[tail]--;
        dir[k] = -2;
      }
    }
    return false;
  };
  if (!solve(0))
    throw Error(ErrorKind::SyntaxError, "PD code has no consistent orientation");
  for (auto& [e, cnt] : heads)
    if (cnt != 1 || tails[e] != 1)
      throw Error(ErrorKind::SyntaxError,
                  "edge " + std::to_string(e) + " is not traversed exactly once");

  // Walk components: successor of an edge = the edge leaving the crossing it
  // enters, on the same strand.
  struct Entry {
    int crossing;
    Role role;
    int out_edge;
  };
  std::map<int, Entry> entry_at_head;
  std::vector<int> sign(ncross);
  for (int k = 0; k < ncross; ++k) {
    const Xc& x = xs[k];
    int over_in = dir[k] == 0 ? x.b : x.d;
    int over_out = dir[k] == 0 ? x.d : x.b;
    // under: south->north; over b->d is west-heading (negative), d->b east
    // (positive).
    sign[k] = dir[k] == 0 ? -1 : +1;
    entry_at_head[x.a] = {k, Role::Under, x.c};
    entry_at_head[over_in] = {k, Role::Over, over_out};
  }
  std::set<int> unvisited;
  for (auto& [e, _] : entry_at_head) unvisited.insert(e);
  std::vector<std::vector<Passage>> comps;
  while (!unvisited.empty()) {
    int start = *unvisited.begin();
    std::vector<Passage> word;
    int e = start;
    do {
      unvisited.erase(e);
      const Entry& en = entry_at_head.at(e);
      word.push_back({en.crossing + 1, en.role, sign[en.crossing]});
      e = en.out_edge;
    } while (e != start);
    comps.push_back(std::move(word));
  }
  return OrientedDiagram(std::move(comps));
}

// ---- Reidemeister moves ----------------------------------------------------

namespace {

int max_id(const OrientedDiagram& d) {
  int mx = 0;
  for (int id : d.crossing_ids()) mx = std::max(mx, id);
  return mx;
}

void check_pos(const OrientedDiagram& d, const PassagePos& p) {
  const auto& comps = d.components();
  if (p.comp < 0 || p.comp >= (int)comps.size())
    throw Error(ErrorKind::SiteNotFound, "component out of range");
  int len = static_cast<int>(comps[p.comp].size());
  if (p.idx < 0 || p.idx > std::max(0, len - 1) + 0)
    if (!(len == 0 && p.idx == 0))
      throw Error(ErrorKind::SiteNotFound, "position out of range");
}

}  // namespace

OrientedDiagram apply_move(const OrientedDiagram& d, const MoveSpec& m) {
  auto comps = d.components();
  switch (m.kind) {
    case MoveKind::R1Insert: {
      check_pos(d, m.site1);
      int k = max_id(d) + 1;
      int sign = (m.variant & 2) ? -1 : +1;
      bool under_first = m.variant & 1;
      std::vector<Passage> ins;
      if (under_first)
        ins = {{k, Role::Under, sign}, {k, Role::Over, sign}};
      else
        ins = {{k, Role::Over, sign}, {k, Role::Under, sign}};
      auto& w = comps[m.site1.comp];
      // Insert after passage idx (on semiarc s(comp, idx)); for an empty
      // component insert at the start.
      int at = w.empty() ? 0 : m.site1.idx + 1;
      w.insert(w.begin() + at, ins.begin(), ins.end());
      return OrientedDiagram(std::move(comps));
    }
    case MoveKind::R1Delete: {
      for (auto& w : comps) {
        int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
          int j = (i + 1) % len;
          if (len >= 2 && w[i].crossing == m.a && w[j].crossing == m.a) {
            if (j == 0) {
              w.erase(w.begin() + i);
              w.erase(w.begin());
            } else {
              w.erase(w.begin() + i, w.begin() + i + 2);
            }
            return OrientedDiagram(std::move(comps));
          }
        }
      }
      throw Error(ErrorKind::SiteNotFound,
                  "no adjacent kink at crossing " + std::to_string(m.a));
    }
    case MoveKind::R2Insert: {
      check_pos(d, m.site1);
      check_pos(d, m.site2);
      int j = max_id(d) + 1, k = max_id(d) + 2;
      int s1 = (m.variant & 2) ? -1 : +1;
      int s2 = -s1;
      bool anti = m.variant & 1;
      std::vector<Passage> overs = {{j, Role::Over, s1}, {k, Role::Over, s2}};
      std::vector<Passage> unders = anti
          ? std::vector<Passage>{{k, Role::Under, s2}, {j, Role::Under, s1}}
          : std::vector<Passage>{{j, Role::Under, s1}, {k, Role::Under, s2}};
      if (m.site1.comp == m.site2.comp && m.site1.idx == m.site2.idx) {
        auto& w = comps[m.site1.comp];
        int at = w.empty() ? 0 : m.site1.idx + 1;
        std::vector<Passage> both = overs;
        both.insert(both.end(), unders.begin(), unders.end());
        w.insert(w.begin() + at, both.begin(), both.end());
      } else {
        // Insert at the later index first so the earlier stays valid.
        struct Ins {
          PassagePos pos;
          std::vector<Passage>* what;
        };
        std::vector<Ins> ins = {{m.site1, &overs}, {m.site2, &unders}};
        std::sort(ins.begin(), ins.end(), [](const Ins& a, const Ins& b) {
          return a.pos.comp != b.pos.comp ? a.pos.comp > b.pos.comp
                                          : a.pos.idx > b.pos.idx;
        });
        for (const Ins& q : ins) {
          auto& w = comps[q.pos.comp];
          int at = w.empty() ? 0 : q.pos.idx + 1;
          w.insert(w.begin() + at, q.what->begin(), q.what->end());
        }
      }
      return OrientedDiagram(std::move(comps));
    }
    case MoveKind::R2Delete: {
      // Validate the bigon pattern before deleting.
      auto sites = find_r2_deletes(d);
      bool ok = false;
      for (const auto& s : sites)
        if ((s.a == m.a && s.b == m.b) || (s.a == m.b && s.b == m.a)) ok = true;
      if (!ok)
        throw Error(ErrorKind::PatternMismatch,
                    "crossings " + std::to_string(m.a) + "," +
                        std::to_string(m.b) + " do not form a cancelling bigon");
      for (auto& w : comps) {
        std::vector<Passage> nw;
        for (const Passage& p : w)
          if (p.crossing != m.a && p.crossing != m.b) nw.push_back(p);
        w = std::move(nw);
      }
      return OrientedDiagram(std::move(comps));
    }
    case MoveKind::R3: {
      auto sites = find_r3_moves(d);
      for (const auto& s : sites) {
        std::set<int> got{s.a, s.b, s.c}, want{m.a, m.b, m.c};
        std::set<std::pair<int, int>> gpos{{s.site1.comp, s.site1.idx},
                                           {s.site2.comp, s.site2.idx},
                                           {s.site3.comp, s.site3.idx}};
        std::set<std::pair<int, int>> wpos{{m.site1.comp, m.site1.idx},
                                           {m.site2.comp, m.site2.idx},
                                           {m.site3.comp, m.site3.idx}};
        if (got == want && gpos == wpos) {
          for (const auto& [c, i] : gpos) {
            auto& w = comps[c];
            int jn = (i + 1) % (int)w.size();
            std::swap(w[i], w[jn]);
          }
          return OrientedDiagram(std::move(comps));
        }
      }
      throw Error(ErrorKind::SiteNotFound, "no R3 triangle at those crossings");
    }
  }
  throw Error(ErrorKind::InvalidVariant, "unknown move kind");
}

std::vector<MoveSpec> find_r1_deletes(const OrientedDiagram& d) {
  std::vector<MoveSpec> out;
  for (const auto& w : d.components()) {
    int len = static_cast<int>(w.size());
    if (len < 2) continue;
    for (int i = 0; i < len; ++i) {
      int j = (i + 1) % len;
      if (w[i].crossing == w[j].crossing) {
        MoveSpec m;
        m.kind = MoveKind::R1Delete;
        m.a = w[i].crossing;
        if (out.empty() || out.back().a != m.a) out.push_back(m);
      }
    }
  }
  return out;
}

namespace {

struct AdjPair {
  int c1, c2;        // crossing ids at positions (i, i+1)
  Role r1, r2;
  int comp, idx;     // position of the first passage
};

std::vector<AdjPair> adjacent_pairs(const OrientedDiagram& d) {
  std::vector<AdjPair> out;
  const auto& comps = d.components();
  for (int c = 0; c < (int)comps.size(); ++c) {
    int len = static_cast<int>(comps[c].size());
    if (len < 2) continue;
    for (int i = 0; i < len; ++i) {
      int j = (i + 1) % len;
      const Passage &p = comps[c][i], &q = comps[c][j];
      if (p.crossing == q.crossing) continue;
      out.push_back({p.crossing, q.crossing, p.role, q.role, c, i});
    }
  }
  return out;
}

}  // namespace

std::vector<MoveSpec> find_r2_deletes(const OrientedDiagram& d) {
  std::vector<MoveSpec> out;
  auto pairs = adjacent_pairs(d);
  std::set<std::pair<int, int>> seen;
  for (size_t x = 0; x < pairs.size(); ++x) {
    for (size_t y = x + 1; y < pairs.size(); ++y) {
      const AdjPair &p = pairs[x], &q = pairs[y];
      if (std::min(p.c1, p.c2) != std::min(q.c1, q.c2) ||
          std::max(p.c1, p.c2) != std::max(q.c1, q.c2))
        continue;
      // Positions must be disjoint (4 distinct passages).
      if (p.comp == q.comp) {
        int len = static_cast<int>(d.components()[p.comp].size());
        std::set<int> pos{p.idx, (p.idx + 1) % len, q.idx, (q.idx + 1) % len};
        if (pos.size() != 4) continue;
      }
      // One strand over at both crossings, the other under at both.
      if (!(p.r1 == p.r2 && q.r1 == q.r2 && p.r1 != q.r1)) continue;
      int sa = d.crossing(p.c1).sign, sb = d.crossing(p.c2).sign;
      if (sa != -sb) continue;
      auto key = std::minmax(p.c1, p.c2);
      if (seen.count({key.first, key.second})) continue;
      seen.insert({key.first, key.second});
      MoveSpec m;
      m.kind = MoveKind::R2Delete;
      m.a = key.first;
      m.b = key.second;
      out.push_back(m);
    }
  }
  return out;
}

std::vector<MoveSpec> find_r3_moves(const OrientedDiagram& d) {
  std::vector<MoveSpec> out;
  auto pairs = adjacent_pairs(d);
  int np = static_cast<int>(pairs.size());
  for (int x = 0; x < np; ++x) {
    for (int y = x + 1; y < np; ++y) {
      for (int z = y + 1; z < np; ++z) {
        const AdjPair &p = pairs[x], &q = pairs[y], &r = pairs[z];
        std::set<int> ids{p.c1, p.c2, q.c1, q.c2, r.c1, r.c2};
        if (ids.size() != 3) continue;
        // The three pairs must cover each crossing exactly twice and be
        // position-disjoint.
        std::map<int, int> cnt;
        for (int id : {p.c1, p.c2, q.c1, q.c2, r.c1, r.c2}) cnt[id]++;
        bool ok = true;
        for (auto& [id, c] : cnt)
          if (c != 2) ok = false;
        if (!ok) continue;
        std::set<std::pair<int, int>> pos;
        for (const AdjPair* a : {&p, &q, &r}) {
          int len = static_cast<int>(d.components()[a->comp].size());
          pos.insert({a->comp, a->idx});
          pos.insert({a->comp, (a->idx + 1) % len});
        }
        if (pos.size() != 6) continue;
        // Role pattern: the top strand is over at both its passages, the
        // bottom under at both, the middle mixed.
        const AdjPair *top = nullptr, *mid = nullptr, *bot = nullptr;
        for (const AdjPair* a : {&p, &q, &r}) {
          if (a->r1 == Role::Over && a->r2 == Role::Over) top = a;
          else if (a->r1 == Role::Under && a->r2 == Role::Under) bot = a;
          else mid = a;
        }
        if (!top || !mid || !bot) continue;
        // Shared crossings of each strand pair.
        auto common = [](const AdjPair* u, const AdjPair* v) {
          if (u->c1 == v->c1 || u->c1 == v->c2) return u->c1;
          return u->c2;
        };
        int tm = common(top, mid), tb = common(top, bot), mb = common(mid, bot);
        if (tm == tb || tm == mb || tb == mb) continue;
        // Planarity of the triangle links traversal orders to signs:
        // o_M*o_B = s_TM*s_TB and o_T*o_M = s_TB*s_MB, where o_S = +1 when
        // strand S meets the lexically first of its two crossings first.
        int o_t = top->c1 == tm ? 1 : -1;
        int o_m = mid->c1 == tm ? 1 : -1;
        int o_b = bot->c1 == tb ? 1 : -1;
        int s_tm = d.crossing(tm).sign;
        int s_tb = d.crossing(tb).sign;
        int s_mb = d.crossing(mb).sign;
        if (o_m * o_b != s_tm * s_tb) continue;
        if (o_t * o_m != s_tb * s_mb) continue;
        std::vector<int> v(ids.begin(), ids.end());
        MoveSpec m;
        m.kind = MoveKind::R3;
        m.a = v[0];
        m.b = v[1];
        m.c = v[2];
        m.site1 = {p.comp, p.idx};
        m.site2 = {q.comp, q.idx};
        m.site3 = {r.comp, r.idx};
        out.push_back(m);
      }
    }
  }
  return out;
}

}  // namespace pbb

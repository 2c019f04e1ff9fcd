#include "pbb/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pbb {

FramedGraph::FramedGraph(int vertices, std::vector<int> mate, int free_circles)
    : nv_(vertices), mate_(std::move(mate)), circles_(free_circles) {
  if ((int)mate_.size() != 4 * nv_)
    throw Error(ErrorKind::DomainMismatch, "mate table must have 4v entries");
  for (int h = 0; h < 4 * nv_; ++h) {
    int m = mate_[h];
    if (m < 0 || m >= 4 * nv_ || m == h || mate_[m] != h)
      throw Error(ErrorKind::DomainMismatch,
                  "edges must form a perfect matching");
  }
  if (circles_ < 0)
    throw Error(ErrorKind::DomainMismatch, "negative circle count");
}

std::vector<std::vector<int>> FramedGraph::unicursal_components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> visited(4 * nv_, false);
  for (int h0 = 0; h0 < 4 * nv_; ++h0) {
    if (visited[h0]) continue;
    std::vector<int> word;
    int h = h0;
    do {
      visited[h] = true;
      visited[opposite(h)] = true;  // reverse-direction arrival
      word.push_back(vertex_of(h));
      h = mate_[opposite(h)];
    } while (h != h0);
    comps.push_back(std::move(word));
  }
  return comps;
}

namespace {

// All rotations of w and of its reversal.
std::vector<std::vector<int>> word_variants(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  int n = (int)w.size();
  std::vector<int> r(w.rbegin(), w.rend());
  for (int s = 0; s < n; ++s) {
    std::vector<int> a(w.begin() + s, w.end());
    a.insert(a.end(), w.begin(), w.begin() + s);
    out.push_back(std::move(a));
    std::vector<int> b(r.begin() + s, r.end());
    b.insert(b.end(), r.begin(), r.begin() + s);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Relabel a concatenation (components separated by -1) by first visit.
std::vector<int> relabel(const std::vector<int>& seq) {
  std::map<int, int> map;
  std::vector<int> out;
  out.reserve(seq.size());
  for (int v : seq) {
    if (v == -1) {
      out.push_back(-1);
      continue;
    }
    auto [it, fresh] = map.try_emplace(v, (int)map.size());
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

CanonicalCode canonical_code(const FramedGraph& g) {
  auto comps = g.unicursal_components();
  int nc = (int)comps.size();
  std::vector<std::vector<std::vector<int>>> variants;
  for (const auto& w : comps) variants.push_back(word_variants(w));

  // Branch-and-bound over component order and per-component variant,
  // minimizing the relabeled concatenation. States with the same raw prefix
  // and the same multiset of remaining component shapes have identical
  // futures and are merged.
  struct State {
    std::vector<bool> used;
    std::vector<int> seq;
  };
  auto remaining_key = [&](const State& st) {
    std::vector<std::vector<int>> shapes;
    for (int c = 0; c < nc; ++c)
      if (!st.used[c]) shapes.push_back(relabel(variants[c].front()));
    std::sort(shapes.begin(), shapes.end());
    return shapes;
  };
  std::vector<State> frontier{State{std::vector<bool>(nc, false), {}}};
  for (int step = 0; step < nc; ++step) {
    std::vector<int> best;
    std::vector<State> next;
    for (const State& st : frontier) {
      for (int c = 0; c < nc; ++c) {
        if (st.used[c]) continue;
        for (const auto& var : variants[c]) {
          std::vector<int> seq = st.seq;
          seq.insert(seq.end(), var.begin(), var.end());
          seq.push_back(-1);
          std::vector<int> lab = relabel(seq);
          if (best.empty() || lab < best) {
            best = lab;
            next.clear();
          }
          if (lab == best) {
            State ns;
            ns.used = st.used;
            ns.used[c] = true;
            ns.seq = std::move(seq);
            bool dup = false;
            for (const State& q : next)
              if (q.seq == ns.seq && remaining_key(q) == remaining_key(ns))
                dup = true;
            if (!dup) next.push_back(std::move(ns));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<int> final_seq =
      frontier.empty() ? std::vector<int>{} : relabel(frontier.front().seq);
  std::ostringstream os;
  os << "fg1:o" << g.free_circles() << ":";
  for (size_t i = 0; i < final_seq.size(); ++i) {
    if (final_seq[i] == -1) {
      if (i + 1 < final_seq.size()) os << "|";
    } else {
      if (i && final_seq[i - 1] != -1) os << ".";
      os << final_seq[i];
    }
  }
  CanonicalCode code;
  code.text = os.str();
  code.vertices = g.vertices();
  code.circles = g.free_circles();
  return code;
}

FramedGraph reconstruct(const CanonicalCode& code) {
  const std::string& s = code.text;
  if (s.rfind("fg1:o", 0) != 0)
    throw Error(ErrorKind::SyntaxError, "unknown graph code format");
  size_t i = 5;
  int circles = 0;
  while (i < s.size() && isdigit((unsigned char)s[i]))
    circles = circles * 10 + (s[i++] - '0');
  if (i >= s.size() || s[i] != ':')
    throw Error(ErrorKind::SyntaxError, "malformed graph code");
  ++i;
  std::vector<std::vector<int>> words(1);
  bool any = false;
  while (i < s.size()) {
    if (s[i] == '|') {
      words.emplace_back();
      ++i;
      continue;
    }
    if (s[i] == '.') {
      ++i;
      continue;
    }
    int v = 0;
    if (!isdigit((unsigned char)s[i]))
      throw Error(ErrorKind::SyntaxError, "malformed graph code");
    while (i < s.size() && isdigit((unsigned char)s[i]))
      v = v * 10 + (s[i++] - '0');
    words.back().push_back(v);
    any = true;
  }
  if (!any) words.clear();

  int nv = 0;
  for (const auto& w : words)
    for (int v : w) nv = std::max(nv, v + 1);
  std::vector<int> visits(nv, 0);
  std::vector<int> mate(4 * nv, -1);
  for (const auto& w : words) {
    if (w.empty()) continue;
    std::vector<std::pair<int, int>> inout;  // (arrival, exit) per passage
    for (int v : w) {
      if (v < 0 || v >= nv || visits[v] >= 2)
        throw Error(ErrorKind::SyntaxError, "not a double-occurrence code");
      int base = 4 * v + 2 * visits[v];
      visits[v]++;
      inout.push_back({base, base + 1});
    }
    for (size_t k = 0; k < inout.size(); ++k) {
      int from = inout[k].second;
      int to = inout[(k + 1) % inout.size()].first;
      mate[from] = to;
      mate[to] = from;
    }
  }
  for (int v = 0; v < nv; ++v)
    if (visits[v] != 2)
      throw Error(ErrorKind::SyntaxError, "not a double-occurrence code");
  return FramedGraph(nv, std::move(mate), circles);
}

std::vector<ReductionSite> find_reductions(const FramedGraph& g, int variant) {
  std::vector<ReductionSite> out;
  int nh = 4 * g.vertices();
  // Loop sites (variant 2 only): an edge joining two non-opposite half-edges
  // of one vertex.
  if (variant == 2) {
    for (int h = 0; h < nh; ++h) {
      int m = g.mate(h);
      if (m <= h) continue;
      if (FramedGraph::vertex_of(h) == FramedGraph::vertex_of(m) &&
          m != FramedGraph::opposite(h)) {
        ReductionSite s;
        s.kind = 1;
        s.v1 = FramedGraph::vertex_of(h);
        s.h1 = h;
        s.h2 = m;
        out.push_back(s);
      }
    }
  }
  // Bigon sites: two edges between distinct vertices u, v whose half-edges
  // are non-opposite at both endpoints.
  struct EdgeRef {
    int hu, hv;
  };
  std::map<std::pair<int, int>, std::vector<EdgeRef>> between;
  for (int h = 0; h < nh; ++h) {
    int m = g.mate(h);
    if (m <= h) continue;
    int u = FramedGraph::vertex_of(h), v = FramedGraph::vertex_of(m);
    if (u == v) continue;
    if (u < v)
      between[{u, v}].push_back({h, m});
    else
      between[{v, u}].push_back({m, h});
  }
  for (auto& [uv, edges] : between) {
    for (size_t a = 0; a < edges.size(); ++a)
      for (size_t b = a + 1; b < edges.size(); ++b) {
        if (edges[a].hu == FramedGraph::opposite(edges[b].hu)) continue;
        if (edges[a].hv == FramedGraph::opposite(edges[b].hv)) continue;
        ReductionSite s;
        s.kind = 2;
        s.v1 = uv.first;
        s.v2 = uv.second;
        s.h1 = edges[a].hu;
        s.h2 = edges[a].hv;
        s.h3 = edges[b].hu;
        s.h4 = edges[b].hv;
        out.push_back(s);
      }
  }
  return out;
}

std::pair<FramedGraph, int> reduce_at(const FramedGraph& g,
                                      const ReductionSite& site) {
  int nh = 4 * g.vertices();
  std::vector<bool> dead(g.vertices(), false);
  dead[site.v1] = true;
  if (site.kind == 2) dead[site.v2] = true;

  std::vector<int> newidx(g.vertices(), -1);
  int nv = 0;
  for (int v = 0; v < g.vertices(); ++v)
    if (!dead[v]) newidx[v] = nv++;

  auto is_dead = [&](int h) { return dead[FramedGraph::vertex_of(h)]; };
  std::vector<bool> seen(nh, false);
  std::vector<int> mate(4 * nv, -1);
  // Wire alive half-edges, passing straight through dead vertices.
  for (int h = 0; h < nh; ++h) {
    if (is_dead(h)) continue;
    int nh1 = newidx[FramedGraph::vertex_of(h)] * 4 + (h % 4);
    if (mate[nh1] != -1) continue;
    int cur = g.mate(h);
    while (is_dead(cur)) {
      seen[cur] = true;
      seen[FramedGraph::opposite(cur)] = true;
      cur = g.mate(FramedGraph::opposite(cur));
    }
    int nh2 = newidx[FramedGraph::vertex_of(cur)] * 4 + (cur % 4);
    mate[nh1] = nh2;
    mate[nh2] = nh1;
  }
  // Closed orbits entirely through dead vertices become circles.
  int circles = 0;
  for (int h = 0; h < nh; ++h) {
    if (!is_dead(h) || seen[h]) continue;
    int cur = h;
    do {
      seen[cur] = true;
      seen[FramedGraph::opposite(cur)] = true;
      cur = g.mate(FramedGraph::opposite(cur));
    } while (cur != h);
    ++circles;
  }
  return {FramedGraph(nv, std::move(mate), g.free_circles() + circles),
          circles};
}

NormalForm normalize(const FramedGraph& g, int variant, std::mt19937_64* rng) {
  FramedGraph cur = g;
  while (true) {
    auto sites = find_reductions(cur, variant);
    if (sites.empty()) break;
    size_t pick = 0;
    if (rng) pick = (*rng)() % sites.size();
    cur = reduce_at(cur, sites[pick]).first;
  }
  NormalForm nf;
  if (cur.vertices() == 0) {
    int c = cur.free_circles();
    if (c == 0) {
      // Empty picture.
      nf.code = canonical_code(FramedGraph(0, {}, 0));
      nf.delta_exponent = 0;
    } else {
      nf.code = canonical_code(FramedGraph(0, {}, 1));
      nf.delta_exponent = c - 1;
    }
  } else {
    nf.delta_exponent = cur.free_circles();
    nf.code = canonical_code(FramedGraph(
        cur.vertices(),
        [&] {
          std::vector<int> m(4 * cur.vertices());
          for (int h = 0; h < 4 * cur.vertices(); ++h) m[h] = cur.mate(h);
          return m;
        }(),
        0));
  }
  return nf;
}

}  // namespace pbb

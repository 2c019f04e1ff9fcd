#include "pbb/bracket.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pbb {

namespace {

// Port layout per crossing: 4k + {0: under-in, 1: under-out, 2: over-in,
// 3: over-out}, matching the half-edge slot layout of FramedGraph.
struct Ports {
  int n = 0;
  std::vector<int> semilink;  // port -> port joined by a semiarc
  std::vector<int> crossing_sign;
  std::vector<std::pair<int, int>> subs;  // subscript pair per crossing
  int closed_circles = 0;                 // crossing-free components
};

Ports build_ports(const OrientedDiagram& d, const Coloring& f,
                  const Biquandle& b) {
  if (!coloring_valid(d, b, f))
    throw Error(ErrorKind::InvalidColoring, "assignment violates a crossing");
  Ports ps;
  auto ids = d.crossing_ids();
  ps.n = (int)ids.size();
  ps.semilink.assign(4 * ps.n, -1);
  std::map<int, int> index;
  for (int k = 0; k < ps.n; ++k) index[ids[k]] = k;

  // Each semiarc joins the out-port of its tail passage to the in-port of
  // its head passage.
  std::vector<int> arc_tail(d.semiarc_count(), -1),
      arc_head(d.semiarc_count(), -1);
  for (int k = 0; k < ps.n; ++k) {
    const CrossingEnds& e = d.crossing(ids[k]);
    arc_head[e.under_in] = 4 * k + 0;
    arc_tail[e.under_out] = 4 * k + 1;
    arc_head[e.over_in] = 4 * k + 2;
    arc_tail[e.over_out] = 4 * k + 3;
    ps.crossing_sign.push_back(e.sign);
    ps.subs.push_back(b.subscript(e.sign, f[e.under_in], f[e.over_in]));
  }
  for (int s = 0; s < d.semiarc_count(); ++s) {
    if (arc_tail[s] < 0 && arc_head[s] < 0) {
      ps.closed_circles++;
      continue;
    }
    ps.semilink[arc_tail[s]] = arc_head[s];
    ps.semilink[arc_head[s]] = arc_tail[s];
  }
  return ps;
}

}  // namespace

Monomial all_vertex_monomial(const OrientedDiagram& d, const Coloring& f,
                             const Biquandle& b) {
  BracketVars vars{b.size()};
  Monomial mono = Monomial::one(vars.count());
  for (int id : d.crossing_ids()) {
    const CrossingEnds& e = d.crossing(id);
    auto [x, y] = b.subscript(e.sign, f[e.under_in], f[e.over_in]);
    int letter = e.sign > 0 ? 2 : 5;  // C or F
    mono = mono_mul(mono, Monomial::var(vars.count(), vars.id(letter, x, y)));
  }
  return mono;
}

std::vector<RawState> expand_states(const OrientedDiagram& d,
                                    const Coloring& f, const Biquandle& b) {
  Ports ps = build_ports(d, f, b);
  BracketVars vars{b.size()};
  int n = ps.n;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;

  std::vector<RawState> out;
  out.reserve(total);
  std::vector<int> digit(n, 0);
  std::vector<int> weld(4 * n, -1);
  for (long long s = 0; s < total; ++s) {
    long long acc = s;
    for (int k = 0; k < n; ++k) {
      digit[k] = acc % 3;
      acc /= 3;
    }
    // Welds at smoothed crossings.
    std::fill(weld.begin(), weld.end(), -1);
    std::vector<int> vend;  // crossings kept as vertices
    for (int k = 0; k < n; ++k) {
      if (digit[k] == 0) {  // oriented: under-in<->over-out, over-in<->under-out
        weld[4 * k + 0] = 4 * k + 3;
        weld[4 * k + 3] = 4 * k + 0;
        weld[4 * k + 2] = 4 * k + 1;
        weld[4 * k + 1] = 4 * k + 2;
      } else if (digit[k] == 1) {  // disoriented: in<->in, out<->out
        weld[4 * k + 0] = 4 * k + 2;
        weld[4 * k + 2] = 4 * k + 0;
        weld[4 * k + 1] = 4 * k + 3;
        weld[4 * k + 3] = 4 * k + 1;
      } else {
        vend.push_back(k);
      }
    }
    int nv = (int)vend.size();
    std::vector<int> vport(n, -1);
    for (int i = 0; i < nv; ++i) vport[vend[i]] = i;

    std::vector<bool> used(4 * n, false);
    std::vector<int> mate(4 * nv, -1);
    for (int k : vend) {
      for (int j = 0; j < 4; ++j) {
        int p = 4 * k + j;
        if (used[p]) continue;
        int h1 = 4 * vport[k] + j;
        if (mate[h1] != -1) continue;
        used[p] = true;
        int q = ps.semilink[p];
        used[q] = true;
        while (weld[q] != -1) {
          q = weld[q];
          used[q] = true;
          q = ps.semilink[q];
          used[q] = true;
        }
        int h2 = 4 * vport[q / 4] + (q % 4);
        mate[h1] = h2;
        mate[h2] = h1;
      }
    }
    // Leftover smoothed chains are circles.
    int circles = ps.closed_circles;
    for (int p = 0; p < 4 * n; ++p) {
      if (used[p] || weld[p] == -1) continue;
      int q = p;
      do {
        used[q] = true;
        q = weld[q];
        used[q] = true;
        q = ps.semilink[q];
      } while (q != p);
      ++circles;
    }

    RawState st;
    Monomial mono = Monomial::one(vars.count());
    for (int k = 0; k < n; ++k) {
      int letter = digit[k] + (ps.crossing_sign[k] > 0 ? 0 : 3);
      mono = mono_mul(mono, Monomial::var(vars.count(),
                                          vars.id(letter, ps.subs[k].first,
                                                  ps.subs[k].second)));
    }
    st.mono = std::move(mono);
    if (nv > 0) {
      st.delta_exponent = circles;
      st.graph = FramedGraph(nv, std::move(mate), 0);
    } else if (circles > 0) {
      st.delta_exponent = circles - 1;
      st.graph = FramedGraph(0, {}, 1);
    } else {
      st.delta_exponent = 0;
      st.graph = FramedGraph(0, {}, 0);
    }
    out.push_back(std::move(st));
  }
  return out;
}

BracketValue bracket(const OrientedDiagram& d, const Coloring& f,
                     const Biquandle& b, int variant,
                     std::optional<long long> delta) {
  if (variant != 1 && variant != 2)
    throw Error(ErrorKind::InvalidVariant, "variant must be 1 or 2");
  BracketValue v;
  v.vars = BracketVars{b.size()};
  v.ring = v.vars.ring();
  v.variant = variant;
  v.delta_symbolic = !delta.has_value();
  v.delta = delta.value_or(1);

  for (RawState& st : expand_states(d, f, b)) {
    NormalForm nf = normalize(st.graph, variant);
    int dexp = st.delta_exponent + nf.delta_exponent;
    std::vector<Term> ts;
    if (v.delta_symbolic) {
      Monomial m = st.mono;
      if (dexp)
        m = mono_mul(m, Monomial::var(v.ring.nvars, v.vars.delta_id(), dexp));
      ts.push_back({std::move(m), 1});
    } else {
      long long c = 1;
      for (int i = 0; i < dexp; ++i) c *= v.delta;
      ts.push_back({st.mono, c});
    }
    Poly p = Poly::from_terms(v.ring, std::move(ts));
    auto it = v.terms.find(nf.code.text);
    if (it == v.terms.end()) {
      v.terms.emplace(nf.code.text, BracketTerm{p, nf.code.vertices});
    } else {
      it->second.coeff = add(v.ring, it->second.coeff, p);
    }
  }
  for (auto it = v.terms.begin(); it != v.terms.end();) {
    if (it->second.coeff.is_zero())
      it = v.terms.erase(it);
    else
      ++it;
  }
  return v;
}

std::vector<BracketValue> bracket_multiset(const OrientedDiagram& d,
                                           const Biquandle& b, int variant,
                                           std::optional<long long> delta) {
  std::vector<BracketValue> out;
  for (const Coloring& f : enumerate_colorings(d, b))
    out.push_back(bracket(d, f, b, variant, delta));
  return out;
}

ReducedBracket reduce_bracket(const BracketValue& v, const GroebnerBasis& G) {
  if (v.delta_symbolic)
    throw Error(ErrorKind::DomainMismatch,
                "reduction requires a specialized circle value");
  if (G.ring.nvars != v.ring.nvars)
    throw Error(ErrorKind::DomainMismatch, "variable universe mismatch");
  ReducedBracket r;
  r.prime = G.ring.p;
  for (const auto& [code, term] : v.terms) {
    Poly nf = normal_form(to_field(v.ring, term.coeff, G.ring.p), G);
    if (!nf.is_zero()) r.terms[code] = {nf, term.vertices};
  }
  return r;
}

std::string reduced_to_string(const BracketVars& vars,
                              const ReducedBracket& r) {
  std::ostringstream os;
  Ring ring = vars.ring(r.prime);
  for (const auto& [code, t] : r.terms) {
    os << code << " => "
       << poly_to_string(ring, t.first, [&](int i) { return vars.name(i); })
       << "\n";
  }
  return os.str();
}

bool multisets_equal_mod(const std::vector<BracketValue>& a,
                         const std::vector<BracketValue>& b,
                         const BracketVars& vars, const GroebnerBasis& G) {
  std::vector<std::string> sa, sb;
  for (const auto& v : a) sa.push_back(reduced_to_string(vars, reduce_bracket(v, G)));
  for (const auto& v : b) sb.push_back(reduced_to_string(vars, reduce_bracket(v, G)));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

std::vector<std::pair<std::string, int>> leading_terms(const BracketValue& v,
                                                       const GroebnerBasis& G) {
  ReducedBracket r = reduce_bracket(v, G);
  int best = -1;
  for (const auto& [code, t] : r.terms) best = std::max(best, t.second);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [code, t] : r.terms)
    if (t.second == best) out.push_back({code, t.second});
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Minimal: return "Minimal";
    case Verdict::LowerBoundOnly: return "LowerBoundOnly";
    case Verdict::NoCertificate: return "NoCertificate";
  }
  return "?";
}

MinimalityCertificate certify_minimality(const OrientedDiagram& d,
                                         const Biquandle& b, int variant,
                                         long long delta,
                                         const GroebnerBasis& G) {
  MinimalityCertificate cert;
  cert.diagram = d.to_string();
  cert.biquandle_hash = b.hash_hex();
  cert.crossings = d.crossing_count();
  cert.variant = variant;
  cert.delta = delta;
  cert.prime = G.ring.p;

  BracketVars vars{b.size()};
  Ring zring = vars.ring();
  for (const Coloring& f : enumerate_colorings(d, b)) {
    ColoringReport rep;
    rep.coloring = f;
    Monomial avm = all_vertex_monomial(d, f, b);
    Poly avp = Poly::from_terms(zring, {{avm, 1}});
    rep.all_vertex_monomial = poly_to_string(vars, avp);
    Poly nf = normal_form(to_field(zring, avp, G.ring.p), G);
    rep.all_vertex_nonzero = !nf.is_zero();
    rep.all_vertex_nf =
        poly_to_string(vars.ring(G.ring.p), nf, [&](int i) { return vars.name(i); });

    BracketValue v = bracket(d, f, b, variant, delta);
    rep.leading = leading_terms(v, G);
    for (const auto& [code, vc] : rep.leading) {
      if (vc > cert.best_certified_vertices) {
        cert.best_certified_vertices = vc;
        cert.witness_code = code;
      }
    }
    cert.colorings.push_back(std::move(rep));
  }

  if (cert.best_certified_vertices < 0) {
    cert.verdict = Verdict::NoCertificate;
  } else if (cert.best_certified_vertices == cert.crossings &&
             cert.crossings > 0) {
    cert.verdict = Verdict::Minimal;
  } else {
    cert.verdict = Verdict::LowerBoundOnly;
  }

  if (!cert.witness_code.empty()) {
    CanonicalCode wc;
    wc.text = cert.witness_code;
    FramedGraph wg = reconstruct(wc);
    cert.witness_irreducible_j1 = find_reductions(wg, 1).empty();
    cert.witness_irreducible_j2 = find_reductions(wg, 2).empty();
  }
  return cert;
}

std::string certificate_json(const MinimalityCertificate& c) {
  nlohmann::json j;
  j["format"] = "pbb-certificate-1";
  j["diagram"] = c.diagram;
  j["biquandle_hash"] = c.biquandle_hash;
  j["crossings"] = c.crossings;
  j["variant"] = c.variant;
  j["delta"] = c.delta;
  j["prime"] = c.prime;
  j["monomial_order"] = c.order;
  j["verdict"] = to_string(c.verdict);
  j["best_certified_vertices"] = c.best_certified_vertices;
  j["witness"] = {{"code", c.witness_code},
                  {"irreducible_j1", c.witness_irreducible_j1},
                  {"irreducible_j2", c.witness_irreducible_j2}};
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& rep : c.colorings) {
    nlohmann::json jc;
    jc["coloring"] = rep.coloring;
    jc["all_vertex_monomial"] = rep.all_vertex_monomial;
    jc["all_vertex_nf"] = rep.all_vertex_nf;
    jc["all_vertex_nonzero"] = rep.all_vertex_nonzero;
    nlohmann::json lead = nlohmann::json::array();
    for (const auto& [code, vc] : rep.leading)
      lead.push_back({{"code", code}, {"vertices", vc}});
    jc["leading"] = lead;
    cols.push_back(jc);
  }
  j["colorings"] = cols;
  return j.dump(2);
}

std::string certificate_summary(const MinimalityCertificate& c) {
  std::ostringstream os;
  os << "diagram: " << c.diagram << "\n"
     << "crossings: " << c.crossings << ", variant: " << c.variant
     << ", delta: " << c.delta << ", prime: " << c.prime << "\n"
     << "colorings: " << c.colorings.size() << "\n"
     << "verdict: " << to_string(c.verdict);
  if (c.best_certified_vertices >= 0)
    os << " (certified lower bound " << c.best_certified_vertices
       << " crossings; witness " << c.witness_code << ", irreducible j1="
       << (c.witness_irreducible_j1 ? "yes" : "no")
       << " j2=" << (c.witness_irreducible_j2 ? "yes" : "no") << ")";
  os << "\n";
  return os.str();
}

}  // namespace pbb

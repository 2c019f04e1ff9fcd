// Acceptance suite: runs every stated criterion and prints one line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "pbb/bracket.hpp"
#include "pbb/gb_cache.hpp"
#include "pbb/invariance.hpp"

using namespace pbb;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixtures = "fixtures", cache = ".gb-cache";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string a = argv[i];
    if (a == "--fixtures") fixtures = argv[i + 1];
    if (a == "--cache") cache = argv[i + 1];
  }

  Biquandle X1 = Biquandle::load_file(fixtures + "/X1.json");
  Biquandle X2 = Biquandle::load_file(fixtures + "/X2.json");
  Biquandle Tr = Biquandle::trivial(3);
  OrientedDiagram e18 = parse_gauss(read_file(fixtures + "/8_18.gauss"));
  OrientedDiagram borr = parse_gauss(read_file(fixtures + "/borromean.gauss"));
  OrientedDiagram tref = parse_gauss(read_file(fixtures + "/trefoil.gauss"));

  std::vector<Criterion> crits;
  BracketVars vars{3};

  auto gb = [&](const Biquandle& b, int j, uint64_t p) {
    IdealSpec spec = build_ideal(b, j, 1);
    return gb_for_ideal(spec, p, cache);
  };

  // ---- criterion 1: 8_18 golden certificate --------------------------------
  {
    Criterion c{1, "8_18 certificate (X1, variant 2, delta 1)"};
    auto t0 = Clock::now();
    const std::string target =
        "C[1,1]*C[1,2]*C[2,1]*C[2,2]*F[1,3]*F[2,1]*F[2,3]*F[3,1]";
    bool monomial_found = false;
    FramedGraph all_vertex(0, {}, 0);
    for (const Coloring& f : enumerate_colorings(e18, X1)) {
      Poly mono =
          Poly::from_terms(vars.ring(), {{all_vertex_monomial(e18, f, X1), 1}});
      if (poly_to_string(vars, mono) == target) {
        monomial_found = true;
        for (const RawState& st : expand_states(e18, f, X1))
          if (st.graph.vertices() == 8) all_vertex = st.graph;
        break;
      }
    }
    c.check(monomial_found,
            "a coloring with all-vertex state monomial " + target);
    if (monomial_found) {
      c.check(all_vertex.vertices() == 8, "witness graph has 8 vertices");
      c.check(find_reductions(all_vertex, 2).empty(),
              "witness graph is 2-irreducible");
    }
    for (uint64_t p : {32003ull, 2ull}) {
      auto tg = Clock::now();
      GroebnerBasis G = gb(X1, 2, p);
      double gb_time = seconds_since(tg);
      c.check(gb_time <= 1800.0, "basis construction within 30 minutes (p=" +
                                     std::to_string(p) + ")");
      Poly mono = poly_parse(vars.ring(), vars, target);
      Poly nf = normal_form(to_field(vars.ring(), mono, p), G);
      c.check(!nf.is_zero(), "monomial has nonzero normal form mod p=" +
                                 std::to_string(p));
      MinimalityCertificate cert = certify_minimality(e18, X1, 2, 1, G);
      c.check(cert.verdict == Verdict::Minimal,
              std::string("verdict Minimal (p=") + std::to_string(p) +
                  "; got " + to_string(cert.verdict) + ", best " +
                  std::to_string(cert.best_certified_vertices) + ")");
    }
    c.seconds = seconds_since(t0);
    crits.push_back(std::move(c));
  }

  // ---- criterion 2: Borromean golden certificate ---------------------------
  {
    Criterion c{2, "Borromean certificate (X2, variant 1, delta 1)"};
    auto t0 = Clock::now();
    const std::string target =
        "C[1,3]*C[2,1]*C[3,2]*F[1,3]*F[2,1]*F[3,2]";
    bool monomial_found = false;
    FramedGraph all_vertex(0, {}, 0);
    for (const Coloring& f : enumerate_colorings(borr, X2)) {
      Poly mono =
          Poly::from_terms(vars.ring(), {{all_vertex_monomial(borr, f, X2), 1}});
      if (poly_to_string(vars, mono) == target) {
        monomial_found = true;
        for (const RawState& st : expand_states(borr, f, X2))
          if (st.graph.vertices() == 6) all_vertex = st.graph;
        break;
      }
    }
    c.check(monomial_found,
            "a coloring with all-vertex state monomial " + target);
    if (monomial_found) {
      c.check(all_vertex.vertices() == 6, "witness graph has 6 vertices");
      c.check(find_reductions(all_vertex, 1).empty(),
              "witness graph is 1-irreducible");
      c.check(find_reductions(all_vertex, 2).empty(),
              "witness graph is 2-irreducible");
    }
    auto tg = Clock::now();
    GroebnerBasis G = gb(X2, 1, 32003);
    c.check(seconds_since(tg) <= 1800.0,
            "basis construction within 30 minutes");
    IdealSpec spec = build_ideal(X2, 1, 1);
    Poly mono = poly_parse(vars.ring(), vars, target);
    Poly nf;
    Membership mem = certify_nonmembership(spec.ring, mono, spec.gens, 32003, &nf);
    c.check(mem == Membership::NotInIdealOverZ,
            "monomial certified not in I_1 over Z (normal form nonzero)");
    MinimalityCertificate cert = certify_minimality(borr, X2, 1, 1, G);
    c.check(cert.verdict == Verdict::Minimal,
            std::string("verdict Minimal (got ") + to_string(cert.verdict) +
                ", best " + std::to_string(cert.best_certified_vertices) + ")");
    c.seconds = seconds_since(t0);
    crits.push_back(std::move(c));
  }

  // ---- criterion 3: Theorem-1 invariance fuzz ------------------------------
  {
    Criterion c{3, "bracket multiset invariance fuzz (100 cases)"};
    auto t0 = Clock::now();
    std::vector<GroebnerBasis> gbs;
    std::vector<InvarianceOracle> oracles;
    for (const Biquandle* b : {&X1, &X2, &Tr})
      for (int j : {1, 2}) gbs.push_back(gb(*b, j, 32003));
    size_t k = 0;
    for (const Biquandle* b : {&X1, &X2, &Tr})
      for (int j : {1, 2}) oracles.push_back({b, j, &gbs[k++], 1});
    FuzzConfig cfg;
    cfg.seed = 818;
    cfg.cases = 100;
    cfg.max_crossings = 6;
    FuzzResult res = invariance_fuzz(oracles, cfg);
    c.check(res.cases_run == 100, "ran 100 cases");
    c.check(res.failures == 0,
            "all multisets equal (failures: " + std::to_string(res.failures) +
                (res.messages.empty() ? "" : "; first: " + res.messages[0]) +
                ")");
    c.seconds = seconds_since(t0);
    c.check(c.seconds <= 600.0, "within 10 minutes");
    crits.push_back(std::move(c));
  }

  // ---- criterion 4: diamond lemma confluence -------------------------------
  {
    Criterion c{4, "diamond-lemma confluence (500 graphs, 3+ orders)"};
    auto t0 = Clock::now();
    std::mt19937_64 rng(4242);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
      FramedGraph g = oracle::random_framed_graph(rng, 8);
      for (int j : {1, 2}) {
        NormalForm ref = normalize(g, j);
        for (int k2 = 0; k2 < 3; ++k2) {
          NormalForm nf = normalize(g, j, &rng);
          if (!(nf.code == ref.code && nf.delta_exponent == ref.delta_exponent))
            ++bad;
        }
      }
    }
    c.check(bad == 0, "identical normal forms (mismatches: " +
                          std::to_string(bad) + ")");
    c.seconds = seconds_since(t0);
    c.check(c.seconds <= 60.0, "within 1 minute");
    crits.push_back(std::move(c));
  }

  // ---- criterion 5: evaluation smoke test ----------------------------------
  {
    Criterion c{5, "evaluation homomorphism annihilates all generators"};
    std::mt19937_64 rng(5005);
    std::vector<Biquandle> bqs = {X1, X2};
    for (int i = 0; i < 20; ++i)
      bqs.push_back(oracle::random_biquandle(rng, 2 + (int)(rng() % 2)));
    // build ideals first; the timed budget covers the evaluation itself
    std::vector<IdealSpec> specs;
    for (const Biquandle& b : bqs)
      for (int j : {1, 2}) specs.push_back(build_ideal(b, j, 1, true));
    auto t0 = Clock::now();
    long long nonzero = 0, total = 0;
    for (const IdealSpec& spec : specs) {
      std::vector<long long> vals(spec.vars.count(), 0);
      long long letter_val[6] = {1, -1, 0, 1, -1, 0};
      for (int L = 0; L < 6; ++L)
        for (int x = 1; x <= spec.vars.m; ++x)
          for (int y = 1; y <= spec.vars.m; ++y)
            vals[spec.vars.id(L, x, y)] = letter_val[L];
      vals[spec.vars.delta_id()] = 2;
      for (const Poly& g : spec.gens) {
        ++total;
        if (eval_all(spec.ring, g, vals) != 0) ++nonzero;
      }
    }
    c.seconds = seconds_since(t0);
    c.check(nonzero == 0, "all " + std::to_string(total) +
                              " generators annihilated (violations: " +
                              std::to_string(nonzero) + ")");
    c.check(c.seconds <= 1.0, "within 1 second");
    crits.push_back(std::move(c));
  }

  // ---- criterion 6: Groebner vs Macaulay oracle ----------------------------
  {
    Criterion c{6, "normal-form membership vs Macaulay oracle (200 ideals)"};
    auto t0 = Clock::now();
    std::mt19937_64 rng(6006);
    int disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
      int nv = 2 + (int)(rng() % 3);
      Ring r{nv, 32003};
      auto rand_poly = [&](int max_terms, int max_deg) {
        std::vector<Term> ts;
        int terms = 1 + (int)(rng() % max_terms);
        for (int t = 0; t < terms; ++t) {
          Monomial m = Monomial::one(nv);
          int deg = (int)(rng() % (max_deg + 1));
          for (int k = 0; k < deg; ++k)
            m = mono_mul(m, Monomial::var(nv, (int)(rng() % nv)));
          ts.push_back({std::move(m), (long long)(rng() % 7) - 3});
        }
        return Poly::from_terms(r, std::move(ts));
      };
      std::vector<Poly> gens;
      int ng = 1 + (int)(rng() % 3);
      for (int i = 0; i < ng; ++i) gens.push_back(rand_poly(3, 3));
      GroebnerBasis G = buchberger(r, gens);
      Poly probe;
      if (trial % 2 == 0) {
        probe = rand_poly(3, 4);
      } else {
        probe = Poly::zero();
        for (const Poly& g : gens)
          probe = add(r, probe, mul(r, g, rand_poly(2, 1)));
      }
      bool nf_zero = normal_form(probe, G).is_zero();
      auto mem = oracle::macaulay_member(r, probe, gens,
                                         std::max(probe.degree(), 0) + 7);
      if (nf_zero != mem.value_or(false)) ++disagreements;
    }
    c.check(disagreements == 0,
            "100% agreement (disagreements: " + std::to_string(disagreements) +
                ")");
    c.seconds = seconds_since(t0);
    c.check(c.seconds <= 120.0, "within 2 minutes");
    crits.push_back(std::move(c));
  }

  // ---- criterion 7: coloring oracle + invariance ---------------------------
  {
    Criterion c{7, "coloring enumeration oracle and move invariance"};
    auto t0 = Clock::now();
    std::vector<OrientedDiagram> small = {tref, parse_gauss("O1+U1+"),
                                          parse_gauss("()"),
                                          parse_gauss("O1-U1-O2+U2+")};
    for (const auto& d : small) {
      if (d.semiarc_count() > 10) continue;
      for (const Biquandle* b : {&X1, &X2, &Tr}) {
        if (enumerate_colorings(d, *b).size() !=
            oracle::coloring_count_bruteforce(d, *b)) {
          c.check(false, "backtracking equals brute force on " + d.to_string());
        }
      }
    }
    std::vector<const Biquandle*> bqs = {&X1, &X2, &Tr};
    FuzzConfig cfg;
    cfg.seed = 707;
    cfg.cases = 100;
    cfg.max_crossings = 6;
    FuzzResult res = coloring_count_fuzz(bqs, cfg);
    c.check(res.cases_run == 100, "ran 100 cases");
    c.check(res.failures == 0,
            "coloring counts invariant (failures: " +
                std::to_string(res.failures) + ")");
    c.seconds = seconds_since(t0);
    crits.push_back(std::move(c));
  }

  // ---- criterion 8: kink sanity --------------------------------------------
  {
    Criterion c{8, "kink brackets equal the unknot value in both quotients"};
    auto t0 = Clock::now();
    GroebnerBasis G1 = gb(X1, 1, 32003), G2 = gb(X1, 2, 32003);
    for (const char* code : {"O1+U1+", "U1-O1-"}) {
      OrientedDiagram kink = parse_gauss(code);
      for (const Coloring& f : enumerate_colorings(kink, X1)) {
        for (int j : {1, 2}) {
          BracketValue v = bracket(kink, f, X1, j, 1);
          ReducedBracket r = reduce_bracket(v, j == 1 ? G1 : G2);
          bool ok = r.terms.size() == 1 &&
                    r.terms.begin()->first == "fg1:o1:" &&
                    r.terms.begin()->second.first ==
                        Poly::constant(Ring{vars.count(), 32003}, 1);
          c.check(ok, std::string("bracket of ") + code + " reduces to "
                      "{circle: 1} for variant " + std::to_string(j));
        }
      }
    }
    c.seconds = seconds_since(t0);
    crits.push_back(std::move(c));
  }

  int failures = 0;
  std::cout << "\n==== acceptance criteria ====\n";
  for (const Criterion& c : crits) {
    std::cout << "CRITERION " << c.id << " [" << (c.pass ? "PASS" : "FAIL")
              << "] " << c.name << " (" << (int)(c.seconds * 10) / 10.0
              << "s)\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << (failures ? "RESULT: FAIL (" : "RESULT: PASS (")
            << (crits.size() - failures) << "/" << crits.size()
            << " criteria)\n";
  return failures == 0 ? 0 : 1;
}

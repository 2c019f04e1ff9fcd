// Command-line front end for the parity-biquandle bracket library.
//
// Subcommands: check-biquandle, colorings, bracket, groebner, certify,
// invariance-fuzz. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbb/bracket.hpp"
#include "pbb/gb_cache.hpp"
#include "pbb/invariance.hpp"

namespace {

using namespace pbb;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts a literal Gauss code, a .gauss file, or a PD code / .pd file.
OrientedDiagram load_diagram(const std::string& arg) {
  std::string text = arg;
  std::ifstream probe(arg);
  if (probe.good()) text = read_file(arg);
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (text[i] == 'X' || text.compare(i, 3, "PD[") == 0))
    return parse_pd(text);
  return parse_gauss(text);
}

std::string default_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PBB_CACHE_DIR")) return env;
  return ".gb-cache";
}

GroebnerBasis obtain_gb(const Biquandle& bq, int variant, long long delta,
                        uint64_t prime, const std::string& cache_dir,
                        bool quiet) {
  IdealSpec spec = build_ideal(bq, variant, delta);
  ProgressFn progress;
  if (!quiet)
    progress = [](const GbProgress& p) {
      std::cerr << "\rgroebner: pairs=" << p.pairs_left
                << " basis=" << p.basis_size << " sugar=" << p.sugar
                << " reductions=" << p.reductions << "   " << std::flush;
    };
  GroebnerBasis G = gb_for_ideal(spec, prime, cache_dir, progress);
  if (!quiet) std::cerr << "\n";
  return G;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity-biquandle bracket toolkit"};
  app.require_subcommand(1);

  std::string diagram_arg, biquandle_arg, cache_flag, format = "text";
  int variant = 2;
  long long delta = 1;
  uint64_t prime = 32003;
  bool symbolic_delta = false;
  int jobs = 1;
  uint64_t seed = 1;
  int cases = 100, max_crossings = 6;
  int coloring_index = -1;

  auto add_common = [&](CLI::App* cmd, bool needs_diagram) {
    if (needs_diagram)
      cmd->add_option("--diagram", diagram_arg,
                      "Gauss/PD code literal or file")->required();
    cmd->add_option("--biquandle", biquandle_arg, "biquandle file")->required();
    cmd->add_option("--format", format, "json or text");
  };

  CLI::App* c_check = app.add_subcommand("check-biquandle", "verify axioms");
  c_check->add_option("--biquandle", biquandle_arg, "biquandle file")
      ->required();
  c_check->add_option("--format", format, "json or text");

  CLI::App* c_col = app.add_subcommand("colorings", "enumerate colorings");
  add_common(c_col, true);

  CLI::App* c_br = app.add_subcommand("bracket", "bracket values");
  add_common(c_br, true);
  c_br->add_option("--variant", variant, "1 or 2");
  c_br->add_option("--delta", delta, "circle value");
  c_br->add_flag("--symbolic-delta", symbolic_delta, "keep delta symbolic");
  c_br->add_option("--prime", prime, "reduction prime");
  c_br->add_option("--coloring", coloring_index, "only this coloring index");
  c_br->add_option("--cache-dir", cache_flag, "GB cache directory");

  CLI::App* c_gb = app.add_subcommand("groebner", "build and cache a basis");
  c_gb->add_option("--biquandle", biquandle_arg, "biquandle file")->required();
  c_gb->add_option("--variant", variant, "1 or 2");
  c_gb->add_option("--delta", delta, "circle value");
  c_gb->add_option("--prime", prime, "prime");
  c_gb->add_option("--cache-dir", cache_flag, "GB cache directory");
  c_gb->add_option("--format", format, "json or text");

  CLI::App* c_cert = app.add_subcommand("certify", "minimality certificate");
  add_common(c_cert, true);
  c_cert->add_option("--variant", variant, "1 or 2");
  c_cert->add_option("--delta", delta, "circle value");
  c_cert->add_option("--prime", prime, "prime");
  c_cert->add_option("--cache-dir", cache_flag, "GB cache directory");
  c_cert->add_option("--jobs", jobs, "parallelism degree");

  CLI::App* c_fuzz = app.add_subcommand("invariance-fuzz",
                                        "bracket multiset invariance suite");
  c_fuzz->add_option("--seed", seed, "RNG seed");
  c_fuzz->add_option("--cases", cases, "number of cases");
  c_fuzz->add_option("--max-crossings", max_crossings, "diagram size bound");
  c_fuzz->add_option("--variant", variant, "1 or 2 (default both)");
  c_fuzz->add_option("--delta", delta, "circle value");
  c_fuzz->add_option("--prime", prime, "prime");
  c_fuzz->add_option("--cache-dir", cache_flag, "GB cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_check) {
      Biquandle bq = Biquandle::load_file(biquandle_arg);
      AxiomReport rep = bq.verify();
      if (format == "json") {
        nlohmann::json j;
        j["m"] = bq.size();
        j["hash"] = bq.hash_hex();
        j["r1"] = rep.r1;
        j["r2"] = rep.r2;
        j["r3"] = rep.r3;
        j["r4"] = rep.r4;
        j["pass"] = rep.pass();
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& w : rep.failures)
          fails.push_back({{"axiom", w.axiom}, {"witness", w.tuple}});
        j["failures"] = fails;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "m = " << bq.size() << ", hash " << bq.hash_hex() << "\n";
        std::cout << "R1 " << (rep.r1 ? "pass" : "FAIL") << ", R2 "
                  << (rep.r2 ? "pass" : "FAIL") << ", R3 "
                  << (rep.r3 ? "pass" : "FAIL") << ", R4 "
                  << (rep.r4 ? "pass" : "FAIL") << "\n";
        for (const auto& w : rep.failures) {
          std::cout << "  " << w.axiom << " fails at (";
          for (size_t i = 0; i < w.tuple.size(); ++i)
            std::cout << (i ? "," : "") << w.tuple[i];
          std::cout << ")\n";
        }
        std::cout << (rep.pass() ? "pass" : "fail") << "\n";
      }
      return rep.pass() ? 0 : 1;
    }

    if (*c_col) {
      OrientedDiagram d = load_diagram(diagram_arg);
      Biquandle bq = Biquandle::load_file(biquandle_arg);
      auto cols = enumerate_colorings(d, bq);
      if (format == "json") {
        nlohmann::json j;
        j["diagram"] = d.to_string();
        j["count"] = cols.size();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : cols) arr.push_back(f);
        j["colorings"] = arr;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << cols.size() << " colorings\n";
        for (const auto& f : cols) {
          for (size_t i = 0; i < f.size(); ++i)
            std::cout << (i ? " " : "") << (int)f[i];
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*c_br) {
      OrientedDiagram d = load_diagram(diagram_arg);
      Biquandle bq = Biquandle::load_file(biquandle_arg);
      std::optional<long long> dv;
      if (!symbolic_delta) dv = delta;
      auto cols = enumerate_colorings(d, bq);
      BracketVars vars{bq.size()};
      std::optional<GroebnerBasis> G;
      if (!symbolic_delta) {
        IdealSpec spec = build_ideal(bq, variant, delta);
        G = gb_cache_load(default_cache_dir(cache_flag), spec, prime);
      }
      nlohmann::json out = nlohmann::json::array();
      for (size_t i = 0; i < cols.size(); ++i) {
        if (coloring_index >= 0 && (int)i != coloring_index) continue;
        BracketValue v = bracket(d, cols[i], bq, variant, dv);
        if (format == "json") {
          nlohmann::json jv;
          jv["coloring"] = cols[i];
          nlohmann::json terms = nlohmann::json::object();
          if (G) {
            ReducedBracket r = reduce_bracket(v, *G);
            for (const auto& [code, t] : r.terms)
              terms[code] = poly_to_string(vars.ring(G->ring.p), t.first,
                                           [&](int k) { return vars.name(k); });
            jv["reduced_mod_prime"] = prime;
          } else {
            for (const auto& [code, t] : v.terms)
              terms[code] = poly_to_string(vars, t.coeff);
          }
          jv["terms"] = terms;
          out.push_back(jv);
        } else {
          std::cout << "coloring " << i << ":";
          for (uint8_t c : cols[i]) std::cout << " " << (int)c;
          std::cout << "\n";
          if (G) {
            std::cout << reduced_to_string(vars, reduce_bracket(v, *G));
          } else {
            for (const auto& [code, t] : v.terms)
              std::cout << code << " => " << poly_to_string(vars, t.coeff)
                        << "\n";
          }
        }
      }
      if (format == "json") std::cout << out.dump(2) << "\n";
      else if (!G && !symbolic_delta)
        std::cerr << "note: no cached basis; printed raw values (run "
                     "'pbb groebner' to enable reduction)\n";
      return 0;
    }

    if (*c_gb) {
      Biquandle bq = Biquandle::load_file(biquandle_arg);
      if (symbolic_delta)
        throw Error(ErrorKind::InvalidVariant,
                    "groebner requires a specialized delta");
      std::string dir = default_cache_dir(cache_flag);
      IdealSpec spec = build_ideal(bq, variant, delta);
      GroebnerBasis G = obtain_gb(bq, variant, delta, prime, dir, false);
      if (format == "json") {
        nlohmann::json j;
        j["manifest"] = spec.manifest();
        j["prime"] = prime;
        j["generators"] = spec.gens.size();
        j["basis_size"] = G.g.size();
        j["cache_file"] = gb_cache_path(dir, spec, prime);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "generators: " << spec.gens.size() << "\n"
                  << "basis size: " << G.g.size() << "\n"
                  << "cached at: " << gb_cache_path(dir, spec, prime) << "\n";
      }
      return 0;
    }

    if (*c_cert) {
      OrientedDiagram d = load_diagram(diagram_arg);
      Biquandle bq = Biquandle::load_file(biquandle_arg);
      GroebnerBasis G = obtain_gb(bq, variant, delta, prime,
                                  default_cache_dir(cache_flag), false);
      MinimalityCertificate cert = certify_minimality(d, bq, variant, delta, G);
      if (format == "json")
        std::cout << certificate_json(cert) << "\n";
      else
        std::cout << certificate_summary(cert);
      return 0;
    }

    if (*c_fuzz) {
      std::vector<Biquandle> bqs;
      bqs.push_back(Biquandle::from_json_text(
          R"({"m":3,"circ":[[1,1,1],[3,3,3],[2,2,2]],"star":[[1,2,3],[2,3,1],[3,1,2]]})"));
      bqs.push_back(Biquandle::from_json_text(
          R"({"m":3,"circ":[[3,3,3],[1,1,1],[2,2,2]],"star":[[3,3,3],[1,1,1],[2,2,2]]})"));
      bqs.push_back(Biquandle::trivial(3));
      std::string dir = default_cache_dir(cache_flag);
      std::vector<GroebnerBasis> gbs;
      std::vector<InvarianceOracle> oracles;
      std::vector<int> variants =
          c_fuzz->count("--variant") ? std::vector<int>{variant}
                                     : std::vector<int>{1, 2};
      for (const Biquandle& b : bqs)
        for (int j : variants) {
          gbs.push_back(obtain_gb(b, j, delta, prime, dir, false));
        }
      size_t k = 0;
      for (const Biquandle& b : bqs)
        for (int j : variants) oracles.push_back({&b, j, &gbs[k++], delta});
      FuzzConfig cfg{seed, cases, max_crossings};
      FuzzResult res = invariance_fuzz(oracles, cfg, nullptr);
      std::cout << res.cases_run << " cases, " << res.failures
                << " failures\n";
      for (const auto& msg : res.messages) std::cout << "  " << msg << "\n";
      return res.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "pbb/gb_cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pbb {

std::string gb_cache_path(const std::string& dir, const IdealSpec& spec,
                          uint64_t prime) {
  std::ostringstream key;
  key << spec.manifest() << ";p=" << prime;
  return dir + "/pbb-gb-" + hex64(fnv1a(key.str())) + ".json";
}

std::optional<GroebnerBasis> gb_cache_load(const std::string& dir,
                                           const IdealSpec& spec,
                                           uint64_t prime) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(gb_cache_path(dir, spec, prime));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("format").get<std::string>() != "pbb-gb-1") return std::nullopt;
    if (j.at("manifest").get<std::string>() != spec.manifest())
      return std::nullopt;
    if (j.at("prime").get<uint64_t>() != prime) return std::nullopt;
    GroebnerBasis G;
    G.ring = Ring{spec.ring.nvars, prime};
    for (const auto& jp : j.at("basis")) {
      std::vector<Term> ts;
      for (const auto& jt : jp) {
        long long c = jt.at(0).get<long long>();
        Monomial m = Monomial::one(G.ring.nvars);
        for (const auto& jv : jt.at(1)) {
          int var = jv.at(0).get<int>();
          int exp = jv.at(1).get<int>();
          m = mono_mul(m, Monomial::var(G.ring.nvars, var, exp));
        }
        ts.push_back({std::move(m), c});
      }
      G.g.push_back(Poly::from_terms(G.ring, std::move(ts)));
    }
    return G;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void gb_cache_store(const std::string& dir, const IdealSpec& spec,
                    uint64_t prime, const GroebnerBasis& G) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::json j;
  j["format"] = "pbb-gb-1";
  j["manifest"] = spec.manifest();
  j["prime"] = prime;
  nlohmann::json basis = nlohmann::json::array();
  for (const Poly& p : G.g) {
    nlohmann::json jp = nlohmann::json::array();
    for (const Term& t : p.terms()) {
      nlohmann::json vars = nlohmann::json::array();
      for (int i = 0; i < G.ring.nvars; ++i)
        if (t.m.e[i]) vars.push_back({i, (int)t.m.e[i]});
      jp.push_back({t.c, vars});
    }
    basis.push_back(jp);
  }
  j["basis"] = basis;
  std::ofstream out(gb_cache_path(dir, spec, prime));
  out << j.dump();
}

GroebnerBasis gb_for_ideal(const IdealSpec& spec, uint64_t prime,
                           const std::string& cache_dir,
                           const ProgressFn& progress) {
  if (auto G = gb_cache_load(cache_dir, spec, prime)) return *G;
  std::vector<Poly> gens;
  gens.reserve(spec.gens.size());
  for (const Poly& g : spec.gens) {
    Poly gp = to_field(spec.ring, g, prime);
    if (!gp.is_zero()) gens.push_back(std::move(gp));
  }
  GroebnerBasis G = buchberger(Ring{spec.ring.nvars, prime}, std::move(gens),
                               progress);
  gb_cache_store(cache_dir, spec, prime, G);
  return G;
}

}  // namespace pbb

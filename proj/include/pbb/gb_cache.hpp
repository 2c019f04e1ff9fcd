#pragma once

// Disk cache for Groebner bases, keyed by the ideal manifest and prime.
// Cache files are versioned JSON; a hit reproduces the reduced basis
// byte-identically.

#include <optional>
#include <string>

#include "pbb/groebner.hpp"
#include "pbb/ideals.hpp"

namespace pbb {

std::string gb_cache_path(const std::string& dir, const IdealSpec& spec,
                          uint64_t prime);

std::optional<GroebnerBasis> gb_cache_load(const std::string& dir,
                                           const IdealSpec& spec,
                                           uint64_t prime);

void gb_cache_store(const std::string& dir, const IdealSpec& spec,
                    uint64_t prime, const GroebnerBasis& G);

// Load from cache or compute and store. Empty dir disables caching.
GroebnerBasis gb_for_ideal(const IdealSpec& spec, uint64_t prime,
                           const std::string& cache_dir,
                           const ProgressFn& progress = {});

}  // namespace pbb

// Shared test fixtures: the bundled example root data, loaded once per
// process, and one algebra-operations bundle per datum.

#pragma once

#include "hecke/io.hpp"
#include "hecke/verify.hpp"

#include <map>
#include <memory>
#include <string>

namespace fixtures {

inline const hecke::RootDatum& datum(const std::string& name) {
  static std::map<std::string, hecke::RootDatum> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache
             .emplace(name, hecke::load_datum_file(
                                std::string(HECKE_DATA_DIR) + "/" + name +
                                ".json"))
             .first;
  }
  return it->second;
}

// The context members hold references into each other, so the bundle is
// heap-allocated and never moved.
inline hecke::AlgebraContext& ctx(const std::string& name) {
  static std::map<std::string, std::unique_ptr<hecke::AlgebraContext>> cache;
  auto& p = cache[name];
  if (!p) p = std::make_unique<hecke::AlgebraContext>(datum(name));
  return *p;
}

}  // namespace fixtures

#include "pgma/fixture_set.hpp"

namespace pgma {

const FixtureSet* find_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace pgma

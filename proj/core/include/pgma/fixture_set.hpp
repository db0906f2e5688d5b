#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pgma {

/// A shipped fixture: its definition file (canonical form) and the golden
/// report the CLI must regenerate byte for byte.
struct FixtureSet {
  std::string name;
  std::string definition;
  std::string golden;
};

/// Every fixture under fixtures/, sorted by name.
const std::vector<FixtureSet>& builtin_fixtures();

/// nullptr for an unknown name.
const FixtureSet* find_fixture(std::string_view name);

}  // namespace pgma

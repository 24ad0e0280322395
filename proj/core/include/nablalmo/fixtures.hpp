#pragma once

#include <string>
#include <vector>

#include "nablalmo/seifert.hpp"
#include "nablalmo/zpoly.hpp"

namespace nablalmo {

struct Fixture {
  std::string name;
  SeifertMatrix seifert;
  int components = 1;
  ZPoly expected_nabla;
};

/// Built-in knots and links: unknot, trefoil, figure-eight, the twist knots
/// [[-1,1],[0,n]] for n = 0..5 and annulus links [[n]] with two components.
/// Every entry is checked against nabla_from_seifert on first use; a
/// mismatch throws std::logic_error.
const std::vector<Fixture>& builtin_fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& find_fixture(const std::string& name);

}  // namespace nablalmo

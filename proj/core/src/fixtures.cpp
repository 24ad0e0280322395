#include "nablalmo/fixtures.hpp"

#include <stdexcept>

#include "nablalmo/alexander.hpp"
#include "nablalmo/text.hpp"

namespace nablalmo {

namespace {

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> f;
  f.push_back({"unknot", SeifertMatrix(QMatrix(0, 0)), 1, ZPoly({1})});
  f.push_back({"trefoil", SeifertMatrix(QMatrix{{-1, 1}, {0, -1}}), 1, ZPoly({1, 1})});
  f.push_back({"figure_eight", SeifertMatrix(QMatrix{{1, 1}, {0, -1}}), 1, ZPoly({1, -1})});
  for (int n = 0; n <= 5; ++n) {
    f.push_back({"twist_" + std::to_string(n), SeifertMatrix(QMatrix{{-1, 1}, {0, n}}), 1, ZPoly({1, -n})});
  }
  for (int n : {-1, 1, 2}) {
    const std::string name = n < 0 ? "annulus_m" + std::to_string(-n) : "annulus_" + std::to_string(n);
    f.push_back({name, SeifertMatrix(QMatrix{{n}}), 2, ZPoly({n}, 1)});
  }
  for (const auto& fixture : f) {
    const NablaResult got = nabla_from_seifert(fixture.seifert, fixture.components);
    if (!(got.z_form == fixture.expected_nabla)) {
      throw std::logic_error("fixture " + fixture.name + ": expected " + to_string(fixture.expected_nabla) +
                             ", computed " + to_string(got.z_form));
    }
  }
  return f;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("unknown fixture '" + name + "'");
}

}  // namespace nablalmo

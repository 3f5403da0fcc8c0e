#include <doctest.h>

#include "properties.hpp"

using namespace excc::testing;

namespace {

void require_property(const PropertyResult& r) {
  INFO(r.name << ": " << r.detail << " (worst " << r.worst << ")");
  CHECK(r.passed);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("orthonormality") { require_property(orthonormality_property(20)); }
  TEST_CASE("reproducing inequality") { require_property(reproducing_property(10000)); }
  TEST_CASE("Bergman monotonicity") { require_property(bergman_monotonicity_property(1000)); }
  TEST_CASE("level-set nesting") { require_property(level_set_nesting_property()); }
  TEST_CASE("determinism") {
    require_property(determinism_property(std::filesystem::path(EXCC_TEST_SCRATCH) / "determinism_unit"));
  }
}

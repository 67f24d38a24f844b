#include "doctest.h"

TEST_SUITE("fixture") {
  TEST_CASE("placeholder") { CHECK(true); }
}

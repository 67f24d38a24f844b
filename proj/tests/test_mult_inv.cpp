#include "doctest.h"

TEST_SUITE("mult_inv") {
  TEST_CASE("placeholder") { CHECK(true); }
}

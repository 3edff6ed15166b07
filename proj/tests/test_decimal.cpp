#include "doctest.h"
#include "patdual/decimal.hpp"
#include "patdual/errors.hpp"

using namespace patdual;

TEST_CASE("round half to even") {
  CHECK(format_decimal(Rat(62, 71), 4) == "0.8732");
  CHECK(format_decimal(Rat(9110, 71), 2) == "128.31");
  CHECK(format_decimal(Rat(1, 8), 2) == "0.12");
  CHECK(format_decimal(Rat(3, 8), 2) == "0.38");
  CHECK(format_decimal(Rat(5, 2), 0) == "2");
  CHECK(format_decimal(Rat(7, 2), 0) == "4");
  CHECK(format_decimal(Rat(-1, 8), 2) == "-0.12");
  CHECK(format_decimal(Rat(-1, 1000), 2) == "0.00");
  CHECK(format_decimal(Rat(1), 3) == "1.000");
  CHECK(format_percent(Rat(9, 71), 4) == "12.68%");
  CHECK_THROWS_AS(format_decimal(Rat(1), -1), PreconditionError);
}

TEST_CASE("square roots are rounded exactly") {
  CHECK(format_sqrt(Rat(2), 4) == "1.4142");
  CHECK(format_sqrt(Rat(9, 4), 1) == "1.5");
  CHECK(format_sqrt(Rat(9, 4), 0) == "2");     // 1.5 -> even
  CHECK(format_sqrt(Rat(25, 4), 0) == "2");    // 2.5 -> even
  CHECK(format_sqrt(Rat(49, 4), 0) == "4");    // 3.5 -> even
  CHECK(format_sqrt(Rat(0), 2) == "0.00");
  CHECK(format_sqrt(Rat(2), 3, true) == "-1.414");
  CHECK_THROWS_AS(format_sqrt(Rat(-1), 2), DomainError);
}

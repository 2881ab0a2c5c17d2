#include <catch2/catch_amalgamated.hpp>

#include "ffrace/sqrtq.hpp"
#include "test_util.hpp"

using namespace ffrace;

TEST_CASE("exact arithmetic in Q(sqrt q)", "[sqrtq]") {
  SqrtQNumber x(23, 2, 1);   // 2 + sqrt(23)
  SqrtQNumber y(23, 2, -1);  // 2 - sqrt(23)
  CHECK((x * y) == SqrtQNumber::rational(23, mpq_class(4 - 23)));
  CHECK((x + y) == SqrtQNumber::rational(23, 4));
  CHECK((x - x).is_zero());
}

TEST_CASE("exact sign decisions near close rationals", "[sqrtq]") {
  // 5 - sqrt(23) > 0 since 23 < 25
  CHECK(SqrtQNumber(23, 5, -1).sign() == 1);
  // 24/5 - sqrt(23) > 0 since 23 < 576/25
  CHECK(SqrtQNumber(23, mpq_class(24, 5), -1).sign() == 1);
  // 91/19 - sqrt(23) < 0 since (91/19)^2 = 8281/361 < 23 = 8303/361
  CHECK(SqrtQNumber(23, mpq_class(91, 19), -1).sign() == -1);
  CHECK(SqrtQNumber(23, 0, -2).sign() == -1);
  CHECK(SqrtQNumber(23, 0, 0).sign() == 0);
}

TEST_CASE("perfect square base collapses to rationals", "[sqrtq]") {
  SqrtQNumber s(9, 0, 1);  // sqrt(9) = 3
  CHECK(s == SqrtQNumber::rational(9, 3));
  CHECK(s.sign() == 1);
  SqrtQNumber t(9, 1, mpq_class(1, 3));  // 1 + 3/3 = 2
  CHECK(t == SqrtQNumber::rational(9, 2));
}

TEST_CASE("string and double conversions", "[sqrtq]") {
  CHECK(SqrtQNumber(23, 391, 0).str() == "391");
  CHECK(SqrtQNumber(23, 0, 23).str() == "23*sqrt(23)");
  CHECK(SqrtQNumber(23, 2, 1).to_double() ==
        Catch::Approx(2 + std::sqrt(23.0)));
}

#include <doctest.h>

#include "ellstab/errors.hpp"
#include "ellstab/rational.hpp"

using namespace ellstab;

TEST_SUITE("rational") {

TEST_CASE("parse and print round trip") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(rat_str(Rat(-3, 2)) == "-3/2");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(parse_rat(rat_str(Rat(22, 7))) == Rat(22, 7));
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/2/3", "--3"}) {
    try {
      parse_rat(bad);
      FAIL("accepted: " << bad);
    } catch (const error& e) {
      CHECK(e.code == errc::invalid_parameter);
    }
  }
}

TEST_CASE("floor helpers") {
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(rat_floor(Rat(-3, 2)) == Rat(-2));
  CHECK(rat_floor(Rat(3, 2)) == Rat(1));
  CHECK(rat_floor(Rat(4)) == Rat(4));
}

TEST_CASE("rational square roots") {
  Rat root;
  CHECK(rat_sqrt(Rat(9, 4), root));
  CHECK(root == Rat(3, 2));
  CHECK(rat_sqrt(Rat(0), root));
  CHECK(root == Rat(0));
  CHECK_FALSE(rat_sqrt(Rat(2), root));
  CHECK_FALSE(rat_sqrt(Rat(9, 5), root));
}

}  // TEST_SUITE

#include "doctest.h"
#include "hopf/freealg.hpp"

using namespace hopf;

TEST_SUITE("freealg") {
  const FieldSpec q = FieldSpec::rational();
  const Alphabet ab{{"a", "b", "x"}};

  NcPoly w(std::initializer_list<int> letters, long c = 1) { return NcPoly::monomial(Word(letters), FieldElement(q, c)); }

  TEST_CASE("zero coefficients are dropped") {
    NcPoly f = w({0}) + w({1}) - w({0});
    CHECK(f == w({1}));
    CHECK((f - f).is_zero());
    CHECK(f.degree() == 1);
  }

  TEST_CASE("multiplication is concatenation") {
    const NcPoly f = w({0}) + w({1});
    const NcPoly g = w({2}, 2);
    CHECK(f * g == w({0, 2}, 2) + w({1, 2}, 2));
    CHECK(f.pow(2, q) == w({0, 0}) + w({0, 1}) + w({1, 0}) + w({1, 1}));
    CHECK(f.pow(0, q) == NcPoly::one(q));
  }

  TEST_CASE("formatting") {
    CHECK(ab.format(Word{0, 2, 0, 0}) == "a*x*a^2");
    CHECK(ab.format(Word{}) == "1");
    CHECK((w({0}) - NcPoly::one(q)).format(ab) == "-1 + a");
  }

  TEST_CASE("tensor products") {
    const TensorPoly t = TensorPoly::pure({w({0}) + w({1}), w({2})});
    CHECK(t.terms().size() == 2);
    const TensorPoly sq = t * t;
    CHECK(sq.terms().size() == 4);
  }
}

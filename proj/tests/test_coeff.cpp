#include "doctest.h"
#include "hopf/coeff.hpp"

#include <random>

using namespace hopf;

TEST_SUITE("coeff") {
  TEST_CASE("cube root of unity") {
    for (const char* name : {"Qr", "F7", "F13"}) {
      const FieldSpec f = FieldSpec::preset(name);
      const FieldElement r = FieldElement::root(f);
      const FieldElement one = FieldElement::one(f);
      CHECK(r * r + r + one == FieldElement::zero(f));
      CHECK(r * r * r == one);
      CHECK(r != one);
    }
  }

  TEST_CASE("rational arithmetic is canonical") {
    const FieldSpec q = FieldSpec::rational();
    const FieldElement a(q, mpq_class(2, 4));
    CHECK(a == FieldElement(q, mpq_class(1, 2)));
    CHECK((a + a).is_one());
    CHECK(a.to_string() == "1/2");
    CHECK_THROWS_AS(FieldElement::root(q), FieldError);
    CHECK_THROWS_AS(FieldElement::zero(q).inverse(), FieldError);
  }

  TEST_CASE("prime fields") {
    const FieldSpec f7 = FieldSpec::preset("F7");
    CHECK(FieldElement::root(f7).residue() == 2);
    CHECK(FieldElement(f7, -1).residue() == 6);
    CHECK(FieldElement(f7, mpq_class(1, 3)) * FieldElement(f7, 3) == FieldElement::one(f7));
    CHECK_THROWS_AS(FieldSpec::prime(7, 3), FieldError);
    CHECK_THROWS_AS(FieldSpec::prime(9, 4), FieldError);
    CHECK_THROWS_AS(FieldSpec::preset("F5"), FieldError);
  }

  TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(FieldElement::one(FieldSpec::preset("F7")) + FieldElement::one(FieldSpec::preset("F13")), FieldError);
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-20, 20);
    for (const char* name : {"Q", "Qr", "F7", "F13"}) {
      const FieldSpec f = FieldSpec::preset(name);
      auto sample = [&] {
        long den = 1 + std::abs(d(rng));
        if (f.p != 0 && den % static_cast<long>(f.p) == 0) ++den;
        FieldElement x(f, mpq_class(d(rng), den));
        if (f.has_root()) x += FieldElement(f, d(rng)) * FieldElement::root(f);
        return x;
      };
      for (int i = 0; i < 200; ++i) {
        const FieldElement x = sample(), y = sample(), z = sample();
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        CHECK(x - x == FieldElement::zero(f));
      }
    }
  }
}

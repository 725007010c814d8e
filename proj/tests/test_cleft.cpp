#include "doctest.h"
#include "hopf/catalog.hpp"
#include "hopf/cleft.hpp"

using namespace hopf;

namespace {

HopfPresentation make(const char* name, const char* field = "Qr", const char* pq = "0,0") {
  const FieldSpec f = FieldSpec::preset(field);
  return build_catalog(name, f, preset_parameters(f, pq));
}

}  // namespace

TEST_SUITE("cleft") {
  TEST_CASE("projection examples") {
    HopfAlgebra h(make("A"));
    QuotientCoalgebra q(h);
    const HopfPresentation& p = h.presentation();
    const FieldSpec& f = h.field();
    const Letter a = p.letter("a"), F = p.letter("F");
    CHECK(q.project(p.element("x")).empty());
    // xa -> -(r+1) ax + F + (r+2)/3 (a^2 - a) at q = 0.
    const FieldElement k = (FieldElement::root(f) + FieldElement(f, 2)) / FieldElement(f, 3);
    const SparseVector<Word> expected{{Word::letter(F), FieldElement::one(f)}, {Word::power(a, 2), k}, {Word::letter(a), -k}};
    CHECK(q.project(p.element("x") * p.gen("a")) == expected);
    CHECK(q.f_classes().size() == 18);
  }

  TEST_CASE("cleaving map checks") {
    for (const char* field : {"Qr", "F7"})
      for (const char* name : {"A", "Agen"}) {
        HopfAlgebra h(make(name, field));
        QuotientCoalgebra q(h);
        CHECK_MESSAGE(q.check_section().ok(), name << " " << field);
        CHECK_MESSAGE(q.check_colinearity().ok(), name << " " << field);
        CHECK_MESSAGE(q.check_coradical_inverse().ok(), name << " " << field);
        CHECK(q.check_injective_on_c().ok());
        CHECK(q.check_coalgebra_map(6).ok());
        CHECK(q.check_coideal(30, 6).ok());
      }
  }

  TEST_CASE("uncorrected gamma is not colinear") {
    HopfAlgebra h(make("A"));
    QuotientCoalgebra q(h);
    const NcPoly xa = h.presentation().element("x") * h.presentation().gen("a");
    const XaClass c{0, 0, 2};
    const NcPoly naive = xa * xa;
    CHECK(q.project(naive) == q.class_vector(c));
    const TensorPoly lhs = q.project_left(h.coproduct(h.nf(naive)));
    TensorPoly rhs(2);
    const TensorPoly delta = q.delta_quot(q.class_vector(c));
    for (const auto& [key, coeff] : delta.terms())
      rhs += coeff * TensorPoly::pure({h.word(key[0]), q.gamma(SparseVector<Word>{{key[1], FieldElement::one(h.field())}})});
    CHECK_FALSE(lhs == h.nf(rhs));
  }

  TEST_CASE("preconditions") {
    HopfAlgebra atilde(make("Atilde"));
    CHECK_THROWS_AS(QuotientCoalgebra{atilde}, std::invalid_argument);
    HopfAlgebra shifted(make("A", "Qr", "6,3"));
    CHECK_THROWS_AS(QuotientCoalgebra{shifted}, std::invalid_argument);
    HopfAlgebra h(make("A"));
    QuotientCoalgebra q(h);
    CHECK_THROWS_AS(q.gamma(XaClass{3, 0, 0}), std::invalid_argument);
    CHECK(q.gamma(XaClass{1, 1, 0}) == h.word(Word{h.presentation().letter("a"), h.presentation().letter("b")}));
    CHECK(XaClass{2, 1, 2}.label() == "[a^2*b*(xa)^2]");
  }
}

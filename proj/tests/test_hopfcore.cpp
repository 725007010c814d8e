#include "doctest.h"
#include "hopf/catalog.hpp"
#include "hopf/parser.hpp"

using namespace hopf;

namespace {

HopfPresentation make(const char* name, const char* field = "Qr", const char* pq = "0,0") {
  const FieldSpec f = FieldSpec::preset(field);
  return build_catalog(name, f, preset_parameters(f, pq));
}

}  // namespace

TEST_SUITE("hopfcore") {
  TEST_CASE("parameters") {
    const FieldSpec f = FieldSpec::preset("Qr");
    CHECK_NOTHROW(Parameters::make(f, 6, 3).validate());
    CHECK_NOTHROW(Parameters::make(f, 0, -1).validate());
    CHECK_THROWS_AS(Parameters::make(f, 1, 1).validate(), std::invalid_argument);
  }

  TEST_CASE("coproducts") {
    for (const char* pq : {"0,0", "6,3"}) {
      HopfAlgebra h(make("Atilde", "Qr", pq));
      const HopfPresentation& p = h.presentation();
      const NcPoly a = p.gen("a"), b = p.gen("b"), F = p.gen("F"), x = p.element("x");
      CHECK(h.coproduct(a * b) == TensorPoly::pure({a * b, a * b}));
      CHECK(h.coproduct(F) == h.nf(TensorPoly::pure({a, F}) + TensorPoly::pure({F, a * a})));
      const NcPoly one = h.one();
      CHECK(h.coproduct(x) == h.nf(TensorPoly::pure({one, x}) + TensorPoly::pure({x, a})));
      CHECK(h.counit(x).is_zero());
      CHECK(h.counit(a * b).is_one());
    }
  }

  TEST_CASE("antipode values") {
    HopfAlgebra h(make("Atilde"));
    const HopfPresentation& p = h.presentation();
    const NcPoly a = p.gen("a"), F = p.gen("F"), x = p.element("x");
    const FieldElement r = FieldElement::root(h.field());
    CHECK(h.antipode(a) == h.nf(a * a));
    CHECK(h.antipode(x) == h.nf(-(x * a * a)));
    // S(F) a^2 = -a^2 F and Fa = r aF give S(F) = -rF.
    CHECK(h.antipode(F) == h.nf(-r * F));
  }

  TEST_CASE("centrality and skew-primitivity") {
    HopfAlgebra h(make("Atilde"));
    const HopfPresentation& p = h.presentation();
    const NcPoly F = p.gen("F");
    CHECK(h.is_central(F * F * F));
    CHECK_FALSE(h.is_central(F));
    CHECK(h.is_skew_primitive(F * F * F, Word{}, Word{}));
    CHECK(h.is_skew_primitive(p.element("c"), Word{}, Word{}));
    CHECK(h.is_central(p.element("c")));
  }

  TEST_CASE("Hopf axioms on the catalog") {
    for (const char* field : {"Qr", "F7"})
      for (const char* name : {"Atilde", "A"}) {
        HopfAlgebra h(make(name, field));
        CHECK_MESSAGE(h.check_bialgebra(6).ok(), name << " over " << field);
        CHECK_MESSAGE(h.check_antipode(100, 8).ok(), name << " over " << field);
      }
  }

  TEST_CASE("group algebra of Z3") {
    const HopfPresentation p = parse_presentation(
        "[header]\nfield = Q\n[generators]\na : grouplike\n[rules]\naaa -> 1\n");
    HopfAlgebra h(p);
    CHECK(h.check_bialgebra(4).ok());
    CHECK(h.check_antipode(20, 4).ok());
    CHECK(h.basis(5).size() == 3);
  }

  TEST_CASE("coideal subalgebras") {
    HopfAlgebra h(make("A"));
    const HopfPresentation& p = h.presentation();
    CHECK(h.coideal_subalgebra_check({p.gen("s"), p.gen("t")}).ok());
    CHECK_FALSE(h.coideal_subalgebra_check({p.gen("F")}).ok());
    const auto c = h.hopf_subalgebra_check({p.gen("a"), p.gen("b"), p.gen("F")});
    CHECK(c.finite);
    CHECK(c.dimension == 18);
    CHECK(c.report.ok());
  }

  TEST_CASE("Casimir element") {
    HopfAlgebra h(make("A"));
    const HopfPresentation& p = h.presentation();
    const MinimalPolynomial mp = h.min_poly(p.element("Omega"), 6);
    REQUIRE(mp.coefficients);
    const FieldSpec& f = h.field();
    CHECK(*mp.coefficients == std::vector<FieldElement>{FieldElement(f, mpq_class(2, 27)), FieldElement(f, mpq_class(-1, 3)),
                                                        FieldElement::zero(f), FieldElement::one(f)});
    const NcPoly z = p.element("z");
    CHECK_FALSE(h.nf(z).is_zero());
    CHECK(h.nf(z * z).is_zero());
  }
}

#include "doctest.h"
#include <map>
#include "hopf/catalog.hpp"
#include "hopf/parser.hpp"
#include "hopf/primitives.hpp"

using namespace hopf;

TEST_SUITE("primitives") {
  const FieldSpec qr = FieldSpec::preset("Qr");

  TEST_CASE("skew-primitive dimensions") {
    struct Case {
      std::string algebra;
      std::map<std::string, std::size_t> dims;
    };
    for (const Case& c : {Case{"Atilde", {{"1", 2}, {"a", 2}, {"b", 1}, {"a^2", 0}, {"a*b", 0}, {"a^2*b", 0}}},
                         Case{"A", {{"1", 1}, {"a", 2}, {"b", 1}, {"a^2", 0}, {"a*b", 0}, {"a^2*b", 0}}}}) {
      HopfAlgebra h(build_catalog(c.algebra, qr, preset_parameters(qr, "0,0")));
      const auto gs = grouplike_candidates(h.presentation());
      REQUIRE(gs.size() == 6);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        const PrimitiveSpace space = solve_skew_primitives(h, gs[i], 10);
        const std::string label = h.alphabet().format(gs[i]);
        REQUIRE(c.dims.count(label));
        CHECK_MESSAGE(space.dimension() == c.dims.at(label), c.algebra << " g=" << label);
        CHECK_FALSE(space.certified_beyond_bound);
        for (const NcPoly& v : space.basis) CHECK(h.is_skew_primitive(v, Word{}, gs[i]));
        CHECK(conjugation_closed(h, space));
      }
    }
  }

  TEST_CASE("spanning sets") {
    HopfAlgebra h(build_catalog("Atilde", qr, preset_parameters(qr, "0,0")));
    const HopfPresentation& p = h.presentation();
    const Word a = Word::letter(p.letter("a"));
    const PrimitiveSpace va = solve_skew_primitives(h, a, 10);
    CHECK(same_class_span(h, va, {parse_expression("x", p), parse_expression("axa^2", p)}));
    CHECK_FALSE(same_class_span(h, va, {parse_expression("x", p)}));
    const PrimitiveSpace v1 = solve_skew_primitives(h, Word{}, 10);
    CHECK(same_class_span(h, v1, {parse_expression("x^2 + x^3", p), parse_expression("F^3", p)}));
  }

  TEST_CASE("group-likes") {
    HopfAlgebra h(build_catalog("A", qr, preset_parameters(qr, "0,0")));
    CHECK(check_grouplikes(h).ok());
    CHECK_THROWS_AS(solve_skew_primitives(h, Word::letter(h.presentation().letter("F")), 6), std::invalid_argument);
  }
}

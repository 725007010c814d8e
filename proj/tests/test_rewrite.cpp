#include "doctest.h"
#include "hopf/catalog.hpp"

#include <random>

using namespace hopf;

namespace {

HopfPresentation atilde(const char* field = "Qr") {
  const FieldSpec f = FieldSpec::preset(field);
  return build_catalog("Atilde", f, preset_parameters(f, "0,0"));
}

NcPoly random_element(const HopfPresentation& p, std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(p.alphabet().size()) - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<long> coeff(-3, 3);
  NcPoly f;
  for (int t = 0; t < 3; ++t) {
    Word w;
    for (std::size_t k = len(rng); k > 0; --k) w *= Word::letter(static_cast<Letter>(letter(rng)));
    f.add_term(w, FieldElement(p.field(), coeff(rng)));
  }
  return f;
}

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("normal forms of single rules") {
    const HopfPresentation p = atilde();
    const FieldSpec& f = p.field();
    const Letter a = p.letter("a"), b = p.letter("b"), F = p.letter("F");
    const auto nf = [&](const Word& w) { return normal_form(p.system, NcPoly::monomial(w, FieldElement::one(f))); };
    CHECK(nf(Word::letter(b) * Word::letter(a)) == p.gen("a") * p.gen("b"));
    CHECK(nf(Word::letter(F) * Word::letter(a)) == FieldElement::root(f) * (p.gen("a") * p.gen("F")));
    CHECK(nf(Word::power(b, 2)) == NcPoly::one(f));
  }

  TEST_CASE("catalog systems are confluent") {
    for (const auto& name : catalog_names()) {
      const FieldSpec f = FieldSpec::preset("Qr");
      const HopfPresentation p = build_catalog(name, f, preset_parameters(f, "0,0"));
      const ConfluenceReport rep = check_confluence(p.system);
      CHECK_MESSAGE(rep.confluent(), name);
      CHECK(rep.resolved == rep.ambiguities);
    }
  }

  TEST_CASE("normal form is idempotent and strategy independent") {
    std::mt19937 rng(20240917);
    for (const char* field : {"Qr", "F7"}) {
      const HopfPresentation p = atilde(field);
      for (int i = 0; i < 200; ++i) {
        const NcPoly f = random_element(p, rng, 6);
        const NcPoly left = normal_form(p.system, f, Strategy::leftmost);
        CHECK(normal_form(p.system, left) == left);
        CHECK(normal_form(p.system, f, Strategy::rightmost) == left);
        for (const auto& [w, c] : left.terms()) CHECK(p.system.is_irreducible(w));
      }
    }
  }

  TEST_CASE("rules must decrease") {
    const FieldSpec q = FieldSpec::rational();
    RewriteSystem sys(Alphabet{{"a", "b"}}, MonomialOrder::deglex(2), q);
    CHECK_THROWS_AS(sys.add_rule({Word{0}, NcPoly::monomial(Word{0, 1}, FieldElement::one(q))}), std::invalid_argument);
  }

  TEST_CASE("completion resolves a critical pair") {
    const FieldSpec q = FieldSpec::rational();
    const auto mono = [&](Word w) { return NcPoly::monomial(w, FieldElement::one(q)); };
    // ab -> a, ba -> b: the overlap aba gives aa = a.
    RewriteSystem sys(Alphabet{{"a", "b"}}, MonomialOrder::deglex(2), q,
                      {{Word{0, 1}, mono(Word{0})}, {Word{1, 0}, mono(Word{1})}});
    CHECK_FALSE(check_confluence(sys).confluent());
    const CompletionResult done = complete_system(sys, 6);
    CHECK(done.status == CompletionStatus::complete);
    CHECK(check_confluence(done.system).confluent());
    CHECK(normal_form(done.system, mono(Word{0, 0})) == mono(Word{0}));
  }

  TEST_CASE("basis of the finite quotient D") {
    const FieldSpec f = FieldSpec::preset("Qr");
    const HopfPresentation d = build_catalog("D", f, preset_parameters(f, "0,0"));
    CHECK(basis_is_finite(d.system));
    const BasisEnumeration be = enumerate_basis(d.system, d.system.order().weights().front(), 64);
    REQUIRE(be.total);
    CHECK(*be.total == 108);
  }

  TEST_CASE("right B-module basis of Atilde") {
    // Irreducible words are a^i b^j F^l followed by s^m t^n, n <= 1.
    const HopfPresentation p = atilde();
    const std::vector<int>& wt = p.system.order().weights().front();
    const Letter a = p.letter("a"), b = p.letter("b"), F = p.letter("F"), s = p.letter("s"), t = p.letter("t");
    for (const Word& w : enumerate_basis(p.system, wt, 10).words) {
      std::size_t k = 0;
      auto run = [&](Letter g, std::size_t limit) {
        std::size_t n = 0;
        while (k < w.size() && w[k] == g && n < limit) ++k, ++n;
      };
      run(a, 2);
      run(b, 1);
      run(F, 64);
      run(s, 64);
      run(t, 1);
      CHECK(k == w.size());
    }
  }
}

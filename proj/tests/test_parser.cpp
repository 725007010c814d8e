#include "doctest.h"
#include "hopf/catalog.hpp"
#include "hopf/parser.hpp"

#include <random>

using namespace hopf;

namespace {

HopfPresentation make(const char* name, const char* field = "Qr", const char* pq = "0,0") {
  const FieldSpec f = FieldSpec::preset(field);
  return build_catalog(name, f, preset_parameters(f, pq));
}

const char* kHeader = "[header]\nfield = Qr\np = 6\nq = 3\n[generators]\na : grouplike\n[rules]\naaa -> 1\n";

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("expression examples") {
    const HopfPresentation p = make("Atilde-rfree");
    const NcPoly f = parse_expression("x*a + (r+1)*a*x + ((r+2)/3)*(a - a^2)", p);
    CHECK(f == p.element("Fdef"));
    const NcPoly a = p.gen("a");
    CHECK(parse_expression("a^3 - 1", p) == a * a * a - NcPoly::one(p.field()));
    CHECK(parse_expression("axa^2", p) == a * p.gen("x") * a * a);
    CHECK(parse_expression("-x", p) == -p.gen("x"));
    CHECK(parse_expression("2/4*x", p) == FieldElement(p.field(), mpq_class(1, 2)) * p.gen("x"));
  }

  TEST_CASE("positioned errors") {
    const HopfPresentation p = make("Atilde");
    auto offset_of = [&](const char* text) -> long {
      try {
        parse_expression(text, p);
      } catch (const ParseError& e) {
        return static_cast<long>(e.offset());
      }
      return -1;
    };
    CHECK(offset_of("x + ") == 4);
    CHECK(offset_of("(a + b") == 6);
    CHECK(offset_of("a + q2") == 4);
    CHECK(offset_of("a + w") == 4);
    CHECK(offset_of("a / x") == 4);
    CHECK(offset_of("a^") == 2);
    CHECK(offset_of("a )") == 2);
  }

  TEST_CASE("print then parse round-trips") {
    std::mt19937 rng(5);
    for (const char* field : {"Qr", "F7"}) {
      const HopfPresentation p = make("Atilde", field);
      HopfAlgebra h(p);
      std::uniform_int_distribution<int> letter(0, 4);
      std::uniform_int_distribution<int> len(0, 5);
      std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
      for (int i = 0; i < 250; ++i) {
        NcPoly f;
        for (int t = 0; t < 4; ++t) {
          Word w;
          for (int k = len(rng); k > 0; --k) w *= Word::letter(static_cast<Letter>(letter(rng)));
          FieldElement c(p.field(), mpq_class(num(rng), den(rng)));
          c += FieldElement(p.field(), num(rng)) * FieldElement::root(p.field());
          f.add_term(w, c);
        }
        const std::string text = f.format(p.alphabet());
        CHECK_MESSAGE(parse_expression(text, p) == f, text);
      }
    }
  }

  TEST_CASE("shipped files equal the built-in catalog") {
    for (const char* field : {"Qr", "F7", "F13"})
      for (const char* pq : {"0,0", "6,3"})
        for (const auto& name : catalog_names()) {
          const HopfPresentation built = make(name.c_str(), field, pq);
          LoadOptions opts;
          opts.field = FieldSpec::preset(field);
          opts.pq = std::string(pq) == "0,0" ? std::pair<long, long>{0, 0} : std::pair<long, long>{6, 3};
          const HopfPresentation loaded = load_presentation(data_directory() + "/" + name + ".hpf", opts);
          CHECK_MESSAGE(loaded.system == built.system, name << " " << field << " " << pq);
          CHECK(loaded.tags == built.tags);
          for (const auto& [key, value] : built.named) CHECK_MESSAGE(loaded.element(key) == value, name << "." << key);
        }
  }

  TEST_CASE("r-free file over Q") {
    const HopfPresentation loaded = load_presentation(data_directory() + "/Atilde-rfree.hpf");
    const FieldSpec q = FieldSpec::rational();
    CHECK(loaded.field() == q);
    CHECK(loaded.system == build_catalog("Atilde-rfree", q, Parameters::make(q, 0, 0)).system);
    CHECK_FALSE(loaded.named.count("E"));
  }

  TEST_CASE("parameter constraint") {
    CHECK_NOTHROW(parse_presentation(kHeader));
    LoadOptions bad;
    bad.pq = std::pair<long, long>{1, 1};
    CHECK_THROWS_AS(parse_presentation(kHeader, bad), PresentationError);
  }

  TEST_CASE("presentation errors carry lines") {
    auto line_of = [](const std::string& text) -> long {
      try {
        parse_presentation(text, {}, "t.hpf");
      } catch (const PresentationError& e) {
        return static_cast<long>(e.line());
      }
      return -1;
    };
    CHECK(line_of("[header]\nfield = Q7\n") == 2);
    CHECK(line_of("[header]\nfield = Q\n[generators]\na : grouplike\n[rules]\na -> aa\n") == 6);
    CHECK(line_of("[header]\nfield = Q\n[generators]\na : grouplike\n[relations]\n1 = 0\n") == 6);
    CHECK(line_of("[header]\nfield = Q\n[bogus]\n") == 3);
    CHECK(line_of("[header]\nfield = Q\n[generators]\na : grouplike\n[aliases]\nz = a + w\n") == 6);
  }
}

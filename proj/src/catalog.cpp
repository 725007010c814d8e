#include "hopf/catalog.hpp"

namespace hopf {

namespace {

// Small expression kit over a fixed alphabet and field.
struct Kit {
  FieldSpec field;
  Alphabet alphabet;

  NcPoly g(std::string_view name) const {
    auto letter = alphabet.find(name);
    if (!letter) throw std::logic_error("catalog: unknown generator " + std::string(name));
    return NcPoly::monomial(Word::letter(*letter), FieldElement::one(field));
  }
  FieldElement k(long v) const { return FieldElement(field, v); }
  FieldElement frac(long n, long d) const { return FieldElement(field, mpq_class(n, d)); }
  FieldElement r() const { return FieldElement::root(field); }
  NcPoly c(const FieldElement& v) const { return NcPoly::constant(v); }
  NcPoly c(long v) const { return NcPoly::constant(k(v)); }
  Word w(std::string_view names) const {
    Word out;
    for (char ch : names) out *= Word::letter(*alphabet.find(std::string(1, ch)));
    return out;
  }
};

NcPoly square(const NcPoly& f) { return f * f; }
NcPoly cube(const NcPoly& f) { return f * f * f; }

// Elements shared by every presentation containing a, b and an x.
void add_common_named(const Kit& kit, const NcPoly& x, const NcPoly& y, std::map<std::string, NcPoly>& named) {
  const NcPoly a = kit.g("a");
  const NcPoly xa = x * a;
  named["x"] = x;
  named["y"] = y;
  // Central primitive element replacing F^3 over arbitrary fields.
  named["c"] = cube(xa) + kit.k(2) * (a * square(xa) * x) + a * square(xa) - kit.k(3) * (a * a * xa * x * x) -
               kit.k(2) * (a * a * xa * x) - xa * x + a * x * x + a * x - kit.k(2) * (x * x) - kit.k(2) * x;
  named["x2x3"] = square(x) + cube(x);
}

void add_root_named(const Kit& kit, const NcPoly& F, std::map<std::string, NcPoly>& named) {
  const NcPoly a = kit.g("a");
  const NcPoly& x = named.at("x");
  const FieldElement r = kit.r();
  const FieldElement r2 = r * r;
  const NcPoly a2 = a * a;
  named["Fdef"] = x * a + (r + kit.k(1)) * (a * x) + ((r + kit.k(2)) / kit.k(3)) * (a - a2);
  named["E"] = x * a - r * (a * x) + ((kit.k(1) - r) / kit.k(3)) * (a - a2);
  named["K"] = a2;
  const NcPoly& E = named.at("E");
  const NcPoly& K = named.at("K");
  const FieldElement denom = (r - r2) * (r - r2);
  named["Omega"] = E * F + (kit.k(1) / denom) * (r2 * K + r * (K * K));
  const NcPoly& omega = named.at("Omega");
  named["z"] = (omega - kit.c(kit.frac(1, 3))) * (omega + kit.c(kit.frac(2, 3)));
}

Alphabet f_alphabet() { return Alphabet{{"a", "b", "F", "s", "t"}}; }

RewriteSystem atilde_rules(const Kit& kit, const Parameters& pq) {
  const NcPoly a = kit.g("a"), b = kit.g("b"), F = kit.g("F"), s = kit.g("s"), t = kit.g("t");
  const FieldElement r = kit.r();
  const FieldElement one = kit.k(1);
  const FieldElement three = kit.k(3);
  const FieldElement& p = pq.p;
  const FieldElement& q = pq.q;
  const FieldElement shift = one + three * q;  // 1 + 3q

  std::vector<RewriteRule> rules;
  auto rule = [&](std::string_view lhs, NcPoly rhs) { rules.push_back({kit.w(lhs), std::move(rhs)}); };
  rule("ba", a * b);
  rule("bb", kit.c(1));
  rule("aaa", kit.c(1));
  rule("Fa", r * (a * F));
  rule("Fb", b * F);
  rule("sa", -(r + one) * (a * s) + F + ((r + kit.k(2)) / three) * (shift * (a * a) - a));
  rule("sb", b * s);
  rule("sF", r * (F * s) + (shift / three * (r + kit.k(2))) * (a * F) + ((r - one) / three) * F +
                 (one / three) * (a - kit.c(1)));
  rule("ta", a * t);
  rule("tb", -(b * t) + kit.c(kit.k(2) * p));
  rule("tF", F * t);
  rule("ts", s * t);
  rule("tt", s * s + s * s * s);
  return RewriteSystem(kit.alphabet, f_presentation_order(), kit.field, std::move(rules));
}

std::vector<CoalgebraTag> f_tags(const Kit& kit, const Parameters& pq) {
  return {CoalgebraTag::grouplike(), CoalgebraTag::grouplike(), CoalgebraTag::skew(kit.w("a"), kit.w("aa")),
          CoalgebraTag::skew(Word{}, kit.w("a"), pq.q, kit.w("a")),
          CoalgebraTag::skew(Word{}, kit.w("b"), pq.p, kit.w("b"))};
}

HopfPresentation f_presentation(std::string name, const Kit& kit, const Parameters& pq, RewriteSystem sys) {
  HopfPresentation h{std::move(name), std::move(sys), f_tags(kit, pq), {}, pq, {}};
  const NcPoly x = kit.g("s") - pq.q * kit.g("a");
  const NcPoly y = kit.g("t") - pq.p * kit.g("b");
  add_common_named(kit, x, y, h.named);
  add_root_named(kit, kit.g("F"), h.named);
  return h;
}

RewriteSystem with_relations(RewriteSystem sys, const std::vector<NcPoly>& relations) {
  for (const auto& rel : relations) sys.add_relation(normal_form(sys, rel));
  sys.interreduce();
  if (!check_confluence(sys).confluent()) sys = complete_system(sys, kCatalogCompletionDegree).system;
  return sys;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"Atilde", "A", "Agen", "D", "B", "Atilde-rfree"};
  return names;
}

Parameters preset_parameters(const FieldSpec& field, std::string_view name) {
  if (name == "0,0") return Parameters::make(field, 0, 0);
  if (name == "6,3") return Parameters::make(field, 6, 3);
  throw std::invalid_argument("unknown parameter preset '" + std::string(name) + "' (expected 0,0 or 6,3)");
}

MonomialOrder f_presentation_order() {
  // Grading a,b -> 0; F,s -> 2; t -> 3. Ties are broken by the number of
  // group-like letters, then by the number of F letters, then
  // lexicographically with a < b < F < s < t.
  return MonomialOrder({{0, 0, 2, 2, 3}, {1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
}

MonomialOrder rfree_order() { return MonomialOrder({{0, 0, 2, 3}, {1, 1, 0, 0}}); }

HopfPresentation build_catalog(std::string_view name, const FieldSpec& field, const Parameters& pq) {
  pq.validate();
  if (name == "B") {
    Kit kit{field, Alphabet{{"s", "t"}}};
    const NcPoly s = kit.g("s"), t = kit.g("t");
    std::vector<RewriteRule> rules{{kit.w("ts"), s * t}, {kit.w("tt"), s * s + s * s * s}};
    RewriteSystem sys(kit.alphabet, MonomialOrder({{2, 3}}), field, std::move(rules));
    return HopfPresentation{"B", std::move(sys), {}, {}, pq, {}};
  }
  if (name == "Atilde-rfree") {
    Kit kit{field, Alphabet{{"a", "b", "x", "y"}}};
    const NcPoly a = kit.g("a"), b = kit.g("b"), x = kit.g("x"), y = kit.g("y");
    const std::vector<NcPoly> relations{
        b * a - a * b,
        y * a - a * y,
        b * x - x * b,
        y * x - x * y,
        b * y + y * b,
        a * a * x + a * x * a + x * a * a + a * a - kit.c(1),
        x * x * a + x * a * x + a * x * x + x * a + a * x,
        y * y - x * x - x * x * x,
        b * b - kit.c(1),
        a * a * a - kit.c(1),
    };
    RewriteSystem sys = with_relations(RewriteSystem(kit.alphabet, rfree_order(), field), relations);
    std::vector<CoalgebraTag> tags{CoalgebraTag::grouplike(), CoalgebraTag::grouplike(),
                                   CoalgebraTag::skew(Word{}, kit.w("a")), CoalgebraTag::skew(Word{}, kit.w("b"))};
    HopfPresentation h{"Atilde-rfree", std::move(sys), std::move(tags), {}, pq, {}};
    add_common_named(kit, x, y, h.named);
    h.named["s"] = x + pq.q * a;
    h.named["t"] = y + pq.p * b;
    if (field.has_root()) {
      const NcPoly F = x * a + (kit.r() + kit.k(1)) * (a * x) + ((kit.r() + kit.k(2)) / kit.k(3)) * (a - a * a);
      add_root_named(kit, F, h.named);
    }
    return h;
  }

  if (!field.has_root())
    throw FieldError("catalog algebra " + std::string(name) + " needs a primitive cube root of unity");
  Kit kit{field, f_alphabet()};
  RewriteSystem atilde = atilde_rules(kit, pq);
  if (name == "Atilde") return f_presentation("Atilde", kit, pq, std::move(atilde));

  const NcPoly F = kit.g("F");
  const NcPoly x = kit.g("s") - pq.q * kit.g("a");
  if (name == "A") return f_presentation("A", kit, pq, with_relations(std::move(atilde), {F * F * F}));
  if (name == "Agen") {
    std::map<std::string, NcPoly> named;
    add_common_named(kit, x, kit.g("t") - pq.p * kit.g("b"), named);
    return f_presentation("Agen", kit, pq, with_relations(std::move(atilde), {named.at("c")}));
  }
  if (name == "D") return f_presentation("D", kit, pq, with_relations(std::move(atilde), {F * F * F, x * x + x * x * x}));
  throw std::invalid_argument("unknown catalog algebra '" + std::string(name) + "'");
}

}  // namespace hopf

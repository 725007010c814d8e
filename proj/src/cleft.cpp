#include "hopf/cleft.hpp"

#include <random>
#include <sstream>

namespace hopf {

namespace {

void add_to(SparseVector<Word>& target, const Word& w, const FieldElement& c) {
  auto [it, inserted] = target.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) target.erase(it);
  }
}

NcPoly as_poly(const SparseVector<Word>& v) {
  NcPoly out;
  for (const auto& [w, c] : v) out.add_term(w, c);
  return out;
}

}  // namespace

std::string XaClass::label() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += "*";
    out += part;
  };
  if (i == 1) append("a");
  if (i == 2) append("a^2");
  if (j == 1) append("b");
  if (l == 1) append("xa");
  if (l == 2) append("(xa)^2");
  return "[" + (out.empty() ? std::string("1") : out) + "]";
}

QuotientCoalgebra::QuotientCoalgebra(HopfAlgebra& ambient) : h_(ambient) {
  const HopfPresentation& p = h_.presentation();
  if (!p.has_coalgebra() || !p.params) throw std::invalid_argument("quotient coalgebra needs a Hopf presentation with (p, q)");
  if (!p.params->p.is_zero() || !p.params->q.is_zero())
    throw std::invalid_argument("quotient coalgebra is defined at (p, q) = (0, 0) only");
  a_ = p.letter("a");
  b_ = p.letter("b");
  f_ = p.letter("F");
  s_ = p.letter("s");
  t_ = p.letter("t");
  if (h_.system().is_irreducible(Word::power(f_, 3)))
    throw std::invalid_argument(p.name + ": F^3 is irreducible, A/AB+ is infinite-dimensional");
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) f_classes_.push_back(Word::power(a_, i) * Word::power(b_, j) * Word::power(f_, l));
  for (const XaClass& c : xa_classes()) xa_vectors_.push_back(class_vector(c));
}

std::vector<XaClass> QuotientCoalgebra::xa_classes() {
  std::vector<XaClass> out;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) out.push_back({i, j, l});
  return out;
}

bool QuotientCoalgebra::trivial_b_part(const Word& w) const {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] == s_ || w[k] == t_) return false;
  return true;
}

SparseVector<Word> QuotientCoalgebra::project(const NcPoly& f) {
  SparseVector<Word> out;
  const NcPoly reduced = h_.nf(f);
  for (const auto& [w, c] : reduced.terms())
    if (trivial_b_part(w)) add_to(out, w, c);
  return out;
}

TensorPoly QuotientCoalgebra::project_left(const TensorPoly& t) {
  TensorPoly out(2);
  const TensorPoly reduced = h_.nf(t);
  for (const auto& [key, c] : reduced.terms())
    if (trivial_b_part(key[0])) out.add_term(key, c);
  return out;
}

TensorPoly QuotientCoalgebra::project_both(const TensorPoly& t) {
  TensorPoly out(2);
  const TensorPoly reduced = h_.nf(t);
  for (const auto& [key, c] : reduced.terms())
    if (trivial_b_part(key[0]) && trivial_b_part(key[1])) out.add_term(key, c);
  return out;
}

const TensorPoly& QuotientCoalgebra::delta_quot(const Word& f_class) {
  if (auto it = delta_cache_.find(f_class); it != delta_cache_.end()) return it->second;
  return delta_cache_.emplace(f_class, project_both(h_.coproduct(f_class))).first->second;
}

TensorPoly QuotientCoalgebra::delta_quot(const SparseVector<Word>& v) {
  TensorPoly out(2);
  for (const auto& [w, c] : v) out += c * delta_quot(w);
  return out;
}

NcPoly QuotientCoalgebra::representative(const XaClass& c) const {
  const NcPoly xa = h_.presentation().element("x") * h_.presentation().gen("a");
  NcPoly out = h_.word(Word::power(a_, c.i) * Word::power(b_, c.j));
  for (int k = 0; k < c.l; ++k) out = out * xa;
  return out;
}

SparseVector<Word> QuotientCoalgebra::class_vector(const XaClass& c) { return project(representative(c)); }

Vector QuotientCoalgebra::xa_coordinates(const SparseVector<Word>& v) {
  std::vector<SparseVector<Word>> vectors = xa_vectors_;
  vectors.push_back(v);
  const auto relations = linear_dependencies(h_.field(), vectors);
  for (const auto& rel : relations) {
    if (rel.back().is_zero()) continue;
    const FieldElement scale = -rel.back().inverse();
    Vector out;
    for (std::size_t k = 0; k + 1 < rel.size(); ++k) out.push_back(scale * rel[k]);
    return out;
  }
  throw std::runtime_error("class vector outside the (xa)-basis span");
}

NcPoly QuotientCoalgebra::gamma(const XaClass& c) const {
  if (c.i < 0 || c.i > 2 || c.j < 0 || c.j > 1 || c.l < 0 || c.l > 2)
    throw std::invalid_argument("unknown quotient class (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                                std::to_string(c.l) + ")");
  const HopfPresentation& p = h_.presentation();
  const NcPoly a = p.gen("a");
  const NcPoly x = p.element("x");
  const NcPoly xa = x * a;
  const NcPoly g = h_.word(Word::power(a_, c.i) * Word::power(b_, c.j));
  if (c.l == 0) return g;
  if (c.l == 1) return g * xa;
  return g * (xa * xa - a * x * a * x);
}

NcPoly QuotientCoalgebra::gamma(const SparseVector<Word>& v) {
  const Vector coords = xa_coordinates(v);
  const auto classes = xa_classes();
  NcPoly out;
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (!coords[k].is_zero()) out += coords[k] * gamma(classes[k]);
  return h_.nf(out);
}

CheckReport QuotientCoalgebra::check_section() {
  CheckReport report;
  for (const XaClass& c : xa_classes()) {
    ++report.checked;
    if (project(gamma(c)) != class_vector(c)) report.fail("pi(gamma" + c.label() + ") != " + c.label());
  }
  return report;
}

CheckReport QuotientCoalgebra::check_colinearity() {
  CheckReport report;
  for (const XaClass& c : xa_classes()) {
    ++report.checked;
    const TensorPoly lhs = project_left(h_.coproduct(h_.nf(gamma(c))));
    TensorPoly rhs(2);
    const TensorPoly delta = delta_quot(class_vector(c));
    for (const auto& [key, coeff] : delta.terms()) {
      const NcPoly right = gamma(SparseVector<Word>{{key[1], FieldElement::one(h_.field())}});
      rhs += coeff * TensorPoly::pure({h_.word(key[0]), right});
    }
    if (!(lhs == h_.nf(rhs))) report.fail("gamma not colinear on " + c.label());
  }
  return report;
}

CheckReport QuotientCoalgebra::check_coradical_inverse() {
  CheckReport report;
  for (const XaClass& c : xa_classes()) {
    if (c.l != 0) continue;
    ++report.checked;
    const Word g = Word::power(a_, c.i) * Word::power(b_, c.j);
    const TensorPoly delta = delta_quot(class_vector(c));
    const TensorPoly expected = h_.nf(TensorPoly::pure({h_.word(g), h_.word(g)}));
    if (!(delta == expected)) {
      report.fail(c.label() + " is not group-like in A/AB+");
      continue;
    }
    const NcPoly gam = gamma(c);
    const NcPoly inv = h_.grouplike_inverse(g);
    if (!(h_.mul(gam, inv) == h_.one()) || !(h_.mul(inv, gam) == h_.one()))
      report.fail("convolution inverse fails on " + c.label());
  }
  return report;
}

CheckReport QuotientCoalgebra::check_coalgebra_map(int max_weight) {
  CheckReport report;
  for (const Word& w : h_.basis(max_weight)) {
    ++report.checked;
    const SparseVector<Word> image = project(h_.word(w));
    if (!(delta_quot(image) == project_both(h_.coproduct(w))))
      report.fail("Delta_quot(pi(" + h_.alphabet().format(w) + ")) != (pi (x) pi) Delta");
    FieldElement eps = FieldElement::zero(h_.field());
    for (const auto& [u, c] : image) eps += c * h_.counit(u);
    if (eps != h_.counit(w)) report.fail("counit does not factor through pi on " + h_.alphabet().format(w));
  }
  return report;
}

CheckReport QuotientCoalgebra::check_coideal(std::size_t samples, int max_weight) {
  CheckReport report;
  const std::vector<Word> words = h_.basis(max_weight);
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t k = 0; k < samples; ++k) {
    NcPoly f;
    for (int term = 0; term < 3; ++term) f.add_term(words[pick(rng)], FieldElement(h_.field(), coeff(rng)));
    for (Letter gen : {s_, t_}) {
      ++report.checked;
      const NcPoly prod = h_.mul(f, h_.word(Word::letter(gen)));
      if (!project_both(h_.coproduct(prod)).is_zero())
        report.fail("(pi (x) pi) Delta(f*" + h_.alphabet().names[gen] + ") != 0 for f = " + h_.format(f));
    }
  }
  return report;
}

CheckReport QuotientCoalgebra::check_injective_on_c() {
  CheckReport report;
  SparseSpan<Word> span(h_.field());
  for (const Word& w : f_classes_) {
    ++report.checked;
    if (!span.insert(project(h_.word(w)))) report.fail("pi(" + h_.alphabet().format(w) + ") is dependent");
  }
  return report;
}

std::string QuotientCoalgebra::format(const SparseVector<Word>& v) const {
  return "[" + as_poly(v).format(h_.alphabet()) + "]";
}

}  // namespace hopf

#include "hopf/hopfcore.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hopf {

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << checked << " checked, " << failures.size() << " failed";
  for (std::size_t i = 0; i < failures.size() && i < 3; ++i) out << "; " << failures[i];
  if (failures.size() > 3) out << "; ...";
  return out.str();
}

Parameters Parameters::make(const FieldSpec& field, long p, long q) {
  Parameters out{FieldElement(field, p), FieldElement(field, q)};
  out.validate();
  return out;
}

void Parameters::validate() const {
  if (p * p != q * q + q * q * q)
    throw std::invalid_argument("parameters violate p^2 = q^2 + q^3 (p=" + p.to_string() + ", q=" + q.to_string() + ")");
}

NcPoly HopfPresentation::element(const std::string& key) const {
  if (auto it = named.find(key); it != named.end()) return it->second;
  if (alphabet().find(key)) return gen(key);
  throw std::invalid_argument("no named element '" + key + "' in " + name);
}

Letter HopfPresentation::letter(std::string_view generator) const {
  auto g = alphabet().find(generator);
  if (!g) throw std::invalid_argument("no generator '" + std::string(generator) + "' in " + name);
  return *g;
}

NcPoly HopfPresentation::gen(std::string_view generator) const {
  return NcPoly::monomial(Word::letter(letter(generator)), FieldElement::one(field()));
}

std::string MinimalPolynomial::format() const {
  if (!coefficients) return "independent up to degree " + std::to_string(searched_degree);
  std::string out;
  const auto& cs = *coefficients;
  for (std::size_t k = cs.size(); k-- > 0;) {
    const FieldElement& c = cs[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    bool negative = false;
    std::string coeff = c.to_string();
    if (c.field().kind != FieldKind::prime && c.is_rational()) {
      negative = c.rational_value() < 0;
      coeff = mpq_class(abs(c.rational_value())).get_str();
    }
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

SparseVector<Word> to_sparse(const NcPoly& f) { return SparseVector<Word>(f.terms().begin(), f.terms().end()); }

// ---------------------------------------------------------------------------

HopfAlgebra::HopfAlgebra(HopfPresentation presentation)
    : pres_(std::move(presentation)), reducer_(pres_.system), antipode_images_(pres_.alphabet().size()) {
  if (pres_.has_coalgebra() && pres_.tags.size() != pres_.alphabet().size())
    throw std::invalid_argument("coalgebra tags do not cover every generator");
}

NcPoly HopfAlgebra::pow(const NcPoly& f, unsigned n) {
  NcPoly out = one();
  const NcPoly base = nf(f);
  for (unsigned i = 0; i < n; ++i) out = mul(out, base);
  return out;
}

TensorPoly HopfAlgebra::nf(const TensorPoly& t) {
  return t.map_slots([this](const Word& w) { return reducer_.reduce_word(w); });
}

bool HopfAlgebra::is_grouplike_word(const Word& w) const {
  if (!pres_.has_coalgebra()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (pres_.tags[w[i]].kind != CoalgebraTag::Kind::grouplike) return false;
  return true;
}

NcPoly HopfAlgebra::grouplike_inverse(const Word& w) {
  if (!is_grouplike_word(w)) throw std::invalid_argument("word is not group-like: " + alphabet().format(w));
  constexpr unsigned kMaxOrder = 64;
  NcPoly out = one();
  for (std::size_t i = w.size(); i-- > 0;) {
    const NcPoly g = word(Word::letter(w[i]));
    NcPoly power = g;
    NcPoly previous = one();
    unsigned k = 1;
    for (; k <= kMaxOrder; ++k) {
      if (nf(power) == one()) break;
      previous = nf(power);
      power = mul(power, g);
    }
    if (k > kMaxOrder)
      throw std::runtime_error("group-like generator " + alphabet().names[w[i]] + " is not invertible (no finite order)");
    out = mul(out, previous);
  }
  return out;
}

TensorPoly HopfAlgebra::coproduct_image(Letter g) const {
  if (!pres_.has_coalgebra()) throw std::logic_error(pres_.name + " has no coalgebra structure");
  const CoalgebraTag& tag = pres_.tags.at(g);
  const FieldElement one_k = FieldElement::one(field());
  const NcPoly v = NcPoly::monomial(Word::letter(g), one_k);
  if (tag.kind == CoalgebraTag::Kind::grouplike) return TensorPoly::pure({v, v});
  NcPoly core = v;
  if (tag.offset) core -= NcPoly::monomial(tag.shift, *tag.offset);
  TensorPoly out = TensorPoly::pure({NcPoly::monomial(tag.left, one_k), core});
  out += TensorPoly::pure({core, NcPoly::monomial(tag.right, one_k)});
  if (tag.offset)
    out += *tag.offset * TensorPoly::pure({NcPoly::monomial(tag.shift, one_k), NcPoly::monomial(tag.shift, one_k)});
  return out;
}

const TensorPoly& HopfAlgebra::coproduct(const Word& w) {
  if (auto it = coproduct_cache_.find(w); it != coproduct_cache_.end()) return it->second;
  TensorPoly value(2);
  if (w.empty()) {
    value = TensorPoly::one(2, field());
  } else {
    const Word head = w.substr(0, w.size() - 1);
    value = nf(TensorPoly::multiply(coproduct(head), nf(coproduct_image(w[w.size() - 1]))));
  }
  return coproduct_cache_.emplace(w, std::move(value)).first->second;
}

TensorPoly HopfAlgebra::coproduct(const NcPoly& f) {
  TensorPoly out(2);
  for (const auto& [w, c] : f.terms()) out += c * coproduct(w);
  return out;
}

FieldElement HopfAlgebra::counit(const Word& w) const {
  if (!pres_.has_coalgebra()) throw std::logic_error(pres_.name + " has no coalgebra structure");
  FieldElement out = FieldElement::one(field());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const CoalgebraTag& tag = pres_.tags[w[i]];
    if (tag.kind == CoalgebraTag::Kind::grouplike) continue;
    out *= tag.offset ? *tag.offset : FieldElement::zero(field());
  }
  return out;
}

FieldElement HopfAlgebra::counit(const NcPoly& f) const {
  FieldElement out = FieldElement::zero(field());
  for (const auto& [w, c] : f.terms()) out += c * counit(w);
  return out;
}

NcPoly HopfAlgebra::antipode_image(Letter g) {
  if (!pres_.has_coalgebra()) throw std::logic_error(pres_.name + " has no coalgebra structure");
  if (auto it = pres_.antipode_override.find(g); it != pres_.antipode_override.end()) return it->second;
  if (antipode_images_.at(g)) return *antipode_images_[g];
  const CoalgebraTag& tag = pres_.tags[g];
  NcPoly image;
  if (tag.kind == CoalgebraTag::Kind::grouplike) {
    image = grouplike_inverse(Word::letter(g));
  } else {
    // S(v') = -left^-1 v' right^-1 for the skew-primitive part v'.
    NcPoly core = word(Word::letter(g));
    if (tag.offset) core -= NcPoly::monomial(tag.shift, *tag.offset);
    image = -mul(mul(grouplike_inverse(tag.left), core), grouplike_inverse(tag.right));
    if (tag.offset) image += *tag.offset * grouplike_inverse(tag.shift);
    image = nf(image);
  }
  antipode_images_[g] = image;
  return image;
}

const NcPoly& HopfAlgebra::antipode(const Word& w) {
  if (auto it = antipode_cache_.find(w); it != antipode_cache_.end()) return it->second;
  NcPoly value;
  if (w.empty()) {
    value = one();
  } else {
    const Word head = w.substr(0, w.size() - 1);
    value = mul(antipode_image(w[w.size() - 1]), antipode(head));
  }
  return antipode_cache_.emplace(w, std::move(value)).first->second;
}

NcPoly HopfAlgebra::antipode(const NcPoly& f) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) out += c * antipode(w);
  return out;
}

TensorPoly HopfAlgebra::coproduct_slot(const TensorPoly& t, int slot) {
  return t.expand_slot(slot, [this](const Word& w) { return coproduct(w); });
}

bool HopfAlgebra::is_central(const NcPoly& f) {
  const NcPoly g = nf(f);
  for (std::size_t i = 0; i < alphabet().size(); ++i) {
    const NcPoly x = word(Word::letter(static_cast<Letter>(i)));
    if (!nf(g * x - x * g).is_zero()) return false;
  }
  return true;
}

bool HopfAlgebra::is_skew_primitive(const NcPoly& f, const Word& left, const Word& right) {
  const NcPoly g = nf(f);
  const FieldElement one_k = FieldElement::one(field());
  TensorPoly expected = TensorPoly::pure({NcPoly::monomial(left, one_k), g});
  expected += TensorPoly::pure({g, NcPoly::monomial(right, one_k)});
  return coproduct(g) == nf(expected);
}

bool HopfAlgebra::verify_identity(const NcPoly& lhs, const NcPoly& rhs) { return nf(lhs - rhs).is_zero(); }

MinimalPolynomial HopfAlgebra::min_poly(const NcPoly& f, int max_degree) {
  MinimalPolynomial out;
  out.searched_degree = max_degree;
  const NcPoly base = nf(f);
  std::vector<SparseVector<Word>> powers{to_sparse(one())};
  NcPoly current = one();
  for (int d = 1; d <= max_degree; ++d) {
    current = mul(current, base);
    powers.push_back(to_sparse(current));
    const auto deps = linear_dependencies(field(), powers);
    if (deps.empty()) continue;
    // Lower powers are independent, so the single relation involves f^d.
    Vector rel = deps.front();
    const FieldElement lead = rel.back();
    for (auto& c : rel) c = c / lead;
    out.coefficients = std::move(rel);
    return out;
  }
  return out;
}

std::vector<Word> HopfAlgebra::basis(int max_weight) const {
  return enumerate_basis(system(), grading(), max_weight).words;
}

// ---------------------------------------------------------------------------

CheckReport HopfAlgebra::check_bialgebra(int max_weight) {
  CheckReport report;
  if (!pres_.has_coalgebra()) {
    report.fail(pres_.name + " has no coalgebra structure");
    return report;
  }
  for (const auto& rule : system().rules()) {
    const std::string label = alphabet().format(rule.lhs) + " -> " + format(rule.rhs);
    ++report.checked;
    TensorPoly delta = coproduct(rule.lhs) - coproduct(rule.rhs);
    if (!delta.is_zero()) report.fail("coproduct does not respect " + label + ": residue " + format(delta));
    const FieldElement eps = counit(rule.lhs) - counit(rule.rhs);
    if (!eps.is_zero()) report.fail("counit does not respect " + label);
  }

  std::vector<Word> words;
  for (std::size_t g = 0; g < alphabet().size(); ++g) words.push_back(Word::letter(static_cast<Letter>(g)));
  for (auto& w : basis(max_weight)) words.push_back(std::move(w));
  for (const Word& w : words) {
    ++report.checked;
    const TensorPoly& d = coproduct(w);
    TensorPoly left = nf(coproduct_slot(d, 0));
    TensorPoly right = nf(coproduct_slot(d, 1));
    if (left != right) report.fail("coassociativity fails on " + alphabet().format(w));
    NcPoly eps_left, eps_right;
    for (const auto& [key, c] : d.terms()) {
      eps_left += (c * counit(key[0])) * word(key[1]);
      eps_right += (c * counit(key[1])) * word(key[0]);
    }
    const NcPoly target = nf(w);
    if (eps_left != target || eps_right != target) report.fail("counit law fails on " + alphabet().format(w));
  }
  return report;
}

CheckReport HopfAlgebra::check_antipode(std::size_t samples, int max_weight) {
  CheckReport report;
  if (!pres_.has_coalgebra()) {
    report.fail(pres_.name + " has no coalgebra structure");
    return report;
  }
  std::vector<Word> words;
  for (std::size_t g = 0; g < alphabet().size(); ++g) words.push_back(Word::letter(static_cast<Letter>(g)));
  std::vector<Word> pool = basis(max_weight);
  std::mt19937 rng(20240917);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > samples) pool.resize(samples);
  words.insert(words.end(), pool.begin(), pool.end());

  for (const Word& w : words) {
    ++report.checked;
    const TensorPoly& d = coproduct(w);
    NcPoly left, right;
    for (const auto& [key, c] : d.terms()) {
      left += c * (antipode(key[0]) * word(key[1]));
      right += c * (word(key[0]) * antipode(key[1]));
    }
    const NcPoly expected = NcPoly::constant(counit(w));
    if (nf(left) != expected) report.fail("m(S (x) id)Delta != eps on " + alphabet().format(w));
    if (nf(right) != expected) report.fail("m(id (x) S)Delta != eps on " + alphabet().format(w));
  }
  for (const auto& rule : system().rules()) {
    ++report.checked;
    const NcPoly residue = nf(antipode(rule.lhs) - antipode(rule.rhs));
    if (!residue.is_zero())
      report.fail("antipode does not respect " + alphabet().format(rule.lhs) + " -> " + format(rule.rhs));
  }
  return report;
}

CheckReport HopfAlgebra::coideal_subalgebra_check(const std::vector<NcPoly>& gens) {
  CheckReport report;
  SparseSpan<Word> span(field());
  // Products of generators up to length 3 cover every left factor of Delta(u).
  std::vector<NcPoly> layer{one()};
  span.insert(to_sparse(one()));
  for (int len = 1; len <= 3; ++len) {
    std::vector<NcPoly> next;
    for (const auto& p : layer)
      for (const auto& g : gens) {
        NcPoly q = mul(p, g);
        span.insert(to_sparse(q));
        next.push_back(std::move(q));
      }
    layer = std::move(next);
  }
  for (const auto& u : gens) {
    const TensorPoly d = coproduct(nf(u));
    std::map<Word, NcPoly> left_components;
    for (const auto& [key, c] : d.terms()) left_components[key[1]].add_term(key[0], c);
    for (const auto& [right, left] : left_components) {
      ++report.checked;
      if (!span.contains(to_sparse(left)))
        report.fail("Delta(" + format(u) + ") has left factor " + format(left) + " (paired with " +
                    alphabet().format(right) + ") outside the subalgebra");
    }
  }
  return report;
}

HopfAlgebra::SubalgebraReport HopfAlgebra::hopf_subalgebra_check(const std::vector<NcPoly>& gens,
                                                                std::size_t max_dimension) {
  SubalgebraReport out;
  SparseSpan<Word> span(field());
  std::vector<NcPoly> basis_polys{one()};
  span.insert(to_sparse(one()));
  std::size_t cursor = 0;
  out.finite = true;
  while (cursor < basis_polys.size()) {
    const NcPoly v = basis_polys[cursor++];
    for (const auto& g : gens) {
      NcPoly q = mul(v, g);
      if (span.insert(to_sparse(q))) basis_polys.push_back(std::move(q));
    }
    if (basis_polys.size() > max_dimension) {
      out.finite = false;
      break;
    }
  }
  out.dimension = span.dimension();
  if (!out.finite)
    out.report.fail("generated subalgebra exceeds dimension " + std::to_string(max_dimension));

  // Closure checks run on the whole basis when finite, otherwise on the
  // generators only.
  std::vector<NcPoly> probe = out.finite ? basis_polys : std::vector<NcPoly>{};
  if (!out.finite)
    for (const auto& g : gens) probe.push_back(nf(g));

  auto in_span = [&](const NcPoly& f) { return span.contains(to_sparse(f)); };
  if (out.finite) {
    for (const auto& u : basis_polys)
      for (const auto& v : basis_polys) {
        ++out.report.checked;
        if (!in_span(mul(u, v))) out.report.fail("product " + format(u) + " * " + format(v) + " escapes");
      }
  }
  for (const auto& v : probe) {
    ++out.report.checked;
    const TensorPoly d = coproduct(v);
    std::map<Word, NcPoly> by_right, by_left;
    for (const auto& [key, c] : d.terms()) {
      by_right[key[1]].add_term(key[0], c);
      by_left[key[0]].add_term(key[1], c);
    }
    for (const auto& [r, l] : by_right)
      if (!in_span(l)) out.report.fail("Delta(" + format(v) + ") left leg " + format(l) + " escapes");
    for (const auto& [l, r] : by_left)
      if (!in_span(r)) out.report.fail("Delta(" + format(v) + ") right leg " + format(r) + " escapes");
    if (!in_span(antipode(v))) out.report.fail("S(" + format(v) + ") escapes");
  }
  return out;
}

}  // namespace hopf

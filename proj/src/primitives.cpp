#include "hopf/primitives.hpp"

#include <algorithm>
#include <set>

namespace hopf {

namespace {

NcPoly g_minus_one(HopfAlgebra& h, const Word& g) { return h.nf(h.word(g)) - h.one(); }

std::size_t span_dimension(const FieldSpec& field, const std::vector<NcPoly>& polys) {
  SparseSpan<Word> span(field);
  for (const auto& p : polys) span.insert(to_sparse(p));
  return span.dimension();
}

}  // namespace

PrimitiveSpace solve_skew_primitives(HopfAlgebra& h, const Word& g, int max_weight) {
  if (!h.is_grouplike_word(g)) throw std::invalid_argument("not a group-like word: " + h.alphabet().format(g));
  const FieldSpec& field = h.field();
  const NcPoly g_nf = h.nf(h.word(g));
  if (g_nf.size() != 1 || !g_nf.terms().begin()->second.is_one())
    throw std::invalid_argument("group-like does not reduce to a single word: " + h.alphabet().format(g));
  const Word gw = g_nf.terms().begin()->first;

  // Largest words first, so echelon pivots sit on leading words.
  std::vector<Word> words = h.basis(max_weight);
  std::reverse(words.begin(), words.end());

  const TensorPoly one_t = TensorPoly::one(2, field);
  std::vector<SparseVector<TensorKey>> equations;
  equations.reserve(words.size());
  for (const Word& w : words) {
    const NcPoly v = h.word(w);
    TensorPoly t = h.coproduct(w);
    t -= TensorPoly::pure({h.one(), v});
    t -= TensorPoly::pure({v, h.word(gw)});
    equations.emplace_back(t.terms().begin(), t.terms().end());
  }
  const std::vector<Vector> relations = linear_dependencies(field, equations);

  PrimitiveSpace out;
  out.g = gw;
  out.max_weight = max_weight;
  out.primitive_dimension = relations.size();
  for (const Vector& rel : relations) {
    NcPoly v;
    std::size_t pivot = words.size();
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i].is_zero()) continue;
      if (pivot == words.size()) pivot = i;
      v.add_term(words[i], rel[i]);
    }
    // The row with pivot g spans k(g - 1) modulo the other rows.
    if (!gw.empty() && words[pivot] == gw) continue;
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool same_class_span(HopfAlgebra& h, const PrimitiveSpace& space, const std::vector<NcPoly>& expected) {
  const Word& g = space.g;
  std::vector<NcPoly> reduced;
  for (const auto& e : expected) {
    const NcPoly v = h.nf(e);
    if (!h.is_skew_primitive(v, Word{}, g)) return false;
    reduced.push_back(v);
  }
  std::vector<NcPoly> left = space.basis;
  std::vector<NcPoly> right = reduced;
  if (!g.empty()) {
    left.push_back(g_minus_one(h, g));
    right.push_back(g_minus_one(h, g));
  }
  std::vector<NcPoly> both = left;
  both.insert(both.end(), right.begin(), right.end());
  const std::size_t dl = span_dimension(h.field(), left);
  return dl == span_dimension(h.field(), right) && dl == span_dimension(h.field(), both);
}

bool conjugation_closed(HopfAlgebra& h, const PrimitiveSpace& space) {
  SparseSpan<Word> span(h.field());
  for (const auto& v : space.basis) span.insert(to_sparse(v));
  if (!space.g.empty()) span.insert(to_sparse(g_minus_one(h, space.g)));
  const NcPoly g = h.word(space.g);
  const NcPoly g_inv = h.grouplike_inverse(space.g);
  for (const auto& v : space.basis)
    if (!span.contains(to_sparse(h.mul(h.mul(g, v), g_inv)))) return false;
  return true;
}

std::vector<Word> grouplike_candidates(const HopfPresentation& p) {
  const Letter a = p.letter("a");
  const Letter b = p.letter("b");
  std::vector<Word> out;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 3; ++i) out.push_back(Word::power(a, i) * Word::power(b, j));
  return out;
}

CheckReport check_grouplikes(HopfAlgebra& h) {
  CheckReport report;
  const std::vector<Word> candidates = grouplike_candidates(h.presentation());
  std::set<Word> normal_words;
  for (const Word& g : candidates) {
    ++report.checked;
    const NcPoly v = h.nf(h.word(g));
    const std::string name = h.alphabet().format(g);
    if (!(h.coproduct(v) == h.nf(TensorPoly::pure({v, v})))) report.fail("Delta(" + name + ") != " + name + " (x) " + name);
    if (v.size() != 1) {
      report.fail(name + " does not reduce to a single word");
      continue;
    }
    if (!normal_words.insert(v.terms().begin()->first).second) report.fail(name + " coincides with another candidate");
  }
  for (const Word& g : candidates)
    for (const Word& k : candidates) {
      ++report.checked;
      const NcPoly prod = h.nf(h.word(g * k));
      if (prod.size() != 1 || !normal_words.count(prod.terms().begin()->first))
        report.fail("product " + h.alphabet().format(g * k) + " leaves the candidate set");
    }
  report.note(std::to_string(normal_words.size()) + " distinct group-likes");
  return report;
}

}  // namespace hopf

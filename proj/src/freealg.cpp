#include "hopf/freealg.hpp"

#include <sstream>
#include <stdexcept>

namespace hopf {

Word::Word(std::initializer_list<int> letters) {
  for (int g : letters) letters_.push_back(static_cast<char>(g));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += w[i] < names.size() ? names[w[i]] : "g" + std::to_string(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Appends "c*body" to `out` with the sign folded into the joining operator.
void append_term(std::string& out, const FieldElement& c, const std::string& body, bool is_unit_word) {
  std::string coeff;
  bool negative = false;
  if (c.field().kind != FieldKind::prime && c.is_rational()) {
    mpq_class v = c.rational_value();
    negative = v < 0;
    coeff = mpq_class(abs(v)).get_str();
  } else {
    coeff = c.to_string();
  }
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (is_unit_word) {
    out += coeff;
  } else if (coeff == "1") {
    out += body;
  } else {
    out += coeff + "*" + body;
  }
}

}  // namespace

NcPoly NcPoly::constant(const FieldElement& c) { return monomial(Word{}, c); }

NcPoly NcPoly::monomial(const Word& w, const FieldElement& c) {
  NcPoly f;
  f.add_term(w, c);
  return f;
}

FieldElement NcPoly::coefficient(const Word& w, const FieldSpec& field) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElement::zero(field) : it->second;
}

std::optional<FieldElement> NcPoly::as_scalar(const FieldSpec& field) const {
  if (terms_.empty()) return FieldElement::zero(field);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

int NcPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

void NcPoly::add_term(const Word& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& g) {
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& g) {
  for (const auto& [w, c] : g.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator*(const FieldElement& c, const NcPoly& f) {
  NcPoly out;
  if (c.is_zero()) return out;
  for (const auto& [w, d] : f.terms_) out.terms_.emplace(w, c * d);
  return out;
}

NcPoly NcPoly::multiply(const NcPoly& f, const NcPoly& g) {
  NcPoly out;
  for (const auto& [u, c] : f.terms_)
    for (const auto& [w, d] : g.terms_) out.add_term(u * w, c * d);
  return out;
}

NcPoly NcPoly::pow(unsigned n, const FieldSpec& field) const {
  NcPoly out = one(field);
  for (unsigned i = 0; i < n; ++i) out = multiply(out, *this);
  return out;
}

std::string NcPoly::format(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) append_term(out, c, alphabet.format(w), w.empty());
  return out;
}

// ---------------------------------------------------------------------------

TensorPoly::TensorPoly(int arity) : arity_(arity) {
  if (arity < 1 || arity > 3) throw std::invalid_argument("tensor arity must be 1, 2 or 3");
}

TensorPoly TensorPoly::from_poly(const NcPoly& f) {
  TensorPoly out(1);
  for (const auto& [w, c] : f.terms()) out.terms_.emplace(TensorKey{w, Word{}, Word{}}, c);
  return out;
}

TensorPoly TensorPoly::pure(const std::vector<NcPoly>& factors) {
  const int arity = static_cast<int>(factors.size());
  TensorPoly acc(arity);
  if (factors.empty()) return acc;
  for (const auto& [w, c] : factors[0].terms()) {
    TensorKey key{};
    key[0] = w;
    acc.add_term(key, c);
  }
  for (int slot = 1; slot < arity; ++slot) {
    TensorPoly next(arity);
    for (const auto& [key, c] : acc.terms_)
      for (const auto& [w, d] : factors[slot].terms()) {
        TensorKey k2 = key;
        k2[slot] = w;
        next.add_term(k2, c * d);
      }
    acc = std::move(next);
  }
  return acc;
}

TensorPoly TensorPoly::monomial(int arity, const TensorKey& key, const FieldElement& c) {
  TensorPoly out(arity);
  out.add_term(key, c);
  return out;
}

TensorPoly TensorPoly::one(int arity, const FieldSpec& field) {
  return monomial(arity, TensorKey{}, FieldElement::one(field));
}

FieldElement TensorPoly::coefficient(const TensorKey& key, const FieldSpec& field) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? FieldElement::zero(field) : it->second;
}

void TensorPoly::add_term(const TensorKey& key, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly out(arity_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& g) {
  if (g.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [k, c] : g.terms_) add_term(k, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& g) {
  if (g.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [k, c] : g.terms_) add_term(k, -c);
  return *this;
}

TensorPoly operator*(const FieldElement& c, const TensorPoly& f) {
  TensorPoly out(f.arity_);
  if (c.is_zero()) return out;
  for (const auto& [k, d] : f.terms_) out.terms_.emplace(k, c * d);
  return out;
}

TensorPoly TensorPoly::multiply(const TensorPoly& f, const TensorPoly& g) {
  if (f.arity_ != g.arity_) throw std::invalid_argument("tensor arity mismatch");
  TensorPoly out(f.arity_);
  for (const auto& [u, c] : f.terms_)
    for (const auto& [w, d] : g.terms_) {
      TensorKey key;
      for (int s = 0; s < f.arity_; ++s) key[s] = u[s] * w[s];
      out.add_term(key, c * d);
    }
  return out;
}

NcPoly TensorPoly::to_poly() const {
  if (arity_ != 1) throw std::invalid_argument("to_poly needs arity 1");
  NcPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k[0], c);
  return out;
}

TensorPoly TensorPoly::map_slot(int slot, const std::function<NcPoly(const Word&)>& phi) const {
  TensorPoly out(arity_);
  std::map<Word, NcPoly> cache;
  for (const auto& [key, c] : terms_) {
    auto it = cache.find(key[slot]);
    if (it == cache.end()) it = cache.emplace(key[slot], phi(key[slot])).first;
    for (const auto& [w, d] : it->second.terms()) {
      TensorKey k2 = key;
      k2[slot] = w;
      out.add_term(k2, c * d);
    }
  }
  return out;
}

TensorPoly TensorPoly::expand_slot(int slot, const std::function<TensorPoly(const Word&)>& phi) const {
  std::optional<TensorPoly> out;
  std::map<Word, TensorPoly> cache;
  for (const auto& [key, c] : terms_) {
    auto it = cache.find(key[slot]);
    if (it == cache.end()) it = cache.emplace(key[slot], phi(key[slot])).first;
    const TensorPoly& image = it->second;
    const int new_arity = arity_ - 1 + image.arity();
    if (!out) out.emplace(new_arity);
    for (const auto& [ik, d] : image.terms()) {
      TensorKey k2{};
      int pos = 0;
      for (int s = 0; s < arity_; ++s) {
        if (s == slot) {
          for (int t = 0; t < image.arity(); ++t) k2[pos++] = ik[t];
        } else {
          k2[pos++] = key[s];
        }
      }
      out->add_term(k2, c * d);
    }
  }
  if (!out) {
    // Zero input: arity of the image is unknown, probe with the empty word.
    TensorPoly probe = phi(Word{});
    return TensorPoly(arity_ - 1 + probe.arity());
  }
  return *out;
}

TensorPoly TensorPoly::map_slots(const std::function<NcPoly(const Word&)>& phi) const {
  TensorPoly out = *this;
  for (int s = 0; s < arity_; ++s) out = out.map_slot(s, phi);
  return out;
}

NcPoly TensorPoly::contract() const {
  NcPoly out;
  for (const auto& [key, c] : terms_) {
    Word w;
    for (int s = 0; s < arity_; ++s) w *= key[s];
    out.add_term(w, c);
  }
  return out;
}

std::string TensorPoly::format(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string body;
    for (int s = 0; s < arity_; ++s) {
      if (s > 0) body += " (x) ";
      body += alphabet.format(key[s]);
    }
    append_term(out, c, arity_ == 1 ? body : "[" + body + "]", arity_ == 1 && key[0].empty());
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorPoly Morphism::apply(const Word& w) const {
  TensorPoly acc = TensorPoly::one(arity, field);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter g = kind == MorphismKind::homomorphism ? w[i] : w[w.size() - 1 - i];
    if (g >= images.size() || !images[g])
      throw std::invalid_argument("missing image for generator " + std::to_string(g));
    acc = TensorPoly::multiply(acc, *images[g]);
    if (reduce) acc = reduce(acc);
  }
  return acc;
}

TensorPoly Morphism::apply(const NcPoly& f) const {
  TensorPoly out(arity);
  for (const auto& [w, c] : f.terms()) out += c * apply(w);
  return out;
}

TensorPoly extend_morphism(const Morphism& m, const NcPoly& f) { return m.apply(f); }

}  // namespace hopf

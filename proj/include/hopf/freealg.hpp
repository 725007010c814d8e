#pragma once

#include "hopf/coeff.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

using Letter = std::uint8_t;

/// Monomial of the free monoid on generator indices. The empty word is 1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  static Word letter(Letter g) { return Word(std::string(1, static_cast<char>(g))); }
  static Word power(Letter g, std::size_t n) { return Word(std::string(n, static_cast<char>(g))); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

  Word operator*(const Word& rhs) const { return Word(letters_ + rhs.letters_); }
  Word& operator*=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  /// Position of the first occurrence of `w` at or after `from`, or npos.
  std::size_t find(const Word& w, std::size_t from = 0) const { return letters_.find(w.letters_, from); }
  std::size_t rfind(const Word& w, std::size_t from = std::string::npos) const {
    return letters_.rfind(w.letters_, from);
  }
  bool contains(const Word& w) const { return find(w) != npos; }
  Word reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend())); }
  const std::string& raw() const { return letters_; }

  static constexpr std::size_t npos = std::string::npos;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Generator names; index i names letter i.
struct Alphabet {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  std::optional<Letter> find(std::string_view name) const;
  /// e.g. "a*x*a^2"; "1" for the empty word.
  std::string format(const Word& w) const;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Finite linear combination of words. Zero coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Word, FieldElement>;

  NcPoly() = default;
  static NcPoly constant(const FieldElement& c);
  static NcPoly monomial(const Word& w, const FieldElement& c);
  static NcPoly one(const FieldSpec& field) { return constant(FieldElement::one(field)); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of `w` (zero of `field` when absent).
  FieldElement coefficient(const Word& w, const FieldSpec& field) const;
  /// Scalar value when the polynomial is a constant (or zero).
  std::optional<FieldElement> as_scalar(const FieldSpec& field) const;
  /// Maximum word length among terms; -1 for zero.
  int degree() const;

  void add_term(const Word& w, const FieldElement& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& g);
  NcPoly& operator-=(const NcPoly& g);
  friend NcPoly operator+(NcPoly f, const NcPoly& g) { return f += g; }
  friend NcPoly operator-(NcPoly f, const NcPoly& g) { return f -= g; }
  friend NcPoly operator*(const NcPoly& f, const NcPoly& g) { return multiply(f, g); }
  friend NcPoly operator*(const FieldElement& c, const NcPoly& f);
  /// Bilinear extension of concatenation; no reduction.
  static NcPoly multiply(const NcPoly& f, const NcPoly& g);
  NcPoly pow(unsigned n, const FieldSpec& field) const;

  std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

/// Basis tensor of k words, k in {1, 2, 3}; unused slots are empty.
using TensorKey = std::array<Word, 3>;

/// Element of the k-th tensor power of the free algebra.
class TensorPoly {
 public:
  using Terms = std::map<TensorKey, FieldElement>;

  explicit TensorPoly(int arity = 2);
  static TensorPoly from_poly(const NcPoly& f);
  static TensorPoly pure(const std::vector<NcPoly>& factors);
  static TensorPoly monomial(int arity, const TensorKey& key, const FieldElement& c);
  static TensorPoly one(int arity, const FieldSpec& field);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  FieldElement coefficient(const TensorKey& key, const FieldSpec& field) const;

  void add_term(const TensorKey& key, const FieldElement& c);

  TensorPoly operator-() const;
  TensorPoly& operator+=(const TensorPoly& g);
  TensorPoly& operator-=(const TensorPoly& g);
  friend TensorPoly operator+(TensorPoly f, const TensorPoly& g) { return f += g; }
  friend TensorPoly operator-(TensorPoly f, const TensorPoly& g) { return f -= g; }
  friend TensorPoly operator*(const FieldElement& c, const TensorPoly& f);

  /// Slotwise product (u1 (x) .. (x) uk)(w1 (x) .. (x) wk) = u1w1 (x) .. (x) ukwk.
  static TensorPoly multiply(const TensorPoly& f, const TensorPoly& g);
  friend TensorPoly operator*(const TensorPoly& f, const TensorPoly& g) { return multiply(f, g); }

  /// Arity-1 view as a plain polynomial.
  NcPoly to_poly() const;
  /// Applies a linear map word -> NcPoly to one slot.
  TensorPoly map_slot(int slot, const std::function<NcPoly(const Word&)>& phi) const;
  /// Applies a linear map word -> TensorPoly to one slot, splicing the
  /// image's slots in place (raises the arity by image arity - 1).
  TensorPoly expand_slot(int slot, const std::function<TensorPoly(const Word&)>& phi) const;
  /// Applies a linear map word -> NcPoly independently to every slot.
  TensorPoly map_slots(const std::function<NcPoly(const Word&)>& phi) const;
  /// Multiplies the slots together (the multiplication map m).
  NcPoly contract() const;

  std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

 private:
  int arity_;
  Terms terms_;
};

enum class MorphismKind { homomorphism, anti_homomorphism };

/// Generator images for extending a map from the free algebra. The target is
/// a tensor power of fixed arity (arity 1 for plain algebra maps).
struct Morphism {
  std::vector<std::optional<TensorPoly>> images;
  MorphismKind kind = MorphismKind::homomorphism;
  int arity = 1;
  FieldSpec field;
  /// Optional normalizer applied after each multiplication to keep
  /// intermediate results small; must be a linear projection compatible
  /// with multiplication (e.g. slotwise normal form).
  std::function<TensorPoly(const TensorPoly&)> reduce;

  TensorPoly apply(const Word& w) const;
  TensorPoly apply(const NcPoly& f) const;
  NcPoly apply_poly(const NcPoly& f) const { return apply(f).to_poly(); }
};

/// Extends generator images to a (anti-)homomorphism and applies it.
TensorPoly extend_morphism(const Morphism& m, const NcPoly& f);

}  // namespace hopf

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace hopf {

/// Raised on division by zero, mixed-field operands, or an invalid field
/// configuration.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind : std::uint8_t { rational, cyclotomic3, prime };

/// Ground field of an engine instance.
///
/// `cyclotomic3` is Q(r) with r^2 + r + 1 = 0. `prime` is F_p together with a
/// chosen residue `root` of multiplicative order three.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;
  std::uint64_t root = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec cyclotomic3() { return {FieldKind::cyclotomic3, 0, 0}; }
  /// Validates that p is a prime other than 2, 3 and that root is a
  /// primitive cube root of unity mod p.
  static FieldSpec prime(std::uint64_t p, std::uint64_t root);
  /// "Q", "Qr", "F7" (root 2) or "F13" (root 3).
  static FieldSpec preset(std::string_view name);

  bool has_root() const { return kind != FieldKind::rational; }
  bool is_char_zero() const { return kind != FieldKind::prime; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Exact scalar of a FieldSpec. Values are immutable and always canonical:
/// fractions reduced with positive denominators, residues in [0, p).
class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : FieldElement(FieldSpec::rational(), 0) {}
  FieldElement(const FieldSpec& field, long value);
  FieldElement(const FieldSpec& field, const mpq_class& value);

  static FieldElement zero(const FieldSpec& field) { return {field, 0}; }
  static FieldElement one(const FieldSpec& field) { return {field, 1}; }
  /// Primitive cube root of unity; throws for the rational field.
  static FieldElement root(const FieldSpec& field);
  /// alpha + beta*r in Q(r), or its image in F_p.
  static FieldElement from_pair(const FieldSpec& field, const mpq_class& alpha,
                                const mpq_class& beta);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in the prime subfield (no r component).
  bool is_rational() const;
  /// Rational value; requires is_rational() and a characteristic-zero field.
  mpq_class rational_value() const;
  /// Residue for prime fields.
  std::uint64_t residue() const;

  FieldElement operator-() const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y);
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

  /// Canonical encoding; equal values have identical encodings.
  std::string encode() const;
  /// Expression syntax understood by the parser, e.g. "-3/2" or "(1/3+2/3*r)".
  std::string to_string() const;
  /// True when to_string() needs no parentheses as a product factor.
  bool is_atomic() const;

 private:
  struct Cyclo {
    mpq_class alpha;
    mpq_class beta;
  };
  using Payload = std::variant<mpq_class, Cyclo, std::uint64_t>;

  FieldElement(const FieldSpec& field, Payload payload)
      : field_(field), value_(std::move(payload)) {}

  void require_same(const FieldElement& y) const;

  FieldSpec field_;
  Payload value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace hopf

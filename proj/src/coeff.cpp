#include "hopf/coeff.hpp"

#include <ostream>
#include <sstream>

namespace hopf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 inverse_mod(u64 a, u64 p) {
  // p is prime, so Fermat suffices.
  return pow_mod(a, p - 2, p);
}

u64 reduce_mpz(const mpz_class& z, u64 p) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

u64 reduce_mpq(const mpq_class& q, u64 p) {
  const u64 den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw FieldError("denominator divisible by the characteristic");
  return mul_mod(reduce_mpz(q.get_num(), p), inverse_mod(den, p), p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p, std::uint64_t root) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 3) throw FieldError("characteristic 2 and 3 are not supported");
  if (p > (1ULL << 62)) throw FieldError("modulus too large");
  root %= p;
  if (root == 1 || pow_mod(root, 3, p) != 1)
    throw FieldError("residue " + std::to_string(root) + " is not a primitive cube root of unity mod " +
                     std::to_string(p));
  return {FieldKind::prime, p, root};
}

FieldSpec FieldSpec::preset(std::string_view name) {
  if (name == "Q") return rational();
  if (name == "Qr") return cyclotomic3();
  if (name == "F7") return prime(7, 2);
  if (name == "F13") return prime(13, 3);
  throw FieldError("unknown field '" + std::string(name) + "' (expected Q, Qr, F7 or F13)");
}

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::cyclotomic3:
      return "Qr";
    case FieldKind::prime:
      if (p == 7 && root == 2) return "F7";
      if (p == 13 && root == 3) return "F13";
      return "F" + std::to_string(p) + "[r=" + std::to_string(root) + "]";
  }
  return "?";
}

FieldElement::FieldElement(const FieldSpec& field, long value)
    : FieldElement(field, mpq_class(value)) {}

FieldElement::FieldElement(const FieldSpec& field, const mpq_class& value) : field_(field) {
  mpq_class v = value;
  v.canonicalize();
  switch (field.kind) {
    case FieldKind::rational:
      value_ = std::move(v);
      break;
    case FieldKind::cyclotomic3:
      value_ = Cyclo{std::move(v), mpq_class(0)};
      break;
    case FieldKind::prime:
      value_ = reduce_mpq(v, field.p);
      break;
  }
}

FieldElement FieldElement::root(const FieldSpec& field) {
  switch (field.kind) {
    case FieldKind::rational:
      throw FieldError("no cube root available in the rational field");
    case FieldKind::cyclotomic3:
      return {field, Payload{Cyclo{mpq_class(0), mpq_class(1)}}};
    case FieldKind::prime:
      return {field, Payload{field.root}};
  }
  throw FieldError("bad field kind");
}

FieldElement FieldElement::from_pair(const FieldSpec& field, const mpq_class& alpha,
                                     const mpq_class& beta) {
  if (beta == 0) return {field, alpha};
  return FieldElement(field, alpha) + FieldElement(field, beta) * root(field);
}

void FieldElement::require_same(const FieldElement& y) const {
  if (!(field_ == y.field_))
    throw FieldError("mixed-field operands: " + field_.name() + " and " + y.field_.name());
}

bool FieldElement::is_zero() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_) == 0;
    case FieldKind::cyclotomic3: {
      const auto& c = std::get<Cyclo>(value_);
      return c.alpha == 0 && c.beta == 0;
    }
    case FieldKind::prime:
      return std::get<u64>(value_) == 0;
  }
  return false;
}

bool FieldElement::is_one() const { return *this == one(field_); }

bool FieldElement::is_rational() const {
  if (field_.kind == FieldKind::cyclotomic3) return std::get<Cyclo>(value_).beta == 0;
  return true;
}

mpq_class FieldElement::rational_value() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_);
    case FieldKind::cyclotomic3:
      if (!is_rational()) throw FieldError("value is not rational");
      return std::get<Cyclo>(value_).alpha;
    case FieldKind::prime:
      break;
  }
  throw FieldError("rational_value on a prime field");
}

std::uint64_t FieldElement::residue() const {
  if (field_.kind != FieldKind::prime) throw FieldError("residue on a characteristic-zero field");
  return std::get<u64>(value_);
}

FieldElement FieldElement::operator-() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return {field_, Payload{mpq_class(-std::get<mpq_class>(value_))}};
    case FieldKind::cyclotomic3: {
      const auto& c = std::get<Cyclo>(value_);
      return {field_, Payload{Cyclo{-c.alpha, -c.beta}}};
    }
    case FieldKind::prime: {
      const u64 v = std::get<u64>(value_);
      return {field_, Payload{v == 0 ? 0 : field_.p - v}};
    }
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  switch (field_.kind) {
    case FieldKind::rational:
      return {field_, Payload{mpq_class(1 / std::get<mpq_class>(value_))}};
    case FieldKind::cyclotomic3: {
      // (a + b r)^-1 = (a + b r^2) / N with N = a^2 - a b + b^2 and r^2 = -1 - r.
      const auto& c = std::get<Cyclo>(value_);
      const mpq_class norm = c.alpha * c.alpha - c.alpha * c.beta + c.beta * c.beta;
      return {field_, Payload{Cyclo{mpq_class((c.alpha - c.beta) / norm), mpq_class(-c.beta / norm)}}};
    }
    case FieldKind::prime:
      return {field_, Payload{inverse_mod(std::get<u64>(value_), field_.p)}};
  }
  return *this;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  x.require_same(y);
  switch (x.field_.kind) {
    case FieldKind::rational:
      return {x.field_, FieldElement::Payload{
                            mpq_class(std::get<mpq_class>(x.value_) + std::get<mpq_class>(y.value_))}};
    case FieldKind::cyclotomic3: {
      const auto& a = std::get<FieldElement::Cyclo>(x.value_);
      const auto& b = std::get<FieldElement::Cyclo>(y.value_);
      return {x.field_, FieldElement::Payload{
                            FieldElement::Cyclo{a.alpha + b.alpha, a.beta + b.beta}}};
    }
    case FieldKind::prime: {
      u64 s = std::get<u64>(x.value_) + std::get<u64>(y.value_);
      if (s >= x.field_.p) s -= x.field_.p;
      return {x.field_, FieldElement::Payload{s}};
    }
  }
  return x;
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  x.require_same(y);
  switch (x.field_.kind) {
    case FieldKind::rational:
      return {x.field_, FieldElement::Payload{
                            mpq_class(std::get<mpq_class>(x.value_) * std::get<mpq_class>(y.value_))}};
    case FieldKind::cyclotomic3: {
      // (a + b r)(c + d r) = (ac - bd) + (ad + bc - bd) r
      const auto& u = std::get<FieldElement::Cyclo>(x.value_);
      const auto& v = std::get<FieldElement::Cyclo>(y.value_);
      mpq_class bd = u.beta * v.beta;
      mpq_class re = u.alpha * v.alpha - bd;
      mpq_class im = u.alpha * v.beta + u.beta * v.alpha - bd;
      return {x.field_, FieldElement::Payload{FieldElement::Cyclo{std::move(re), std::move(im)}}};
    }
    case FieldKind::prime:
      return {x.field_, FieldElement::Payload{
                            mul_mod(std::get<u64>(x.value_), std::get<u64>(y.value_), x.field_.p)}};
  }
  return x;
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  x.require_same(y);
  return x * y.inverse();
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  x.require_same(y);
  switch (x.field_.kind) {
    case FieldKind::rational:
      return std::get<mpq_class>(x.value_) == std::get<mpq_class>(y.value_);
    case FieldKind::cyclotomic3: {
      const auto& a = std::get<FieldElement::Cyclo>(x.value_);
      const auto& b = std::get<FieldElement::Cyclo>(y.value_);
      return a.alpha == b.alpha && a.beta == b.beta;
    }
    case FieldKind::prime:
      return std::get<u64>(x.value_) == std::get<u64>(y.value_);
  }
  return false;
}

std::string FieldElement::encode() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::cyclotomic3: {
      const auto& c = std::get<Cyclo>(value_);
      return c.alpha.get_str() + "," + c.beta.get_str();
    }
    case FieldKind::prime:
      return std::to_string(std::get<u64>(value_));
  }
  return {};
}

bool FieldElement::is_atomic() const {
  if (field_.kind != FieldKind::cyclotomic3) return true;
  const auto& c = std::get<Cyclo>(value_);
  return c.beta == 0 || (c.alpha == 0 && c.beta == 1);
}

std::string FieldElement::to_string() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::prime:
      return std::to_string(std::get<u64>(value_));
    case FieldKind::cyclotomic3: {
      const auto& c = std::get<Cyclo>(value_);
      if (c.beta == 0) return c.alpha.get_str();
      if (c.alpha == 0 && c.beta == 1) return "r";
      std::ostringstream out;
      out << '(';
      if (c.alpha != 0) out << c.alpha.get_str() << (c.beta < 0 ? "-" : "+");
      else if (c.beta < 0) out << '-';
      mpq_class mag = abs(c.beta);
      if (mag != 1) out << mag.get_str() << '*';
      out << "r)";
      return out.str();
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace hopf

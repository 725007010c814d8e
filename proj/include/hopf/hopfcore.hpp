#pragma once

#include "hopf/freealg.hpp"
#include "hopf/linalg.hpp"
#include "hopf/rewrite.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// Outcome of a structural check: how many items were examined and which
/// failed, with human-readable detail.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void note(std::string what) { notes.push_back(std::move(what)); }
  void merge(const CheckReport& other);
  std::string summary() const;
};

/// Coalgebra data of one generator.
///
/// A skew-primitive generator v satisfies
///   Delta(v) = left (x) v' + v' (x) right + offset * shift (x) shift,
/// where v' = v - offset * shift is (left, right)-skew-primitive and `left`,
/// `right`, `shift` are words in group-like generators. The offset covers
/// generators such as x + q*a.
struct CoalgebraTag {
  enum class Kind { grouplike, skew };
  Kind kind = Kind::grouplike;
  Word left;
  Word right;
  std::optional<FieldElement> offset;
  Word shift;

  static CoalgebraTag grouplike() { return {}; }
  static CoalgebraTag skew(Word left, Word right) {
    return {Kind::skew, std::move(left), std::move(right), std::nullopt, Word{}};
  }
  static CoalgebraTag skew(Word left, Word right, FieldElement offset, Word shift) {
    return {Kind::skew, std::move(left), std::move(right), std::move(offset), std::move(shift)};
  }
  friend bool operator==(const CoalgebraTag&, const CoalgebraTag&) = default;
};

/// The parameter pair (p, q) with p^2 = q^2 + q^3.
struct Parameters {
  FieldElement p;
  FieldElement q;

  static Parameters make(const FieldSpec& field, long p, long q);
  /// Throws std::invalid_argument if p^2 != q^2 + q^3.
  void validate() const;
  friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// A presented algebra with optional Hopf structure on its generators and a
/// catalog of named elements.
struct HopfPresentation {
  std::string name;
  RewriteSystem system;
  /// Empty for plain algebras (no coalgebra structure).
  std::vector<CoalgebraTag> tags;
  std::map<std::string, NcPoly> named;
  std::optional<Parameters> params;
  /// Antipode images replacing the derived ones (negative controls only).
  std::map<Letter, NcPoly> antipode_override;

  const FieldSpec& field() const { return system.field(); }
  const Alphabet& alphabet() const { return system.alphabet(); }
  bool has_coalgebra() const { return !tags.empty(); }
  /// Named element, or the generator of that name.
  NcPoly element(const std::string& key) const;
  Letter letter(std::string_view generator) const;
  NcPoly gen(std::string_view generator) const;

  friend bool operator==(const HopfPresentation&, const HopfPresentation&) = default;
};

struct MinimalPolynomial {
  /// Coefficients c_0, ..., c_d of the monic polynomial (c_d = 1).
  std::optional<std::vector<FieldElement>> coefficients;
  int searched_degree = 0;
  std::string format() const;
};

/// Working context over a HopfPresentation: normal forms and coalgebra maps
/// with memoization. Not thread-safe; create one per thread.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(HopfPresentation presentation);
  HopfAlgebra(const HopfAlgebra&) = delete;
  HopfAlgebra& operator=(const HopfAlgebra&) = delete;

  const HopfPresentation& presentation() const { return pres_; }
  const RewriteSystem& system() const { return pres_.system; }
  const FieldSpec& field() const { return pres_.field(); }
  const Alphabet& alphabet() const { return pres_.alphabet(); }

  FieldElement scalar(long v) const { return FieldElement(field(), v); }
  NcPoly one() const { return NcPoly::one(field()); }
  NcPoly word(const Word& w) const { return NcPoly::monomial(w, FieldElement::one(field())); }

  NcPoly nf(const NcPoly& f) { return reducer_.reduce(f); }
  const NcPoly& nf(const Word& w) { return reducer_.reduce_word(w); }
  NcPoly mul(const NcPoly& f, const NcPoly& g) { return reducer_.multiply(f, g); }
  NcPoly pow(const NcPoly& f, unsigned n);
  /// Slotwise normal form of a tensor.
  TensorPoly nf(const TensorPoly& t);

  bool is_grouplike_word(const Word& w) const;
  /// Inverse of a word in group-like generators.
  NcPoly grouplike_inverse(const Word& w);

  const TensorPoly& coproduct(const Word& w);
  TensorPoly coproduct(const NcPoly& f);
  FieldElement counit(const Word& w) const;
  FieldElement counit(const NcPoly& f) const;
  const NcPoly& antipode(const Word& w);
  NcPoly antipode(const NcPoly& f);
  /// Antipode image of a generator before reduction.
  NcPoly antipode_image(Letter g);
  TensorPoly coproduct_image(Letter g) const;

  /// Applies Delta to one slot of a tensor.
  TensorPoly coproduct_slot(const TensorPoly& t, int slot);

  bool is_central(const NcPoly& f);
  bool is_skew_primitive(const NcPoly& f, const Word& left, const Word& right);
  bool verify_identity(const NcPoly& lhs, const NcPoly& rhs);
  MinimalPolynomial min_poly(const NcPoly& f, int max_degree);

  /// Delta-, epsilon-compatibility with every rule, coassociativity and
  /// counit laws on generators and basis words of weight <= max_weight.
  CheckReport check_bialgebra(int max_weight = 6);
  /// Antipode axioms on generators and `samples` pseudo-random basis words;
  /// anti-extended S annihilates every relation.
  CheckReport check_antipode(std::size_t samples = 100, int max_weight = 8);
  /// Right coideal: for every generator u, Delta(u) lies in B (x) A.
  CheckReport coideal_subalgebra_check(const std::vector<NcPoly>& gens);

  struct SubalgebraReport {
    CheckReport report;
    std::size_t dimension = 0;
    bool finite = false;
  };
  /// Closure of the subalgebra generated by `gens` under m, Delta and S.
  SubalgebraReport hopf_subalgebra_check(const std::vector<NcPoly>& gens, std::size_t max_dimension = 400);

  /// Irreducible words of order-weight <= max_weight.
  std::vector<Word> basis(int max_weight) const;
  /// First weight vector of the monomial order.
  const std::vector<int>& grading() const { return pres_.system.order().weights().front(); }

  std::string format(const NcPoly& f) const { return f.format(alphabet()); }
  std::string format(const TensorPoly& t) const { return t.format(alphabet()); }

 private:
  HopfPresentation pres_;
  Reducer reducer_;
  std::map<Word, TensorPoly> coproduct_cache_;
  std::map<Word, NcPoly> antipode_cache_;
  std::vector<std::optional<NcPoly>> antipode_images_;
};

/// Basis of span(words of f in a subspace) helpers shared by several modules.
SparseVector<Word> to_sparse(const NcPoly& f);

}  // namespace hopf

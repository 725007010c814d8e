#pragma once

#include "hopf/hopfcore.hpp"

#include <string>
#include <vector>

namespace hopf {

/// Class [a^i b^j (xa)^l] of A/AB+, i, l < 3, j < 2.
struct XaClass {
  int i = 0;
  int j = 0;
  int l = 0;
  std::string label() const;
  friend bool operator==(const XaClass&, const XaClass&) = default;
};

/// A/AB+ for an F-presentation (generators a, b, F, s, t) at (p, q) = (0, 0).
///
/// Classes are stored in the F-basis: the words a^i b^j F^l, which are the
/// normal forms with trivial B-part.
class QuotientCoalgebra {
 public:
  /// Throws std::invalid_argument unless the ambient algebra is an
  /// F-presentation at (0, 0) with F^3 reducible.
  explicit QuotientCoalgebra(HopfAlgebra& ambient);

  HopfAlgebra& ambient() { return h_; }
  /// The 18 F-basis words.
  const std::vector<Word>& f_classes() const { return f_classes_; }
  /// The 18 classes [a^i b^j (xa)^l].
  static std::vector<XaClass> xa_classes();

  /// pi: normal form, keeping only terms with trivial B-part.
  SparseVector<Word> project(const NcPoly& f);
  /// pi (x) id.
  TensorPoly project_left(const TensorPoly& t);
  /// pi (x) pi.
  TensorPoly project_both(const TensorPoly& t);
  /// Delta of an F-basis class.
  const TensorPoly& delta_quot(const Word& f_class);
  /// Delta of an arbitrary class vector.
  TensorPoly delta_quot(const SparseVector<Word>& v);

  /// a^i b^j (xa)^l.
  NcPoly representative(const XaClass& c) const;
  /// pi(a^i b^j (xa)^l) in the F-basis.
  SparseVector<Word> class_vector(const XaClass& c);
  /// Coordinates of a class vector in the (xa)-basis, ordered as xa_classes().
  Vector xa_coordinates(const SparseVector<Word>& v);

  /// a^i b^j for l = 0, a^i b^j xa for l = 1, a^i b^j ((xa)^2 - axa x) for
  /// l = 2. Throws std::invalid_argument for indices out of range.
  NcPoly gamma(const XaClass& c) const;
  /// gamma extended linearly to class vectors.
  NcPoly gamma(const SparseVector<Word>& v);

  /// pi(gamma(h)) = h for all 18 classes.
  CheckReport check_section();
  /// (pi (x) id) Delta gamma(h) = (id (x) gamma) Delta_quot(h) for all 18 classes.
  CheckReport check_colinearity();
  /// gamma * gamma^-1 = epsilon 1 = gamma^-1 * gamma on the 6 group-like
  /// classes with gamma^-1([a^i b^j]) = a^-i b^-j.
  CheckReport check_coradical_inverse();
  /// Delta_quot(pi(w)) = (pi (x) pi) Delta(w) and epsilon(w) = epsilon(pi(w))
  /// on basis words of weight <= max_weight.
  CheckReport check_coalgebra_map(int max_weight = 8);
  /// (pi (x) pi) Delta(f s) = 0 = (pi (x) pi) Delta(f t) for random basis
  /// combinations f.
  CheckReport check_coideal(std::size_t samples = 100, int max_weight = 6);
  /// pi restricted to the span of the F-basis words is injective.
  CheckReport check_injective_on_c();

  std::string format(const SparseVector<Word>& v) const;

 private:
  bool trivial_b_part(const Word& w) const;

  HopfAlgebra& h_;
  Letter a_, b_, f_, s_, t_;
  std::vector<Word> f_classes_;
  std::map<Word, TensorPoly> delta_cache_;
  std::vector<SparseVector<Word>> xa_vectors_;
};

}  // namespace hopf

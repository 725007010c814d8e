#pragma once

#include "hopf/hopfcore.hpp"

#include <vector>

namespace hopf {

/// V_g = P_(1,g) / k(g - 1) within the span of basis words of weight <= W.
struct PrimitiveSpace {
  Word g;
  int max_weight = 0;
  /// dim P_(1,g) inside the truncation.
  std::size_t primitive_dimension = 0;
  /// Class representatives of V_g: reduced echelon form with words compared
  /// in descending monomial order, leading coefficient 1, rows spanned by
  /// g - 1 removed.
  std::vector<NcPoly> basis;
  /// Completeness holds only up to max_weight.
  bool certified_beyond_bound = false;

  std::size_t dimension() const { return basis.size(); }
};

/// Solves Delta(v) - 1 (x) v - v (x) g = 0 over irreducible words of weight
/// <= max_weight. Throws std::invalid_argument when g is not group-like.
PrimitiveSpace solve_skew_primitives(HopfAlgebra& h, const Word& g, int max_weight);

/// True when span(expected) + k(g-1) equals span(space) + k(g-1) and every
/// expected element is (1,g)-skew-primitive.
bool same_class_span(HopfAlgebra& h, const PrimitiveSpace& space, const std::vector<NcPoly>& expected);

/// g V_g g^-1 is contained in V_g + k(g-1).
bool conjugation_closed(HopfAlgebra& h, const PrimitiveSpace& space);

/// The words a^i b^j, i < 3, j < 2, in generators named "a" and "b".
std::vector<Word> grouplike_candidates(const HopfPresentation& p);

/// The six candidates are group-like, pairwise distinct and closed under
/// multiplication.
CheckReport check_grouplikes(HopfAlgebra& h);

}  // namespace hopf

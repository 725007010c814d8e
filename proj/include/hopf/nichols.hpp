#pragma once

#include "hopf/hopfcore.hpp"
#include "hopf/linalg.hpp"

#include <string>
#include <vector>

namespace hopf {

/// Finite-dimensional space with a braiding c on V (x) V.
///
/// Basis tensors e_i (x) e_j have index i*d + j; the braiding matrix maps
/// column (source) to row (target).
struct BraidedVectorSpace {
  FieldSpec field;
  std::vector<std::string> labels;
  ExactMatrix braiding;

  std::size_t dim() const { return labels.size(); }
};

/// One summand V_g of a Yetter-Drinfel'd module of skew-primitives.
struct YdComponent {
  Word g;
  std::vector<NcPoly> representatives;
  std::vector<std::string> labels;
};

/// chi(u (x) w) = (g_u w g_u^-1 projected) (x) u, where g_u is the group-like
/// of u's component and the projection is onto w's component modulo
/// k(g_w - 1). Throws std::runtime_error when a conjugate leaves that span.
BraidedVectorSpace braiding_from_yd(HopfAlgebra& h, const std::vector<YdComponent>& components);
BraidedVectorSpace braiding_from_yd(HopfAlgebra& h, const YdComponent& component);

/// u (x) u -> v (x) u, v (x) u -> v (x) v, u (x) v -> -u (x) u - v (x) u,
/// v (x) v -> -u (x) v - v (x) v on V_a = span{u = [x], v = [axa^2]}.
BraidedVectorSpace paper_va_space(const FieldSpec& field);
/// The flip tau (sign = 1) or -tau (sign = -1) on a d-dimensional space.
BraidedVectorSpace flip_space(const FieldSpec& field, std::size_t d, long sign = 1);

bool check_braid_equation(const BraidedVectorSpace& v);

/// Braiding c_i on V^(x)n at positions (i, i+1), zero-based.
SparseVector<std::size_t> apply_braid(const BraidedVectorSpace& v, std::size_t n, std::size_t i,
                                      const SparseVector<std::size_t>& x);

/// Quantum symmetrizer S_n on V^(x)n via the recursion
/// S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1).
/// Refuses (std::logic_error) when the braid equation fails; n <= 8.
ExactMatrix symmetrizer(const BraidedVectorSpace& v, std::size_t n);

/// Reduced word of a permutation of {0..n-1} by bubble sort, always swapping
/// the leftmost (or rightmost) adjacent inversion. Entries are zero-based
/// braid positions in the order the swaps are performed.
std::vector<std::size_t> reduced_word(std::vector<std::size_t> permutation, bool rightmost);
/// Product of braidings c_{i_m} ... c_{i_1} along `word` (first entry applied
/// first) on V^(x)n.
ExactMatrix braid_lift(const BraidedVectorSpace& v, std::size_t n, const std::vector<std::size_t>& word);

/// Sum over Sym(n) of the lift of one reduced word per permutation
/// (leftmost or rightmost bubble-sort decomposition).
ExactMatrix symmetrizer_bruteforce(const BraidedVectorSpace& v, std::size_t n, bool rightmost = false);

struct SymmetrizerReport {
  std::vector<std::size_t> ranks;  // rank S_n for n = 0..max_degree
  std::vector<std::size_t> kernel_dims;
  std::size_t total = 0;
  /// Some rank is 0 and all later ranks up to the bound are 0.
  bool terminated = false;
  /// Positive characteristic with max_degree >= p: ranks are not comparable
  /// with characteristic-zero values.
  bool characteristic_caveat = false;
};

SymmetrizerReport nichols_dims(const BraidedVectorSpace& v, std::size_t max_degree);

/// Tensor monomial e_{i1} (x) ... (x) e_{in} as a coordinate vector.
std::size_t tensor_index(const BraidedVectorSpace& v, const std::vector<std::size_t>& letters);
/// Linear combination of tensor monomials, e.g. {{1, {0,0}}, {1, {0,1}}} for u^2 + uv.
using TensorRelation = std::vector<std::pair<long, std::vector<std::size_t>>>;

/// Each relation is annihilated by the symmetrizer of its degree.
CheckReport check_relations_in_kernel(const BraidedVectorSpace& v, const std::vector<TensorRelation>& relations);

/// Rank of the images S_n(w) of the given degree-n tensor monomials.
std::size_t rank_of_monomials(const BraidedVectorSpace& v, const std::vector<std::vector<std::size_t>>& words);

struct VaAdjudication {
  SymmetrizerReport dims;
  std::size_t claimed_dimension = 9;
  std::size_t displayed_elements = 10;
  /// Rank of the displayed elements, degree by degree.
  std::vector<std::size_t> displayed_rank_by_degree;
  std::vector<std::size_t> displayed_count_by_degree;
  std::string verdict;
};

/// Compares the exact Hilbert function of B(V_a) with the stated dimension 9
/// and the displayed basis {1,u,v,u^2,vu,v^2,vuv,v^2u,v^2uv,vuv^2}.
VaAdjudication adjudicate_va(const BraidedVectorSpace& va, std::size_t max_degree = 6);

}  // namespace hopf

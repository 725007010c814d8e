#include "hopf/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopf {

namespace {

using Column = SparseVector<std::size_t>;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

void axpy(Column& target, const Column& source, const FieldElement& scale) {
  for (const auto& [k, c] : source) {
    auto [it, inserted] = target.try_emplace(k, scale * c);
    if (!inserted) {
      it->second += scale * c;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

// Nonzero entries of each braiding column.
std::vector<std::vector<std::pair<std::size_t, FieldElement>>> braid_columns(const BraidedVectorSpace& v) {
  const std::size_t d2 = v.dim() * v.dim();
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> cols(d2);
  for (std::size_t col = 0; col < d2; ++col)
    for (std::size_t row = 0; row < d2; ++row)
      if (!v.braiding(row, col).is_zero()) cols[col].emplace_back(row, v.braiding(row, col));
  return cols;
}

Column braid_at(const std::vector<std::vector<std::pair<std::size_t, FieldElement>>>& cols, std::size_t d,
                std::size_t n, std::size_t i, const Column& x) {
  // Digits are most significant first: position i has weight d^(n-1-i).
  const std::size_t lo = ipow(d, n - 2 - i);
  Column out;
  for (const auto& [idx, c] : x) {
    const std::size_t pair = (idx / lo) % (d * d);
    const std::size_t base = idx - pair * lo;
    for (const auto& [row, coeff] : cols[pair]) {
      const FieldElement value = c * coeff;
      const std::size_t target = base + row * lo;
      auto [it, inserted] = out.try_emplace(target, value);
      if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

ExactMatrix kron_identity_left(const ExactMatrix& c, std::size_t d) {
  // id_d (x) c
  const std::size_t m = c.rows();
  ExactMatrix out(c.field(), d * m, d * m);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out(k * m + i, k * m + j) = c(i, j);
  return out;
}

ExactMatrix kron_identity_right(const ExactMatrix& c, std::size_t d) {
  // c (x) id_d
  const std::size_t m = c.rows();
  ExactMatrix out(c.field(), m * d, m * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < d; ++k) out(i * d + k, j * d + k) = c(i, j);
  return out;
}

// Sparse columns of S_n, built by the coset recursion.
std::vector<Column> symmetrizer_columns(const BraidedVectorSpace& v, std::size_t n) {
  if (n > 8) throw std::invalid_argument("symmetrizer degree capped at 8");
  if (!check_braid_equation(v)) throw std::logic_error("braid equation fails; symmetrizer refused");
  const std::size_t d = v.dim();
  const auto cols = braid_columns(v);
  const FieldElement one = FieldElement::one(v.field);
  std::vector<Column> prev{Column{{0, one}}};  // S_0 on the ground field
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t size = ipow(d, m);
    std::vector<Column> next(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      const Column e{{idx, one}};
      // T_m e = sum over k of c_{m-1} ... c_k e (c_k applied first).
      Column t = e;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        Column y = e;
        for (std::size_t pos = k; pos + 1 < m; ++pos) y = braid_at(cols, d, m, pos, y);
        axpy(t, y, one);
      }
      Column s;
      for (const auto& [j, c] : t) {
        const std::size_t prefix = j / d;
        const std::size_t last = j % d;
        for (const auto& [r, coeff] : prev[prefix]) {
          const FieldElement value = c * coeff;
          auto [it, inserted] = s.try_emplace(r * d + last, value);
          if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) s.erase(it);
          }
        }
      }
      next[idx] = std::move(s);
    }
    prev = std::move(next);
  }
  return prev;
}

std::size_t column_rank(const FieldSpec& field, const std::vector<Column>& columns) {
  SparseSpan<std::size_t> span(field);
  for (const auto& c : columns) span.insert(c);
  return span.dimension();
}

ExactMatrix to_matrix(const FieldSpec& field, const std::vector<Column>& columns, std::size_t size) {
  ExactMatrix out(field, size, size);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, c] : columns[j]) out(i, j) = c;
  return out;
}

Column apply_columns(const std::vector<Column>& columns, const Column& x) {
  Column out;
  for (const auto& [j, c] : x) axpy(out, columns[j], c);
  return out;
}

}  // namespace

BraidedVectorSpace braiding_from_yd(HopfAlgebra& h, const std::vector<YdComponent>& components) {
  const FieldSpec& field = h.field();
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (const auto& comp : components) {
    if (comp.labels.size() != comp.representatives.size())
      throw std::invalid_argument("component labels and representatives differ in length");
    offset.push_back(labels.size());
    labels.insert(labels.end(), comp.labels.begin(), comp.labels.end());
  }
  const std::size_t d = labels.size();
  ExactMatrix c(field, d * d, d * d);
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const NcPoly g = h.word(components[ci].g);
    const NcPoly g_inv = h.grouplike_inverse(components[ci].g);
    for (std::size_t cj = 0; cj < components.size(); ++cj) {
      const YdComponent& target = components[cj];
      std::vector<SparseVector<Word>> span;
      for (const auto& rep : target.representatives) span.push_back(to_sparse(h.nf(rep)));
      if (!target.g.empty()) span.push_back(to_sparse(h.nf(h.word(target.g)) - h.one()));
      for (std::size_t j = 0; j < target.representatives.size(); ++j) {
        const NcPoly conj = h.mul(h.mul(g, target.representatives[j]), g_inv);
        std::vector<SparseVector<Word>> vectors = span;
        vectors.push_back(to_sparse(conj));
        const auto relations = linear_dependencies(field, vectors);
        const Vector* rel = nullptr;
        for (const auto& r : relations)
          if (!r.back().is_zero()) rel = &r;
        if (!rel)
          throw std::runtime_error("conjugate of " + target.labels[j] + " by " + h.alphabet().format(components[ci].g) +
                                   " leaves its component");
        const FieldElement scale = -(*rel).back().inverse();
        const std::size_t global_j = offset[cj] + j;
        for (std::size_t i = 0; i < components[ci].representatives.size(); ++i) {
          const std::size_t global_i = offset[ci] + i;
          for (std::size_t k = 0; k < target.representatives.size(); ++k) {
            const FieldElement mu = scale * (*rel)[k];
            if (!mu.is_zero()) c((offset[cj] + k) * d + global_i, global_i * d + global_j) = mu;
          }
        }
      }
    }
  }
  return {field, std::move(labels), std::move(c)};
}

BraidedVectorSpace braiding_from_yd(HopfAlgebra& h, const YdComponent& component) {
  return braiding_from_yd(h, std::vector<YdComponent>{component});
}

BraidedVectorSpace paper_va_space(const FieldSpec& field) {
  // Index i*2 + j for e_i (x) e_j with u = e_0, v = e_1.
  const std::vector<std::vector<long>> m{{0, -1, 0, 0}, {0, 0, 0, -1}, {1, -1, 0, 0}, {0, 0, 1, -1}};
  return {field, {"u", "v"}, ExactMatrix::from_ints(field, m)};
}

BraidedVectorSpace flip_space(const FieldSpec& field, std::size_t d, long sign) {
  ExactMatrix c(field, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(j * d + i, i * d + j) = FieldElement(field, sign);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  return {field, std::move(labels), std::move(c)};
}

bool check_braid_equation(const BraidedVectorSpace& v) {
  const std::size_t d = v.dim();
  if (v.braiding.rows() != d * d || v.braiding.cols() != d * d) return false;
  const ExactMatrix c1 = kron_identity_right(v.braiding, d);
  const ExactMatrix c2 = kron_identity_left(v.braiding, d);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

SparseVector<std::size_t> apply_braid(const BraidedVectorSpace& v, std::size_t n, std::size_t i,
                                      const SparseVector<std::size_t>& x) {
  if (i + 1 >= n) throw std::out_of_range("braid position outside the tensor power");
  return braid_at(braid_columns(v), v.dim(), n, i, x);
}

ExactMatrix symmetrizer(const BraidedVectorSpace& v, std::size_t n) {
  return to_matrix(v.field, symmetrizer_columns(v, n), ipow(v.dim(), n));
}

std::vector<std::size_t> reduced_word(std::vector<std::size_t> permutation, bool rightmost) {
  std::vector<std::size_t> word;
  const std::size_t n = permutation.size();
  for (;;) {
    std::size_t found = n;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::size_t i = rightmost ? n - 2 - k : k;
      if (permutation[i] > permutation[i + 1]) {
        found = i;
        break;
      }
    }
    if (found == n) return word;
    std::swap(permutation[found], permutation[found + 1]);
    word.push_back(found);
  }
}

ExactMatrix braid_lift(const BraidedVectorSpace& v, std::size_t n, const std::vector<std::size_t>& word) {
  const std::size_t size = ipow(v.dim(), n);
  const auto cols = braid_columns(v);
  const FieldElement one = FieldElement::one(v.field);
  std::vector<Column> columns(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    Column x{{idx, one}};
    for (std::size_t pos : word) x = braid_at(cols, v.dim(), n, pos, x);
    columns[idx] = std::move(x);
  }
  return to_matrix(v.field, columns, size);
}

ExactMatrix symmetrizer_bruteforce(const BraidedVectorSpace& v, std::size_t n, bool rightmost) {
  const std::size_t size = ipow(v.dim(), n);
  ExactMatrix out(v.field, size, size);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out = out + braid_lift(v, n, reduced_word(perm, rightmost));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SymmetrizerReport nichols_dims(const BraidedVectorSpace& v, std::size_t max_degree) {
  SymmetrizerReport report;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const std::size_t r = column_rank(v.field, symmetrizer_columns(v, n));
    report.ranks.push_back(r);
    report.kernel_dims.push_back(ipow(v.dim(), n) - r);
    report.total += r;
  }
  auto first_zero = std::find(report.ranks.begin(), report.ranks.end(), 0u);
  report.terminated =
      first_zero != report.ranks.end() && std::all_of(first_zero, report.ranks.end(), [](std::size_t r) { return r == 0; });
  report.characteristic_caveat = !v.field.is_char_zero() && max_degree >= v.field.p;
  return report;
}

std::size_t tensor_index(const BraidedVectorSpace& v, const std::vector<std::size_t>& letters) {
  std::size_t idx = 0;
  for (std::size_t l : letters) {
    if (l >= v.dim()) throw std::out_of_range("tensor letter outside the basis");
    idx = idx * v.dim() + l;
  }
  return idx;
}

CheckReport check_relations_in_kernel(const BraidedVectorSpace& v, const std::vector<TensorRelation>& relations) {
  CheckReport report;
  for (const auto& rel : relations) {
    ++report.checked;
    if (rel.empty()) continue;
    const std::size_t n = rel.front().second.size();
    Column x;
    std::ostringstream name;
    for (const auto& [coeff, letters] : rel) {
      if (letters.size() != n) throw std::invalid_argument("relation mixes tensor degrees");
      axpy(x, Column{{tensor_index(v, letters), FieldElement(v.field, coeff)}}, FieldElement::one(v.field));
      name << (coeff < 0 ? " - " : " + ");
      if (coeff != 1 && coeff != -1) name << std::labs(coeff) << "*";
      for (std::size_t l : letters) name << v.labels[l];
    }
    if (!apply_columns(symmetrizer_columns(v, n), x).empty()) report.fail("not in ker S_" + std::to_string(n) + ":" + name.str());
  }
  return report;
}

std::size_t rank_of_monomials(const BraidedVectorSpace& v, const std::vector<std::vector<std::size_t>>& words) {
  if (words.empty()) return 0;
  const std::size_t n = words.front().size();
  const auto columns = symmetrizer_columns(v, n);
  std::vector<Column> images;
  for (const auto& w : words) images.push_back(columns[tensor_index(v, w)]);
  return column_rank(v.field, images);
}

VaAdjudication adjudicate_va(const BraidedVectorSpace& va, std::size_t max_degree) {
  VaAdjudication out;
  out.dims = nichols_dims(va, max_degree);
  // {1, u, v, u^2, vu, v^2, vuv, v^2u, v^2uv, vuv^2} with u = 0, v = 1.
  const std::vector<std::vector<std::vector<std::size_t>>> displayed{
      {{}}, {{0}, {1}}, {{0, 0}, {1, 0}, {1, 1}}, {{1, 0, 1}, {1, 1, 0}}, {{1, 1, 0, 1}, {1, 0, 1, 1}}};
  for (const auto& words : displayed) {
    out.displayed_count_by_degree.push_back(words.size());
    out.displayed_rank_by_degree.push_back(words.front().empty() ? 1 : rank_of_monomials(va, words));
  }
  std::ostringstream verdict;
  verdict << "Hilbert function";
  for (std::size_t r : out.dims.ranks) verdict << " " << r;
  verdict << " (total " << out.dims.total << ")";
  const std::size_t displayed_rank =
      std::accumulate(out.displayed_rank_by_degree.begin(), out.displayed_rank_by_degree.end(), std::size_t{0});
  verdict << "; stated dimension 9 is " << (out.dims.total == out.claimed_dimension ? "correct" : "incorrect");
  verdict << "; the 10 displayed elements span " << displayed_rank << " dimensions";
  for (std::size_t n = 0; n < displayed.size(); ++n) {
    const std::size_t rank_n = n < out.dims.ranks.size() ? out.dims.ranks[n] : 0;
    if (out.displayed_count_by_degree[n] != rank_n || out.displayed_rank_by_degree[n] != rank_n)
      verdict << "; degree " << n << ": " << out.displayed_count_by_degree[n] << " displayed, rank "
              << out.displayed_rank_by_degree[n] << ", dim " << rank_n;
  }
  out.verdict = verdict.str();
  return out;
}

}  // namespace hopf

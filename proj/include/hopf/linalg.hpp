#pragma once

#include "hopf/coeff.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hopf {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a FieldSpec.
class ExactMatrix {
 public:
  ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(const FieldSpec& field, std::size_t n);
  static ExactMatrix from_rows(const FieldSpec& field, const std::vector<Vector>& rows, std::size_t cols);
  /// Integer entries, convenient for tests and fixed tables.
  static ExactMatrix from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  ExactMatrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref_rank(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

/// Basis of the right nullspace. Vectors are the standard free-variable
/// basis, so the first nonzero coordinate of each is 1.
std::vector<Vector> nullspace(const ExactMatrix& m);

/// Rank of a list of vectors of equal length.
std::size_t span_rank(const FieldSpec& field, const std::vector<Vector>& vectors, std::size_t dim);

/// Sparse vector keyed by an ordered basis label.
template <class Key>
using SparseVector = std::map<Key, FieldElement>;

/// All linear relations sum_i lambda_i v_i = 0 among sparse vectors,
/// returned as a nullspace basis in coordinates lambda (first nonzero = 1,
/// reduced echelon across the basis).
template <class Key>
std::vector<Vector> linear_dependencies(const FieldSpec& field, const std::vector<SparseVector<Key>>& vectors);

/// Incrementally maintained span of sparse vectors (echelon form keyed by
/// each row's smallest key).
template <class Key>
class SparseSpan {
 public:
  explicit SparseSpan(const FieldSpec& field) : field_(field) {}

  /// Adds `v`; returns false when it was already in the span.
  bool insert(const SparseVector<Key>& v) {
    SparseVector<Key> r = reduce(v);
    if (r.empty()) return false;
    const Key pivot = r.begin()->first;
    const FieldElement inv = r.begin()->second.inverse();
    for (auto& [k, c] : r) c = c * inv;
    rows_.emplace(pivot, std::move(r));
    return true;
  }
  bool contains(const SparseVector<Key>& v) const { return reduce(v).empty(); }
  std::size_t dimension() const { return rows_.size(); }

  /// Remainder of `v` after elimination against the stored rows.
  SparseVector<Key> reduce(SparseVector<Key> v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto piv = rows_.find(it->first);
      if (piv == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const FieldElement factor = -it->second;
      for (const auto& [k, c] : piv->second) {
        auto [slot, inserted] = v.try_emplace(k, factor * c);
        if (!inserted) {
          slot->second += factor * c;
          if (slot->second.is_zero()) v.erase(slot);
        }
      }
      it = v.upper_bound(key);
    }
    return v;
  }

 private:
  FieldSpec field_;
  std::map<Key, SparseVector<Key>> rows_;
};

// ---------------------------------------------------------------------------

template <class Key>
std::vector<Vector> linear_dependencies(const FieldSpec& field, const std::vector<SparseVector<Key>>& vectors) {
  struct Row {
    SparseVector<Key> v;
    std::map<std::size_t, FieldElement> combo;
  };
  const std::size_t n = vectors.size();
  std::map<Key, Row> pivots;  // pivot key -> row with coefficient 1 at the pivot, no smaller keys
  std::vector<Vector> relations;

  auto axpy = [](auto& target, const auto& source, const FieldElement& scale) {
    for (const auto& [k, c] : source) {
      auto [it, inserted] = target.try_emplace(k, scale * c);
      if (!inserted) {
        it->second += scale * c;
        if (it->second.is_zero()) target.erase(it);
      }
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    Row row{vectors[i], {}};
    row.combo.emplace(i, FieldElement::one(field));
    auto it = row.v.begin();
    while (it != row.v.end()) {
      auto piv = pivots.find(it->first);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const FieldElement factor = -it->second;
      axpy(row.v, piv->second.v, factor);
      axpy(row.combo, piv->second.combo, factor);
      it = row.v.upper_bound(key);
    }
    if (row.v.empty()) {
      Vector rel(n, FieldElement::zero(field));
      for (const auto& [j, c] : row.combo) rel[j] = c;
      relations.push_back(std::move(rel));
      continue;
    }
    const Key pivot_key = row.v.begin()->first;
    const FieldElement inv = row.v.begin()->second.inverse();
    for (auto& [k, c] : row.v) c = c * inv;
    for (auto& [k, c] : row.combo) c = c * inv;
    pivots.emplace(pivot_key, std::move(row));
  }
  if (relations.empty()) return relations;
  // Canonical basis of the relation space: its reduced row echelon form.
  const RrefResult r = rref_rank(ExactMatrix::from_rows(field, relations, n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.rref.row(i));
  return out;
}

}  // namespace hopf

#include "hopf/linalg.hpp"

namespace hopf {

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

ExactMatrix ExactMatrix::identity(const FieldSpec& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field, const std::vector<Vector>& rows, std::size_t cols) {
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FieldElement(field, rows[i][j]);
  }
  return m;
}

Vector ExactMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  Vector out(rows_, FieldElement::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref_rank(const ExactMatrix& m) {
  ExactMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(row, j));
    const FieldElement inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j)
      if (!r(row, j).is_zero()) r(row, j) = r(row, j) * inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const FieldElement factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return rref_rank(m).rank; }

std::vector<Vector> nullspace(const ExactMatrix& m) {
  const RrefResult r = rref_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), FieldElement::zero(m.field()));
    v[free] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref(i, free);
    basis.push_back(std::move(v));
  }
  // Free-variable vectors have their first nonzero entry at a pivot column
  // only when that pivot precedes the free column; rescale to make it 1.
  for (auto& v : basis) {
    for (const auto& x : v)
      if (!x.is_zero()) {
        const FieldElement inv = x.inverse();
        for (auto& y : v) y = y * inv;
        break;
      }
  }
  return basis;
}

std::size_t span_rank(const FieldSpec& field, const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(ExactMatrix::from_rows(field, vectors, dim));
}

}  // namespace hopf

#include "reylie/linalg.hpp"

#include "reylie/error.hpp"

#include <string>
#include <utility>

namespace reylie {

namespace {

void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw InputError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

void require_same_shape(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch");
}

} // namespace

// ---------------------------------------------------------------------------
// Vec
// ---------------------------------------------------------------------------

Vec Vec::basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rat(1);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<std::size_t> Vec::first_nonzero() const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return i;
  }
  return std::nullopt;
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
  }
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
  }
  return *this;
}

Vec& Vec::operator*=(const Rat& s) {
  for (auto& c : coords_) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

void Vec::axpy(const Rat& s, const Vec& o) {
  require_same_size(*this, o);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i].add_product(s, o.coords_[i]);
}

Vec Vec::concat(const Vec& a, const Vec& b) {
  std::vector<Rat> xs(a.coords_);
  xs.insert(xs.end(), b.coords_.begin(), b.coords_.end());
  return Vec(std::move(xs));
}

Vec Vec::slice(std::size_t begin, std::size_t count) const {
  if (begin + count > coords_.size()) throw InputError("vector slice out of range");
  return Vec(std::vector<Rat>(coords_.begin() + static_cast<std::ptrdiff_t>(begin),
                              coords_.begin() + static_cast<std::ptrdiff_t>(begin + count)));
}

// ---------------------------------------------------------------------------
// Mat
// ---------------------------------------------------------------------------

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

Mat Mat::from_columns(std::size_t rows, std::span<const Vec> columns) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("matrix block out of range");
  Mat m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

// ---------------------------------------------------------------------------
// Free functions
// ---------------------------------------------------------------------------

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) {
    throw InputError("mat_apply: matrix has " + std::to_string(m.cols()) +
                     " columns, vector has length " + std::to_string(v.size()));
  }
  Vec out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) out[r].add_product(m(r, c), v[c]);
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InputError("mat_mul: inner dimension mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const Rat& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c).add_product(ark, b(k, c));
    }
  }
  return out;
}

Mat transpose(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Rat determinant(const Mat& m) {
  if (!m.is_square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m;
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rat f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c).add_product(-f, a(col, c));
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rat p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rat f = -a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c).add_product(f, a(col, c));
        inv(r, c).add_product(f, inv(col, c));
      }
    }
  }
  return inv;
}

Mat combine(std::span<const Mat> mats, const Vec& coeffs, std::size_t rows, std::size_t cols) {
  if (mats.size() != coeffs.size()) throw InputError("combine: coefficient count mismatch");
  Mat out(rows, cols);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const Mat& mk = mats[k];
    if (mk.rows() != rows || mk.cols() != cols) throw InputError("combine: matrix shape mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c).add_product(coeffs[k], mk(r, c));
  }
  return out;
}

} // namespace reylie

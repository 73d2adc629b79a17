#pragma once

#include "reylie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace reylie {

/// Coordinate vector over Q. Its length is the dimension of the ambient space.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t n) : coords_(n) {}
  Vec(std::initializer_list<Rat> xs) : coords_(xs) {}
  explicit Vec(std::vector<Rat> xs) : coords_(std::move(xs)) {}

  static Vec basis(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rat> coords() const { return coords_; }

  bool is_zero() const;
  /// Index of the first nonzero coordinate, if any.
  std::optional<std::size_t> first_nonzero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rat& s);
  /// this += s * o
  void axpy(const Rat& s, const Vec& o);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rat& s, Vec a) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= Rat(-1); }
  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }

  /// Concatenation [a; b], used for block spaces (first factor, then second).
  static Vec concat(const Vec& a, const Vec& b);
  Vec slice(std::size_t begin, std::size_t count) const;

private:
  std::vector<Rat> coords_;
};

/// Dense rows x cols matrix over Q. Operators act on column coordinate
/// vectors: column j holds the image of basis vector j.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major literal: {{a, b}, {c, d}}.
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Matrix whose columns are the given vectors (all of equal length).
  static Mat from_columns(std::size_t rows, std::span<const Vec> columns);
  /// Block-diagonal [a 0; 0 b].
  static Mat block_diag(const Mat& a, const Mat& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_symmetric() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= Rat(-1); }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact matrix-vector product. Throws InputError if m.cols() != v.size().
Vec mat_apply(const Mat& m, const Vec& v);
/// Exact product a*b. Throws InputError on inner-dimension mismatch.
Mat mat_mul(const Mat& a, const Mat& b);
/// Dual map in dual bases.
Mat transpose(const Mat& m);

Rat determinant(const Mat& m);
/// Exact inverse; std::nullopt when singular. Throws for non-square input.
std::optional<Mat> inverse(const Mat& m);

/// Linear combination sum_k coeffs[k] * mats[k]; realizes rho(x) from rho(e_k).
Mat combine(std::span<const Mat> mats, const Vec& coeffs, std::size_t rows, std::size_t cols);

} // namespace reylie

#pragma once

#include "reylie/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <utility>

namespace reylie {

/// Sparse element of V ⊗ W. Zeros are never stored and iteration is
/// lexicographic in (i, j).
class Tensor2 {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  Tensor2() = default;
  Tensor2(std::size_t dim_left, std::size_t dim_right) : dl_(dim_left), dr_(dim_right) {}

  /// Tensor with entries t(i, j) = m(i, j).
  static Tensor2 from_matrix(const Mat& m);
  /// u ⊗ v
  static Tensor2 outer(const Vec& u, const Vec& v);

  std::size_t dim_left() const { return dl_; }
  std::size_t dim_right() const { return dr_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  Rat get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rat& c);
  void add(std::size_t i, std::size_t j, const Rat& c);

  const std::map<Key, Rat>& entries() const { return entries_; }
  Mat to_matrix() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Rat& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator-(Tensor2 a) { return a *= Rat(-1); }
  friend Tensor2 operator*(const Rat& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.dl_ == b.dl_ && a.dr_ == b.dr_ && a.entries_ == b.entries_;
  }

private:
  void check_index(std::size_t i, std::size_t j) const;
  std::size_t dl_ = 0;
  std::size_t dr_ = 0;
  std::map<Key, Rat> entries_;
};

/// Sparse order-3 tensor; holds [[r,r]] and co-Jacobi residuals.
class Tensor3 {
public:
  using Key = std::array<std::size_t, 3>;

  Tensor3() = default;
  explicit Tensor3(std::array<std::size_t, 3> dims) : dims_(dims) {}

  const std::array<std::size_t, 3>& dims() const { return dims_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  Rat get(std::size_t i, std::size_t j, std::size_t k) const;
  void add(std::size_t i, std::size_t j, std::size_t k, const Rat& c);
  const std::map<Key, Rat>& entries() const { return entries_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }

private:
  std::array<std::size_t, 3> dims_{};
  std::map<Key, Rat> entries_;
};

/// (f ⊗ g)(t)
Tensor2 tensor2_map(const Mat& f, const Mat& g, const Tensor2& t);
/// (A⊗1⊗1 + 1⊗A⊗1 + 1⊗1⊗A)(t) for a square t and A.
Tensor3 tensor3_derive(const Mat& A, const Tensor3& t);
/// σ(t): (i, j) -> (j, i). Throws InputError on non-square input.
Tensor2 flip(const Tensor2& t);

} // namespace reylie

#include "reylie/tensor.hpp"

#include "reylie/error.hpp"

#include <string>

namespace reylie {

void Tensor2::check_index(std::size_t i, std::size_t j) const {
  if (i >= dl_ || j >= dr_) {
    throw InputError("tensor index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
  }
}

Tensor2 Tensor2::from_matrix(const Mat& m) {
  Tensor2 t(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) t.entries_.emplace(Key{i, j}, m(i, j));
  return t;
}

Tensor2 Tensor2::outer(const Vec& u, const Vec& v) {
  Tensor2 t(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) t.entries_.emplace(Key{i, j}, u[i] * v[j]);
  }
  return t;
}

Rat Tensor2::get(std::size_t i, std::size_t j) const {
  check_index(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rat(0) : it->second;
}

void Tensor2::set(std::size_t i, std::size_t j, const Rat& c) {
  check_index(i, j);
  if (c.is_zero())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = c;
}

void Tensor2::add(std::size_t i, std::size_t j, const Rat& c) {
  check_index(i, j);
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Mat Tensor2::to_matrix() const {
  Mat m(dl_, dr_);
  for (const auto& [k, c] : entries_) m(k.first, k.second) = c;
  return m;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (dl_ != o.dl_ || dr_ != o.dr_) throw InputError("tensor shape mismatch");
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (dl_ != o.dl_ || dr_ != o.dr_) throw InputError("tensor shape mismatch");
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, -c);
  return *this;
}

Tensor2& Tensor2::operator*=(const Rat& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, c] : entries_) c *= s;
  return *this;
}

Rat Tensor3::get(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? Rat(0) : it->second;
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
  if (i >= dims_[0] || j >= dims_[1] || k >= dims_[2]) throw InputError("tensor3 index out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Tensor2 tensor2_map(const Mat& f, const Mat& g, const Tensor2& t) {
  if (f.cols() != t.dim_left() || g.cols() != t.dim_right())
    throw InputError("tensor2_map: dimension mismatch");
  // accumulate densely then sparsify
  Mat acc(f.rows(), g.rows());
  for (const auto& [key, c] : t.entries()) {
    const auto [i, j] = key;
    for (std::size_t a = 0; a < f.rows(); ++a) {
      if (f(a, i).is_zero()) continue;
      const Rat fc = f(a, i) * c;
      for (std::size_t b = 0; b < g.rows(); ++b) acc(a, b).add_product(fc, g(b, j));
    }
  }
  return Tensor2::from_matrix(acc);
}

Tensor3 tensor3_derive(const Mat& A, const Tensor3& t) {
  const auto& d = t.dims();
  if (!A.is_square() || d[0] != A.cols() || d[1] != A.cols() || d[2] != A.cols())
    throw InputError("tensor3_derive: dimension mismatch");
  Tensor3 out(d);
  const std::size_t n = A.rows();
  for (const auto& [key, c] : t.entries()) {
    const auto [i, j, k] = key;
    for (std::size_t a = 0; a < n; ++a) {
      if (!A(a, i).is_zero()) out.add(a, j, k, A(a, i) * c);
      if (!A(a, j).is_zero()) out.add(i, a, k, A(a, j) * c);
      if (!A(a, k).is_zero()) out.add(i, j, a, A(a, k) * c);
    }
  }
  return out;
}

Tensor2 flip(const Tensor2& t) {
  if (t.dim_left() != t.dim_right()) throw InputError("flip of non-square tensor");
  Tensor2 out(t.dim_right(), t.dim_left());
  for (const auto& [k, c] : t.entries()) out.set(k.second, k.first, c);
  return out;
}

} // namespace reylie

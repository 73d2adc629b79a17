#pragma once

#include "reylie/lie.hpp"
#include "reylie/tensor.hpp"

#include <random>

// Small algebras shared by the unit tests. sl2 is in (H, X, Y) order.
namespace fx {

using namespace reylie;

inline LieAlgebra sl2() {
  return LieAlgebra::make({"H", "X", "Y"}, {{{0, 1}, Vec{0, 2, 0}}, {{0, 2}, Vec{0, 0, -2}}, {{1, 2}, Vec{1, 0, 0}}});
}

// B(H)=2X, B(X)=0, B(Y)=-H
inline Mat B() { return Mat{{0, 0, -1}, {2, 0, 0}, {0, 0, 0}}; }

inline BilinForm S() { return BilinForm(Mat{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }

// H⊗X - X⊗H
inline Tensor2 r() {
  Tensor2 t(3, 3);
  t.set(0, 1, 1);
  t.set(1, 0, -1);
  return t;
}

// ½H⊗H + X⊗Y + Y⊗X
inline Tensor2 casimir() {
  Tensor2 t(3, 3);
  t.set(0, 0, Rat(1, 2));
  t.set(1, 2, 1);
  t.set(2, 1, 1);
  return t;
}

// dual bracket of r = H⊗X - X⊗H
inline LieAlgebra fl_dual() {
  return LieAlgebra::make({"H*", "X*", "Y*"}, {{{0, 1}, Vec{2, 0, 0}}, {{1, 2}, Vec{0, 0, -2}}});
}

inline LieAlgebra km_dual() {
  return LieAlgebra::make({"H*", "X*", "Y*"},
                          {{{0, 1}, Vec{0, Rat(1, 4), 0}}, {{0, 2}, Vec{0, 0, Rat(1, 4)}}});
}

inline LieAlgebra so3() {
  return LieAlgebra::make({"a", "b", "c"}, {{{0, 1}, Vec{0, 0, 1}}, {{1, 2}, Vec{1, 0, 0}}, {{2, 0}, Vec{0, 1, 0}}});
}

// [p,q]=q
inline LieAlgebra aff1() { return LieAlgebra::make({"p", "q"}, {{{0, 1}, Vec{0, 1}}}); }

// [p,q]=z
inline LieAlgebra heis() { return LieAlgebra::make({"p", "q", "z"}, {{{0, 1}, Vec{0, 0, 1}}}); }

// assorted operators on sl2, Reynolds or not
inline std::vector<Mat> sl2_operators() {
  return {B(),
          Mat::identity(3),
          Mat::zero(3, 3),
          Rat(2) * Mat::identity(3),
          Mat{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          Mat{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
          Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
          -B(),
          transpose(B()),
          Mat{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}};
}

inline const Vec H{1, 0, 0}, X{0, 1, 0}, Y{0, 0, 1};

inline Rat rand_rat(std::mt19937& gen, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 2);
  return Rat(num(gen), den(gen));
}

inline Mat rand_mat(std::mt19937& gen, std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_rat(gen);
  return m;
}

} // namespace fx

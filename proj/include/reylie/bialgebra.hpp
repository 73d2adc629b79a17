#pragma once

#include "reylie/certificate.hpp"
#include "reylie/lie.hpp"
#include "reylie/reynolds.hpp"
#include "reylie/tensor.hpp"

#include <string>
#include <vector>

namespace reylie {

/// g together with a bracket on g*'s coordinates; the cobracket is derived.
struct LieBialgebra {
  LieAlgebra g;
  LieAlgebra dual;
  friend bool operator==(const LieBialgebra&, const LieBialgebra&) = default;
};

struct ReynoldsLieBialgebra {
  LieBialgebra bialg;
  Mat R;
  friend bool operator==(const ReynoldsLieBialgebra&, const ReynoldsLieBialgebra&) = default;
};

/// Δ(e_k)(i, j) = coefficient of e_k* in [e_i*, e_j*].
std::vector<Tensor2> cobracket_from_dual(const LieAlgebra& dual);
/// Inverse of cobracket_from_dual. Throws InputError for non-skew or mis-sized input.
LieAlgebra dual_from_cobracket(const std::vector<Tensor2>& deltas, std::vector<std::string> labels = {});

/// (1 + ε + ε²)(1 ⊗ Δ)Δ = 0 on every basis vector.
Certificate is_lie_coalgebra(const std::vector<Tensor2>& deltas, CheckOptions opts = {});
/// (P⊗P)Δ = (P⊗1 + 1⊗P - P⊗P)ΔP on every basis vector.
Certificate is_reynolds_coalgebra(const std::vector<Tensor2>& deltas, const Mat& P, CheckOptions opts = {});

/// Jacobi on both sides and the 1-cocycle condition
/// Δ[x,y] = (ad_x⊗1 + 1⊗ad_x)Δy - (ad_y⊗1 + 1⊗ad_y)Δx.
Certificate is_lie_bialgebra(const LieBialgebra& b, CheckOptions opts = {});
/// Bialgebra, R Reynolds on g and -R^t Reynolds on the dual.
Certificate is_reynolds_bialgebra(const LieBialgebra& b, const Mat& R, CheckOptions opts = {});
inline Certificate is_reynolds_bialgebra(const ReynoldsLieBialgebra& rb, CheckOptions opts = {}) {
  return is_reynolds_bialgebra(rb.bialg, rb.R, opts);
}

/// g ⋈ g* with [x,ξ] = ad*_x ξ - ad*_ξ x and operator R ⊕ (-R^t).
/// Throws InputError for an invalid Reynolds bialgebra.
ReynoldsLieAlgebra drinfeld_double(const ReynoldsLieBialgebra& rb);
/// (d, d*, R ⊕ -R^t) with d* = g* ⊕ g carrying (-[ξ,η]_{g*}, [x,y]_g).
ReynoldsLieBialgebra double_quasitriangular(const ReynoldsLieBialgebra& rb);

/// Δ(e_k) = (ad_k⊗1 + 1⊗ad_k) r
std::vector<Tensor2> coboundary_cobracket(const LieAlgebra& g, const Tensor2& r);
/// (ad_x⊗1 + 1⊗ad_x)(r + σr) = 0 and [[r,r]] ad-invariant.
Certificate coboundary_conditions(const LieAlgebra& g, const Tensor2& r, CheckOptions opts = {});
/// (A_x⊗1 + 1⊗A_x)(R⊗1 + 1⊗R)r = 0 with A_x = ad_{Rx} + R ad_{Rx} - R ad_x.
Certificate reynolds_coboundary_condition(const LieAlgebra& g, const Mat& R, const Tensor2& r, CheckOptions opts = {});

} // namespace reylie

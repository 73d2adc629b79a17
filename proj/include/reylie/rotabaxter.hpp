#pragma once

#include "reylie/bialgebra.hpp"
#include "reylie/certificate.hpp"
#include "reylie/lie.hpp"
#include "reylie/tensor.hpp"

namespace reylie {

struct RotaBaxterAlg {
  LieAlgebra L;
  Mat B;
  Rat lambda;
  friend bool operator==(const RotaBaxterAlg&, const RotaBaxterAlg&) = default;
};

struct QuadraticRB {
  RotaBaxterAlg rb;
  BilinForm S;
};

/// [Bx,By] = B([Bx,y] + [x,By] + λ[x,y])
Certificate is_rota_baxter(const LieAlgebra& L, const Mat& B, const Rat& lambda, CheckOptions opts = {});
inline Certificate is_rota_baxter(const RotaBaxterAlg& rb, CheckOptions opts = {}) {
  return is_rota_baxter(rb.L, rb.B, rb.lambda, opts);
}
/// [x,y]_B = [Bx,y] + [x,By] + λ[x,y]
LieAlgebra descendent(const RotaBaxterAlg& rb);
/// R Reynolds on the descendent algebra; the note records whether R and B commute.
Certificate reynolds_descends(const RotaBaxterAlg& rb, const Mat& R, CheckOptions opts = {});

/// Rota-Baxter, (L,S) quadratic and S(x,By) + S(Bx,y) + λS(x,y) = 0.
Certificate is_quadratic_rb(const QuadraticRB& q, CheckOptions opts = {});
/// R^{*,S} = G^{-1} R^t G, so that S(Ra,b) = S(a,R^{*,S}b).
Mat s_adjoint(const Mat& R, const BilinForm& S);

/// r with r_+ = B ∘ I_S. Throws InputError for an invalid input.
Tensor2 r_from_qrb(const QuadraticRB& q);
/// [[r,r]] = 0 and [S#x, S#y]_r = S#[x,y]_B for r = r_from_qrb(q).
Certificate r_from_qrb_certificate(const QuadraticRB& q, CheckOptions opts = {});

/// Matrix of r_+ : g* -> g, r_+(ξ) = r(ξ, .).
Mat r_plus(const Tensor2& r);
/// I = r_+ - r_-, r_- = -r_+^*
Mat i_operator(const Tensor2& r);
/// (ad_x⊗1 + 1⊗ad_x)(r + σr) = 0
Certificate r_invariance(const LieAlgebra& g, const Tensor2& r, CheckOptions opts = {});
/// [ξ,η]_r = ad*_{r_+ξ}η - ad*_{r_-η}ξ. Throws InputError when r + σr is not invariant.
LieAlgebra dual_bracket_from_r(const LieAlgebra& g, const Tensor2& r);
/// Invariance, I∘ad*_x = ad_x∘I and det I != 0.
Certificate is_factorizable(const LieAlgebra& g, const Tensor2& r, CheckOptions opts = {});

/// R Reynolds on L and B∘R^{*,S} = -R∘B. The note gives the verdict with the
/// plain transpose in place of R^{*,S} and whether λ(R + R^{*,S}) = 0.
Certificate is_reynolds_on_qrb(const QuadraticRB& q, const Mat& R, CheckOptions opts = {});
/// -R^{*,S} Reynolds on the descendent algebra.
Certificate minus_rstar_on_descendent(const QuadraticRB& q, const Mat& R, CheckOptions opts = {});
/// (g, g*_{r^{B,S}}, R). Throws InputError when q or R is invalid.
ReynoldsLieBialgebra thmFL_bialgebra(const QuadraticRB& q, const Mat& R);

} // namespace reylie

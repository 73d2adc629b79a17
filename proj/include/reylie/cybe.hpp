#pragma once

#include "reylie/certificate.hpp"
#include "reylie/lie.hpp"
#include "reylie/matched.hpp"
#include "reylie/nslie.hpp"
#include "reylie/reynolds.hpp"
#include "reylie/tensor.hpp"

#include <string>
#include <vector>

namespace reylie {

/// [[r,r]] = [r12,r13] + [r13,r23] + [r12,r23]
Tensor3 cybe_bracket(const LieAlgebra& g, const Tensor2& r);
/// [[r,r]] = 0
Certificate is_cybe_solution(const LieAlgebra& g, const Tensor2& r, CheckOptions opts = {});
/// [[r,r]] = 0 and (R⊗1 + 1⊗R)r = 0
Certificate is_cybe_solution_reynolds(const ReynoldsLieAlgebra& A, const Tensor2& r, CheckOptions opts = {});
bool is_skew(const Tensor2& r);

/// K : W -> g for a Reynolds representation (W; T, rho) of (g, R).
struct RelativeRB {
  ReynoldsLieAlgebra A;
  ReynoldsRep rr;
  Mat K;
  friend bool operator==(const RelativeRB&, const RelativeRB&) = default;
};

/// [Ku,Kv] = K(rho(Ku)v - rho(Kv)u) and R∘K = K∘T, after the Reynolds checks on A and rr.
Certificate is_relative_rb(const RelativeRB& rel, CheckOptions opts = {});
/// (W, [u,v]_K = rho(Ku)v - rho(Kv)u, T). Labels default to w0, w1, ...
ReynoldsLieAlgebra descendent_on_W(const RelativeRB& rel, std::vector<std::string> labels = {});
/// ((g,R), (W_K,T); rho, mu) with mu(u)x = K(rho(x)u) - [x,Ku]. Throws InputError for an invalid rel.
ReynoldsMatchedPair matched_from_relrb(const RelativeRB& rel);

/// A Reynolds Lie algebra with a tensor that should solve the Reynolds CYBE.
struct CybeSolution {
  ReynoldsLieAlgebra A;
  Tensor2 r;
};

/// g ⋉_{rho*} W* with operator R ⊕ (-T^t) and r_K = K̄ - σK̄, K̄ = Σ K_ia w_a* ⊗ e_i.
/// Throws InputError for an invalid rel.
CybeSolution rk_solution(const RelativeRB& rel);

struct PreLieAlgebra {
  std::vector<std::string> labels;
  BilinearProduct prod;
  std::size_t dim() const { return labels.size(); }
  friend bool operator==(const PreLieAlgebra&, const PreLieAlgebra&) = default;
};

struct ReynoldsPreLie {
  PreLieAlgebra A;
  Mat R;
  friend bool operator==(const ReynoldsPreLie&, const ReynoldsPreLie&) = default;
};

/// (x,y,z) = (y,x,z) for the associator (x,y,z) = {{x,y},z} - {x,{y,z}}.
Certificate is_prelie(const PreLieAlgebra& A, CheckOptions opts = {});
/// Pre-Lie and {Rx,Ry} = R({Rx,y} + {x,Ry} - {Rx,Ry}).
Certificate is_reynolds_prelie(const PreLieAlgebra& A, const Mat& R, CheckOptions opts = {});
inline Certificate is_reynolds_prelie(const ReynoldsPreLie& rp, CheckOptions opts = {}) {
  return is_reynolds_prelie(rp.A, rp.R, opts);
}

/// [x,y] = {x,y} - {y,x} with the same operator.
ReynoldsLieAlgebra subadjacent(const ReynoldsPreLie& rp);
/// (g; R, L) with L(e_i) left multiplication.
ReynoldsRep left_rep(const ReynoldsPreLie& rp);
/// {u,v} = rho(Ku)v on W with T. Throws InputError for an invalid rel.
ReynoldsPreLie prelie_from_relrb(const RelativeRB& rel, std::vector<std::string> labels = {});
/// {x,y} = K(rho(x)K^{-1}y) on g with R. Throws InputError for an invalid rel or singular K.
ReynoldsPreLie prelie_from_invertible_relrb(const RelativeRB& rel);
/// g ⋉_{L*} g* with operator R ⊕ (-R^t) and r = Σ_i (e_i ⊗ e_i* - e_i* ⊗ e_i).
/// Throws InputError for an invalid rp.
CybeSolution canonical_r(const ReynoldsPreLie& rp);

} // namespace reylie

#pragma once

#include "reylie/certificate.hpp"
#include "reylie/lie.hpp"

#include <cstdint>

namespace reylie {

/// Lie algebra with a Reynolds operator R:
/// [Rx,Ry] = R([Rx,y] + [x,Ry] - [Rx,Ry]).
struct ReynoldsLieAlgebra {
  LieAlgebra L;
  Mat R;

  /// Throws InputError on shape mismatch or when R is not Reynolds.
  static ReynoldsLieAlgebra make(LieAlgebra L, Mat R);
  friend bool operator==(const ReynoldsLieAlgebra&, const ReynoldsLieAlgebra&) = default;
};

/// (rho, T) on W for a Reynolds Lie algebra.
struct ReynoldsRep {
  Representation rep;
  Mat T;
  friend bool operator==(const ReynoldsRep&, const ReynoldsRep&) = default;
};

void require_square_op(const Mat& R, std::size_t n, const char* what);

Certificate is_reynolds(const LieAlgebra& L, const Mat& R, CheckOptions opts = {});
/// [x,y]_R = [Rx,y] + [x,Ry] - [Rx,Ry]
Vec induced_bracket(const LieAlgebra& L, const Mat& R, const Vec& x, const Vec& y);
ReynoldsLieAlgebra induced_algebra(const ReynoldsLieAlgebra& A);

/// rho(Rx)(Tu) = T(rho(x)(Tu) + rho(Rx)u - rho(Rx)(Tu)) for all basis x, u,
/// after checking that rho is a representation.
Certificate is_reynolds_rep(const ReynoldsLieAlgebra& A, const ReynoldsRep& rr, CheckOptions opts = {});
ReynoldsRep adjoint_reynolds_rep(const ReynoldsLieAlgebra& A);
/// (W*; -T^t, rho*)
ReynoldsRep dual_reynolds_rep(const ReynoldsRep& rr);
/// g ⋉ W with operator R ⊕ T. Throws InputError for an invalid rr.
ReynoldsLieAlgebra semidirect_reynolds(const ReynoldsLieAlgebra& A, const ReynoldsRep& rr);

/// (L,S) quadratic and S(Rx,y) + S(x,Ry) = 0.
Certificate is_quadratic_reynolds(const ReynoldsLieAlgebra& A, const BilinForm& S, CheckOptions opts = {});
/// S♯ ad(e_i) = ad*(e_i) S♯ for all i, and S♯ R = -R^t S♯.
Certificate check_ssharp_intertwiner(const ReynoldsLieAlgebra& A, const BilinForm& S, CheckOptions opts = {});

struct BlockWindowOptions {
  bool drop_singular = false; // skip and count tuples touching m+i+1 = 0 instead of rejecting
  bool first_only = false;
};

struct BlockWindowResult {
  Certificate reynolds;    // [R L_{m,i}, R L_{n,j}] == R([R.,.] + [.,R.] - [R.,R.])
  Certificate closed_form; // induced coefficient == (m+n+i+j+1)(n(i+q)-m(j+q))/((m+i+1)(n+j+1))
  std::size_t checked = 0;
  std::size_t target_skipped = 0; // m+n+i+j+1 = 0
  std::size_t singular = 0;       // m+i+1 = 0 or n+j+1 = 0, only with drop_singular
  bool pass() const { return reynolds.pass && closed_form.pass; }
};

/// Block algebra B(q): [L_{m,i}, L_{n,j}] = (n(i+q) - m(j+q)) L_{m+n,i+j},
/// R(L_{m,i}) = L_{m,i}/(m+i+1), checked on lo <= m,i,n,j <= hi.
/// Throws InputError for lo > hi or a singular index without drop_singular.
BlockWindowResult block_window_check(const Rat& q, std::int64_t lo, std::int64_t hi, BlockWindowOptions opts = {});

} // namespace reylie

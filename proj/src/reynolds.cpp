#include "reylie/reynolds.hpp"

#include "reylie/error.hpp"

#include <string>

namespace reylie {

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

} // namespace

void require_square_op(const Mat& R, std::size_t n, const char* what) {
  if (R.rows() != n || R.cols() != n)
    throw InputError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

ReynoldsLieAlgebra ReynoldsLieAlgebra::make(LieAlgebra L, Mat R) {
  Certificate c = is_reynolds(L, R, {.first_only = true});
  if (!c.pass) throw InputError("not a Reynolds operator: " + to_string(c));
  return ReynoldsLieAlgebra{std::move(L), std::move(R)};
}

Certificate is_reynolds(const LieAlgebra& L, const Mat& R, CheckOptions opts) {
  require_square_op(R, L.dim(), "Reynolds operator");
  ViolationRecorder rec("reynolds", "[Rx,Ry]=R([Rx,y]+[x,Ry]-[Rx,Ry])", opts);
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = i + 1; j < n && !rec.done(); ++j) {
      const Vec ri = R.column(i), rj = R.column(j);
      const Vec lhs = L.bracket(ri, rj);
      Vec inner = L.bracket(ri, Vec::basis(n, j)) + L.bracket(Vec::basis(n, i), rj) - lhs;
      rec.record({idx(i), idx(j)}, lhs - mat_apply(R, inner));
    }
  return rec.finish();
}

Vec induced_bracket(const LieAlgebra& L, const Mat& R, const Vec& x, const Vec& y) {
  const Vec rx = mat_apply(R, x), ry = mat_apply(R, y);
  return L.bracket(rx, y) + L.bracket(x, ry) - L.bracket(rx, ry);
}

ReynoldsLieAlgebra induced_algebra(const ReynoldsLieAlgebra& A) {
  const std::size_t n = A.L.dim();
  LieAlgebra ind = LieAlgebra::from_bracket(
      A.L.labels(),
      [&](std::size_t i, std::size_t j) { return induced_bracket(A.L, A.R, Vec::basis(n, i), Vec::basis(n, j)); },
      false);
  return ReynoldsLieAlgebra{std::move(ind), A.R};
}

Certificate is_reynolds_rep(const ReynoldsLieAlgebra& A, const ReynoldsRep& rr, CheckOptions opts) {
  require_rep_shape(A.L, rr.rep);
  require_square_op(rr.T, rr.rep.module_dim, "T");
  return all_of("reynolds-rep", {
      [&] { return is_representation(A.L, rr.rep, opts); },
      [&] {
        ViolationRecorder rec("reynolds-rep", "rho(Rx)T=T(rho(x)T+rho(Rx)-rho(Rx)T)", opts);
        const Mat& T = rr.T;
        for (std::size_t i = 0; i < A.L.dim() && !rec.done(); ++i) {
          const Mat rho_rx = rr.rep.at(A.R.column(i));
          const Mat lhs = mat_mul(rho_rx, T);
          Mat inner = mat_mul(rr.rep.rho[i], T) + rho_rx - lhs;
          rec.record({idx(i)}, lhs - mat_mul(T, inner));
        }
        return rec.finish();
      }});
}

ReynoldsRep adjoint_reynolds_rep(const ReynoldsLieAlgebra& A) { return ReynoldsRep{adjoint_rep(A.L), A.R}; }

ReynoldsRep dual_reynolds_rep(const ReynoldsRep& rr) { return ReynoldsRep{dual_rep(rr.rep), -transpose(rr.T)}; }

ReynoldsLieAlgebra semidirect_reynolds(const ReynoldsLieAlgebra& A, const ReynoldsRep& rr) {
  Certificate c = is_reynolds_rep(A, rr, {.first_only = true});
  if (!c.pass) throw InputError("semidirect_reynolds: invalid Reynolds representation: " + to_string(c));
  return ReynoldsLieAlgebra{semidirect(A.L, rr.rep), Mat::block_diag(A.R, rr.T)};
}

Certificate is_quadratic_reynolds(const ReynoldsLieAlgebra& A, const BilinForm& S, CheckOptions opts) {
  require_square_op(A.R, A.L.dim(), "Reynolds operator");
  return all_of("quadratic-reynolds", {
      [&] { return is_quadratic(A.L, S, opts); },
      [&] {
        ViolationRecorder rec("quadratic-reynolds", "S(Rx,y)+S(x,Ry)=0", opts);
        const Mat m = mat_mul(transpose(A.R), S.gram()) + mat_mul(S.gram(), A.R);
        for (std::size_t i = 0; i < m.rows() && !rec.done(); ++i) {
          Vec row(m.cols());
          for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
          rec.record({idx(i)}, row);
        }
        return rec.finish();
      }});
}

Certificate check_ssharp_intertwiner(const ReynoldsLieAlgebra& A, const BilinForm& S, CheckOptions opts) {
  if (S.dim() != A.L.dim()) throw InputError("form dimension mismatch");
  const Mat sharp = s_sharp(S);
  return all_of("ssharp-intertwiner", {
      [&] {
        ViolationRecorder rec("ssharp-intertwiner", "S#ad(x)=ad*(x)S#", opts);
        const Representation co = coadjoint_rep(A.L);
        for (std::size_t i = 0; i < A.L.dim() && !rec.done(); ++i)
          rec.record({idx(i)}, mat_mul(sharp, A.L.ad(i)) - mat_mul(co.rho[i], sharp));
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("ssharp-intertwiner", "S#R=-R^t S#", opts);
        rec.record({}, mat_mul(sharp, A.R) + mat_mul(transpose(A.R), sharp));
        return rec.finish();
      }});
}

// ---------------------------------------------------------------------------
// Block algebra windows
// ---------------------------------------------------------------------------

namespace {

// Formal element c * L_{m,i}.
struct BlockTerm {
  Rat c;
  std::int64_t m, i;
};

BlockTerm block_bracket(const Rat& q, const BlockTerm& x, const BlockTerm& y) {
  const Rat coef = Rat(y.m) * (Rat(x.i) + q) - Rat(x.m) * (Rat(y.i) + q);
  return {x.c * y.c * coef, x.m + y.m, x.i + y.i};
}

BlockTerm block_R(const BlockTerm& x) { return {x.c / Rat(x.m + x.i + 1), x.m, x.i}; }

} // namespace

BlockWindowResult block_window_check(const Rat& q, std::int64_t lo, std::int64_t hi, BlockWindowOptions opts) {
  if (lo > hi) throw InputError("block window: lo > hi");
  if (!opts.drop_singular) {
    for (std::int64_t m = lo; m <= hi; ++m)
      for (std::int64_t i = lo; i <= hi; ++i)
        if (m + i + 1 == 0)
          throw InputError("block window contains singular index (m,i)=(" + std::to_string(m) + "," +
                           std::to_string(i) + ") with m+i+1=0");
  }
  BlockWindowResult res;
  const CheckOptions co{opts.first_only};
  ViolationRecorder rey("block-reynolds", "[RL,RL]=R([RL,L]+[L,RL]-[RL,RL])", co);
  ViolationRecorder closed("block-induced", "[L,L]_R closed form", co);
  for (std::int64_t m = lo; m <= hi; ++m)
    for (std::int64_t i = lo; i <= hi; ++i)
      for (std::int64_t n = lo; n <= hi; ++n)
        for (std::int64_t j = lo; j <= hi; ++j) {
          if (rey.done() || closed.done()) goto finished;
          if (m + i + 1 == 0 || n + j + 1 == 0) {
            ++res.singular;
            continue;
          }
          const BlockTerm x{Rat(1), m, i}, y{Rat(1), n, j};
          const BlockTerm rx = block_R(x), ry = block_R(y);
          const BlockTerm lhs = block_bracket(q, rx, ry);
          // all terms land on L_{m+n,i+j}
          const Rat induced = block_bracket(q, rx, y).c + block_bracket(q, x, ry).c - lhs.c;
          const std::int64_t s = m + n + i + j + 1;
          const Rat c = Rat(n) * (Rat(i) + q) - Rat(m) * (Rat(j) + q);
          const Rat formula = Rat(s) * c / Rat((m + i + 1) * (n + j + 1));
          closed.record({m, i, n, j}, Vec{induced - formula});
          if (s == 0) {
            ++res.target_skipped;
            continue;
          }
          const Rat rhs = block_R({induced, m + n, i + j}).c;
          rey.record({m, i, n, j}, Vec{lhs.c - rhs});
          ++res.checked;
        }
finished:
  rey.skip(res.target_skipped + res.singular);
  res.reynolds = rey.finish();
  res.closed_form = closed.finish();
  res.reynolds.note = "checked=" + std::to_string(res.checked) + " target-skipped=" +
                      std::to_string(res.target_skipped) + " singular=" + std::to_string(res.singular);
  return res;
}

} // namespace reylie

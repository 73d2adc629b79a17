#include "reylie/rotabaxter.hpp"

#include "reylie/cybe.hpp"
#include "reylie/error.hpp"
#include "reylie/reynolds.hpp"

namespace reylie {

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

void require_r(const LieAlgebra& g, const Tensor2& r) {
  if (r.dim_left() != g.dim() || r.dim_right() != g.dim()) throw InputError("r must lie in g ⊗ g");
}

void require_form(const QuadraticRB& q) {
  require_square_op(q.rb.B, q.rb.L.dim(), "Rota-Baxter operator");
  if (q.S.dim() != q.rb.L.dim()) throw InputError("form dimension mismatch");
}

Vec row(const Mat& m, std::size_t i) {
  Vec v(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(i, j);
  return v;
}

} // namespace

Certificate is_rota_baxter(const LieAlgebra& L, const Mat& B, const Rat& lambda, CheckOptions opts) {
  require_square_op(B, L.dim(), "Rota-Baxter operator");
  const std::size_t n = L.dim();
  ViolationRecorder rec("rb", "[Bx,By]=B([Bx,y]+[x,By]+l[x,y])", opts);
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = i + 1; j < n && !rec.done(); ++j) {
      const Vec bi = B.column(i), bj = B.column(j);
      Vec inner = L.bracket(bi, Vec::basis(n, j)) + L.bracket(Vec::basis(n, i), bj) + lambda * L.bracket_basis(i, j);
      rec.record({idx(i), idx(j)}, L.bracket(bi, bj) - mat_apply(B, inner));
    }
  return rec.finish();
}

LieAlgebra descendent(const RotaBaxterAlg& rb) {
  require_square_op(rb.B, rb.L.dim(), "Rota-Baxter operator");
  const std::size_t n = rb.L.dim();
  return LieAlgebra::from_bracket(
      rb.L.labels(),
      [&](std::size_t i, std::size_t j) {
        return rb.L.bracket(rb.B.column(i), Vec::basis(n, j)) + rb.L.bracket(Vec::basis(n, i), rb.B.column(j)) +
               rb.lambda * rb.L.bracket_basis(i, j);
      },
      false);
}

Certificate reynolds_descends(const RotaBaxterAlg& rb, const Mat& R, CheckOptions opts) {
  require_square_op(R, rb.L.dim(), "Reynolds operator");
  Certificate c = is_reynolds(descendent(rb), R, opts);
  c.check = "reynolds-descends";
  c.note = mat_mul(R, rb.B) == mat_mul(rb.B, R) ? "R and B commute" : "R and B do not commute";
  return c;
}

Certificate is_quadratic_rb(const QuadraticRB& q, CheckOptions opts) {
  require_form(q);
  return all_of("quadratic-rb", {
      [&] { return is_rota_baxter(q.rb, opts); },
      [&] { return is_quadratic(q.rb.L, q.S, opts); },
      [&] {
        ViolationRecorder rec("quadratic-rb", "S(x,By)+S(Bx,y)+lS(x,y)=0", opts);
        const Mat& G = q.S.gram();
        const Mat m = mat_mul(transpose(q.rb.B), G) + mat_mul(G, q.rb.B) + q.rb.lambda * G;
        for (std::size_t i = 0; i < m.rows() && !rec.done(); ++i) rec.record({idx(i)}, row(m, i));
        return rec.finish();
      }});
}

Mat s_adjoint(const Mat& R, const BilinForm& S) {
  return mat_mul(mat_mul(i_s(S), transpose(R)), S.gram());
}

Tensor2 r_from_qrb(const QuadraticRB& q) {
  Certificate c = is_quadratic_rb(q, {.first_only = true});
  if (!c.pass) throw InputError("r_from_qrb: not a quadratic Rota-Baxter Lie algebra: " + to_string(c));
  return Tensor2::from_matrix(transpose(mat_mul(q.rb.B, i_s(q.S))));
}

Certificate r_from_qrb_certificate(const QuadraticRB& q, CheckOptions opts) {
  const Tensor2 r = r_from_qrb(q);
  const LieAlgebra& g = q.rb.L;
  return all_of("r-from-qrb", {
      [&] {
        ViolationRecorder rec("r-from-qrb", "[[r,r]]=0", opts);
        rec.record({}, cybe_bracket(g, r));
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("r-from-qrb", "[S#x,S#y]_r=S#[x,y]_B", opts);
        const LieAlgebra dual = dual_bracket_from_r(g, r);
        const LieAlgebra desc = descendent(q.rb);
        const Mat& G = q.S.gram();
        const std::size_t n = g.dim();
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = i + 1; j < n && !rec.done(); ++j)
            rec.record({idx(i), idx(j)},
                       dual.bracket(G.column(i), G.column(j)) - mat_apply(G, desc.bracket_basis(i, j)));
        return rec.finish();
      }});
}

Mat r_plus(const Tensor2& r) { return transpose(r.to_matrix()); }

Mat i_operator(const Tensor2& r) {
  const Mat rp = r_plus(r);
  return rp + transpose(rp);
}

Certificate r_invariance(const LieAlgebra& g, const Tensor2& r, CheckOptions opts) {
  require_r(g, r);
  const Tensor2 sym = r + flip(r);
  const Mat id = Mat::identity(g.dim());
  ViolationRecorder rec("r-invariance", "(ad_x⊗1+1⊗ad_x)(r+σr)=0", opts);
  for (std::size_t k = 0; k < g.dim() && !rec.done(); ++k) {
    const Mat ad = g.ad(k);
    rec.record({idx(k)}, tensor2_map(ad, id, sym) + tensor2_map(id, ad, sym));
  }
  return rec.finish();
}

LieAlgebra dual_bracket_from_r(const LieAlgebra& g, const Tensor2& r) {
  Certificate c = r_invariance(g, r, {.first_only = true});
  if (!c.pass) throw InputError("dual_bracket_from_r: " + to_string(c));
  const std::size_t n = g.dim();
  const Mat rp = r_plus(r);
  const Mat rm = -transpose(rp);
  auto coad = [&](const Vec& x, const Vec& xi) { return -mat_apply(transpose(g.ad(x)), xi); };
  return LieAlgebra::from_bracket(
      dual_labels(g.labels()),
      [&](std::size_t a, std::size_t b) {
        const Vec ea = Vec::basis(n, a), eb = Vec::basis(n, b);
        return coad(rp.column(a), eb) - coad(rm.column(b), ea);
      },
      false);
}

Certificate is_factorizable(const LieAlgebra& g, const Tensor2& r, CheckOptions opts) {
  require_r(g, r);
  const Mat I = i_operator(r);
  return all_of("factorizable", {
      [&] { return r_invariance(g, r, opts); },
      [&] {
        ViolationRecorder rec("factorizable", "I ad*_x=ad_x I", opts);
        const Representation co = coadjoint_rep(g);
        for (std::size_t k = 0; k < g.dim() && !rec.done(); ++k)
          rec.record({idx(k)}, mat_mul(I, co.rho[k]) - mat_mul(g.ad(k), I));
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("factorizable", "det(I)!=0", opts);
        if (determinant(I).is_zero()) rec.record({}, Vec{Rat(1)});
        return rec.finish();
      }});
}

Certificate is_reynolds_on_qrb(const QuadraticRB& q, const Mat& R, CheckOptions opts) {
  require_form(q);
  require_square_op(R, q.rb.L.dim(), "Reynolds operator");
  const Mat& B = q.rb.B;
  const Mat rs = s_adjoint(R, q.S);
  Certificate c = all_of("reynolds-on-qrb", {
      [&] { return is_reynolds(q.rb.L, R, opts); },
      [&] {
        ViolationRecorder rec("reynolds-on-qrb", "B R^{*,S}=-R B", opts);
        rec.record({}, mat_mul(B, rs) + mat_mul(R, B));
        return rec.finish();
      }});
  const bool plain = (mat_mul(B, transpose(R)) + mat_mul(R, B)).is_zero();
  const bool skew = (q.rb.lambda * (R + rs)).is_zero();
  std::string note = std::string("plain transpose: ") + (plain ? "holds" : "fails") +
                     "; lambda(R+R^{*,S})=0: " + (skew ? "yes" : "no");
  c.note = c.note.empty() ? note : c.note + "; " + note;
  return c;
}

Certificate minus_rstar_on_descendent(const QuadraticRB& q, const Mat& R, CheckOptions opts) {
  require_form(q);
  require_square_op(R, q.rb.L.dim(), "Reynolds operator");
  Certificate c = is_reynolds(descendent(q.rb), -s_adjoint(R, q.S), opts);
  c.check = "minus-rstar-descendent";
  return c;
}

ReynoldsLieBialgebra thmFL_bialgebra(const QuadraticRB& q, const Mat& R) {
  const Tensor2 r = r_from_qrb(q);
  Certificate c = is_reynolds_on_qrb(q, R, {.first_only = true});
  if (!c.pass) throw InputError("thmFL_bialgebra: " + to_string(c));
  return ReynoldsLieBialgebra{LieBialgebra{q.rb.L, dual_bracket_from_r(q.rb.L, r)}, R};
}

} // namespace reylie

#include "reylie/cybe.hpp"

#include "reylie/error.hpp"

#include <optional>

namespace reylie {

Tensor3 cybe_bracket(const LieAlgebra& g, const Tensor2& r) {
  const std::size_t n = g.dim();
  if (r.dim_left() != n || r.dim_right() != n) throw InputError("r must lie in g ⊗ g");
  Tensor3 out({n, n, n});
  for (const auto& [k1, c1] : r.entries()) {
    const auto [a, b] = k1;
    for (const auto& [k2, c2] : r.entries()) {
      const auto [c, d] = k2;
      const Rat w = c1 * c2;
      const Vec& ac = g.bracket_basis(a, c);
      const Vec& bd = g.bracket_basis(b, d);
      const Vec& bc = g.bracket_basis(b, c);
      for (std::size_t p = 0; p < n; ++p) {
        if (!ac[p].is_zero()) out.add(p, b, d, w * ac[p]);
        if (!bd[p].is_zero()) out.add(a, c, p, w * bd[p]);
        if (!bc[p].is_zero()) out.add(a, p, d, w * bc[p]);
      }
    }
  }
  return out;
}

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

void require_r(std::size_t n, const Tensor2& r) {
  if (r.dim_left() != n || r.dim_right() != n) throw InputError("r must lie in g ⊗ g");
}

LieAlgebra relabel(const LieAlgebra& L, std::vector<std::string> labels) {
  return LieAlgebra::unchecked(std::move(labels), L.upper());
}

void require_rel(const RelativeRB& rel, const char* what) {
  Certificate c = is_relative_rb(rel, {.first_only = true});
  if (!c.pass) throw InputError(std::string(what) + ": invalid relative Rota-Baxter operator: " + to_string(c));
}

// rho(Ku)v - rho(Kv)u
Vec k_bracket(const RelativeRB& rel, std::size_t u, std::size_t v) {
  const Representation& rep = rel.rr.rep;
  return rep.at(rel.K.column(u)).column(v) - rep.at(rel.K.column(v)).column(u);
}

} // namespace

Certificate is_cybe_solution(const LieAlgebra& g, const Tensor2& r, CheckOptions opts) {
  require_r(g.dim(), r);
  ViolationRecorder rec("cybe", "[[r,r]]=0", opts);
  rec.record({}, cybe_bracket(g, r));
  return rec.finish();
}

Certificate is_cybe_solution_reynolds(const ReynoldsLieAlgebra& A, const Tensor2& r, CheckOptions opts) {
  const std::size_t n = A.L.dim();
  require_square_op(A.R, n, "Reynolds operator");
  require_r(n, r);
  return all_of("reynolds-cybe", {
      [&] { return is_cybe_solution(A.L, r, opts); },
      [&] {
        ViolationRecorder rec("reynolds-cybe", "(R⊗1+1⊗R)r=0", opts);
        const Mat id = Mat::identity(n);
        rec.record({}, tensor2_map(A.R, id, r) + tensor2_map(id, A.R, r));
        return rec.finish();
      }});
}

bool is_skew(const Tensor2& r) { return flip(r) == -r; }

Certificate is_relative_rb(const RelativeRB& rel, CheckOptions opts) {
  const std::size_t n = rel.A.L.dim(), m = rel.rr.rep.module_dim;
  require_square_op(rel.A.R, n, "Reynolds operator");
  require_rep_shape(rel.A.L, rel.rr.rep);
  require_square_op(rel.rr.T, m, "module operator");
  if (rel.K.rows() != n || rel.K.cols() != m) throw InputError("relative Rota-Baxter operator must map W to g");
  return all_of("relative-rb", {
      [&] { return is_reynolds(rel.A.L, rel.A.R, opts); },
      [&] { return is_reynolds_rep(rel.A, rel.rr, opts); },
      [&] {
        ViolationRecorder rec("relative-rb", "[Ku,Kv]=K(rho(Ku)v-rho(Kv)u)", opts);
        for (std::size_t u = 0; u < m && !rec.done(); ++u)
          for (std::size_t v = u + 1; v < m && !rec.done(); ++v)
            rec.record({idx(u), idx(v)}, rel.A.L.bracket(rel.K.column(u), rel.K.column(v)) -
                                             mat_apply(rel.K, k_bracket(rel, u, v)));
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("relative-rb", "RK=KT", opts);
        rec.record({}, mat_mul(rel.A.R, rel.K) - mat_mul(rel.K, rel.rr.T));
        return rec.finish();
      }});
}

ReynoldsLieAlgebra descendent_on_W(const RelativeRB& rel, std::vector<std::string> labels) {
  const std::size_t m = rel.rr.rep.module_dim;
  if (labels.empty()) labels = default_labels(m, "w");
  if (labels.size() != m) throw InputError("descendent_on_W: wrong number of labels");
  require_rep_shape(rel.A.L, rel.rr.rep);
  if (rel.K.rows() != rel.A.L.dim() || rel.K.cols() != m) throw InputError("relative Rota-Baxter operator must map W to g");
  LieAlgebra W = LieAlgebra::from_bracket(
      std::move(labels), [&](std::size_t u, std::size_t v) { return k_bracket(rel, u, v); }, false);
  return ReynoldsLieAlgebra{std::move(W), rel.rr.T};
}

ReynoldsMatchedPair matched_from_relrb(const RelativeRB& rel) {
  require_rel(rel, "matched_from_relrb");
  const LieAlgebra& g = rel.A.L;
  const std::size_t n = g.dim(), m = rel.rr.rep.module_dim;
  ReynoldsLieAlgebra W = descendent_on_W(rel);
  Representation mu{n, {}};
  mu.rho.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Vec ka = rel.K.column(a);
    Mat M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec col = mat_apply(rel.K, rel.rr.rep.rho[i].column(a)) - g.bracket(Vec::basis(n, i), ka);
      for (std::size_t k = 0; k < n; ++k) M(k, i) = col[k];
    }
    mu.rho.push_back(std::move(M));
  }
  return ReynoldsMatchedPair{MatchedPair{g, std::move(W.L), rel.rr.rep, std::move(mu)}, rel.A.R, rel.rr.T};
}

CybeSolution rk_solution(const RelativeRB& rel) {
  require_rel(rel, "rk_solution");
  const std::size_t n = rel.A.L.dim(), m = rel.rr.rep.module_dim;
  ReynoldsLieAlgebra d = semidirect_reynolds(rel.A, dual_reynolds_rep(rel.rr));
  d.L = relabel(d.L, concat_labels(rel.A.L.labels(), dual_labels(default_labels(m, "w"))));
  Tensor2 r(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Rat& c = rel.K(i, a);
      if (c.is_zero()) continue;
      r.set(n + a, i, c);
      r.set(i, n + a, -c);
    }
  return CybeSolution{std::move(d), std::move(r)};
}

Certificate is_prelie(const PreLieAlgebra& A, CheckOptions opts) {
  const std::size_t n = A.dim();
  if (A.prod.dim() != n) throw InputError("pre-Lie product has wrong dimension");
  const BilinearProduct& p = A.prod;
  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    const Vec ez = Vec::basis(n, z);
    return p(p.basis(x, y), ez) - p(Vec::basis(n, x), p.basis(y, z));
  };
  ViolationRecorder rec("prelie", "(x,y,z)=(y,x,z)", opts);
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = i + 1; j < n && !rec.done(); ++j)
      for (std::size_t k = 0; k < n && !rec.done(); ++k) rec.record({idx(i), idx(j), idx(k)}, assoc(i, j, k) - assoc(j, i, k));
  return rec.finish();
}

Certificate is_reynolds_prelie(const PreLieAlgebra& A, const Mat& R, CheckOptions opts) {
  const std::size_t n = A.dim();
  require_square_op(R, n, "Reynolds operator");
  return all_of("reynolds-prelie", {
      [&] { return is_prelie(A, opts); },
      [&] {
        ViolationRecorder rec("reynolds-prelie", "{Rx,Ry}=R({Rx,y}+{x,Ry}-{Rx,Ry})", opts);
        const BilinearProduct& p = A.prod;
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = 0; j < n && !rec.done(); ++j) {
            const Vec ri = R.column(i), rj = R.column(j);
            const Vec rr = p(ri, rj);
            const Vec inner = p(ri, Vec::basis(n, j)) + p(Vec::basis(n, i), rj) - rr;
            rec.record({idx(i), idx(j)}, rr - mat_apply(R, inner));
          }
        return rec.finish();
      }});
}

ReynoldsLieAlgebra subadjacent(const ReynoldsPreLie& rp) {
  const std::size_t n = rp.A.dim();
  require_square_op(rp.R, n, "Reynolds operator");
  LieAlgebra L = LieAlgebra::from_bracket(
      rp.A.labels, [&](std::size_t i, std::size_t j) { return rp.A.prod.basis(i, j) - rp.A.prod.basis(j, i); },
      false);
  return ReynoldsLieAlgebra{std::move(L), rp.R};
}

ReynoldsRep left_rep(const ReynoldsPreLie& rp) {
  const std::size_t n = rp.A.dim();
  Representation rep{n, {}};
  for (std::size_t i = 0; i < n; ++i) rep.rho.push_back(rp.A.prod.left(i));
  return ReynoldsRep{std::move(rep), rp.R};
}

ReynoldsPreLie prelie_from_relrb(const RelativeRB& rel, std::vector<std::string> labels) {
  require_rel(rel, "prelie_from_relrb");
  const std::size_t m = rel.rr.rep.module_dim;
  if (labels.empty()) labels = default_labels(m, "w");
  if (labels.size() != m) throw InputError("prelie_from_relrb: wrong number of labels");
  BilinearProduct p = BilinearProduct::from_fn(
      m, [&](std::size_t u, std::size_t v) { return rel.rr.rep.at(rel.K.column(u)).column(v); });
  return ReynoldsPreLie{PreLieAlgebra{std::move(labels), std::move(p)}, rel.rr.T};
}

ReynoldsPreLie prelie_from_invertible_relrb(const RelativeRB& rel) {
  require_rel(rel, "prelie_from_invertible_relrb");
  if (rel.K.rows() != rel.K.cols()) throw InputError("prelie_from_invertible_relrb: K is not square");
  const std::optional<Mat> kinv = inverse(rel.K);
  if (!kinv) throw InputError("prelie_from_invertible_relrb: K is singular");
  const std::size_t n = rel.A.L.dim();
  BilinearProduct p = BilinearProduct::from_fn(n, [&](std::size_t x, std::size_t y) {
    return mat_apply(rel.K, mat_apply(rel.rr.rep.rho[x], kinv->column(y)));
  });
  return ReynoldsPreLie{PreLieAlgebra{rel.A.L.labels(), std::move(p)}, rel.A.R};
}

CybeSolution canonical_r(const ReynoldsPreLie& rp) {
  Certificate c = is_reynolds_prelie(rp, {.first_only = true});
  if (!c.pass) throw InputError("canonical_r: invalid Reynolds pre-Lie algebra: " + to_string(c));
  const std::size_t n = rp.A.dim();
  ReynoldsLieAlgebra d = semidirect_reynolds(subadjacent(rp), dual_reynolds_rep(left_rep(rp)));
  d.L = relabel(d.L, concat_labels(rp.A.labels, dual_labels(rp.A.labels)));
  Tensor2 r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, n + i, 1);
    r.set(n + i, i, -1);
  }
  return CybeSolution{std::move(d), std::move(r)};
}

} // namespace reylie

#include "reylie/bialgebra.hpp"

#include "reylie/cybe.hpp"
#include "reylie/error.hpp"

namespace reylie {

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

void require_deltas(const std::vector<Tensor2>& deltas) {
  const std::size_t n = deltas.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Tensor2& d = deltas[k];
    if (d.dim_left() != n || d.dim_right() != n) throw InputError("cobracket: tensor has wrong dimensions");
    if (!(flip(d) == -d)) throw InputError("cobracket: Δ(e" + std::to_string(k) + ") is not skew");
  }
}

// Δ(v) for a coordinate vector v
Tensor2 delta_of(const std::vector<Tensor2>& deltas, const Vec& v) {
  const std::size_t n = deltas.size();
  Tensor2 out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    if (!v[k].is_zero()) out += v[k] * deltas[k];
  return out;
}

Tensor2 derive(const Mat& A, const Tensor2& t) {
  const Mat id = Mat::identity(A.rows());
  return tensor2_map(A, id, t) + tensor2_map(id, A, t);
}

} // namespace

std::vector<Tensor2> cobracket_from_dual(const LieAlgebra& dual) {
  const std::size_t n = dual.dim();
  std::vector<Tensor2> out(n, Tensor2(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = dual.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) out[k].set(i, j, v[k]);
    }
  return out;
}

LieAlgebra dual_from_cobracket(const std::vector<Tensor2>& deltas, std::vector<std::string> labels) {
  require_deltas(deltas);
  const std::size_t n = deltas.size();
  if (labels.empty()) labels = dual_labels(default_labels(n));
  if (labels.size() != n) throw InputError("dual_from_cobracket: wrong number of labels");
  LieAlgebra::Table t;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [key, c] : deltas[k].entries()) {
      if (key.first >= key.second) continue;
      auto [it, inserted] = t.try_emplace(key, Vec(n));
      it->second[k] = c;
    }
  return LieAlgebra::unchecked(std::move(labels), t);
}

Certificate is_lie_coalgebra(const std::vector<Tensor2>& deltas, CheckOptions opts) {
  require_deltas(deltas);
  const std::size_t n = deltas.size();
  ViolationRecorder rec("coalgebra", "(1+e+e^2)(1⊗D)D=0", opts);
  for (std::size_t x = 0; x < n && !rec.done(); ++x) {
    // T(a,b,c) = Σ_j Δ(x)(a,j) Δ(e_j)(b,c)
    Tensor3 t({n, n, n});
    for (const auto& [key, c] : deltas[x].entries()) {
      const auto [a, j] = key;
      for (const auto& [k2, c2] : deltas[j].entries()) {
        const Rat w = c * c2;
        t.add(a, k2.first, k2.second, w);
        t.add(k2.first, k2.second, a, w);
        t.add(k2.second, a, k2.first, w);
      }
    }
    rec.record({idx(x)}, t);
  }
  return rec.finish();
}

Certificate is_reynolds_coalgebra(const std::vector<Tensor2>& deltas, const Mat& P, CheckOptions opts) {
  require_deltas(deltas);
  const std::size_t n = deltas.size();
  require_square_op(P, n, "coalgebra operator");
  const Mat id = Mat::identity(n);
  ViolationRecorder rec("reynolds-coalgebra", "(P⊗P)D=(P⊗1+1⊗P-P⊗P)DP", opts);
  for (std::size_t k = 0; k < n && !rec.done(); ++k) {
    const Tensor2 dp = delta_of(deltas, P.column(k));
    const Tensor2 pp = tensor2_map(P, P, dp);
    Tensor2 rhs = tensor2_map(P, id, dp) + tensor2_map(id, P, dp) - pp;
    rec.record({idx(k)}, tensor2_map(P, P, deltas[k]) - rhs);
  }
  return rec.finish();
}

Certificate is_lie_bialgebra(const LieBialgebra& b, CheckOptions opts) {
  if (b.g.dim() != b.dual.dim()) throw InputError("bialgebra: dual has wrong dimension");
  const std::size_t n = b.g.dim();
  return all_of("bialgebra", {
      [&] { return jacobi_check(b.g, opts); },
      [&] { return jacobi_check(b.dual, opts); },
      [&] {
        const std::vector<Tensor2> deltas = cobracket_from_dual(b.dual);
        ViolationRecorder rec("bialgebra", "D[x,y]=(ad_x⊗1+1⊗ad_x)Dy-(ad_y⊗1+1⊗ad_y)Dx", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = i + 1; j < n && !rec.done(); ++j) {
            Tensor2 r = delta_of(deltas, b.g.bracket_basis(i, j)) - derive(b.g.ad(i), deltas[j]) +
                        derive(b.g.ad(j), deltas[i]);
            rec.record({idx(i), idx(j)}, r);
          }
        return rec.finish();
      }});
}

Certificate is_reynolds_bialgebra(const LieBialgebra& b, const Mat& R, CheckOptions opts) {
  require_square_op(R, b.g.dim(), "Reynolds operator");
  return all_of("reynolds-bialgebra", {
      [&] { return is_lie_bialgebra(b, opts); },
      [&] { return is_reynolds(b.g, R, opts); },
      [&] { return is_reynolds(b.dual, -transpose(R), opts); }});
}

ReynoldsLieAlgebra drinfeld_double(const ReynoldsLieBialgebra& rb) {
  Certificate c = is_reynolds_bialgebra(rb, {.first_only = true});
  if (!c.pass) throw InputError("drinfeld_double: invalid Reynolds bialgebra: " + to_string(c));
  const LieAlgebra& g = rb.bialg.g;
  const LieAlgebra& dual = rb.bialg.dual;
  const std::size_t n = g.dim();
  LieAlgebra d = LieAlgebra::from_bracket(
      concat_labels(g.labels(), dual.labels()),
      [&](std::size_t p, std::size_t q) {
        Vec out(2 * n);
        if (q < n) {
          const Vec& v = g.bracket_basis(p, q);
          for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
        } else if (p >= n) {
          const Vec& v = dual.bracket_basis(p - n, q - n);
          for (std::size_t k = 0; k < n; ++k) out[n + k] = v[k];
        } else {
          const std::size_t a = q - n;
          for (std::size_t k = 0; k < n; ++k) {
            // <ad*_x ξ, e_k> = -<ξ, [x, e_k]>,  -<ad*_ξ x, f_k> = <x, [ξ, f_k]>
            out[n + k] = -g.bracket_basis(p, k)[a];
            out[k] = dual.bracket_basis(a, k)[p];
          }
        }
        return out;
      },
      false);
  return ReynoldsLieAlgebra{std::move(d), Mat::block_diag(rb.R, -transpose(rb.R))};
}

ReynoldsLieBialgebra double_quasitriangular(const ReynoldsLieBialgebra& rb) {
  ReynoldsLieAlgebra d = drinfeld_double(rb);
  const LieAlgebra& g = rb.bialg.g;
  const LieAlgebra& dual = rb.bialg.dual;
  const std::size_t n = g.dim();
  LieAlgebra dstar = LieAlgebra::from_bracket(
      concat_labels(dual.labels(), g.labels()),
      [&](std::size_t p, std::size_t q) {
        Vec out(2 * n);
        if (q < n) {
          const Vec& v = dual.bracket_basis(p, q);
          for (std::size_t k = 0; k < n; ++k) out[k] = -v[k];
        } else if (p >= n) {
          const Vec& v = g.bracket_basis(p - n, q - n);
          for (std::size_t k = 0; k < n; ++k) out[n + k] = v[k];
        }
        return out;
      },
      false);
  return ReynoldsLieBialgebra{LieBialgebra{std::move(d.L), std::move(dstar)}, std::move(d.R)};
}

std::vector<Tensor2> coboundary_cobracket(const LieAlgebra& g, const Tensor2& r) {
  const std::size_t n = g.dim();
  if (r.dim_left() != n || r.dim_right() != n) throw InputError("r must lie in g ⊗ g");
  std::vector<Tensor2> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(derive(g.ad(k), r));
  return out;
}

Certificate coboundary_conditions(const LieAlgebra& g, const Tensor2& r, CheckOptions opts) {
  const std::size_t n = g.dim();
  if (r.dim_left() != n || r.dim_right() != n) throw InputError("r must lie in g ⊗ g");
  return all_of("coboundary", {
      [&] {
        ViolationRecorder rec("coboundary", "(ad_x⊗1+1⊗ad_x)(r+σr)=0", opts);
        const Tensor2 sym = r + flip(r);
        for (std::size_t k = 0; k < n && !rec.done(); ++k) rec.record({idx(k)}, derive(g.ad(k), sym));
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("coboundary", "ad_x.[[r,r]]=0", opts);
        const Tensor3 rr = cybe_bracket(g, r);
        for (std::size_t k = 0; k < n && !rec.done(); ++k) rec.record({idx(k)}, tensor3_derive(g.ad(k), rr));
        return rec.finish();
      }});
}

Certificate reynolds_coboundary_condition(const LieAlgebra& g, const Mat& R, const Tensor2& r, CheckOptions opts) {
  const std::size_t n = g.dim();
  require_square_op(R, n, "Reynolds operator");
  if (r.dim_left() != n || r.dim_right() != n) throw InputError("r must lie in g ⊗ g");
  const Tensor2 s = derive(R, r);
  ViolationRecorder rec("reynolds-coboundary", "(A_x⊗1+1⊗A_x)(R⊗1+1⊗R)r=0, A_x=ad_Rx+R ad_Rx-R ad_x", opts);
  for (std::size_t k = 0; k < n && !rec.done(); ++k) {
    const Mat ad_rx = g.ad(R.column(k));
    const Mat A = ad_rx + mat_mul(R, ad_rx) - mat_mul(R, g.ad(k));
    rec.record({idx(k)}, derive(A, s));
  }
  return rec.finish();
}

} // namespace reylie

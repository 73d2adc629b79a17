#include "reylie/matched.hpp"

#include "reylie/error.hpp"

#include <string>

namespace reylie {

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

void require_pair_shape(const MatchedPair& mp) {
  require_rep_shape(mp.g, mp.rho);
  require_rep_shape(mp.h, mp.mu);
  if (mp.rho.module_dim != mp.h.dim()) throw InputError("matched pair: rho must act on h");
  if (mp.mu.module_dim != mp.g.dim()) throw InputError("matched pair: mu must act on g");
}

void require_ops_shape(const ReynoldsMatchedPair& rmp) {
  require_square_op(rmp.Rg, rmp.pair.g.dim(), "Rg");
  require_square_op(rmp.Rh, rmp.pair.h.dim(), "Rh");
}

std::vector<std::string> slice_labels(const std::vector<std::string>& l, std::size_t begin, std::size_t count) {
  return {l.begin() + static_cast<std::ptrdiff_t>(begin), l.begin() + static_cast<std::ptrdiff_t>(begin + count)};
}

} // namespace

MatchedPair trivial_matched(const LieAlgebra& g, const LieAlgebra& h) {
  return MatchedPair{g, h, zero_rep(g, h.dim()), zero_rep(h, g.dim())};
}

MatchedPair coadjoint_pair(const LieAlgebra& g, const LieAlgebra& dual) {
  if (g.dim() != dual.dim()) throw InputError("coadjoint pair: dual has wrong dimension");
  return MatchedPair{g, dual, coadjoint_rep(g), coadjoint_rep(dual)};
}

Certificate is_matched_pair(const MatchedPair& mp, CheckOptions opts) {
  require_pair_shape(mp);
  const std::size_t n = mp.g.dim(), m = mp.h.dim();
  const auto& g = mp.g;
  const auto& h = mp.h;
  return all_of("matched", {
      [&] { return is_representation(g, mp.rho, opts); },
      [&] { return is_representation(h, mp.mu, opts); },
      [&] {
        ViolationRecorder rec("matched",
                              "rho(x)[a,b]=[rho(x)a,b]+[a,rho(x)b]+rho(mu(b)x)a-rho(mu(a)x)b", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i) {
          const Mat& rx = mp.rho.rho[i];
          for (std::size_t a = 0; a < m && !rec.done(); ++a)
            for (std::size_t b = a + 1; b < m && !rec.done(); ++b) {
              const Vec xa = rx.column(a), xb = rx.column(b);
              Vec r = mat_apply(rx, h.bracket_basis(a, b)) - h.bracket(xa, Vec::basis(m, b)) -
                      h.bracket(Vec::basis(m, a), xb) - mp.rho.at(mp.mu.rho[b].column(i)).column(a) +
                      mp.rho.at(mp.mu.rho[a].column(i)).column(b);
              rec.record({idx(i), idx(a), idx(b)}, r);
            }
        }
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("matched",
                              "mu(a)[x,y]=[mu(a)x,y]+[x,mu(a)y]+mu(rho(y)a)x-mu(rho(x)a)y", opts);
        for (std::size_t a = 0; a < m && !rec.done(); ++a) {
          const Mat& ma = mp.mu.rho[a];
          for (std::size_t i = 0; i < n && !rec.done(); ++i)
            for (std::size_t j = i + 1; j < n && !rec.done(); ++j) {
              Vec r = mat_apply(ma, g.bracket_basis(i, j)) - g.bracket(ma.column(i), Vec::basis(n, j)) -
                      g.bracket(Vec::basis(n, i), ma.column(j)) - mp.mu.at(mp.rho.rho[j].column(a)).column(i) +
                      mp.mu.at(mp.rho.rho[i].column(a)).column(j);
              rec.record({idx(a), idx(i), idx(j)}, r);
            }
        }
        return rec.finish();
      }});
}

LieAlgebra matched_double(const MatchedPair& mp, bool checked) {
  require_pair_shape(mp);
  if (checked) {
    Certificate c = is_matched_pair(mp, {.first_only = true});
    if (!c.pass) throw InputError("matched_double: invalid matched pair: " + to_string(c));
  }
  const std::size_t n = mp.g.dim(), m = mp.h.dim(), N = n + m;
  return LieAlgebra::from_bracket(
      concat_labels(mp.g.labels(), mp.h.labels()),
      [&](std::size_t p, std::size_t q) {
        Vec out(N);
        if (q < n) {
          const Vec& v = mp.g.bracket_basis(p, q);
          for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
        } else if (p >= n) {
          const Vec& v = mp.h.bracket_basis(p - n, q - n);
          for (std::size_t k = 0; k < m; ++k) out[n + k] = v[k];
        } else {
          // [x, ξ] = rho(x)ξ - mu(ξ)x
          for (std::size_t k = 0; k < m; ++k) out[n + k] = mp.rho.rho[p](k, q - n);
          for (std::size_t k = 0; k < n; ++k) out[k] = -mp.mu.rho[q - n](k, p);
        }
        return out;
      },
      false);
}

Certificate is_reynolds_matched_pair(const ReynoldsMatchedPair& rmp, CheckOptions opts) {
  const MatchedPair& mp = rmp.pair;
  require_pair_shape(mp);
  require_ops_shape(rmp);
  const Mat& R = rmp.Rg;
  const Mat& Rh = rmp.Rh;
  return all_of("reynolds-matched", {
      [&] { return is_matched_pair(mp, opts); },
      [&] { return is_reynolds(mp.g, R, opts); },
      [&] { return is_reynolds(mp.h, Rh, opts); },
      [&] {
        ViolationRecorder rec("reynolds-matched", "rho(Rx)R'a=R'(rho(x)R'a+rho(Rx)a-rho(Rx)R'a)", opts);
        for (std::size_t i = 0; i < mp.g.dim() && !rec.done(); ++i) {
          const Mat rho_rx = mp.rho.at(R.column(i));
          const Mat lhs = mat_mul(rho_rx, Rh);
          Mat inner = mat_mul(mp.rho.rho[i], Rh) + rho_rx - lhs;
          rec.record({idx(i)}, lhs - mat_mul(Rh, inner));
        }
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("reynolds-matched", "mu(R'a)Rx=R(mu(a)Rx+mu(R'a)x-mu(R'a)Rx)", opts);
        for (std::size_t a = 0; a < mp.h.dim() && !rec.done(); ++a) {
          const Mat mu_ra = mp.mu.at(Rh.column(a));
          const Mat lhs = mat_mul(mu_ra, R);
          Mat inner = mat_mul(mp.mu.rho[a], R) + mu_ra - lhs;
          rec.record({idx(a)}, lhs - mat_mul(R, inner));
        }
        return rec.finish();
      }});
}

ReynoldsLieAlgebra reynolds_double(const ReynoldsMatchedPair& rmp) {
  Certificate c = is_reynolds_matched_pair(rmp, {.first_only = true});
  if (!c.pass) throw InputError("reynolds_double: invalid Reynolds matched pair: " + to_string(c));
  return ReynoldsLieAlgebra{matched_double(rmp.pair, false), Mat::block_diag(rmp.Rg, rmp.Rh)};
}

MatchedPair induced_matched_pair(const ReynoldsMatchedPair& rmp) {
  Certificate c = is_reynolds_matched_pair(rmp, {.first_only = true});
  if (!c.pass) throw InputError("induced_matched_pair: invalid Reynolds matched pair: " + to_string(c));
  const MatchedPair& mp = rmp.pair;
  const Mat& R = rmp.Rg;
  const Mat& Rh = rmp.Rh;
  MatchedPair out{induced_algebra({mp.g, R}).L, induced_algebra({mp.h, Rh}).L,
                  Representation{mp.h.dim(), {}}, Representation{mp.g.dim(), {}}};
  for (std::size_t i = 0; i < mp.g.dim(); ++i) {
    const Mat rho_rx = mp.rho.at(R.column(i));
    out.rho.rho.push_back(mat_mul(mp.rho.rho[i], Rh) + rho_rx - mat_mul(rho_rx, Rh));
  }
  for (std::size_t a = 0; a < mp.h.dim(); ++a) {
    const Mat mu_ra = mp.mu.at(Rh.column(a));
    out.mu.rho.push_back(mat_mul(mp.mu.rho[a], R) + mu_ra - mat_mul(mu_ra, R));
  }
  return out;
}

Certificate is_manin_triple(const ManinTripleReynolds& mt, CheckOptions opts) {
  const std::size_t N = mt.G.L.dim();
  require_square_op(mt.G.R, N, "Manin operator");
  if (mt.S.dim() != N) throw InputError("Manin triple: form dimension mismatch");
  for (const auto* part : {&mt.part_g, &mt.part_h})
    for (std::size_t p : *part)
      if (p >= N) throw InputError("Manin triple: part index out of range");

  auto stable = [&](const std::vector<std::size_t>& part) {
    ViolationRecorder rec("manin", "R(part) inside part", opts);
    std::vector<bool> in(N, false);
    for (std::size_t p : part) in[p] = true;
    for (std::size_t p : part) {
      if (rec.done()) break;
      Vec v = mt.G.R.column(p);
      for (std::size_t k = 0; k < N; ++k)
        if (in[k]) v[k] = Rat(0);
      rec.record({idx(p)}, v);
    }
    return rec.finish();
  };
  auto isotropic = [&](const std::vector<std::size_t>& part) {
    ViolationRecorder rec("manin", "S(part,part)=0", opts);
    for (std::size_t a = 0; a < part.size() && !rec.done(); ++a)
      for (std::size_t b = a; b < part.size() && !rec.done(); ++b)
        rec.record({idx(part[a]), idx(part[b])}, Vec{mt.S.gram()(part[a], part[b])});
    return rec.finish();
  };
  return all_of("manin", {
      [&] {
        ViolationRecorder rec("manin", "parts partition the basis", opts);
        std::vector<std::int64_t> count(N, 0);
        for (std::size_t p : mt.part_g) ++count[p];
        for (std::size_t p : mt.part_h) ++count[p];
        for (std::size_t k = 0; k < N && !rec.done(); ++k) rec.record({idx(k)}, Vec{Rat(count[k] - 1)});
        return rec.finish();
      },
      [&] { return jacobi_check(mt.G.L, opts); },
      [&] { return is_reynolds(mt.G.L, mt.G.R, opts); },
      [&] { return is_quadratic_reynolds(mt.G, mt.S, opts); },
      [&] { return is_subalgebra(mt.G.L, mt.part_g, opts); },
      [&] { return is_subalgebra(mt.G.L, mt.part_h, opts); },
      [&] { return stable(mt.part_g); },
      [&] { return stable(mt.part_h); },
      [&] { return isotropic(mt.part_g); },
      [&] { return isotropic(mt.part_h); }});
}

BilinForm standard_pairing(std::size_t n) {
  Mat gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, n + i) = Rat(1);
    gram(n + i, i) = Rat(1);
  }
  return BilinForm(std::move(gram));
}

ManinTripleReynolds matched_to_manin(const ReynoldsMatchedPair& rmp) {
  const MatchedPair& mp = rmp.pair;
  const std::size_t n = mp.g.dim();
  if (mp.h.dim() != n) throw InputError("matched_to_manin: h must have the dimension of g");
  if (mp.rho != coadjoint_rep(mp.g) || mp.mu != coadjoint_rep(mp.h))
    throw InputError("matched_to_manin: actions must be the coadjoint ones");
  require_ops_shape(rmp);
  if (rmp.Rh != -transpose(rmp.Rg)) throw InputError("matched_to_manin: Rh must equal -Rg^t");
  ManinTripleReynolds mt{reynolds_double(rmp), standard_pairing(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    mt.part_g.push_back(i);
    mt.part_h.push_back(n + i);
  }
  Certificate c = is_manin_triple(mt, {.first_only = true});
  if (!c.pass) throw InputError("matched_to_manin: " + to_string(c));
  return mt;
}

ReynoldsMatchedPair manin_to_matched(const ManinTripleReynolds& mt) {
  const std::size_t N = mt.G.L.dim();
  if (N % 2 != 0) throw InputError("manin_to_matched: odd ambient dimension");
  const std::size_t n = N / 2;
  for (std::size_t i = 0; i < n; ++i)
    if (mt.part_g.size() != n || mt.part_h.size() != n || mt.part_g[i] != i || mt.part_h[i] != n + i)
      throw InputError("manin_to_matched: parts must be the two halves of the basis");
  if (mt.S.gram() != standard_pairing(n).gram()) throw InputError("manin_to_matched: form is not the standard pairing");
  Certificate c = is_manin_triple(mt, {.first_only = true});
  if (!c.pass) throw InputError("manin_to_matched: " + to_string(c));

  const LieAlgebra& D = mt.G.L;
  const auto& labels = D.labels();
  LieAlgebra g = LieAlgebra::from_bracket(
      slice_labels(labels, 0, n), [&](std::size_t i, std::size_t j) { return D.bracket_basis(i, j).slice(0, n); },
      false);
  LieAlgebra h = LieAlgebra::from_bracket(
      slice_labels(labels, n, n),
      [&](std::size_t a, std::size_t b) { return D.bracket_basis(n + a, n + b).slice(n, n); }, false);
  Representation rho{n, std::vector<Mat>(n, Mat(n, n))}, mu{n, std::vector<Mat>(n, Mat(n, n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      const Vec& v = D.bracket_basis(i, n + a);
      for (std::size_t k = 0; k < n; ++k) {
        rho.rho[i](k, a) = v[n + k];
        mu.rho[a](k, i) = -v[k];
      }
    }
  return ReynoldsMatchedPair{MatchedPair{std::move(g), std::move(h), std::move(rho), std::move(mu)},
                             mt.G.R.block(0, 0, n, n), mt.G.R.block(n, n, n, n)};
}

} // namespace reylie

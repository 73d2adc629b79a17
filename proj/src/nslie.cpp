#include "reylie/nslie.hpp"

#include "reylie/error.hpp"

namespace reylie {

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

void require_ns_rep_shape(const NSLieAlgebra& A, const NSRep& rep) {
  for (const auto* maps : {&rep.varrho, &rep.mu, &rep.nu}) {
    if (maps->size() != A.dim()) throw InputError("NS representation: wrong number of matrices");
    for (const auto& m : *maps)
      if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
        throw InputError("NS representation: matrix is not module_dim x module_dim");
  }
}

} // namespace

BilinearProduct BilinearProduct::from_table(std::size_t n, const Table& t) {
  BilinearProduct p(n);
  for (const auto& [k, v] : t) {
    if (k.first >= n || k.second >= n) throw InputError("product index out of range");
    if (v.size() != n) throw InputError("product output has wrong length");
    p.full_[k.first * n + k.second] += v;
  }
  return p;
}

BilinearProduct BilinearProduct::from_fn(std::size_t n, const std::function<Vec(std::size_t, std::size_t)>& f) {
  BilinearProduct p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = f(i, j);
      if (v.size() != n) throw InputError("product output has wrong length");
      p.full_[i * n + j] = std::move(v);
    }
  return p;
}

Vec BilinearProduct::operator()(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw InputError("product: vector length mismatch");
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      out.axpy(x[i] * y[j], full_[i * n_ + j]);
    }
  }
  return out;
}

Mat BilinearProduct::left(std::size_t i) const {
  Mat m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = full_[i * n_ + j][k];
  return m;
}

Mat BilinearProduct::right(std::size_t j) const {
  Mat m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) m(k, i) = full_[i * n_ + j][k];
  return m;
}

BilinearProduct::Table BilinearProduct::table() const {
  Table t;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!full_[i * n_ + j].is_zero()) t.emplace(std::make_pair(i, j), full_[i * n_ + j]);
  return t;
}

Vec NSLieAlgebra::commutator(const Vec& x, const Vec& y) const {
  return left(x, y) - left(y, x) + wedge.bracket(x, y);
}

NSLieAlgebra make_ns(std::vector<std::string> labels, BilinearProduct left, const LieAlgebra::Table& wedge) {
  if (left.dim() != labels.size()) throw InputError("NS-Lie: left product dimension mismatch");
  LieAlgebra w = LieAlgebra::unchecked(labels, wedge);
  return NSLieAlgebra{std::move(labels), std::move(left), std::move(w)};
}

Certificate is_nslie(const NSLieAlgebra& A, CheckOptions opts) {
  const std::size_t n = A.dim();
  auto e = [n](std::size_t i) { return Vec::basis(n, i); };
  return all_of("nslie", {
      [&] {
        ViolationRecorder rec("nslie", "(x<y)<z-x<(y<z)-(y<x)<z+y<(x<z)+(x>y)<z=0", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = i + 1; j < n && !rec.done(); ++j)
            for (std::size_t k = 0; k < n && !rec.done(); ++k) {
              const Vec x = e(i), y = e(j), z = e(k);
              Vec r = A.left(A.left(x, y), z) - A.left(x, A.left(y, z)) - A.left(A.left(y, x), z) +
                      A.left(y, A.left(x, z)) + A.left(A.wedge.bracket(x, y), z);
              rec.record({idx(i), idx(j), idx(k)}, r);
            }
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("nslie", "x>[y,z]+y>[z,x]+z>[x,y]+x<(y>z)+y<(z>x)+z<(x>y)=0", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = i + 1; j < n && !rec.done(); ++j)
            for (std::size_t k = j + 1; k < n && !rec.done(); ++k) {
              const Vec x = e(i), y = e(j), z = e(k);
              const auto& W = A.wedge;
              Vec r = W.bracket(x, A.commutator(y, z)) + W.bracket(y, A.commutator(z, x)) +
                      W.bracket(z, A.commutator(x, y)) + A.left(x, W.bracket(y, z)) + A.left(y, W.bracket(z, x)) +
                      A.left(z, W.bracket(x, y));
              rec.record({idx(i), idx(j), idx(k)}, r);
            }
        return rec.finish();
      }});
}

NSLieAlgebra ns_from_reynolds(const ReynoldsLieAlgebra& A) {
  const std::size_t n = A.L.dim();
  BilinearProduct left =
      BilinearProduct::from_fn(n, [&](std::size_t i, std::size_t j) { return A.L.bracket(A.R.column(i), Vec::basis(n, j)); });
  LieAlgebra::Table wedge;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = -A.L.bracket(A.R.column(i), A.R.column(j));
      if (!v.is_zero()) wedge.emplace(std::make_pair(i, j), std::move(v));
    }
  return make_ns(A.L.labels(), std::move(left), wedge);
}

LieAlgebra ns_commutator(const NSLieAlgebra& A) {
  const std::size_t n = A.dim();
  return LieAlgebra::from_bracket(
      A.labels, [&](std::size_t i, std::size_t j) { return A.commutator(Vec::basis(n, i), Vec::basis(n, j)); }, false);
}

Certificate is_ns_rep(const NSLieAlgebra& A, const NSRep& rep, CheckOptions opts) {
  require_ns_rep_shape(A, rep);
  const std::size_t n = A.dim(), m = rep.module_dim;
  auto at = [m](const std::vector<Mat>& maps, const Vec& x) { return combine(maps, x, m, m); };
  auto e = [n](std::size_t i) { return Vec::basis(n, i); };
  const auto& mu = rep.mu;
  const auto& nu = rep.nu;
  const auto& vr = rep.varrho;
  return all_of("ns-rep", {
      [&] {
        ViolationRecorder rec("ns-rep", "mu(x>y)=[mu(x),mu(y)]-mu(x<y)+mu(y<x)", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = 0; j < n && !rec.done(); ++j) {
            const Vec x = e(i), y = e(j);
            Mat r = at(mu, A.wedge.bracket(x, y)) - (mat_mul(mu[i], mu[j]) - mat_mul(mu[j], mu[i]) -
                                                      at(mu, A.left(x, y)) + at(mu, A.left(y, x)));
            rec.record({idx(i), idx(j)}, r);
          }
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("ns-rep", "nu(x<y)=mu(x)nu(y)-nu(y)mu(x)+nu(y)nu(x)-nu(y)varrho(x)", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = 0; j < n && !rec.done(); ++j) {
            Mat r = at(nu, A.left(e(i), e(j))) - (mat_mul(mu[i], nu[j]) - mat_mul(nu[j], mu[i]) +
                                                   mat_mul(nu[j], nu[i]) - mat_mul(nu[j], vr[i]));
            rec.record({idx(i), idx(j)}, r);
          }
        return rec.finish();
      },
      [&] {
        ViolationRecorder rec("ns-rep", "nu(x>y)=...+varrho([x,y])", opts);
        for (std::size_t i = 0; i < n && !rec.done(); ++i)
          for (std::size_t j = 0; j < n && !rec.done(); ++j) {
            const Vec x = e(i), y = e(j);
            Mat rhs = mat_mul(mu[j], vr[i]) - mat_mul(vr[i], mu[j]) + mat_mul(vr[i], nu[j]) - mat_mul(vr[j], nu[i]) +
                      mat_mul(vr[j], vr[i]) - mat_mul(vr[i], vr[j]) + mat_mul(vr[j], mu[i]) - mat_mul(mu[i], vr[j]) +
                      at(vr, A.commutator(x, y));
            rec.record({idx(i), idx(j)}, at(nu, A.wedge.bracket(x, y)) - rhs);
          }
        return rec.finish();
      }});
}

NSRep regular_rep(const NSLieAlgebra& A) {
  NSRep rep{A.dim(), {}, {}, {}};
  for (std::size_t i = 0; i < A.dim(); ++i) {
    rep.varrho.push_back(A.wedge.ad(i));
    rep.mu.push_back(A.left.left(i));
    rep.nu.push_back(A.left.right(i));
  }
  return rep;
}

NSLieAlgebra ns_semidirect(const NSLieAlgebra& A, const NSRep& rep) {
  Certificate c = is_ns_rep(A, rep, {.first_only = true});
  if (!c.pass) throw InputError("ns_semidirect: invalid NS representation: " + to_string(c));
  const std::size_t n = A.dim(), m = rep.module_dim, N = n + m;
  // (x+u)◁(y+v) = x◁y + mu(x)v + nu(y)u
  BilinearProduct left = BilinearProduct::from_fn(N, [&](std::size_t a, std::size_t b) {
    Vec out(N);
    if (a < n && b < n) {
      const Vec& v = A.left.basis(a, b);
      for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
    } else if (a < n && b >= n) {
      for (std::size_t k = 0; k < m; ++k) out[n + k] = rep.mu[a](k, b - n);
    } else if (a >= n && b < n) {
      for (std::size_t k = 0; k < m; ++k) out[n + k] = rep.nu[b](k, a - n);
    }
    return out;
  });
  // (x+u)▷(y+v) = x▷y + varrho(x)v - varrho(y)u
  LieAlgebra::Table wedge;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      Vec out(N);
      if (b < n) {
        const Vec& v = A.wedge.bracket_basis(a, b);
        for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
      } else if (a < n) {
        for (std::size_t k = 0; k < m; ++k) out[n + k] = rep.varrho[a](k, b - n);
      }
      if (!out.is_zero()) wedge.emplace(std::make_pair(a, b), std::move(out));
    }
  return make_ns(concat_labels(A.labels, default_labels(m, "w")), std::move(left), wedge);
}

NSRep ns_rep_from_reynolds_rep(const ReynoldsLieAlgebra& A, const ReynoldsRep& rr) {
  Certificate c = is_reynolds_rep(A, rr, {.first_only = true});
  if (!c.pass) throw InputError("ns_rep_from_reynolds_rep: invalid Reynolds representation: " + to_string(c));
  NSRep rep{rr.rep.module_dim, {}, {}, {}};
  for (std::size_t i = 0; i < A.L.dim(); ++i) {
    const Mat rho_rx = rr.rep.at(A.R.column(i));
    rep.varrho.push_back(-mat_mul(rho_rx, rr.T));
    rep.mu.push_back(rho_rx);
    rep.nu.push_back(-mat_mul(rr.rep.rho[i], rr.T));
  }
  return rep;
}

} // namespace reylie

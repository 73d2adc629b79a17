#include "reylie/lie.hpp"

#include "reylie/error.hpp"

#include <set>
#include <string>

namespace reylie {

namespace {

using I64 = std::int64_t;

I64 idx(std::size_t i) { return static_cast<I64>(i); }

} // namespace

// ---------------------------------------------------------------------------
// LieAlgebra
// ---------------------------------------------------------------------------

LieAlgebra LieAlgebra::unchecked(std::vector<std::string> labels, const Table& table) {
  LieAlgebra L;
  const std::size_t n = labels.size();
  L.labels_ = std::move(labels);
  L.full_.assign(n * n, Vec(n));
  for (const auto& [key, out] : table) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw InputError("bracket index out of range");
    if (out.size() != n) throw InputError("bracket output has wrong length");
    if (i == j) {
      if (!out.is_zero()) throw InputError("nonzero [e_i,e_i] at index " + std::to_string(i));
      continue;
    }
    L.full_[i * n + j] += out;
    L.full_[j * n + i] -= out;
  }
  return L;
}

LieAlgebra LieAlgebra::make(std::vector<std::string> labels, const Table& table) {
  LieAlgebra L = unchecked(std::move(labels), table);
  Certificate c = jacobi_check(L, {.first_only = true});
  if (!c.pass) throw InputError("not a Lie algebra: " + to_string(c));
  return L;
}

LieAlgebra LieAlgebra::from_bracket(std::vector<std::string> labels,
                                    const std::function<Vec(std::size_t, std::size_t)>& f,
                                    bool checked) {
  Table t;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = f(i, j);
      if (!v.is_zero()) t.emplace(std::make_pair(i, j), std::move(v));
    }
  return checked ? make(std::move(labels), t) : unchecked(std::move(labels), t);
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return unchecked(default_labels(n), {}); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw InputError("bracket: vector length mismatch");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Vec& c = full_[i * n + j];
      const Rat s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(s, c[k]);
    }
  }
  return out;
}

Mat LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = full_[i * n + j][k];
  return m;
}

Mat LieAlgebra::ad(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) m += x[i] * ad(i);
  return m;
}

LieAlgebra::Table LieAlgebra::upper() const {
  Table t;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!full_[i * n + j].is_zero()) t.emplace(std::make_pair(i, j), full_[i * n + j]);
  return t;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : full_)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l + "*");
  return out;
}

std::vector<std::string> concat_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y) { return L.bracket(x, y); }

Certificate jacobi_check(const LieAlgebra& L, CheckOptions opts) {
  ViolationRecorder rec("jacobi", "[[x,y],z]+[[y,z],x]+[[z,x],y]=0", opts);
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = i + 1; j < n && !rec.done(); ++j)
      for (std::size_t k = j + 1; k < n && !rec.done(); ++k) {
        const Vec ei = Vec::basis(n, i), ej = Vec::basis(n, j), ek = Vec::basis(n, k);
        Vec r = L.bracket(L.bracket_basis(i, j), ek);
        r += L.bracket(L.bracket_basis(j, k), ei);
        r += L.bracket(L.bracket_basis(k, i), ej);
        rec.record({idx(i), idx(j), idx(k)}, r);
      }
  return rec.finish();
}

Certificate is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Mat& f, CheckOptions opts) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw InputError("homomorphism: shape mismatch");
  ViolationRecorder rec("homomorphism", "f[x,y]=[fx,fy]", opts);
  const std::size_t n = src.dim();
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = i + 1; j < n && !rec.done(); ++j) {
      Vec r = mat_apply(f, src.bracket_basis(i, j)) - dst.bracket(f.column(i), f.column(j));
      rec.record({idx(i), idx(j)}, r);
    }
  return rec.finish();
}

Certificate is_subalgebra(const LieAlgebra& L, const std::vector<std::size_t>& part, CheckOptions opts) {
  std::set<std::size_t> in(part.begin(), part.end());
  ViolationRecorder rec("subalgebra", "[part,part] inside part", opts);
  for (std::size_t a = 0; a < part.size() && !rec.done(); ++a)
    for (std::size_t b = a + 1; b < part.size() && !rec.done(); ++b) {
      Vec v = L.bracket_basis(part[a], part[b]);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (in.count(k)) v[k] = Rat(0);
      rec.record({idx(part[a]), idx(part[b])}, v);
    }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

Mat Representation::at(const Vec& x) const { return combine(rho, x, module_dim, module_dim); }

void require_rep_shape(const LieAlgebra& L, const Representation& rep) {
  if (rep.rho.size() != L.dim())
    throw InputError("representation has " + std::to_string(rep.rho.size()) + " matrices, algebra dim " +
                     std::to_string(L.dim()));
  for (const auto& m : rep.rho)
    if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
      throw InputError("representation matrix is not module_dim x module_dim");
}

Certificate is_representation(const LieAlgebra& L, const Representation& rep, CheckOptions opts) {
  require_rep_shape(L, rep);
  ViolationRecorder rec("representation", "rho([x,y])=[rho(x),rho(y)]", opts);
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = i + 1; j < n && !rec.done(); ++j) {
      Mat r = rep.at(L.bracket_basis(i, j));
      r -= mat_mul(rep.rho[i], rep.rho[j]);
      r += mat_mul(rep.rho[j], rep.rho[i]);
      rec.record({idx(i), idx(j)}, r);
    }
  return rec.finish();
}

Representation adjoint_rep(const LieAlgebra& L) {
  Representation rep{L.dim(), {}};
  for (std::size_t i = 0; i < L.dim(); ++i) rep.rho.push_back(L.ad(i));
  return rep;
}

Representation coadjoint_rep(const LieAlgebra& L) { return dual_rep(adjoint_rep(L)); }

Representation zero_rep(const LieAlgebra& L, std::size_t module_dim) {
  return Representation{module_dim, std::vector<Mat>(L.dim(), Mat(module_dim, module_dim))};
}

Representation dual_rep(const Representation& rep) {
  Representation out{rep.module_dim, {}};
  for (const auto& m : rep.rho) out.rho.push_back(-transpose(m));
  return out;
}

LieAlgebra semidirect(const LieAlgebra& L, const Representation& rep) {
  Certificate c = is_representation(L, rep, {.first_only = true});
  if (!c.pass) throw InputError("semidirect: invalid representation: " + to_string(c));
  const std::size_t n = L.dim(), m = rep.module_dim;
  auto labels = concat_labels(L.labels(), default_labels(m, "w"));
  return LieAlgebra::from_bracket(
      std::move(labels),
      [&](std::size_t a, std::size_t b) {
        Vec out(n + m);
        if (b < n) {
          const Vec& v = L.bracket_basis(a, b);
          for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
        } else if (a < n) {
          // [e_a, w_b'] = rho(e_a) w_b'
          for (std::size_t k = 0; k < m; ++k) out[n + k] = rep.rho[a](k, b - n);
        }
        return out;
      },
      false);
}

// ---------------------------------------------------------------------------
// Bilinear forms
// ---------------------------------------------------------------------------

BilinForm::BilinForm(Mat gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw InputError("gram matrix is not square");
  if (!gram_.is_symmetric()) throw InputError("gram matrix is not symmetric");
}

Rat BilinForm::operator()(const Vec& x, const Vec& y) const {
  Vec gy = mat_apply(gram_, y);
  Rat s;
  for (std::size_t i = 0; i < x.size(); ++i) s.add_product(x[i], gy[i]);
  return s;
}

Certificate is_invariant_form(const LieAlgebra& L, const BilinForm& S, CheckOptions opts) {
  if (S.dim() != L.dim()) throw InputError("form dimension mismatch");
  ViolationRecorder rec("invariant-form", "S([x,y],z)+S(y,[x,z])=0", opts);
  const std::size_t n = L.dim();
  // residual over z for fixed (x, y): row vector ad(x)^T-combination
  for (std::size_t i = 0; i < n && !rec.done(); ++i)
    for (std::size_t j = 0; j < n && !rec.done(); ++j) {
      Vec r(n);
      const Vec ej = Vec::basis(n, j);
      for (std::size_t k = 0; k < n; ++k)
        r[k] = S(L.bracket_basis(i, j), Vec::basis(n, k)) + S(ej, L.bracket_basis(i, k));
      rec.record({idx(i), idx(j)}, r);
    }
  return rec.finish();
}

Certificate is_quadratic(const LieAlgebra& L, const BilinForm& S, CheckOptions opts) {
  return all_of("quadratic", {[&] { return is_invariant_form(L, S, opts); },
                              [&] {
                                return S.nondegenerate()
                                           ? Certificate::ok("nondegenerate")
                                           : Certificate::failure("nondegenerate", "det(S)!=0", "degenerate form");
                              }});
}

Mat s_sharp(const BilinForm& S) { return S.gram(); }

Mat i_s(const BilinForm& S) {
  auto inv = inverse(S.gram());
  if (!inv) throw InputError("degenerate bilinear form");
  return *inv;
}

} // namespace reylie

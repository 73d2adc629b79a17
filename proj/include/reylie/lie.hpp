#pragma once

#include "reylie/certificate.hpp"
#include "reylie/linalg.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace reylie {

/// Finite-dimensional Lie algebra given by structure constants c_{ij}^k,
/// stored for i < j only. [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0.
class LieAlgebra {
public:
  /// (i, j) -> [e_i, e_j]. Keys with i > j are negated into place; i == j must be zero.
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  LieAlgebra() = default;

  /// Checked construction: throws InputError when Jacobi fails.
  static LieAlgebra make(std::vector<std::string> labels, const Table& table);
  /// Raw data for the check operations.
  static LieAlgebra unchecked(std::vector<std::string> labels, const Table& table);
  /// Calls f(i, j) for every i < j.
  static LieAlgebra from_bracket(std::vector<std::string> labels,
                                 const std::function<Vec(std::size_t, std::size_t)>& f,
                                 bool checked = true);
  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return full_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// ad(e_i): column j is [e_i, e_j].
  Mat ad(std::size_t i) const;
  Mat ad(const Vec& x) const;

  /// Nonzero brackets with i < j, lexicographic.
  Table upper() const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.full_ == b.full_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Vec> full_; // dim*dim cache, row-major in (i, j)
};

std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");
/// Labels of the dual basis: "H" -> "H*".
std::vector<std::string> dual_labels(const std::vector<std::string>& labels);
std::vector<std::string> concat_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);
Certificate jacobi_check(const LieAlgebra& L, CheckOptions opts = {});
/// f[x,y]_src == [fx,fy]_dst on all basis pairs.
Certificate is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Mat& f,
                            CheckOptions opts = {});
/// Indices span a subalgebra (brackets stay inside).
Certificate is_subalgebra(const LieAlgebra& L, const std::vector<std::size_t>& part, CheckOptions opts = {});

/// Images rho(e_i) of the basis, each module_dim x module_dim.
struct Representation {
  std::size_t module_dim = 0;
  std::vector<Mat> rho;

  Mat at(const Vec& x) const;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Throws InputError unless rep has L.dim() square matrices of size module_dim.
void require_rep_shape(const LieAlgebra& L, const Representation& rep);

Certificate is_representation(const LieAlgebra& L, const Representation& rep, CheckOptions opts = {});
Representation adjoint_rep(const LieAlgebra& L);
Representation coadjoint_rep(const LieAlgebra& L);
Representation zero_rep(const LieAlgebra& L, std::size_t module_dim);
Representation dual_rep(const Representation& rep);

/// g ⋉_rho W, g block first.
LieAlgebra semidirect(const LieAlgebra& L, const Representation& rep);

/// Symmetric bilinear form by Gram matrix.
class BilinForm {
public:
  BilinForm() = default;
  /// Throws InputError for a non-square or non-symmetric Gram matrix.
  explicit BilinForm(Mat gram);

  const Mat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  bool nondegenerate() const { return !determinant(gram_).is_zero(); }
  Rat operator()(const Vec& x, const Vec& y) const;

private:
  Mat gram_;
};

Certificate is_invariant_form(const LieAlgebra& L, const BilinForm& S, CheckOptions opts = {});
Certificate is_quadratic(const LieAlgebra& L, const BilinForm& S, CheckOptions opts = {});
/// S♯ : g -> g*, the Gram matrix.
Mat s_sharp(const BilinForm& S);
/// I_S = (S♯)^{-1} : g* -> g. Throws InputError for degenerate S.
Mat i_s(const BilinForm& S);

} // namespace reylie

#pragma once

#include "reylie/certificate.hpp"
#include "reylie/lie.hpp"
#include "reylie/reynolds.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace reylie {

/// Bilinear product with no symmetry assumed; full n x n table of outputs.
class BilinearProduct {
public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  BilinearProduct() = default;
  explicit BilinearProduct(std::size_t n) : n_(n), full_(n * n, Vec(n)) {}
  static BilinearProduct from_table(std::size_t n, const Table& t);
  static BilinearProduct from_fn(std::size_t n, const std::function<Vec(std::size_t, std::size_t)>& f);

  std::size_t dim() const { return n_; }
  const Vec& basis(std::size_t i, std::size_t j) const { return full_[i * n_ + j]; }
  Vec operator()(const Vec& x, const Vec& y) const;
  /// x -> e_i x
  Mat left(std::size_t i) const;
  /// x -> x e_j
  Mat right(std::size_t j) const;
  Table table() const;

  friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Vec> full_;
};

/// (G, ◁, ▷) with ▷ skew; ▷ is stored like a Lie bracket (no Jacobi assumed).
struct NSLieAlgebra {
  std::vector<std::string> labels;
  BilinearProduct left;
  LieAlgebra wedge;

  std::size_t dim() const { return labels.size(); }
  /// [x,y] = x◁y - y◁x + x▷y
  Vec commutator(const Vec& x, const Vec& y) const;
  friend bool operator==(const NSLieAlgebra&, const NSLieAlgebra&) = default;
};

/// Builds an NS candidate; throws InputError on inconsistent sizes.
NSLieAlgebra make_ns(std::vector<std::string> labels, BilinearProduct left, const LieAlgebra::Table& wedge);

/// (W; varrho, mu, nu)
struct NSRep {
  std::size_t module_dim = 0;
  std::vector<Mat> varrho, mu, nu;
  friend bool operator==(const NSRep&, const NSRep&) = default;
};

Certificate is_nslie(const NSLieAlgebra& A, CheckOptions opts = {});
/// x◁y = [Rx,y], x▷y = -[Rx,Ry]
NSLieAlgebra ns_from_reynolds(const ReynoldsLieAlgebra& A);
LieAlgebra ns_commutator(const NSLieAlgebra& A);
Certificate is_ns_rep(const NSLieAlgebra& A, const NSRep& rep, CheckOptions opts = {});
/// (G; Ad, left ◁ action, right ◁ action)
NSRep regular_rep(const NSLieAlgebra& A);
/// Throws InputError for an invalid rep.
NSLieAlgebra ns_semidirect(const NSLieAlgebra& A, const NSRep& rep);
/// varrho(x) = -rho(Rx)T, mu(x) = rho(Rx), nu(x) = -rho(x)T on ns_from_reynolds(A).
/// Throws InputError for an invalid Reynolds representation.
NSRep ns_rep_from_reynolds_rep(const ReynoldsLieAlgebra& A, const ReynoldsRep& rr);

} // namespace reylie

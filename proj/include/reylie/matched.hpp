#pragma once

#include "reylie/certificate.hpp"
#include "reylie/lie.hpp"
#include "reylie/reynolds.hpp"

#include <vector>

namespace reylie {

/// (g, h; rho, mu): rho is g acting on h's space, mu is h acting on g's space.
struct MatchedPair {
  LieAlgebra g, h;
  Representation rho, mu;
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct ReynoldsMatchedPair {
  MatchedPair pair;
  Mat Rg, Rh;
  friend bool operator==(const ReynoldsMatchedPair&, const ReynoldsMatchedPair&) = default;
};

/// Ambient quadratic Reynolds algebra split along two sets of basis indices.
struct ManinTripleReynolds {
  ReynoldsLieAlgebra G;
  BilinForm S;
  std::vector<std::size_t> part_g, part_h;
};

/// rho = 0, mu = 0
MatchedPair trivial_matched(const LieAlgebra& g, const LieAlgebra& h);
/// (g, dual; ad*, coadjoint of dual), dual on g*'s coordinates.
MatchedPair coadjoint_pair(const LieAlgebra& g, const LieAlgebra& dual);

/// Throws InputError for representation shape mismatches.
Certificate is_matched_pair(const MatchedPair& mp, CheckOptions opts = {});
/// Bracket on g ⊕ h:
/// [x+ξ, y+η] = [x,y] + mu(ξ)y - mu(η)x + [ξ,η] + rho(x)η - rho(y)ξ.
/// Throws InputError for an invalid pair when checked.
LieAlgebra matched_double(const MatchedPair& mp, bool checked = true);

Certificate is_reynolds_matched_pair(const ReynoldsMatchedPair& rmp, CheckOptions opts = {});
/// matched_double with operator Rg ⊕ Rh. Throws InputError for an invalid rmp.
ReynoldsLieAlgebra reynolds_double(const ReynoldsMatchedPair& rmp);
/// (g_R, h_R; rho_(R,R'), mu_(R,R')). Throws InputError for an invalid rmp.
MatchedPair induced_matched_pair(const ReynoldsMatchedPair& rmp);

/// Ambient Lie with Reynolds operator, quadratic Reynolds, parts partition the basis, each part is a subalgebra
/// stable under the operator and isotropic.
Certificate is_manin_triple(const ManinTripleReynolds& mt, CheckOptions opts = {});
/// S(x+ξ, y+η) = ξ(y) + η(x) on g ⊕ g*.
BilinForm standard_pairing(std::size_t n);
/// Requires the coadjoint shape with Rh = -Rg^t; throws InputError otherwise.
ManinTripleReynolds matched_to_manin(const ReynoldsMatchedPair& rmp);
/// Requires parts {0..n-1}, {n..2n-1} and the standard pairing; throws InputError otherwise.
ReynoldsMatchedPair manin_to_matched(const ManinTripleReynolds& mt);

} // namespace reylie

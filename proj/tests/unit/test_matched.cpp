#include "doctest.h"

#include "fixtures.hpp"
#include "reylie/error.hpp"
#include "reylie/matched.hpp"

using namespace reylie;

namespace {

ReynoldsMatchedPair fl_pair(const Mat& Rh) { return {coadjoint_pair(fx::sl2(), fx::fl_dual()), fx::B(), Rh}; }
ReynoldsMatchedPair fl_pair() { return fl_pair(-transpose(fx::B())); }

std::vector<ReynoldsLieAlgebra> small_reynolds() {
  return {{fx::sl2(), fx::B()},
          {fx::sl2(), Mat::identity(3)},
          {fx::so3(), Mat::zero(3, 3)},
          {fx::heis(), Mat{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}},
          {fx::aff1(), Mat{{1, 0}, {0, 0}}},
          {LieAlgebra::abelian(2), Mat{{1, 2}, {3, 4}}}};
}

// rho = 0 and mu = coadjoint of aff1 on a copy of aff1: mu(q) is not a derivation
MatchedPair broken_mp2() {
  LieAlgebra g = LieAlgebra::make({"p*", "q*"}, {{{0, 1}, Vec{0, 1}}});
  return MatchedPair{g, fx::aff1(), zero_rep(g, 2), coadjoint_rep(fx::aff1())};
}

ManinTripleReynolds unchecked_manin(const ReynoldsMatchedPair& rmp) {
  const std::size_t n = rmp.pair.g.dim();
  ManinTripleReynolds mt{{matched_double(rmp.pair, false), Mat::block_diag(rmp.Rg, rmp.Rh)}, standard_pairing(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    mt.part_g.push_back(i);
    mt.part_h.push_back(n + i);
  }
  return mt;
}

} // namespace

TEST_CASE("trivial matched pairs") {
  const std::vector<LieAlgebra> algs{fx::sl2(), fx::so3(), fx::heis(), fx::aff1(), LieAlgebra::abelian(2)};
  for (const auto& g : algs)
    for (const auto& h : algs) {
      MatchedPair mp = trivial_matched(g, h);
      CHECK(is_matched_pair(mp).pass);
      LieAlgebra d = matched_double(mp);
      CHECK(jacobi_check(d).pass);
      const std::size_t n = g.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < h.dim(); ++a) CHECK(d.bracket_basis(i, n + a).is_zero());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(d.bracket_basis(i, j).slice(0, n) == g.bracket_basis(i, j));
    }
}

TEST_CASE("coadjoint pair of the sl2 r-matrix bialgebra") {
  MatchedPair mp = coadjoint_pair(fx::sl2(), fx::fl_dual());
  CHECK(is_matched_pair(mp).pass);
  LieAlgebra d = matched_double(mp);
  CHECK(d.dim() == 6);
  CHECK(jacobi_check(d).pass);
  CHECK(d.labels() == std::vector<std::string>{"H", "X", "Y", "H*", "X*", "Y*"});
  CHECK(d.bracket_basis(0, 4) == Vec{-2, 0, 0, 0, -2, 0});
  CHECK(d.bracket_basis(0, 5) == Vec{0, 0, 0, 0, 0, 2});
  CHECK(d.bracket_basis(1, 4) == Vec{0, 0, 0, 2, 0, 0});
  CHECK(d.bracket_basis(2, 3) == Vec{0, 0, 0, 0, 1, 0});
  CHECK(d.bracket_basis(3, 4) == Vec{0, 0, 0, 2, 0, 0});
}

TEST_CASE("abelian h with coadjoint rho") {
  const LieAlgebra g = fx::sl2();
  MatchedPair mp{g, LieAlgebra::abelian(3), coadjoint_rep(g), zero_rep(LieAlgebra::abelian(3), 3)};
  CHECK(is_matched_pair(mp).pass);
  LieAlgebra d = matched_double(mp);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 3; ++a) {
      const Vec v = d.bracket_basis(i, 3 + a);
      CHECK(v.slice(0, 3).is_zero());
      CHECK(v.slice(3, 3) == coadjoint_rep(g).rho[i].column(a));
    }
  CHECK(matched_double(mp).upper() == semidirect(g, coadjoint_rep(g)).upper());
}

TEST_CASE("is_matched_pair failure") {
  Certificate c = is_matched_pair(broken_mp2());
  CHECK_FALSE(c.pass);
  CHECK(c.condition == "mu(a)[x,y]=[mu(a)x,y]+[x,mu(a)y]+mu(rho(y)a)x-mu(rho(x)a)y");
  CHECK(c.indices == std::vector<std::int64_t>{1, 0, 1});
  CHECK(c.residual == std::vector<Rat>{1, 0});
  CHECK_FALSE(jacobi_check(matched_double(broken_mp2(), false)).pass);
  CHECK_THROWS_AS(matched_double(broken_mp2()), InputError);

  MatchedPair bad_rep = trivial_matched(fx::sl2(), fx::sl2());
  bad_rep.rho.rho[0] = Mat::identity(3);
  Certificate r = is_matched_pair(bad_rep);
  CHECK_FALSE(r.pass);
  CHECK(r.condition == "rho([x,y])=[rho(x),rho(y)]");

  MatchedPair wrong_shape = trivial_matched(fx::sl2(), fx::aff1());
  wrong_shape.rho = zero_rep(fx::sl2(), 3);
  CHECK_THROWS_AS(is_matched_pair(wrong_shape), InputError);
}

TEST_CASE("double is Lie exactly when the pair is matched") {
  const LieAlgebra g = fx::sl2();
  std::vector<MatchedPair> cands{coadjoint_pair(g, fx::fl_dual()), coadjoint_pair(g, fx::km_dual()),
                                 coadjoint_pair(g, LieAlgebra::abelian(3)), coadjoint_pair(g, fx::sl2()),
                                 coadjoint_pair(g, fx::so3()), coadjoint_pair(g, fx::heis()),
                                 coadjoint_pair(fx::aff1(), fx::aff1()), coadjoint_pair(fx::heis(), fx::heis()),
                                 broken_mp2()};
  int passing = 0;
  for (const auto& mp : cands) {
    const bool matched = is_matched_pair(mp).pass;
    passing += matched;
    CHECK(jacobi_check(matched_double(mp, false)).pass == matched);
  }
  CHECK(passing >= 3);
  CHECK(passing < static_cast<int>(cands.size()));
}

TEST_CASE("is_reynolds_matched_pair") {
  for (const auto& A : small_reynolds())
    for (const auto& Bh : small_reynolds())
      CHECK(is_reynolds_matched_pair({trivial_matched(A.L, Bh.L), A.R, Bh.R}).pass);
  CHECK(is_reynolds_matched_pair(fl_pair()).pass);

  // the dual operator with the wrong sign
  Certificate c = is_reynolds_matched_pair(fl_pair(transpose(fx::B())));
  CHECK_FALSE(c.pass);
  CHECK(c.check == "reynolds-matched");
  CHECK(c.condition == "rho(Rx)R'a=R'(rho(x)R'a+rho(Rx)a-rho(Rx)R'a)");
  CHECK(c.indices == std::vector<std::int64_t>{2, 0});
  CHECK(c.residual == std::vector<Rat>{0, 0, 4});
  CHECK(is_matched_pair(fl_pair(transpose(fx::B())).pair).pass);
  CHECK(is_reynolds(fx::fl_dual(), transpose(fx::B())).pass);

  Certificate r = is_reynolds_matched_pair({trivial_matched(fx::sl2(), fx::sl2()), Rat(2) * Mat::identity(3), Mat::zero(3, 3)});
  CHECK_FALSE(r.pass);
  CHECK(r.condition == "[Rx,Ry]=R([Rx,y]+[x,Ry]-[Rx,Ry])");
  CHECK_THROWS_AS(is_reynolds_matched_pair({trivial_matched(fx::sl2(), fx::sl2()), Mat::identity(2), Mat::zero(3, 3)}),
                  InputError);
}

TEST_CASE("reynolds_double") {
  ReynoldsLieAlgebra d = reynolds_double(fl_pair());
  CHECK(d.L.dim() == 6);
  CHECK(d.R == Mat::block_diag(fx::B(), -transpose(fx::B())));
  CHECK(is_reynolds(d.L, d.R).pass);
  CHECK(jacobi_check(d.L).pass);

  for (const auto& A : small_reynolds())
    for (const auto& Bh : small_reynolds()) {
      ReynoldsLieAlgebra t = reynolds_double({trivial_matched(A.L, Bh.L), A.R, Bh.R});
      CHECK(is_reynolds(t.L, t.R).pass);
      CHECK(t.R == Mat::block_diag(A.R, Bh.R));
    }
  ReynoldsLieAlgebra z = reynolds_double({coadjoint_pair(fx::sl2(), fx::fl_dual()), Mat::zero(3, 3), Mat::zero(3, 3)});
  CHECK(z.R.is_zero());
  CHECK(is_reynolds(z.L, z.R).pass);
  CHECK_THROWS_AS(reynolds_double(fl_pair(transpose(fx::B()))), InputError);
}

TEST_CASE("induced_matched_pair and the double of the induced pair") {
  std::vector<ReynoldsMatchedPair> rmps{fl_pair(),
                                        {coadjoint_pair(fx::sl2(), fx::fl_dual()), Mat::zero(3, 3), Mat::zero(3, 3)},
                                        {coadjoint_pair(fx::sl2(), fx::fl_dual()), Mat::identity(3), Mat::identity(3)}};
  for (const auto& A : small_reynolds())
    for (const auto& Bh : small_reynolds()) rmps.push_back({trivial_matched(A.L, Bh.L), A.R, Bh.R});
  for (const auto& rmp : rmps) {
    REQUIRE(is_reynolds_matched_pair(rmp).pass);
    MatchedPair ind = induced_matched_pair(rmp);
    CHECK(is_matched_pair(ind).pass);
    CHECK(matched_double(ind) == induced_algebra(reynolds_double(rmp)).L);
  }

  MatchedPair zero = induced_matched_pair({trivial_matched(fx::sl2(), fx::so3()), fx::B(), Mat::identity(3)});
  for (const auto& m : zero.rho.rho) CHECK(m.is_zero());
  for (const auto& m : zero.mu.rho) CHECK(m.is_zero());
  CHECK(zero.h == fx::so3());

  ReynoldsMatchedPair id{coadjoint_pair(fx::sl2(), fx::fl_dual()), Mat::identity(3), Mat::identity(3)};
  MatchedPair same = induced_matched_pair(id);
  CHECK(same == id.pair);

  MatchedPair fl = induced_matched_pair(fl_pair());
  CHECK(fl.g.bracket(fx::H, fx::Y) == Vec{2, -4, 0});
  CHECK_THROWS_AS(induced_matched_pair(fl_pair(transpose(fx::B()))), InputError);
}

TEST_CASE("matched_to_manin and back") {
  ManinTripleReynolds mt = matched_to_manin(fl_pair());
  CHECK(is_manin_triple(mt).pass);
  CHECK(mt.S.gram() == standard_pairing(3).gram());
  CHECK(mt.G.R == Mat::block_diag(fx::B(), -transpose(fx::B())));
  CHECK(is_quadratic_reynolds(mt.G, mt.S).pass);
  CHECK(manin_to_matched(mt) == fl_pair());

  ReynoldsMatchedPair ab{coadjoint_pair(LieAlgebra::abelian(2), LieAlgebra::abelian(2)), Mat::zero(2, 2), Mat::zero(2, 2)};
  ManinTripleReynolds amt = matched_to_manin(ab);
  CHECK(is_manin_triple(amt).pass);
  CHECK(amt.G.L.is_abelian());
  CHECK(manin_to_matched(amt) == ab);

  ReynoldsMatchedPair z{coadjoint_pair(fx::sl2(), fx::fl_dual()), Mat::zero(3, 3), Mat::zero(3, 3)};
  CHECK(manin_to_matched(matched_to_manin(z)) == z);

  // standard pairing is zero on both diagonal blocks
  const Mat& G = mt.S.gram();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(G(i, j).is_zero());
      CHECK(G(3 + i, 3 + j).is_zero());
    }

  CHECK_THROWS_AS(matched_to_manin(fl_pair(transpose(fx::B()))), InputError);
  CHECK_THROWS_AS(matched_to_manin({trivial_matched(fx::sl2(), fx::sl2()), Mat::zero(3, 3), Mat::zero(3, 3)}), InputError);
  CHECK_THROWS_AS(matched_to_manin({coadjoint_pair(fx::sl2(), fx::fl_dual()), fx::B(), Mat::zero(3, 3)}), InputError);
}

TEST_CASE("is_manin_triple failures") {
  ManinTripleReynolds iso{{LieAlgebra::abelian(2), Mat::zero(2, 2)}, BilinForm(Mat::identity(2)), {0}, {1}};
  Certificate c = is_manin_triple(iso);
  CHECK_FALSE(c.pass);
  CHECK(c.condition == "S(part,part)=0");
  CHECK(c.indices == std::vector<std::int64_t>{0, 0});
  CHECK(c.residual == std::vector<Rat>{1});

  ManinTripleReynolds overlap = matched_to_manin(fl_pair());
  overlap.part_g.push_back(3);
  Certificate p = is_manin_triple(overlap);
  CHECK_FALSE(p.pass);
  CHECK(p.condition == "parts partition the basis");
  CHECK(p.indices == std::vector<std::int64_t>{3});

  ManinTripleReynolds leak = matched_to_manin(fl_pair());
  leak.G.R(3, 0) = Rat(1);
  CHECK_FALSE(is_manin_triple(leak).pass);
  CHECK_THROWS_AS(manin_to_matched(leak), InputError);

  ManinTripleReynolds odd{{LieAlgebra::abelian(3), Mat::zero(3, 3)}, BilinForm(Mat::identity(3)), {0}, {1, 2}};
  CHECK_THROWS_AS(manin_to_matched(odd), InputError);
}

TEST_CASE("Reynolds matched pair of coadjoint shape iff Manin triple") {
  std::vector<ReynoldsMatchedPair> cands;
  for (const LieAlgebra& dual : {fx::fl_dual(), fx::km_dual(), LieAlgebra::abelian(3), fx::sl2()})
    for (const Mat& R : {fx::B(), Mat::zero(3, 3), Mat::identity(3), Mat{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}})
      cands.push_back({coadjoint_pair(fx::sl2(), dual), R, -transpose(R)});
  int passing = 0;
  for (const auto& rmp : cands) {
    const bool rm = is_reynolds_matched_pair(rmp).pass;
    passing += rm;
    CHECK(is_manin_triple(unchecked_manin(rmp)).pass == rm);
  }
  CHECK(passing >= 2);
  CHECK(passing < static_cast<int>(cands.size()));
}

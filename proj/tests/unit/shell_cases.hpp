#pragma once

// Documents and command lines shared by test_shell (in process) and the CLI
// runner (gen_fixtures writes them out, run_cli.sh replays them).

#include "fixtures.hpp"
#include "reylie/io.hpp"
#include "reylie/shell.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace sc {

using namespace reylie;
using io::json;

inline json with_op(json doc, const Mat& R) {
  doc["reynolds"] = io::operator_doc(R);
  return doc;
}

inline Tensor2 xy_minus_yx() {
  Tensor2 t(3, 3);
  t.set(1, 2, 1);
  t.set(2, 1, -1);
  return t;
}

inline ReynoldsLieAlgebra sl2B() { return {fx::sl2(), fx::B()}; }

inline ReynoldsMatchedPair fl_pair(const Mat& Rh) { return {coadjoint_pair(fx::sl2(), fx::fl_dual()), fx::B(), Rh}; }

inline ManinTripleReynolds unchecked_manin(const ReynoldsMatchedPair& rmp) {
  const std::size_t n = rmp.pair.g.dim();
  ManinTripleReynolds mt{{matched_double(rmp.pair, false), Mat::block_diag(rmp.Rg, rmp.Rh)}, standard_pairing(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    mt.part_g.push_back(i);
    mt.part_h.push_back(n + i);
  }
  return mt;
}

inline QuadraticRB sl2_qrb() { return {{fx::sl2(), fx::B(), Rat(0)}, fx::S()}; }

inline QuadraticRB weight_one() {
  ReynoldsLieAlgebra d = drinfeld_double({{fx::sl2(), fx::fl_dual()}, fx::B()});
  Mat P = Mat::zero(6, 6);
  for (std::size_t i = 0; i < 3; ++i) P(i, i) = Rat(-1);
  return {{d.L, P, Rat(1)}, standard_pairing(3)};
}

inline PreLieAlgebra dual_numbers() {
  return {{"1", "t"}, BilinearProduct::from_table(2, {{{0, 0}, Vec{1, 0}}, {{0, 1}, Vec{0, 1}}, {{1, 0}, Vec{0, 1}}})};
}

inline PreLieAlgebra not_prelie() {
  return {{"a", "b"}, BilinearProduct::from_table(2, {{{0, 0}, Vec{0, 1}}, {{1, 0}, Vec{1, 0}}})};
}

inline PreLieAlgebra upper_triangular() {
  return {{"E11", "E12", "E22"}, BilinearProduct::from_table(3, {{{0, 0}, Vec{1, 0, 0}},
                                                                  {{0, 1}, Vec{0, 1, 0}},
                                                                  {{1, 2}, Vec{0, 1, 0}},
                                                                  {{2, 2}, Vec{0, 0, 1}}})};
}

inline ReynoldsRep coad(const ReynoldsLieAlgebra& A) { return dual_reynolds_rep(adjoint_reynolds_rep(A)); }

inline std::vector<std::pair<std::string, json>> fixture_docs() {
  const Mat id = Mat::identity(3);
  const Mat two_id = Rat(2) * id;
  std::vector<std::pair<std::string, json>> d;
  d.emplace_back("sl2.json", io::to_json(fx::sl2()));
  d.emplace_back("broken.json", io::to_json(LieAlgebra::unchecked({"a", "b", "c"}, {{{0, 1}, Vec{0, 1, 0}},
                                                                                   {{1, 2}, Vec{1, 0, 0}}})));
  d.emplace_back("B.json", io::operator_doc(fx::B()));
  d.emplace_back("id.json", io::operator_doc(id));
  d.emplace_back("two_id.json", io::operator_doc(two_id));
  d.emplace_back("minus_B.json", io::operator_doc(-fx::B()));
  d.emplace_back("wrong_shape.json", io::operator_doc(Mat::identity(2)));
  d.emplace_back("sl2_reynolds.json", io::to_json(sl2B()));
  d.emplace_back("adjoint_rr.json", io::to_json(adjoint_reynolds_rep(sl2B())));
  d.emplace_back("adjoint_rr_T_id.json", io::to_json(ReynoldsRep{adjoint_rep(fx::sl2()), id}));
  d.emplace_back("adjoint_rep.json", io::to_json(adjoint_rep(fx::sl2())));

  const NSLieAlgebra ns = ns_from_reynolds(sl2B());
  NSRep nu0 = regular_rep(ns);
  for (auto& m : nu0.nu) m = Mat(3, 3);
  d.emplace_back("ns_sl2B.json", io::to_json(ns));
  d.emplace_back("ns_bad.json", io::to_json(ns_from_reynolds({fx::sl2(), two_id})));
  d.emplace_back("ns_regular.json", io::to_json(regular_rep(ns)));
  d.emplace_back("ns_regular_nu0.json", io::to_json(nu0));

  LieAlgebra pq = LieAlgebra::make({"p*", "q*"}, {{{0, 1}, Vec{0, 1}}});
  d.emplace_back("mp_fl.json", io::to_json(coadjoint_pair(fx::sl2(), fx::fl_dual())));
  d.emplace_back("mp_broken.json", io::to_json(MatchedPair{pq, fx::aff1(), zero_rep(pq, 2), coadjoint_rep(fx::aff1())}));
  d.emplace_back("rmp_fl.json", io::to_json(fl_pair(-transpose(fx::B()))));
  d.emplace_back("rmp_remark.json", io::to_json(fl_pair(transpose(fx::B()))));
  d.emplace_back("manin_fl.json", io::to_json(matched_to_manin(fl_pair(-transpose(fx::B())))));
  d.emplace_back("manin_remark.json", io::to_json(unchecked_manin(fl_pair(transpose(fx::B())))));

  d.emplace_back("cob_fl.json", io::cobracket_to_json(cobracket_from_dual(fx::fl_dual()), fx::sl2().labels()));
  d.emplace_back("cob_bad.json", io::cobracket_to_json(cobracket_from_dual(LieAlgebra::unchecked(
                                                           {"a*", "b*", "c*"}, {{{0, 1}, Vec{0, 1, 0}}, {{1, 2}, Vec{1, 0, 0}}})),
                                                       {"a", "b", "c"}));
  d.emplace_back("bialg_fl.json", io::to_json(LieBialgebra{fx::sl2(), fx::fl_dual()}));
  d.emplace_back("bialg_fl_R.json", io::to_json(ReynoldsLieBialgebra{{fx::sl2(), fx::fl_dual()}, fx::B()}));
  d.emplace_back("bialg_so3.json", io::to_json(LieBialgebra{fx::sl2(), fx::so3()}));
  d.emplace_back("bialg_km.json", io::to_json(LieBialgebra{fx::sl2(), fx::km_dual()}));

  d.emplace_back("sl2_qrb.json", with_op(io::to_json(sl2_qrb()), fx::B()));
  d.emplace_back("qrb_diag.json", io::to_json(QuadraticRB{{fx::sl2(), Mat{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, Rat(0)}, fx::S()}));
  d.emplace_back("qrb_weight_one.json",
                 with_op(io::to_json(weight_one()), drinfeld_double({{fx::sl2(), fx::fl_dual()}, fx::B()}).R));

  d.emplace_back("r.json", io::to_json(fx::r()));
  d.emplace_back("xy.json", io::to_json(xy_minus_yx()));
  d.emplace_back("hh.json", io::to_json(Tensor2::outer(fx::H, fx::H)));

  d.emplace_back("relrb.json", io::to_json(RelativeRB{sl2B(), coad(sl2B()), r_plus(fx::r())}));
  d.emplace_back("relrb_bad.json", io::to_json(RelativeRB{sl2B(), coad(sl2B()), id}));

  d.emplace_back("prelie_ut.json", io::to_json(upper_triangular()));
  d.emplace_back("prelie_bad.json", io::to_json(not_prelie()));
  d.emplace_back("prelie_dual.json", io::to_json(ReynoldsPreLie{dual_numbers(), Mat::identity(2)}));
  d.emplace_back("prelie_dual_2id.json", io::to_json(ReynoldsPreLie{dual_numbers(), Rat(2) * Mat::identity(2)}));
  return d;
}

// tool is "check" or "build"; arguments ending in .json are file names in the data directory,
// except for the file following -o, which is an output written there.
struct Case {
  std::string tool;
  std::string kind;
  std::vector<std::string> args;
  int expect;
};

inline std::vector<Case> cases() {
  return {
      // every check kind: a passing and a failing fixture
      {"check", "jacobi", {"sl2.json"}, 0},
      {"check", "jacobi", {"broken.json"}, 1},
      {"check", "reynolds", {"sl2.json", "--op", "B.json"}, 0},
      {"check", "reynolds", {"sl2_reynolds.json"}, 0},
      {"check", "reynolds", {"sl2.json", "--op", "two_id.json"}, 1},
      {"check", "reynolds-rep", {"sl2_reynolds.json", "--rep", "adjoint_rr.json"}, 0},
      {"check", "reynolds-rep", {"sl2_reynolds.json", "--rep", "adjoint_rr_T_id.json"}, 1},
      {"check", "nslie", {"ns_sl2B.json"}, 0},
      {"check", "nslie", {"ns_bad.json"}, 1},
      {"check", "ns-rep", {"ns_sl2B.json", "--rep", "ns_regular.json"}, 0},
      {"check", "ns-rep", {"ns_sl2B.json", "--rep", "ns_regular_nu0.json"}, 1},
      {"check", "matched", {"mp_fl.json"}, 0},
      {"check", "matched", {"mp_broken.json"}, 1},
      {"check", "reynolds-matched", {"rmp_fl.json"}, 0},
      {"check", "reynolds-matched", {"rmp_remark.json"}, 1},
      {"check", "manin", {"manin_fl.json"}, 0},
      {"check", "manin", {"manin_remark.json"}, 1},
      {"check", "coalgebra", {"cob_fl.json"}, 0},
      {"check", "coalgebra", {"cob_fl.json", "--op", "minus_B.json"}, 0},
      {"check", "coalgebra", {"cob_fl.json", "--op", "two_id.json"}, 1},
      {"check", "coalgebra", {"cob_bad.json"}, 1},
      {"check", "bialgebra", {"bialg_fl.json"}, 0},
      {"check", "bialgebra", {"bialg_km.json"}, 0},
      {"check", "bialgebra", {"bialg_so3.json"}, 1},
      {"check", "reynolds-bialgebra", {"bialg_fl.json", "--op", "B.json"}, 0},
      {"check", "reynolds-bialgebra", {"bialg_fl.json", "--op", "two_id.json"}, 1},
      {"check", "rb", {"sl2.json", "--op", "B.json", "--lambda", "0"}, 0},
      {"check", "rb", {"sl2.json", "--op", "id.json", "--lambda", "-1"}, 0},
      {"check", "rb", {"sl2.json", "--op", "id.json"}, 1},
      {"check", "rb", {"sl2_qrb.json"}, 0},
      {"check", "quadratic-rb", {"sl2_qrb.json"}, 0},
      {"check", "quadratic-rb", {"qrb_weight_one.json"}, 0},
      {"check", "quadratic-rb", {"qrb_diag.json"}, 1},
      {"check", "reynolds-on-qrb", {"sl2_qrb.json"}, 0},
      {"check", "reynolds-on-qrb", {"qrb_weight_one.json"}, 0},
      {"check", "reynolds-on-qrb", {"sl2_qrb.json", "--op", "id.json"}, 1},
      {"check", "cybe", {"sl2.json", "--r", "r.json"}, 0},
      {"check", "cybe", {"sl2.json", "--r", "xy.json"}, 1},
      {"check", "reynolds-cybe", {"sl2_reynolds.json", "--r", "r.json"}, 0},
      {"check", "reynolds-cybe", {"sl2_reynolds.json", "--r", "xy.json"}, 1},
      {"check", "relative-rb", {"relrb.json"}, 0},
      {"check", "relative-rb", {"relrb_bad.json"}, 1},
      {"check", "prelie", {"prelie_ut.json"}, 0},
      {"check", "prelie", {"prelie_bad.json"}, 1},
      {"check", "reynolds-prelie", {"prelie_dual.json"}, 0},
      {"check", "reynolds-prelie", {"prelie_dual_2id.json"}, 1},
      {"check", "reynolds", {"@sl2", "--op", "@sl2.B"}, 0},
      // input and format errors
      {"check", "jacobi", {"missing.json"}, 2},
      {"check", "reynolds", {"sl2.json"}, 2},
      {"check", "reynolds", {"sl2.json", "--op", "wrong_shape.json"}, 2},
      {"check", "jacobi", {"B.json"}, 2},
      {"check", "no-such-kind", {"sl2.json"}, 2},
      {"check", "jacobi", {"@no.such.entry"}, 2},
      {"build", "no-such-kind", {"sl2.json"}, 2},
      // builds, each followed by a check on the output
      {"build", "induced", {"sl2_reynolds.json", "-o", "out_induced.json"}, 0},
      {"check", "reynolds", {"out_induced.json"}, 0},
      {"build", "descendent", {"sl2_qrb.json", "-o", "out_descendent.json"}, 0},
      {"check", "jacobi", {"out_descendent.json"}, 0},
      {"build", "ns-from-reynolds", {"sl2_reynolds.json", "-o", "out_ns.json"}, 0},
      {"check", "nslie", {"out_ns.json"}, 0},
      {"build", "semidirect", {"sl2_reynolds.json", "-o", "out_semi_ad.json"}, 0},
      {"check", "reynolds", {"out_semi_ad.json"}, 0},
      {"build", "semidirect", {"sl2_reynolds.json", "--rep-kind", "coadjoint", "-o", "out_semi_coad.json"}, 0},
      {"check", "reynolds", {"out_semi_coad.json"}, 0},
      {"build", "semidirect", {"sl2_reynolds.json", "--rep-kind", "zero:2", "-o", "out_semi_zero.json"}, 0},
      {"check", "reynolds", {"out_semi_zero.json"}, 0},
      {"build", "semidirect", {"sl2.json", "--rep", "adjoint_rep.json", "-o", "out_semi_plain.json"}, 0},
      {"check", "jacobi", {"out_semi_plain.json"}, 0},
      {"build", "double", {"mp_fl.json", "-o", "out_double.json"}, 0},
      {"check", "jacobi", {"out_double.json"}, 0},
      {"build", "reynolds-double", {"rmp_fl.json", "-o", "out_rdouble.json"}, 0},
      {"check", "reynolds", {"out_rdouble.json"}, 0},
      {"build", "induced-matched", {"rmp_fl.json", "-o", "out_imp.json"}, 0},
      {"check", "matched", {"out_imp.json"}, 0},
      {"build", "drinfeld-double", {"bialg_fl_R.json", "-o", "out_dd.json"}, 0},
      {"check", "reynolds", {"out_dd.json"}, 0},
      {"build", "quasitriangular-double", {"bialg_fl_R.json", "-o", "out_qd.json"}, 0},
      {"check", "reynolds-bialgebra", {"out_qd.json"}, 0},
      {"build", "cobracket", {"bialg_fl.json", "-o", "out_cob.json"}, 0},
      {"check", "coalgebra", {"out_cob.json"}, 0},
      {"build", "cobracket", {"sl2.json", "--r", "r.json", "-o", "out_cob_r.json"}, 0},
      {"check", "coalgebra", {"out_cob_r.json"}, 0},
      {"build", "r-from-qrb", {"sl2_qrb.json", "-o", "out_r.json"}, 0},
      {"check", "reynolds-cybe", {"sl2_reynolds.json", "--r", "out_r.json"}, 0},
      {"build", "thmfl", {"sl2_qrb.json", "--reynolds", "B.json", "-o", "out_bialg.json"}, 0},
      {"check", "reynolds-bialgebra", {"out_bialg.json"}, 0},
      {"check", "bialgebra", {"out_bialg.json"}, 0},
      {"build", "thmfl", {"qrb_weight_one.json", "-o", "out_bialg_w1.json"}, 0},
      {"check", "reynolds-bialgebra", {"out_bialg_w1.json"}, 0},
      {"build", "rk", {"relrb.json", "-o", "out_rk.json"}, 0},
      {"check", "reynolds-cybe", {"out_rk.json"}, 0},
      {"build", "canonical-r", {"prelie_dual.json", "-o", "out_canon.json"}, 0},
      {"check", "reynolds-cybe", {"out_canon.json"}, 0},
      {"build", "dual-from-r", {"sl2.json", "--r", "r.json", "-o", "out_dual.json"}, 0},
      {"check", "jacobi", {"out_dual.json"}, 0},
      // builds refused by a failing precondition
      {"build", "induced", {"sl2.json", "--op", "two_id.json", "-o", "out_never.json"}, 1},
      {"build", "double", {"mp_broken.json", "-o", "out_never.json"}, 1},
      {"build", "reynolds-double", {"rmp_remark.json", "-o", "out_never.json"}, 1},
      {"build", "thmfl", {"sl2_qrb.json", "--op", "id.json", "-o", "out_never.json"}, 1},
      {"build", "rk", {"relrb_bad.json", "-o", "out_never.json"}, 1},
      {"build", "canonical-r", {"prelie_dual_2id.json", "-o", "out_never.json"}, 1},
      {"build", "dual-from-r", {"sl2.json", "--r", "hh.json", "-o", "out_never.json"}, 1},
      {"build", "semidirect", {"sl2_reynolds.json", "--rep-kind", "bogus", "-o", "out_never.json"}, 2},
  };
}

inline bool is_file_arg(const std::string& a) { return a.size() > 5 && a.ends_with(".json"); }

// Same option handling as the command-line tools.
inline shell::Request to_request(const Case& c, const std::filesystem::path& dir, std::string* out = nullptr) {
  shell::Request q;
  q.kind = c.kind;
  auto path = [&](const std::string& a) { return is_file_arg(a) ? (dir / a).string() : a; };
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    const std::string& a = c.args[i];
    auto next = [&] { return path(c.args.at(++i)); };
    if (a == "--op" || a == "--reynolds") q.op = next();
    else if (a == "--r") q.r = next();
    else if (a == "--rep") q.rep = next();
    else if (a == "--lambda") q.lambda = next();
    else if (a == "--rep-kind") q.rep_kind = next();
    else if (a == "-o") {
      const std::string o = next();
      if (out) *out = o;
    } else q.files.push_back(path(a));
  }
  return q;
}

inline void write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, doc] : fixture_docs()) io::write_file((dir / name).string(), doc);
}

} // namespace sc

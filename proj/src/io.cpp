#include "reylie/io.hpp"

#include "reylie/error.hpp"

#include <fstream>
#include <sstream>

namespace reylie::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::size_t index_of(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) throw InputError(std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> basis_of(const json& j, std::size_t n) {
  if (!j.contains("basis")) return default_labels(n);
  auto b = j.at("basis").get<std::vector<std::string>>();
  if (b.size() != n) throw InputError("basis has " + std::to_string(b.size()) + " labels, dim is " + std::to_string(n));
  return b;
}

std::size_t dim_of(const json& j) {
  if (j.contains("dim")) return j.at("dim").get<std::size_t>();
  if (j.contains("basis")) return j.at("basis").size();
  throw InputError("document has neither dim nor basis");
}

// {"k": "c"} -> Vec
Vec out_from_json(const json& j, std::size_t n) {
  Vec v(n);
  if (j.is_array()) {
    if (j.size() != n) throw InputError("output vector has wrong length");
    return vec_from_json(j);
  }
  for (const auto& [k, c] : j.items()) {
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(k, &pos);
    } catch (const std::exception&) {
      throw InputError("output key '" + k + "' is not an index");
    }
    if (pos != k.size() || idx >= n) throw InputError("output key '" + k + "' out of range");
    v[idx] = rat_from_json(c);
  }
  return v;
}

json out_to_json(const Vec& v) {
  json o = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) o[std::to_string(k)] = to_json(v[k]);
  return o;
}

json header(const std::string& type, const std::vector<std::string>& labels) {
  json j;
  j["type"] = type;
  j["dim"] = labels.size();
  j["basis"] = labels;
  return j;
}

json table_to_json(const LieAlgebra::Table& t) {
  json arr = json::array();
  for (const auto& [key, v] : t) arr.push_back({{"i", key.first}, {"j", key.second}, {"out", out_to_json(v)}});
  return arr;
}

LieAlgebra::Table table_from_json(const json& arr, std::size_t n) {
  LieAlgebra::Table t;
  for (const json& e : arr) {
    const std::size_t i = index_of(e.at("i"), n, "bracket index i");
    const std::size_t jj = index_of(e.at("j"), n, "bracket index j");
    Vec v = out_from_json(e.at("out"), n);
    auto key = std::make_pair(i, jj);
    if (t.count(key)) throw InputError("duplicate bracket entry");
    t.emplace(key, std::move(v));
  }
  return t;
}

json product_to_json(const BilinearProduct& p) {
  json arr = json::array();
  for (const auto& [key, v] : p.table()) arr.push_back({{"i", key.first}, {"j", key.second}, {"out", out_to_json(v)}});
  return arr;
}

BilinearProduct product_from_json(const json& arr, std::size_t n) {
  BilinearProduct::Table t;
  for (const json& e : arr) {
    const std::size_t i = index_of(e.at("i"), n, "product index i");
    const std::size_t jj = index_of(e.at("j"), n, "product index j");
    auto key = std::make_pair(i, jj);
    if (t.count(key)) throw InputError("duplicate product entry");
    t.emplace(key, out_from_json(e.at("out"), n));
  }
  return BilinearProduct::from_table(n, t);
}

json mats_to_json(const std::vector<Mat>& ms) {
  json arr = json::array();
  for (const Mat& m : ms) arr.push_back(to_json(m));
  return arr;
}

std::vector<Mat> mats_from_json(const json& arr) {
  std::vector<Mat> out;
  for (const json& m : arr) out.push_back(mat_from_json(m));
  return out;
}

std::vector<std::size_t> indices_from_json(const json& arr, std::size_t bound) {
  std::vector<std::size_t> out;
  for (const json& e : arr) out.push_back(index_of(e, bound, "part index"));
  return out;
}

} // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  throw InputError("rational must be a string \"p/q\" or an integer");
}

json to_json(const Vec& v) {
  json arr = json::array();
  for (const Rat& c : v.coords()) arr.push_back(to_json(c));
  return arr;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vector must be a list");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from_json(j[i]);
  return v;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  return guarded("matrix", [&] {
    const json& rows = j.is_object() ? j.at("matrix") : j;
    if (!rows.is_array()) throw InputError("matrix must be a list of rows");
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (!rows[i].is_array() || rows[i].size() != c) throw InputError("matrix rows have unequal length");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = rat_from_json(rows[i][k]);
    }
    return m;
  });
}

json operator_doc(const Mat& m) {
  json j;
  j["type"] = "operator";
  j["matrix"] = to_json(m);
  return j;
}

json to_json(const LieAlgebra& L) {
  json j = header("lie-algebra", L.labels());
  j["brackets"] = table_to_json(L.upper());
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  return guarded("algebra", [&] {
    const std::size_t n = dim_of(j);
    auto labels = basis_of(j, n);
    const LieAlgebra::Table t = j.contains("brackets") ? table_from_json(j.at("brackets"), n) : LieAlgebra::Table{};
    return LieAlgebra::unchecked(std::move(labels), t);
  });
}

json to_json(const BilinForm& S) { return json{{"gram", to_json(S.gram())}}; }

BilinForm form_from_json(const json& j) {
  return guarded("form", [&] {
    const Mat g = mat_from_json(j.is_object() ? j.at("gram") : j);
    if (g.rows() != g.cols()) throw InputError("gram matrix must be square");
    return BilinForm(g);
  });
}

json to_json(const Tensor2& t) {
  json j;
  j["type"] = "tensor";
  j["dims"] = {t.dim_left(), t.dim_right()};
  json arr = json::array();
  for (const auto& [key, c] : t.entries()) arr.push_back({{"i", key.first}, {"j", key.second}, {"c", to_json(c)}});
  j["entries"] = std::move(arr);
  return j;
}

Tensor2 tensor_from_json(const json& j, std::size_t default_dim) {
  return guarded("tensor", [&] {
    std::size_t l = default_dim, r = default_dim;
    if (j.contains("dims")) {
      l = j.at("dims").at(0).get<std::size_t>();
      r = j.at("dims").at(1).get<std::size_t>();
    } else if (j.contains("dim")) {
      l = r = j.at("dim").get<std::size_t>();
    }
    if (l == 0 || r == 0) throw InputError("tensor dimensions unknown");
    Tensor2 t(l, r);
    for (const json& e : j.at("entries"))
      t.add(index_of(e.at("i"), l, "tensor index i"), index_of(e.at("j"), r, "tensor index j"), rat_from_json(e.at("c")));
    return t;
  });
}

json to_json(const Representation& rep) {
  json j;
  j["module_dim"] = rep.module_dim;
  j["rho"] = mats_to_json(rep.rho);
  return j;
}

Representation rep_from_json(const json& j) {
  return guarded("representation", [&] {
    Representation rep;
    rep.rho = mats_from_json(j.at("rho"));
    if (j.contains("module_dim")) rep.module_dim = j.at("module_dim").get<std::size_t>();
    else if (!rep.rho.empty()) rep.module_dim = rep.rho[0].rows();
    for (const Mat& m : rep.rho)
      if (m.rows() != rep.module_dim || m.cols() != rep.module_dim) throw InputError("representation matrix has wrong size");
    return rep;
  });
}

json to_json(const ReynoldsLieAlgebra& A) {
  json j = to_json(A.L);
  j["type"] = "reynolds-algebra";
  j["reynolds"] = json{{"matrix", to_json(A.R)}};
  return j;
}

std::optional<Mat> optional_operator(const json& j) {
  if (!j.is_object() || !j.contains("reynolds")) return std::nullopt;
  return mat_from_json(j.at("reynolds"));
}

ReynoldsLieAlgebra reynolds_from_json(const json& j) {
  LieAlgebra L = algebra_from_json(j);
  auto R = optional_operator(j);
  if (!R) throw InputError("document has no \"reynolds\" operator");
  require_square_op(*R, L.dim(), "Reynolds operator");
  return ReynoldsLieAlgebra{std::move(L), std::move(*R)};
}

json to_json(const ReynoldsRep& rr) {
  json j = to_json(rr.rep);
  j["T"] = to_json(rr.T);
  return j;
}

ReynoldsRep reynolds_rep_from_json(const json& j) {
  return guarded("reynolds representation", [&] {
    Representation rep = rep_from_json(j);
    Mat T = mat_from_json(j.at("T"));
    require_square_op(T, rep.module_dim, "module operator");
    return ReynoldsRep{std::move(rep), std::move(T)};
  });
}

json to_json(const NSLieAlgebra& A) {
  json j = header("ns-lie-algebra", A.labels);
  j["left"] = product_to_json(A.left);
  j["wedge"] = table_to_json(A.wedge.upper());
  return j;
}

NSLieAlgebra ns_from_json(const json& j) {
  return guarded("ns algebra", [&] {
    const std::size_t n = dim_of(j);
    auto labels = basis_of(j, n);
    BilinearProduct left = product_from_json(j.value("left", json::array()), n);
    const LieAlgebra::Table wedge = table_from_json(j.value("wedge", json::array()), n);
    return make_ns(std::move(labels), std::move(left), wedge);
  });
}

json to_json(const NSRep& rep) {
  json j;
  j["type"] = "ns-representation";
  j["module_dim"] = rep.module_dim;
  j["varrho"] = mats_to_json(rep.varrho);
  j["mu"] = mats_to_json(rep.mu);
  j["nu"] = mats_to_json(rep.nu);
  return j;
}

NSRep ns_rep_from_json(const json& j) {
  return guarded("ns representation", [&] {
    NSRep rep;
    rep.varrho = mats_from_json(j.at("varrho"));
    rep.mu = mats_from_json(j.at("mu"));
    rep.nu = mats_from_json(j.at("nu"));
    if (j.contains("module_dim")) rep.module_dim = j.at("module_dim").get<std::size_t>();
    else if (!rep.varrho.empty()) rep.module_dim = rep.varrho[0].rows();
    for (const auto* ms : {&rep.varrho, &rep.mu, &rep.nu})
      for (const Mat& m : *ms)
        if (m.rows() != rep.module_dim || m.cols() != rep.module_dim) throw InputError("ns representation matrix has wrong size");
    return rep;
  });
}

json to_json(const MatchedPair& mp) {
  json j;
  j["type"] = "matched-pair";
  j["g"] = to_json(mp.g);
  j["h"] = to_json(mp.h);
  j["rho"] = mats_to_json(mp.rho.rho);
  j["mu"] = mats_to_json(mp.mu.rho);
  return j;
}

json to_json(const ReynoldsMatchedPair& rmp) {
  json j = to_json(rmp.pair);
  j["type"] = "reynolds-matched-pair";
  j["Rg"] = to_json(rmp.Rg);
  j["Rh"] = to_json(rmp.Rh);
  return j;
}

MatchedPair matched_from_json(const json& j) {
  return guarded("matched pair", [&] {
    MatchedPair mp;
    mp.g = algebra_from_json(j.at("g"));
    mp.h = algebra_from_json(j.at("h"));
    mp.rho = Representation{mp.h.dim(), mats_from_json(j.at("rho"))};
    mp.mu = Representation{mp.g.dim(), mats_from_json(j.at("mu"))};
    require_rep_shape(mp.g, mp.rho);
    require_rep_shape(mp.h, mp.mu);
    return mp;
  });
}

ReynoldsMatchedPair reynolds_matched_from_json(const json& j) {
  return guarded("reynolds matched pair", [&] {
    MatchedPair mp = matched_from_json(j);
    if (!j.contains("Rg") || !j.contains("Rh")) throw InputError("matched pair has no operators Rg, Rh");
    Mat Rg = mat_from_json(j.at("Rg")), Rh = mat_from_json(j.at("Rh"));
    require_square_op(Rg, mp.g.dim(), "operator Rg");
    require_square_op(Rh, mp.h.dim(), "operator Rh");
    return ReynoldsMatchedPair{std::move(mp), std::move(Rg), std::move(Rh)};
  });
}

json to_json(const ManinTripleReynolds& mt) {
  json j;
  j["type"] = "manin-triple";
  j["G"] = to_json(mt.G);
  j["gram"] = to_json(mt.S.gram());
  j["part_g"] = mt.part_g;
  j["part_h"] = mt.part_h;
  return j;
}

ManinTripleReynolds manin_from_json(const json& j) {
  return guarded("manin triple", [&] {
    ReynoldsLieAlgebra G = reynolds_from_json(j.at("G"));
    const std::size_t n = G.L.dim();
    BilinForm S = form_from_json(j.at("gram"));
    if (S.dim() != n) throw InputError("gram matrix has wrong size");
    auto pg = indices_from_json(j.at("part_g"), n);
    auto ph = indices_from_json(j.at("part_h"), n);
    return ManinTripleReynolds{std::move(G), std::move(S), std::move(pg), std::move(ph)};
  });
}

json to_json(const LieBialgebra& b) {
  json j;
  j["type"] = "bialgebra";
  j["g"] = to_json(b.g);
  j["dual"] = to_json(b.dual);
  return j;
}

json to_json(const ReynoldsLieBialgebra& rb) {
  json j = to_json(rb.bialg);
  j["type"] = "reynolds-bialgebra";
  j["reynolds"] = json{{"matrix", to_json(rb.R)}};
  return j;
}

LieBialgebra bialgebra_from_json(const json& j) {
  return guarded("bialgebra", [&] {
    LieBialgebra b{algebra_from_json(j.at("g")), algebra_from_json(j.at("dual"))};
    if (b.g.dim() != b.dual.dim()) throw InputError("dual has wrong dimension");
    return b;
  });
}

json cobracket_to_json(const std::vector<Tensor2>& deltas, const std::vector<std::string>& basis) {
  json j = header("cobracket", basis);
  json arr = json::array();
  for (const Tensor2& d : deltas) arr.push_back(to_json(d));
  j["delta"] = std::move(arr);
  return j;
}

std::vector<Tensor2> cobracket_from_json(const json& j) {
  return guarded("cobracket", [&] {
    const json& arr = j.at("delta");
    const std::size_t n = j.contains("dim") || j.contains("basis") ? dim_of(j) : arr.size();
    if (arr.size() != n) throw InputError("cobracket needs one tensor per basis vector");
    std::vector<Tensor2> out;
    for (const json& t : arr) out.push_back(tensor_from_json(t, n));
    return out;
  });
}

json to_json(const RotaBaxterAlg& rb) {
  json j = to_json(rb.L);
  j["type"] = "rota-baxter";
  j["rb"] = json{{"matrix", to_json(rb.B)}, {"lambda", to_json(rb.lambda)}};
  return j;
}

RotaBaxterAlg rota_baxter_from_json(const json& j) {
  return guarded("rota-baxter", [&] {
    LieAlgebra L = algebra_from_json(j);
    const json& rb = j.at("rb");
    Mat B = mat_from_json(rb.at("matrix"));
    require_square_op(B, L.dim(), "Rota-Baxter operator");
    Rat lambda = rb.contains("lambda") ? rat_from_json(rb.at("lambda")) : Rat(0);
    return RotaBaxterAlg{std::move(L), std::move(B), std::move(lambda)};
  });
}

json to_json(const QuadraticRB& q) {
  json j = to_json(q.rb);
  j["type"] = "quadratic-rota-baxter";
  j["gram"] = to_json(q.S.gram());
  return j;
}

QuadraticRB qrb_from_json(const json& j) {
  return guarded("quadratic rota-baxter", [&] {
    RotaBaxterAlg rb = rota_baxter_from_json(j);
    BilinForm S = form_from_json(j.at("gram"));
    if (S.dim() != rb.L.dim()) throw InputError("gram matrix has wrong size");
    return QuadraticRB{std::move(rb), std::move(S)};
  });
}

json to_json(const RelativeRB& rel) {
  json j;
  j["type"] = "relative-rota-baxter";
  j["g"] = to_json(rel.A);
  j["rep"] = to_json(rel.rr);
  j["K"] = to_json(rel.K);
  return j;
}

RelativeRB relative_rb_from_json(const json& j) {
  return guarded("relative rota-baxter", [&] {
    ReynoldsLieAlgebra A = reynolds_from_json(j.at("g"));
    ReynoldsRep rr = reynolds_rep_from_json(j.at("rep"));
    require_rep_shape(A.L, rr.rep);
    Mat K = mat_from_json(j.at("K"));
    if (K.rows() != A.L.dim() || K.cols() != rr.rep.module_dim) throw InputError("K must be dim_g x module_dim");
    return RelativeRB{std::move(A), std::move(rr), std::move(K)};
  });
}

json to_json(const PreLieAlgebra& A) {
  json j = header("pre-lie-algebra", A.labels);
  j["prod"] = product_to_json(A.prod);
  return j;
}

json to_json(const ReynoldsPreLie& rp) {
  json j = to_json(rp.A);
  j["type"] = "reynolds-pre-lie-algebra";
  j["reynolds"] = json{{"matrix", to_json(rp.R)}};
  return j;
}

PreLieAlgebra prelie_from_json(const json& j) {
  return guarded("pre-Lie algebra", [&] {
    const std::size_t n = dim_of(j);
    auto labels = basis_of(j, n);
    BilinearProduct p = product_from_json(j.value("prod", json::array()), n);
    return PreLieAlgebra{std::move(labels), std::move(p)};
  });
}

json to_json(const CybeSolution& s) {
  json j;
  j["type"] = "cybe-solution";
  j["algebra"] = to_json(s.A);
  j["r"] = to_json(s.r);
  return j;
}

CybeSolution solution_from_json(const json& j) {
  return guarded("cybe solution", [&] {
    ReynoldsLieAlgebra A = reynolds_from_json(j.at("algebra"));
    Tensor2 r = tensor_from_json(j.at("r"), A.L.dim());
    return CybeSolution{std::move(A), std::move(r)};
  });
}

json to_json(const Certificate& c) {
  json j;
  j["check"] = c.check;
  j["pass"] = c.pass;
  j["condition"] = c.condition;
  j["indices"] = c.indices;
  json res = json::array();
  for (const Rat& r : c.residual) res.push_back(to_json(r));
  j["residual"] = std::move(res);
  j["violations"] = c.violations;
  j["skipped"] = c.skipped;
  j["note"] = c.note;
  return j;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump(doc);
  if (!out) throw InputError("write failed for " + path);
}

} // namespace reylie::io

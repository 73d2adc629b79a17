#include "reylie/shell.hpp"

#include "reylie/error.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace reylie::shell {

namespace {

// ---- sl2 data, basis (H, X, Y) ----

LieAlgebra sl2() {
  return LieAlgebra::make({"H", "X", "Y"}, {{{0, 1}, Vec{0, 2, 0}}, {{0, 2}, Vec{0, 0, -2}}, {{1, 2}, Vec{1, 0, 0}}});
}
Mat sl2_B() { return Mat{{0, 0, -1}, {2, 0, 0}, {0, 0, 0}}; }
BilinForm sl2_S() { return BilinForm(Mat{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }
Tensor2 sl2_r() {
  Tensor2 t(3, 3);
  t.set(0, 1, 1);
  t.set(1, 0, -1);
  return t;
}
LieAlgebra sl2_km_dual() {
  return LieAlgebra::unchecked({"H*", "X*", "Y*"}, {{{0, 1}, Vec{0, Rat(1, 4), 0}}, {{0, 2}, Vec{0, 0, Rat(1, 4)}}});
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// "f(a,b(c,d))" -> {"f", {"a", "b(c,d)"}}; no parentheses -> {name, {}}
std::pair<std::string, std::vector<std::string>> split_call(const std::string& name) {
  const auto open = name.find('(');
  if (open == std::string::npos) return {trim(name), {}};
  if (name.back() != ')') throw InputError("malformed catalog name: " + name);
  std::vector<std::string> args;
  std::string cur;
  int depth = 0;
  for (std::size_t i = open + 1; i + 1 < name.size(); ++i) {
    const char c = name[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw InputError("malformed catalog name: " + name);
    if (c == ',' && depth == 0) {
      args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw InputError("malformed catalog name: " + name);
  args.push_back(trim(cur));
  return {trim(name.substr(0, open)), args};
}

std::int64_t parse_int(const std::string& s) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("not an integer: " + s);
  }
  if (pos != s.size()) throw InputError("not an integer: " + s);
  return v;
}

LieAlgebra catalog_algebra(const std::string& name) {
  CatalogEntry e = catalog(name);
  if (e.kind != "lie-algebra" && e.kind != "reynolds-algebra")
    throw InputError("catalog entry " + name + " is not a Lie algebra");
  return io::algebra_from_json(e.document);
}

// ---- request helpers ----

const json& file_at(const std::vector<json>& docs, std::size_t i, const char* what) {
  if (i >= docs.size()) throw InputError(std::string("missing input: ") + what);
  return docs[i];
}

Mat operator_from_doc(const json& d) {
  if (d.is_object() && d.contains("reynolds") && !d.contains("matrix")) return io::mat_from_json(d.at("reynolds"));
  return io::mat_from_json(d);
}

Mat get_operator(const Request& req, const json& doc, std::size_t n) {
  Mat R;
  if (req.op) R = operator_from_doc(load(*req.op));
  else if (auto m = io::optional_operator(doc)) R = *m;
  else throw InputError("no operator: pass --op or embed \"reynolds\"");
  require_square_op(R, n, "operator");
  return R;
}

std::optional<Mat> maybe_operator(const Request& req, const json& doc) {
  if (req.op) return operator_from_doc(load(*req.op));
  return io::optional_operator(doc);
}

Tensor2 get_r(const Request& req, const std::vector<json>& docs, std::size_t n) {
  if (req.r) return io::tensor_from_json(load(*req.r), n);
  if (docs.size() > 1) return io::tensor_from_json(docs[1], n);
  throw InputError("no tensor: pass --r");
}

json get_rep_doc(const Request& req, const std::vector<json>& docs) {
  if (req.rep) return load(*req.rep);
  if (docs.size() > 1) return docs[1];
  throw InputError("no representation: pass --rep");
}

bool is_solution_doc(const json& d) { return d.is_object() && d.contains("algebra") && d.contains("r"); }

CheckOptions opts_of(const Request& req) { return CheckOptions{.first_only = req.first_only}; }

using Certs = std::vector<Certificate>;

// ---- checks ----

using CheckFn = std::function<Certs(const Request&, const std::vector<json>&)>;

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table = {
      {"jacobi",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{jacobi_check(io::algebra_from_json(file_at(d, 0, "algebra")), opts_of(q))};
       }},
      {"reynolds",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         LieAlgebra L = io::algebra_from_json(doc);
         return Certs{is_reynolds(L, get_operator(q, doc, L.dim()), opts_of(q))};
       }},
      {"reynolds-rep",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         LieAlgebra L = io::algebra_from_json(doc);
         ReynoldsLieAlgebra A{L, get_operator(q, doc, L.dim())};
         ReynoldsRep rr = io::reynolds_rep_from_json(get_rep_doc(q, d));
         require_rep_shape(A.L, rr.rep);
         return Certs{is_reynolds_rep(A, rr, opts_of(q))};
       }},
      {"nslie",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_nslie(io::ns_from_json(file_at(d, 0, "NS algebra")), opts_of(q))};
       }},
      {"ns-rep",
       [](const Request& q, const std::vector<json>& d) {
         NSLieAlgebra A = io::ns_from_json(file_at(d, 0, "NS algebra"));
         NSRep rep = io::ns_rep_from_json(get_rep_doc(q, d));
         return Certs{is_ns_rep(A, rep, opts_of(q))};
       }},
      {"matched",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_matched_pair(io::matched_from_json(file_at(d, 0, "matched pair")), opts_of(q))};
       }},
      {"reynolds-matched",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{
             is_reynolds_matched_pair(io::reynolds_matched_from_json(file_at(d, 0, "matched pair")), opts_of(q))};
       }},
      {"manin",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_manin_triple(io::manin_from_json(file_at(d, 0, "Manin triple")), opts_of(q))};
       }},
      {"coalgebra",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "cobracket");
         auto deltas = io::cobracket_from_json(doc);
         Certs out{is_lie_coalgebra(deltas, opts_of(q))};
         if (auto P = maybe_operator(q, doc)) out.push_back(is_reynolds_coalgebra(deltas, *P, opts_of(q)));
         return out;
       }},
      {"bialgebra",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_lie_bialgebra(io::bialgebra_from_json(file_at(d, 0, "bialgebra")), opts_of(q))};
       }},
      {"reynolds-bialgebra",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "bialgebra");
         LieBialgebra b = io::bialgebra_from_json(doc);
         return Certs{is_reynolds_bialgebra(b, get_operator(q, doc, b.g.dim()), opts_of(q))};
       }},
      {"rb",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         if (doc.contains("rb") && !q.op) return Certs{is_rota_baxter(io::rota_baxter_from_json(doc), opts_of(q))};
         LieAlgebra L = io::algebra_from_json(doc);
         if (!q.op) throw InputError("no Rota-Baxter operator: pass --op or embed \"rb\"");
         Mat B = operator_from_doc(load(*q.op));
         require_square_op(B, L.dim(), "Rota-Baxter operator");
         const Rat lambda = q.lambda ? Rat::parse(*q.lambda) : Rat(0);
         return Certs{is_rota_baxter(L, B, lambda, opts_of(q))};
       }},
      {"quadratic-rb",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_quadratic_rb(io::qrb_from_json(file_at(d, 0, "quadratic Rota-Baxter algebra")), opts_of(q))};
       }},
      {"reynolds-on-qrb",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "quadratic Rota-Baxter algebra");
         QuadraticRB qrb = io::qrb_from_json(doc);
         const Mat R = get_operator(q, doc, qrb.rb.L.dim());
         return Certs{is_reynolds_on_qrb(qrb, R, opts_of(q)), minus_rstar_on_descendent(qrb, R, opts_of(q))};
       }},
      {"cybe",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         if (is_solution_doc(doc)) {
           CybeSolution s = io::solution_from_json(doc);
           return Certs{is_cybe_solution(s.A.L, s.r, opts_of(q))};
         }
         LieAlgebra L = io::algebra_from_json(doc);
         return Certs{is_cybe_solution(L, get_r(q, d, L.dim()), opts_of(q))};
       }},
      {"reynolds-cybe",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         if (is_solution_doc(doc)) {
           CybeSolution s = io::solution_from_json(doc);
           return Certs{is_cybe_solution_reynolds(s.A, s.r, opts_of(q))};
         }
         LieAlgebra L = io::algebra_from_json(doc);
         ReynoldsLieAlgebra A{L, get_operator(q, doc, L.dim())};
         return Certs{is_cybe_solution_reynolds(A, get_r(q, d, L.dim()), opts_of(q))};
       }},
      {"relative-rb",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_relative_rb(io::relative_rb_from_json(file_at(d, 0, "relative Rota-Baxter operator")), opts_of(q))};
       }},
      {"prelie",
       [](const Request& q, const std::vector<json>& d) {
         return Certs{is_prelie(io::prelie_from_json(file_at(d, 0, "pre-Lie algebra")), opts_of(q))};
       }},
      {"reynolds-prelie",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "pre-Lie algebra");
         PreLieAlgebra A = io::prelie_from_json(doc);
         return Certs{is_reynolds_prelie(A, get_operator(q, doc, A.dim()), opts_of(q))};
       }},
  };
  return table;
}

// ---- builds ----

struct Built {
  Certs pre;  // a failing precondition stops the build
  std::function<json()> make;
  std::function<Certs(const json&)> verify;
};

Certs verify_algebra(const json& out) { return {jacobi_check(io::algebra_from_json(out))}; }

Certs verify_reynolds(const json& out) {
  ReynoldsLieAlgebra A = io::reynolds_from_json(out);
  return {jacobi_check(A.L), is_reynolds(A.L, A.R)};
}

Certs verify_solution(const json& out) {
  CybeSolution s = io::solution_from_json(out);
  return {jacobi_check(s.A.L), is_reynolds(s.A.L, s.A.R), is_cybe_solution_reynolds(s.A, s.r)};
}

Certs verify_reynolds_bialgebra(const json& out) {
  LieBialgebra b = io::bialgebra_from_json(out);
  return {is_reynolds_bialgebra(b, *io::optional_operator(out))};
}

ReynoldsRep standard_rep(const ReynoldsLieAlgebra& A, const std::string& kind) {
  if (kind == "adjoint") return adjoint_reynolds_rep(A);
  if (kind == "coadjoint") return dual_reynolds_rep(adjoint_reynolds_rep(A));
  if (kind.rfind("zero", 0) == 0) {
    const auto colon = kind.find(':');
    const std::size_t m = colon == std::string::npos ? A.L.dim() : static_cast<std::size_t>(parse_int(kind.substr(colon + 1)));
    return ReynoldsRep{zero_rep(A.L, m), Mat::zero(m, m)};
  }
  throw InputError("unknown representation kind: " + kind + " (adjoint, coadjoint, zero[:m])");
}

using BuildFn = std::function<Built(const Request&, const std::vector<json>&)>;

const std::map<std::string, BuildFn>& build_table() {
  static const std::map<std::string, BuildFn> table = {
      {"induced",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "Reynolds algebra");
         LieAlgebra L = io::algebra_from_json(doc);
         ReynoldsLieAlgebra A{L, get_operator(q, doc, L.dim())};
         return Built{{jacobi_check(A.L), is_reynolds(A.L, A.R)},
                      [A] { return io::to_json(induced_algebra(A)); },
                      verify_reynolds};
       }},
      {"descendent",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "Rota-Baxter algebra");
         RotaBaxterAlg rb = io::rota_baxter_from_json(doc);
         if (q.lambda) rb.lambda = Rat::parse(*q.lambda);
         return Built{{jacobi_check(rb.L), is_rota_baxter(rb)}, [rb] { return io::to_json(descendent(rb)); },
                      verify_algebra};
       }},
      {"ns-from-reynolds",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "Reynolds algebra");
         LieAlgebra L = io::algebra_from_json(doc);
         ReynoldsLieAlgebra A{L, get_operator(q, doc, L.dim())};
         return Built{{jacobi_check(A.L), is_reynolds(A.L, A.R)}, [A] { return io::to_json(ns_from_reynolds(A)); },
                      [](const json& out) { return Certs{is_nslie(io::ns_from_json(out))}; }};
       }},
      {"semidirect",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         LieAlgebra L = io::algebra_from_json(doc);
         auto R = maybe_operator(q, doc);
         if (!R) {
           if (!q.rep && d.size() < 2 && q.rep_kind != "adjoint" && q.rep_kind != "coadjoint" &&
               q.rep_kind.rfind("zero", 0) != 0)
             throw InputError("unknown representation kind: " + q.rep_kind);
           Representation rep;
           if (q.rep || d.size() > 1) rep = io::rep_from_json(get_rep_doc(q, d));
           else rep = standard_rep({L, Mat::zero(L.dim(), L.dim())}, q.rep_kind).rep;
           require_rep_shape(L, rep);
           return Built{{jacobi_check(L), is_representation(L, rep)}, [L, rep] { return io::to_json(semidirect(L, rep)); },
                        verify_algebra};
         }
         require_square_op(*R, L.dim(), "Reynolds operator");
         ReynoldsLieAlgebra A{L, *R};
         ReynoldsRep rr = (q.rep || d.size() > 1) ? io::reynolds_rep_from_json(get_rep_doc(q, d)) : standard_rep(A, q.rep_kind);
         require_rep_shape(L, rr.rep);
         return Built{{jacobi_check(L), is_reynolds(L, A.R), is_reynolds_rep(A, rr)},
                      [A, rr] { return io::to_json(semidirect_reynolds(A, rr)); }, verify_reynolds};
       }},
      {"double",
       [](const Request&, const std::vector<json>& d) {
         MatchedPair mp = io::matched_from_json(file_at(d, 0, "matched pair"));
         return Built{{is_matched_pair(mp)}, [mp] { return io::to_json(matched_double(mp)); }, verify_algebra};
       }},
      {"reynolds-double",
       [](const Request&, const std::vector<json>& d) {
         ReynoldsMatchedPair rmp = io::reynolds_matched_from_json(file_at(d, 0, "matched pair"));
         return Built{{is_reynolds_matched_pair(rmp)}, [rmp] { return io::to_json(reynolds_double(rmp)); },
                      verify_reynolds};
       }},
      {"induced-matched",
       [](const Request&, const std::vector<json>& d) {
         ReynoldsMatchedPair rmp = io::reynolds_matched_from_json(file_at(d, 0, "matched pair"));
         return Built{{is_reynolds_matched_pair(rmp)}, [rmp] { return io::to_json(induced_matched_pair(rmp)); },
                      [](const json& out) { return Certs{is_matched_pair(io::matched_from_json(out))}; }};
       }},
      {"drinfeld-double",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "bialgebra");
         LieBialgebra b = io::bialgebra_from_json(doc);
         ReynoldsLieBialgebra rb{b, get_operator(q, doc, b.g.dim())};
         return Built{{is_reynolds_bialgebra(rb)}, [rb] { return io::to_json(drinfeld_double(rb)); }, verify_reynolds};
       }},
      {"quasitriangular-double",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "bialgebra");
         LieBialgebra b = io::bialgebra_from_json(doc);
         ReynoldsLieBialgebra rb{b, get_operator(q, doc, b.g.dim())};
         return Built{{is_reynolds_bialgebra(rb)}, [rb] { return io::to_json(double_quasitriangular(rb)); },
                      verify_reynolds_bialgebra};
       }},
      {"cobracket",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra or bialgebra");
         auto verify = [](const json& out) { return Certs{is_lie_coalgebra(io::cobracket_from_json(out))}; };
         if (doc.contains("dual")) {
           LieBialgebra b = io::bialgebra_from_json(doc);
           return Built{{jacobi_check(b.dual)},
                        [b] { return io::cobracket_to_json(cobracket_from_dual(b.dual), b.g.labels()); }, verify};
         }
         LieAlgebra L = io::algebra_from_json(doc);
         Tensor2 r = get_r(q, d, L.dim());
         return Built{{jacobi_check(L)}, [L, r] { return io::cobracket_to_json(coboundary_cobracket(L, r), L.labels()); },
                      verify};
       }},
      {"r-from-qrb",
       [](const Request&, const std::vector<json>& d) {
         QuadraticRB qrb = io::qrb_from_json(file_at(d, 0, "quadratic Rota-Baxter algebra"));
         return Built{{jacobi_check(qrb.rb.L), is_quadratic_rb(qrb)}, [qrb] { return io::to_json(r_from_qrb(qrb)); },
                      [qrb](const json&) { return Certs{r_from_qrb_certificate(qrb)}; }};
       }},
      {"thmfl",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "quadratic Rota-Baxter algebra");
         QuadraticRB qrb = io::qrb_from_json(doc);
         const Mat R = get_operator(q, doc, qrb.rb.L.dim());
         return Built{{jacobi_check(qrb.rb.L), is_quadratic_rb(qrb), is_reynolds_on_qrb(qrb, R)},
                      [qrb, R] { return io::to_json(thmFL_bialgebra(qrb, R)); }, verify_reynolds_bialgebra};
       }},
      {"rk",
       [](const Request&, const std::vector<json>& d) {
         RelativeRB rel = io::relative_rb_from_json(file_at(d, 0, "relative Rota-Baxter operator"));
         return Built{{jacobi_check(rel.A.L), is_relative_rb(rel)}, [rel] { return io::to_json(rk_solution(rel)); },
                      verify_solution};
       }},
      {"canonical-r",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "pre-Lie algebra");
         PreLieAlgebra A = io::prelie_from_json(doc);
         ReynoldsPreLie rp{A, get_operator(q, doc, A.dim())};
         return Built{{is_reynolds_prelie(rp)}, [rp] { return io::to_json(canonical_r(rp)); }, verify_solution};
       }},
      {"dual-from-r",
       [](const Request& q, const std::vector<json>& d) {
         const json& doc = file_at(d, 0, "algebra");
         LieAlgebra L = io::algebra_from_json(doc);
         Tensor2 r = get_r(q, d, L.dim());
         return Built{{jacobi_check(L), r_invariance(L, r)}, [L, r] { return io::to_json(dual_bracket_from_r(L, r)); },
                      verify_algebra};
       }},
  };
  return table;
}

std::vector<std::string> keys_of(const auto& table) {
  std::vector<std::string> out;
  for (const auto& [k, v] : table) out.push_back(k);
  return out;
}

std::vector<std::string> echo(const std::string& tool, const Request& req) {
  std::vector<std::string> c{tool, req.kind};
  for (const auto& f : req.files) c.push_back(f);
  if (req.op) c.insert(c.end(), {"--op", *req.op});
  if (req.r) c.insert(c.end(), {"--r", *req.r});
  if (req.rep) c.insert(c.end(), {"--rep", *req.rep});
  if (req.lambda) c.insert(c.end(), {"--lambda", *req.lambda});
  if (req.rep_kind != "adjoint") c.insert(c.end(), {"--rep-kind", req.rep_kind});
  if (req.first_only) c.push_back("--first-only");
  return c;
}

template <class F>
Report timed(std::vector<std::string> command, F&& body) {
  Report rep;
  rep.command = std::move(command);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const InputError& e) {
    rep.error = e.what();
  } catch (const json::exception& e) {
    rep.error = e.what();
  } catch (const std::invalid_argument& e) {
    rep.error = e.what();
  } catch (const std::out_of_range& e) {
    rep.error = e.what();
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<json> load_all(const std::vector<std::string>& files) {
  std::vector<json> docs;
  for (const auto& f : files) docs.push_back(load(f));
  return docs;
}

} // namespace

bool CatalogEntry::ok() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const Certificate& c) { return c.pass; });
}

CatalogEntry catalog(const std::string& raw) {
  const auto [name, args] = split_call(raw);
  CatalogEntry e;
  e.name = trim(raw);
  auto need_args = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) throw InputError("wrong number of arguments for catalog entry " + name);
  };
  if (name == "sl2" && args.empty()) {
    const LieAlgebra g = sl2();
    e.kind = "lie-algebra";
    e.document = io::to_json(g);
    e.origin = Origin::Published;
    e.source = "sl(2) in the basis H, X, Y";
    e.invariants = {jacobi_check(g)};
  } else if (name == "sl2.B" && args.empty()) {
    e.kind = "operator";
    e.document = io::operator_doc(sl2_B());
    e.origin = Origin::Published;
    e.source = "B(H)=2X, B(X)=0, B(Y)=-H on sl(2)";
    e.invariants = {is_rota_baxter(sl2(), sl2_B(), Rat(0)), is_reynolds(sl2(), sl2_B())};
  } else if (name == "sl2.S" && args.empty()) {
    e.kind = "form";
    e.document = io::to_json(sl2_S());
    e.document["type"] = "form";
    e.origin = Origin::Published;
    e.source = "trace form S(x,y)=tr(xy) on sl(2)";
    e.invariants = {is_quadratic(sl2(), sl2_S())};
  } else if (name == "sl2.r" && args.empty()) {
    e.kind = "tensor";
    e.document = io::to_json(sl2_r());
    e.origin = Origin::Published;
    e.source = "r = H⊗X - X⊗H";
    e.invariants = {is_cybe_solution_reynolds({sl2(), sl2_B()}, sl2_r())};
  } else if (name == "sl2.km_dual" && args.empty()) {
    const LieBialgebra b{sl2(), sl2_km_dual()};
    e.kind = "bialgebra";
    e.document = io::to_json(b);
    e.origin = Origin::Published;
    e.source = "[H*,X*]=X*/4, [H*,Y*]=Y*/4, [X*,Y*]=0 on sl(2)*; verdict reported, not assumed";
    e.invariants = {is_lie_bialgebra(b)};
  } else if (name == "sl2.reynolds" && args.empty()) {
    const ReynoldsLieAlgebra A{sl2(), sl2_B()};
    e.kind = "reynolds-algebra";
    e.document = io::to_json(A);
    e.source = "sl2 with sl2.B";
    e.invariants = {jacobi_check(A.L), is_reynolds(A.L, A.R)};
  } else if (name == "sl2.qrb" && args.empty()) {
    const QuadraticRB q{{sl2(), sl2_B(), Rat(0)}, sl2_S()};
    e.kind = "quadratic-rota-baxter";
    e.document = io::to_json(q);
    e.document["reynolds"] = json{{"matrix", io::to_json(sl2_B())}};
    e.source = "sl2 with sl2.B as weight-0 Rota-Baxter and Reynolds operator, form sl2.S";
    e.invariants = {is_quadratic_rb(q), is_reynolds_on_qrb(q, sl2_B())};
  } else if (name == "abelian") {
    need_args(1, 1);
    const std::int64_t n = parse_int(args[0]);
    if (n < 1) throw InputError("abelian(n) needs n >= 1");
    const LieAlgebra g = LieAlgebra::abelian(static_cast<std::size_t>(n));
    e.kind = "lie-algebra";
    e.document = io::to_json(g);
    e.source = "abelian Lie algebra of dimension " + args[0];
    e.invariants = {jacobi_check(g)};
  } else if (name == "block") {
    need_args(3, 4);
    const Rat q = Rat::parse(args[0]);
    const std::int64_t lo = parse_int(args[1]), hi = parse_int(args[2]);
    const bool drop = args.size() == 4 && (args[3] == "drop" || args[3] == "true" || args[3] == "1");
    if (args.size() == 4 && !drop && args[3] != "false" && args[3] != "0")
      throw InputError("block(q,lo,hi,drop): last argument must be drop or false");
    const BlockWindowResult res = block_window_check(q, lo, hi, {.drop_singular = drop});
    e.kind = "block-window";
    e.document = json{{"type", "block-window"}, {"q", q.str()}, {"lo", lo}, {"hi", hi}, {"drop_singular", drop},
                      {"checked", res.checked}, {"target_skipped", res.target_skipped}, {"singular", res.singular}};
    e.origin = Origin::Published;
    e.source = "Block algebra B(q) with R(L_{m,i}) = L_{m,i}/(m+i+1) on a finite window";
    e.invariants = {res.reynolds, res.closed_form};
  } else if (name == "trivial_matched") {
    need_args(2, 2);
    const MatchedPair mp = trivial_matched(catalog_algebra(args[0]), catalog_algebra(args[1]));
    e.kind = "matched-pair";
    e.document = io::to_json(mp);
    e.origin = Origin::Published;
    e.source = "rho = 0, mu = 0";
    e.invariants = {is_matched_pair(mp)};
  } else {
    throw InputError("unknown catalog entry: " + raw);
  }
  return e;
}

std::vector<std::string> catalog_names() {
  return {"sl2", "sl2.B", "sl2.S", "sl2.r", "sl2.km_dual", "sl2.reynolds", "sl2.qrb", "abelian(n)", "block(q,lo,hi[,drop])",
          "trivial_matched(g,h)"};
}

json load(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return catalog(arg.substr(1)).document;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("inline document: ") + e.what());
    }
  }
  return io::read_file(arg);
}

bool Report::pass() const {
  return error.empty() && std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.pass; });
}

int Report::exit_code() const {
  if (!error.empty()) return 2;
  return pass() ? 0 : 1;
}

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = keys_of(check_table());
  return kinds;
}

const std::vector<std::string>& build_kinds() {
  static const std::vector<std::string> kinds = keys_of(build_table());
  return kinds;
}

Report run_check(const Request& req) {
  return timed(echo("algcheck", req), [&](Report& rep) {
    const auto it = check_table().find(req.kind);
    if (it == check_table().end()) throw InputError("unknown check kind: " + req.kind);
    rep.certificates = it->second(req, load_all(req.files));
  });
}

Report run_build(const Request& req) {
  return timed(echo("algbuild", req), [&](Report& rep) {
    const auto it = build_table().find(req.kind);
    if (it == build_table().end()) throw InputError("unknown build kind: " + req.kind);
    Built b = it->second(req, load_all(req.files));
    rep.certificates = b.pre;
    if (!rep.pass()) return;
    const json doc = b.make();
    json out;
    json prov;
    prov["tool"] = "algbuild";
    prov["construction"] = req.kind;
    prov["sources"] = req.files;
    json options = json::object();
    if (req.op) options["op"] = *req.op;
    if (req.r) options["r"] = *req.r;
    if (req.rep) options["rep"] = *req.rep;
    if (req.lambda) options["lambda"] = *req.lambda;
    if (req.kind == "semidirect" && !req.rep && req.files.size() < 2) options["rep_kind"] = req.rep_kind;
    prov["options"] = std::move(options);
    out["provenance"] = std::move(prov);
    for (const auto& [k, v] : doc.items()) out[k] = v;
    for (Certificate& c : b.verify(out)) rep.certificates.push_back(std::move(c));
    rep.built = std::move(out);
  });
}

Report run_catalog(const std::string& name) {
  return timed({"algcat", name}, [&](Report& rep) {
    CatalogEntry e = catalog(name);
    rep.certificates = e.invariants;
    json doc;
    doc["catalog"] = json{{"name", e.name},
                          {"origin", e.origin == Origin::Published ? "published example" : "derived"},
                          {"source", e.source}};
    for (const auto& [k, v] : e.document.items()) doc[k] = v;
    rep.built = std::move(doc);
  });
}

Report run_block(const Rat& q, std::int64_t lo, std::int64_t hi, bool drop_singular, bool first_only) {
  std::vector<std::string> cmd{"algblock", "--q", q.str(), "--lo", std::to_string(lo), "--hi", std::to_string(hi)};
  if (drop_singular) cmd.push_back("--drop-singular");
  if (first_only) cmd.push_back("--first-only");
  return timed(std::move(cmd), [&](Report& rep) {
    const BlockWindowResult res = block_window_check(q, lo, hi, {.drop_singular = drop_singular, .first_only = first_only});
    rep.certificates = {res.reynolds, res.closed_form};
    rep.built = json{{"type", "block-window"},    {"q", q.str()},
                     {"lo", lo},                  {"hi", hi},
                     {"drop_singular", drop_singular}, {"checked", res.checked},
                     {"target_skipped", res.target_skipped}, {"singular", res.singular}};
  });
}

std::string render_text(const Report& r, bool timing) {
  std::ostringstream os;
  os << "command:";
  for (const auto& c : r.command) os << ' ' << c;
  os << '\n';
  for (const Certificate& c : r.certificates) os << to_string(c) << '\n';
  if (!r.error.empty()) os << "error: " << r.error << '\n';
  os << "verdict: " << (!r.error.empty() ? "ERROR" : r.pass() ? "PASS" : "FAIL") << '\n';
  if (timing) os << "wall_ms: " << r.wall_ms << '\n';
  return os.str();
}

json render_json(const Report& r, bool timing) {
  json j;
  j["command"] = r.command;
  json certs = json::array();
  for (const Certificate& c : r.certificates) certs.push_back(io::to_json(c));
  j["certificates"] = std::move(certs);
  j["verdict"] = !r.error.empty() ? "error" : r.pass() ? "pass" : "fail";
  if (!r.error.empty()) j["error"] = r.error;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

} // namespace reylie::shell

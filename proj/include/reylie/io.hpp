#pragma once

#include "reylie/bialgebra.hpp"
#include "reylie/certificate.hpp"
#include "reylie/cybe.hpp"
#include "reylie/lie.hpp"
#include "reylie/matched.hpp"
#include "reylie/nslie.hpp"
#include "reylie/reynolds.hpp"
#include "reylie/rotabaxter.hpp"
#include "reylie/tensor.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON documents for every structure. Rationals are strings "p" or "p/q";
// readers also accept JSON integers. Matrices are lists of rows, column j
// being the image of e_j; wherever a matrix is expected, {"matrix": rows}
// is accepted as well. Every reader throws InputError on malformed input.
namespace reylie::io {

using json = nlohmann::ordered_json;

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j);

json to_json(const Mat& m);
/// Rows, or {"matrix": rows}.
Mat mat_from_json(const json& j);
/// {"matrix": rows}
json operator_doc(const Mat& m);

/// {"dim", "basis", "brackets": [{"i","j","out": {"k": "c"}}]}; i < j, nonzero only.
json to_json(const LieAlgebra& L);
/// Unchecked: Jacobi is left to the jacobi check.
LieAlgebra algebra_from_json(const json& j);

/// {"gram": rows}
json to_json(const BilinForm& S);
BilinForm form_from_json(const json& j);

/// {"dims": [l, r], "entries": [{"i","j","c"}]}. Without "dims", default_dim is used for both.
json to_json(const Tensor2& t);
Tensor2 tensor_from_json(const json& j, std::size_t default_dim = 0);

/// {"module_dim", "rho": [rows...]}
json to_json(const Representation& rep);
Representation rep_from_json(const json& j);

/// Algebra document plus "reynolds": {"matrix"}.
json to_json(const ReynoldsLieAlgebra& A);
ReynoldsLieAlgebra reynolds_from_json(const json& j);
/// The "reynolds" entry of a document, when present.
std::optional<Mat> optional_operator(const json& j);

/// {"rho": [...], "T": rows}
json to_json(const ReynoldsRep& rr);
ReynoldsRep reynolds_rep_from_json(const json& j);

/// Algebra document with "left" (full product table) and "wedge" (bracket table).
json to_json(const NSLieAlgebra& A);
NSLieAlgebra ns_from_json(const json& j);
/// {"module_dim", "varrho", "mu", "nu"}
json to_json(const NSRep& rep);
NSRep ns_rep_from_json(const json& j);

/// {"g", "h", "rho", "mu"} plus optional "Rg", "Rh".
json to_json(const MatchedPair& mp);
json to_json(const ReynoldsMatchedPair& rmp);
MatchedPair matched_from_json(const json& j);
ReynoldsMatchedPair reynolds_matched_from_json(const json& j);

/// {"G": reynolds algebra, "gram", "part_g", "part_h"}
json to_json(const ManinTripleReynolds& mt);
ManinTripleReynolds manin_from_json(const json& j);

/// {"g", "dual"} plus optional "reynolds".
json to_json(const LieBialgebra& b);
json to_json(const ReynoldsLieBialgebra& rb);
LieBialgebra bialgebra_from_json(const json& j);

/// {"dim", "basis", "delta": [tensor per basis vector]}
json cobracket_to_json(const std::vector<Tensor2>& deltas, const std::vector<std::string>& basis);
std::vector<Tensor2> cobracket_from_json(const json& j);

/// Algebra document plus "rb": {"matrix", "lambda"}.
json to_json(const RotaBaxterAlg& rb);
RotaBaxterAlg rota_baxter_from_json(const json& j);
/// Algebra document plus "rb", "gram" and optionally "reynolds".
json to_json(const QuadraticRB& q);
QuadraticRB qrb_from_json(const json& j);

/// {"g": reynolds algebra, "rep": {"rho", "T"}, "K": rows}
json to_json(const RelativeRB& rel);
RelativeRB relative_rb_from_json(const json& j);

/// {"dim", "basis", "prod": [{"i","j","out"}]} plus optional "reynolds".
json to_json(const PreLieAlgebra& A);
json to_json(const ReynoldsPreLie& rp);
PreLieAlgebra prelie_from_json(const json& j);

/// {"algebra": reynolds algebra, "r": tensor}
json to_json(const CybeSolution& s);
CybeSolution solution_from_json(const json& j);

json to_json(const Certificate& c);

/// Parses a file; InputError when it is missing or not JSON.
json read_file(const std::string& path);
/// Two-space indented, trailing newline.
void write_file(const std::string& path, const json& doc);
std::string dump(const json& doc);

} // namespace reylie::io

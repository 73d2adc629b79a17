#pragma once

#include "reylie/certificate.hpp"
#include "reylie/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reylie::shell {

using io::json;

enum class Origin { Published, Derived };

struct CatalogEntry {
  std::string name;
  std::string kind; // document type
  json document;
  Origin origin = Origin::Derived;
  std::string source; // which example, or how it was assembled
  std::vector<Certificate> invariants; // re-run on every load
  bool ok() const;
};

/// sl2, sl2.B, sl2.S, sl2.r, sl2.km_dual, sl2.reynolds, sl2.qrb, abelian(n),
/// block(q,lo,hi[,drop]), trivial_matched(g,h). Throws InputError for an unknown name.
CatalogEntry catalog(const std::string& name);
/// Names accepted by catalog(), with placeholder arguments for the families.
std::vector<std::string> catalog_names();

/// Loads a path; '@name' is a catalog document and an argument starting with '{' or '[' is inline JSON.
json load(const std::string& arg);

struct Request {
  std::string kind;
  std::vector<std::string> files;
  std::optional<std::string> op;     // operator document
  std::optional<std::string> r;      // tensor document
  std::optional<std::string> rep;    // representation document
  std::optional<std::string> lambda; // Rota-Baxter weight
  std::string rep_kind = "adjoint";  // semidirect without --rep: adjoint | coadjoint | zero
  bool first_only = false;
};

struct Report {
  std::vector<std::string> command;
  std::vector<Certificate> certificates;
  std::optional<json> built;
  std::string error; // input or format problem
  double wall_ms = 0;

  bool pass() const;
  /// 0 all pass, 1 a certified failure, 2 input error
  int exit_code() const;
};

const std::vector<std::string>& check_kinds();
const std::vector<std::string>& build_kinds();

Report run_check(const Request& req);
/// The built document carries a "provenance" header naming the construction and sources.
Report run_build(const Request& req);
/// Catalog entry as a report; built holds the document.
Report run_catalog(const std::string& name);
/// Block window as a report.
Report run_block(const Rat& q, std::int64_t lo, std::int64_t hi, bool drop_singular, bool first_only);

std::string render_text(const Report& r, bool timing = false);
json render_json(const Report& r, bool timing = false);

} // namespace reylie::shell

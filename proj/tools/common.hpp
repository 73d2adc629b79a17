#pragma once

#include "reylie/error.hpp"
#include "reylie/shell.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace reylie::tools {

struct ReportFlags {
  bool json = false;
  bool timing = false;
  bool first_only = false;

  void attach(CLI::App& app) {
    app.add_flag("--json", json, "machine-readable report");
    app.add_flag("--first-only", first_only, "stop at the first violation");
    app.add_flag("--timing", timing, "include wall time in the report");
  }
};

inline void print_report(std::ostream& os, const shell::Report& r, const ReportFlags& f) {
  if (f.json) os << io::dump(shell::render_json(r, f.timing));
  else os << shell::render_text(r, f.timing);
}

// Operator, tensor and representation inputs shared by algcheck and algbuild.
inline void attach_inputs(CLI::App& app, shell::Request& req) {
  app.add_option("kind", req.kind, "what to check or build")->required();
  app.add_option("files", req.files, "input documents; @name loads a catalog entry");
  app.add_option("--op,--reynolds", req.op, "operator document");
  app.add_option("--r", req.r, "tensor document");
  app.add_option("--rep", req.rep, "representation document");
  app.add_option("--lambda", req.lambda, "Rota-Baxter weight, e.g. 1/2");
}

// CLI11 reports usage errors with its own codes; everything malformed exits 2.
inline int parse_or_exit(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return -1;
}

} // namespace reylie::tools

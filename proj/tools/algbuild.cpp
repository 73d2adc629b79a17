#include "common.hpp"

using namespace reylie;

int main(int argc, char** argv) {
  CLI::App app{"Build a structure from verified inputs; the output is re-verified"};
  shell::Request req;
  tools::ReportFlags flags;
  std::string out;
  tools::attach_inputs(app, req);
  flags.attach(app);
  app.add_option("-o,--output", out, "output document (default: stdout, report to stderr)");
  app.add_option("--rep-kind", req.rep_kind, "semidirect without --rep: adjoint, coadjoint, zero or zero:m");
  if (argc == 2 && std::string(argv[1]) == "--list") {
    for (const auto& k : shell::build_kinds()) std::cout << k << '\n';
    return 0;
  }
  if (int rc = tools::parse_or_exit(app, argc, argv); rc >= 0) return rc;
  req.first_only = flags.first_only;
  shell::Report r = shell::run_build(req);
  if (r.built) {
    if (out.empty()) {
      std::cout << io::dump(*r.built);
    } else {
      try {
        io::write_file(out, *r.built);
      } catch (const InputError& e) {
        r.error = e.what();
      }
    }
  }
  tools::print_report(out.empty() ? std::cerr : std::cout, r, flags);
  return r.exit_code();
}

#include "common.hpp"

using namespace reylie;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of algebraic structures"};
  shell::Request req;
  tools::ReportFlags flags;
  bool list = false;
  tools::attach_inputs(app, req);
  flags.attach(app);
  app.add_flag("--list", list, "print the check kinds and exit");
  if (argc == 2 && std::string(argv[1]) == "--list") {
    for (const auto& k : shell::check_kinds()) std::cout << k << '\n';
    return 0;
  }
  if (int rc = tools::parse_or_exit(app, argc, argv); rc >= 0) return rc;
  req.first_only = flags.first_only;
  const shell::Report r = shell::run_check(req);
  tools::print_report(std::cout, r, flags);
  return r.exit_code();
}

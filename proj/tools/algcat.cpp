#include "common.hpp"

using namespace reylie;

int main(int argc, char** argv) {
  CLI::App app{"Print a catalog entry after re-running its invariants"};
  std::string name, out;
  tools::ReportFlags flags;
  bool list = false;
  app.add_option("name", name, "entry, e.g. sl2.B, abelian(3), block(2,1,3)");
  app.add_option("-o,--output", out, "output document (default: stdout, report to stderr)");
  app.add_flag("--list", list, "print the entry names and exit");
  flags.attach(app);
  if (int rc = tools::parse_or_exit(app, argc, argv); rc >= 0) return rc;
  if (list) {
    for (const auto& n : shell::catalog_names()) std::cout << n << '\n';
    return 0;
  }
  if (name.empty()) {
    std::cerr << "algcat: missing entry name (see --list)\n";
    return 2;
  }
  shell::Report r = shell::run_catalog(name);
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

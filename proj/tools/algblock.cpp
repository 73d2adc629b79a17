#include "common.hpp"

using namespace reylie;

int main(int argc, char** argv) {
  CLI::App app{"Reynolds identity and closed form on a Block algebra window"};
  std::string q;
  std::int64_t lo = 0, hi = 0;
  bool drop = false;
  tools::ReportFlags flags;
  app.add_option("--q", q, "parameter q, e.g. 1/2")->required();
  app.add_option("--lo", lo, "window lower bound")->required();
  app.add_option("--hi", hi, "window upper bound")->required();
  app.add_flag("--drop-singular", drop, "skip indices with m+i+1 = 0 instead of rejecting them");
  flags.attach(app);
  if (int rc = tools::parse_or_exit(app, argc, argv); rc >= 0) return rc;
  shell::Report r;
  try {
    r = shell::run_block(Rat::parse(q), lo, hi, drop, flags.first_only);
  } catch (const InputError& e) {
    r.command = {"algblock", "--q", q};
    r.error = e.what();
  }
  tools::print_report(std::cout, r, flags);
  return r.exit_code();
}

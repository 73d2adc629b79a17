#include "reylie/error.hpp"
#include "reylie/io.hpp"
#include "reylie/shell.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace reylie;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string pack(const shell::Report& r) {
  io::json j;
  j["report"] = shell::render_json(r);
  j["text"] = shell::render_text(r);
  j["exit_code"] = r.exit_code();
  j["built"] = r.built ? *r.built : io::json(nullptr);
  return j.dump();
}

shell::Request request(std::string kind, std::vector<std::string> files, std::optional<std::string> op,
                       std::optional<std::string> r, std::optional<std::string> rep, std::optional<std::string> lambda,
                       std::string rep_kind, bool first_only) {
  shell::Request q;
  q.kind = std::move(kind);
  q.files = std::move(files);
  q.op = std::move(op);
  q.r = std::move(r);
  q.rep = std::move(rep);
  q.lambda = std::move(lambda);
  q.rep_kind = std::move(rep_kind);
  q.first_only = first_only;
  return q;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact checks and constructions for Reynolds Lie algebras and bialgebras";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def(
      "check",
      [](std::string kind, std::vector<std::string> files, std::optional<std::string> op, std::optional<std::string> r,
         std::optional<std::string> rep, std::optional<std::string> lambda, bool first_only) {
        shell::Request q = request(std::move(kind), std::move(files), std::move(op), std::move(r), std::move(rep),
                                   std::move(lambda), "adjoint", first_only);
        py::gil_scoped_release unlock;
        return pack(shell::run_check(q));
      },
      py::arg("kind"), py::arg("files"), py::arg("op") = py::none(), py::arg("r") = py::none(),
      py::arg("rep") = py::none(), py::arg("lam") = py::none(), py::arg("first_only") = false);

  m.def(
      "build",
      [](std::string kind, std::vector<std::string> files, std::optional<std::string> op, std::optional<std::string> r,
         std::optional<std::string> rep, std::optional<std::string> lambda, std::string rep_kind) {
        shell::Request q = request(std::move(kind), std::move(files), std::move(op), std::move(r), std::move(rep),
                                   std::move(lambda), std::move(rep_kind), false);
        py::gil_scoped_release unlock;
        return pack(shell::run_build(q));
      },
      py::arg("kind"), py::arg("files"), py::arg("op") = py::none(), py::arg("r") = py::none(),
      py::arg("rep") = py::none(), py::arg("lam") = py::none(), py::arg("rep_kind") = "adjoint");

  m.def("catalog", [](const std::string& name) { return pack(shell::run_catalog(name)); }, py::arg("name"));

  m.def(
      "block",
      [](const std::string& q, std::int64_t lo, std::int64_t hi, bool drop_singular, bool first_only) {
        shell::Report r;
        try {
          r = shell::run_block(Rat::parse(q), lo, hi, drop_singular, first_only);
        } catch (const InputError& e) {
          r.command = {"algblock", "--q", q};
          r.error = e.what();
        }
        return pack(r);
      },
      py::arg("q"), py::arg("lo"), py::arg("hi"), py::arg("drop_singular") = false, py::arg("first_only") = false);

  m.def("check_kinds", &shell::check_kinds);
  m.def("build_kinds", &shell::build_kinds);
  m.def("catalog_names", &shell::catalog_names);
  m.def("canonical_rational", [](const std::string& s) { return Rat::parse(s).str(); }, py::arg("text"));
}

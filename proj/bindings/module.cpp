// Python bindings for the main braidmat operations. Matrices travel as
// lists of row lists, words as integer lists, diagrams and masks as their
// text forms, certificates and graphs as JSON strings (the package wrapper
// decodes them).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidmat/braidmat.hpp"

namespace py = pybind11;

namespace {

braidmat::Matrix to_matrix(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  braidmat::Matrix m(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n)
      throw braidmat::Error(braidmat::ErrorCode::InvalidParameters,
                            "matrix rows must all have length n");
    for (int j = 1; j <= n; ++j) m.at(i, j) = rows[i - 1][j - 1];
  }
  return m;
}

std::vector<std::vector<int>> from_matrix(const braidmat::Matrix& m) {
  std::vector<std::vector<int>> rows(m.n(), std::vector<int>(m.n()));
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) rows[i - 1][j - 1] = m.at(i, j);
  return rows;
}

braidmat::ProjectionWord to_word(int n, const std::vector<int>& letters) {
  braidmat::ProjectionWord w{n, letters};
  braidmat::validate(w);
  return w;
}

}  // namespace

PYBIND11_MODULE(_braidmat, mod) {
  mod.doc() = "crossing-matrix toolkit for braid projections";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const braidmat::Error& e) {
      std::string msg =
          std::string(braidmat::error_code_name(e.code())) + ": " + e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    }
  });

  mod.def(
      "cn_matrix",
      [](int n, const std::vector<int>& letters) {
        return from_matrix(braidmat::cn_matrix(to_word(n, letters)));
      },
      py::arg("n"), py::arg("letters"),
      "Pairwise crossing counts of a projection word.");

  mod.def(
      "permutation",
      [](int n, const std::vector<int>& letters) {
        return braidmat::permutation(to_word(n, letters));
      },
      py::arg("n"), py::arg("letters"));

  mod.def(
      "is_pure",
      [](int n, const std::vector<int>& letters) {
        return braidmat::is_pure(to_word(n, letters));
      },
      py::arg("n"), py::arg("letters"));

  mod.def(
      "ou_matrix",
      [](int n, const std::string& diagram) {
        return from_matrix(
            braidmat::ou_matrix(braidmat::parse_diagram(diagram, n)));
      },
      py::arg("n"), py::arg("diagram"),
      "Over/under counts of a diagram given as signed tokens like '+2 -3'.");

  mod.def(
      "crossing_matrix",
      [](int n, const std::string& diagram) {
        return from_matrix(
            braidmat::crossing_matrix(braidmat::parse_diagram(diagram, n)));
      },
      py::arg("n"), py::arg("diagram"));

  mod.def(
      "is_t0",
      [](const std::vector<std::vector<int>>& rows) {
        return braidmat::is_t0(to_matrix(rows));
      },
      py::arg("matrix"));

  mod.def("count_t0", &braidmat::count_t0, py::arg("n"));

  mod.def(
      "enumerate_t0",
      [](int n) {
        std::vector<std::string> out;
        braidmat::enumerate_t0(n, [&out](const braidmat::UpperMask& m) {
          out.push_back(braidmat::mask_to_text(m));
        });
        return out;
      },
      py::arg("n"), "All T0 masks on n strands as pair-list strings.");

  mod.def(
      "realize_cn_json",
      [](const std::vector<std::vector<int>>& rows, uint64_t budget) {
        braidmat::Certificate c = braidmat::realize_cn(to_matrix(rows), budget);
        braidmat::verify_certificate(c);
        return braidmat::certificate_to_json(c);
      },
      py::arg("matrix"), py::arg("budget") = 0);

  mod.def(
      "realize_ou_json",
      [](const std::vector<std::vector<int>>& rows, uint64_t budget) {
        braidmat::Certificate c = braidmat::realize_ou(to_matrix(rows), budget);
        braidmat::verify_certificate(c);
        return braidmat::certificate_to_json(c);
      },
      py::arg("matrix"), py::arg("budget") = 0);

  mod.def(
      "realize_crossing_json",
      [](const std::vector<std::vector<int>>& rows, uint64_t budget) {
        braidmat::Certificate c =
            braidmat::realize_crossing(to_matrix(rows), budget);
        braidmat::verify_certificate(c);
        return braidmat::certificate_to_json(c);
      },
      py::arg("matrix"), py::arg("budget") = 0);

  mod.def(
      "verify_certificate_json",
      [](const std::string& text) {
        braidmat::Certificate c = braidmat::certificate_from_json(text);
        return braidmat::verify_certificate(c);
      },
      py::arg("certificate"));

  mod.def(
      "verify_theorem",
      [](int n, int workers, uint64_t budget) {
        braidmat::TheoremReport rep =
            braidmat::verify_theorem(n, workers, budget);
        return py::make_tuple(rep.total, rep.verified_count);
      },
      py::arg("n") = 6, py::arg("workers") = 1, py::arg("budget") = 0,
      "Realize and re-check every T0 matrix; returns (total, verified).");

  mod.def(
      "find_t_structure_json",
      [](const std::string& mask_text, int n) -> py::object {
        braidmat::UpperMask mask = braidmat::mask_from_text(mask_text, n);
        auto g = braidmat::find_t_structure(mask);
        if (!g) return py::none();
        return py::str(braidmat::graph_to_json(*g));
      },
      py::arg("mask"), py::arg("n"));
}

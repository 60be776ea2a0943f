#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "parkfn/bijections.hpp"
#include "parkfn/circular.hpp"
#include "parkfn/enumerate.hpp"
#include "parkfn/error.hpp"
#include "parkfn/formulas.hpp"
#include "parkfn/verify.hpp"

namespace py = pybind11;
using namespace parkfn;

namespace {

// Exact counts cross into Python as ints via their decimal digits.
py::object to_py(const big_int& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

py::object maybe_list(const std::optional<std::vector<int>>& v) {
  return v ? py::cast(*v) : py::none();
}

preference_list prefs_of(const std::vector<int>& v) { return preference_list(v); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting, enumeration and checks for restricted parking functions";
  py::register_exception<parking_error>(m, "ParkingError", PyExc_ValueError);

  m.def("park", [](const std::vector<int>& prefs, int num_spots) {
    const auto r = park(prefs_of(prefs), num_spots);
    py::dict out;
    py::list occupancy;
    for (int car : r.occupancy) occupancy.append(car == empty_spot ? py::none() : py::cast(car));
    out["occupancy"] = occupancy;
    out["unparked"] = r.unparked;
    out["defect"] = r.defect();
    return out;
  }, py::arg("prefs"), py::arg("num_spots"));
  m.def("is_parking_function", [](const std::vector<int>& p) { return is_parking_function(prefs_of(p)); });
  m.def("is_prime", [](const std::vector<int>& p) { return is_prime(prefs_of(p)); });
  m.def("outcome_permutation", [](const std::vector<int>& p) { return outcome_permutation(prefs_of(p)); });

  m.def("count_restricted", [](int n, const std::vector<int>& allowed, unsigned threads) {
    return to_py(count_restricted(n, restriction_set(n, allowed), threads));
  }, py::arg("n"), py::arg("allowed"), py::arg("threads") = 1);
  m.def("count_prime_restricted", [](int n, const std::vector<int>& allowed, unsigned threads) {
    return to_py(count_prime_restricted(n, restriction_set(n, allowed), threads));
  }, py::arg("n"), py::arg("allowed"), py::arg("threads") = 1);
  m.def("enum_restricted", [](int n, const std::vector<int>& allowed, bool prime) {
    const restriction_set S(n, allowed);
    std::vector<std::vector<int>> out;
    for (const auto& p : prime ? enum_prime_restricted(n, S) : enum_restricted(n, S)) out.push_back(p.vector());
    return out;
  }, py::arg("n"), py::arg("allowed"), py::arg("prime") = false);

  m.def("pf_total", [](int n) { return to_py(pf_total(n)); });
  m.def("ppf_total", [](int n) { return to_py(ppf_total(n)); });
  m.def("restricted_subtractive", [](int n, int s) { return to_py(restricted_subtractive(n, s)); });
  m.def("restricted_alternating", [](int n, int s) { return to_py(restricted_alternating(n, s)); });
  m.def("prime_subtractive", [](int n, int s) { return to_py(prime_subtractive(n, s)); });
  m.def("prime_alternating", [](int n, int s) { return to_py(prime_alternating(n, s)); });
  m.def("catalan_triangle", [](int n, int k) { return to_py(catalan_triangle(n, k)); });
  m.def("ones_polynomial", [](int n, int s) {
    py::list out;
    for (const auto& c : ones_poly_subtractive(n, s).coeffs()) out.append(to_py(c));
    return out;
  }, "Coefficients c_0, c_1, ... of the ones enumerator.");
  m.def("fiber_formula", [](const std::vector<int>& sigma, int s) { return to_py(fiber_formula(sigma, s)); });
  m.def("mod_count", [](int g, int s, int k) { return to_py(mod_count_general(g, s, k)); });

  m.def("build_T", [](const std::vector<int>& S, int n) {
    const auto T = build_T(restriction_set(n, S), n);
    return std::vector<int>(T.elements().begin(), T.elements().end());
  });
  m.def("prime_to_restricted", [](const std::vector<int>& p, const std::vector<int>& S, int n) {
    return prime_to_restricted(prefs_of(p), restriction_set(n, S), n).vector();
  });
  m.def("restricted_to_prime", [](const std::vector<int>& p, const std::vector<int>& S, int n) {
    return restricted_to_prime(prefs_of(p), restriction_set(n, S), n).vector();
  });
  m.def("to_u_parking", [](const std::vector<int>& p, const std::vector<int>& S) {
    const int n = static_cast<int>(p.size());
    return to_u_parking(prefs_of(p), restriction_set(n, S)).vector();
  });

  m.def("circular_park", [](const std::vector<int>& prefs, int g, int s) {
    const auto state = circular_park(prefs_of(prefs), g, s);
    py::dict out;
    py::list occupancy;
    for (int car : state.occupancy) occupancy.append(car == empty_spot ? py::none() : py::cast(car));
    out["occupancy"] = occupancy;
    if (!state.prefs.empty() && state.empty_count() > 0) {
      const auto parts = decompose(state);
      out["gaps"] = parts.gaps.parts;
      out["blocks"] = parts.blocks.parts;
    } else {
      out["gaps"] = py::none();
      out["blocks"] = py::none();
    }
    const auto linear = linearize(state);
    out["linearization"] = linear ? py::cast(linear->vector()) : py::none();
    return out;
  }, py::arg("prefs"), py::arg("g"), py::arg("s"));

  m.def("verify", [](const std::string& suite, int n_max, std::uint64_t budget, unsigned threads) {
    verify_bounds bounds{n_max, budget, threads};
    std::vector<check_row> rows;
    {
      py::gil_scoped_release release;
      rows = run_suite(suite, bounds);
    }
    py::list out;
    for (const auto& r : rows) {
      py::dict d;
      d["suite"] = r.suite;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("suite"), py::arg("n_max") = 0, py::arg("budget") = 10'000'000, py::arg("threads") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs a command line in-process; returns (exit code, stdout, stderr).");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dio/closed_forms.hpp"
#include "dio/floyd.hpp"
#include "dio/gf.hpp"
#include "dio/oracle.hpp"
#include "dio/strip.hpp"
#include "dio/system.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// BigCount <-> python int, through the decimal string form in both
// directions so values of any size stay exact.
template <>
struct type_caster<dio::BigCount> {
  PYBIND11_TYPE_CASTER(dio::BigCount, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    try {
      value = dio::BigCount(std::string(py::str(src)));
    } catch (const std::exception&) {
      return false;
    }
    return true;
  }

  static handle cast(const dio::BigCount& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

dio::SystemKind kind_from_name(const std::string& system) {
  if (system == "full4") return dio::SystemKind::Full4;
  if (system == "floyd3") return dio::SystemKind::Floyd3;
  if (system == "general") return dio::SystemKind::GeneralK;
  throw dio::DomainError("unknown system '" + system + "' (use full4, floyd3 or general)");
}

dio::ValidatedSpec make_spec(const std::string& system, const std::vector<long long>& rhs) {
  const dio::SystemKind kind = kind_from_name(system);
  const int k = kind == dio::SystemKind::Full4    ? 4
                : kind == dio::SystemKind::Floyd3 ? 3
                                                  : static_cast<int>(rhs.size());
  return dio::validate(dio::SystemSpec{kind, k, rhs});
}

dio::DeltaClass delta_from_name(const std::string& name) {
  if (name == "negative") return dio::DeltaClass::Negative;
  if (name == "zero") return dio::DeltaClass::Zero;
  if (name == "positive") return dio::DeltaClass::Positive;
  throw dio::DomainError("unknown delta class '" + name + "'");
}

std::uint64_t cells_or_default(std::optional<std::uint64_t> max_cells) {
  return max_cells ? *max_cells : 0;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact counters and enumerators for symmetric row-sum Diophantine systems";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dio::CapacityError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const dio::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<dio::SolutionMatrix>(m, "SolutionMatrix")
      .def_property_readonly("k", &dio::SolutionMatrix::k)
      .def("at", &dio::SolutionMatrix::at, py::arg("i"), py::arg("j"))
      .def("upper_triangle", &dio::SolutionMatrix::upper_triangle)
      .def("json", &dio::SolutionMatrix::to_json_string)
      .def("__eq__",
           [](const dio::SolutionMatrix& a, const dio::SolutionMatrix& b) { return a == b; })
      .def("__repr__", [](const dio::SolutionMatrix& s) {
        return "SolutionMatrix(" + s.to_json_string() + ")";
      });

  // oracle
  m.def(
      "count_bruteforce",
      [](const std::string& system, const std::vector<long long>& rhs) {
        return dio::count_bruteforce(make_spec(system, rhs));
      },
      py::arg("system"), py::arg("rhs"));
  m.def(
      "enumerate_solutions",
      [](const std::string& system, const std::vector<long long>& rhs,
         std::optional<std::uint64_t> limit) {
        return dio::list_solutions(make_spec(system, rhs), limit);
      },
      py::arg("system"), py::arg("rhs"), py::arg("limit") = py::none());
  m.def(
      "count_fixed_diagonal",
      [](long long l, long long l11, long long l22, long long l33, long long l44) {
        return dio::count_fixed_diagonal(l, dio::ReducedRhs{l11, l22, l33, l44});
      },
      py::arg("l"), py::arg("l11"), py::arg("l22"), py::arg("l33"), py::arg("l44"));
  m.def(
      "count_fixed_diagonal_by_delta",
      [](long long l, long long l11, long long l22, const std::string& delta) {
        return dio::count_fixed_diagonal_by_delta(l, l11, l22, delta_from_name(delta));
      },
      py::arg("l"), py::arg("l11"), py::arg("l22"), py::arg("delta"));

  // closed forms
  m.def("closed_count", &dio::closed_count, py::arg("l"));
  m.def("closed_count_even", &dio::closed_count_even, py::arg("l"));
  m.def("closed_count_odd", &dio::closed_count_odd, py::arg("l"));
  m.def("closed_count_even_reindexed", &dio::closed_count_even_reindexed, py::arg("m"));
  m.def("closed_count_odd_reindexed", &dio::closed_count_odd_reindexed, py::arg("m"));
  m.def("floyd_count", &dio::floyd_count, py::arg("l"));
  m.def("magic_constant", &dio::magic_constant, py::arg("n"));
  m.def("triangle_number", &dio::triangle_number, py::arg("n"));

  // strip counter
  m.def("aggregate_count", &dio::aggregate_count, py::arg("l"));
  m.def(
      "case_count",
      [](long long l, long long l11, long long l22, const std::string& delta) {
        return dio::case_count(l, l11, l22, delta_from_name(delta));
      },
      py::arg("l"), py::arg("l11"), py::arg("l22"), py::arg("delta"));
  m.def("proof_blocks", [] {
    std::vector<std::string> names;
    for (const dio::ProofBlock b : dio::all_proof_blocks()) names.push_back(dio::to_string(b));
    return names;
  });
  m.def(
      "proof_block_value",
      [](const std::string& name, long long l) {
        for (const dio::ProofBlock b : dio::all_proof_blocks()) {
          if (dio::to_string(b) == name) return dio::proof_block_value(b, l);
        }
        throw dio::DomainError("unknown proof block '" + name + "'");
      },
      py::arg("name"), py::arg("l"));

  // floyd counter
  m.def(
      "floyd_exists",
      [](long long l11, long long l22, long long l33) {
        return dio::floyd_exists(dio::FloydTriple{l11, l22, l33});
      },
      py::arg("l11"), py::arg("l22"), py::arg("l33"));
  m.def(
      "floyd_solution",
      [](long long l11, long long l22, long long l33) {
        const dio::FloydOffDiagonal a = dio::floyd_solution(dio::FloydTriple{l11, l22, l33});
        return py::make_tuple(a.a12, a.a13, a.a23);
      },
      py::arg("l11"), py::arg("l22"), py::arg("l33"));
  m.def("floyd_count_cases", &dio::floyd_count_cases, py::arg("l"));
  m.def(
      "floyd_enumerate",
      [](long long l) {
        py::list out;
        for (const dio::FloydItem& item : dio::floyd_enumerate(l)) {
          out.append(py::make_tuple(
              py::make_tuple(item.triple.l11, item.triple.l22, item.triple.l33),
              py::make_tuple(item.alpha.a12, item.alpha.a13, item.alpha.a23)));
        }
        return out;
      },
      py::arg("l"));
  m.def("floyd_triangle_row_sums", [] {
    return std::vector<long long>(dio::floyd_triangle_row_sums.begin(),
                                  dio::floyd_triangle_row_sums.end());
  });

  // generating-function counter
  m.def(
      "count_general",
      [](const std::vector<long long>& rhs, std::optional<std::uint64_t> max_cells) {
        return dio::count_general(rhs, cells_or_default(max_cells));
      },
      py::arg("rhs"), py::arg("max_cells") = py::none());
  m.def(
      "count_general_table",
      [](int k, long long lmax, std::optional<std::uint64_t> max_cells) {
        return dio::count_general_table(k, lmax, cells_or_default(max_cells));
      },
      py::arg("k"), py::arg("lmax"), py::arg("max_cells") = py::none());

  // shared vocabulary
  m.def(
      "classify_delta",
      [](long long l11, long long l22, long long l33, long long l44) {
        return dio::to_string(dio::classify_delta(dio::ReducedRhs{l11, l22, l33, l44}));
      },
      py::arg("l11"), py::arg("l22"), py::arg("l33"), py::arg("l44"));
  m.def("residue_class", &dio::residue_class, py::arg("l"));
}

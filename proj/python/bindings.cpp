#include "syzdepth/asymptotics.hpp"
#include "syzdepth/depth.hpp"
#include "syzdepth/koszul.hpp"
#include "syzdepth/multigraded.hpp"
#include "syzdepth/report.hpp"
#include "syzdepth/serialize.hpp"
#include "syzdepth/stanley.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

namespace py = pybind11;
using namespace syzdepth;

namespace {

py::object to_py(const Int& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_py(e));
      return std::move(out);
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
      return std::move(out);
    }
    default: throw std::invalid_argument("unsupported JSON value");
  }
}

Json from_py(const py::handle& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::list int_list(const std::vector<Int>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

Subset subset_of(const std::vector<int>& elems) { return Subset::of(elems); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hilbert depth computations for the Koszul syzygy modules M(n,k).";
  m.attr("__version__") = SYZDEPTH_VERSION;

  py::register_exception<InconsistencyError>(m, "InconsistencyError");

  m.def("binomial", [](long a, long b) { return to_py(binomial(a, b)); }, py::arg("a"), py::arg("b"));

  m.def(
      "numerator_std",
      [](int n, int k) {
        const UniLaurent q = numerator_std(n, k);
        return py::make_tuple(q.offset(), int_list(q.coeffs()));
      },
      py::arg("n"), py::arg("k"), "Numerator as (lowest degree, coefficients).");

  m.def(
      "expand_quotient",
      [](int n, int k, int s, int d_max) {
        return int_list(expand_quotient(numerator_std(n, k), s, d_max));
      },
      py::arg("n"), py::arg("k"), py::arg("s"), py::arg("d_max"),
      "Coefficients of T^offset..T^d_max in numerator_std(n,k)/(1-T)^s.");

  m.def("coeff_sum1", [](int n, int k, int s, long j) { return to_py(coeff_sum1(n, k, s, j)); },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("j"));
  m.def("coeff_sum2", [](int n, int k, int s, long j) { return to_py(coeff_sum2(n, k, s, j)); },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("j"));

  m.def("positivity", [](int n, int k, int s) { return to_py(to_json(positivity(n, k, s))); },
        py::arg("n"), py::arg("k"), py::arg("s"));

  m.def(
      "hdepth",
      [](int n, int k, bool oracle) {
        py::gil_scoped_release release;
        const DepthResult r = oracle ? hdepth_std_oracle(n, k) : hdepth_std(n, k);
        py::gil_scoped_acquire acquire;
        return to_py(to_json(r));
      },
      py::arg("n"), py::arg("k"), py::arg("oracle") = false);

  m.def("bound_lower", &bound_lower, py::arg("n"), py::arg("k"));
  m.def("bound_upper", &bound_upper, py::arg("n"), py::arg("k"));
  m.def("closed_form", &closed_form, py::arg("n"), py::arg("k"));

  m.def(
      "depth_table",
      [](int n_max, int threads) {
        std::vector<TableRow> rows;
        {
          py::gil_scoped_release release;
          rows = depth_table(n_max, threads);
        }
        return to_py(Json::parse(table_json(rows)));
      },
      py::arg("n_max"), py::arg("threads") = 1);

  m.def(
      "table_csv",
      [](int n_max, int threads) {
        py::gil_scoped_release release;
        return table_csv(depth_table(n_max, threads));
      },
      py::arg("n_max"), py::arg("threads") = 1);

  m.def(
      "decompose",
      [](int n, int k, const std::string& strategy) {
        return to_py(to_json(build_upper_decomposition(n, k, parse_strategy(strategy))));
      },
      py::arg("n"), py::arg("k"), py::arg("strategy") = "scd");

  m.def(
      "verify_hilbert_decomposition",
      [](const py::object& decomposition) {
        const auto v = verify_hilbert_decomposition(decomposition_from_json(from_py(decomposition)));
        return py::make_tuple(v.accepted, v.message);
      },
      py::arg("decomposition"), "Returns (accepted, message).");

  m.def(
      "verify_stanley",
      [](const py::object& decomposition, const py::object& hooks) {
        const Decomposition d = decomposition_from_json(from_py(decomposition));
        HookAssignment h = hooks_from_json(from_py(hooks), d.n);
        for (auto& [shift, hook] : default_hooks(d)) h.try_emplace(shift, hook);
        return to_py(to_json(verify_stanley(d, h)));
      },
      py::arg("decomposition"), py::arg("hooks"),
      "Hooks missing for level-k pieces default to their own generators.");

  m.def(
      "search_hooks",
      [](const py::object& decomposition, double budget) -> py::object {
        const Decomposition d = decomposition_from_json(from_py(decomposition));
        HookSearchResult r;
        {
          py::gil_scoped_release release;
          r = search_hooks(d, std::chrono::duration<double>(budget));
        }
        if (!r.hooks) return py::none();
        return to_py(to_json(*r.hooks));
      },
      py::arg("decomposition"), py::arg("budget") = 10.0);

  m.def(
      "generic_rank",
      [](const std::vector<std::vector<int>>& family, int n) {
        std::vector<Subset> gs;
        for (const auto& g : family) gs.push_back(subset_of(g));
        return generic_rank(gs, n);
      },
      py::arg("family"), py::arg("n"));

  m.def("boundary_squared_zero", &boundary_squared_zero, py::arg("n"), py::arg("k"));

  m.def(
      "solve_gamma",
      [](double beta, double tol) { return to_py(to_json(solve_gamma(beta, tol))); },
      py::arg("beta"), py::arg("tol") = 1e-12);

  m.def(
      "gamma_curve",
      [](int steps, double tol, int threads) {
        std::vector<GammaSolution> points;
        {
          py::gil_scoped_release release;
          points = gamma_curve(steps, tol, threads);
        }
        return to_py(Json::parse(curve_json(points)));
      },
      py::arg("steps"), py::arg("tol") = 1e-12, py::arg("threads") = 1);

  m.def(
      "predict",
      [](long n, int k) {
        const auto p = predict_regimeA(n, k);
        return py::make_tuple(static_cast<double>(p.value), static_cast<double>(p.terms[0]),
                              static_cast<double>(p.terms[1]), static_cast<double>(p.terms[2]));
      },
      py::arg("n"), py::arg("k"), "Returns (value, n/2 term, sqrt term, loglog term).");
}

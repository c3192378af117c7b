// _wci: native core of the python package.  Thin layer: every structured
// result crosses the boundary as plain dicts/lists built from the same JSON
// emitters the CLI uses, so python sees exactly what the reports contain.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "wci/construct.hpp"
#include "wci/errors.hpp"
#include "wci/index.hpp"
#include "wci/ring_ops.hpp"
#include "wci/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& x : j) out.append(json_to_py(x));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& item : j.items())
        out[py::str(item.key())] = json_to_py(item.value());
      return out;
    }
    default:
      return py::none();
  }
}

py::dict index_dict(const wci::IndexResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["argmax"] = r.argmax;
  return d;
}

struct PyRing {
  wci::BuiltRing built;

  const wci::RingTable& r() const { return *built.table; }

  int order() const { return r().order(); }
  bool unital() const { return r().unital(); }
  int one() const { return r().one(); }
  int add(int a, int b) const { return checked(a), checked(b), r().add(a, b); }
  int mul(int a, int b) const { return checked(a), checked(b), r().mul(a, b); }
  int neg(int a) const { return checked(a), r().neg(a); }
  int sub(int a, int b) const { return checked(a), checked(b), r().sub(a, b); }

  int checked(int a) const {
    if (a < 0 || a >= r().order())
      throw wci::InputError("element " + std::to_string(a) +
                            " is out of range for order " +
                            std::to_string(r().order()));
    return a;
  }
};

struct PySymbolic {
  std::shared_ptr<const wci::SymbolicTriangularRing> ring;

  wci::SymElem elem(const std::tuple<long long, int, long long>& t) const {
    return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
  }
};

}  // namespace

PYBIND11_MODULE(_wci, m) {
  m.doc() = "weak clean index computations for finite rings";

  py::register_exception<wci::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<wci::PreconditionError>(m, "PreconditionError",
                                                 PyExc_ValueError);
  py::register_exception<wci::UnsupportedOperationError>(
      m, "UnsupportedOperationError", PyExc_NotImplementedError);
  py::register_exception<wci::ResourceError>(m, "ResourceError",
                                             PyExc_RuntimeError);

  py::class_<PyRing>(m, "Ring")
      .def("order", &PyRing::order)
      .def("unital", &PyRing::unital)
      .def("one", &PyRing::one)
      .def("add", &PyRing::add)
      .def("mul", &PyRing::mul)
      .def("neg", &PyRing::neg)
      .def("sub", &PyRing::sub)
      .def("units", [](const PyRing& s) { return wci::units(s.r()); })
      .def("idempotents",
           [](const PyRing& s) { return wci::idempotents(s.r()); })
      .def("nilpotents", [](const PyRing& s) { return wci::nilpotents(s.r()); })
      .def("radical",
           [](const PyRing& s) { return wci::jacobson_radical(s.r()); })
      .def("center", [](const PyRing& s) { return wci::center(s.r()); })
      .def("is_abelian", [](const PyRing& s) { return wci::is_abelian(s.r()); })
      .def("is_local", [](const PyRing& s) { return wci::is_local(s.r()); })
      .def("is_clean", [](const PyRing& s) { return wci::is_clean(s.r()); })
      .def("is_weakly_clean",
           [](const PyRing& s) { return wci::is_weakly_clean(s.r()); })
      .def("is_uniquely_clean",
           [](const PyRing& s) { return wci::is_uniquely_clean(s.r()); })
      .def("is_elemental",
           [](const PyRing& s) {
             const wci::ElementalResult r = wci::is_elemental(s.r());
             py::dict d;
             d["elemental"] = r.elemental;
             if (r.elemental) {
               d["u"] = r.u;
               d["v"] = r.v;
             }
             return d;
           })
      .def("verify_axioms",
           [](const PyRing& s) {
             const wci::AxiomReport rep = wci::verify_ring_axioms(s.r());
             json v = json::array();
             for (const wci::AxiomViolation& x : rep.violations)
               v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
             py::dict d;
             d["ok"] = rep.ok();
             d["violations"] = json_to_py(v);
             return d;
           })
      .def("chi",
           [](const PyRing& s, int a) {
             s.checked(a);
             return json_to_py(wci::to_json(wci::chi(s.r(), a)));
           })
      .def(
          "weak_clean_index",
          [](const PyRing& s, int threads) {
            return index_dict(wci::weak_clean_index(s.r(), threads));
          },
          py::arg("threads") = 1)
      .def(
          "clean_index",
          [](const PyRing& s, int threads) {
            return index_dict(wci::clean_index(s.r(), threads));
          },
          py::arg("threads") = 1)
      .def("predicate_win1",
           [](const PyRing& s) {
             return json_to_py(wci::to_json(wci::predicate_win1(s.r())));
           })
      .def("predicate_win2",
           [](const PyRing& s) {
             return json_to_py(wci::to_json(wci::predicate_win2(s.r())));
           })
      .def("predicate_win3",
           [](const PyRing& s) {
             return json_to_py(wci::to_json(wci::predicate_win3(s.r())));
           })
      .def("__repr__", [](const PyRing& s) {
        return "<wci.Ring order=" + std::to_string(s.order()) + ">";
      });

  py::class_<PySymbolic>(m, "SymbolicRing")
      .def("idempotents",
           [](const PySymbolic& s) {
             py::list out;
             for (const wci::SymElem& e : s.ring->idempotent_elements())
               out.append(py::make_tuple(e.a, e.w, e.b));
             return out;
           })
      .def("chi",
           [](const PySymbolic& s,
              const std::tuple<long long, int, long long>& t) {
             return json_to_py(wci::to_json(wci::chi(*s.ring, s.elem(t))));
           })
      .def("predicate_win3",
           [](const PySymbolic& s) {
             return json_to_py(wci::to_json(wci::predicate_win3(*s.ring)));
           })
      .def("__repr__",
           [](const PySymbolic&) { return "<wci.SymbolicRing T(Z,Z,Z_3)>"; });

  m.def(
      "build",
      [](const std::string& spec, int size_cap, bool verify_tables)
          -> py::object {
        wci::BuildOptions opts;
        opts.size_cap = size_cap;
        opts.verify_tables = verify_tables;
        wci::BuiltRing b = wci::build(spec, opts);
        if (b.is_symbolic()) return py::cast(PySymbolic{b.symbolic});
        return py::cast(PyRing{std::move(b)});
      },
      py::arg("spec"), py::arg("size_cap") = wci::kDefaultSizeCap,
      py::arg("verify_tables") = true);

  m.def("suite_names", [] { return wci::suite_names(); });

  m.def("default_catalog",
        [] { return json_to_py(json::parse(wci::default_catalog_text())); });

  m.def(
      "run_suite",
      [](const std::string& suite, const py::object& catalog_path,
         long long seed, int samples, int window, int size_cap, int threads,
         bool timing) {
        wci::SuiteOptions opts;
        opts.seed = seed;
        opts.samples = samples;
        opts.window = window;
        opts.size_cap = size_cap;
        opts.threads = threads;
        const wci::Catalog cat =
            catalog_path.is_none()
                ? wci::default_catalog()
                : wci::load_catalog(catalog_path.cast<std::string>());
        const wci::VerificationReport rep = wci::run_suite(suite, cat, opts);
        return json_to_py(wci::report_to_json(rep, timing));
      },
      py::arg("suite") = "all", py::arg("catalog_path") = py::none(),
      py::arg("seed") = wci::kDefaultSeed, py::arg("samples") = 1000,
      py::arg("window") = 50, py::arg("size_cap") = wci::kDefaultSizeCap,
      py::arg("threads") = 1, py::arg("timing") = false);

  m.def(
      "census",
      [](const py::object& catalog_path, int size_cap, int threads) {
        wci::SuiteOptions opts;
        opts.size_cap = size_cap;
        opts.threads = threads;
        const wci::Catalog cat =
            catalog_path.is_none()
                ? wci::default_catalog()
                : wci::load_catalog(catalog_path.cast<std::string>());
        return json_to_py(wci::census_to_json(wci::search_max_win(cat, opts)));
      },
      py::arg("catalog_path") = py::none(),
      py::arg("size_cap") = wci::kDefaultSizeCap, py::arg("threads") = 1);
}

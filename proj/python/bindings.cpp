#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sgp/cli/cli.hpp"
#include "sgp/families.hpp"
#include "sgp/scan.hpp"

namespace py = pybind11;
using namespace sgp;
namespace fam = sgp::families;

namespace {

EnumerationBudget budget_of(std::optional<std::size_t> max_fiber) {
  EnumerationBudget b = EnumerationBudget::from_environment();
  if (max_fiber) b.max_fiber = *max_fiber;
  return b;
}

py::list checks_of(const fam::VerificationReport& r) {
  py::list out;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["witness"] = c.witness;
    d["detail"] = c.detail;
    out.append(d);
  }
  return out;
}

py::dict row_of(const fam::ScanRow& r) {
  py::dict d;
  d["n"] = r.n;
  d["e"] = r.e;
  d["q"] = r.q;
  d["d"] = r.d;
  d["mu"] = r.mu;
  d["frobenius"] = r.frobenius;
  d["genus"] = r.genus;
  d["symmetric"] = r.symmetric;
  d["status"] = r.status == fam::ScanStatus::Ok               ? "ok"
                : r.status == fam::ScanStatus::BudgetExceeded ? "budget_exceeded"
                                                              : "invalid";
  return d;
}

fam::Family family_of(const std::string& name) {
  const auto f = fam::parse_family(name);
  if (!f) raise(ErrorKind::InvalidInput, "unknown family '" + name + "'");
  return *f;
}

fam::Range range_of(const py::object& o) {
  if (py::isinstance<py::str>(o)) return fam::parse_range(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) {
    const Int v = o.cast<Int>();
    return {v, v};
  }
  const auto pair = o.cast<std::pair<Int, Int>>();
  return {pair.first, pair.second};
}

std::optional<fam::Range> opt_range(const py::object& o) {
  if (o.is_none()) return std::nullopt;
  return range_of(o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroups from concatenated arithmetic sequences";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init<std::vector<Int>>(), py::arg("generators"))
      .def_static("generated_by",
                  [](const std::vector<Int>& c) { return Semigroup::generated_by(c); })
      .def_property_readonly("generators", &Semigroup::generators)
      .def_property_readonly("multiplicity", &Semigroup::multiplicity)
      .def_property_readonly("embedding_dimension", &Semigroup::embedding_dimension)
      .def("__contains__", [](const Semigroup& s, Int x) { return contains(s, x); })
      .def("__eq__", &Semigroup::operator==)
      .def("__repr__", [](const Semigroup& s) {
        std::ostringstream os;
        os << "Semigroup([";
        for (std::size_t i = 0; i < s.generators().size(); ++i) os << (i ? ", " : "") << s.generators()[i];
        os << "])";
        return os.str();
      });

  m.def("minimal_generators", [](const std::vector<Int>& c) { return minimal_generators(c); });
  m.def("apery", [](const Semigroup& s, std::optional<Int> a) {
    return apery(s, a.value_or(s.multiplicity())).elements();
  }, py::arg("s"), py::arg("a") = py::none());
  m.def("frobenius", &frobenius);
  m.def("genus", &genus);
  m.def("gaps", &gaps);
  m.def("is_symmetric", &is_symmetric);

  m.def("factorizations", [](const Semigroup& s, Int x, std::optional<std::size_t> budget) {
    std::vector<std::vector<Int>> out;
    for (const auto& f : factorizations(s, x, budget_of(budget))) out.push_back(f.exponents);
    return out;
  }, py::arg("s"), py::arg("element"), py::arg("budget") = py::none());
  m.def("betti_elements", [](const Semigroup& s, std::optional<std::size_t> budget) {
    std::vector<std::pair<Int, std::size_t>> out;
    for (const auto& b : betti_elements(s, budget_of(budget))) out.emplace_back(b.element, b.component_count);
    return out;
  }, py::arg("s"), py::arg("budget") = py::none());
  m.def("minimal_presentation_cardinality", [](const Semigroup& s, std::optional<std::size_t> budget) {
    return minimal_presentation_cardinality(s, budget_of(budget));
  }, py::arg("s"), py::arg("budget") = py::none());

  m.def("unbounded_generators", [](Int n, Int e, Int q) { return fam::unbounded_generators({n, e, q}); },
        py::arg("n"), py::arg("e"), py::arg("q"));
  m.def("gamma_s_generators", [](Int e, Int q, Int d) { return fam::gamma_s_generators({e, q, d}); },
        py::arg("e"), py::arg("q"), py::arg("d"));
  m.def("gamma_t_generators", [](Int e, Int q, Int d) { return fam::gamma_t_generators({e, q, d}); },
        py::arg("e"), py::arg("q"), py::arg("d"));
  m.def("bresinsky_generators", [](Int q2) { return fam::bresinsky_generators({q2}); }, py::arg("q2"));
  m.def("eto_colength", [](Int n) { return fam::eto_colength(n); }, py::arg("n"));
  m.def("verify_reduction_identities", &fam::verify_reduction_identities, py::arg("n"));

  m.def("verify_family", [](const std::string& family, std::optional<Int> n, std::optional<Int> e,
                            std::optional<Int> q, std::optional<Int> d, bool ideal,
                            std::optional<std::size_t> budget) {
    const auto b = budget_of(budget);
    switch (family_of(family)) {
      case fam::Family::SymS:
        return checks_of(fam::verify_symmetric_family(fam::SymSParams{e.value_or(4), q.value_or(1), d.value_or(1)}, b));
      case fam::Family::SymT:
        return checks_of(fam::verify_symmetric_family(fam::SymTParams{e.value_or(4), q.value_or(2), d.value_or(1)}, b));
      case fam::Family::Unbounded:
        return checks_of(fam::verify_unbounded_family({n.value_or(5), e.value_or(4), q.value_or(e.value_or(4) - 4)},
                                                      ideal, b));
      case fam::Family::Bresinsky:
        return checks_of(fam::verify_bresinsky_family({q.value_or(4)}, b));
    }
    return py::list{};
  }, py::arg("family"), py::arg("n") = py::none(), py::arg("e") = py::none(), py::arg("q") = py::none(),
     py::arg("d") = py::none(), py::arg("ideal") = false, py::arg("budget") = py::none());
  m.def("verify_ed4_ideal", [](Int n) { return checks_of(fam::verify_ed4_ideal(n)); }, py::arg("n"));

  m.def("scan", [](const std::string& family, const py::object& n, const py::object& e, const py::object& q,
                   const py::object& d, unsigned jobs, std::optional<std::size_t> budget) {
    fam::ScanGrid grid;
    grid.family = family_of(family);
    grid.n = opt_range(n);
    grid.e = opt_range(e);
    grid.q = opt_range(q);
    grid.d = opt_range(d);
    std::vector<fam::ScanRow> rows;
    {
      py::gil_scoped_release release;
      rows = fam::scan(grid, budget_of(budget), jobs);
    }
    py::list out;
    for (const auto& r : rows) out.append(row_of(r));
    return out;
  }, py::arg("family"), py::arg("n") = py::none(), py::arg("e") = py::none(), py::arg("q") = py::none(),
     py::arg("d") = py::none(), py::arg("jobs") = 1, py::arg("budget") = py::none());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

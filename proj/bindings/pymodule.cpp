#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cesaro/expansion.hpp"
#include "cesaro/fixtures.hpp"
#include "cesaro/harness.hpp"
#include "cesaro/io.hpp"
#include "cesaro/jsr.hpp"
#include "cesaro/linrep.hpp"
#include "cesaro/spectral.hpp"

namespace py = pybind11;
using namespace cesaro;

namespace {

// The Python surface works with the complex-scalar representation; rational
// reps are converted on the way in (term values stay exact inside the C++
// core, the bindings only expose double/complex results).
CRep to_crep(const AnyRep& any) {
  if (std::holds_alternative<CRep>(any)) return std::get<CRep>(any);
  const RRep& r = std::get<RRep>(any);
  CRep c;
  c.radix = r.radix;
  c.dim = r.dim;
  c.name = r.name;
  c.eigen_hints = r.eigen_hints;
  c.L = to_complex(r.L);
  c.C = to_complex(r.C);
  for (const RMat& a : r.A) c.A.push_back(to_complex(a));
  return c;
}

std::vector<std::vector<Complex>> mat_to_list(const CMat& m) {
  std::vector<std::vector<Complex>> out;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Complex> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_cesaro, m) {
  m.doc() = "radix-rational sequence analysis";

  py::class_<CRep>(m, "Rep")
      .def_readonly("radix", &CRep::radix)
      .def_readonly("dim", &CRep::dim)
      .def_readonly("name", &CRep::name)
      .def("eval_term",
           [](const CRep& rep, int64_t n) { return eval_term(rep, n); })
      .def("running_sum",
           [](const CRep& rep, int64_t n) {
             return running_sum_value(rep, n, IntegerSumMethod::Brute);
           })
      .def("q", [](const CRep& rep) { return mat_to_list(rep.Q()); });

  m.def("load_rep", [](const std::string& path) { return to_crep(load_rep(path)); });
  m.def("parse_rep", [](const std::string& text) { return to_crep(parse_rep(text)); });

  py::class_<JsrEstimate>(m, "JsrEstimate")
      .def_readonly("lower", &JsrEstimate::lower)
      .def_readonly("upper", &JsrEstimate::upper)
      .def_readonly("T", &JsrEstimate::T)
      .def_readonly("exact", &JsrEstimate::exact)
      .def_readonly("certificate", &JsrEstimate::certificate)
      .def_property_readonly("attained", [](const JsrEstimate& e) {
        switch (e.attained) {
          case Attained::Yes: return "yes";
          case Attained::No: return "no";
          default: return "unknown";
        }
      });

  m.def("jsr_estimate",
        [](const CRep& rep) { return jsr_estimate(rep); });

  m.def("eigenvalues", [](const CRep& rep) {
    EigenStructure es = eigen_structure(rep.Q(), rep.eigen_hints);
    std::vector<std::pair<Complex, int>> out;
    for (size_t i = 0; i < es.values.size(); ++i)
      out.emplace_back(es.values[i], es.multiplicity[i]);
    return out;
  });

  py::class_<IntegerExpansion>(m, "IntegerExpansion")
      .def_property_readonly("terms",
                             [](const IntegerExpansion& e) {
                               std::vector<std::tuple<Complex, Complex, int>> out;
                               for (const ExpansionTerm& t : e.base.terms)
                                 out.emplace_back(t.eigenvalue, t.gamma,
                                                  t.height);
                               return out;
                             })
      .def_property_readonly("error_rate",
                             [](const IntegerExpansion& e) { return e.err.rate; })
      .def("eval", [](const IntegerExpansion& e, int64_t n) {
        CMat v = eval_expansion_integers(e, n);
        std::vector<Complex> out;
        for (int i = 0; i < v.rows(); ++i) out.push_back(v(i, 0));
        return out;
      });

  m.def("expand_integers",
        [](const CRep& rep) { return lrtoae2(rep); });

  // Fixture access for smoke tests.
  m.def("fixture", [](const std::string& name) {
    for (const RRep& r : fixtures::rational_corpus())
      if (r.name == name) return to_crep(AnyRep(r));
    throw Error(ErrorKind::Structural, "unknown fixture: " + name);
  });
  m.def("fixture_json", [](const std::string& name) {
    for (const RRep& r : fixtures::rational_corpus())
      if (r.name == name) return rep_to_json(AnyRep(r));
    throw Error(ErrorKind::Structural, "unknown fixture: " + name);
  });
}

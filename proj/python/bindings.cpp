#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgg/classify.hpp"
#include "hgg/error.hpp"
#include "hgg/io.hpp"

namespace py = pybind11;
using namespace hgg;

namespace {

std::string report_summary(const AxiomReport& r) { return dump(to_json(r)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypergroups over groups";

  static py::exception<Error> error_type(m, "HggError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object code = py::str(std::string(to_string(e.code())));
      PyErr_SetObject(error_type.ptr(), py::make_tuple(code, py::str(e.what())).ptr());
    }
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("name", &FiniteGroup::name)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table", [](const FiniteGroup& g) { return g.table().to_rows(); })
      .def("to_json", [](const FiniteGroup& g) { return dump(to_json(g)); });

  m.def("group_from_spec", [](const std::string& spec) { return group_from_spec(spec); });
  m.def("group_from_table",
        [](const std::vector<std::vector<Elem>>& rows, const std::string& name) {
          return group_from_cayley_table(Table::from_rows(rows), name);
        },
        py::arg("rows"), py::arg("name") = "");
  m.def("subgroups", [](const FiniteGroup& g) {
    std::vector<std::vector<Elem>> out;
    for (const auto& h : enumerate_subgroups(g)) out.push_back(h.elements);
    return out;
  });
  m.def("subgroup_closure",
        [](const FiniteGroup& g, const std::vector<Elem>& gens) { return subgroup_closure(g, gens).elements; });
  m.def("is_normal", [](const FiniteGroup& g, const std::vector<Elem>& h) { return is_normal(g, Subgroup{h}); });
  m.def("transversal_count",
        [](const FiniteGroup& g, const std::vector<Elem>& h) { return transversal_count(g, Subgroup{h}); });
  m.def("transversals", [](const FiniteGroup& g, const std::vector<Elem>& h, std::uint64_t limit) {
    std::vector<std::vector<Elem>> out;
    for (const auto& t : enumerate_transversals(g, Subgroup{h}, limit)) out.push_back(t.reps());
    return out;
  });

  py::class_<HypergroupOverGroup>(m, "Hypergroup")
      .def_readonly("m_size", &HypergroupOverGroup::m_size)
      .def_readonly("o", &HypergroupOverGroup::o)
      .def_property_readonly("h_order", &HypergroupOverGroup::h_order)
      .def_property_readonly("has_ambient", [](const HypergroupOverGroup& hg) { return hg.ambient.has_value(); })
      .def("phi", [](const HypergroupOverGroup& hg, Elem a, Elem al) { return hg.phi(a, al); })
      .def("psi", [](const HypergroupOverGroup& hg, Elem a, Elem al) { return hg.psi(a, al); })
      .def("xi", [](const HypergroupOverGroup& hg, Elem a, Elem b) { return hg.xi(a, b); })
      .def("lam", [](const HypergroupOverGroup& hg, Elem a, Elem b) { return hg.lam(a, b); })
      .def("to_json", [](const HypergroupOverGroup& hg) { return dump(to_json(hg)); })
      .def("same_structure", &HypergroupOverGroup::same_structure);

  m.def("hypergroup_from_json", [](const std::string& text) { return hypergroup_from_json(parse_json(text)); });
  m.def("standard_construction",
        [](const FiniteGroup& g, const std::vector<Elem>& h, const std::vector<Elem>& reps) {
          const Subgroup sub{h};
          HypergroupOverGroup hg = standard_construction(g, sub, reps);
          hg.ambient = Ambient{g, sub, Transversal(g, sub, reps).reps()};
          return hg;
        });
  m.def("verify_axioms", [](const HypergroupOverGroup& hg) { return report_summary(verify_axioms(hg)); },
        "Axiom report as a JSON string");
  m.def("axioms_hold", [](const HypergroupOverGroup& hg) { return verify_axioms(hg).overall; });
  m.def("derived_identities_hold", [](const HypergroupOverGroup& hg) { return check_derived_identities(hg).overall; });
  m.def("quasigroup_divide", &quasigroup_divide);
  m.def("lemma_solve", [](const HypergroupOverGroup& hg, Elem a, Elem b) {
    const auto s = lemma_solve(hg, a, b);
    return py::make_tuple(s.x, s.companion_holds);
  });
  m.def("is_group_quasigroup", &is_group_quasigroup);
  m.def("find_isomorphism", [](const HypergroupOverGroup& a, const HypergroupOverGroup& b) -> py::object {
    auto f = find_isomorphism(a, b);
    if (!f) return py::none();
    return py::make_tuple(f->f0, f->f1);
  });
  m.def("verify_morphism", [](const HypergroupOverGroup& s, const HypergroupOverGroup& t, const std::vector<Elem>& f0,
                              const std::vector<Elem>& f1) { return verify_morphism(s, t, f0, f1).ok; });

  py::class_<FiniteField>(m, "FiniteField")
      .def_property_readonly("order", &FiniteField::order)
      .def_readonly("p", &FiniteField::p)
      .def_readonly("m", &FiniteField::m)
      .def_readonly("name", &FiniteField::name)
      .def("add", &FiniteField::add)
      .def("mul", &FiniteField::mul);
  m.def("field_from_spec", [](const std::string& spec) { return field_from_spec(spec); });
  m.def("functor_group", &functor_group);
  m.def("functor_vector_space", &functor_vector_space);
  m.def("functor_field", &functor_field);
  m.def("reconstruct_field", [](const HypergroupOverGroup& hg, bool strict) {
    const auto r = reconstruct_field(hg, strict);
    py::dict d;
    d["diagnostic"] = to_string(r.diagnostic);
    d["order"] = r.field ? r.field->order() : 0;
    d["is_field_hypergroup"] = r.is_field_hypergroup;
    return d;
  }, py::arg("hg"), py::arg("strict") = true);

  m.def("classify_standard", [](int max_order, std::uint64_t cap, std::uint64_t seed) {
    return catalog_summary_csv(sweep_standard(max_order, cap, seed));
  }, py::arg("max_order"), py::arg("cap") = kTransversalSampleCap, py::arg("seed") = 0);
  m.def("classify_abstract", [](int m_size, const FiniteGroup& h) {
    return enumerate_abstract(m_size, h).class_count();
  });
}

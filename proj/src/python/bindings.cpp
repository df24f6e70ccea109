#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitpre/brauer.hpp"
#include "splitpre/logic/generate.hpp"
#include "splitpre/logic/parser.hpp"
#include "splitpre/logic/translate.hpp"
#include "splitpre/split_preorder.hpp"
#include "splitpre/text.hpp"

namespace py = pybind11;
using namespace splitpre;

namespace {

  using NamePair = std::pair<std::string, std::string>;

  std::vector<NamePair> named(std::vector<NodePair> const& pairs) {
    std::vector<NamePair> out;
    for (auto const& [u, v] : pairs) {
      out.emplace_back(to_string(u), to_string(v));
    }
    return out;
  }

  logic::Fragment fragment_from(std::string const& name) {
    auto f = logic::parse_fragment(name);
    if (!f) {
      throw PreconditionError("unknown fragment '" + name + "'");
    }
    return *f;
  }

  logic::Orientation orientation(bool converse) {
    return converse ? logic::Orientation::target_to_source : logic::Orientation::source_to_target;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Split preorders, their relational representation, and proof equivalence";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<FiniteRelation>(m, "FiniteRelation")
      .def(py::init([](std::size_t size, std::vector<Pair> const& pairs) {
             return FiniteRelation(size, std::span<Pair const>(pairs));
           }),
           py::arg("size"),
           py::arg("pairs") = std::vector<Pair>{})
      .def_property_readonly("size", &FiniteRelation::size)
      .def("pairs", &FiniteRelation::pairs)
      .def("__contains__", [](FiniteRelation const& r, Pair p) { return r.contains(p.first, p.second); })
      .def("__len__", &FiniteRelation::count)
      .def(py::self == py::self)
      .def("__repr__", [](FiniteRelation const& r) {
        return "FiniteRelation(" + std::to_string(r.size()) + ", "
               + py::repr(py::cast(r.pairs())).cast<std::string>() + ")";
      });

  m.def("transitive_closure", &transitive_closure);
  m.def("reflexive_closure", &reflexive_closure);
  m.def("symmetric_closure", &symmetric_closure);
  m.def("strictify", &strictify);
  m.def("is_preorder", &is_preorder);
  m.def("is_equivalence", &is_equivalence);
  m.def("is_strictly_transitive", &is_strictly_transitive);
  m.def("enumerate_preorders", &enumerate_preorders);

  py::class_<SplitPreorder>(m, "SplitPreorder")
      .def_static("from_text", [](std::string const& s) { return text::parse_split_preorder(s); })
      .def("to_text", [](SplitPreorder const& r) { return text::to_text(r); })
      .def("to_dot", [](SplitPreorder const& r) { return text::to_dot(r); })
      .def_property_readonly("src", &SplitPreorder::src)
      .def_property_readonly("tgt", &SplitPreorder::tgt)
      .def("pairs", [](SplitPreorder const& r) { return named(r.pairs()); })
      .def("strict_pairs", [](SplitPreorder const& r) { return named(r.strict_pairs()); })
      .def(py::self == py::self)
      .def("__repr__", [](SplitPreorder const& r) { return text::to_text(r); });

  m.def("identity", &identity, py::arg("n"));
  m.def("compose", &compose, py::arg("p"), py::arg("r"), "p * r for r : m -> n, p : n -> k");
  m.def("converse", py::overload_cast<SplitPreorder const&>(&converse));
  m.def("to_split_equivalence", &to_split_equivalence);
  m.def(
      "from_relation",
      [](std::size_t dom, std::size_t cod, std::vector<Pair> const& pairs) {
        Relation rel(dom, cod);
        for (auto [x, y] : pairs) {
          rel.insert(x, y);
        }
        return from_relation(rel);
      },
      py::arg("dom"),
      py::arg("cod"),
      py::arg("pairs"));
  m.def("enumerate_split_preorders", &enumerate_split_preorders, py::arg("m"), py::arg("n"));

  m.def(
      "repr_arrow",
      [](std::size_t p, SplitPreorder const& r) {
        auto rel = brauer::repr_arrow(cones::Chain(p), r);
        return py::make_tuple(rel.dom(), rel.cod(), rel.pairs());
      },
      py::arg("p"),
      py::arg("r"),
      "(dom, cod, pairs) of the representing relation on base-p codes");
  m.def(
      "verify_functoriality",
      [](std::size_t p, SplitPreorder const& r, SplitPreorder const& q) {
        return bool(brauer::verify_functoriality(cones::Chain(p), r, q));
      },
      py::arg("p"),
      py::arg("r"),
      py::arg("q"));
  m.def(
      "verify_faithfulness",
      [](std::size_t m_, std::size_t n, std::size_t p) {
        auto report = brauer::verify_faithfulness(m_, n, cones::Chain(p));
        py::dict out;
        out["holds"]           = report.holds;
        out["arrows"]          = report.arrows;
        out["distinct_images"] = report.distinct_images;
        return out;
      },
      py::arg("m"),
      py::arg("n"),
      py::arg("p") = 2);

  m.def(
      "g_object",
      [](std::string const& formula) { return logic::g_object(logic::parse_formula(formula)); },
      py::arg("formula"));
  m.def(
      "g_arrow",
      [](std::string const& term, std::string const& fragment, bool converse) {
        return logic::g_arrow(logic::parse_derivation(term, fragment_from(fragment)),
                              orientation(converse));
      },
      py::arg("term"),
      py::arg("fragment") = "units",
      py::arg("converse") = false);
  m.def(
      "endpoints",
      [](std::string const& term) {
        auto d = logic::parse_derivation(term);
        return py::make_tuple(d.source().to_string(), d.target().to_string());
      },
      py::arg("term"));
  m.def(
      "proof_equiv",
      [](std::string const& f, std::string const& g, std::string const& fragment, bool converse) {
        auto frag = fragment_from(fragment);
        return logic::proof_equiv(logic::parse_derivation(f, frag),
                                  logic::parse_derivation(g, frag),
                                  orientation(converse));
      },
      py::arg("f"),
      py::arg("g"),
      py::arg("fragment") = "units",
      py::arg("converse") = false);
  m.def(
      "random_derivation",
      [](std::string const& fragment, unsigned depth, std::uint64_t seed) {
        return logic::random_derivation(fragment_from(fragment), depth, seed).to_string();
      },
      py::arg("fragment"),
      py::arg("max_depth"),
      py::arg("seed"));
}

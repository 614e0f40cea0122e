#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "formcheck/catalog.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/formation.hpp"
#include "formcheck/group_io.hpp"
#include "formcheck/lattice.hpp"
#include "formcheck/subgroups.hpp"
#include "formcheck/subnormal.hpp"
#include "formcheck/verify.hpp"

namespace py = pybind11;
using namespace formcheck;

namespace {
  Formation pick(std::string const& name, std::optional<std::string> const& sigma) {
    std::optional<SigmaPartition> s;
    if (sigma) {
      s = SigmaPartition::parse(*sigma);
    }
    return formation_from_selector(name, s);
  }

  std::vector<Elem> members(Subgroup const& h) {
    return h.members();
  }

  std::vector<std::vector<Elem>> table(Group const& g) {
    std::vector<std::vector<Elem>> t(g.order(), std::vector<Elem>(g.order()));
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) {
        t[a][b] = g.mul(a, b);
      }
    }
    return t;
  }

  Subgroup subgroup_of(Group const& g, std::vector<Elem> const& gens) {
    for (auto x : gens) {
      if (x >= g.order()) {
        throw InvalidArgument("element index out of range");
      }
    }
    return generate(g, std::span<Elem const>(gens));
  }
}

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groups, formations and subnormal chains";

  py::register_exception<Error>(m, "FormcheckError", PyExc_ValueError);

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("label", &Group::label)
      .def_property_readonly("element_orders", &Group::element_orders)
      .def("mul", &Group::mul)
      .def("inv", &Group::inv)
      .def("table", &table)
      .def("dump", &dump_table)
      .def("__repr__", [](Group const& g) {
        return "<Group " + g.label() + " of order " + std::to_string(g.order())
               + ">";
      });

  m.def("group", [](std::string const& s) { return group_from_selector(s); },
        py::arg("selector"));
  m.def("parse_group", [](std::string const& text) { return parse_group_text(text); },
        py::arg("text"));
  m.def("contains", [](Group const& g, std::string const& f,
                       std::optional<std::string> const& sigma) {
          return pick(f, sigma).contains(g);
        },
        py::arg("group"), py::arg("formation"), py::arg("sigma") = py::none());
  m.def("residual", [](Group const& g, std::string const& f,
                       std::optional<std::string> const& sigma) {
          return members(residual(g, pick(f, sigma)));
        },
        py::arg("group"), py::arg("formation"), py::arg("sigma") = py::none());
  m.def("hypercentre", [](Group const& g, std::string const& f,
                          std::optional<std::string> const& sigma) {
          return members(f_hypercentre(g, pick(f, sigma)));
        },
        py::arg("group"), py::arg("formation"), py::arg("sigma") = py::none());
  m.def("normal_subgroups", [](Group const& g) {
          std::vector<std::vector<Elem>> out;
          for (auto const& n : normal_subgroups(g)) {
            out.push_back(n.members());
          }
          return out;
        },
        py::arg("group"));
  m.def("chief_factor_orders", [](Group const& g) {
          return chief_series_through(g, Subgroup::trivial(g.order())).factor_orders();
        },
        py::arg("group"));
  m.def("kf_chain", [](Group const& g, std::vector<Elem> const& gens,
                       std::string const& f, std::optional<std::string> const& sigma)
            -> std::optional<std::string> {
          auto c = is_k_f_subnormal(g, subgroup_of(g, gens), pick(f, sigma));
          if (!c) {
            return std::nullopt;
          }
          return c->to_string();
        },
        py::arg("group"), py::arg("gens"), py::arg("formation"),
        py::arg("sigma") = py::none());
  m.def("verify_json", [](std::string const& claim, std::size_t max_order,
                          std::optional<std::string> const& formation,
                          std::optional<std::string> const& sigma, unsigned threads) {
          RunConfig cfg;
          if (sigma) {
            cfg.sigma = SigmaPartition::parse(*sigma);
          }
          if (formation) {
            cfg.formation = pick(*formation, sigma);
          }
          cfg.opts.threads = threads;
          std::vector<VerificationReport> reports;
          {
            py::gil_scoped_release nogil;
            reports = run_claim(claim, catalog_generate(max_order), cfg);
          }
          return reports_to_json(reports).dump();
        },
        py::arg("claim"), py::arg("max_order") = 24, py::arg("formation") = py::none(),
        py::arg("sigma") = py::none(), py::arg("threads") = 1);
}

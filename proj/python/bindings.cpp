#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "intspec/acceptance.hpp"
#include "intspec/reference.hpp"
#include "intspec/mis.hpp"
#include "intspec/report.hpp"
#include "intspec/specs.hpp"
#include "intspec/spectrum.hpp"

namespace py = pybind11;
using namespace intspec;

namespace {

DensityOptions make_options(const std::string& strategy, std::uint64_t budget, bool symmetry)
{
  DensityOptions o;
  o.strategy = parse_strategy(strategy);
  o.node_budget = budget;
  o.symmetry = symmetry;
  return o;
}

// Reports cross the boundary as JSON text; the package decodes them.
std::string density_json(const std::string& group, const std::string& subgroup, const std::string& strategy,
                         std::uint64_t budget, bool symmetry)
{
  GroupPtr G = parse_group_spec(group);
  const Subgroup H = parse_subgroup_spec(*G, subgroup);
  py::gil_scoped_release release;
  return to_json(intersection_density(G, H, subgroup, make_options(strategy, budget, symmetry))).dump();
}

std::string spectrum_json(const std::string& group, const std::string& strategy, std::uint64_t budget, unsigned threads)
{
  GroupPtr G = parse_group_spec(group);
  py::gil_scoped_release release;
  return to_json(intersection_spectrum(G, make_options(strategy, budget, true), threads)).dump();
}

std::string eigs_json(const std::string& group, const std::string& weighting, const std::string& subgroup)
{
  GroupPtr G = parse_group_spec(group);
  std::optional<Subgroup> H;
  if (!subgroup.empty()) H = parse_subgroup_spec(*G, subgroup);
  return to_json(weighted_spectrum(G, weighting, H ? &*H : nullptr, subgroup)).dump();
}

py::tuple coclique(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                   std::uint64_t budget)
{
  BitGraph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw py::value_error("edge endpoints must be distinct vertices below n");
    g.add_edge(u, v);
  }
  SolveOptions so;
  so.node_budget = budget;
  SolveResult r;
  {
    py::gil_scoped_release release;
    r = max_coclique(g, so);
  }
  return py::make_tuple(r.best, r.witness, r.status == SolveStatus::Optimal);
}

} // namespace

PYBIND11_MODULE(_intspec, m)
{
  m.doc() = "Intersection densities of transitive group actions";
  m.attr("solver_version") = kSolverVersion;

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);

  m.def("density_json", &density_json, py::arg("group"), py::arg("subgroup"), py::arg("strategy") = "auto",
        py::arg("budget") = 100000000, py::arg("symmetry") = true);
  m.def("spectrum_json", &spectrum_json, py::arg("group"), py::arg("strategy") = "auto",
        py::arg("budget") = 100000000, py::arg("threads") = 1);
  m.def("eigs_json", &eigs_json, py::arg("group"), py::arg("weighting"), py::arg("subgroup") = "");
  m.def("agl_density_json",
        [](std::uint32_t n, std::uint32_t q, std::uint32_t i) { return to_json(agl_density_certificate(n, q, i)).dump(); },
        py::arg("n"), py::arg("q"), py::arg("i"));
  m.def("max_coclique", &coclique, py::arg("n"), py::arg("edges"), py::arg("budget") = 100000000,
        "Maximum coclique of a graph on range(n): (size, witness, optimal).");
  m.def(
      "reference_table",
      [](std::uint32_t q) {
        std::vector<std::pair<std::string, std::string>> out;
        if (auto t = reference_table(q))
          for (const auto& [label, rho] : *t) out.emplace_back(label, to_fraction_string(rho));
        return out;
      },
      py::arg("q"));
  m.def(
      "run_acceptance",
      [](const std::vector<int>& ids) {
        std::vector<CriterionResult> res;
        {
          py::gil_scoped_release release;
          res = run_acceptance(ids);
        }
        py::list out;
        for (const auto& r : res) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.pass;
          d["details"] = r.details;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("ids") = std::vector<int>{});
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hornlearn/bench.hpp"
#include "hornlearn/errors.hpp"
#include "hornlearn/formula_io.hpp"
#include "hornlearn/gd_basis.hpp"
#include "hornlearn/generator.hpp"
#include "hornlearn/horn.hpp"
#include "hornlearn/learners.hpp"
#include "hornlearn/oracles.hpp"
#include "hornlearn/reductions.hpp"

namespace py = pybind11;
using namespace hornlearn;

namespace {

HornFormula make_formula(std::size_t arity,
                         const std::vector<std::pair<std::vector<std::size_t>,
                                                     std::vector<std::size_t>>>& rows,
                         std::vector<std::string> names) {
  std::vector<Implication> imps;
  for (const auto& [lhs, rhs] : rows)
    imps.push_back({VarSet::from_indices(arity, lhs), VarSet::from_indices(arity, rhs)});
  return HornFormula(arity, std::move(imps), std::move(names));
}

py::dict stats_dict(const QueryStats& s) {
  py::dict d;
  d["seq"] = s.seq;
  d["cq"] = s.cq;
  d["smq"] = s.smq;
  d["emq"] = s.emq;
  d["eeq"] = s.eeq;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact learning of definite Horn formulas";

  py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
  py::register_exception<FormulaError>(m, "FormulaError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<TeacherError>(m, "TeacherError", PyExc_RuntimeError);

  py::class_<VarSet>(m, "VarSet", "Set of variable indices, also read as an assignment")
      .def(py::init<std::size_t>(), py::arg("arity"))
      .def(py::init([](std::size_t arity, const std::vector<std::size_t>& members) {
             return VarSet::from_indices(arity, members);
           }),
           py::arg("arity"), py::arg("members"))
      .def_static("from_bitstring", &VarSet::from_bitstring)
      .def_static("full", &VarSet::full)
      .def_property_readonly("arity", &VarSet::arity)
      .def("indices", &VarSet::indices)
      .def("to_bitstring", &VarSet::to_bitstring)
      .def("__contains__", &VarSet::contains)
      .def("__len__", &VarSet::count)
      .def("issubset", &VarSet::is_subset_of)
      .def(py::self == py::self)
      .def(py::self & py::self)
      .def(py::self | py::self)
      .def("__hash__", &VarSet::hash)
      .def("__repr__", [](const VarSet& s) { return "VarSet('" + s.to_bitstring() + "')"; });

  py::class_<Implication>(m, "Implication")
      .def(py::init<VarSet, VarSet>(), py::arg("antecedent"), py::arg("consequent"))
      .def_readonly("antecedent", &Implication::antecedent)
      .def_readonly("consequent", &Implication::consequent)
      .def(py::self == py::self);

  py::class_<EntailmentClause>(m, "EntailmentClause")
      .def(py::init<VarSet, std::size_t>(), py::arg("antecedent"), py::arg("head"))
      .def_readonly("antecedent", &EntailmentClause::antecedent)
      .def_readonly("head", &EntailmentClause::head)
      .def(py::self == py::self);

  py::class_<HornFormula>(m, "HornFormula")
      .def(py::init<std::size_t, std::vector<Implication>, std::vector<std::string>>(),
           py::arg("arity"), py::arg("implications") = std::vector<Implication>{},
           py::arg("names") = std::vector<std::string>{})
      .def_static("from_indices", &make_formula, py::arg("arity"), py::arg("rows"),
                  py::arg("names") = std::vector<std::string>{},
                  "Build from [(antecedent indices, consequent indices), ...]")
      .def_property_readonly("arity", &HornFormula::arity)
      .def_property_readonly("names", &HornFormula::names)
      .def_property_readonly("implications",
                             [](const HornFormula& h) {
                               return std::vector<Implication>(h.implications().begin(),
                                                               h.implications().end());
                             })
      .def("__len__", &HornFormula::size)
      .def(py::self == py::self)
      .def("__str__", &serialize_formula);

  m.def("parse_formula", &parse_formula, py::arg("text"));
  m.def("serialize_formula", &serialize_formula, py::arg("formula"));
  m.def("read_formula_file", [](const std::string& p) { return read_formula_file(p); },
        py::arg("path"));

  m.def("closure", py::overload_cast<const VarSet&, const HornFormula&>(&closure),
        py::arg("start"), py::arg("formula"));
  m.def("quasi_closure", &quasi_closure, py::arg("alpha"), py::arg("formula"));
  m.def("subformula_same_class", &subformula_same_class, py::arg("alpha"), py::arg("formula"));
  m.def("satisfies", py::overload_cast<const Assignment&, const HornFormula&>(&satisfies),
        py::arg("x"), py::arg("formula"));
  m.def("entails", py::overload_cast<const HornFormula&, const EntailmentClause&>(&entails),
        py::arg("formula"), py::arg("clause"));
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def("separating_assignment", &separating_assignment, py::arg("a"), py::arg("b"));
  m.def("models", &models, py::arg("formula"), py::arg("limit") = kDefaultBruteForceLimit);
  m.def("is_intersection_closed",
        [](const std::vector<Assignment>& xs) { return is_intersection_closed(xs); });

  m.def("right_saturate", &right_saturate);
  m.def("left_saturate", &left_saturate);
  m.def("remove_redundant", &remove_redundant);
  m.def("gd_basis", &gd_basis);
  m.def("is_saturated", &is_saturated);
  m.def("same_implication_set", &same_implication_set);

  m.def("random_formula",
        [](std::size_t arity, std::size_t implications, std::uint64_t seed,
           std::size_t antecedent_min, std::size_t antecedent_max, std::size_t consequent_min,
           std::size_t consequent_max) {
          GenConfig cfg{arity, implications, antecedent_min, antecedent_max,
                        consequent_min, consequent_max, seed};
          return random_formula(cfg);
        },
        py::arg("arity"), py::arg("implications"), py::arg("seed") = 0,
        py::arg("antecedent_min") = 0, py::arg("antecedent_max") = 2,
        py::arg("consequent_min") = 1, py::arg("consequent_max") = 2);
  m.def("corpus_formula", &corpus_formula, py::arg("name"));
  m.def("example_corpus", &example_corpus);
  m.def("family_member", &family_member, py::arg("x"));

  py::class_<Teacher>(m, "Teacher")
      .def(py::init([](HornFormula target, const std::string& strategy, std::uint64_t seed) {
             return Teacher(std::move(target), CounterexampleStrategy::parse(strategy, seed));
           }),
           py::arg("target"), py::arg("strategy") = "first", py::arg("seed") = 0)
      .def_property_readonly("target", &Teacher::target)
      .def_property_readonly("stats", [](const Teacher& t) { return stats_dict(t.stats()); })
      .def("smq", &Teacher::smq)
      .def("cq", &Teacher::cq)
      .def("emq", &Teacher::emq)
      .def("seq",
           [](Teacher& t, const HornFormula& h) { return t.seq(h).counterexample; },
           "None when equivalent, otherwise a counterexample assignment")
      .def("eeq",
           [](Teacher& t, const HornFormula& h) { return t.eeq(h).counterexample; },
           "None when equivalent, otherwise a counterexample clause");

  m.def("learn",
        [](const HornFormula& target, const std::string& algorithm, const std::string& strategy,
           std::uint64_t seed) {
          Teacher teacher(target, CounterexampleStrategy::parse(strategy, seed));
          LearnerReport r = run_learner(parse_algorithm(algorithm), teacher);
          return py::make_tuple(r.output, stats_dict(teacher.stats()));
        },
        py::arg("target"), py::arg("algorithm") = "clh", py::arg("strategy") = "first",
        py::arg("seed") = 0,
        "Learn `target` with a fresh teacher; returns (formula, query counts)");

  m.def("lower_bound_demo",
        [](std::size_t n) {
          const auto r = lower_bound_demo(n);
          py::dict d;
          d["initial_candidates"] = r.initial_candidates;
          d["queries"] = r.queries;
          d["remaining"] = r.remaining;
          d["invariant_held"] = r.invariant_held;
          d["ruled_out_when_determined"] = r.ruled_out_when_determined;
          return d;
        },
        py::arg("n"));

  m.def("bench_csv",
        [](const std::vector<std::string>& algorithms, std::size_t n_min, std::size_t n_max,
           std::size_t m_min, std::size_t m_max, std::size_t trials, std::uint64_t seed) {
          BenchConfig cfg;
          cfg.algorithms.clear();
          for (const auto& a : algorithms) cfg.algorithms.push_back(parse_algorithm(a));
          cfg.n_min = n_min;
          cfg.n_max = n_max;
          cfg.m_min = m_min;
          cfg.m_max = m_max;
          cfg.trials = trials;
          cfg.seed = seed;
          std::ostringstream out;
          write_bench_csv(out, run_bench(cfg));
          return out.str();
        },
        py::arg("algorithms"), py::arg("n_min"), py::arg("n_max"), py::arg("m_min"),
        py::arg("m_max"), py::arg("trials") = 1, py::arg("seed") = 1);
}

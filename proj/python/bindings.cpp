#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "mia/completion.hpp"
#include "mia/conformance.hpp"
#include "mia/family.hpp"
#include "mia/format.hpp"
#include "mia/model.hpp"
#include "mia/refinement.hpp"
#include "mia/semantics.hpp"

namespace py = pybind11;
using namespace mia;

namespace {

std::vector<std::tuple<std::string, std::string, std::string>> as_tuples(
    const std::vector<Transition>& ts) {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  out.reserve(ts.size());
  for (const Transition& t : ts) out.emplace_back(t.source, t.action, t.target);
  return out;
}

std::vector<Transition> from_tuples(
    const std::vector<std::tuple<std::string, std::string, std::string>>& ts) {
  std::vector<Transition> out;
  out.reserve(ts.size());
  for (const auto& [s, a, d] : ts) out.push_back({s, a, d});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "modal I/O conformance toolkit core";

  py::register_exception<Error>(m, "MiaError");

  py::enum_<Modality>(m, "Modality")
      .value("MUST", Modality::kMust)
      .value("MAY", Modality::kMay);

  py::enum_<ConformanceClause>(m, "Clause")
      .value("CLASSIC", ConformanceClause::kClassic)
      .value("MAY_INCLUSION", ConformanceClause::kMayInclusion)
      .value("MUST_INCLUSION", ConformanceClause::kMustInclusion);

  py::class_<Mia>(m, "Mia")
      .def(py::init([](const std::string& name,
                       const std::vector<std::string>& inputs,
                       const std::vector<std::string>& outputs,
                       const std::vector<std::string>& states,
                       const std::string& initial,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& must,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& may) {
             return Mia(name, Alphabet(inputs, outputs), states, initial,
                        from_tuples(must), from_tuples(may));
           }),
           py::arg("name"), py::arg("inputs"), py::arg("outputs"),
           py::arg("states"), py::arg("initial"), py::arg("must"),
           py::arg("may") = std::vector<
               std::tuple<std::string, std::string, std::string>>{})
      .def_property_readonly("name", &Mia::name)
      .def_property_readonly("states", &Mia::states)
      .def_property_readonly("initial", &Mia::initial)
      .def_property_readonly(
          "inputs", [](const Mia& x) { return x.alphabet().inputs(); })
      .def_property_readonly(
          "outputs", [](const Mia& x) { return x.alphabet().outputs(); })
      .def_property_readonly(
          "must_transitions",
          [](const Mia& x) { return as_tuples(x.must_transitions()); })
      .def_property_readonly(
          "may_transitions",
          [](const Mia& x) { return as_tuples(x.may_transitions()); })
      .def_property_readonly(
          "optional_transitions",
          [](const Mia& x) { return as_tuples(x.optional_transitions()); })
      .def("__eq__", [](const Mia& a, const Mia& b) { return a == b; })
      .def("__repr__", [](const Mia& x) {
        return "<Mia '" + x.name() + "', " +
               std::to_string(x.state_count()) + " states>";
      });

  py::class_<Iolts>(m, "Iolts")
      .def(py::init([](const std::string& name,
                       const std::vector<std::string>& inputs,
                       const std::vector<std::string>& outputs,
                       const std::vector<std::string>& states,
                       const std::string& initial,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& transitions) {
             return Iolts(name, Alphabet(inputs, outputs), states, initial,
                          from_tuples(transitions));
           }),
           py::arg("name"), py::arg("inputs"), py::arg("outputs"),
           py::arg("states"), py::arg("initial"), py::arg("transitions"))
      .def_property_readonly("name", &Iolts::name)
      .def_property_readonly("states", &Iolts::states)
      .def_property_readonly("initial", &Iolts::initial)
      .def_property_readonly(
          "inputs", [](const Iolts& x) { return x.alphabet().inputs(); })
      .def_property_readonly(
          "outputs", [](const Iolts& x) { return x.alphabet().outputs(); })
      .def_property_readonly(
          "transitions",
          [](const Iolts& x) { return as_tuples(x.transitions()); })
      .def("__eq__", [](const Iolts& a, const Iolts& b) { return a == b; })
      .def("__repr__", [](const Iolts& x) {
        return "<Iolts '" + x.name() + "', " +
               std::to_string(x.state_count()) + " states>";
      });

  py::class_<ConformanceWitness>(m, "Witness")
      .def_readonly("trace", &ConformanceWitness::trace)
      .def_readonly("symbol", &ConformanceWitness::symbol)
      .def_readonly("clause", &ConformanceWitness::clause)
      .def_readonly("missing", &ConformanceWitness::missing)
      .def("__repr__", [](const ConformanceWitness& w) {
        return "<Witness '" + trace_to_string(w.trace) + "' symbol '" +
               w.symbol + "' clause " + std::string(clause_name(w.clause)) +
               ">";
      });

  py::class_<ConformanceVerdict>(m, "Verdict")
      .def_readonly("holds", &ConformanceVerdict::holds)
      .def_readonly("witness", &ConformanceVerdict::witness)
      .def_property_readonly(
          "subset_pairs",
          [](const ConformanceVerdict& v) { return v.stats.subset_pairs; })
      .def_property_readonly(
          "max_depth",
          [](const ConformanceVerdict& v) { return v.stats.max_depth; })
      .def("__bool__", [](const ConformanceVerdict& v) { return v.holds; })
      .def("__repr__", [](const ConformanceVerdict& v) {
        return std::string("<Verdict ") + (v.holds ? "holds" : "fails") + ">";
      });

  py::class_<RefinementResult>(m, "RefinementResult")
      .def_readonly("holds", &RefinementResult::holds)
      .def_readonly("relation", &RefinementResult::relation)
      .def_property_readonly(
          "refutation",
          [](const RefinementResult& r) {
            std::vector<std::tuple<std::string, std::string, int, std::string>>
                steps;
            for (const RefinementStep& s : r.refutation)
              steps.emplace_back(s.refined_state, s.abstract_state, s.clause,
                                 s.action);
            return steps;
          })
      .def("__bool__", [](const RefinementResult& r) { return r.holds; });

  py::class_<VariantCheckResult>(m, "VariantCheckResult")
      .def_readonly("holds", &VariantCheckResult::holds)
      .def_readonly("reason", &VariantCheckResult::reason)
      .def("__bool__", [](const VariantCheckResult& r) { return r.holds; });

  py::class_<HarnessReport>(m, "HarnessReport")
      .def_readonly("check", &HarnessReport::check)
      .def_property_readonly(
          "status",
          [](const HarnessReport& r) {
            return std::string(harness_status_name(r.status));
          })
      .def_readonly("variants_checked", &HarnessReport::variants_checked)
      .def_readonly("variant_total", &HarnessReport::variant_total)
      .def_readonly("sampled", &HarnessReport::sampled)
      .def_readonly("note", &HarnessReport::note)
      .def_property_readonly("violation_count",
                             [](const HarnessReport& r) {
                               return r.violations.size();
                             })
      .def("__repr__", [](const HarnessReport& r) {
        return "<HarnessReport " + r.check + " " +
               std::string(harness_status_name(r.status)) + ">";
      });

  py::class_<GeneratorConfig>(m, "GeneratorConfig")
      .def(py::init<>())
      .def_readwrite("seed", &GeneratorConfig::seed)
      .def_readwrite("state_count", &GeneratorConfig::state_count)
      .def_readwrite("input_count", &GeneratorConfig::input_count)
      .def_readwrite("output_count", &GeneratorConfig::output_count)
      .def_readwrite("transition_density", &GeneratorConfig::transition_density)
      .def_readwrite("optional_fraction", &GeneratorConfig::optional_fraction)
      .def_readwrite("ensure_input_enabled",
                     &GeneratorConfig::ensure_input_enabled);

  m.def(
      "load",
      [](const std::string& path) -> py::object {
        auto model = load_model(path);
        if (std::holds_alternative<Mia>(model))
          return py::cast(std::get<Mia>(model));
        return py::cast(std::get<Iolts>(model));
      },
      py::arg("path"), "Load a model file (mia or iolts header)");
  m.def("load_mia", &load_mia, py::arg("path"),
        "Load as MIA; iolts files are embedded with must = may");
  m.def("load_iolts", &load_iolts, py::arg("path"));
  m.def(
      "serialize",
      [](py::object model) {
        if (py::isinstance<Mia>(model))
          return serialize(model.cast<const Mia&>());
        return serialize(model.cast<const Iolts&>());
      },
      py::arg("model"));

  m.def("embed_iolts", &embed_iolts, py::arg("p"));
  m.def("famlts", &famlts, py::arg("q"));
  m.def(
      "is_input_enabled",
      [](py::object model) {
        InputEnabledness ie = py::isinstance<Mia>(model)
                                  ? is_input_enabled(model.cast<const Mia&>())
                                  : is_input_enabled(model.cast<const Iolts&>());
        return py::make_tuple(ie.enabled, ie.missing);
      },
      py::arg("model"),
      "Returns (enabled, [(state, missing input), ...])");

  m.def("init_actions",
        py::overload_cast<const Mia&, std::string_view, Modality>(
            &init_actions),
        py::arg("m"), py::arg("state"), py::arg("gamma"));
  m.def("init_actions",
        py::overload_cast<const Iolts&, std::string_view>(&init_actions),
        py::arg("m"), py::arg("state"));
  m.def("is_quiescent",
        py::overload_cast<const Mia&, std::string_view, Modality>(
            &is_quiescent),
        py::arg("m"), py::arg("state"), py::arg("gamma"));
  m.def("is_quiescent",
        py::overload_cast<const Iolts&, std::string_view>(&is_quiescent),
        py::arg("m"), py::arg("state"));
  m.def("after",
        py::overload_cast<const Mia&, const std::vector<std::string>&,
                          const Trace&, Modality>(&after),
        py::arg("m"), py::arg("sources"), py::arg("sigma"), py::arg("gamma"));
  m.def("after",
        py::overload_cast<const Iolts&, const std::vector<std::string>&,
                          const Trace&>(&after),
        py::arg("m"), py::arg("sources"), py::arg("sigma"));
  m.def("after_initial",
        py::overload_cast<const Mia&, const Trace&, Modality>(&after_initial),
        py::arg("m"), py::arg("sigma"), py::arg("gamma"));
  m.def("after_initial",
        py::overload_cast<const Iolts&, const Trace&>(&after_initial),
        py::arg("m"), py::arg("sigma"));
  m.def("out_set",
        py::overload_cast<const Mia&, const std::vector<std::string>&,
                          Modality>(&out_set),
        py::arg("m"), py::arg("states"), py::arg("gamma"));
  m.def("out_set",
        py::overload_cast<const Iolts&, const std::vector<std::string>&>(
            &out_set),
        py::arg("m"), py::arg("states"));
  m.def(
      "straces",
      [](const Mia& x, Modality gamma, int depth) {
        return enumerate_straces(x, gamma, depth);
      },
      py::arg("m"), py::arg("gamma"), py::arg("depth") = -1);
  m.def(
      "straces",
      [](const Iolts& x, int depth) { return enumerate_straces(x, depth); },
      py::arg("m"), py::arg("depth") = -1);
  m.def("is_strace",
        py::overload_cast<const Mia&, const Trace&, Modality>(&is_strace),
        py::arg("m"), py::arg("sigma"), py::arg("gamma"));
  m.def("is_strace", py::overload_cast<const Iolts&, const Trace&>(&is_strace),
        py::arg("m"), py::arg("sigma"));
  m.def("parse_trace", &parse_trace, py::arg("text"));

  m.def("refines", &mia_refines, py::arg("p"), py::arg("q"),
        "Greatest-fixpoint decision of p <= q");
  m.def("is_variant_of", &is_variant_of, py::arg("p"), py::arg("q"),
        py::arg("up_to_iso") = false);
  m.def("lemma1_trace_lifting",
        [](const Iolts& p, const Mia& q, int depth) {
          TraceLiftResult r = check_lemma1_trace_lifting(p, q, depth);
          return py::make_tuple(r.holds, r.counterexample);
        },
        py::arg("p"), py::arg("q"), py::arg("depth"));

  m.def(
      "ioco", [](const Iolts& i, const Iolts& s) { return ioco_check(i, s); },
      py::arg("impl"), py::arg("spec"));
  m.def(
      "mioco", [](const Mia& i, const Mia& s) { return mioco_check(i, s); },
      py::arg("impl"), py::arg("spec"));
  m.def(
      "mior", [](const Mia& i, const Mia& s) { return mior_check(i, s); },
      py::arg("impl"), py::arg("spec"));
  m.def(
      "family_ioco",
      [](const Iolts& v, const Mia& s) { return family_ioco_check(v, s); },
      py::arg("variant"), py::arg("spec"));

  m.def("angelic_completion", &angelic_completion, py::arg("m"));
  m.def("chaotic_completion", &chaotic_completion, py::arg("m"));

  m.def("random_mia", &random_mia, py::arg("config"));
  m.def("resolve_refinement", &resolve_refinement, py::arg("q"),
        py::arg("seed"));
  m.def(
      "variants",
      [](const Mia& q, std::uint64_t cap) {
        VariantSet vs(q);
        bool truncated = false;
        std::vector<Iolts> out;
        for (const auto& mask : vs.enumerate_masks(cap, &truncated))
          out.push_back(vs.variant(mask));
        return py::make_tuple(out, vs.count_string(), truncated);
      },
      py::arg("q"), py::arg("cap") = 4096,
      "Returns (variants, exact total as string, truncated flag)");

  m.def("verify_soundness", &verify_soundness, py::arg("i"), py::arg("s"),
        py::arg("cap") = 4096, py::arg("sample_seed") = 0);
  m.def("verify_completeness_1", &verify_completeness_I, py::arg("i"),
        py::arg("s"), py::arg("cap") = 4096, py::arg("sample_seed") = 0);
  m.def("verify_completeness_2", &verify_completeness_II, py::arg("i"),
        py::arg("s"), py::arg("cap") = 4096, py::arg("sample_seed") = 0);
  m.def("verify_prop2", &verify_prop2, py::arg("i"), py::arg("s"),
        py::arg("resolve_seed") = 1);
}

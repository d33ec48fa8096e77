#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sweff/assignment.hpp"
#include "sweff/cone.hpp"
#include "sweff/errors.hpp"
#include "sweff/pareto.hpp"
#include "sweff/report.hpp"
#include "sweff/sd.hpp"
#include "sweff/sw.hpp"

namespace py = pybind11;
using namespace sweff;

namespace {

py::object fraction(const Rational& x) {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(x));
}

Rational rational_from(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

// Lotteries arrive as "a:1/2 b:1/2" or as {name: probability}.
Lottery lottery_from(const py::object& value, const PreferenceProfile& profile) {
  if (py::isinstance<py::str>(value)) return parse_lottery(value.cast<std::string>(), profile);
  std::vector<Rational> probs(profile.alternatives(), 0);
  for (const auto& [key, prob] : value.cast<py::dict>()) {
    const auto name = key.cast<std::string>();
    const auto id = profile.find(name);
    if (!id) throw ValidationError("unknown alternative '" + name + "'");
    probs[*id] = rational_from(prob);
  }
  return Lottery(std::move(probs));
}

py::dict lottery_dict(const Lottery& p, const PreferenceProfile& profile) {
  py::dict out;
  for (AlternativeId a : p.support()) out[py::str(profile.name(a))] = fraction(p[a]);
  return out;
}

py::list utilities_list(const UtilityProfile& u) {
  py::list rows;
  for (const auto& row : u.rows()) {
    py::list r;
    for (const auto& x : row) r.append(fraction(x));
    rows.append(r);
  }
  return rows;
}

AlternativeId alternative(const PreferenceProfile& profile, const std::string& name) {
  const auto id = profile.find(name);
  if (!id) throw ValidationError("unknown alternative '" + name + "'");
  return *id;
}

std::vector<std::string> names_of(const AlternativeSet& set, const PreferenceProfile& profile) {
  std::vector<std::string> out;
  for (AlternativeId a : set) out.push_back(profile.name(a));
  return out;
}

}  // namespace

PYBIND11_MODULE(_sweff, m) {
  m.doc() = "Exact efficiency analysis of lotteries over alternatives";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InternalDisagreement>(m, "InternalDisagreement", PyExc_RuntimeError);

  py::class_<PreferenceProfile>(m, "Profile")
      .def_static("parse", [](const std::string& text) { return parse_profile(text); })
      .def_property_readonly("agents", &PreferenceProfile::agents)
      .def_property_readonly("alternatives", &PreferenceProfile::names)
      .def("to_text", &PreferenceProfile::to_text)
      .def("pareto_optimal",
           [](const PreferenceProfile& p) { return names_of(pareto_optimal_set(p), p); })
      .def("dominated",
           [](const PreferenceProfile& p, const std::string& a) {
             return names_of(dominated_set(alternative(p, a), p), p);
           })
      .def("pareto_compare",
           [](const PreferenceProfile& p, const std::string& a, const std::string& b) {
             return std::string(to_string(pareto_compare(alternative(p, a), alternative(p, b), p)));
           })
      .def("has_pareto_indifferent_pair",
           [](const PreferenceProfile& p) { return has_pareto_indifferent_pair(p); })
      .def("__eq__", [](const PreferenceProfile& l, const PreferenceProfile& r) { return l == r; })
      .def("__repr__", [](const PreferenceProfile& p) { return "Profile(" + py::repr(py::str(p.to_text())).cast<std::string>() + ")"; });

  m.def("parse_lottery", [](const std::string& text, const PreferenceProfile& profile) {
    return lottery_dict(parse_lottery(text, profile), profile);
  });

  m.def("is_degenerate", [](const PreferenceProfile& profile, const py::object& p) {
    return is_degenerate(lottery_from(p, profile));
  });
  m.def("is_interesting", [](const PreferenceProfile& profile, const py::object& p) {
    return is_interesting(lottery_from(p, profile), profile);
  });
  m.def("ex_post_efficient", [](const PreferenceProfile& profile, const py::object& p) {
    return ex_post_efficient(lottery_from(p, profile), profile);
  });

  m.def(
      "sd_efficient",
      [](const PreferenceProfile& profile, const py::object& p) {
        const auto r = sd_efficient(lottery_from(p, profile), profile);
        py::object witness = py::none();
        if (r.witness) witness = lottery_dict(*r.witness, profile);
        return py::make_tuple(r.efficient, witness);
      },
      "(efficient, dominating lottery or None)");
  m.def("sd_dominates",
        [](const PreferenceProfile& profile, const py::object& q, const py::object& p) {
          return sd_dominates(lottery_from(q, profile), lottery_from(p, profile), profile);
        });

  m.def("sw_efficient", [](const PreferenceProfile& profile, const py::object& p) {
    return sw_efficient(lottery_from(p, profile), profile);
  });
  m.def(
      "sw_efficient_by_enumeration",
      [](const PreferenceProfile& profile, const py::object& p, std::size_t cap) {
        const auto r = sw_efficient_by_enumeration(lottery_from(p, profile), profile, cap);
        py::object support = py::none();
        if (r.dominating_support) support = py::cast(names_of(*r.dominating_support, profile));
        return py::make_tuple(r.efficient, support);
      },
      py::arg("profile"), py::arg("lottery"), py::arg("cap") = kDefaultEnumerationCap,
      "(efficient, first dominating support or None)");
  m.def("sw_dominates",
        [](const PreferenceProfile& profile, const py::object& q, const py::object& p) {
          return sw_dominates(lottery_from(q, profile), lottery_from(p, profile), profile);
        });

  m.def("separating_utilities", [](const PreferenceProfile& profile, const std::string& a) {
    return utilities_list(separating_utilities(alternative(profile, a), profile));
  });

  m.def(
      "check",
      [](const PreferenceProfile& profile, const py::object& p, bool strict, std::size_t cap) {
        const AnalysisOptions options{cap, strict ? ConsistencyMode::Strict : ConsistencyMode::Weak};
        const auto json = to_json(run_check(profile, lottery_from(p, profile), options));
        return py::module_::import("json").attr("loads")(json);
      },
      py::arg("profile"), py::arg("lottery"), py::arg("strict_consistency") = false,
      py::arg("enumeration_cap") = kDefaultEnumerationCap,
      "Full report as a dict, in the CLI's JSON schema");

  m.def(
      "lift_assignment",
      [](const std::string& text) {
        const auto instance = parse_assignment_instance(text);
        std::vector<std::string> described;
        for (const auto& a : enumerate_assignments(instance)) described.push_back(describe(a, instance));
        return py::make_tuple(lift_profile(instance), described);
      },
      "(lifted profile over M1, M2, ..., description of each assignment)");
  m.def("corollary_check", [](const std::string& text, const py::object& p) {
    const auto instance = parse_assignment_instance(text);
    return corollary_check(instance, lottery_from(p, lift_profile(instance)));
  });
}

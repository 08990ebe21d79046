#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphanti/anticanon.hpp"
#include "sphanti/catalog.hpp"
#include "sphanti/datum_io.hpp"
#include "sphanti/error.hpp"
#include "sphanti/knoplie.hpp"
#include "sphanti/lunatypes.hpp"

namespace py = pybind11;
using namespace sphanti;

namespace {

// Rationals cross the boundary as strings ("p" or "p/q").
std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector from_strings(const std::vector<std::string>& v) {
  Vector out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

RootSet subset_from_names(const RootSystem& rs, const std::vector<std::string>& names) {
  RootSet out;
  for (const auto& n : names) out.insert(rs.root_index(n));
  return out;
}

std::vector<std::string> names_of(const RootSystem& rs, const RootSet& set) {
  std::vector<std::string> out;
  for (auto i : set) out.push_back(rs.root_name(i));
  return out;
}

py::dict weight_dict(const Weight& w) {
  py::dict d;
  d["fund"] = to_strings(w.fund);
  d["central"] = to_strings(w.central);
  return d;
}

py::list report_list(const Report& report) {
  py::list out;
  for (const auto& f : report) {
    py::dict d;
    d["check"] = f.check;
    d["subject"] = f.subject;
    d["expected"] = f.expected;
    d["actual"] = f.actual;
    d["pass"] = f.pass;
    out.append(d);
  }
  return out;
}

py::dict positive_roots(const std::string& spec, const std::optional<std::vector<std::string>>& subset) {
  const RootSystem rs(parse_root_system_spec(spec));
  const RootSet set = subset ? subset_from_names(rs, *subset) : rs.all_simple();
  py::list roots;
  for (const auto& r : rs.positive_roots(set)) roots.append(r.simple_coeffs);
  py::dict d;
  d["roots"] = roots;
  d["rho"] = weight_dict(rs.rho(set));
  d["two_rho"] = rs.two_rho(set);
  return d;
}

py::dict kappa_of(const std::string& spec, const std::vector<std::string>& sp) {
  const RootSystem rs(parse_root_system_spec(spec));
  return weight_dict(kappa(rs, subset_from_names(rs, sp)));
}

SphericalDatum datum_from_catalog(const std::string& key, std::optional<int> n) { return builtin(key, n).datum; }

std::vector<std::optional<std::string>> types(const SphericalDatum& d, const std::string& method) {
  std::vector<std::optional<std::string>> out;
  for (const auto& c : d.colors) {
    std::optional<ColorType> t;
    if (method == "luna")
      t = classify_luna(d, c);
    else if (method == "knop")
      t = classify_knop(d, c);
    else if (method == "resolved")
      t = resolved_type(d, c);
    else
      throw std::invalid_argument("method must be luna, knop or resolved");
    out.push_back(t ? std::optional<std::string>(std::string(to_string(*t))) : std::nullopt);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> enumerate(const SphericalDatum& d, std::int64_t bound) {
  std::vector<Weight> chis;
  for (const auto& c : d.colors) {
    if (!c.chi) throw InsufficientData("color " + c.name + " has no chi");
    chis.push_back(*c.chi);
  }
  return enumerate_positive_solutions(kappa(d.rs, d.sp), chis, bound);
}

Coweight coweight_from(const SphericalDatum& d, const std::vector<std::string>& v) {
  if (v.size() != d.rs.rank() + d.rs.central_rank()) throw std::invalid_argument("coweight has the wrong length");
  const Vector flat = from_strings(v);
  Coweight cw;
  cw.fund.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(d.rs.rank()));
  cw.central.assign(flat.begin() + static_cast<std::ptrdiff_t>(d.rs.rank()), flat.end());
  return cw;
}

}  // namespace

PYBIND11_MODULE(_sphanti, m) {
  m.doc() = "Anticanonical divisors and color types of spherical homogeneous spaces";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InsufficientData>(m, "InsufficientData");
  py::register_exception<DatumInconsistency>(m, "DatumInconsistency");

  m.def("positive_roots", &positive_roots, py::arg("spec"), py::arg("subset") = py::none(),
        "Positive roots (simple coefficients), rho_I and 2 rho_I of a root system.");
  m.def("kappa", &kappa_of, py::arg("spec"), py::arg("sp"), "2 rho_S - 2 rho_Sp in fundamental coordinates.");

  py::class_<SphericalDatum>(m, "Datum")
      .def_static("from_json", [](const std::string& text) { return parse_datum(text); }, py::arg("text"))
      .def_static("from_catalog", &datum_from_catalog, py::arg("key"), py::arg("n") = py::none())
      .def("to_json", &serialize_datum)
      .def_property_readonly("root_system", [](const SphericalDatum& d) { return d.rs.spec().to_string(); })
      .def_property_readonly("sp", [](const SphericalDatum& d) { return names_of(d.rs, d.sp); })
      .def_property_readonly("colors", [](const SphericalDatum& d) {
        std::vector<std::string> out;
        for (const auto& c : d.colors) out.push_back(c.name);
        return out;
      })
      .def("kappa", [](const SphericalDatum& d) { return weight_dict(kappa(d.rs, d.sp)); })
      .def("types", &types, py::arg("method") = "resolved")
      .def("coefficients", [](const SphericalDatum& d) { return anticanonical_divisor(d).coefficients(); })
      .def("divisor", [](const SphericalDatum& d) { return anticanonical_divisor(d).to_string(); })
      .def("verify_decomposition", &verify_decomposition)
      .def("enumerate_positive_solutions", &enumerate, py::arg("bound") = 10)
      .def("validate", [](const SphericalDatum& d) { return report_list(validate_datum(d)); })
      .def("audit_pairings", [](const SphericalDatum& d) { return report_list(audit_pairings(d)); })
      .def("valuation_cone", [](const SphericalDatum& d) {
        py::list out;
        for (const auto& s : valuation_cone(d).halfspaces) out.append(weight_dict(s));
        return out;
      })
      .def("cone_contains",
           [](const SphericalDatum& d, const std::vector<std::string>& v) {
             return cone_contains(valuation_cone(d), coweight_from(d, v));
           },
           py::arg("v"))
      .def("uniqueness_certificate", [](const SphericalDatum& d) {
        const auto cert = uniqueness_certificate(d);
        py::dict out;
        out["holds"] = cert.holds;
        out["witness"] = to_strings(flatten(cert.witness));
        return out;
      })
      .def("__repr__", [](const SphericalDatum& d) {
        return "<Datum " + d.rs.spec().to_string() + ", " + std::to_string(d.colors.size()) + " colors>";
      });

  m.def("catalog_keys", [] {
    std::vector<std::string> out;
    for (const auto& k : catalog_keys()) out.push_back(k.key);
    return out;
  });
}

#include "sphanti/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sphanti/anticanon.hpp"
#include "sphanti/catalog.hpp"
#include "sphanti/datum_io.hpp"
#include "sphanti/error.hpp"
#include "sphanti/knoplie.hpp"
#include "sphanti/lunatypes.hpp"

namespace sphanti::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    const auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) s += "  ";
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
      }
      out << s << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
  }
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

template <typename Int>
std::string format_ints(const std::vector<Int>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string format_weight(const Weight& w) {
  std::string s = format_vector(w.fund);
  if (!w.central.empty()) s += " + central" + format_vector(w.central);
  return s;
}

std::string format_roots(const RootSystem& rs, const RootSet& set) {
  std::vector<std::string> names;
  for (auto i : set) names.push_back(rs.root_name(i));
  return "{" + join(names, ",") + "}";
}

json roots_json(const RootSystem& rs, const RootSet& set) {
  json arr = json::array();
  for (auto i : set) arr.push_back(rs.root_name(i));
  return arr;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_report(std::ostream& out, const Report& report) {
  Table t{{"check", "subject", "expected", "actual", "result"}, {}};
  for (const auto& f : report) t.rows.push_back({f.check, f.subject, f.expected, f.actual, f.pass ? "pass" : "FAIL"});
  t.print(out);
}

struct DatumSource {
  std::string source;
  std::optional<int> n;
};

SphericalDatum load_datum(const DatumSource& src) {
  constexpr std::string_view prefix = "catalog:";
  if (src.source.starts_with(prefix)) {
    try {
      return builtin(std::string_view(src.source).substr(prefix.size()), src.n).datum;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (src.n) throw UsageError("--n only applies to catalog:<key> sources");
  std::ifstream in(src.source);
  if (!in) throw UsageError("cannot open datum file '" + src.source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_datum(buffer.str());
}

// ---- subcommands ----

int cmd_roots(const std::string& spec_text, const std::string& subset_text, bool as_json, std::ostream& out) {
  RootSystemSpec spec;
  try {
    spec = parse_root_system_spec(spec_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const RootSystem rs(spec);
  RootSet subset;
  if (subset_text.empty()) {
    subset = rs.all_simple();
  } else {
    for (const auto& name : split(subset_text, ',')) {
      try {
        subset.insert(rs.root_index(name));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  const auto roots = rs.positive_roots(subset);
  const auto twice = rs.two_rho(subset);
  const Weight rho = rs.rho(subset);
  if (as_json) {
    json j;
    j["root_system"] = spec.to_string();
    j["subset"] = roots_json(rs, subset);
    j["positive_roots"] = json::array();
    for (const auto& r : roots) j["positive_roots"].push_back({{"coeffs", r.simple_coeffs}, {"weight", weight_to_json(r.as_weight)}});
    j["rho"] = weight_to_json(rho);
    j["two_rho"] = twice;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "root system " << spec.to_string() << ", I = " << format_roots(rs, subset) << ", " << roots.size()
      << " positive roots\n";
  Table t{{"height", "simple coefficients", "fundamental coordinates"}, {}};
  for (const auto& r : roots)
    t.rows.push_back({std::to_string(r.height()), format_ints(r.simple_coeffs), format_vector(r.as_weight.fund)});
  t.print(out);
  out << "rho_I   = " << format_vector(rho.fund) << '\n';
  out << "2 rho_I = " << format_ints(twice) << '\n';
  return kExitOk;
}

int cmd_kappa(const SphericalDatum& d, bool as_json, std::ostream& out) {
  const Weight k = kappa(d.rs, d.sp);
  if (as_json) {
    out << json{{"Sp", roots_json(d.rs, d.sp)}, {"kappa", weight_to_json(k)}}.dump(2) << '\n';
  } else {
    out << "Sp      = " << format_roots(d.rs, d.sp) << '\n';
    out << "kappa_P = " << format_vector(k.fund) << '\n';
  }
  return kExitOk;
}

int cmd_types(const SphericalDatum& d, const std::string& method, bool as_json, std::ostream& out) {
  const bool want_luna = method == "luna" || method == "both";
  const bool want_knop = method == "knop" || method == "both";
  if (want_knop && !d.presentation) throw InsufficientData("Lie-algebra types need a presentation; datum has none");

  json jcolors = json::array();
  Table t{{"color", "moved_by"}, {}};
  if (want_luna) t.header.push_back("luna");
  if (want_knop) t.header.push_back("knop");
  if (method == "both") t.header.push_back("agree");
  bool all_agree = true;
  for (const auto& c : d.colors) {
    json jc{{"name", c.name}, {"moved_by", roots_json(d.rs, c.moved_by)}};
    std::vector<std::string> row{c.name, format_roots(d.rs, c.moved_by)};
    std::optional<ColorType> reference;
    if (want_luna) {
      std::string cell;
      if (d.spherical_roots) {
        reference = classify_luna(d, c);
        cell = std::string(to_string(*reference));
        jc["luna_source"] = "spherical_roots";
      } else if (c.declared_type) {
        reference = c.declared_type;
        cell = std::string(to_string(*reference)) + " (declared)";
        jc["luna_source"] = "declared";
      } else {
        cell = "?";
        jc["luna_source"] = nullptr;
      }
      jc["luna"] = reference ? json(std::string(to_string(*reference))) : json(nullptr);
      row.push_back(cell);
    }
    if (want_knop) {
      std::optional<ColorType> knop;
      json detail = json::array();
      for (auto a : c.moved_by) {
        const auto v = classify_knop(d, c, a);
        detail.push_back({{"root", d.rs.root_name(a)},
                          {"image", std::string(to_string(v.image.cls))},
                          {"resolved_by", v.resolved_by},
                          {"type", v.type ? json(std::string(to_string(*v.type))) : json(nullptr)}});
      }
      try {
        knop = classify_knop(d, c);
      } catch (const InsufficientData&) {
      }
      jc["knop"] = knop ? json(std::string(to_string(*knop))) : json(nullptr);
      jc["knop_detail"] = detail;
      row.push_back(knop ? std::string(to_string(*knop)) : "?");
      if (method == "both") {
        const bool agree = knop && reference && *knop == *reference;
        all_agree = all_agree && agree;
        jc["agree"] = agree;
        row.push_back(agree ? "yes" : "NO");
      }
    }
    jcolors.push_back(std::move(jc));
    t.rows.push_back(std::move(row));
  }
  if (as_json) {
    json j{{"method", method}, {"colors", jcolors}};
    if (method == "both") j["all_agree"] = all_agree;
    out << j.dump(2) << '\n';
  } else {
    t.print(out);
    if (method == "both") out << (all_agree ? "all colors agree\n" : "DISAGREEMENT between the two definitions\n");
  }
  return all_agree ? kExitOk : kExitInconsistent;
}

int cmd_antican(const SphericalDatum& d, bool as_json, std::ostream& out) {
  const auto div = anticanonical_divisor(d);
  const Weight k = kappa(d.rs, d.sp);
  if (as_json) {
    json cs = json::array();
    for (std::size_t i = 0; i < d.colors.size(); ++i)
      cs.push_back({{"name", div.color_coeffs[i].first},
                    {"type", std::string(to_string(*resolved_type(d, d.colors[i])))},
                    {"m", div.color_coeffs[i].second}});
    out << json{{"kappa", weight_to_json(k)},
                {"colors", cs},
                {"boundary_count", div.boundary_count},
                {"boundary_coeff", div.boundary_coeff},
                {"divisor", div.to_string()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "kappa_P = " << format_vector(k.fund) << '\n';
  Table t{{"color", "type", "m"}, {}};
  for (std::size_t i = 0; i < d.colors.size(); ++i)
    t.rows.push_back({div.color_coeffs[i].first, std::string(to_string(*resolved_type(d, d.colors[i]))),
                      std::to_string(div.color_coeffs[i].second)});
  t.print(out);
  out << "m = " << format_ints(div.coefficients()) << '\n';
  out << "Div s = " << div.to_string() << '\n';
  return kExitOk;
}

int cmd_verify(const SphericalDatum& d, std::int64_t bound, bool as_json, std::ostream& out) {
  Report report;
  const bool have_chi = std::all_of(d.colors.begin(), d.colors.end(), [](const ColorRecord& c) { return c.chi.has_value(); });
  const auto div = anticanonical_divisor(d);
  const auto closed_form = div.coefficients();
  if (have_chi) {
    const bool ok = verify_decomposition(d);
    report.push_back({"decomposition", "kappa_P = sum m_i chi_i", "true", ok ? "true" : "false", ok});
    std::vector<Weight> chis;
    for (const auto& c : d.colors) chis.push_back(*c.chi);
    if (chis.size() <= kMaxEnumerationColors) {
      const auto sols = enumerate_positive_solutions(kappa(d.rs, d.sp), chis, bound);
      std::vector<std::string> shown;
      for (const auto& s : sols) shown.push_back(format_ints(s));
      const bool unique = sols.size() == 1 && sols.front() == closed_form;
      report.push_back({"unique_positive_solution", "m in [1," + std::to_string(bound) + "]^k",
                        "{" + format_ints(closed_form) + "}", "{" + join(shown, ", ") + "}", unique});
    }
  }
  for (auto& f : audit_pairings(d)) report.push_back(std::move(f));
  if (d.presentation) {
    for (auto& f : check_presentation(*d.presentation, d.rs)) report.push_back(std::move(f));
    const bool open = open_orbit_check(*d.presentation);
    report.push_back({"open_orbit", "b + h", "= g", open ? "= g" : "!= g", open});
    if (open && all_pass(check_presentation(*d.presentation, d.rs)))
      for (auto& f : audit_images(d)) report.push_back(std::move(f));
  }
  if (d.spherical_roots && d.lattice_m) {
    const auto cert = uniqueness_certificate(d);
    report.push_back({"uniqueness_certificate", "valuation cone", "full-dimensional",
                      cert.holds ? "full-dimensional, witness " + format_vector(flatten(cert.witness)) : "degenerate",
                      cert.holds});
  }
  if (as_json)
    out << json{{"findings", report_to_json(report)}, {"pass", all_pass(report)}}.dump(2) << '\n';
  else
    print_report(out, report);
  return all_pass(report) ? kExitOk : kExitInconsistent;
}

int cmd_cone(const SphericalDatum& d, const std::string& contains, bool as_json, std::ostream& out) {
  const auto cone = valuation_cone(d);
  json j{{"halfspaces", json::array()}};
  for (const auto& s : cone.halfspaces) j["halfspaces"].push_back(weight_to_json(s));
  std::optional<Coweight> v;
  if (!contains.empty()) {
    json arr = json::array();
    for (const auto& part : split(contains, ',')) arr.push_back(part);
    try {
      v = coweight_from_json(arr, d.rs, "--contains");
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  if (as_json) {
    if (v) {
      j["point"] = coweight_to_json(*v);
      j["pairings"] = json::array();
      for (const auto& s : cone.halfspaces) j["pairings"].push_back(rational_to_json(pair(*v, s)));
      j["contains"] = cone_contains(cone, *v);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "V = { v : <v, sigma> <= 0 for each sigma below }";
  if (cone.halfspaces.empty()) out << " = all of N_Q";
  out << '\n';
  Table t{{"sigma"}, {}};
  if (v) t.header.push_back("<v, sigma>");
  for (const auto& s : cone.halfspaces) {
    std::vector<std::string> row{format_weight(s)};
    if (v) row.push_back(to_string(pair(*v, s)));
    t.rows.push_back(std::move(row));
  }
  if (!t.rows.empty()) t.print(out);
  if (v) out << "contains " << format_vector(flatten(*v)) << ": " << (cone_contains(cone, *v) ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_validate(const SphericalDatum& d, bool as_json, std::ostream& out) {
  Report report = validate_datum(d);
  if (d.presentation) {
    for (auto& f : check_presentation(*d.presentation, d.rs)) report.push_back(std::move(f));
    const bool open = open_orbit_check(*d.presentation);
    report.push_back({"open_orbit", "b + h", "= g", open ? "= g" : "!= g", open});
  }
  if (as_json)
    out << json{{"findings", report_to_json(report)}, {"pass", all_pass(report)}}.dump(2) << '\n';
  else
    print_report(out, report);
  return all_pass(report) ? kExitOk : kExitInconsistent;
}

int cmd_catalog_list(bool as_json, std::ostream& out) {
  if (as_json) {
    json arr = json::array();
    for (const auto& k : catalog_keys()) {
      json jk{{"key", k.key}, {"description", k.description}, {"parametric", k.parametric}};
      if (k.parametric) jk["range"] = {k.min_param, k.max_param};
      arr.push_back(jk);
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  Table t{{"key", "--n", "description"}, {}};
  for (const auto& k : catalog_keys())
    t.rows.push_back({k.key, k.parametric ? std::to_string(k.min_param) + ".." + std::to_string(k.max_param) : "-",
                      k.description});
  t.print(out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anticanonical divisors and color types of spherical homogeneous spaces", "sphanti"};
  app.require_subcommand(1);

  bool as_json = false;
  DatumSource src;
  int n_value = 0;
  const auto add_common = [&](CLI::App* sub, bool with_datum) {
    sub->add_flag("--json", as_json, "machine-readable output");
    if (with_datum) {
      sub->add_option("datum", src.source, "datum file, or catalog:<key>")->required();
      sub->add_option("--n", n_value, "parameter of a catalog entry");
    }
  };

  std::string spec_text, subset_text;
  auto* roots = app.add_subcommand("roots", "positive roots and rho_I of a root system");
  roots->add_option("spec", spec_text, "root system, e.g. A4, A2xA2, A3+T1")->required();
  roots->add_option("--subset", subset_text, "comma-separated simple roots, e.g. a2,a3 (default: all)");
  add_common(roots, false);

  auto* kappa_cmd = app.add_subcommand("kappa", "weight kappa_P = 2 rho_S - 2 rho_Sp");
  add_common(kappa_cmd, true);

  std::string method;
  auto* types = app.add_subcommand("types", "color types by spherical roots and by the Lie algebra");
  types->add_option("--method", method, "luna, knop or both (default: both when the datum has a presentation)")
      ->check(CLI::IsMember({"luna", "knop", "both"}));
  add_common(types, true);

  auto* antican = app.add_subcommand("antican", "coefficients m_i and Div s");
  add_common(antican, true);

  std::int64_t bound = 10;
  auto* verify = app.add_subcommand("verify", "decomposition, pairing audits and uniqueness checks");
  verify->add_option("--bound", bound, "search bound for the brute-force uniqueness check")
      ->check(CLI::Range(std::int64_t{1}, kMaxEnumerationBound));
  add_common(verify, true);

  std::string contains;
  auto* cone = app.add_subcommand("cone", "valuation cone as half-spaces");
  cone->add_option("--contains", contains, "comma-separated coweight coordinates to test");
  add_common(cone, true);

  auto* validate = app.add_subcommand("validate", "consistency findings for a datum");
  add_common(validate, true);

  std::string dump_key;
  auto* catalog = app.add_subcommand("catalog", "built-in example spaces");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog keys");
  list->add_flag("--json", as_json, "machine-readable output");
  auto* dump = catalog->add_subcommand("dump", "print a catalog entry as a datum document");
  dump->add_option("key", dump_key, "catalog key")->required();
  dump->add_option("--n", n_value, "parameter of the entry");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto n_given = [&](CLI::App* sub) { return sub->count("--n") > 0 ? std::optional<int>(n_value) : std::nullopt; };

  try {
    if (*roots) return cmd_roots(spec_text, subset_text, as_json, out);
    if (*catalog) {
      if (*list) return cmd_catalog_list(as_json, out);
      std::optional<CatalogEntry> entry;
      try {
        entry = builtin(dump_key, n_given(dump));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out << serialize_datum(entry->datum) << '\n';
      return kExitOk;
    }
    for (auto* sub : {kappa_cmd, types, antican, verify, cone, validate}) {
      if (!*sub) continue;
      src.n = n_given(sub);
      const SphericalDatum d = load_datum(src);
      if (sub == kappa_cmd) return cmd_kappa(d, as_json, out);
      if (sub == types) return cmd_types(d, method.empty() ? (d.presentation ? "both" : "luna") : method, as_json, out);
      if (sub == antican) return cmd_antican(d, as_json, out);
      if (sub == verify) return cmd_verify(d, bound, as_json, out);
      if (sub == cone) return cmd_cone(d, contains, as_json, out);
      return cmd_validate(d, as_json, out);
    }
  } catch (const UsageError& e) {
    err << "sphanti: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "sphanti: invalid datum: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const InsufficientData& e) {
    err << "sphanti: insufficient data: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const DatumInconsistency& e) {
    err << "sphanti: inconsistent datum: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "sphanti: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sphanti::cli

#include "sphanti/datum_io.hpp"

#include <set>
#include <stdexcept>

#include "sphanti/error.hpp"

namespace sphanti {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ParseError(path + ": unknown field '" + key + "'");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

bool present(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it != obj.end() && !it->is_null();
}

Vector vector_from_json(const json& j, std::size_t expected, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  if (j.size() != expected)
    throw ParseError(path + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_to_json(x));
  return arr;
}

std::size_t root_from_json(const json& j, const RootSystem& rs, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a simple root name like \"a1\"");
  try {
    return rs.root_index(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

RootSet roots_from_json(const json& j, const RootSystem& rs, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of simple root names");
  RootSet out;
  for (std::size_t i = 0; i < j.size(); ++i)
    if (!out.insert(root_from_json(j[i], rs, path + "[" + std::to_string(i) + "]")).second)
      throw ParseError(path + ": repeated simple root " + j[i].get<std::string>());
  return out;
}

json roots_to_json(const RootSet& set, const RootSystem& rs) {
  json arr = json::array();
  for (auto i : set) arr.push_back(rs.root_name(i));
  return arr;
}

std::vector<Weight> weights_from_json(const json& j, const RootSystem& rs, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of weights");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(weight_from_json(j[i], rs, path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Matrix> matrices_from_json(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    auto m = matrix_from_json(j[i], p);
    if (m.rows() != n || m.cols() != n) throw ParseError(p + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    out.push_back(std::move(m));
  }
  return out;
}

LiePresentation presentation_from_json(const json& j, const RootSystem& rs, const std::string& path) {
  require_keys(j, path, {"blocks", "central", "b", "h", "triples", "witnesses"});
  LiePresentation pres;
  const auto& blocks = field(j, "blocks", path);
  if (!blocks.is_array()) throw ParseError(path + ".blocks: expected an array of block sizes");
  for (const auto& b : blocks) {
    if (!b.is_number_integer() || b.get<int>() < 2) throw ParseError(path + ".blocks: block sizes must be integers >= 2");
    pres.blocks.push_back(b.get<int>());
  }
  if (present(j, "central")) {
    const auto& c = j["central"];
    if (!c.is_number_integer() || c.get<int>() < 0) throw ParseError(path + ".central: expected a nonnegative integer");
    pres.central_dim = c.get<int>();
  }
  const std::size_t n = pres.matrix_size();
  pres.b_basis = matrices_from_json(field(j, "b", path), n, path + ".b");
  pres.h_basis = matrices_from_json(field(j, "h", path), n, path + ".h");
  const auto& triples = field(j, "triples", path);
  if (!triples.is_array()) throw ParseError(path + ".triples: expected an array");
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const std::string p = path + ".triples[" + std::to_string(i) + "]";
    require_keys(triples[i], p, {"root", "e", "h", "f"});
    const auto root = root_from_json(field(triples[i], "root", p), rs, p + ".root");
    std::vector<Matrix> ehf;
    for (const char* key : {"e", "h", "f"}) {
      auto m = matrix_from_json(field(triples[i], key, p), p + "." + key);
      if (m.rows() != n || m.cols() != n) throw ParseError(p + "." + key + ": wrong matrix size");
      ehf.push_back(std::move(m));
    }
    if (!pres.triples.emplace(root, Sl2Triple{ehf[0], ehf[1], ehf[2]}).second)
      throw ParseError(p + ".root: duplicate triple for " + rs.root_name(root));
  }
  if (present(j, "witnesses")) {
    const auto& ws = j["witnesses"];
    if (!ws.is_array()) throw ParseError(path + ".witnesses: expected an array");
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::string p = path + ".witnesses[" + std::to_string(i) + "]";
      require_keys(ws[i], p, {"color", "root", "matrix"});
      const auto& color = field(ws[i], "color", p);
      if (!color.is_string()) throw ParseError(p + ".color: expected a color name");
      auto m = matrix_from_json(field(ws[i], "matrix", p), p + ".matrix");
      if (m.rows() != 2 || m.cols() != 2) throw ParseError(p + ".matrix: expected a 2x2 matrix");
      pres.witnesses.push_back({color.get<std::string>(), root_from_json(field(ws[i], "root", p), rs, p + ".root"), std::move(m)});
    }
  }
  return pres;
}

json presentation_to_json(const LiePresentation& pres, const RootSystem& rs) {
  json j;
  j["blocks"] = pres.blocks;
  j["central"] = pres.central_dim;
  j["b"] = json::array();
  for (const auto& m : pres.b_basis) j["b"].push_back(matrix_to_json(m));
  j["h"] = json::array();
  for (const auto& m : pres.h_basis) j["h"].push_back(matrix_to_json(m));
  j["triples"] = json::array();
  for (const auto& [root, t] : pres.triples)
    j["triples"].push_back({{"root", rs.root_name(root)},
                            {"e", matrix_to_json(t.e)},
                            {"h", matrix_to_json(t.h)},
                            {"f", matrix_to_json(t.f)}});
  j["witnesses"] = json::array();
  for (const auto& w : pres.witnesses)
    j["witnesses"].push_back({{"color", w.color}, {"root", rs.root_name(w.root)}, {"matrix", matrix_to_json(w.matrix)}});
  return j;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError(path + ": expected a rational as an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& q) { return to_string(q); }

Weight weight_from_json(const json& j, const RootSystem& rs, const std::string& path) {
  require_keys(j, path, {"fund", "central"});
  Weight w;
  w.fund = vector_from_json(field(j, "fund", path), rs.rank(), path + ".fund");
  if (present(j, "central"))
    w.central = vector_from_json(j["central"], rs.central_rank(), path + ".central");
  else if (rs.central_rank() > 0)
    throw ParseError(path + ": missing field 'central' (central rank " + std::to_string(rs.central_rank()) + ")");
  return w;
}

json weight_to_json(const Weight& w) { return {{"fund", vector_to_json(w.fund)}, {"central", vector_to_json(w.central)}}; }

Coweight coweight_from_json(const json& j, const RootSystem& rs, const std::string& path) {
  const auto flat = vector_from_json(j, rs.rank() + rs.central_rank(), path);
  Coweight cw;
  cw.fund.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(rs.rank()));
  cw.central.assign(flat.begin() + static_cast<std::ptrdiff_t>(rs.rank()), flat.end());
  return cw;
}

json coweight_to_json(const Coweight& cw) { return vector_to_json(flatten(cw)); }

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a nonempty array of rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r)
    rows.push_back(vector_from_json(j[r], j[0].is_array() ? j[0].size() : 0, path + "[" + std::to_string(r) + "]"));
  return Matrix::from_rows(std::span<const Vector>(rows));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return rows;
}

json report_to_json(const Report& report) {
  json arr = json::array();
  for (const auto& f : report)
    arr.push_back({{"check", f.check}, {"subject", f.subject}, {"expected", f.expected}, {"actual", f.actual}, {"pass", f.pass}});
  return arr;
}

SphericalDatum datum_from_json(const json& doc) {
  require_keys(doc, "$", {"version", "root_system", "Sp", "colors", "M", "spherical_roots", "boundary_count", "presentation"});
  const auto& version = field(doc, "version", "$");
  if (!version.is_string() || version.get<std::string>() != kDatumVersion)
    throw ParseError("$.version: expected \"" + std::string(kDatumVersion) + "\"");
  const auto& spec_text = field(doc, "root_system", "$");
  if (!spec_text.is_string()) throw ParseError("$.root_system: expected a spec string such as \"A2xA2+T1\"");
  RootSystemSpec spec;
  try {
    spec = parse_root_system_spec(spec_text.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("$.root_system: ") + e.what());
  }
  SphericalDatum datum{RootSystem(spec), {}, {}, std::nullopt, std::nullopt, 0, std::nullopt};
  const auto& rs = datum.rs;

  const auto& colors = field(doc, "colors", "$");
  if (!colors.is_array()) throw ParseError("$.colors: expected an array");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const std::string p = "$.colors[" + std::to_string(i) + "]";
    const auto& c = colors[i];
    require_keys(c, p, {"name", "moved_by", "type", "chi", "rho"});
    ColorRecord rec;
    const auto& name = field(c, "name", p);
    if (!name.is_string()) throw ParseError(p + ".name: expected a string");
    rec.name = name.get<std::string>();
    rec.moved_by = roots_from_json(field(c, "moved_by", p), rs, p + ".moved_by");
    if (present(c, "type")) {
      const auto& t = c["type"];
      const auto parsed = t.is_string() ? parse_color_type(t.get<std::string>()) : std::nullopt;
      if (!parsed) throw ParseError(p + ".type: expected \"a\", \"2a\", \"b\" or null");
      rec.declared_type = parsed;
    }
    if (present(c, "chi")) rec.chi = weight_from_json(c["chi"], rs, p + ".chi");
    if (present(c, "rho")) rec.rho = coweight_from_json(c["rho"], rs, p + ".rho");
    datum.colors.push_back(std::move(rec));
  }

  datum.sp = present(doc, "Sp") ? roots_from_json(doc["Sp"], rs, "$.Sp") : compute_sp(datum);
  if (present(doc, "M")) datum.lattice_m = weights_from_json(doc["M"], rs, "$.M");
  if (present(doc, "spherical_roots")) datum.spherical_roots = weights_from_json(doc["spherical_roots"], rs, "$.spherical_roots");
  if (present(doc, "boundary_count")) {
    const auto& n = doc["boundary_count"];
    if (!n.is_number_integer() || n.get<long>() < 0) throw ParseError("$.boundary_count: expected a nonnegative integer");
    datum.boundary_count = n.get<int>();
  }
  if (present(doc, "presentation")) datum.presentation = presentation_from_json(doc["presentation"], rs, "$.presentation");

  try {
    check_structure(datum);
  } catch (const ParseError& e) {
    throw ParseError(std::string("$.") + e.what());
  }
  return datum;
}

SphericalDatum parse_datum(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return datum_from_json(doc);
}

json datum_to_json(const SphericalDatum& datum) {
  const auto& rs = datum.rs;
  json doc;
  doc["version"] = kDatumVersion;
  doc["root_system"] = rs.spec().to_string();
  doc["Sp"] = roots_to_json(datum.sp, rs);
  doc["colors"] = json::array();
  for (const auto& c : datum.colors) {
    json jc;
    jc["name"] = c.name;
    jc["moved_by"] = roots_to_json(c.moved_by, rs);
    jc["type"] = c.declared_type ? json(std::string(to_string(*c.declared_type))) : json(nullptr);
    jc["chi"] = c.chi ? weight_to_json(*c.chi) : json(nullptr);
    jc["rho"] = c.rho ? coweight_to_json(*c.rho) : json(nullptr);
    doc["colors"].push_back(std::move(jc));
  }
  const auto weights = [](const std::optional<std::vector<Weight>>& ws) {
    if (!ws) return json(nullptr);
    json arr = json::array();
    for (const auto& w : *ws) arr.push_back(weight_to_json(w));
    return arr;
  };
  doc["M"] = weights(datum.lattice_m);
  doc["spherical_roots"] = weights(datum.spherical_roots);
  doc["boundary_count"] = datum.boundary_count;
  if (datum.presentation) doc["presentation"] = presentation_to_json(*datum.presentation, rs);
  return doc;
}

std::string serialize_datum(const SphericalDatum& datum) { return datum_to_json(datum).dump(2); }

}  // namespace sphanti

/// @file io.cpp
/// @brief JSON instance parsing and canonical emission.

#include "hopfpi/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hopfpi {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw IoError(where + ": " + what);
}

Scalar scalar_from_json(const Json& j, Field f, const std::string& where) {
  if (j.is_number_integer()) return Scalar::of(j.get<long long>(), f);
  if (j.is_string()) {
    auto s = Scalar::parse(j.get<std::string>(), f);
    if (!s) bad(where, "malformed scalar '" + j.get<std::string>() + "'");
    return *s;
  }
  bad(where, "scalar must be an integer or a \"p/q\" string");
}

Json scalar_to_json(const Scalar& s) {
  const std::string text = s.str();
  if (text.find('/') == std::string::npos) {
    // An integer; keep it numeric when it fits, else fall back to a string.
    try {
      return Json(std::stoll(text));
    } catch (const std::out_of_range&) {
      return Json(text);
    }
  }
  return Json(text);
}

std::vector<Scalar> scalar_array(const Json& j, Field f, std::size_t expected,
                                 const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of scalars");
  if (j.size() != expected) {
    bad(where, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(j.size()));
  }
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(scalar_from_json(j[i], f, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Vector vector_from_json(const Json& j, Field f, int dim, const std::string& where) {
  return Vector(f, scalar_array(j, f, static_cast<std::size_t>(dim), where));
}

LinearMap map_from_json(const Json& j, Field f, int rows, int cols, const std::string& where) {
  LinearMap m(f, rows, cols);
  m.entries = scalar_array(j, f, static_cast<std::size_t>(rows) * cols, where);
  return m;
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(scalar_to_json(v[i]));
  return arr;
}

Json entries_to_json(const std::vector<Scalar>& entries) {
  Json arr = Json::array();
  for (const Scalar& s : entries) arr.push_back(scalar_to_json(s));
  return arr;
}

std::string pair_key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) bad(where, "missing key '" + key + "'");
  return j.at(key);
}

Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return Field::rationals();
  if (j.is_object() && j.contains("gf") && j.at("gf").is_number_integer()) {
    try {
      return Field::gf(j.at("gf").get<long long>());
    } catch (const std::exception& e) {
      bad("field.gf", e.what());
    }
  }
  bad("field", "expected \"rational\" or {\"gf\": p}");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad("document", e.what());
  }
  if (!doc.is_object()) bad("document", "top level must be an object");

  Instance inst;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) bad("name", "must be a string");
    inst.name = doc.at("name").get<std::string>();
  }
  const Field f = field_from_json(require(doc, "field", "document"));

  const Json& gj = require(doc, "group", "document");
  if (!gj.is_array()) bad("group", "expected a Cayley table (array of arrays)");
  std::vector<std::vector<int>> table;
  for (const Json& row : gj) {
    if (!row.is_array()) bad("group", "expected a Cayley table (array of arrays)");
    std::vector<int> r;
    for (const Json& cell : row) {
      if (!cell.is_number_integer()) bad("group", "table entries must be integers");
      r.push_back(cell.get<int>());
    }
    table.push_back(std::move(r));
  }
  auto made = make_group(table);
  if (std::holds_alternative<GroupError>(made)) {
    bad("group", std::get<GroupError>(made).detail);
  }
  const FiniteGroup grp = std::get<FiniteGroup>(made);
  const int n = grp.n;

  const Json& dj = require(doc, "dims", "document");
  if (!dj.is_array() || static_cast<int>(dj.size()) != n) {
    bad("dims", "expected one dimension per group element");
  }
  std::vector<int> dims;
  for (const Json& cell : dj) {
    if (!cell.is_number_integer() || cell.get<int>() < 0) {
      bad("dims", "dimensions must be non-negative integers");
    }
    dims.push_back(cell.get<int>());
  }

  HopfPi h;
  h.co.field = f;
  h.co.group = grp;
  h.co.dims = dims;

  const Json& aj = require(doc, "algebra", "document");
  if (!aj.is_array() || static_cast<int>(aj.size()) != n) {
    bad("algebra", "expected one algebra record per group element");
  }
  for (int a = 0; a < n; ++a) {
    const Json& rec = aj[static_cast<std::size_t>(a)];
    const std::string where = "algebra[" + std::to_string(a) + "]";
    if (!rec.is_object()) bad(where, "expected {mult, unit}");
    const int d = dims[static_cast<std::size_t>(a)];
    Bilinear m(f, d, d, d);
    m.entries = scalar_array(require(rec, "mult", where), f,
                             static_cast<std::size_t>(d) * d * d, where + ".mult");
    h.mult.push_back(std::move(m));
    h.unit.push_back(vector_from_json(require(rec, "unit", where), f, d, where + ".unit"));
  }

  const Json& cj = require(doc, "comul", "document");
  if (!cj.is_object()) bad("comul", "expected an object keyed \"a,b\"");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::string key = pair_key(a, b);
      const std::string where = "comul[" + key + "]";
      if (!cj.contains(key)) bad("comul", "missing key '" + key + "'");
      h.co.comul.push_back(map_from_json(cj.at(key), f,
                                         dims[static_cast<std::size_t>(a)] *
                                             dims[static_cast<std::size_t>(b)],
                                         dims[static_cast<std::size_t>(grp.op(a, b))], where));
    }
  }

  h.co.counit = vector_from_json(require(doc, "counit", "document"), f,
                                 dims[static_cast<std::size_t>(grp.id)], "counit");

  const Json& sj = require(doc, "antipode", "document");
  if (!sj.is_array() || static_cast<int>(sj.size()) != n) {
    bad("antipode", "expected one matrix per group element");
  }
  for (int a = 0; a < n; ++a) {
    h.antipode.push_back(map_from_json(sj[static_cast<std::size_t>(a)], f,
                                       dims[static_cast<std::size_t>(grp.invof(a))],
                                       dims[static_cast<std::size_t>(a)],
                                       "antipode[" + std::to_string(a) + "]"));
  }
  try {
    h.check_shapes();
  } catch (const std::logic_error& e) {
    bad("document", e.what());
  }
  inst.h = std::move(h);

  if (doc.contains("crossing")) {
    const Json& xj = doc.at("crossing");
    if (!xj.is_object()) bad("crossing", "expected an object keyed \"b,a\"");
    Crossing cx;
    cx.stride = n;
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const std::string key = pair_key(b, a);
        if (!xj.contains(key)) bad("crossing", "missing key '" + key + "'");
        cx.maps.push_back(map_from_json(xj.at(key), f,
                                        dims[static_cast<std::size_t>(grp.conj(b, a))],
                                        dims[static_cast<std::size_t>(a)],
                                        "crossing[" + key + "]"));
      }
    }
    inst.crossing = std::move(cx);
  }

  auto parse_rfamily = [&](const std::string& key) -> RMatrixFamily {
    const Json& rj = doc.at(key);
    if (!rj.is_object()) bad(key, "expected an object keyed \"a,b\"");
    RMatrixFamily fam;
    fam.stride = n;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const std::string k = pair_key(a, b);
        if (!rj.contains(k)) bad(key, "missing key '" + k + "'");
        fam.comp.push_back(vector_from_json(rj.at(k), f,
                                            dims[static_cast<std::size_t>(a)] *
                                                dims[static_cast<std::size_t>(b)],
                                            key + "[" + k + "]"));
      }
    }
    return fam;
  };
  if (doc.contains("rmatrix")) inst.rmatrix = parse_rfamily("rmatrix");
  if (doc.contains("rmatrix_inverse")) inst.rmatrix_inverse_claim = parse_rfamily("rmatrix_inverse");

  if (doc.contains("twist")) {
    const Json& tj = doc.at("twist");
    if (!tj.is_array() || static_cast<int>(tj.size()) != n) {
      bad("twist", "expected one component per group element");
    }
    GradedVector tw = zero_graded_vector(inst.h);
    for (int a = 0; a < n; ++a) {
      tw[a] = vector_from_json(tj[static_cast<std::size_t>(a)], f,
                               dims[static_cast<std::size_t>(a)],
                               "twist[" + std::to_string(a) + "]");
    }
    inst.twist = std::move(tw);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string emit_instance(const Instance& inst) {
  const HopfPi& h = inst.h;
  const int n = h.n();
  Json doc = Json::object();
  doc["name"] = inst.name;
  if (h.field().is_rational()) {
    doc["field"] = "rational";
  } else {
    doc["field"] = Json{{"gf", h.field().characteristic}};
  }
  Json table = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(h.group().op(a, b));
    table.push_back(std::move(row));
  }
  doc["group"] = std::move(table);
  doc["dims"] = h.co.dims;
  Json algebra = Json::array();
  for (int a = 0; a < n; ++a) {
    Json rec = Json::object();
    rec["mult"] = entries_to_json(h.m(a).entries);
    rec["unit"] = vector_to_json(h.one(a));
    algebra.push_back(std::move(rec));
  }
  doc["algebra"] = std::move(algebra);
  Json comul = Json::object();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) comul[pair_key(a, b)] = entries_to_json(h.cp(a, b).entries);
  }
  doc["comul"] = std::move(comul);
  doc["counit"] = vector_to_json(h.co.counit);
  Json antipode = Json::array();
  for (int a = 0; a < n; ++a) antipode.push_back(entries_to_json(h.S(a).entries));
  doc["antipode"] = std::move(antipode);
  if (inst.crossing) {
    Json cx = Json::object();
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        cx[pair_key(b, a)] = entries_to_json(inst.crossing->phi(b, a).entries);
      }
    }
    doc["crossing"] = std::move(cx);
  }
  auto emit_rfamily = [&](const RMatrixFamily& fam) {
    Json rj = Json::object();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) rj[pair_key(a, b)] = vector_to_json(fam.r(a, b));
    }
    return rj;
  };
  if (inst.rmatrix) doc["rmatrix"] = emit_rfamily(*inst.rmatrix);
  if (inst.rmatrix_inverse_claim) doc["rmatrix_inverse"] = emit_rfamily(*inst.rmatrix_inverse_claim);
  if (inst.twist) {
    Json tj = Json::array();
    for (int a = 0; a < n; ++a) tj.push_back(vector_to_json((*inst.twist)[a]));
    doc["twist"] = std::move(tj);
  }
  return doc.dump(2) + "\n";
}

}  // namespace hopfpi

#include "mckay/orbifold/sheet_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mckay/errors.hpp"

namespace mckay::orbifold {

using nlohmann::json;

namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json tagged_json(const Tagged& t) { return {{"value", int_json(t.value)}, {"provenance", to_string(t.provenance)}}; }

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& need(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

Int read_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return exact::parse_int(j.get<std::string>());
    } catch (const ParseError&) {
    }
  }
  throw SchemaError(path, "expected an exact integer");
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

Tagged read_tagged(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected {\"value\", \"provenance\"}");
  Tagged t;
  t.value = read_int(need(j, "value", path), at(path, "value"));
  const std::string p = read_string(need(j, "provenance", path), at(path, "provenance"));
  try {
    t.provenance = parse_provenance(p);
  } catch (const ParseError& e) {
    throw SchemaError(at(path, "provenance"), e.what());
  }
  return t;
}

std::optional<Tagged> read_opt_tagged(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return read_tagged(*it, at(path, key));
}

const json& need_array(const json& obj, const std::string& key, const std::string& path, bool optional,
                       const json& empty) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (optional) return empty;
    throw SchemaError(at(path, key), "missing field");
  }
  if (!it->is_array()) throw SchemaError(at(path, key), "expected an array");
  return *it;
}

}  // namespace

std::string write_sheet(const GSpaceSheet& sheet) {
  json doc;
  doc["name"] = sheet.name;
  doc["group_order"] = int_json(sheet.group_order);
  json classes = json::array();
  for (const auto& c : sheet.classes) {
    json r{{"label", c.label},
           {"size", int_json(c.size)},
           {"centralizer_order", int_json(c.centralizer_order)},
           {"identity", c.identity},
           {"in_ch", c.in_ch}};
    if (c.fixed_dim) r["fixed_dim"] = *c.fixed_dim;
    if (c.euler_quotient) r["euler_quotient"] = tagged_json(*c.euler_quotient);
    if (c.lefschetz_quotient) r["lefschetz_quotient"] = tagged_json(*c.lefschetz_quotient);
    classes.push_back(std::move(r));
  }
  doc["classes"] = std::move(classes);
  json strata = json::array();
  for (const auto& s : sheet.strata) {
    json r{{"label", s.label},
           {"order", int_json(s.order)},
           {"class_count", int_json(s.class_count)},
           {"euler_stratum", tagged_json(s.euler_stratum)},
           {"h_invariant", s.h_invariant},
           {"con_h", int_json(s.con_h)}};
    if (s.lefschetz_stratum) r["lefschetz_stratum"] = tagged_json(*s.lefschetz_stratum);
    strata.push_back(std::move(r));
  }
  doc["strata"] = std::move(strata);
  json pairs = json::array();
  for (const auto& p : sheet.commuting_pairs)
    pairs.push_back({{"g", p.g_class}, {"h", p.h_class}, {"pairs", int_json(p.pairs)}, {"euler", int_json(p.euler)}});
  doc["commuting_pairs"] = std::move(pairs);
  json checks = json::array();
  for (const auto& c : sheet.stated_checks)
    checks.push_back({{"quantity", c.quantity}, {"stated", int_json(c.stated)}, {"engine", int_json(c.engine)}});
  doc["stated_checks"] = std::move(checks);
  doc["metadata"] = sheet.metadata;
  return doc.dump(2) + "\n";
}

GSpaceSheet read_sheet(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset to line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("sheet: syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  const std::string root = "$";
  if (!doc.is_object()) throw SchemaError(root, "expected an object");
  const json empty = json::array();
  GSpaceSheet s;
  if (auto it = doc.find("name"); it != doc.end()) s.name = read_string(*it, at(root, "name"));
  s.group_order = read_int(need(doc, "group_order", root), at(root, "group_order"));

  const json& classes = need_array(doc, "classes", root, false, empty);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string p = at(at(root, "classes"), i);
    const json& j = classes[i];
    if (!j.is_object()) throw SchemaError(p, "expected an object");
    ClassRecord r;
    r.label = read_string(need(j, "label", p), at(p, "label"));
    r.size = read_int(need(j, "size", p), at(p, "size"));
    r.centralizer_order = read_int(need(j, "centralizer_order", p), at(p, "centralizer_order"));
    if (auto it = j.find("identity"); it != j.end()) r.identity = read_bool(*it, at(p, "identity"));
    r.in_ch = read_bool(need(j, "in_ch", p), at(p, "in_ch"));
    if (auto it = j.find("fixed_dim"); it != j.end()) {
      if (!it->is_number_integer()) throw SchemaError(at(p, "fixed_dim"), "expected an integer");
      r.fixed_dim = it->get<int>();
    }
    r.euler_quotient = read_opt_tagged(j, "euler_quotient", p);
    r.lefschetz_quotient = read_opt_tagged(j, "lefschetz_quotient", p);
    s.classes.push_back(std::move(r));
  }

  const json& strata = need_array(doc, "strata", root, true, empty);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string p = at(at(root, "strata"), i);
    const json& j = strata[i];
    if (!j.is_object()) throw SchemaError(p, "expected an object");
    StratumRecord r;
    r.label = read_string(need(j, "label", p), at(p, "label"));
    r.order = read_int(need(j, "order", p), at(p, "order"));
    r.class_count = read_int(need(j, "class_count", p), at(p, "class_count"));
    r.euler_stratum = read_tagged(need(j, "euler_stratum", p), at(p, "euler_stratum"));
    r.lefschetz_stratum = read_opt_tagged(j, "lefschetz_stratum", p);
    r.h_invariant = read_bool(need(j, "h_invariant", p), at(p, "h_invariant"));
    r.con_h = read_int(need(j, "con_h", p), at(p, "con_h"));
    s.strata.push_back(std::move(r));
  }

  const json& pairs = need_array(doc, "commuting_pairs", root, true, empty);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string p = at(at(root, "commuting_pairs"), i);
    const json& j = pairs[i];
    if (!j.is_object()) throw SchemaError(p, "expected an object");
    CommutingPairRecord r;
    r.g_class = read_string(need(j, "g", p), at(p, "g"));
    r.h_class = read_string(need(j, "h", p), at(p, "h"));
    r.pairs = read_int(need(j, "pairs", p), at(p, "pairs"));
    r.euler = read_int(need(j, "euler", p), at(p, "euler"));
    s.commuting_pairs.push_back(std::move(r));
  }

  const json& checks = need_array(doc, "stated_checks", root, true, empty);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string p = at(at(root, "stated_checks"), i);
    const json& j = checks[i];
    if (!j.is_object()) throw SchemaError(p, "expected an object");
    s.stated_checks.push_back({read_string(need(j, "quantity", p), at(p, "quantity")),
                              read_int(need(j, "stated", p), at(p, "stated")),
                              read_int(need(j, "engine", p), at(p, "engine"))});
  }

  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw SchemaError(at(root, "metadata"), "expected an object");
    for (auto m = it->begin(); m != it->end(); ++m) s.metadata[m.key()] = read_string(m.value(), at(at(root, "metadata"), m.key()));
  }

  try {
    validate(s);
  } catch (const InconsistentSheet& e) {
    throw SchemaError(root, e.what());
  }
  return s;
}

GSpaceSheet load_sheet(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sheet '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_sheet(ss.str());
}

}  // namespace mckay::orbifold

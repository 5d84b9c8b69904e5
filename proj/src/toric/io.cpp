#include "mckay/toric/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "mckay/errors.hpp"
#include "mckay/exact/rational.hpp"

namespace mckay::toric {

using nlohmann::json;

namespace {

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

std::vector<std::size_t> index_list(const json& j, const std::string& path, std::size_t bound) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of vertex indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an index");
    auto v = j[i].get<std::size_t>();
    if (v >= bound) throw SchemaError(path + "[" + std::to_string(i) + "]", "index out of range");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string write_triangulation(const LatticePair& lp, const Triangulation& t) {
  json doc;
  doc["n"] = lp.n;
  doc["generators"] = format_h_generators(lp.gens);
  json verts = json::array();
  for (const auto& v : t.vertices) {
    json row = json::array();
    for (const auto& x : v) row.push_back(exact::to_string(x));
    verts.push_back(std::move(row));
  }
  doc["vertices"] = std::move(verts);
  doc["simplices"] = t.simplices;
  if (t.coarse) doc["coarse"] = {{"cells", t.coarse->cells}, {"parent", t.coarse->parent}};
  return doc.dump(2) + "\n";
}

TriangulationDocument read_triangulation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("triangulation document: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  const json& jn = field(doc, "n", "$");
  if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0) throw SchemaError("$.n", "expected a positive integer");
  const std::size_t n = jn.get<std::size_t>();
  const json& jg = field(doc, "generators", "$");
  if (!jg.is_string()) throw SchemaError("$.generators", "expected a string");

  TriangulationDocument out;
  out.lp = build_lattice_pair(n, parse_h_generators(jg.get<std::string>(), n));
  out.t.n = n;

  const json& jv = field(doc, "vertices", "$");
  if (!jv.is_array()) throw SchemaError("$.vertices", "expected an array");
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    if (!jv[i].is_array() || jv[i].size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " coordinates");
    Point p;
    for (std::size_t j = 0; j < n; ++j) {
      if (!jv[i][j].is_string()) throw SchemaError(path + "[" + std::to_string(j) + "]", "expected a \"p/q\" string");
      try {
        p.push_back(exact::parse_rat(jv[i][j].get<std::string>()));
      } catch (const ParseError& e) {
        throw SchemaError(path + "[" + std::to_string(j) + "]", e.what());
      }
    }
    out.t.vertices.push_back(std::move(p));
  }
  const std::size_t nv = out.t.vertices.size();

  const json& js = field(doc, "simplices", "$");
  if (!js.is_array()) throw SchemaError("$.simplices", "expected an array");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string path = "$.simplices[" + std::to_string(i) + "]";
    auto s = index_list(js[i], path, nv);
    if (s.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " vertices");
    std::sort(s.begin(), s.end());
    out.t.simplices.push_back(std::move(s));
  }

  if (auto it = doc.find("coarse"); it != doc.end()) {
    if (!it->is_object()) throw SchemaError("$.coarse", "expected an object");
    CoarseCertificate c;
    const json& cells = field(*it, "cells", "$.coarse");
    if (!cells.is_array()) throw SchemaError("$.coarse.cells", "expected an array");
    for (std::size_t i = 0; i < cells.size(); ++i)
      c.cells.push_back(index_list(cells[i], "$.coarse.cells[" + std::to_string(i) + "]", nv));
    c.parent = index_list(field(*it, "parent", "$.coarse"), "$.coarse.parent", c.cells.size());
    if (c.parent.size() != out.t.simplices.size())
      throw SchemaError("$.coarse.parent", "expected one parent per simplex");
    out.t.coarse = std::move(c);
  }
  return out;
}

}  // namespace mckay::toric

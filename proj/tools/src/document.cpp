#include "cotv_cli/document.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "cotv/error.hpp"

namespace cotv::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool is_count(const Json& j) { return j.is_number_integer() && j.get<std::int64_t>() >= 0; }

std::string string_from(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

IntVector int_vector_from(const Json& j, std::size_t rank, const char* what) {
  if (!j.is_array() || j.size() != rank)
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(rank));
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

RatVector rat_vector_from(const Json& j, std::size_t rank, const char* what) {
  if (!j.is_array() || j.size() != rank)
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(rank));
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

Polyhedron polyhedron_from(const Json& j, std::size_t rank, bool cone) {
  std::vector<RatVector> verts;
  if (!cone) {
    const auto& vs = field(j, "vertices");
    if (!vs.is_array()) throw ParseError("vertices must be an array");
    for (const auto& v : vs) verts.push_back(rat_vector_from(v, rank, "vertex"));
  }
  std::vector<IntVector> rays;
  if (j.contains("rays")) {
    if (!j.at("rays").is_array()) throw ParseError("rays must be an array");
    for (const auto& r : j.at("rays")) rays.push_back(int_vector_from(r, rank, "ray"));
  }
  try {
    return cone ? Polyhedron::cone(rank, rays) : Polyhedron::from_generators(rank, verts, rays);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// Assigns listed ids to complex indices; unlisted cells are named by key.
std::vector<std::string> assign_ids(const PolyComplex& c, const std::vector<std::pair<std::string, Polyhedron>>& listed,
                                    const std::string& where) {
  std::vector<std::string> ids(c.size());
  for (const auto& [id, p] : listed) {
    const auto idx = c.find(p);
    if (!idx) throw ParseError(where + ": cell " + id + " is not part of the complex");
    if (!ids[*idx].empty() && ids[*idx] != id) throw ParseError(where + ": cells " + ids[*idx] + " and " + id + " coincide");
    ids[*idx] = id;
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i].empty()) ids[i] = c.cell(i).key();
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) throw ParseError(where + ": duplicate id " + id);
  return ids;
}

std::size_t find_id(const std::vector<std::string>& ids, const std::string& id, const std::string& what) {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw ParseError("unknown " + what + " \"" + id + "\"");
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                          : Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from(j));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Rational x;
    if (s.empty() || x.set_str(s, 10) != 0 || x.get_den() == 0) throw ParseError("not a rational: \"" + s + "\"");
    x.canonicalize();
    return x;
  }
  throw ParseError("expected an exact number, got " + j.dump());
}

std::string coordinates(const RatVector& v) {
  if (v.size() == 1) return to_string(v.front());
  return to_string(v);
}

std::size_t Document::point(const std::string& label) const {
  const auto p = df.point_index(label);
  if (!p) throw ParseError("unknown point \"" + label + "\"");
  return *p;
}

std::size_t Document::cell(std::size_t p, const std::string& id) const {
  return find_id(cell_ids.at(p), id, "cell of point " + df.points()[p]);
}

std::size_t Document::cone(const std::string& id) const { return find_id(cone_ids, id, "cone"); }

const SupportFunction* Document::function(const std::string& name) const {
  for (const auto& [n, h] : functions)
    if (n == name) return &h;
  return nullptr;
}

const Weight* Document::weight(const std::string& name) const {
  for (const auto& [n, w] : weights)
    if (n == name) return &w;
  return nullptr;
}

Json index_json(const Document& doc, const WeightIndex& w) {
  Json j;
  switch (w.kind) {
    case WeightIndex::Kind::Vertical:
      j["kind"] = "vertical";
      j["point"] = doc.df.points()[w.point];
      j["cell"] = doc.cell_ids[w.point][w.id];
      break;
    case WeightIndex::Kind::Horizontal:
      j["kind"] = "horizontal";
      j["cone"] = doc.cone_ids[w.id];
      break;
    case WeightIndex::Kind::Contracted:
      j["kind"] = "contracted";
      j["cone"] = doc.cone_ids[w.id];
      break;
  }
  return j;
}

std::string index_label(const Document& doc, const WeightIndex& w) {
  switch (w.kind) {
    case WeightIndex::Kind::Vertical:
      return "V[" + doc.df.points()[w.point] + ":" + doc.cell_ids[w.point][w.id] + "]";
    case WeightIndex::Kind::Horizontal:
      return "R[" + doc.cone_ids[w.id] + "]";
    case WeightIndex::Kind::Contracted:
      return "T[" + doc.cone_ids[w.id] + "]";
  }
  return "";
}

WeightIndex index_from(const Document& doc, const Json& j) {
  const std::string kind = string_from(field(j, "kind"), "kind");
  if (kind == "vertical") {
    const auto p = doc.point(string_from(field(j, "point"), "point"));
    return WeightIndex::vertical(p, doc.cell(p, string_from(field(j, "cell"), "cell")));
  }
  const auto c = doc.cone(string_from(field(j, "cone"), "cone"));
  if (kind == "horizontal") return WeightIndex::horizontal(c);
  if (kind == "contracted") return WeightIndex::contracted(c);
  throw ParseError("unknown index kind \"" + kind + "\"");
}

Json weight_json(const Document& doc, const Weight& w, bool include_zero) {
  Json values = Json::array();
  const auto domain = index_sets(doc.df, static_cast<long>(w.codim)).all();
  for (const auto& idx : domain) {
    const Integer v = w.at(idx);
    if (v == 0 && !include_zero) continue;
    Json e = index_json(doc, idx);
    e["value"] = to_json(v);
    values.push_back(std::move(e));
  }
  Json j;
  j["codim"] = w.codim;
  j["values"] = std::move(values);
  return j;
}

Json function_json(const Document& doc, const SupportFunction& h) {
  Json cells = Json::array();
  for (std::size_t p = 0; p < h.cells.size(); ++p)
    for (const auto& [c, d] : h.cells[p]) {
      Json e;
      e["point"] = doc.df.points()[p];
      e["cell"] = doc.cell_ids[p][c];
      e["slope"] = to_json(d.slope);
      e["translation"] = to_json(d.translation);
      cells.push_back(std::move(e));
    }
  Json rec = Json::array();
  for (const auto& [c, m] : h.recession) {
    Json e;
    e["cone"] = doc.cone_ids[c];
    e["slope"] = to_json(m);
    rec.push_back(std::move(e));
  }
  Json j;
  j["cells"] = std::move(cells);
  j["recession"] = std::move(rec);
  return j;
}

Document parse_document(const Json& j) {
  if (!j.is_object()) throw ParseError("the document must be a JSON object");
  if (!field(j, "schema_version").is_number_integer() || j.at("schema_version").get<long>() != kSchemaVersion)
    throw ParseError("unsupported schema_version, expected " + std::to_string(kSchemaVersion));
  const auto& rank_json = field(j, "lattice_rank");
  if (!is_count(rank_json)) throw ParseError("lattice_rank must be a non-negative integer");
  const std::size_t rank = rank_json.get<std::size_t>();

  Document doc;
  std::vector<std::string> points;
  for (const auto& p : field(j, "marked_points")) points.push_back(string_from(p, "point label"));
  if (std::set<std::string>(points.begin(), points.end()).size() != points.size())
    throw ParseError("duplicate point label");

  // Recession fan.
  std::vector<std::pair<std::string, Polyhedron>> cones;
  for (const auto& c : field(field(j, "recession_fan"), "cones"))
    cones.emplace_back(string_from(field(c, "id"), "cone id"), polyhedron_from(c, rank, true));
  std::vector<Polyhedron> cone_list;
  for (const auto& [id, p] : cones) cone_list.push_back(p);
  PolyComplex fan;
  try {
    fan = build_complex(rank, cone_list);
  } catch (const Error& e) {
    throw ParseError(std::string("recession fan: ") + e.what());
  }
  doc.cone_ids = assign_ids(fan, cones, "recession fan");

  // Slices, in the order of marked_points.
  std::map<std::string, const Json*> slice_json;
  for (const auto& s : field(j, "slices")) {
    const std::string label = string_from(field(s, "point"), "slice point");
    if (std::find(points.begin(), points.end(), label) == points.end())
      throw ParseError("slice for unknown point \"" + label + "\"");
    if (!slice_json.emplace(label, &s).second) throw ParseError("two slices for point \"" + label + "\"");
  }
  std::vector<PolyComplex> slices;
  std::vector<std::vector<std::pair<std::string, Polyhedron>>> listed(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto it = slice_json.find(points[p]);
    if (it == slice_json.end()) throw ParseError("no slice for point \"" + points[p] + "\"");
    std::vector<Polyhedron> cells;
    for (const auto& c : field(*it->second, "cells")) {
      listed[p].emplace_back(string_from(field(c, "id"), "cell id"), polyhedron_from(c, rank, false));
      cells.push_back(listed[p].back().second);
    }
    try {
      slices.push_back(build_complex(rank, cells));
    } catch (const Error& e) {
      throw ParseError("slice " + points[p] + ": " + e.what());
    }
    doc.cell_ids.push_back(assign_ids(slices.back(), listed[p], "slice " + points[p]));
  }

  std::vector<std::size_t> marked;
  std::map<std::size_t, Rational> stabilizers;
  if (j.contains("marked_cones"))
    for (const auto& c : j.at("marked_cones")) marked.push_back(find_id(doc.cone_ids, string_from(c, "marked cone"), "cone"));
  if (j.contains("stabilizers")) {
    if (!j.at("stabilizers").is_object()) throw ParseError("stabilizers must be an object");
    for (const auto& [id, v] : j.at("stabilizers").items()) stabilizers[find_id(doc.cone_ids, id, "cone")] = rational_from(v);
  }
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  doc.df = DivisorialFan(rank, points, slices, fan, marked, stabilizers);

  std::set<std::string> names;
  if (j.contains("support_functions"))
    for (const auto& f : j.at("support_functions")) {
      const std::string name = string_from(field(f, "name"), "function name");
      if (!names.insert(name).second) throw ParseError("duplicate name \"" + name + "\"");
      SupportFunction h;
      h.cells.resize(points.size());
      for (const auto& c : field(f, "cells")) {
        const auto p = doc.point(string_from(field(c, "point"), "point"));
        const auto id = doc.cell(p, string_from(field(c, "cell"), "cell"));
        if (!doc.df.slice(p).is_maximal(id)) throw ParseError("function " + name + ": cell " + doc.cell_ids[p][id] + " is not maximal");
        h.cells[p][id] = AffineDatum{int_vector_from(field(c, "slope"), rank, "slope"), integer_from(field(c, "translation"))};
      }
      for (const auto& c : field(f, "recession")) {
        const auto id = doc.cone(string_from(field(c, "cone"), "cone"));
        if (!fan.is_maximal(id)) throw ParseError("function " + name + ": cone " + doc.cone_ids[id] + " is not maximal");
        h.recession[id] = int_vector_from(field(c, "slope"), rank, "slope");
      }
      doc.functions.emplace_back(name, std::move(h));
    }
  if (j.contains("weights"))
    for (const auto& w : j.at("weights")) {
      const std::string name = string_from(field(w, "name"), "weight name");
      if (!names.insert(name).second) throw ParseError("duplicate name \"" + name + "\"");
      const auto& codim = field(w, "codim");
      if (!is_count(codim) || codim.get<std::size_t>() > rank + 1)
        throw ParseError("weight " + name + ": codim must be between 0 and " + std::to_string(rank + 1));
      Weight c;
      c.codim = codim.get<std::size_t>();
      const auto domain = index_sets(doc.df, static_cast<long>(c.codim)).all();
      for (const auto& e : field(w, "values")) {
        const auto idx = index_from(doc, e);
        if (std::find(domain.begin(), domain.end(), idx) == domain.end())
          throw ParseError("weight " + name + ": " + index_label(doc, idx) + " is not an index of codimension " +
                           std::to_string(c.codim));
        const Integer v = integer_from(field(e, "value"));
        if (v != 0) c.values[idx] = v;
      }
      doc.weights.emplace_back(name, std::move(c));
    }
  return doc;
}

Json serialize(const Document& doc) {
  const auto& df = doc.df;
  const std::size_t rank = df.rank();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["lattice_rank"] = rank;
  j["marked_points"] = df.points();
  Json slices = Json::array();
  for (std::size_t p = 0; p < df.num_points(); ++p) {
    Json cells = Json::array();
    const auto& s = df.slice(p);
    for (std::size_t c = 0; c < s.size(); ++c) {
      Json e;
      e["id"] = doc.cell_ids[p][c];
      Json verts = Json::array();
      for (const auto& v : s.cell(c).vertices()) verts.push_back(to_json(v));
      e["vertices"] = std::move(verts);
      Json rays = Json::array();
      for (const auto& r : s.cell(c).rays()) rays.push_back(to_json(r));
      e["rays"] = std::move(rays);
      cells.push_back(std::move(e));
    }
    Json sj;
    sj["point"] = df.points()[p];
    sj["cells"] = std::move(cells);
    slices.push_back(std::move(sj));
  }
  j["slices"] = std::move(slices);
  Json cones = Json::array();
  for (std::size_t c = 0; c < df.recession().size(); ++c) {
    Json e;
    e["id"] = doc.cone_ids[c];
    Json rays = Json::array();
    for (const auto& r : df.recession().cell(c).rays()) rays.push_back(to_json(r));
    e["rays"] = std::move(rays);
    cones.push_back(std::move(e));
  }
  j["recession_fan"]["cones"] = std::move(cones);
  if (!df.marked().empty()) {
    Json marked = Json::array();
    for (auto m : df.marked()) marked.push_back(doc.cone_ids[m]);
    j["marked_cones"] = std::move(marked);
    Json stab = Json::object();
    for (const auto& [c, s] : df.stabilizers()) stab[doc.cone_ids[c]] = to_json(s);
    j["stabilizers"] = std::move(stab);
  }
  Json functions = Json::array();
  for (const auto& [name, h] : doc.functions) {
    Json f;
    f["name"] = name;
    const Json body = function_json(doc, h);
    f["cells"] = body["cells"];
    f["recession"] = body["recession"];
    functions.push_back(std::move(f));
  }
  j["support_functions"] = std::move(functions);
  Json weights = Json::array();
  for (const auto& [name, w] : doc.weights) {
    Json e;
    e["name"] = name;
    const Json body = weight_json(doc, w, false);
    e["codim"] = body["codim"];
    e["values"] = body["values"];
    weights.push_back(std::move(e));
  }
  j["weights"] = std::move(weights);
  return j;
}

}  // namespace cotv::cli

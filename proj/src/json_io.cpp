#include "honey/json_io.hpp"

#include <json.hpp>

#include "honey/tinkertoy.hpp"

namespace honey {
namespace {

using nlohmann::json;

json point_to_json(const BPoint& p) {
  return json::array({rat_to_string(p.x), rat_to_string(p.y), rat_to_string(p.z)});
}

BPoint point_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() != 3)
    throw InputError("honeycomb json: coordinate must be a three element array");
  BPoint p;
  for (int axis = 0; axis < 3; ++axis) {
    const json& c = arr[(size_t)axis];
    if (!c.is_string()) throw InputError("honeycomb json: coordinates must be rational strings");
    p.coord(axis) = parse_rat(c.get<std::string>());
  }
  return p;
}

std::string ij_key(const VertexId& v) {
  return std::to_string(v.i) + ":" + std::to_string(v.j);
}

json positions_to_json(const std::map<VertexId, BPoint>& pos, VKind kind) {
  json out = json::object();
  for (const auto& [vid, p] : pos)
    if (vid.kind == kind) out[ij_key(vid)] = point_to_json(p);
  return out;
}

void positions_from_json(const json& doc, const char* key, VKind kind,
                         std::map<VertexId, BPoint>& pos) {
  if (!doc.contains(key)) throw InputError(std::string("honeycomb json: missing \"") + key + "\"");
  const json& table = doc.at(key);
  if (!table.is_object())
    throw InputError(std::string("honeycomb json: \"") + key + "\" must be an object");
  for (const auto& [label, arr] : table.items()) {
    const size_t colon = label.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == label.size())
      throw InputError("honeycomb json: vertex key must look like \"i:j\", got \"" + label + "\"");
    VertexId vid;
    vid.kind = kind;
    try {
      size_t used = 0;
      vid.i = std::stoi(label.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(label);
      const std::string rest = label.substr(colon + 1);
      vid.j = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(label);
    } catch (const std::exception&) {
      throw InputError("honeycomb json: vertex key must look like \"i:j\", got \"" + label + "\"");
    }
    if (!pos.emplace(vid, point_from_json(arr)).second)
      throw InputError("honeycomb json: duplicate vertex " + vid.label());
  }
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("honeycomb json: malformed document");
  if (!doc.is_object()) throw InputError("honeycomb json: top level must be an object");
  return doc;
}

int n_from_json(const json& doc) {
  if (!doc.contains("n") || !doc.at("n").is_number_integer())
    throw InputError("honeycomb json: missing integer \"n\"");
  return doc.at("n").get<int>();
}

json rat_field(const Rat& r) {
  if (is_integer(r)) return json(rat_to_longlong(r));
  return json(rat_to_string(r));
}

json edge_list_json(const std::vector<EdgeId>& edges) {
  json arr = json::array();
  for (const EdgeId& e : edges) arr.push_back(e.label());
  return arr;
}

json loop_json(const WhiteLoop& loop) {
  json verts = json::array();
  for (const QV& v : loop.vertices) verts.push_back(v.label());
  json crossings = json::array();
  for (const auto& u : loop.crossings)
    crossings.push_back({{"cluster", u.cluster},
                         {"edge", u.internalEdge.label()},
                         {"index", u.edgeIndex}});
  return {{"vertices", verts},
          {"edges", edge_list_json(loop.edges)},
          {"crossings", crossings},
          {"canonical", loop.canonical},
          {"orientable", loop.orientable}};
}

json phi_json(const PhiAssignment& phi) {
  json out = json::object();
  for (const auto& [e, v] : phi.phi) out[e.label()] = rat_to_string(v);
  return out;
}

json integralize_json(const IntegralizeResult& res) {
  json loops = json::array();
  for (const WhiteLoop& lp : res.loops) loops.push_back(loop_json(lp));
  json pairings = json::array();
  for (const LoopPairing& pr : res.pairings)
    pairings.push_back(
        {{"first", pr.first}, {"second", pr.second}, {"shared_edge", pr.sharedEdge.label()}});
  return {{"honeycomb", json::parse(mh_to_json(res.honeycomb))},
          {"phi", phi_json(res.phi)},
          {"loops", loops},
          {"pairings", pairings}};
}

}  // namespace

std::string gl_to_json(const GLHoneycomb& h) {
  validate_gl(h);
  json doc = {{"n", h.n},
              {"a", positions_to_json(h.pos, VKind::A)},
              {"b", positions_to_json(h.pos, VKind::B)}};
  return doc.dump(2) + "\n";
}

GLHoneycomb gl_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (doc.contains("delta"))
    throw InputError("honeycomb json: unexpected \"delta\" on a triangular honeycomb");
  GLHoneycomb h;
  h.n = n_from_json(doc);
  positions_from_json(doc, "a", VKind::A, h.pos);
  positions_from_json(doc, "b", VKind::B, h.pos);
  validate_gl(h);
  return h;
}

std::string mh_to_json(const MoebiusHoneycomb& h) {
  require_valid_mh(h, "mh_to_json");
  json doc = {{"n", h.n},
              {"delta", rat_field(h.delta)},
              {"a", positions_to_json(h.pos, VKind::A)},
              {"b", positions_to_json(h.pos, VKind::B)}};
  return doc.dump(2) + "\n";
}

MoebiusHoneycomb mh_from_json(const std::string& text) {
  const json doc = parse_document(text);
  MoebiusHoneycomb h;
  h.n = n_from_json(doc);
  if (!doc.contains("delta")) throw InputError("honeycomb json: missing \"delta\"");
  const json& d = doc.at("delta");
  if (d.is_number_integer())
    h.delta = Rat(d.get<long long>());
  else if (d.is_string())
    h.delta = parse_rat(d.get<std::string>());
  else
    throw InputError("honeycomb json: \"delta\" must be an integer or rational string");
  positions_from_json(doc, "a", VKind::A, h.pos);
  positions_from_json(doc, "b", VKind::B, h.pos);
  require_valid_mh(h, "mh_from_json");
  return h;
}

bool json_is_moebius(const std::string& text) {
  return parse_document(text).contains("delta");
}

std::string lift_report_json(const LargestLift& lift) {
  json perims = json::object();
  for (const auto& [hex, per] : lift.image.perimeters) perims[hex.label()] = rat_to_string(per);
  json xi = json::array();
  for (const Rat& x : lift.image.xi) xi.push_back(rat_to_string(x));
  json doc = {{"honeycomb", json::parse(mh_to_json(lift.honeycomb))},
              {"iota", {{"perimeters", perims}, {"xi", xi}}},
              {"weighted_perimeter", rat_to_string(lift.weightedPerimeter)},
              {"stages", lift.stages},
              {"integral", is_integral(lift.honeycomb)}};
  return doc.dump(2) + "\n";
}

std::string integralize_report_json(const IntegralizeResult& res) {
  return integralize_json(res).dump(2) + "\n";
}

std::string saturation_report_json(const SaturationResult& res) {
  json doc = {{"k", res.k},
              {"n", res.n},
              {"delta", res.delta},
              {"witness", json::parse(mh_to_json(res.witness))},
              {"breaking", integralize_json(res.breaking)}};
  return doc.dump(2) + "\n";
}

}  // namespace honey

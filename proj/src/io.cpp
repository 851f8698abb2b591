#include "ribbonforge/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

RibbonError format_error(const std::string& what) { return RibbonError(ErrorCode::FormatError, what); }

Scalar rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw format_error(std::string("expected rational string for \"") + key + "\"");
  }
  try {
    return parse_scalar(j[key].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw format_error(e.what());
  }
}

ordered_json edge_ref(const EdgeRef& r) {
  return {{"strand", r.strand}, {"edge", r.edge}, {"param", to_string(r.param)}};
}

EdgeRef read_edge_ref(const json& j) {
  EdgeRef r;
  r.strand = j.at("strand").get<std::size_t>();
  r.edge = j.at("edge").get<std::size_t>();
  r.param = rational_field(j, "param");
  return r;
}

}  // namespace

std::string serialize_diagram(const RibbonDiagram& d) {
  ordered_json strands = ordered_json::array();
  for (const auto& s : d.strands) {
    ordered_json verts = ordered_json::array();
    for (const auto& v : s.vertices) {
      verts.push_back({{"x", to_string(v.position.x)},
                       {"y", to_string(v.position.y)},
                       {"fold_angle", v.fold_angle},
                       {"fold_side", v.fold_side == FoldSide::FoldInFront ? "front" : "behind"}});
    }
    strands.push_back({{"closed", s.closed}, {"vertices", verts}, {"layers", s.layers}});
  }
  ordered_json crossings = ordered_json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back({{"id", c.id}, {"over", edge_ref(c.over)}, {"under", edge_ref(c.under)}, {"sign", c.sign}});
  }
  ordered_json layout = {{"mode", d.layout.exploded ? "exploded" : "tight"}};
  if (d.layout.exploded) layout["delta"] = to_string(d.layout.delta);

  ordered_json diagram;
  diagram["width"] = to_string(d.width);
  diagram["family"] = d.family ? ordered_json(to_string(*d.family)) : ordered_json(nullptr);
  diagram["layout"] = layout;
  diagram["strands"] = strands;
  diagram["crossings"] = crossings;
  if (d.analytic_ribbonlength) diagram["analytic_ribbonlength"] = *d.analytic_ribbonlength;
  if (d.analytic_expression) diagram["analytic_expression"] = *d.analytic_expression;

  ordered_json doc;
  doc["format_version"] = kDocumentVersion;
  doc["diagram"] = diagram;
  return doc.dump(2) + "\n";
}

RibbonDiagram deserialize_diagram(const std::string& text) {
  RibbonDiagram d;
  try {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("format_version")) throw format_error("missing format_version");
    if (doc["format_version"] != kDocumentVersion) {
      throw format_error("unsupported format_version " + doc["format_version"].dump());
    }
    const json& j = doc.at("diagram");
    d.width = rational_field(j, "width");
    if (j.contains("family") && !j["family"].is_null()) {
      try {
        d.family = parse_family(j["family"].get<std::string>());
      } catch (const RibbonError& e) {
        throw format_error(e.what());
      }
    }
    const json& layout = j.at("layout");
    const std::string mode = layout.at("mode").get<std::string>();
    if (mode == "exploded") {
      d.layout = LayoutMode::make_exploded(rational_field(layout, "delta"));
    } else if (mode != "tight") {
      throw format_error("unknown layout mode \"" + mode + "\"");
    }
    for (const auto& js : j.at("strands")) {
      Strand s;
      s.closed = js.at("closed").get<bool>();
      for (const auto& jv : js.at("vertices")) {
        FoldVertex v;
        v.position = {rational_field(jv, "x"), rational_field(jv, "y")};
        v.fold_angle = jv.at("fold_angle").get<double>();
        const std::string side = jv.at("fold_side").get<std::string>();
        if (side != "front" && side != "behind") throw format_error("unknown fold_side \"" + side + "\"");
        v.fold_side = side == "front" ? FoldSide::FoldInFront : FoldSide::FoldBehind;
        s.vertices.push_back(std::move(v));
      }
      s.layers = js.at("layers").get<std::vector<int>>();
      d.strands.push_back(std::move(s));
    }
    for (const auto& jc : j.at("crossings")) {
      CrossingRecord c;
      c.id = jc.at("id").get<int>();
      c.over = read_edge_ref(jc.at("over"));
      c.under = read_edge_ref(jc.at("under"));
      c.sign = jc.at("sign").get<int>();
      d.crossings.push_back(std::move(c));
    }
    if (j.contains("analytic_ribbonlength")) d.analytic_ribbonlength = j["analytic_ribbonlength"].get<double>();
    if (j.contains("analytic_expression")) d.analytic_expression = j["analytic_expression"].get<std::string>();
  } catch (const json::exception& e) {
    throw format_error(e.what());
  }
  validate(d);
  return d;
}

RibbonDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize_diagram(buf.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw format_error("cannot write " + path);
  out << text;
}

bool structurally_equal(const RibbonDiagram& a, const RibbonDiagram& b) {
  if (a.width != b.width || a.family != b.family || !(a.layout == b.layout) ||
      a.layout.exploded != b.layout.exploded || a.crossings != b.crossings ||
      a.analytic_ribbonlength != b.analytic_ribbonlength || a.analytic_expression != b.analytic_expression ||
      a.strands.size() != b.strands.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.strands.size(); ++i) {
    const Strand& s = a.strands[i];
    const Strand& t = b.strands[i];
    if (s.closed != t.closed || s.layers != t.layers || s.vertices.size() != t.vertices.size()) return false;
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      const auto& u = s.vertices[k];
      const auto& v = t.vertices[k];
      if (u.position != v.position || u.fold_angle != v.fold_angle || u.fold_side != v.fold_side) return false;
    }
  }
  return true;
}

}  // namespace ribbonforge

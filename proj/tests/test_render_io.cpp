#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <regex>

#include "ribbonforge/constructions.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/io.hpp"
#include "ribbonforge/metrics.hpp"
#include "ribbonforge/render.hpp"
#include "ribbonforge/topology.hpp"

using namespace ribbonforge;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

int fold_vertices(const RibbonDiagram& d) {
  int n = 0;
  for (const auto& s : d.strands)
    for (const auto& v : s.vertices) n += v.fold_angle < M_PI - 1e-9;
  return n;
}

ErrorCode load_error(const std::string& text) {
  try {
    deserialize_diagram(text);
  } catch (const RibbonError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return ErrorCode::EmptyDiagram;
}

}  // namespace

TEST(Render, PolygonPerPanel) {
  const RibbonDiagram d = torus_link(3, LayoutMode::make_exploded(Scalar(1, 32)));
  const std::string svg = to_svg(d);
  const int panels = measure(d).sticks + fold_vertices(d);
  EXPECT_EQ(count(svg, "<polygon"), panels);
  EXPECT_EQ(static_cast<int>(ribbon_panels(d).size()), panels);
}

TEST(Render, PentagonHasFiveDashedFoldLines) {
  RenderOptions opts;
  opts.show_fold_lines = true;
  const std::string svg = to_svg(pentagon_trefoil(), opts);
  EXPECT_EQ(count(svg, "class=\"fold-line\""), 5);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 1);  // one dashed group
  opts.show_fold_lines = false;
  EXPECT_EQ(count(to_svg(pentagon_trefoil(), opts), "fold-line"), 0);
}

TEST(Render, SingleRootAndDeterministic) {
  const RibbonDiagram d = pretzel({3, 1, -2}, LayoutMode::make_exploded(Scalar(1, 32)));
  RenderOptions opts;
  opts.show_centerline = true;
  opts.label_ends = true;
  const std::string a = to_svg(d, opts), b = to_svg(d, opts);
  EXPECT_EQ(a, b);
  EXPECT_EQ(count(a, "<svg"), 1);
  EXPECT_EQ(count(a, "</svg>"), 1);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_EQ(a.substr(a.size() - 7), "</svg>\n");
}

TEST(Render, PanelsPaintInLayerOrder) {
  const auto panels = ribbon_panels(twist_knot(2, LayoutMode::make_exploded(Scalar(1, 32))));
  for (std::size_t i = 1; i < panels.size(); ++i) EXPECT_LE(panels[i - 1].layer, panels[i].layer);
}

TEST(Render, ViewBoxHasUnitMargin) {
  RenderOptions opts;
  opts.scale = 10;
  const std::string svg = to_svg(hopf_link(), opts);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("viewBox=\"([-0-9.]+) ([-0-9.]+) ([-0-9.]+) ([-0-9.]+)\"")));
  double minx = 1e9, maxx = -1e9;
  for (const auto& p : ribbon_panels(hopf_link()))
    for (auto [x, y] : p.corners) minx = std::min(minx, x), maxx = std::max(maxx, x);
  EXPECT_NEAR(std::stod(m[1]), (minx - 1) * 10, 1e-3);
  EXPECT_NEAR(std::stod(m[3]), (maxx - minx + 2) * 10, 1e-3);
}

TEST(Render, OptionChecks) {
  RenderOptions opts;
  opts.scale = 0;
  EXPECT_THROW(to_svg(hopf_link(), opts), RibbonError);
  opts.scale = 1;
  opts.opacity = 1.5;
  EXPECT_THROW(to_svg(hopf_link(), opts), RibbonError);
}

TEST(Render, ModeOptionRebuildsFamily) {
  RenderOptions opts;
  opts.mode = LayoutMode::make_exploded(Scalar(1, 32));
  EXPECT_EQ(to_svg(torus_link(3), opts), to_svg(torus_link(3, *opts.mode)));
}

TEST(Json, RoundTripIsLossless) {
  for (const auto& d : {torus_link(5), twist_knot(2, LayoutMode::make_exploded(Scalar(3, 97))),
                        pretzel({3, 1, -2}), hopf_link(), pentagon_trefoil()}) {
    const std::string text = serialize_diagram(d);
    const RibbonDiagram back = deserialize_diagram(text);
    EXPECT_TRUE(structurally_equal(back, d)) << to_string(*d.family);
    EXPECT_EQ(serialize_diagram(back), text);
  }
}

TEST(Json, RationalsAreStrings) {
  const auto j = nlohmann::json::parse(serialize_diagram(twist_knot(1, LayoutMode::make_exploded(Scalar(1, 32)))));
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["diagram"]["width"], "1");
  EXPECT_EQ(j["diagram"]["layout"]["delta"], "1/32");
  EXPECT_TRUE(j["diagram"]["strands"][0]["vertices"][0]["x"].is_string());
  EXPECT_EQ(j["diagram"]["family"], "twist(1)");
}

TEST(Json, RejectsBadDocuments) {
  const auto good = nlohmann::json::parse(serialize_diagram(torus_link(3)));
  EXPECT_EQ(load_error("{"), ErrorCode::FormatError);
  auto j = good;
  j["format_version"] = 2;
  EXPECT_EQ(load_error(j.dump()), ErrorCode::FormatError);
  j = good;
  j["diagram"]["width"] = 1;
  EXPECT_EQ(load_error(j.dump()), ErrorCode::FormatError);
  j = good;
  j["diagram"]["width"] = "0";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::InvalidDiagram);
  j = good;
  j["diagram"]["strands"][0]["vertices"][1]["x"] = "1/7";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::InvalidDiagram);
  j = good;
  j["diagram"]["crossings"][0]["sign"] = 0;
  EXPECT_EQ(load_error(j.dump()), ErrorCode::LedgerError);
  j = good;
  j["diagram"]["family"] = "klein(2)";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::FormatError);
}

TEST(PdText, DeclaredCodesRoundTrip) {
  for (const auto& d : {torus_link(4), twist_knot(3), pretzel({1, 2, 3}), pentagon_trefoil()}) {
    const PDCode pd = declared_pd(d);
    const std::string text = to_text(pd);
    EXPECT_EQ(parse_pd_text(text), pd);
    EXPECT_EQ(to_text(parse_pd_text(text)), text);
  }
}

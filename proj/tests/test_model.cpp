#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "ribbonforge/constructions.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/model.hpp"
#include "ribbonforge/pd.hpp"

using namespace ribbonforge;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const RibbonError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no RibbonError thrown";
  return ErrorCode::FormatError;
}

RibbonDiagram square() {
  RibbonDiagram d;
  Strand s;
  for (auto [x, y] : {std::pair{0, 0}, {2, 0}, {2, 2}, {0, 2}}) s.vertices.push_back({{Scalar(x), Scalar(y)}});
  s.layers = {0, 0, 0, 0};
  assign_fold_angles(s);
  d.strands.push_back(s);
  return d;
}

}  // namespace

TEST(Family, TextRoundTrip) {
  for (const auto& f : {FamilySpec::torus2(5), FamilySpec::twist(2), FamilySpec::pretzel({3, 1, -2}),
                        FamilySpec::unknot(), FamilySpec::hopf(), FamilySpec::pentagon_trefoil()}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_EQ(to_string(FamilySpec::pretzel({3, 1, -2})), "pretzel(3,1,-2)");
  EXPECT_THROW(parse_family("torus2(x)"), RibbonError);
  EXPECT_THROW(parse_family("klein"), RibbonError);
}

TEST(Family, ParameterChecks) {
  EXPECT_EQ(code_of([] { FamilySpec::torus2(1); }), ErrorCode::ParameterError);
  EXPECT_EQ(code_of([] { FamilySpec::twist(0); }), ErrorCode::ParameterError);
  EXPECT_EQ(code_of([] { FamilySpec::pretzel({1, 2}); }), ErrorCode::ParameterError);
}

TEST(LayoutMode, DeltaRange) {
  EXPECT_NO_THROW(LayoutMode::make_exploded(Scalar(1, 32)));
  EXPECT_EQ(code_of([] { LayoutMode::make_exploded(Scalar(1, 8)); }), ErrorCode::ParameterError);
  EXPECT_EQ(code_of([] { LayoutMode::make_exploded(Scalar(0)); }), ErrorCode::ParameterError);
}

TEST(Validate, AcceptsSquare) {
  const RibbonDiagram d = square();
  EXPECT_NO_THROW(validate(d));
  EXPECT_NEAR(d.strands[0].vertices[1].fold_angle, M_PI / 2, 1e-12);
}

TEST(Validate, RejectsBrokenDiagrams) {
  RibbonDiagram d = square();
  d.width = 0;
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::InvalidDiagram);

  EXPECT_EQ(code_of([] { validate(RibbonDiagram{}); }), ErrorCode::EmptyDiagram);

  d = square();
  d.strands[0].layers.pop_back();
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::InvalidDiagram);

  d = square();
  d.strands[0].vertices[2].fold_angle = 1.0;
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::InvalidDiagram);

  d = square();
  d.strands[0].vertices[1].position = d.strands[0].vertices[0].position;
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::InvalidDiagram);

  d = square();
  d.crossings.push_back({0, {0, 0, Scalar(1, 2)}, {0, 0, Scalar(1, 2)}, 1});
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::LedgerError);

  d = square();
  d.crossings.push_back({0, {0, 0, Scalar(1, 2)}, {0, 9, Scalar(1, 2)}, 1});
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::LedgerError);

  d = square();
  d.crossings.push_back({0, {0, 0, Scalar(1)}, {0, 2, Scalar(1, 2)}, 1});
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::LedgerError);
}

TEST(FoldMirror, SquareHasFourFolds) { EXPECT_EQ(check_fold_mirror(square().strands[0]), 4u); }

TEST(PdText, RoundTripIsExact) {
  PDCode pd;
  pd.crossings = {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
  pd.n_arcs = 6;
  pd.free_loops = 2;
  const std::string text = to_text(pd);
  EXPECT_EQ(text, "pd 3 6\n\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\nunlinked 2\n");
  EXPECT_EQ(parse_pd_text(text), pd);
  EXPECT_EQ(to_text(parse_pd_text(text)), text);
}

TEST(PdText, RejectsMalformed) {
  EXPECT_THROW(parse_pd_text(""), RibbonError);
  EXPECT_THROW(parse_pd_text("pd 1 2\n\nX 1 2 1\n"), RibbonError);
  EXPECT_THROW(parse_pd_text("pd 1 2\n\nX 1 2 1 3\n"), RibbonError);
  EXPECT_THROW(parse_pd_text("pd 2 4\n\nX 1 2 1 2\n"), RibbonError);
}

TEST(PdCanonical, InvariantUnderRelabeling) {
  PDCode pd;
  pd.crossings = {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
  pd.n_arcs = 6;
  PDCode shifted = pd;
  // Rotate labels along the strand: k -> k+2 (mod 6).
  for (auto& x : shifted.crossings)
    for (int& l : x) l = (l + 1) % 6 + 1;
  std::reverse(shifted.crossings.begin(), shifted.crossings.end());
  EXPECT_EQ(canonical_form(pd), canonical_form(shifted));
  EXPECT_EQ(canonical_form(canonical_form(pd)), canonical_form(pd));
}

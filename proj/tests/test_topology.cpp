#include <gtest/gtest.h>

#include "ribbonforge/constructions.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/invariants.hpp"
#include "ribbonforge/topology.hpp"

using namespace ribbonforge;

namespace {

bool verified(const TypeCheck& t) { return t.verdict == Verdict::Verified || t.verdict == Verdict::MirrorVerified; }

RibbonDiagram flip_crossing(RibbonDiagram d, std::size_t i) {
  std::swap(d.crossings[i].over, d.crossings[i].under);
  d.crossings[i].sign = -d.crossings[i].sign;
  return d;
}

}  // namespace

TEST(Extraction, DeclaredMatchesGeometry) {
  const auto m = LayoutMode::make_exploded(ledger_reference_delta());
  for (const auto& d : {torus_link(3, m), torus_link(6, m), twist_knot(2, m), twist_knot(4, m),
                        pretzel({3, 1, -2}, m), pretzel({1, 2, 3}, m), hopf_link(m), pentagon_trefoil()}) {
    EXPECT_EQ(canonical_form(extract_pd(d)), canonical_form(declared_pd(d))) << to_string(*d.family);
  }
}

TEST(Extraction, TightLedgerIsTheReferenceLedger) {
  const auto m = LayoutMode::make_exploded(ledger_reference_delta());
  for (int q = 2; q <= 6; ++q) {
    EXPECT_EQ(canonical_form(declared_pd(torus_link(q))), canonical_form(extract_pd(torus_link(q, m))));
  }
}

TEST(Extraction, TightLayoutIsNotGeneric) {
  EXPECT_THROW(extract_pd(torus_link(3)), RibbonError);
}

TEST(Extraction, LedgerFromLayersAgrees) {
  const RibbonDiagram d = twist_knot(3, LayoutMode::make_exploded(Scalar(1, 50)));
  RibbonDiagram e = d;
  e.crossings = ledger_from_layers(d.strands);
  EXPECT_EQ(canonical_form(declared_pd(e)), canonical_form(declared_pd(d)));
}

TEST(SameType, FamiliesMatchTheirReferences) {
  for (int q = 2; q <= 6; ++q) EXPECT_TRUE(verified(same_type(torus_link(q), FamilySpec::torus2(q)))) << q;
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verified(same_type(twist_knot(n), FamilySpec::twist(n)))) << n;
  EXPECT_TRUE(verified(same_type(pretzel({1, 2, 3}), FamilySpec::pretzel({1, 2, 3}))));
  EXPECT_TRUE(verified(same_type(hopf_link(), FamilySpec::hopf())));
  EXPECT_TRUE(verified(same_type(pentagon_trefoil(), FamilySpec::torus2(3))));
}

TEST(SameType, ZeroTwistColumnGivesHopfLink) {
  const RibbonDiagram d = pretzel({2, 1, 0});
  const PDCode pd = declared_pd(d);
  EXPECT_EQ(components(pd), 2);
  EXPECT_EQ(std::abs(linking_number(pd, orientation_orbit(pd)[0])), 1);
  EXPECT_TRUE(verified(same_type(d, FamilySpec::hopf())));
}

TEST(SameType, TwistOneIsTrefoil) {
  EXPECT_TRUE(verified(same_type(twist_knot(1), FamilySpec::torus2(3))));
}

TEST(SameType, NegativeControls) {
  EXPECT_EQ(same_type(torus_link(3), FamilySpec::twist(2)).verdict, Verdict::Failed);
  EXPECT_EQ(same_type(torus_link(4), FamilySpec::torus2(3)).verdict, Verdict::Failed);
  EXPECT_EQ(same_type(flip_crossing(torus_link(3), 0), FamilySpec::torus2(3)).verdict, Verdict::Failed);
}

TEST(SameType, InconclusiveAboveCap) {
  const RibbonDiagram d = pretzel({2, 1, -3, 1});
  ASSERT_GT(d.crossings.size(), static_cast<std::size_t>(kDefaultBracketLimit));
  EXPECT_EQ(same_type(d, FamilySpec::pretzel({2, 1, -3, 1})).verdict, Verdict::Inconclusive);
  EXPECT_TRUE(verified(same_type(d, FamilySpec::pretzel({2, 1, -3, 1}), 40)));
}

TEST(Reference, PentagonIsRejected) { EXPECT_THROW(reference_pd(FamilySpec::pentagon_trefoil()), RibbonError); }

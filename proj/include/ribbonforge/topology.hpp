#pragma once

#include <string>
#include <vector>

#include "ribbonforge/invariants.hpp"
#include "ribbonforge/model.hpp"
#include "ribbonforge/pd.hpp"

namespace ribbonforge {

/// PD code read off the declared crossing ledger. Each strand is walked
/// from vertex 0 and its arcs are cut at every ledger crossing.
PDCode declared_pd(const RibbonDiagram& d);

/// PD code recomputed from the geometry of a generic (exploded) layout.
/// Over/under comes from the ledger entry on the same edge pair; the
/// crossing handedness comes from the geometry. Throws GenericityError
/// for touching, overlapping, or coincident crossings and LedgerError
/// when geometry and ledger disagree on which edges cross.
PDCode extract_pd(const RibbonDiagram& d);

/// Crossing ledger of a generic layout with over/under decided by the
/// per-edge layers. Throws GenericityError like extract_pd, and
/// LedgerError when two crossing edges share a layer.
std::vector<CrossingRecord> ledger_from_layers(const std::vector<Strand>& strands);

/// Standard minimal-style diagram of a family: pretzel twist columns side
/// by side, with Torus2(q) = P(1,...,1), Twist(n) = P(n,1,1) and
/// Hopf = P(1,1). PentagonTrefoil is rejected with a hint.
PDCode reference_pd(const FamilySpec& f);

enum class Verdict { Verified, MirrorVerified, Failed, Inconclusive };

const char* verdict_name(Verdict v);

struct TypeCheck {
  Verdict verdict = Verdict::Inconclusive;
  std::string diagnostics;
};

/// Compares component count, |Lk| (two components) and the set of Jones
/// polynomials over all relative orientations, directly or mirrored.
TypeCheck same_type(const RibbonDiagram& d, const FamilySpec& f, int limit = kDefaultBracketLimit);
TypeCheck same_type(const PDCode& pd, const FamilySpec& f, int limit = kDefaultBracketLimit);

}  // namespace ribbonforge

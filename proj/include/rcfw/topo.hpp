#pragma once

#include <string>
#include <vector>

#include "rcfw/algreal.hpp"
#include "rcfw/poly.hpp"
#include "rcfw/sa.hpp"

namespace rcfw {

// Classification of a set of dimension <= 1 as a topological curve.
// Boundary and witness entries are sample points (one AlgReal per ambient
// coordinate); a NotManifold witness lies in the closure of the set.
struct ManifoldVerdict {
  enum class Kind { NoBoundary, WithBoundary, NotManifold, Unsupported };
  Kind kind = Kind::NoBoundary;
  std::vector<std::vector<AlgReal>> boundary;  // WithBoundary only
  std::vector<AlgReal> witness;                // NotManifold only
  std::string reason;                          // Unsupported only
};

// Local structure through cell adjacency: every 1-cell point is interior;
// a 0-cell with two selected half-branches is interior, with one is a
// boundary point. Ambient 2 follows the strict reading where a closure
// point outside the set (an open end or puncture) disqualifies the curve;
// ambient 1 uses the intrinsic reading where open ends are fine, so the
// verdict matches the compiled local-graph sentences on the line.
ManifoldVerdict check_curve_manifold(const SaDescription& d);

struct RegularityVerdict {
  bool pass = false;
  std::vector<AlgReal> witness;  // a singular point of f on d when failing
};

// Certifies d as a smooth curve piece: passes iff the gradient of f never
// vanishes on d. Requires d to be contained in { f = 0 } (checked).
RegularityVerdict regularity_check(const Poly& f, const SaDescription& d);

struct CompactnessVerdict {
  bool closed = false;
  bool bounded = false;
};

// Closed: every cell meeting the closure of a selected cell is selected.
// Bounded: the sentence "some bound dominates every coordinate squared"
// holds. Exact for ambient <= 2.
CompactnessVerdict compactness_check(const SaDescription& d);

struct HomeoVerdict {
  enum class Kind { Accept, Reject, Unsupported };
  Kind kind = Kind::Reject;
  std::string reason;  // rejection cause, or the unsupported note
};

// Decides whether G is the graph of a homeomorphism from X onto Y. With
// ambient 1 the verdict is exact: the five graph clauses are decided and
// closedness of the graph replaces the continuity clauses (equivalent for
// compact X and Y). Higher ambient runs a sampling falsifier that may
// reject but never accepts.
HomeoVerdict verify_homeo(const SaDescription& X, const SaDescription& Y,
                          const SaDescription& G);

struct CobordismVerdict {
  bool accept = false;
  std::string reason;  // empty when accepted
};

// M must be a compact curve whose manifold boundary equals M0 union M1
// with M0 and M1 disjoint. All comparisons run on one shared decomposition.
CobordismVerdict check_cobordism(const SaDescription& M, const SaDescription& M0,
                                 const SaDescription& M1);

}  // namespace rcfw

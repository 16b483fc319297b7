#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rcfw/rat.hpp"

namespace rcfw {

// Vertices are single alphanumeric characters; a simplex is the sorted
// string of its vertices, so "bca" and "abc" name the same triangle.
using Simplex = std::string;

// Sorts and validates: nonempty, alphanumeric, no repeated vertex.
Simplex make_simplex(const std::string& verts);

// Face-closed set of simplices. The empty complex is allowed as a value.
struct SimplicialComplex {
  std::set<Simplex> faces;
  bool operator==(const SimplicialComplex&) const = default;
};

SimplicialComplex complex_from_facets(const std::vector<std::string>& facets);

// Facet-list text: whitespace-separated tokens, one facet each.
SimplicialComplex parse_complex(const std::string& text);

// Maximal simplices, space separated in sorted order.
std::vector<Simplex> facets_of(const SimplicialComplex& k);
std::string print_complex(const SimplicialComplex& k);

long euler_characteristic(const SimplicialComplex& k);
int complex_dim(const SimplicialComplex& k);  // -1 for the empty complex
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k);

// All pairs (sigma, tau) where tau is the only simplex properly
// containing sigma, in lexicographic order of sigma.
std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& k);

enum class StepKind { Collapse, Expansion };

struct CollapseStep {
  StepKind kind = StepKind::Collapse;
  Simplex sigma;
  Simplex tau;
  bool operator==(const CollapseStep&) const = default;
};

// Remove (or insert) the pair {sigma, tau}. The step must be valid
// against k: for a collapse sigma is free with unique coface tau, for an
// expansion both are absent and the rest of the boundary of tau is
// present. Invalid steps throw std::invalid_argument with the reason.
// The kind field is ignored here; it matters when replaying certificates.
SimplicialComplex apply_collapse(const SimplicialComplex& k, const CollapseStep& s);
SimplicialComplex apply_expansion(const SimplicialComplex& k, const CollapseStep& s);

struct HomotopyCertificate {
  SimplicialComplex base;
  SimplicialComplex fixed;  // subcomplex left untouched by every step
  std::vector<CollapseStep> steps;
  SimplicialComplex target;
};

enum class SearchStatus { Found, Budget, Complete };

struct SearchResult {
  SearchStatus status = SearchStatus::Complete;
  HomotopyCertificate cert;  // only meaningful when status == Found
  long expanded = 0;         // states whose moves were generated
};

// Depth-first search for a collapse sequence from k down to exactly y,
// never removing a simplex of y. States are deduplicated by their facet
// form; the budget caps how many states may be expanded. Collapse moves
// only; certificates with expansions are still accepted by the verifier.
SearchResult collapse_search(const SimplicialComplex& k, const SimplicialComplex& y,
                             long budget);

struct VerifyResult {
  bool accept = false;
  int step = -1;  // failing step index; steps.size() for a target mismatch
  std::string reason;
};

// Replays every step of the certificate, checking validity and that the
// fixed subcomplex is never touched, then compares against the target.
VerifyResult verify_certificate(const HomotopyCertificate& cert);

// Certificate step lines: "C sigma tau" or "E sigma tau".
std::vector<CollapseStep> parse_steps(const std::string& text);
std::string print_steps(const std::vector<CollapseStep>& steps);

// Piecewise map gluing a shrunken copy of the standard m-simplex to a
// boundary collar: a point x of the simplex goes to b/2 + x/2 where b is
// the barycenter; a collar point (x, lambda) with x on the boundary goes
// to ((1-lambda)/2) b + ((1+lambda)/2) x. Coordinates are barycentric
// (nonnegative, summing to 1), lambda ranges over [0, 1], and the two
// branches agree at lambda = 0.
std::vector<Rat> collar_cone_map(const std::vector<Rat>& x);
std::vector<Rat> collar_cone_map(const std::vector<Rat>& x, const Rat& lambda);

// Classical complexes without free faces, both contractible: the 8-vertex
// 17-triangle dunce hat and a 60-vertex 140-triangle house with two rooms
// (3x4x2 grid shell, middle floor, two interior tunnel shafts on crossed
// sides, one support wall per room; each unit square split by a diagonal).
SimplicialComplex dunce_hat();
SimplicialComplex bing_house();

}  // namespace rcfw

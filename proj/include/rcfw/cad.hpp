#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rcfw/algreal.hpp"
#include "rcfw/formula.hpp"
#include "rcfw/poly.hpp"
#include "rcfw/sa.hpp"

namespace rcfw {

// Hard limits; all violations throw CapacityError with a diagnostic, never
// degrade silently.
inline constexpr int kMaxCadVars = 3;           // ambient dimension / bound variables
inline constexpr unsigned kMaxCadDegree = 32;   // per input polynomial
inline constexpr std::size_t kMaxCadLevelPolys = 160;  // prepared basis per level

// Serial is the reference implementation; Parallel distributes the lifting
// of independent level-1 subtrees over OpenMP threads (capped by the
// RCFW_THREADS environment variable) and produces the identical tree.
enum class LiftMode { Auto, Serial, Parallel };

struct CadCell {
  std::vector<AlgReal> sample;  // one coordinate per level, level k at [k-1]
  std::vector<int> path;        // stack position per level, bottom to top
  std::vector<bool> section;    // per level: coordinate pinned on a root
  std::vector<int> signs;       // sign of each tree input at the sample
  int dim = 0;                  // number of sector levels
};

struct CadTree {
  int n = 0;
  std::vector<Poly> inputs;              // exactly as passed in, order kept
  std::vector<std::vector<Poly>> basis;  // prepared level polynomials, basis[k] has arity k+1
  std::vector<CadCell> cells;            // path-lexicographic (cylindrical) order
};

// Sign-invariant cylindrical decomposition of R^n adapted to the inputs.
// Inputs may repeat and may be constant; all must have arity n. The sign
// vector of every cell is evaluated exactly at its sample point.
CadTree decompose(const std::vector<Poly>& polys, int n, LiftMode mode = LiftMode::Auto);

// Decomposition adapted to d's polynomials.
CadTree decompose_for(const SaDescription& d, LiftMode mode = LiftMode::Auto);

// Indices of the cells on which d holds. Every distinct polynomial of d must
// be among t's inputs; anything else is an inconsistency, not a silent miss.
std::vector<int> set_cells(const CadTree& t, const SaDescription& d);

// The unique cell containing a rational point.
int locate(const CadTree& t, const std::vector<Rat>& x);

int dimension(const SaDescription& d);  // -1 for the empty set
bool is_empty(const SaDescription& d);
bool sets_equal(const SaDescription& a, const SaDescription& b);

// Number of connected components; exact for ambient dimension <= 2.
int connected_components(const SaDescription& d);

// Directed incidence (i, j), i != j: cell j meets the closure of cell i.
// A union of cells is closed iff it is closed under following these edges.
// Ambient dimension <= 2.
std::vector<std::pair<int, int>> frontier_pairs(const CadTree& t);

// Exact truth of a closed sentence. Boolean combinations of closed pieces
// are decided piecewise, so only each quantified piece counts against the
// kMaxCadVars variable budget.
bool decide(const FormulaPtr& sentence);

// Membership for a batch of rational points; the parallel path splits the
// batch across OpenMP threads and agrees bit for bit with the serial one.
std::vector<char> batch_member(const SaDescription& d,
                               const std::vector<std::vector<Rat>>& pts,
                               LiftMode mode = LiftMode::Auto);

}  // namespace rcfw

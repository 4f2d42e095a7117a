#pragma once
#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/laurent.hpp"
#include "skeinlab/twovar.hpp"

namespace skeinlab {

// Planar-diagram code.  Each crossing is a quadruple X[a,b,c,d] listing the
// four incident edge labels counterclockwise, starting from the incoming
// under-edge: the under-strand runs a -> c, the over-strand occupies the
// (d,b) positions.  Labels are 1..2*#crossings and every label appears
// exactly twice.  free_loops counts crossing-free unknot components, which
// carry no labels (braid closures of empty words produce them).
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;
};

// Braid word on `strands` strands.  Letter +g / -g is the positive /
// negative Artin generator sigma_g (1 <= g < strands).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// Orientation data inferred from a PD code.  Components are indexed in
// order of their smallest edge label; free loops come after all labeled
// components.  A crossing sign is +1 when the over-strand enters at the d
// slot (the braid-positive picture), -1 otherwise.  self_writhes[i] sums
// the signs of crossings whose two strands both belong to component i;
// reversing any single component flips no self-crossing sign, so these are
// orientation-independent.
struct OrientedDiagram {
  PDCode pd;
  std::vector<int> component_of_edge;  // indexed by edge label, entry 0 unused
  std::vector<int> crossing_signs;     // one per crossing, +1 / -1
  std::vector<int> self_writhes;       // one per component (free loops: 0)
  int components() const { return static_cast<int>(self_writhes.size()); }
};

// Square integer matrix feeding the Alexander determinant; constructing the
// matrix from a diagram is out of scope here.
struct SeifertMatrix {
  std::vector<std::vector<std::int64_t>> entries;
};

// --- ingestion ------------------------------------------------------------

// Throws InputError when the label multiset breaks the PDCode invariants.
void validate_pd(const PDCode& pd);
void validate_braid(const BraidWord& b);

// Accepts `PD[X[a,b,c,d],...]` (whitespace-insensitive) or one quadruple
// per line, digits separated by non-digits.  Degenerate but label-valid
// inputs such as PD[X[1,1,2,2]] (a one-crossing kinked unknot) are accepted;
// only label-count violations are rejected.
PDCode parse_pd(const std::string& text);
std::string pd_to_string(const PDCode& pd);

// Trace closure of a braid word with deterministic strand-following edge
// labels.  The empty word on s strands closes to the crossing-free
// s-component unlink.
PDCode braid_closure_pd(const BraidWord& b);

// Swap over/under at every crossing.  Quadruples are rotated so the new
// incoming under-edge sits in the a slot; the rotation direction is chosen
// per crossing from the inferred orientation, so the result is again a
// consistently oriented PD code.
PDCode mirror_pd(const PDCode& pd);

// Orientation, crossing signs and self-writhes by constraint propagation
// along strands (under-strands run a -> c; components that never pass under
// get an arbitrary but deterministic direction, which no downstream value
// depends on).  Throws InputError when no consistent orientation exists.
OrientedDiagram orient(const PDCode& pd);

// --- invariants -----------------------------------------------------------

// Kauffman-bracket state sum: each crossing resolves into the (a,b),(c,d)
// smoothing with weight q^{1/2} and the (a,d),(b,c) smoothing with weight
// q^{-1/2}; every closed loop contributes delta = -(q + q^{-1}).  The empty
// diagram gives 1, the unknot -(q+q^{-1}).  A one-time self-test pins the
// calibration (Hopf value and positive-kink factor -q^{3/2}) before the
// first evaluation.  State count is capped at 2^16 crossings' worth by
// default; SKEINLAB_MAX_CROSSINGS overrides the cap.
LaurentPoly kauffman_bracket(const PDCode& pd);

// Colored Jones via blackboard cabling: component i is replaced by
// colors[i] parallel copies with one Jones-Wenzl coupon inserted, the
// cabled bracket is evaluated, and the framing correction
// prod_i ((-1)^{c_i} q^{(c_i^2+2c_i)/2})^{-w_i} with w_i the SELF-writhe is
// applied.  Color 0 deletes a component.  The rational JW coefficients are
// guaranteed to cancel; a leftover denominator is an internal error.
LaurentPoly colored_jones(const PDCode& pd, const std::vector<int>& colors);

// colored_jones with every color 1.  J(unknot) = -[2]_q; mirror diagrams
// map to the q <-> q^{-1} image.
LaurentPoly jones(const PDCode& pd);

// Two-variable Kauffman (Dubrovnik) polynomial by descending-diagram
// recursion, at most 10 crossings.  `normalized` divides out one circle
// value (unknot -> 1); pass false for the raw closed-diagram evaluation
// (unknot -> circle value).
TwoVarLaurentPoly kauffman_polynomial(const PDCode& pd, bool normalized = true);

// det(S - q S^T), exact over Z[q^{+-1}].  The empty matrix gives 1.
LaurentPoly alexander_from_seifert(const SeifertMatrix& s);

// Jones polynomial through the 4x4 R-matrix acting on adjacent slots of
// (C^2)^{tensor s}, closed with the frozen diagonal enhancement
// mu = -q^{-1/2} diag(1, q).  The braid trace equals
// (-1)^w delta V(q) for the classical normalization V; substituting
// q -> q^{-2} and multiplying by the unit (-1)^w q^{3 lk} (lk = total
// linking between distinct closure components, read off the permutation)
// reproduces jones(braid_closure_pd(b)) exactly.  The calibration is
// asserted on the unknot and the single positive kink in the test suite.
LaurentPoly jones_via_rmatrix(const BraidWord& b);

// --- braid moves ----------------------------------------------------------

enum class MarkovKind {
  Conjugate,          // w -> g w g^{-1} (g a signed letter)
  StabilizePositive,  // w on s strands -> w sigma_s on s+1 strands
  StabilizeNegative,  // w -> w sigma_s^{-1} on s+1 strands
  Destabilize,        // inverse of stabilization; last letter must be the
                      // unique occurrence of +-sigma_{strands-1}
};

// Markov move preserving the closure link.  `g` is the conjugating letter
// (ignored for the other kinds).  Invalid destabilizations throw
// DomainError.
BraidWord markov_move(const BraidWord& b, MarkovKind kind, int g = 1);

// --- statistics and censuses ----------------------------------------------

struct PolyStats {
  Int coeff_sum_abs;   // sum of |coefficients|
  Int max_abs_coeff;   // max |coefficient|
  double spread;       // (max degree - min degree) in q-units, half-integers allowed
  bool zero = false;   // spread of the zero polynomial is 0 by convention
};
PolyStats poly_stats(const LaurentPoly& p);

struct DistinctValuesReport {
  std::size_t total = 0;     // items submitted
  std::size_t computed = 0;  // items whose invariant evaluated
  std::size_t distinct = 0;  // distinct values among computed (mirror-blind)
  double percentage = 0.0;   // 100 * distinct / total
  // Names sharing one invariant value, only for classes of size >= 2.
  std::vector<std::vector<std::string>> collisions;
  // (name, error message) for items whose evaluation failed.
  std::vector<std::pair<std::string, std::string>> failures;
};

// invariant is one of "jones", "bracket", "kauffman".  A value and its
// mirror image (q <-> q^{-1}, respectively a <-> a^{-1}) are identified, so
// chiral pairs collide on purpose.  Per-item failures are collected, not
// fatal.
DistinctValuesReport distinct_values(
    const std::vector<std::pair<std::string, PDCode>>& items,
    const std::string& invariant = "jones");

// CSV rows `name,pd` (a leading `name,pd` header row is skipped).  The PD
// field may contain commas; only the first comma splits.
std::vector<std::pair<std::string, PDCode>> parse_census_csv(std::istream& in);

// Trefoil and figure-eight, the two diagrams that ship built in.
std::vector<std::pair<std::string, PDCode>> builtin_census();

}  // namespace skeinlab

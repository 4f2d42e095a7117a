#pragma once
#include <memory>

#include "skeinlab/qnum.hpp"
#include "skeinlab/tl.hpp"

namespace skeinlab {

// e_i: the unique element of End(i) that contains the identity diagram with
// coefficient 1 and annihilates every adjacent cap; those two facts force
// idempotency, since any non-identity diagram factors through some cap.
struct JWProjector {
  int index = 0;
  TLMorphism body;
};

// Build e_i by the recursion
//   e_i = e_{i-1} (x) id  +  ([i-1]/[i]) (e_{i-1} (x) id) u_{i-1} (e_{i-1} (x) id)
// with e_0 the empty diagram and e_1 a single strand.  Results are kept in a
// write-once shared cache; identity coefficient and cap annihilation are
// asserted on every build.
std::shared_ptr<const JWProjector> jw_build(int i);

// Exact symbolic checks, exposed as property-test hooks.  They run on an
// internal common-denominator representation, so the quadratic idempotency
// check stays affordable at i = 8 (1430^2 diagram compositions).
bool jw_idempotency_check(int i);          // e_i e_i = e_i
bool jw_cap_kill_check(int i);             // (cap_j (x) rest) e_i = 0 for all j
bool jw_absorb_check(int i, int j);        // (e_j (x) id) e_i = e_i = e_i (e_j (x) id)

// Close the rightmost strand of e: equals (-[i+1]/[i]) e_{i-1}; for i = 1
// this is the circle value delta times the empty diagram.
TLMorphism jw_partial_trace(const JWProjector& e);

// Markov trace of e_i; always simplifies to the polynomial (-1)^i [i+1]_q.
LaurentPoly jw_trace(int i);

// Whether e_i survives the specialization: true iff every quantum binomial
// [i choose j] (0 <= j <= i) is nonzero there.
bool jw_exists_at(int i, const Specialization& spec);

}  // namespace skeinlab

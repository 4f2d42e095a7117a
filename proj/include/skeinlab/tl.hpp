#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

struct DiagramComposition;

// Crossingless matching of m bottom and n top boundary points of a
// rectangle.  Bottom points are labeled 1..m left to right, top points
// m+1..m+n left to right.  The pairing is stored sorted (each pair
// lo < hi, pairs ascending), so equal diagrams compare equal bitwise.
class TLDiagram {
 public:
  using Pairing = std::vector<std::pair<int, int>>;

  TLDiagram(int bottom, int top, Pairing pairs);

  static TLDiagram identity(int n);
  // u_i in End(n): caps (i, i+1) at the bottom, cups (i, i+1) at the top.
  static TLDiagram generator(int n, int i);
  // cap_i: n -> n-2, joining bottom points (i, i+1), everything else through.
  static TLDiagram cap(int n, int i);
  // cup_i: n-2 -> n, the flip of cap_i.
  static TLDiagram cup(int n, int i);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Pairing& pairs() const { return pairs_; }

  bool operator==(const TLDiagram& o) const {
    return bottom_ == o.bottom_ && top_ == o.top_ && pairs_ == o.pairs_;
  }
  bool operator!=(const TLDiagram& o) const { return !(*this == o); }
  bool operator<(const TLDiagram& o) const;

  std::string str() const;  // e.g. TL(3->3)[(1,4),(2,3),(5,6)]

 private:
  // Internal fast path: pairing already known to be a planar perfect
  // matching (output of composition/tensor of valid diagrams).
  struct Unchecked {};
  TLDiagram(int bottom, int top, Pairing pairs, Unchecked);
  friend DiagramComposition tl_compose_diagrams(const TLDiagram&, const TLDiagram&);
  friend TLDiagram tl_tensor_diagrams(const TLDiagram&, const TLDiagram&);
  friend DiagramComposition tl_close_rightmost(const TLDiagram&);

  int bottom_ = 0, top_ = 0;
  Pairing pairs_;
};

// g after f: f: m->k, then g: k->n.  Returns the resulting diagram plus the
// number of closed circles swallowed by the gluing.
struct DiagramComposition {
  TLDiagram diagram;
  int circles;
};
DiagramComposition tl_compose_diagrams(const TLDiagram& g, const TLDiagram& f);

// Horizontal juxtaposition (f left, g right).
TLDiagram tl_tensor_diagrams(const TLDiagram& f, const TLDiagram& g);

// Markov closure of an endomorphism diagram: connect bottom i to top i
// around the right; returns the number of circles.
int tl_closure_circles(const TLDiagram& d);

// Close only the rightmost strand of an endomorphism diagram, giving an
// (n-1)-endomorphism and 0 or 1 circles.
DiagramComposition tl_close_rightmost(const TLDiagram& d);

// All planar matchings in a deterministic order (sorted canonical pairings);
// empty when m+n is odd.  |result| = catalan((m+n)/2).
std::vector<TLDiagram> tl_basis(int m, int n);

// The circle value delta = -(q + q^{-1}).
LaurentPoly tl_delta();

// Formal RationalFn-linear combination of diagrams with common boundary.
class TLMorphism {
 public:
  using Terms = std::map<TLDiagram, RationalFn>;

  TLMorphism(int bottom, int top) : bottom_(bottom), top_(top) {}
  explicit TLMorphism(const TLDiagram& d, RationalFn coeff = RationalFn::one());

  static TLMorphism identity(int n) { return TLMorphism(TLDiagram::identity(n)); }
  static TLMorphism generator(int n, int i) { return TLMorphism(TLDiagram::generator(n, i)); }
  static TLMorphism zero(int bottom, int top) { return TLMorphism(bottom, top); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFn coeff(const TLDiagram& d) const;

  void add_term(const TLDiagram& d, const RationalFn& c);
  TLMorphism operator-() const;
  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b);
  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b);
  TLMorphism scaled(const RationalFn& c) const;
  bool operator==(const TLMorphism& o) const;
  bool operator!=(const TLMorphism& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int bottom_, top_;
  Terms terms_;
};

// g after f with circle factors delta^{#circles}; bilinear.
TLMorphism tl_compose(const TLMorphism& g, const TLMorphism& f);
TLMorphism tl_tensor(const TLMorphism& f, const TLMorphism& g);
// Markov trace: delta per closure circle, coefficient-linear.
RationalFn tl_trace(const TLMorphism& f);

}  // namespace skeinlab

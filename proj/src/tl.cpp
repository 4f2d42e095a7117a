#include "skeinlab/tl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Boundary points in circular order: bottom 1..m left to right, then up the
// right side and back along the top, so top label j sits at 2m+n+1-j.
int circular_pos(int label, int bottom, int top) {
  return label <= bottom ? label : 2 * bottom + top + 1 - label;
}

TLDiagram::Pairing canonicalize(TLDiagram::Pairing pairs) {
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

TLDiagram::TLDiagram(int bottom, int top, Pairing pairs, Unchecked)
    : bottom_(bottom), top_(top), pairs_(canonicalize(std::move(pairs))) {}

TLDiagram::TLDiagram(int bottom, int top, Pairing pairs)
    : bottom_(bottom), top_(top), pairs_(canonicalize(std::move(pairs))) {
  if (bottom_ < 0 || top_ < 0) throw DomainError("TLDiagram: negative boundary size");
  const int total = bottom_ + top_;
  if (total % 2 != 0) throw DomainError("TLDiagram: odd number of boundary points");
  if (static_cast<int>(pairs_.size()) * 2 != total)
    throw DomainError("TLDiagram: pairing does not cover all boundary points");
  std::vector<char> seen(total + 1, 0);
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || a > total || b < 1 || b > total || a == b)
      throw DomainError("TLDiagram: pair labels out of range");
    if (seen[a]++ || seen[b]++) throw DomainError("TLDiagram: label matched twice");
  }
  // Planarity: no two chords interleave in the circular boundary order.
  std::vector<std::pair<int, int>> chords;
  chords.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) {
    int pa = circular_pos(a, bottom_, top_), pb = circular_pos(b, bottom_, top_);
    chords.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  for (size_t i = 0; i < chords.size(); ++i) {
    for (size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
        throw DomainError("TLDiagram: strands cross");
    }
  }
}

TLDiagram TLDiagram::identity(int n) {
  Pairing p;
  p.reserve(n);
  for (int j = 1; j <= n; ++j) p.emplace_back(j, n + j);
  return TLDiagram(n, n, std::move(p));
}

TLDiagram TLDiagram::generator(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw DomainError("TL generator index out of range");
  Pairing p{{i, i + 1}, {n + i, n + i + 1}};
  for (int j = 1; j <= n; ++j)
    if (j != i && j != i + 1) p.emplace_back(j, n + j);
  return TLDiagram(n, n, std::move(p));
}

TLDiagram TLDiagram::cap(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw DomainError("TL cap index out of range");
  Pairing p{{i, i + 1}};
  for (int j = 1; j <= n; ++j) {
    if (j == i || j == i + 1) continue;
    p.emplace_back(j, n + (j < i ? j : j - 2));
  }
  return TLDiagram(n, n - 2, std::move(p));
}

TLDiagram TLDiagram::cup(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw DomainError("TL cup index out of range");
  Pairing p{{n - 2 + i, n - 2 + i + 1}};
  for (int j = 1; j <= n - 2; ++j) p.emplace_back(j, n - 2 + (j < i ? j : j + 2));
  return TLDiagram(n - 2, n, std::move(p));
}

bool TLDiagram::operator<(const TLDiagram& o) const {
  if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
  if (top_ != o.top_) return top_ < o.top_;
  return pairs_ < o.pairs_;
}

std::string TLDiagram::str() const {
  std::ostringstream out;
  out << "TL(" << bottom_ << "->" << top_ << ")[";
  bool first = true;
  for (const auto& [a, b] : pairs_) {
    if (!first) out << ",";
    first = false;
    out << "(" << a << "," << b << ")";
  }
  out << "]";
  return out.str();
}

DiagramComposition tl_compose_diagrams(const TLDiagram& g, const TLDiagram& f) {
  if (f.top() != g.bottom()) throw DomainError("tl_compose: boundary mismatch");
  const int m = f.bottom(), k = f.top(), n = g.top();
  const int total = m + k + n;
  // Node ids: f's points are label-1 (0..m+k-1); g's bottom point i glues to
  // f's top point m+i, and g's top point k+j becomes id m+k+j-1.  Scratch
  // buffers are reused across calls; this runs in hot projector loops.
  thread_local std::vector<int> parent, first_ext;
  parent.resize(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [a, b] : f.pairs()) parent[find(a - 1)] = find(b - 1);
  for (const auto& [a, b] : g.pairs()) parent[find(m + a - 1)] = find(m + b - 1);
  TLDiagram::Pairing pairs;
  pairs.reserve((m + n) / 2);
  first_ext.assign(total, -1);
  auto relabel = [&](int id) { return id < m ? id + 1 : id - k + 1; };
  auto take_external = [&](int id) {
    int r = find(id);
    if (first_ext[r] == -1) {
      first_ext[r] = id;
    } else if (first_ext[r] >= 0) {
      pairs.emplace_back(relabel(first_ext[r]), relabel(id));
      first_ext[r] = -2;
    } else {
      throw InternalError("tl_compose: strand with more than two ends");
    }
  };
  for (int id = 0; id < m; ++id) take_external(id);
  for (int id = m + k; id < total; ++id) take_external(id);
  // Components containing no external point are swallowed circles.
  int components = 0;
  for (int id = 0; id < total; ++id)
    if (find(id) == id) ++components;
  const int circles = components - (m + n) / 2;
  return {TLDiagram(m, n, std::move(pairs), TLDiagram::Unchecked{}), circles};
}

TLDiagram tl_tensor_diagrams(const TLDiagram& f, const TLDiagram& g) {
  const int m = f.bottom(), n = f.top(), p = g.bottom();
  TLDiagram::Pairing pairs;
  auto shift_f = [&](int l) { return l <= m ? l : l + p; };
  auto shift_g = [&](int l) { return l <= p ? l + m : l + m + n; };
  for (const auto& [a, b] : f.pairs()) pairs.emplace_back(shift_f(a), shift_f(b));
  for (const auto& [a, b] : g.pairs()) pairs.emplace_back(shift_g(a), shift_g(b));
  return TLDiagram(m + p, n + g.top(), std::move(pairs), TLDiagram::Unchecked{});
}

int tl_closure_circles(const TLDiagram& d) {
  if (d.bottom() != d.top()) throw DomainError("tl_trace: diagram is not an endomorphism");
  const int n = d.bottom();
  UnionFind uf(2 * n);
  for (const auto& [a, b] : d.pairs()) uf.unite(a - 1, b - 1);
  for (int i = 1; i <= n; ++i) uf.unite(i - 1, n + i - 1);
  std::vector<char> root_seen(2 * n, 0);
  int circles = 0;
  for (int id = 0; id < 2 * n; ++id) {
    int r = uf.find(id);
    if (!root_seen[r]) {
      root_seen[r] = 1;
      ++circles;
    }
  }
  return circles;
}

DiagramComposition tl_close_rightmost(const TLDiagram& d) {
  if (d.bottom() != d.top()) throw DomainError("tl_close_rightmost: not an endomorphism");
  const int n = d.bottom();
  if (n < 1) throw DomainError("tl_close_rightmost: nothing to close");
  int partner_bottom = 0, partner_top = 0;
  for (const auto& [a, b] : d.pairs()) {
    if (a == n) partner_bottom = b;
    if (b == n) partner_bottom = a;
    if (a == 2 * n) partner_top = b;
    if (b == 2 * n) partner_top = a;
  }
  if (partner_bottom == 2 * n) {
    // The rightmost strand was the arc bottom-n to top-n: closing it makes
    // a free circle, and the rest of the pairing just relabels.
    TLDiagram::Pairing pairs;
    for (const auto& [a, b] : d.pairs()) {
      if (a == n && b == 2 * n) continue;
      auto relabel = [&](int l) { return l < n ? l : l - 1; };
      pairs.emplace_back(relabel(a), relabel(b));
    }
    return {TLDiagram(n - 1, n - 1, std::move(pairs), TLDiagram::Unchecked{}), 1};
  }
  TLDiagram::Pairing pairs{{0, 0}};
  auto relabel = [&](int l) { return l < n ? l : l - 1; };
  pairs[0] = {relabel(partner_bottom), relabel(partner_top)};
  for (const auto& [a, b] : d.pairs()) {
    if (a == n || b == n || a == 2 * n || b == 2 * n) continue;
    pairs.emplace_back(relabel(a), relabel(b));
  }
  return {TLDiagram(n - 1, n - 1, std::move(pairs), TLDiagram::Unchecked{}), 0};
}

namespace {

// Noncrossing perfect matchings of the circular positions lo..hi, appended
// into out as position pairs.  Positions are contiguous, so matching the
// first point at even distance splits the rest into two independent runs.
void noncrossing_matchings(int lo, int hi, std::vector<std::pair<int, int>> current,
                           std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo > hi) {
    out.push_back(std::move(current));
    return;
  }
  for (int mate = lo + 1; mate <= hi; mate += 2) {
    auto with_pair = current;
    with_pair.emplace_back(lo, mate);
    // Inner segment lo+1..mate-1 then outer mate+1..hi; enumerate inner
    // first by chaining the recursion through a copy.
    std::vector<std::vector<std::pair<int, int>>> inner;
    noncrossing_matchings(lo + 1, mate - 1, {}, inner);
    for (auto& in_pairs : inner) {
      auto merged = with_pair;
      merged.insert(merged.end(), in_pairs.begin(), in_pairs.end());
      noncrossing_matchings(mate + 1, hi, std::move(merged), out);
    }
  }
}

}  // namespace

std::vector<TLDiagram> tl_basis(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("tl_basis: negative boundary size");
  if ((m + n) % 2 != 0) return {};
  if (m + n == 0) return {TLDiagram(0, 0, {})};
  std::vector<std::vector<std::pair<int, int>>> matchings;
  noncrossing_matchings(1, m + n, {}, matchings);
  // Positions back to labels: bottom pos p is label p, top pos p is 2m+n+1-p.
  auto label_of = [&](int pos) { return pos <= m ? pos : 2 * m + n + 1 - pos; };
  std::vector<TLDiagram> basis;
  basis.reserve(matchings.size());
  for (const auto& match : matchings) {
    TLDiagram::Pairing pairs;
    pairs.reserve(match.size());
    for (const auto& [a, b] : match) pairs.emplace_back(label_of(a), label_of(b));
    basis.emplace_back(m, n, std::move(pairs));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

LaurentPoly tl_delta() { return -(LaurentPoly::q_power(1) + LaurentPoly::q_power(-1)); }

TLMorphism::TLMorphism(const TLDiagram& d, RationalFn coeff)
    : bottom_(d.bottom()), top_(d.top()) {
  add_term(d, coeff);
}

RationalFn TLMorphism::coeff(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RationalFn() : it->second;
}

void TLMorphism::add_term(const TLDiagram& d, const RationalFn& c) {
  if (d.bottom() != bottom_ || d.top() != top_)
    throw DomainError("TLMorphism: term boundary mismatch");
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(d, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TLMorphism TLMorphism::operator-() const {
  TLMorphism out(bottom_, top_);
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
  if (a.bottom_ != b.bottom_ || a.top_ != b.top_)
    throw DomainError("TLMorphism: sum boundary mismatch");
  TLMorphism out = a;
  for (const auto& [d, c] : b.terms_) out.add_term(d, c);
  return out;
}

TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) { return a + (-b); }

TLMorphism TLMorphism::scaled(const RationalFn& c) const {
  TLMorphism out(bottom_, top_);
  if (c.is_zero()) return out;
  for (const auto& [d, coefficient] : terms_) out.terms_.emplace(d, coefficient * c);
  return out;
}

bool TLMorphism::operator==(const TLMorphism& o) const {
  return bottom_ == o.bottom_ && top_ == o.top_ && terms_ == o.terms_;
}

std::string TLMorphism::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*" << d.str();
  }
  return out.str();
}

TLMorphism tl_compose(const TLMorphism& g, const TLMorphism& f) {
  if (f.top() != g.bottom()) throw DomainError("tl_compose: boundary mismatch");
  TLMorphism out(f.bottom(), g.top());
  const RationalFn delta{tl_delta()};
  for (const auto& [dg, cg] : g.terms()) {
    for (const auto& [df, cf] : f.terms()) {
      auto [diagram, circles] = tl_compose_diagrams(dg, df);
      RationalFn c = cg * cf;
      for (int i = 0; i < circles; ++i) c = c * delta;
      out.add_term(diagram, c);
    }
  }
  return out;
}

TLMorphism tl_tensor(const TLMorphism& f, const TLMorphism& g) {
  TLMorphism out(f.bottom() + g.bottom(), f.top() + g.top());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add_term(tl_tensor_diagrams(df, dg), cf * cg);
  return out;
}

RationalFn tl_trace(const TLMorphism& f) {
  if (f.bottom() != f.top()) throw DomainError("tl_trace: morphism is not an endomorphism");
  RationalFn total;
  const RationalFn delta{tl_delta()};
  for (const auto& [d, c] : f.terms()) {
    RationalFn term = c;
    int circles = tl_closure_circles(d);
    for (int i = 0; i < circles; ++i) term = term * delta;
    total = total + term;
  }
  return total;
}

}  // namespace skeinlab

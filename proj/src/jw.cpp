#include "skeinlab/jw.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

// Combination of diagrams with LaurentPoly coefficients over one shared
// denominator (true coefficient of d is terms[d]/den).  Keeping a single
// denominator avoids a polynomial gcd per term in composition hot loops;
// reduce() restores the canonical form once per algebraic step.
struct ScaledTL {
  int bottom = 0, top = 0;
  std::map<TLDiagram, LaurentPoly> terms;
  LaurentPoly den = LaurentPoly::one();
};

void accumulate(std::map<TLDiagram, LaurentPoly>& into, const TLDiagram& d,
                LaurentPoly c) {
  auto it = into.find(d);
  if (it == into.end()) {
    if (!c.is_zero()) into.emplace(d, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

// Divide out the common polynomial/integer/monomial content and anchor the
// denominator (lowest half-exponent 0, positive leading coefficient).
void reduce(ScaledTL& s) {
  for (auto it = s.terms.begin(); it != s.terms.end();)
    it = it->second.is_zero() ? s.terms.erase(it) : std::next(it);
  if (s.terms.empty()) {
    s.den = LaurentPoly::one();
    return;
  }
  LaurentPoly g = s.den;
  for (const auto& [d, c] : s.terms) {
    g = laurent_gcd(g, c);
    if (g.is_one()) break;
  }
  if (!g.is_one()) {
    // g is primitive, so the quotients stay integral (Gauss's lemma).
    s.den = *s.den.divide_exact(g);
    for (auto& [d, c] : s.terms) c = *c.divide_exact(g);
  }
  Int shared = s.den.content();
  for (const auto& [d, c] : s.terms) {
    if (shared == 1) break;
    shared = boost::multiprecision::gcd(shared, c.content());
  }
  auto divide_int = [](const LaurentPoly& p, const Int& k) {
    return *p.divide_exact(LaurentPoly::monomial(k, 0));
  };
  if (shared > 1) {
    s.den = divide_int(s.den, shared);
    for (auto& [d, c] : s.terms) c = divide_int(c, shared);
  }
  int shift = s.den.min_half();
  if (shift != 0) {
    s.den = s.den.shifted(-shift);
    for (auto& [d, c] : s.terms) c = c.shifted(-shift);
  }
  if (s.den.terms().rbegin()->second < 0) {
    s.den = -s.den;
    for (auto& [d, c] : s.terms) c = -c;
  }
}

ScaledTL compose(const ScaledTL& g, const ScaledTL& f) {
  if (f.top != g.bottom) throw InternalError("jw: scaled composition boundary mismatch");
  ScaledTL out{f.bottom, g.top, {}, g.den * f.den};
  std::vector<LaurentPoly> delta_pow{LaurentPoly::one()};
  auto delta_power = [&](int n) -> const LaurentPoly& {
    while (static_cast<int>(delta_pow.size()) <= n)
      delta_pow.push_back(delta_pow.back() * tl_delta());
    return delta_pow[n];
  };
  for (const auto& [dg, cg] : g.terms) {
    for (const auto& [df, cf] : f.terms) {
      auto [d, circles] = tl_compose_diagrams(dg, df);
      LaurentPoly c = cg * cf;
      if (circles > 0) c = c * delta_power(circles);
      accumulate(out.terms, d, std::move(c));
    }
  }
  return out;
}

ScaledTL compose_diagram_left(const TLDiagram& g, const ScaledTL& f) {
  ScaledTL out{f.bottom, g.top(), {}, f.den};
  const LaurentPoly delta = tl_delta();
  for (const auto& [df, cf] : f.terms) {
    auto [d, circles] = tl_compose_diagrams(g, df);
    LaurentPoly c = cf;
    for (int i = 0; i < circles; ++i) c = c * delta;
    accumulate(out.terms, d, c);
  }
  return out;
}

ScaledTL tensor_identity_right(const ScaledTL& s, int extra) {
  ScaledTL out{s.bottom + extra, s.top + extra, {}, s.den};
  const TLDiagram pad = TLDiagram::identity(extra);
  for (const auto& [d, c] : s.terms) out.terms.emplace(tl_tensor_diagrams(d, pad), c);
  return out;
}

bool scaled_equal(const ScaledTL& x, const ScaledTL& y) {
  if (x.bottom != y.bottom || x.top != y.top) return false;
  auto ix = x.terms.begin();
  auto iy = y.terms.begin();
  while (ix != x.terms.end() || iy != y.terms.end()) {
    if (ix == x.terms.end() || iy == y.terms.end()) return false;
    if (!(ix->first == iy->first)) return false;
    if (ix->second * y.den != iy->second * x.den) return false;
    ++ix;
    ++iy;
  }
  return true;
}

bool scaled_is_zero(const ScaledTL& s) {
  for (const auto& [d, c] : s.terms)
    if (!c.is_zero()) return false;
  return true;
}

void assert_build_invariants(const ScaledTL& e, int i) {
  // Identity coefficient 1 (terms are over the common denominator).
  auto it = e.terms.find(TLDiagram::identity(i));
  if (it == e.terms.end() || it->second != e.den)
    throw InternalError("jw_build: identity coefficient is not 1 at i=" + std::to_string(i));
  // Cap annihilation; together with the identity coefficient this forces
  // idempotency, because every non-identity diagram factors through a cap.
  for (int j = 1; j < i; ++j) {
    if (!scaled_is_zero(compose_diagram_left(TLDiagram::cap(i, j), e)))
      throw InternalError("jw_build: cap " + std::to_string(j) + " not annihilated at i=" +
                          std::to_string(i));
  }
}

std::mutex cache_mutex;

// Write-once caches; entries are immutable after insertion.
const ScaledTL& jw_scaled_locked(int i) {
  static std::map<int, ScaledTL> cache;
  if (cache.empty()) {
    cache.emplace(0, ScaledTL{0, 0, {{TLDiagram(0, 0, {}), LaurentPoly::one()}},
                              LaurentPoly::one()});
    cache.emplace(1, ScaledTL{1, 1, {{TLDiagram::identity(1), LaurentPoly::one()}},
                              LaurentPoly::one()});
  }
  for (int j = cache.rbegin()->first + 1; j <= i; ++j) {
    ScaledTL t = tensor_identity_right(cache.at(j - 1), 1);
    ScaledTL sandwich = compose(t, compose_diagram_left(TLDiagram::generator(j, j - 1), t));
    // e_j = t + ([j-1]/[j]) sandwich over the common denominator den(t)^2 [j].
    ScaledTL e{j, j, {}, sandwich.den * qint(j)};
    for (const auto& [d, c] : t.terms) accumulate(e.terms, d, c * t.den * qint(j));
    for (const auto& [d, c] : sandwich.terms) accumulate(e.terms, d, c * qint(j - 1));
    reduce(e);
    assert_build_invariants(e, j);
    cache.emplace(j, std::move(e));
  }
  return cache.at(i);
}

TLMorphism lower(const ScaledTL& s) {
  TLMorphism out(s.bottom, s.top);
  for (const auto& [d, c] : s.terms) out.add_term(d, RationalFn(c, s.den));
  return out;
}

}  // namespace

std::shared_ptr<const JWProjector> jw_build(int i) {
  if (i < 0) throw DomainError("jw_build: negative index");
  std::lock_guard<std::mutex> lock(cache_mutex);
  static std::map<int, std::shared_ptr<const JWProjector>> built;
  auto it = built.find(i);
  if (it != built.end()) return it->second;
  auto proj = std::make_shared<const JWProjector>(JWProjector{i, lower(jw_scaled_locked(i))});
  built.emplace(i, proj);
  return proj;
}

bool jw_idempotency_check(int i) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  const ScaledTL& e = jw_scaled_locked(i);
  ScaledTL square = compose(e, e);
  reduce(square);
  return scaled_equal(square, e);
}

bool jw_cap_kill_check(int i) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  const ScaledTL& e = jw_scaled_locked(i);
  for (int j = 1; j < i; ++j)
    if (!scaled_is_zero(compose_diagram_left(TLDiagram::cap(i, j), e))) return false;
  return true;
}

bool jw_absorb_check(int i, int j) {
  if (j < 0 || j > i) throw DomainError("jw_absorb_check: need 0 <= j <= i");
  std::lock_guard<std::mutex> lock(cache_mutex);
  const ScaledTL& ei = jw_scaled_locked(i);
  ScaledTL padded = tensor_identity_right(jw_scaled_locked(j), i - j);
  ScaledTL left = compose(padded, ei);
  reduce(left);
  if (!scaled_equal(left, ei)) return false;
  ScaledTL right = compose(ei, padded);
  reduce(right);
  return scaled_equal(right, ei);
}

TLMorphism jw_partial_trace(const JWProjector& e) {
  if (e.index < 1) throw DomainError("jw_partial_trace: index must be >= 1");
  TLMorphism out(e.index - 1, e.index - 1);
  const RationalFn delta{tl_delta()};
  for (const auto& [d, c] : e.body.terms()) {
    auto [closed, circles] = tl_close_rightmost(d);
    out.add_term(closed, circles == 0 ? c : c * delta);
  }
  return out;
}

LaurentPoly jw_trace(int i) {
  RationalFn tr = tl_trace(jw_build(i)->body);
  if (!tr.is_polynomial())
    throw InternalError("jw_trace: trace did not simplify to a polynomial");
  return tr.to_laurent();
}

bool jw_exists_at(int i, const Specialization& spec) {
  if (i < 0) throw DomainError("jw_exists_at: negative index");
  return all_qbinoms_nonzero(i, spec);
}

}  // namespace skeinlab

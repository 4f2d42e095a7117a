#include "skeinlab/rational.hpp"

#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

// Dense ordinary-polynomial view (index = half-exponent above the minimum).
std::vector<Int> to_dense(const LaurentPoly& p) {
  std::vector<Int> v(static_cast<size_t>(p.max_half() - p.min_half()) + 1, Int(0));
  int lo = p.min_half();
  for (const auto& [h, c] : p.terms()) v[static_cast<size_t>(h - lo)] = c;
  return v;
}

void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int dense_content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& c : v) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
  return g;
}

void make_primitive(std::vector<Int>& v) {
  Int g = dense_content(v);
  if (g == 0 || g == 1) return;
  for (Int& c : v) c /= g;
}

// Pseudo-remainder of a by b (degrees a >= b, b nonzero).
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& blead = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    Int alead = a.back();
    // Scale a by blead so the leading term cancels without fractions.
    for (Int& c : a) c *= blead;
    int shift = da - db;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= alead * b[static_cast<size_t>(i)];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto normalize = [](const LaurentPoly& p) {
    if (p.is_zero()) return LaurentPoly::zero();
    LaurentPoly r = p.shifted(-p.min_half());
    Int g = r.content();
    if (g > 1) {
      LaurentPoly s;
      for (const auto& [h, c] : r.terms()) s += LaurentPoly::monomial(c / g, h);
      r = s;
    }
    if (r.terms().rbegin()->second < 0) r = -r;
    return r;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  // Primitive PRS on the ordinary-poly shadows.
  std::vector<Int> u = to_dense(a), v = to_dense(b);
  make_primitive(u);
  make_primitive(v);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Int> r = pseudo_rem(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  LaurentPoly g;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) g += LaurentPoly::monomial(u[i], static_cast<int>(i));
  return normalize(g);
}

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RationalFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Monomials are units of the Laurent ring, so dividing by the anchored gcd
  // works regardless of where the supports of num/den start.
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    auto qn = num_.divide_exact(g);
    auto qd = den_.divide_exact(g);
    if (!qn || !qd) throw InternalError("gcd failed to divide exactly");
    num_ = *qn;
    den_ = *qd;
  }
  // Integer-primitive pair.
  Int ic = boost::multiprecision::gcd(num_.content(), den_.content());
  if (ic > 1) {
    auto qn = num_.divide_exact(LaurentPoly::monomial(ic));
    auto qd = den_.divide_exact(LaurentPoly::monomial(ic));
    if (!qn || !qd) throw InternalError("content failed to divide exactly");
    num_ = *qn;
    den_ = *qd;
  }
  // Denominator anchored at half-exponent 0 with positive leading coefficient.
  int shift = -den_.min_half();
  if (shift != 0) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (den_.terms().rbegin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentPoly RationalFn::to_laurent() const {
  if (is_zero()) return LaurentPoly::zero();
  // The canonical denominator may still be a positive monomial q^{k/2}*c only
  // when c == 1 and k == 0 (monomials are quotiented into the numerator), so
  // den != 1 really means "not a polynomial".
  if (!den_.is_one()) {
    auto q = num_.divide_exact(den_);
    if (q) return *q;  // defensive: should not happen for canonical values
    throw DomainError("rational function is not a Laurent polynomial: (" +
                      num_.str() + ") / (" + den_.str() + ")");
  }
  return num_;
}

RationalFn RationalFn::operator-() const {
  RationalFn r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::complex<double> RationalFn::eval(std::complex<double> q) const {
  return eval(q, std::sqrt(q));
}

std::complex<double> RationalFn::eval(std::complex<double> q,
                                      std::complex<double> sqrt_q) const {
  std::complex<double> d = den_.eval(q, sqrt_q);
  if (std::abs(d) < 1e-300) throw DomainError("rational function pole at evaluation point");
  return num_.eval(q, sqrt_q) / d;
}

std::string RationalFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace skeinlab

#include "skeinlab/qnum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kZeroTol = 1e-9;
}  // namespace

Specialization Specialization::generic() { return Specialization{}; }

Specialization Specialization::complex_q(std::complex<double> q) {
  return complex_q(q, std::sqrt(q));
}

Specialization Specialization::complex_q(std::complex<double> q,
                                         std::complex<double> sqrt_q) {
  if (std::abs(q) < kZeroTol) throw DomainError("q must be invertible");
  Specialization s;
  s.kind = Kind::Complex;
  s.q = q;
  s.sqrt_q = sqrt_q;
  return s;
}

Specialization Specialization::root_of_unity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("root-of-unity denominator must be positive");
  std::int64_t g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num %= den;
  if (num < 0) num += den;
  Specialization s;
  s.kind = Kind::Complex;
  s.has_root_data = true;
  s.root_num = num;
  s.root_den = den;
  double theta = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
  s.q = std::polar(1.0, theta);
  s.sqrt_q = std::polar(1.0, theta / 2.0);  // exp(pi*i*num/den)
  return s;
}

Specialization Specialization::finite_field(std::int64_t prime, std::int64_t q_mod) {
  if (prime < 2) throw DomainError("field characteristic must be a prime >= 2");
  for (std::int64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw DomainError("field characteristic must be prime");
  q_mod = ((q_mod % prime) + prime) % prime;
  if (q_mod == 0) throw DomainError("q must be invertible in the field");
  Specialization s;
  s.kind = Kind::FiniteField;
  s.prime = prime;
  s.q_mod = q_mod;
  for (std::int64_t r = 0; r < prime; ++r) {
    if ((__int128)r * r % prime == q_mod) {
      s.sqrt_q_mod = r;
      s.has_sqrt_mod = true;
      break;
    }
  }
  return s;
}

std::string Specialization::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::GenericSymbolic:
      os << "generic";
      break;
    case Kind::Complex:
      if (has_root_data)
        os << "q=exp(2*pi*i*" << root_num << "/" << root_den << ")";
      else
        os << "q=" << q.real() << (q.imag() < 0 ? "-" : "+") << std::abs(q.imag()) << "i";
      break;
    case Kind::FiniteField:
      os << "F_" << prime << ", q=" << q_mod;
      break;
  }
  return os.str();
}

bool FieldValue::is_zero(double tol) const {
  return kind == Kind::Modular ? m == 0 : std::abs(c) < tol;
}

std::string FieldValue::str() const {
  if (kind == Kind::Modular) return std::to_string(m);
  std::ostringstream os;
  os << c.real();
  if (std::abs(c.imag()) > 1e-12) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

LaurentPoly qint(std::int64_t a) {
  if (a == 0) return LaurentPoly::zero();
  if (a < 0) return -qint(-a);
  LaurentPoly p;
  for (std::int64_t j = 0; j < a; ++j)
    p += LaurentPoly::q_power(static_cast<int>(a - 1 - 2 * j));
  return p;
}

LaurentPoly qfact(std::int64_t a) {
  if (a < 0) throw DomainError("quantum factorial of a negative integer");
  static std::mutex mu;
  static std::vector<LaurentPoly> cache{LaurentPoly::one(), LaurentPoly::one()};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<std::int64_t>(cache.size()) <= a)
    cache.push_back(cache.back() * qint(static_cast<std::int64_t>(cache.size())));
  return cache[static_cast<size_t>(a)];
}

LaurentPoly qbinom(std::int64_t a, std::int64_t b) {
  if (b < 0) throw DomainError("quantum binomial with negative lower index");
  if (b == 0) return LaurentPoly::one();
  if (a >= 0 && a < b) return LaurentPoly::zero();
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
  }
  // Product form [a][a-1]...[a-b+1] / [b]! works uniformly (including a < 0,
  // where it produces the sign-twisted reflection) and the division is exact.
  LaurentPoly num = LaurentPoly::one();
  for (std::int64_t i = 0; i < b; ++i) num *= qint(a - i);
  auto quot = num.divide_exact(qfact(b));
  if (!quot) throw InternalError("quantum binomial quotient left a remainder");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(a, b), *quot).first->second;
}

namespace {

// Multiplicative order of x mod p (p prime), via the factorization of p-1.
std::int64_t order_mod(std::int64_t x, std::int64_t p) {
  x = ((x % p) + p) % p;
  if (x == 0) throw DomainError("order of 0");
  std::int64_t n = p - 1;
  std::int64_t ord = n;
  std::int64_t m = n;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    while (ord % d == 0 && mod_pow(x, ord / d, p) == 1) ord /= d;
  }
  if (m > 1)
    while (ord % m == 0 && mod_pow(x, ord / m, p) == 1) ord /= m;
  return ord;
}

bool complex_close(std::complex<double> a, std::complex<double> b, double tol = kZeroTol) {
  return std::abs(a - b) < tol;
}

}  // namespace

std::int64_t q_characteristic(const Specialization& spec, std::int64_t bound) {
  switch (spec.kind) {
    case Specialization::Kind::GenericSymbolic:
      return 0;
    case Specialization::Kind::FiniteField: {
      // q = +-1 deserves the field characteristic ([a] = +-a there);
      // otherwise the first vanishing quantum number is the order of q^2.
      if (spec.q_mod == 1 || spec.q_mod == spec.prime - 1) return spec.prime;
      return order_mod((__int128)spec.q_mod * spec.q_mod % spec.prime, spec.prime);
    }
    case Specialization::Kind::Complex: {
      if (spec.has_root_data) {
        // q^2 = exp(2*pi*i*2num/den): exact order, or char 0 when q = +-1.
        std::int64_t num2 = (2 * spec.root_num) % spec.root_den;
        if (num2 == 0) return 0;  // q = +-1 over a char-0 field
        std::int64_t g = std::gcd(num2, spec.root_den);
        return spec.root_den / g;
      }
      if (complex_close(spec.q, {1.0, 0.0}) || complex_close(spec.q, {-1.0, 0.0}))
        return 0;
      std::complex<double> q2 = spec.q * spec.q;
      std::complex<double> acc{1.0, 0.0};
      for (std::int64_t a = 1; a <= bound; ++a) {
        acc *= q2;
        if (complex_close(acc, {1.0, 0.0})) return a;
      }
      return 0;  // no vanishing quantum number up to the scan bound
    }
  }
  throw InternalError("unreachable specialization kind");
}

namespace {

// Direct evaluation of a symbolic Laurent polynomial under spec.
FieldValue eval_poly_at(const LaurentPoly& p, const Specialization& spec) {
  FieldValue v;
  if (spec.kind == Specialization::Kind::Complex) {
    v.kind = FieldValue::Kind::Complex;
    v.c = p.eval(spec.q, spec.sqrt_q);
    return v;
  }
  if (spec.kind == Specialization::Kind::FiniteField) {
    v.kind = FieldValue::Kind::Modular;
    if (!p.integral_exponents() && !spec.has_sqrt_mod)
      throw DomainError("polynomial needs q^{1/2} but q has no square root mod p");
    // eval_modp only consults the square root for half-integer powers.
    v.m = p.eval_modp(spec.prime, spec.q_mod, spec.sqrt_q_mod);
    return v;
  }
  throw DomainError("cannot evaluate under a generic symbolic specialization");
}

// Quantum Lucas step in a finite field.  Balanced binomials relate to the
// one-variable Gaussian ones by [a|b]_q = q^{-b(a-b)} * gauss(a,b)_{q^2}, and
// Gaussian Lucas at ord(q^2) = k is sign-free; translating back costs
// (q^k)^{k n(m-n) + n(a0-b0) + b0(m-n)}, a sign since q^k = +-1.
std::int64_t qbinom_lucas_mod(std::int64_t a, std::int64_t b, const Specialization& spec) {
  const std::int64_t p = spec.prime;
  if (b < 0 || b > a) return 0;  // a >= 0 in every Lucas call below
  if (spec.q_mod == 1 || spec.q_mod == p - 1) {
    // [a|b]_{+-1} = (+-1)^{b(a-b)} C(a,b): classical Lucas plus a sign.
    std::int64_t base = binomial_mod(a, b, p);
    if (spec.q_mod == p - 1 && ((b % 2) * ((a - b) % 2)) % 2 == 1)
      base = (p - base) % p;
    return base;
  }
  const std::int64_t k = q_characteristic(spec);
  const std::int64_t m = a / k, a0 = a % k;
  const std::int64_t n = b / k, b0 = b % k;
  if (b0 > a0) return 0;  // the small factor vanishes
  std::int64_t small = eval_poly_at(qbinom(a0, b0), spec).m;
  std::int64_t big = binomial_mod(m, n, p);
  std::int64_t val = (__int128)small * big % p;
  std::int64_t eps = mod_pow(spec.q_mod, k, p);  // +1 or p-1
  if (eps == p - 1) {
    std::int64_t ex = (k % 2) * (n % 2) * ((m - n) % 2) + (n % 2) * (((a0 - b0) % 2 + 2) % 2) +
                      (b0 % 2) * ((m - n) % 2);
    if (ex % 2 == 1) val = (p - val) % p;
  }
  return val;
}

}  // namespace

FieldValue qbinom_at(std::int64_t a, std::int64_t b, const Specialization& spec) {
  if (b < 0) throw DomainError("quantum binomial with negative lower index");
  if (spec.kind == Specialization::Kind::GenericSymbolic)
    throw DomainError("qbinom_at needs a numeric or modular specialization");
  if (spec.kind == Specialization::Kind::Complex) return eval_poly_at(qbinom(a, b), spec);

  // Finite field: quantum Lucas, cross-checked against direct evaluation.
  FieldValue direct = eval_poly_at(qbinom(a, b), spec);
  if (a >= 0) {
    std::int64_t lucas = qbinom_lucas_mod(a, b, spec);
    if (lucas != direct.m)
      throw InternalError("quantum Lucas disagrees with direct evaluation: a=" +
                          std::to_string(a) + " b=" + std::to_string(b) + " [" +
                          spec.str() + "] lucas=" + std::to_string(lucas) +
                          " direct=" + std::to_string(direct.m));
  }
  return direct;
}

bool all_qbinoms_nonzero(std::int64_t a, const Specialization& spec) {
  if (a < 0) throw DomainError("digit criterion needs a >= 0");
  const std::int64_t k = q_characteristic(spec);
  if (k == 0) return true;  // no quantum number vanishes at all

  if (spec.kind != Specialization::Kind::FiniteField) {
    // Root of unity over a char-0 field: [a|b] != 0 for all b iff the
    // zeroth base-k digit is maximal (or there is no higher digit).
    return a < k || a % k == k - 1;
  }

  // Finite field.  For q = +-1 the q-characteristic is p itself and the
  // criterion is classical: all base-p digits of a below the top are p-1.
  // For other q, the zeroth base-k digit must be maximal (unless a < k) and
  // the base-k quotient must pass the same classical base-p test.
  const std::int64_t p = spec.prime;
  std::int64_t m;
  if (spec.q_mod == 1 || spec.q_mod == p - 1) {
    m = a;
  } else {
    if (a >= k && a % k != k - 1) return false;
    m = a / k;
  }
  while (m >= p) {
    if (m % p != p - 1) return false;
    m /= p;
  }
  return true;
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

std::int64_t binomial_mod(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (k < 0 || k > n) return 0;
  std::int64_t result = 1;
  while (n > 0 || k > 0) {
    std::int64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // Small-case binomial mod p via the exact integer value.
    Int c = binomial(nd, kd) % p;
    result = (__int128)result * c.convert_to<std::int64_t>() % p;
    n /= p;
    k /= p;
  }
  return result;
}

Int catalan(std::int64_t n) {
  if (n < 0) throw DomainError("Catalan number of a negative index");
  Int c = binomial(2 * n, n);
  Int d = c / (n + 1);
  if (d * (n + 1) != c) throw InternalError("Catalan division not exact");
  return d;
}

Int involution_count(std::int64_t n) {
  if (n < 0) throw DomainError("involution count of a negative index");
  Int prev2 = 1, prev1 = 1;  // s_0, s_1
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  for (std::int64_t i = 2; i <= n; ++i) {
    Int cur = prev1 + Int(i - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

}  // namespace skeinlab

#include "skeinlab/laurent.hpp"

#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

LaurentPoly LaurentPoly::monomial(Int coeff, int half_exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[half_exp] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::integral_exponents() const {
  for (const auto& [h, c] : terms_)
    if (h % 2 != 0) return false;
  return true;
}

Int LaurentPoly::coeff(int half_exp) const {
  auto it = terms_.find(half_exp);
  return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_half() const {
  if (terms_.empty()) throw DomainError("min_half of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_half() const {
  if (terms_.empty()) throw DomainError("max_half of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int half_exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [h, c] : terms_) r.terms_[h] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [h, c] : o.terms_) add_term(h, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [h, c] : o.terms_) add_term(h, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const int lo = a.terms_.begin()->first + b.terms_.begin()->first;
  const long span = static_cast<long>(a.terms_.rbegin()->first) +
                    b.terms_.rbegin()->first - lo + 1;
  // When every coefficient is small the whole convolution fits in int64:
  // |sum| <= min(na,nb) * 2^20 * 2^20 < 2^63.  This is the common case in
  // projector and state-sum hot loops.
  auto all_small = [](const LaurentPoly& p) {
    constexpr long long kSmall = 1ll << 20;
    for (const auto& [h, c] : p.terms_)
      if (c >= kSmall || c <= -kSmall) return false;
    return true;
  };
  if (span <= 4096 && all_small(a) && all_small(b)) {
    thread_local std::vector<long long> fast;
    if (fast.size() < static_cast<size_t>(span)) fast.resize(span);
    for (long k = 0; k < span; ++k) fast[k] = 0;
    for (const auto& [ha, ca] : a.terms_) {
      const long long va = static_cast<long long>(ca);
      for (const auto& [hb, cb] : b.terms_)
        fast[ha + hb - lo] += va * static_cast<long long>(cb);
    }
    for (long k = 0; k < span; ++k)
      if (fast[k] != 0)
        r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<int>(k), Int(fast[k]));
    return r;
  }
  if (span <= 4096) {
    // Accumulate into a dense window; far fewer map operations than
    // inserting every partial product.  The window is reused across calls.
    thread_local std::vector<Int> dense;
    if (dense.size() < static_cast<size_t>(span)) dense.resize(span);
    for (long k = 0; k < span; ++k) dense[k] = 0;
    for (const auto& [ha, ca] : a.terms_)
      for (const auto& [hb, cb] : b.terms_) dense[ha + hb - lo] += ca * cb;
    for (long k = 0; k < span; ++k)
      if (dense[k] != 0)
        r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<int>(k), dense[k]);
    return r;
  }
  for (const auto& [ha, ca] : a.terms_)
    for (const auto& [hb, cb] : b.terms_) r.add_term(ha + hb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& k) const {
  LaurentPoly r;
  if (k == 0) return r;
  for (const auto& [h, c] : terms_) r.terms_[h] = c * k;
  return r;
}

LaurentPoly LaurentPoly::shifted(int dhalf) const {
  LaurentPoly r;
  for (const auto& [h, c] : terms_) r.terms_[h + dhalf] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly acc = one();
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly r;
  for (const auto& [h, c] : terms_) r.terms_[-h] = c;
  return r;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [h, c] : terms_) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
  return g;
}

LaurentPoly LaurentPoly::halves_doubled() const {
  LaurentPoly r;
  for (const auto& [h, c] : terms_) r.terms_[2 * h] = c;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) return zero();
  // Long division from the top.  If the quotient exists in Z[q^{+-1/2}] every
  // leading-coefficient division below is exact; any remainder means "no".
  // The quotient's lowest possible shift is bounded by the supports, which
  // guarantees termination (the remainder's top degree strictly decreases).
  const int od = o.max_half();
  const Int& olead = o.terms_.rbegin()->second;
  const int min_shift = min_half() - o.min_half();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    int shift = rem.max_half() - od;
    if (shift < min_shift) return std::nullopt;
    const Int& rlead = rem.terms_.rbegin()->second;
    Int qc = rlead / olead;
    if (qc * olead != rlead) return std::nullopt;
    LaurentPoly t = monomial(qc, shift);
    quot += t;
    rem -= t * o;
  }
  return quot;
}

std::complex<double> LaurentPoly::eval(std::complex<double> q) const {
  return eval(q, std::sqrt(q));
}

std::complex<double> LaurentPoly::eval(std::complex<double> q,
                                       std::complex<double> sqrt_q) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [h, c] : terms_) {
    // q^{h/2} = q^m * sqrt_q^r with h = 2m + r, r in {0,1} (floor division
    // keeps the branch choice consistent for negative odd exponents).
    int m = (h >= 0) ? h / 2 : -((-h + 1) / 2);
    int r = h - 2 * m;
    std::complex<double> v = std::pow(q, m);
    if (r) v *= sqrt_q;
    acc += c.convert_to<double>() * v;
  }
  return acc;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t prime) {
  base %= prime;
  if (base < 0) base += prime;
  std::int64_t acc = 1 % prime;
  while (exp > 0) {
    if (exp & 1) acc = (__int128)acc * base % prime;
    base = (__int128)base * base % prime;
    exp >>= 1;
  }
  return acc;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t prime) {
  a %= prime;
  if (a < 0) a += prime;
  if (a == 0) throw DomainError("modular inverse of 0");
  // Fermat: prime is prime throughout this library.
  return mod_pow(a, prime - 2, prime);
}

std::int64_t LaurentPoly::eval_modp(std::int64_t prime, std::int64_t q_val,
                                    std::int64_t sqrt_q) const {
  if (prime < 2) throw DomainError("modulus must be a prime >= 2");
  std::int64_t q = ((q_val % prime) + prime) % prime;
  std::int64_t s = ((sqrt_q % prime) + prime) % prime;
  if (q == 0) throw DomainError("q must be invertible mod p");
  // sqrt_q is only consulted (and therefore only validated) when the
  // polynomial actually contains half-integer powers; q itself may have no
  // square root mod p, which is fine for integral-exponent values.
  const bool need_half = !integral_exponents();
  if (need_half && (__int128)s * s % prime != q)
    throw DomainError("invalid specialization: sqrt_q^2 != q (mod p)");
  const std::int64_t qinv = mod_inverse(q, prime);
  const std::int64_t sinv = need_half ? mod_inverse(s, prime) : 0;
  std::int64_t acc = 0;
  for (const auto& [h, c] : terms_) {
    std::int64_t cm = ((c % prime).convert_to<std::int64_t>() + prime) % prime;
    std::int64_t powv;
    if (h % 2 == 0) {
      std::int64_t e = h / 2;
      powv = (e >= 0) ? mod_pow(q, e, prime) : mod_pow(qinv, -e, prime);
    } else {
      powv = (h >= 0) ? mod_pow(s, h, prime) : mod_pow(sinv, -h, prime);
    }
    acc = (acc + (__int128)cm * powv % prime) % prime;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponents, matching the usual way these values are displayed.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [h, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (h == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      if (h == 2) {
        os << "q";
      } else if (h % 2 == 0) {
        os << "q^" << h / 2;
      } else {
        os << "q^(" << h << "/2)";
      }
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [h, c] : terms_) {
    std::string key = std::to_string(h);
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      j[key] = c.convert_to<std::int64_t>();
    } else {
      j[key] = c.str();  // too wide for a JSON number: decimal string
    }
  }
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("polynomial JSON must be an object");
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int h;
    try {
      size_t pos = 0;
      h = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw InputError("polynomial JSON key is not an integer: " + it.key());
    }
    Int c;
    if (it->is_number_integer()) {
      c = Int(it->get<std::int64_t>());
    } else if (it->is_string()) {
      try {
        c = Int(it->get<std::string>());
      } catch (const std::exception&) {
        throw InputError("polynomial JSON coefficient is not an integer");
      }
    } else {
      throw InputError("polynomial JSON coefficient must be integer or string");
    }
    if (c != 0) p.terms_[h] = c;
  }
  return p;
}

}  // namespace skeinlab

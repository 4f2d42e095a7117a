#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace skeinlab {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in q^{1/2} with arbitrary-precision integer
// coefficients.  Exponents are stored as integers counting units of q^{1/2}
// ("half-exponents"), so q^3 has half-exponent 6 and q^{-3/2} has
// half-exponent -3.  This makes the q^{+-1/2} smoothing weights and the
// q^{-3/2} kink factor native monomials.
class LaurentPoly {
 public:
  using Terms = std::map<int, Int>;  // half-exponent -> coefficient, nonzero

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  // coeff * q^{half_exp/2}
  static LaurentPoly monomial(Int coeff, int half_exp = 0);
  // q^{half_exp/2}
  static LaurentPoly q_half_power(int half_exp) { return monomial(1, half_exp); }
  // q^{exp} (integer power)
  static LaurentPoly q_power(int exp) { return monomial(1, 2 * exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when every half-exponent is even (a Laurent polynomial in q itself).
  bool integral_exponents() const;

  const Terms& terms() const { return terms_; }
  Int coeff(int half_exp) const;
  int min_half() const;  // throws DomainError on zero
  int max_half() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  // Total order (lexicographic on the term maps) so polynomials can key maps.
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  LaurentPoly scaled(const Int& k) const;          // k * p
  LaurentPoly shifted(int dhalf) const;            // q^{dhalf/2} * p
  LaurentPoly pow(unsigned n) const;
  // q <-> q^{-1} (negate every half-exponent)
  LaurentPoly mirror() const;
  // gcd of |coefficients| (0 for the zero polynomial)
  Int content() const;
  // Substitute q^{1/2} -> q (double every half-exponent); inverse of the
  // variable shift used when comparing two-variable and colored invariants.
  LaurentPoly halves_doubled() const;

  // Exact division in Z[q^{+-1/2}]: returns the quotient iff o * quot == *this
  // with integer coefficients, std::nullopt otherwise.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& o) const;

  // Numeric evaluation at a complex q.  The square root defaults to the
  // principal branch; pass sqrt_q explicitly to pick the other sheet.
  std::complex<double> eval(std::complex<double> q) const;
  std::complex<double> eval(std::complex<double> q, std::complex<double> sqrt_q) const;

  // Evaluation in F_prime at q = q_val with a chosen square root of q_val.
  // sqrt_q is consulted only when half-integer powers occur; in that case a
  // DomainError fires unless sqrt_q^2 == q_val (mod prime).
  std::int64_t eval_modp(std::int64_t prime, std::int64_t q_val, std::int64_t sqrt_q) const;

  std::string str() const;
  // {"2*exponent (decimal text)": integer coefficient}; coefficients that do
  // not fit in 64 bits are emitted as decimal strings.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void add_term(int half_exp, const Int& c);
  Terms terms_;
};

// Modular helpers shared with qnum (prime < 2^31, inputs already reduced).
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t prime);
std::int64_t mod_inverse(std::int64_t a, std::int64_t prime);

}  // namespace skeinlab

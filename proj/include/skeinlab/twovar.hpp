#pragma once
#include <complex>
#include <map>
#include <utility>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

// Laurent polynomial in the two-variable Kauffman pair (a, z), integer
// coefficients, both exponents full integers (z^{-1} enters through the
// circle constant).  z is an independent variable here; specialization ties
// it to q - q^{-1}.
class TwoVarLaurentPoly {
 public:
  using Key = std::pair<int, int>;  // (a-exponent, z-exponent)
  using Terms = std::map<Key, Int>;

  TwoVarLaurentPoly() = default;

  static TwoVarLaurentPoly zero() { return TwoVarLaurentPoly(); }
  static TwoVarLaurentPoly one() { return monomial(1, 0, 0); }
  static TwoVarLaurentPoly monomial(Int coeff, int a_exp, int z_exp);
  // The unknotted-circle constant (a - a^{-1}) z^{-1} + 1.
  static TwoVarLaurentPoly circle();

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Int coeff(int a_exp, int z_exp) const;

  TwoVarLaurentPoly operator-() const;
  TwoVarLaurentPoly& operator+=(const TwoVarLaurentPoly& o);
  TwoVarLaurentPoly& operator-=(const TwoVarLaurentPoly& o);
  friend TwoVarLaurentPoly operator+(TwoVarLaurentPoly x, const TwoVarLaurentPoly& y) {
    return x += y;
  }
  friend TwoVarLaurentPoly operator-(TwoVarLaurentPoly x, const TwoVarLaurentPoly& y) {
    return x -= y;
  }
  friend TwoVarLaurentPoly operator*(const TwoVarLaurentPoly& x, const TwoVarLaurentPoly& y);
  TwoVarLaurentPoly& operator*=(const TwoVarLaurentPoly& o) { return *this = *this * o; }
  bool operator==(const TwoVarLaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const TwoVarLaurentPoly& o) const { return !(*this == o); }

  TwoVarLaurentPoly pow(unsigned n) const;

  std::string str() const;
  // Array of [a_exp, z_exp, coeff] triples in key order (coeff as number or
  // decimal string, mirroring the one-variable convention).
  nlohmann::json to_json() const;
  static TwoVarLaurentPoly from_json(const nlohmann::json& j);

  std::complex<double> eval(std::complex<double> a_val, std::complex<double> q_val) const;

 private:
  void add_term(const Key& k, const Int& c);
  Terms terms_;
};

// Exact specialization a -> a_val (an invertible monomial, e.g. q^2), with
// z -> q - q^{-1}.  Every z^{-1} must cancel; if the division leaves a
// remainder this throws DomainError("... evaluate numerically instead").
LaurentPoly twovar_specialize(const TwoVarLaurentPoly& p, const LaurentPoly& a_val);

// Numeric fallback used when the exact route is unavailable.
std::complex<double> twovar_specialize_numeric(const TwoVarLaurentPoly& p,
                                               std::complex<double> a_val,
                                               std::complex<double> q_val);

}  // namespace skeinlab

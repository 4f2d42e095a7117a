#pragma once
#include <complex>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

// Primitive polynomial gcd in Z[q^{+-1/2}], computed on the ordinary-poly
// shadow (monomial factors are quotiented away).  The result is primitive,
// has lowest half-exponent 0 and a positive leading coefficient; gcd with 0
// returns the other argument normalized the same way.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Quotient of Laurent polynomials kept in a canonical form:
//   * numerator and denominator share no polynomial factor,
//   * the pair is integer-primitive (no common integer content),
//   * the denominator has lowest half-exponent 0 and positive leading
//     coefficient.
// With this normalization equality is plain field-wise comparison, and
// a/b == c/d iff a*d == c*b as polynomials.
class RationalFn {
 public:
  RationalFn() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  RationalFn(LaurentPoly num);  // implicit: polynomials embed
  RationalFn(LaurentPoly num, LaurentPoly den);

  static RationalFn zero() { return RationalFn(); }
  static RationalFn one() { return RationalFn(LaurentPoly::one()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // True iff the canonical denominator is the constant 1.
  bool is_polynomial() const { return den_.is_one(); }
  // Throws DomainError when the value is not a Laurent polynomial.
  LaurentPoly to_laurent() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }
  bool operator==(const RationalFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  RationalFn mirror() const { return RationalFn(num_.mirror(), den_.mirror()); }
  std::complex<double> eval(std::complex<double> q) const;
  std::complex<double> eval(std::complex<double> q, std::complex<double> sqrt_q) const;

  std::string str() const;

 private:
  void canonicalize();
  LaurentPoly num_, den_;
};

}  // namespace skeinlab

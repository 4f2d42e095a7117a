#pragma once
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

// Where a q-expression is evaluated: kept symbolic, at a complex number, or
// in a prime field.  Complex specializations may carry exact root-of-unity
// data (q = exp(2*pi*i*num/den)) which makes order computations provable
// instead of scan-up-to-a-bound.
struct Specialization {
  enum class Kind { GenericSymbolic, Complex, FiniteField };
  Kind kind = Kind::GenericSymbolic;

  // Complex data.
  std::complex<double> q{1.0, 0.0};
  std::complex<double> sqrt_q{1.0, 0.0};
  bool has_root_data = false;
  std::int64_t root_num = 0;  // q = exp(2*pi*i*root_num/root_den), reduced
  std::int64_t root_den = 1;

  // Finite-field data.
  std::int64_t prime = 0;
  std::int64_t q_mod = 0;
  std::int64_t sqrt_q_mod = 0;   // 0 when no square root of q exists mod p
  bool has_sqrt_mod = false;

  static Specialization generic();
  static Specialization complex_q(std::complex<double> q);
  static Specialization complex_q(std::complex<double> q, std::complex<double> sqrt_q);
  // q = exp(2*pi*i*num/den) with exact order bookkeeping.
  static Specialization root_of_unity(std::int64_t num, std::int64_t den);
  // Picks a square root of q mod p when one exists.
  static Specialization finite_field(std::int64_t prime, std::int64_t q_mod);

  std::string str() const;
};

// Value of a q-expression under a (non-symbolic) specialization.
struct FieldValue {
  enum class Kind { Complex, Modular } kind = Kind::Complex;
  std::complex<double> c{0.0, 0.0};
  std::int64_t m = 0;

  bool is_zero(double tol = 1e-9) const;
  std::string str() const;
};

// [a]_q = q^{a-1} + q^{a-3} + ... + q^{-a+1}; [0] = 0, [-a] = -[a].
LaurentPoly qint(std::int64_t a);
// [a]_q! = [a][a-1]...[1], a >= 0.
LaurentPoly qfact(std::int64_t a);
// Balanced quantum binomial; exact Laurent polynomial (the quantum-factorial
// quotient divides exactly; violation raises InternalError).  b >= 0.
LaurentPoly qbinom(std::int64_t a, std::int64_t b);

// Evaluation of [a choose b] under a specialization.  Finite-field values go
// through the quantum Lucas factorization and are cross-checked against the
// direct modular evaluation of the symbolic polynomial.
FieldValue qbinom_at(std::int64_t a, std::int64_t b, const Specialization& spec);

// Smallest k >= 1 with [k]_q = 0, or 0 when no such k exists (char-0 fields
// at generic q).  Finite fields and exact roots of unity are computed
// exactly; free-floating complex q falls back to a scan capped at `bound`.
std::int64_t q_characteristic(const Specialization& spec, std::int64_t bound = 10000);

// True iff [a choose b] != 0 under spec for every 0 <= b <= a, decided by
// the base-k / base-p digit criteria (k = q-characteristic).
bool all_qbinoms_nonzero(std::int64_t a, const Specialization& spec);

// Classical helpers.
Int catalan(std::int64_t n);
Int binomial(std::int64_t n, std::int64_t k);
std::int64_t binomial_mod(std::int64_t n, std::int64_t k, std::int64_t p);  // Lucas
// Involutions ("symmetric group elements squaring to one"): s_0 = s_1 = 1,
// s_n = s_{n-1} + (n-1) s_{n-2}.
Int involution_count(std::int64_t n);

}  // namespace skeinlab

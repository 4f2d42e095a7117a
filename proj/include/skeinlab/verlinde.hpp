#pragma once
#include <Eigen/Dense>
#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

#include "skeinlab/fusion.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

// Symbolic S-matrix entry (-1)^{i+j} [(i+1)(j+1)]_q; coincides with the
// colored Hopf-link invariant in colors (i, j).
LaurentPoly s_entry_symbolic(int i, int j);

// Modular data of the level-k sl2 quotient on the simple labels L_0..L_{k-2},
// evaluated at q = exp(i pi q_index / k), a primitive 2k-th root of unity.
struct ModularData {
  int k = 2;
  int q_index = 1;
  std::complex<double> q{1.0, 0.0};
  // s_symbolic[i][j] = s_entry_symbolic(i, j); the numeric s is its value
  // at q.
  std::vector<std::vector<LaurentPoly>> s_symbolic;
  Eigen::MatrixXcd s, t, c;
  // twists[c] = a(L_c) = q^{-c(c+2)/2}, the ribbon scalar; t = diag(twists).
  std::vector<std::complex<double>> twists;
  // dims[c] = (-1)^c [c+1]_q, the row of s through the unit.
  std::vector<double> dims;
  std::complex<double> delta_r{0.0, 0.0}, delta_l{0.0, 0.0};
  double global_dim = 0.0;
};

// Throws InputError when k < 2 or exp(i pi q_index / k) is not a primitive
// 2k-th root of unity, and UnsupportedError above k = 64.
ModularData modular_data_sl2(int k, int q_index = 1);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  // Max-norm deviation for equality checks; |det s| for the regularity check.
  double deviation = 0.0;
};
struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = false;
};

// The modular identity suite: s symmetric, s^2 = dim * c, s^4 = dim^2 * id,
// (st)^3 = delta_r * s^2, dim = delta_r * delta_l, det s != 0, and the
// sin-rescaled s' squaring to (k/2) id.
IdentityReport verify_modular_identities(const ModularData& d,
                                         double tol = 1e-8);

struct VerlindeReport {
  bool all_match = false;
  int triples = 0;
  // Largest distance from any recovered coefficient to its nearest integer.
  double max_deviation = 0.0;
  std::string first_failure;  // empty when all_match
};

// Recovers every structure constant of the matching fusion ring through
// dim * N_{jk}^l = sum_i s_{ij} s_{ik} s_{i l*} / dim(L_i) and requires the
// rounded values to agree exactly.
VerlindeReport verlinde_formula_check(const ModularData& d,
                                      const FusionRing& ring,
                                      double tol = 1e-8);

// Numeric-only (de)serialization: complex entries travel as [re, im] pairs,
// the symbolic s as polynomial serializations.  Data loaded from JSON is
// meant for verify_modular_identities; s_symbolic may be absent.
nlohmann::json modular_data_to_json(const ModularData& d);
ModularData modular_data_from_json(const nlohmann::json& j);

}  // namespace skeinlab

#pragma once
#include <Eigen/Dense>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/qnum.hpp"

namespace skeinlab {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

// A based ring with nonnegative structure constants: c_i c_j = sum_k n[i][j][k] c_k.
// The unit index must act as a two-sided identity, multiplication must be
// associative, and when a dual permutation is present c_i c_j contains the
// unit exactly when j = dual(i).
struct FusionRing {
  std::vector<std::string> labels;
  int unit = 0;
  // n[i][j][k] = multiplicity of c_k in c_i c_j; dense, labels.size() cubed.
  std::vector<std::vector<std::vector<std::int64_t>>> n;
  std::optional<std::vector<int>> dual;

  int rank() const { return static_cast<int>(labels.size()); }
};

// Checks every ring invariant (shape, nonnegativity, unit law, associativity,
// duality when present, distinct labels) and throws InputError naming the
// first violation.
void validate_ring(const FusionRing& r);

// Builders for the rings used throughout: "fib", "s3", "dihedral8",
// "verlinde-sl2" (param = level k >= 2), "verlinde-so3" (even-label subring,
// param = level k >= 2), "ty-zn" (Tambara-Yamagami over Z/n, param = n >= 1),
// "group-zn" (group ring of Z/n, param = n >= 1).  Every result is validated.
FusionRing builtin_ring(const std::string& name, int param = 0);

// JSON shape: {"labels": [...], "unit": u, "N": [[[...]]], "dual": [...]?}.
// from_json validates the assembled ring.
FusionRing ring_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const FusionRing& r);

// Resolves an object description: either a basis label verbatim or a
// comma-separated list of rank() nonnegative integers.
IntVec parse_object(const FusionRing& r, const std::string& text);

// Matrix of left multiplication by sum_j x_j c_j on the basis; column j holds
// the expansion of x * c_j.  Linear in x.
IntMat action_matrix(const FusionRing& r, const IntVec& x);

// Exact-to-double bridge for the numeric eigenroutines.
Eigen::MatrixXd to_dense(const IntMat& m);

// Dominant eigendata of a nonnegative matrix; vectors are entrywise
// nonnegative and normalized to unit coordinate sum.
struct PFData {
  double eigenvalue = 0.0;
  std::vector<double> right_eigenvector;
  std::vector<double> left_eigenvector;
  // max-norm of M v - lambda v (and the transposed counterpart) at the
  // accepted iterate.
  double residual = 0.0;
  int iterations = 0;
};

// Power iteration on M + I: the shift kills the oscillation a periodic
// spectrum would otherwise feed the eigenvector, and the dominant eigenvalue
// of M is recovered by subtracting 1.  Throws InputError for a matrix that is
// not square / not entrywise >= 0 / identically zero, and DomainError
// carrying the last residual when max_iter is exhausted.
PFData pf_data(const Eigen::MatrixXd& m, double tol = 1e-12,
               int max_iter = 100000);

// Dominant eigenvalue of the action matrix of x, and the ring total
// sum_i pfdim(c_i)^2.
double pfdim(const FusionRing& r, const IntVec& x);
double pfdim_ring(const FusionRing& r);

// The strictly positive vector R (unique up to scale when the total action
// graph is strongly connected) with x R = pfdim(x) R for every basis x,
// normalized so the unit coordinate is 1.  Each basis element's eigen-law is
// re-verified within tol; a ring whose total graph is not strongly connected
// is rejected with DomainError.
std::vector<double> regular_object(const FusionRing& r, double tol = 1e-8);

// b_n = total multiplicity of basis elements in x^n for n = 0..n_max, by
// exact integer matrix-vector products starting from the unit coordinate
// vector.
std::vector<Int> growth_bn(const FusionRing& r, const IntVec& x, int n_max);

// Closed-form asymptotic a(n) for b_n: with lambda the dominant modulus and
// mu_0..mu_{h-1} the (simple) eigenvalues on that circle forming a
// root-of-unity orbit, a(n) = sum_j (column sum of v_j) w_j[unit] mu_j^n with
// left/right pairs normalized to w_j v_j = 1.  A repeated dominant eigenvalue
// or a non-orbit dominant set is rejected with UnsupportedError.
double growth_asymptotic(const FusionRing& r, const IntVec& x, int n);

// PF dimensions of x_level inside ring_level for each requested level; the
// builder must yield a nested family, so the sequence must be monotone
// nondecreasing (checked within tol, violation -> InternalError).
std::vector<double> pfdim_filtered(
    const std::function<std::pair<FusionRing, IntVec>(int)>& builder,
    const std::vector<int>& levels, double tol = 1e-9);

}  // namespace skeinlab

#include "skeinlab/fusion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <set>
#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Group ring on a finite abelian group given by its addition table; the
// neutral element must sit at index 0.
FusionRing group_ring(std::vector<std::string> labels,
                      const std::vector<std::vector<int>>& table,
                      std::vector<int> inverse) {
  const int g = static_cast<int>(table.size());
  FusionRing r;
  r.labels = std::move(labels);
  r.unit = 0;
  r.n.assign(g, std::vector<std::vector<std::int64_t>>(
                    g, std::vector<std::int64_t>(g, 0)));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) r.n[i][j][table[i][j]] = 1;
  r.dual = std::move(inverse);
  return r;
}

// Tambara-Yamagami ring: the group elements plus one extra object x with
// g x = x g = x and x^2 = sum of all group elements.
FusionRing ty_ring(std::vector<std::string> labels, const std::string& x_label,
                   const std::vector<std::vector<int>>& table,
                   std::vector<int> inverse) {
  FusionRing r = group_ring(std::move(labels), table, std::move(inverse));
  const int g = static_cast<int>(table.size());
  const int x = g;
  r.labels.push_back(x_label);
  r.n.resize(g + 1);
  for (auto& plane : r.n) {
    plane.resize(g + 1);
    for (auto& row : plane) row.resize(g + 1, 0);
  }
  for (int i = 0; i < g; ++i) {
    r.n[i][x][x] = 1;
    r.n[x][i][x] = 1;
    r.n[x][x][i] = 1;
  }
  r.dual->push_back(x);
  return r;
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<int> cyclic_inverse(int n) {
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = (n - i) % n;
  return inv;
}

// Truncated Clebsch-Gordan rule at level k: L_i L_j contains L_l once when
// l has the parity of i+j and |i-j| <= l <= min(i+j, 2(k-2)-i-j).
FusionRing verlinde_sl2_ring(int k) {
  if (k < 2)
    throw InputError("builtin_ring: verlinde-sl2 needs level >= 2, got " +
                     std::to_string(k));
  const int m = k - 1;
  FusionRing r;
  r.unit = 0;
  for (int c = 0; c < m; ++c) r.labels.push_back("L" + std::to_string(c));
  r.n.assign(m, std::vector<std::vector<std::int64_t>>(
                    m, std::vector<std::int64_t>(m, 0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int hi = std::min(i + j, 2 * (k - 2) - i - j);
      for (int l = std::abs(i - j); l <= hi; l += 2) r.n[i][j][l] = 1;
    }
  std::vector<int> dual(m);
  for (int i = 0; i < m; ++i) dual[i] = i;
  r.dual = dual;
  return r;
}

// Even-label subring of verlinde-sl2(k); closed because parity is additive.
FusionRing verlinde_so3_ring(int k) {
  FusionRing full = verlinde_sl2_ring(k);
  std::vector<int> even;
  for (int c = 0; c + 1 < k; c += 2) even.push_back(c);
  const int m = static_cast<int>(even.size());
  FusionRing r;
  r.unit = 0;
  r.n.assign(m, std::vector<std::vector<std::int64_t>>(
                    m, std::vector<std::int64_t>(m, 0)));
  for (int a = 0; a < m; ++a) {
    r.labels.push_back(full.labels[even[a]]);
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        r.n[a][b][c] = full.n[even[a]][even[b]][even[c]];
  }
  std::vector<int> dual(m);
  for (int i = 0; i < m; ++i) dual[i] = i;
  r.dual = dual;
  return r;
}

FusionRing fib_ring() {
  FusionRing r;
  r.labels = {"1", "L"};
  r.unit = 0;
  r.n.assign(2, std::vector<std::vector<std::int64_t>>(
                    2, std::vector<std::int64_t>(2, 0)));
  r.n[0][0][0] = r.n[0][1][1] = r.n[1][0][1] = 1;
  r.n[1][1][0] = r.n[1][1][1] = 1;  // L^2 = 1 + L
  r.dual = std::vector<int>{0, 1};
  return r;
}

// Character ring of S3 in the basis (1, L_s, L_1') with
// L_s^2 = 1 + L_s + L_1'.
FusionRing s3_ring() {
  FusionRing r;
  r.labels = {"1", "Ls", "L1'"};
  r.unit = 0;
  r.n.assign(3, std::vector<std::vector<std::int64_t>>(
                    3, std::vector<std::int64_t>(3, 0)));
  for (int j = 0; j < 3; ++j) r.n[0][j][j] = r.n[j][0][j] = 1;
  r.n[1][1][0] = r.n[1][1][1] = r.n[1][1][2] = 1;
  r.n[1][2][1] = r.n[2][1][1] = 1;
  r.n[2][2][0] = 1;
  r.dual = std::vector<int>{0, 1, 2};
  return r;
}

}  // namespace

void validate_ring(const FusionRing& r) {
  const int n = r.rank();
  if (n == 0) throw InputError("fusion ring: empty basis");
  if (r.unit < 0 || r.unit >= n)
    throw InputError("fusion ring: unit index " + std::to_string(r.unit) +
                     " outside 0.." + std::to_string(n - 1));
  if (std::set<std::string>(r.labels.begin(), r.labels.end()).size() !=
      r.labels.size())
    throw InputError("fusion ring: duplicate labels");
  if (static_cast<int>(r.n.size()) != n)
    throw InputError("fusion ring: N must have one plane per basis element");
  for (const auto& plane : r.n) {
    if (static_cast<int>(plane.size()) != n)
      throw InputError("fusion ring: ragged N");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != n)
        throw InputError("fusion ring: ragged N");
      for (std::int64_t e : row)
        if (e < 0) throw InputError("fusion ring: negative structure constant");
    }
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const std::int64_t want = (j == k) ? 1 : 0;
      if (r.n[r.unit][j][k] != want || r.n[j][r.unit][k] != want)
        throw InputError("fusion ring: unit law fails at (" + r.labels[j] +
                         ", " + r.labels[k] + ")");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (int m = 0; m < n; ++m) {
            lhs += r.n[i][j][m] * r.n[m][k][l];
            rhs += r.n[j][k][m] * r.n[i][m][l];
          }
          if (lhs != rhs)
            throw InputError("fusion ring: associativity fails at (" +
                             r.labels[i] + " " + r.labels[j] + " " +
                             r.labels[k] + " -> " + r.labels[l] + ")");
        }
  if (r.dual) {
    const auto& d = *r.dual;
    if (static_cast<int>(d.size()) != n)
      throw InputError("fusion ring: dual permutation has wrong size");
    for (int i = 0; i < n; ++i) {
      if (d[i] < 0 || d[i] >= n || d[d[i]] != i)
        throw InputError("fusion ring: dual is not an involutive permutation");
      for (int j = 0; j < n; ++j) {
        const std::int64_t want = (j == d[i]) ? 1 : 0;
        if (r.n[i][j][r.unit] != want)
          throw InputError("fusion ring: duality law fails at (" +
                           r.labels[i] + ", " + r.labels[j] + ")");
      }
    }
  }
}

FusionRing builtin_ring(const std::string& name, int param) {
  FusionRing r;
  if (name == "fib") {
    r = fib_ring();
  } else if (name == "s3") {
    r = s3_ring();
  } else if (name == "verlinde-sl2") {
    r = verlinde_sl2_ring(param);
  } else if (name == "verlinde-so3") {
    r = verlinde_so3_ring(param);
  } else if (name == "group-zn" || name == "ty-zn") {
    if (param < 1)
      throw InputError("builtin_ring: " + name + " needs n >= 1, got " +
                       std::to_string(param));
    std::vector<std::string> labels;
    for (int i = 0; i < param; ++i) labels.push_back("g" + std::to_string(i));
    if (name == "group-zn")
      r = group_ring(std::move(labels), cyclic_table(param),
                     cyclic_inverse(param));
    else
      r = ty_ring(std::move(labels), "X", cyclic_table(param),
                  cyclic_inverse(param));
  } else if (name == "dihedral8") {
    // Tambara-Yamagami over Z/2 x Z/2 (xor table): the unique fusion ring
    // with four invertibles and V^2 = their sum.
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
    r = ty_ring({"1", "a", "b", "ab"}, "V", table, {0, 1, 2, 3});
  } else {
    throw InputError(
        "builtin_ring: unknown ring \"" + name +
        "\" (available: fib, s3, dihedral8, verlinde-sl2, verlinde-so3, "
        "ty-zn, group-zn)");
  }
  validate_ring(r);
  return r;
}

FusionRing ring_from_json(const nlohmann::json& j) {
  FusionRing r;
  try {
    r.labels = j.at("labels").get<std::vector<std::string>>();
    r.unit = j.at("unit").get<int>();
    r.n = j.at("N")
              .get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    if (j.contains("dual") && !j.at("dual").is_null())
      r.dual = j.at("dual").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("fusion ring JSON: ") + e.what());
  }
  validate_ring(r);
  return r;
}

nlohmann::json ring_to_json(const FusionRing& r) {
  nlohmann::json j;
  j["labels"] = r.labels;
  j["unit"] = r.unit;
  j["N"] = r.n;
  if (r.dual) j["dual"] = *r.dual;
  return j;
}

IntVec parse_object(const FusionRing& r, const std::string& text) {
  for (int i = 0; i < r.rank(); ++i)
    if (r.labels[i] == text) {
      IntVec v(r.rank(), Int(0));
      v[i] = 1;
      return v;
    }
  IntVec v;
  std::stringstream ss(text);
  std::string tok;
  bool ok = !text.empty();
  while (ok && std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long e = std::stoll(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      ok = used == tok.size() && e >= 0;
      v.push_back(Int(e));
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok || static_cast<int>(v.size()) != r.rank())
    throw InputError("fusion object: \"" + text +
                     "\" is neither a basis label nor a comma-separated "
                     "list of " +
                     std::to_string(r.rank()) + " nonnegative integers");
  return v;
}

IntMat action_matrix(const FusionRing& r, const IntVec& x) {
  const int n = r.rank();
  if (static_cast<int>(x.size()) != n)
    throw InputError("action_matrix: object vector has " +
                     std::to_string(x.size()) + " entries for rank " +
                     std::to_string(n));
  for (const Int& e : x)
    if (e < 0) throw InputError("action_matrix: object vector has a negative entry");
  IntMat m(n, IntVec(n, Int(0)));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (r.n[i][j][k] != 0) m[k][j] += x[i] * r.n[i][j][k];
  }
  return m;
}

Eigen::MatrixXd to_dense(const IntMat& m) {
  const auto rows = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(rows, rows == 0 ? 0 : static_cast<Eigen::Index>(m[0].size()));
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(m[i].size()) != out.cols())
      throw InputError("to_dense: ragged matrix");
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = m[i][j].convert_to<double>();
  }
  return out;
}

PFData pf_data(const Eigen::MatrixXd& m, double tol, int max_iter) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw InputError("pf_data: matrix must be square and nonempty");
  if ((m.array() < 0.0).any())
    throw InputError("pf_data: matrix must be entrywise nonnegative");
  if (m.isZero(0.0)) throw InputError("pf_data: zero matrix");
  if (!(tol > 0.0) || max_iter < 1)
    throw InputError("pf_data: need tol > 0 and max_iter >= 1");

  // One simplex-normalized power iteration on A + I; returns the vector and
  // reports the eigenvalue of A (growth factor minus the shift).
  const auto iterate = [&](const Eigen::MatrixXd& a, double& lambda_out,
                           double& resid_out, int& iter_out) {
    const Eigen::Index n = a.rows();
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    double resid = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
      const Eigen::VectorXd u = a * v + v;
      v = u / u.sum();
      const Eigen::VectorXd av = a * v;
      const double lambda = av.sum();
      resid = (av - lambda * v).cwiseAbs().maxCoeff();
      if (resid < tol) {
        lambda_out = lambda;
        resid_out = resid;
        iter_out = it;
        return v;
      }
    }
    throw DomainError("pf_data: no convergence after " +
                      std::to_string(max_iter) + " iterations (last residual " +
                      fmt(resid) + ")");
  };

  PFData out;
  double lr = 0.0, rr = 0.0;
  int ir = 0, il = 0;
  const Eigen::VectorXd right = iterate(m, out.eigenvalue, rr, ir);
  double lambda_left = 0.0;
  const Eigen::VectorXd left = iterate(m.transpose(), lambda_left, lr, il);
  out.right_eigenvector.assign(right.data(), right.data() + right.size());
  out.left_eigenvector.assign(left.data(), left.data() + left.size());
  out.residual = std::max(rr, lr);
  out.iterations = std::max(ir, il);
  return out;
}

double pfdim(const FusionRing& r, const IntVec& x) {
  return pf_data(to_dense(action_matrix(r, x))).eigenvalue;
}

double pfdim_ring(const FusionRing& r) {
  double total = 0.0;
  for (int i = 0; i < r.rank(); ++i) {
    IntVec e(r.rank(), Int(0));
    e[i] = 1;
    const double d = pfdim(r, e);
    total += d * d;
  }
  return total;
}

std::vector<double> regular_object(const FusionRing& r, double tol) {
  const int n = r.rank();
  const IntMat total = action_matrix(r, IntVec(n, Int(1)));

  // Transitivity = strong connectivity of the total action graph
  // (edge j -> k when c_k appears in (sum_i c_i) c_j).
  const auto reachable = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue{r.unit};
    seen[r.unit] = 1;
    while (!queue.empty()) {
      const int j = queue.front();
      queue.pop_front();
      for (int k = 0; k < n; ++k) {
        const Int& e = forward ? total[k][j] : total[j][k];
        if (e != 0 && !seen[k]) {
          seen[k] = 1;
          queue.push_back(k);
        }
      }
    }
    return std::count(seen.begin(), seen.end(), char(1)) == n;
  };
  if (!reachable(true) || !reachable(false))
    throw DomainError(
        "regular_object: ring is not transitive (total action graph is not "
        "strongly connected)");

  const PFData pf = pf_data(to_dense(total));
  std::vector<double> reg = pf.right_eigenvector;
  if (reg[r.unit] <= 0.0)
    throw InternalError("regular_object: eigenvector vanishes at the unit");
  for (double& e : reg) e /= pf.right_eigenvector[r.unit];

  // The same vector must be the PF eigenvector of every basis action.
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    const IntMat mi = action_matrix(r, e);
    const double di = pfdim(r, e);
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += mi[k][j].convert_to<double>() * reg[j];
      if (std::abs(acc - di * reg[k]) > tol * std::max(1.0, di))
        throw InternalError("regular_object: eigen-law fails for basis " +
                            r.labels[i]);
    }
    if (reg[i] <= 0.0)
      throw InternalError("regular_object: vector is not strictly positive");
  }
  return reg;
}

std::vector<Int> growth_bn(const FusionRing& r, const IntVec& x, int n_max) {
  if (n_max < 0) throw InputError("growth_bn: n_max must be >= 0");
  const IntMat m = action_matrix(r, x);
  const int n = r.rank();
  IntVec v(n, Int(0));
  v[r.unit] = 1;
  std::vector<Int> out;
  out.reserve(n_max + 1);
  out.push_back(Int(1));
  for (int step = 1; step <= n_max; ++step) {
    IntVec next(n, Int(0));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        if (m[k][j] != 0 && v[j] != 0) next[k] += m[k][j] * v[j];
    v = std::move(next);
    Int b = 0;
    for (const Int& e : v) b += e;
    out.push_back(b);
  }
  return out;
}

double growth_asymptotic(const FusionRing& r, const IntVec& x, int n) {
  if (n < 0) throw InputError("growth_asymptotic: n must be >= 0");
  const Eigen::MatrixXd m = to_dense(action_matrix(r, x));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(
      m.cast<std::complex<double>>());
  if (es.info() != Eigen::Success)
    throw InternalError("growth_asymptotic: eigensolver failed");
  const auto& mu = es.eigenvalues();
  double lambda = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    lambda = std::max(lambda, std::abs(mu[i]));
  if (lambda < 1e-12)
    throw UnsupportedError("growth_asymptotic: dominant eigenvalue is zero");

  std::vector<Eigen::Index> dominant;
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (std::abs(mu[i]) >= lambda * (1.0 - 1e-8)) dominant.push_back(i);
  for (std::size_t a = 0; a < dominant.size(); ++a)
    for (std::size_t b = a + 1; b < dominant.size(); ++b)
      if (std::abs(mu[dominant[a]] - mu[dominant[b]]) <= 1e-8 * lambda)
        throw UnsupportedError(
            "growth_asymptotic: dominant eigenvalue has multiplicity > 1");
  // The pseudo-dominant set must be lambda times the h-th roots of unity.
  const int h = static_cast<int>(dominant.size());
  const double lh = std::pow(lambda, h);
  for (const Eigen::Index i : dominant)
    if (std::abs(std::pow(mu[i], h) - lh) > 1e-6 * lh)
      throw UnsupportedError(
          "growth_asymptotic: dominant eigenvalues do not form a "
          "root-of-unity orbit");

  const Eigen::MatrixXcd v = es.eigenvectors();
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  if (!lu.isInvertible())
    throw UnsupportedError("growth_asymptotic: defective eigenbasis");
  const Eigen::MatrixXcd w = lu.inverse();  // rows are left eigenvectors, w v = id

  std::complex<double> acc = 0.0;
  for (const Eigen::Index i : dominant)
    acc += v.col(i).sum() * w(i, r.unit) * std::pow(mu[i], n);
  return acc.real();
}

std::vector<double> pfdim_filtered(
    const std::function<std::pair<FusionRing, IntVec>(int)>& builder,
    const std::vector<int>& levels, double tol) {
  if (levels.empty()) throw InputError("pfdim_filtered: empty level list");
  std::vector<double> out;
  out.reserve(levels.size());
  for (const int level : levels) {
    const auto [ring, x] = builder(level);
    const double d = pfdim(ring, x);
    if (!out.empty() && d < out.back() - tol)
      throw InternalError("pfdim_filtered: sequence decreased at level " +
                          std::to_string(level) + " (" + fmt(out.back()) +
                          " -> " + fmt(d) + ")");
    out.push_back(d);
  }
  return out;
}

}  // namespace skeinlab

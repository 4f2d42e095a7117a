#include "skeinlab/verlinde.hpp"

#include <cmath>
#include <numeric>

#include "skeinlab/errors.hpp"
#include "skeinlab/qnum.hpp"

namespace skeinlab {

namespace {

const double kPi = std::acos(-1.0);

std::complex<double> cis(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

nlohmann::json complex_to_json(const std::complex<double>& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("modular data JSON: complex values must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("modular data JSON: matrix must be a nonempty array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw InputError("modular data JSON: ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

}  // namespace

LaurentPoly s_entry_symbolic(int i, int j) {
  if (i < 0 || j < 0)
    throw InputError("s_entry_symbolic: colors must be nonnegative");
  const LaurentPoly p =
      qint(static_cast<std::int64_t>(i + 1) * static_cast<std::int64_t>(j + 1));
  return ((i + j) % 2) ? p.scaled(Int(-1)) : p;
}

ModularData modular_data_sl2(int k, int q_index) {
  if (k < 2)
    throw InputError("modular_data_sl2: level must be >= 2, got " +
                     std::to_string(k));
  if (k > 64)
    throw UnsupportedError("modular_data_sl2: level " + std::to_string(k) +
                           " exceeds the numeric-conditioning cap of 64");
  if (q_index < 1 || q_index >= 2 * k || std::gcd(q_index, 2 * k) != 1)
    throw InputError("modular_data_sl2: q-index " + std::to_string(q_index) +
                     " does not give a primitive " + std::to_string(2 * k) +
                     "-th root of unity");

  ModularData d;
  d.k = k;
  d.q_index = q_index;
  d.q = cis(kPi * q_index / k);
  const std::complex<double> sqrt_q = cis(kPi * q_index / (2.0 * k));

  const int n = k - 1;
  d.s_symbolic.assign(n, {});
  d.s = Eigen::MatrixXcd(n, n);
  d.t = Eigen::MatrixXcd::Zero(n, n);
  d.c = Eigen::MatrixXcd::Identity(n, n);  // every L_i is self-dual
  for (int i = 0; i < n; ++i) {
    d.s_symbolic[i].reserve(n);
    for (int j = 0; j < n; ++j) {
      d.s_symbolic[i].push_back(s_entry_symbolic(i, j));
      d.s(i, j) = d.s_symbolic[i][j].eval(d.q, sqrt_q);
    }
  }
  for (int c = 0; c < n; ++c) {
    d.dims.push_back(d.s(0, c).real());
    // Ribbon scalar q^{-c(c+2)/2}, taken on the branch sqrt_q^{-c(c+2)}.
    d.twists.push_back(cis(-kPi * q_index * c * (c + 2) / (2.0 * k)));
    d.t(c, c) = d.twists.back();
    const double dim2 = d.dims[c] * d.dims[c];
    d.delta_r += d.twists[c] * dim2;
    d.delta_l += std::conj(d.twists[c]) * dim2;
    d.global_dim += dim2;
  }
  return d;
}

IdentityReport verify_modular_identities(const ModularData& d, double tol) {
  if (!(tol > 0.0))
    throw InputError("verify_modular_identities: tol must be > 0");
  const Eigen::Index n = d.s.rows();
  if (n == 0 || d.s.cols() != n || d.t.rows() != n || d.t.cols() != n ||
      d.c.rows() != n || d.c.cols() != n)
    throw InputError(
        "verify_modular_identities: s, t, c must be square of equal size");

  IdentityReport rep;
  const auto add = [&rep](const std::string& name, double dev, bool pass) {
    rep.checks.push_back({name, pass, dev});
  };
  const auto maxdev = [](const Eigen::MatrixXcd& a) {
    return a.cwiseAbs().maxCoeff();
  };
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd s2 = d.s * d.s;

  double dev = maxdev(d.s - d.s.transpose());
  add("s symmetric", dev, dev <= tol);
  dev = maxdev(s2 - d.global_dim * d.c);
  add("s^2 = dim * c", dev, dev <= tol);
  dev = maxdev(s2 * s2 - d.global_dim * d.global_dim * id);
  add("s^4 = dim^2 * id", dev, dev <= tol);
  const Eigen::MatrixXcd st = d.s * d.t;
  dev = maxdev(st * st * st - d.delta_r * s2);
  add("(st)^3 = delta_r * s^2", dev, dev <= tol);
  dev = std::abs(d.delta_r * d.delta_l - std::complex<double>(d.global_dim));
  add("dim = delta_r * delta_l", dev, dev <= tol);
  const double det = std::abs(d.s.determinant());
  add("det s != 0", det, det > tol);
  // The sin-normalized matrix s' = sin(pi m / k) s is (k/2)^{1/2} times a
  // real orthogonal involution.
  const double scale = std::sin(kPi * d.q_index / d.k);
  const Eigen::MatrixXcd sp = scale * d.s;
  dev = maxdev(sp * sp - (d.k / 2.0) * id);
  add("(s')^2 = (k/2) id", dev, dev <= tol);

  rep.all_pass = true;
  for (const IdentityCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

VerlindeReport verlinde_formula_check(const ModularData& d,
                                      const FusionRing& ring, double tol) {
  if (!(tol > 0.0))
    throw InputError("verlinde_formula_check: tol must be > 0");
  const int n = ring.rank();
  if (n != d.k - 1 || d.s.rows() != n)
    throw InputError("verlinde_formula_check: ring rank " + std::to_string(n) +
                     " does not match level " + std::to_string(d.k));

  VerlindeReport rep;
  rep.all_match = true;
  for (int j = 0; j < n; ++j)
    for (int kk = 0; kk < n; ++kk)
      for (int l = 0; l < n; ++l) {
        const int ldual = ring.dual ? (*ring.dual)[l] : l;
        std::complex<double> sum = 0.0;
        for (int i = 0; i < n; ++i)
          sum += d.s(i, j) * d.s(i, kk) * d.s(i, ldual) / d.s(i, 0);
        const std::complex<double> est = sum / d.global_dim;
        const double rounded = std::round(est.real());
        const double dev = std::abs(est - std::complex<double>(rounded));
        rep.max_deviation = std::max(rep.max_deviation, dev);
        ++rep.triples;
        const bool ok =
            dev <= tol &&
            static_cast<std::int64_t>(rounded) == ring.n[j][kk][l];
        if (!ok) {
          rep.all_match = false;
          if (rep.first_failure.empty())
            rep.first_failure = "(" + ring.labels[j] + ", " + ring.labels[kk] +
                                " -> " + ring.labels[l] + ")";
        }
      }
  return rep;
}

nlohmann::json modular_data_to_json(const ModularData& d) {
  nlohmann::json j;
  j["k"] = d.k;
  j["q_index"] = d.q_index;
  j["q"] = complex_to_json(d.q);
  j["S"] = matrix_to_json(d.s);
  j["T"] = matrix_to_json(d.t);
  j["C"] = matrix_to_json(d.c);
  j["twists"] = nlohmann::json::array();
  for (const auto& tw : d.twists) j["twists"].push_back(complex_to_json(tw));
  j["dims"] = d.dims;
  j["delta_r"] = complex_to_json(d.delta_r);
  j["delta_l"] = complex_to_json(d.delta_l);
  j["global_dim"] = d.global_dim;
  if (!d.s_symbolic.empty()) {
    nlohmann::json sym = nlohmann::json::array();
    for (const auto& row : d.s_symbolic) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& p : row) r.push_back(p.to_json());
      sym.push_back(r);
    }
    j["S_symbolic"] = sym;
  }
  return j;
}

ModularData modular_data_from_json(const nlohmann::json& j) {
  ModularData d;
  try {
    d.k = j.at("k").get<int>();
    d.q_index = j.value("q_index", 1);
    d.s = matrix_from_json(j.at("S"));
    d.t = matrix_from_json(j.at("T"));
    d.c = matrix_from_json(j.at("C"));
    d.q = j.contains("q") ? complex_from_json(j.at("q"))
                          : cis(kPi * d.q_index / d.k);
    d.delta_r = complex_from_json(j.at("delta_r"));
    d.delta_l = complex_from_json(j.at("delta_l"));
    d.global_dim = j.at("global_dim").get<double>();
    if (j.contains("twists"))
      for (const auto& tw : j.at("twists"))
        d.twists.push_back(complex_from_json(tw));
    if (j.contains("dims")) d.dims = j.at("dims").get<std::vector<double>>();
    if (j.contains("S_symbolic"))
      for (const auto& row : j.at("S_symbolic")) {
        d.s_symbolic.emplace_back();
        for (const auto& p : row)
          d.s_symbolic.back().push_back(LaurentPoly::from_json(p));
      }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("modular data JSON: ") + e.what());
  }
  return d;
}

}  // namespace skeinlab

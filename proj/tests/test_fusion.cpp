#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <array>
#include <complex>

#include "skeinlab/errors.hpp"
#include "skeinlab/fusion.hpp"

using namespace skeinlab;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

IntVec basis(const FusionRing& r, int i) {
  IntVec v(r.rank(), Int(0));
  v[i] = 1;
  return v;
}

IntMat int_rows(const std::vector<std::vector<long long>>& rows) {
  IntMat out;
  for (const auto& row : rows) {
    IntVec v;
    for (long long e : row) v.push_back(Int(e));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("built-in rings validate and bad mutations are rejected") {
  for (const char* name : {"fib", "s3", "dihedral8"})
    CHECK_NOTHROW(builtin_ring(name));
  for (int k = 2; k <= 13; ++k) {
    CHECK_NOTHROW(builtin_ring("verlinde-sl2", k));
    CHECK_NOTHROW(builtin_ring("verlinde-so3", k));
  }
  for (int n = 1; n <= 6; ++n) {
    CHECK_NOTHROW(builtin_ring("ty-zn", n));
    CHECK_NOTHROW(builtin_ring("group-zn", n));
  }

  CHECK_THROWS_AS(builtin_ring("homfly"), InputError);
  CHECK_THROWS_AS(builtin_ring("verlinde-sl2", 1), InputError);
  CHECK_THROWS_AS(builtin_ring("ty-zn", 0), InputError);

  // Fuzz one structure constant at a time.  Almost every increment trips the
  // unit, associativity, or duality law; the sole survivor in both rings is
  // N[x][x][x] += 1, which genuinely is another fusion ring (the near-group
  // family x^2 = ... + 2x), so the validator is right to accept it.
  for (const char* name : {"fib", "s3"}) {
    const FusionRing clean = builtin_ring(name);
    const int n = clean.rank();
    std::vector<std::array<int, 3>> survivors;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          FusionRing bad = clean;
          bad.n[i][j][k] += 1;
          try {
            validate_ring(bad);
            survivors.push_back({i, j, k});
          } catch (const InputError&) {
          }
        }
    const int x = 1;  // the non-invertible generator sits at index 1 in both
    REQUIRE(survivors.size() == 1);
    CHECK(survivors[0] == std::array<int, 3>{x, x, x});
  }

  FusionRing r = builtin_ring("verlinde-sl2", 5);
  r.n[1][2][1] += 1;
  CHECK_THROWS_AS(validate_ring(r), InputError);

  FusionRing bad_unit = builtin_ring("fib");
  bad_unit.unit = 5;
  CHECK_THROWS_AS(validate_ring(bad_unit), InputError);

  FusionRing bad_dual = builtin_ring("group-zn", 3);
  (*bad_dual.dual)[1] = 1;
  CHECK_THROWS_AS(validate_ring(bad_dual), InputError);

  FusionRing ragged = builtin_ring("fib");
  ragged.n[1][1].pop_back();
  CHECK_THROWS_AS(validate_ring(ragged), InputError);
}

TEST_CASE("action matrices match the hand tables") {
  const FusionRing s3 = builtin_ring("s3");
  CHECK(action_matrix(s3, parse_object(s3, "Ls")) ==
        int_rows({{0, 1, 0}, {1, 1, 1}, {0, 1, 0}}));
  CHECK(action_matrix(s3, basis(s3, 0)) ==
        int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  const FusionRing fib = builtin_ring("fib");
  CHECK(action_matrix(fib, parse_object(fib, "L")) == int_rows({{0, 1}, {1, 1}}));

  // Linearity: action(1 + 2L) = action(1) + 2 action(L).
  IntVec mix(2, Int(0));
  mix[0] = 1;
  mix[1] = 2;
  CHECK(action_matrix(fib, mix) == int_rows({{1, 2}, {2, 3}}));

  CHECK_THROWS_AS(action_matrix(fib, IntVec(3, Int(1))), InputError);
  IntVec neg(2, Int(0));
  neg[1] = -1;
  CHECK_THROWS_AS(action_matrix(fib, neg), InputError);
}

TEST_CASE("object parsing accepts labels and vectors") {
  const FusionRing s3 = builtin_ring("s3");
  CHECK(parse_object(s3, "L1'") == basis(s3, 2));
  CHECK(parse_object(s3, "0, 1, 0") == basis(s3, 1));
  CHECK_THROWS_AS(parse_object(s3, "Lz"), InputError);
  CHECK_THROWS_AS(parse_object(s3, "1,2"), InputError);
  CHECK_THROWS_AS(parse_object(s3, "1,-2,0"), InputError);
  CHECK_THROWS_AS(parse_object(s3, ""), InputError);
}

TEST_CASE("pf_data finds the dominant pair on the classic matrices") {
  const FusionRing fib = builtin_ring("fib");
  const PFData f = pf_data(to_dense(action_matrix(fib, basis(fib, 1))));
  CHECK(std::abs(f.eigenvalue - kPhi) < 1e-10);
  CHECK(f.residual < 1e-10);
  // v proportional to (1, phi), normalized to unit sum.
  CHECK(std::abs(f.right_eigenvector[1] / f.right_eigenvector[0] - kPhi) < 1e-9);
  CHECK(std::abs(f.right_eigenvector[0] + f.right_eigenvector[1] - 1.0) < 1e-12);

  const FusionRing s3 = builtin_ring("s3");
  const PFData g = pf_data(to_dense(action_matrix(s3, basis(s3, 1))));
  CHECK(std::abs(g.eigenvalue - 2.0) < 1e-10);
  CHECK(std::abs(g.right_eigenvector[1] / g.right_eigenvector[0] - 2.0) < 1e-9);
  CHECK(std::abs(g.right_eigenvector[2] / g.right_eigenvector[0] - 1.0) < 1e-9);

  const FusionRing ty3 = builtin_ring("ty-zn", 3);
  const PFData x = pf_data(to_dense(action_matrix(ty3, basis(ty3, 3))));
  CHECK(std::abs(x.eigenvalue - std::sqrt(3.0)) < 1e-10);

  // Left and right vectors agree for these symmetric actions.
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(g.left_eigenvector[i] - g.right_eigenvector[i]) < 1e-9);

  Eigen::MatrixXd rect(2, 3);
  rect.setOnes();
  CHECK_THROWS_AS(pf_data(rect), InputError);
  Eigen::MatrixXd negm = Eigen::MatrixXd::Identity(2, 2);
  negm(0, 1) = -1.0;
  CHECK_THROWS_AS(pf_data(negm), InputError);
  CHECK_THROWS_AS(pf_data(Eigen::MatrixXd::Zero(2, 2)), InputError);

  try {
    pf_data(to_dense(action_matrix(fib, basis(fib, 1))), 1e-15, 2);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
}

TEST_CASE("PF dimensions of objects and rings") {
  const FusionRing fib = builtin_ring("fib");
  CHECK(std::abs(pfdim(fib, basis(fib, 1)) - kPhi) < 1e-10);
  CHECK(std::abs(pfdim_ring(fib) - (5.0 + std::sqrt(5.0)) / 2.0) < 1e-9);

  CHECK(std::abs(pfdim_ring(builtin_ring("group-zn", 5)) - 5.0) < 1e-9);
  CHECK(std::abs(pfdim_ring(builtin_ring("ty-zn", 3)) - 6.0) < 1e-9);

  const FusionRing v4 = builtin_ring("verlinde-sl2", 4);
  CHECK(std::abs(pfdim(v4, basis(v4, 1)) - std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("regular objects") {
  const FusionRing s3 = builtin_ring("s3");
  const std::vector<double> r3 = regular_object(s3);
  REQUIRE(r3.size() == 3);
  CHECK(std::abs(r3[0] - 1.0) < 1e-9);
  CHECK(std::abs(r3[1] - 2.0) < 1e-9);
  CHECK(std::abs(r3[2] - 1.0) < 1e-9);

  const FusionRing fib = builtin_ring("fib");
  const std::vector<double> rf = regular_object(fib);
  CHECK(std::abs(rf[0] - 1.0) < 1e-12);
  CHECK(std::abs(rf[1] - kPhi) < 1e-9);

  // verlinde-sl2(k): entries must be [i+1]_q at q = exp(i pi / k).
  const int k = 5;
  const FusionRing ver = builtin_ring("verlinde-sl2", k);
  const std::vector<double> rv = regular_object(ver);
  for (int i = 0; i + 1 < k; ++i) {
    const double qdim =
        std::sin((i + 1) * M_PI / k) / std::sin(M_PI / k);
    CHECK(std::abs(rv[i] - qdim) < 1e-9);
  }

  // Non-transitive ring: 1 and an idempotent e with e^2 = e; from e the unit
  // is unreachable.
  FusionRing proj;
  proj.labels = {"1", "e"};
  proj.unit = 0;
  proj.n.assign(2, std::vector<std::vector<std::int64_t>>(
                       2, std::vector<std::int64_t>(2, 0)));
  proj.n[0][0][0] = proj.n[0][1][1] = proj.n[1][0][1] = 1;
  proj.n[1][1][1] = 1;
  validate_ring(proj);
  CHECK_THROWS_AS(regular_object(proj), DomainError);
}

TEST_CASE("growth sequences hit the classical families") {
  const FusionRing fib = builtin_ring("fib");
  const std::vector<Int> bf = growth_bn(fib, basis(fib, 1), 30);
  Int a = 1, b = 1;  // Fibonacci
  for (int n = 0; n <= 30; ++n) {
    CHECK(bf[n] == a);
    const Int c = a + b;
    a = b;
    b = c;
  }

  // S3: b_n = J(n) + 2 J(n-1) with Jacobsthal J(0)=0, J(1)=1.
  const FusionRing s3 = builtin_ring("s3");
  const std::vector<Int> bs = growth_bn(s3, basis(s3, 1), 30);
  CHECK(bs[0] == 1);
  std::vector<Int> jac{0, 1};
  for (int n = 2; n <= 31; ++n) jac.push_back(jac[n - 1] + 2 * jac[n - 2]);
  for (int n = 1; n <= 30; ++n) CHECK(bs[n] == jac[n] + 2 * jac[n - 1]);

  const FusionRing dih = builtin_ring("dihedral8");
  const std::vector<Int> bd = growth_bn(dih, parse_object(dih, "V"), 30);
  for (int n = 0; n <= 30; ++n) {
    Int want = 1;
    for (int i = 0; i < n / 2; ++i) want *= 4;
    CHECK(bd[n] == want);
  }

  // Untruncated regime: level far above n_max leaves plain sl2 tensor powers,
  // whose b_n are the middle binomial coefficients.
  const FusionRing big = builtin_ring("verlinde-sl2", 23);
  const std::vector<Int> bb = growth_bn(big, basis(big, 1), 20);
  for (int n = 0; n <= 20; ++n) CHECK(bb[n] == binomial(n, n / 2));

  CHECK_THROWS_AS(growth_bn(fib, basis(fib, 1), -1), InputError);
}

TEST_CASE("nth root of b_n approaches the PF dimension") {
  struct Probe {
    const char* ring;
    const char* object;
    double lambda;
  };
  for (const Probe& p : {Probe{"fib", "L", kPhi}, Probe{"s3", "Ls", 2.0},
                         Probe{"dihedral8", "V", 2.0}}) {
    const FusionRing r = builtin_ring(p.ring);
    const std::vector<Int> bn = growth_bn(r, parse_object(r, p.object), 60);
    const double root =
        std::pow(bn[60].convert_to<double>(), 1.0 / 60.0);
    CHECK(std::abs(root - p.lambda) < 0.05);
  }
}

TEST_CASE("growth asymptotics from the dominant eigen-orbit") {
  const FusionRing fib = builtin_ring("fib");
  const std::vector<Int> bf = growth_bn(fib, basis(fib, 1), 40);
  const double af = growth_asymptotic(fib, basis(fib, 1), 40);
  CHECK(std::abs(af - (kPhi / std::sqrt(5.0)) * std::pow(kPhi, 40)) <
        1e-6 * af);
  CHECK(std::abs(bf[40].convert_to<double>() / af - 1.0) < 0.02);

  const FusionRing s3 = builtin_ring("s3");
  const std::vector<Int> bs = growth_bn(s3, basis(s3, 1), 40);
  const double as = growth_asymptotic(s3, basis(s3, 1), 40);
  CHECK(std::abs(as - (2.0 / 3.0) * std::pow(2.0, 40)) < 1e-6 * as);
  CHECK(std::abs(bs[40].convert_to<double>() / as - 1.0) < 0.02);

  // Period 2: a(n) = (1/8)(6 + 2(-1)^n) 2^n reproduces b_n exactly.
  const FusionRing dih = builtin_ring("dihedral8");
  const IntVec v = parse_object(dih, "V");
  for (int n : {10, 11}) {
    const double ad = growth_asymptotic(dih, v, n);
    const double expect = (6.0 + 2.0 * (n % 2 ? -1.0 : 1.0)) / 8.0 *
                          std::pow(2.0, n);
    CHECK(std::abs(ad - expect) < 1e-6 * expect);
    CHECK(std::abs(growth_bn(dih, v, n)[n].convert_to<double>() - ad) <
          1e-6 * expect);
  }

  // Full cyclic orbit: a cyclic shift has h = n and constant b_n = 1.
  const FusionRing z3 = builtin_ring("group-zn", 3);
  CHECK(std::abs(growth_asymptotic(z3, basis(z3, 1), 7) - 1.0) < 1e-9);

  // The identity action has a repeated dominant eigenvalue.
  CHECK_THROWS_AS(growth_asymptotic(fib, basis(fib, 0), 5), UnsupportedError);
}

TEST_CASE("filtered PF dimensions are monotone and find their limits") {
  std::vector<int> levels;
  for (int k = 3; k <= 24; ++k) levels.push_back(k);
  const auto sl2 = [](int k) {
    FusionRing r = builtin_ring("verlinde-sl2", k);
    IntVec x(r.rank(), Int(0));
    x[1] = 1;
    return std::make_pair(std::move(r), std::move(x));
  };
  const std::vector<double> dims = pfdim_filtered(sl2, levels);
  for (std::size_t i = 0; i < levels.size(); ++i)
    CHECK(std::abs(dims[i] - 2.0 * std::cos(M_PI / levels[i])) < 1e-9);
  CHECK(dims.back() > 1.98);
  CHECK(dims.back() < 2.0);

  // so3 flavor: PF dimension of L2 inside the even-label ring approaches 3.
  std::vector<int> odd_levels;
  for (int k = 7; k <= 41; k += 2) odd_levels.push_back(k);
  const auto so3 = [](int k) {
    FusionRing r = builtin_ring("verlinde-so3", k);
    IntVec x(r.rank(), Int(0));
    x[1] = 1;
    return std::make_pair(std::move(r), std::move(x));
  };
  const std::vector<double> so3_dims = pfdim_filtered(so3, odd_levels);
  CHECK(so3_dims.back() > 2.9);
  CHECK(so3_dims.back() < 3.0);

  const auto trivial = [](int) {
    FusionRing r = builtin_ring("group-zn", 1);
    return std::make_pair(std::move(r), IntVec(1, Int(1)));
  };
  const std::vector<double> flat = pfdim_filtered(trivial, {0, 1, 2});
  for (double d : flat) CHECK(std::abs(d - 1.0) < 1e-12);

  // A shrinking sequence violates the filtration contract.
  const auto shrink = [&](int level) {
    if (level == 0) return sl2(9);
    return sl2(3);
  };
  CHECK_THROWS_AS(pfdim_filtered(shrink, {0, 1}), InternalError);
  CHECK_THROWS_AS(pfdim_filtered(sl2, {}), InputError);
}

TEST_CASE("level-4 and level-3 fusion tables") {
  const FusionRing v4 = builtin_ring("verlinde-sl2", 4);
  REQUIRE(v4.rank() == 3);
  CHECK(v4.n[1][1][0] == 1);  // L1 L1 = 1 + L2
  CHECK(v4.n[1][1][1] == 0);
  CHECK(v4.n[1][1][2] == 1);
  CHECK(v4.n[1][2][1] == 1);  // L1 L2 = L1
  CHECK(v4.n[1][2][0] == 0);
  CHECK(v4.n[2][2][0] == 1);  // L2 L2 = 1
  CHECK(v4.n[2][2][2] == 0);

  const FusionRing v3 = builtin_ring("verlinde-sl2", 3);
  REQUIRE(v3.rank() == 2);
  CHECK(v3.n[1][1][0] == 1);  // L1 L1 = 1
  CHECK(v3.n[1][1][1] == 0);

  const FusionRing ty3 = builtin_ring("ty-zn", 3);
  for (int g = 0; g < 3; ++g) {
    CHECK(ty3.n[g][3][3] == 1);
    CHECK(ty3.n[3][g][3] == 1);
    CHECK(ty3.n[3][3][g] == 1);
  }
  CHECK(ty3.n[3][3][3] == 0);
  CHECK(ty3.n[1][2][0] == 1);  // g1 g2 = g0
}

TEST_CASE("rings round-trip through JSON") {
  for (const char* name : {"fib", "s3", "dihedral8"}) {
    const FusionRing r = builtin_ring(name);
    const FusionRing back = ring_from_json(ring_to_json(r));
    CHECK(back.labels == r.labels);
    CHECK(back.unit == r.unit);
    CHECK(back.n == r.n);
    CHECK(back.dual == r.dual);
  }

  nlohmann::json missing;
  missing["labels"] = {"1"};
  missing["unit"] = 0;
  CHECK_THROWS_AS(ring_from_json(missing), InputError);

  nlohmann::json bad = ring_to_json(builtin_ring("fib"));
  bad["N"][1][1][0] = -1;
  CHECK_THROWS_AS(ring_from_json(bad), InputError);

  nlohmann::json wrong_unit = ring_to_json(builtin_ring("fib"));
  wrong_unit["unit"] = 1;
  CHECK_THROWS_AS(ring_from_json(wrong_unit), InputError);
}

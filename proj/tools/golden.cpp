#include "golden.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "skeinlab/fusion.hpp"
#include "skeinlab/jw.hpp"
#include "skeinlab/knot.hpp"
#include "skeinlab/qnum.hpp"
#include "skeinlab/tl.hpp"
#include "skeinlab/twovar.hpp"
#include "skeinlab/verlinde.hpp"

namespace skeinlab::golden {

namespace {

const double kPi = std::acos(-1.0);

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

void want(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

void near(double got, double expect, double tol, const std::string& label) {
  if (!(std::abs(got - expect) <= tol)) {
    std::ostringstream os;
    os << label << ": got " << got << ", expected " << expect;
    fail(os.str());
  }
}

void cnear(std::complex<double> got, std::complex<double> expect, double tol,
           const std::string& label) {
  if (!(std::abs(got - expect) <= tol)) {
    std::ostringstream os;
    os << label << ": got (" << got.real() << ", " << got.imag()
       << "), expected (" << expect.real() << ", " << expect.imag() << ")";
    fail(os.str());
  }
}

void same_poly(const LaurentPoly& got, const LaurentPoly& expect,
               const std::string& label) {
  if (got != expect)
    fail(label + ": got " + got.str() + ", expected " + expect.str());
}

std::complex<double> root_of_unity(int num, int den) {
  return {std::cos(2.0 * kPi * num / den), std::sin(2.0 * kPi * num / den)};
}

PDCode hopf_pd() { return parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]"); }

const std::vector<std::pair<std::string, PDCode>>& census() {
  static const auto c = builtin_census();
  return c;
}

}  // namespace

std::vector<Example> all_examples() {
  std::vector<Example> out;
  const auto add = [&out](std::string id, std::string what,
                          std::function<void()> run) {
    out.push_back({std::move(id), std::move(what), std::move(run)});
  };

  // --- quantum integers and binomials --------------------------------------

  add("qint-four", "[4]_q = q^3 + q + q^-1 + q^-3", [] {
    const LaurentPoly expect = LaurentPoly::q_power(3) + LaurentPoly::q_power(1) +
                               LaurentPoly::q_power(-1) + LaurentPoly::q_power(-3);
    same_poly(qint(4), expect, "[4]_q");
  });
  add("qint-zero-and-negation", "[0]_q = 0 and [-a]_q = -[a]_q", [] {
    want(qint(0).is_zero(), "[0]_q must be zero");
    same_poly(qint(-3), qint(3).scaled(Int(-1)), "[-3]_q");
  });
  add("qint-fourth-root", "[2]_q vanishes at q = exp(2 pi i / 4)", [] {
    cnear(qint(2).eval(root_of_unity(1, 4)), 0.0, 1e-12, "[2] at i");
  });
  add("qint-fifth-root", "[3]_q at q = exp(2 pi i / 5) is (1 - sqrt 5)/2", [] {
    cnear(qint(3).eval(root_of_unity(1, 5)), (1.0 - std::sqrt(5.0)) / 2.0,
          1e-12, "[3] at fifth root");
  });
  add("qint-mod-thirteen", "[2] and [6] in F_13 at q = 2", [] {
    want(qint(2).eval_modp(13, 2, 1) == 9, "[2] at q=2 mod 13 must be 9");
    want(qint(6).eval_modp(13, 2, 1) == 0, "[6] at q=2 mod 13 must be 0");
  });
  add("qbinom-central-eight", "[8 choose 4] at q = 1 evaluates to 70", [] {
    cnear(qbinom(8, 4).eval(1.0), 70.0, 1e-9, "[8 choose 4] at 1");
  });
  add("qbinom-fifth-root-vanishes", "[8 choose 4] = 0 at q = exp(2 pi i/5)", [] {
    cnear(qbinom(8, 4).eval(root_of_unity(1, 5)), 0.0, 1e-10, "[8 choose 4]");
  });
  add("qbinom-lucas-fourteen-seven", "[14 choose 7] = 2 in char 7 at q = 1", [] {
    const FieldValue v = qbinom_at(14, 7, Specialization::finite_field(7, 1));
    want(v.kind == FieldValue::Kind::Modular && v.m == 2,
         "[14 choose 7] mod 7 must be 2, got " + v.str());
  });
  add("qbinom-eleven-three-third-root", "[11 choose 3] = 3 at q = zeta_3", [] {
    const FieldValue v =
        qbinom_at(11, 3, Specialization::root_of_unity(1, 3));
    cnear(v.c, 3.0, 1e-10, "[11 choose 3] at zeta_3");
  });
  add("qbinom-mod-thirteen", "[8 choose 2] = 1 in F_13 at q = 4", [] {
    const FieldValue v = qbinom_at(8, 2, Specialization::finite_field(13, 4));
    want(v.m == 1, "[8 choose 2] mod 13 at q=4 must be 1, got " + v.str());
  });
  add("q-characteristic-values",
      "q-characteristic: (F_13, 2) -> 6, (F_p, 1) -> p, zeta_5 -> 5", [] {
        want(q_characteristic(Specialization::finite_field(13, 2)) == 6,
             "char(F_13, q=2) must be 6");
        for (int p : {2, 3, 5, 7})
          want(q_characteristic(Specialization::finite_field(p, 1)) == p,
               "char(F_p, q=1) must be p");
        want(q_characteristic(Specialization::root_of_unity(1, 5)) == 5,
             "char at zeta_5 must be 5");
      });
  add("qbinom-nonzero-digit-rule",
      "all [8 choose b] nonzero in char 3 but not char 5", [] {
        want(all_qbinoms_nonzero(8, Specialization::finite_field(3, 1)),
             "8 = [2,2] base 3: all binomials must be nonzero");
        want(!all_qbinoms_nonzero(8, Specialization::finite_field(5, 1)),
             "[8 choose 4] = 0 in char 5: rule must say false");
      });
  add("catalan-small", "C_0 = 1 and C_3 = 5", [] {
    want(catalan(0) == Int(1), "C_0");
    want(catalan(3) == Int(5), "C_3");
  });
  add("involution-counts", "s_0 = 1, s_6 = 76, s_10 = 9496", [] {
    want(involution_count(0) == Int(1), "s_0");
    want(involution_count(6) == Int(76), "s_6");
    want(involution_count(10) == Int(9496), "s_10");
  });

  // --- diagram algebra ------------------------------------------------------

  add("tl-generator-square", "u_1 u_1 = -(q + q^-1) u_1 in End(2)", [] {
    const TLMorphism u = TLMorphism::generator(2, 1);
    want(tl_compose(u, u) == u.scaled(RationalFn(tl_delta())),
         "u^2 must equal delta * u");
  });
  add("tl-sandwich", "u_1 u_2 u_1 = u_1 in End(3)", [] {
    const TLMorphism u1 = TLMorphism::generator(3, 1);
    const TLMorphism u2 = TLMorphism::generator(3, 2);
    want(tl_compose(u1, tl_compose(u2, u1)) == u1, "u1 u2 u1 must equal u1");
  });
  add("tl-zigzag", "(cap (x) id) after (id (x) cup) is the identity strand", [] {
    const TLDiagram bent = tl_tensor_diagrams(TLDiagram::identity(1),
                                              TLDiagram::cup(2, 1));
    const DiagramComposition z =
        tl_compose_diagrams(TLDiagram::cap(3, 1), bent);
    want(z.diagram == TLDiagram::identity(1) && z.circles == 0,
         "zigzag must straighten with no circle");
  });
  add("tl-basis-counts", "|TL(2,2)| = 2, |TL(1,2)| = 0, |TL(3,3)| = 5", [] {
    want(tl_basis(2, 2).size() == 2, "TL(2,2)");
    want(tl_basis(1, 2).empty(), "TL(1,2) must be empty");
    want(tl_basis(3, 3).size() == 5, "TL(3,3)");
  });

  add("jw-two-coefficients", "e_2 = id + (1/[2]) u_1", [] {
    const auto e2 = jw_build(2);
    want(e2->body.terms().size() == 2, "e_2 must have two terms");
    want(e2->body.coeff(TLDiagram::identity(2)) == RationalFn::one(),
         "identity coefficient must be 1");
    want(e2->body.coeff(TLDiagram::generator(2, 1)) ==
             RationalFn(LaurentPoly::one(), qint(2)),
         "u_1 coefficient must be 1/[2]");
  });
  add("jw-three-coefficients",
      "e_3 has 5 terms with coefficients 1, [2]/[3] (x2), 1/[3] (x2)", [] {
        const auto e3 = jw_build(3);
        want(e3->body.terms().size() == 5, "e_3 must have five terms");
        const RationalFn c23(qint(2), qint(3));
        const RationalFn c13(LaurentPoly::one(), qint(3));
        int n23 = 0, n13 = 0, nid = 0;
        for (const auto& [d, c] : e3->body.terms()) {
          if (c == RationalFn::one()) ++nid;
          if (c == c23) ++n23;
          if (c == c13) ++n13;
        }
        want(nid == 1 && n23 == 2 && n13 == 2,
             "coefficient multiset must be {1, [2]/[3] x2, 1/[3] x2}");
      });
  add("jw-partial-trace", "closing e_2 gives (-[3]/[2]) e_1", [] {
    const TLMorphism got = jw_partial_trace(*jw_build(2));
    const TLMorphism expect = TLMorphism::identity(1).scaled(
        RationalFn(qint(3).scaled(Int(-1)), qint(2)));
    want(got == expect, "partial trace of e_2 must be (-[3]/[2]) id_1");
  });
  add("jw-traces", "tr e_2 = [3]_q, tr e_3 = -[4]_q", [] {
    same_poly(jw_trace(2), qint(3), "tr e_2");
    same_poly(jw_trace(3), qint(4).scaled(Int(-1)), "tr e_3");
  });
  add("jw-idempotency", "e_i e_i = e_i, cap kill, absorption (small i)", [] {
    for (int i = 2; i <= 4; ++i) {
      want(jw_idempotency_check(i), "idempotency at i");
      want(jw_cap_kill_check(i), "cap kill at i");
    }
    want(jw_absorb_check(3, 2), "absorption (3,2)");
  });
  add("jw-existence-digit-rule",
      "e_8 survives char 3 at q = 1 but not char 5", [] {
        want(jw_exists_at(8, Specialization::finite_field(3, 1)),
             "e_8 must exist in char 3");
        want(!jw_exists_at(8, Specialization::finite_field(5, 1)),
             "e_8 must die in char 5");
      });

  // --- knots and links ------------------------------------------------------

  add("pd-parse-trefoil", "trefoil PD parses: 3 crossings, 1 component", [] {
    const PDCode pd = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
    want(pd.crossings.size() == 3, "crossing count");
    want(orient(pd).components() == 1, "component count");
  });
  add("pd-parse-figure-eight", "figure-eight PD parses: 4 crossings", [] {
    const PDCode pd = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
    want(pd.crossings.size() == 4, "crossing count");
    want(orient(pd).components() == 1, "component count");
  });
  add("bracket-hopf", "Kauffman bracket of the Hopf link is [4]_q", [] {
    same_poly(kauffman_bracket(braid_closure_pd({2, {1, 1}})), qint(4),
              "bracket(closure sigma_1^2)");
    same_poly(kauffman_bracket(hopf_pd()), qint(4), "bracket(Hopf PD)");
  });
  add("bracket-trefoil", "bracket of sigma_1^3 closure", [] {
    const LaurentPoly expect =
        LaurentPoly::q_half_power(7) + LaurentPoly::q_half_power(3) +
        LaurentPoly::q_half_power(-1) -
        LaurentPoly::q_half_power(-9);
    same_poly(kauffman_bracket(braid_closure_pd({2, {1, 1, 1}})), expect,
              "bracket(closure sigma_1^3)");
  });
  add("colored-hopf-one-one", "Hopf with colors (1,1) gives [4]_q", [] {
    same_poly(colored_jones(hopf_pd(), {1, 1}), qint(4), "colors (1,1)");
  });
  add("colored-hopf-two-one", "Hopf with colors (2,1) gives -[6]_q", [] {
    same_poly(colored_jones(hopf_pd(), {2, 1}), qint(6).scaled(Int(-1)),
              "colors (2,1)");
  });
  add("jones-detects-chirality", "trefoil and its mirror differ", [] {
    const PDCode t = census()[0].second;
    want(jones(t) != jones(mirror_pd(t)),
         "jones must separate the trefoil from its mirror");
  });
  add("kauffman-hopf-skein-form",
      "raw Kauffman of Hopf is c^2 + z c (a - a^-1)", [] {
        const TwoVarLaurentPoly c = TwoVarLaurentPoly::circle();
        const TwoVarLaurentPoly za_term =
            TwoVarLaurentPoly::monomial(1, 1, 1) -
            TwoVarLaurentPoly::monomial(1, -1, 1);
        const TwoVarLaurentPoly expect = c * c + c * za_term;
        const TwoVarLaurentPoly got = kauffman_polynomial(hopf_pd(), false);
        if (got != expect)
          fail("raw Hopf: got " + got.str() + ", expected " + expect.str());
      });
  add("kauffman-hopf-product-value",
      "raw Kauffman of Hopf at a = q^2 is (q + 1 + q^-1)(q^3 + 1 + q^-3)", [] {
        const TwoVarLaurentPoly got = kauffman_polynomial(hopf_pd(), false);
        for (double q : {0.7, 1.3, 1.7, 2.2, 3.0}) {
          const double expect =
              (q + 1.0 + 1.0 / q) * (q * q * q + 1.0 + 1.0 / (q * q * q));
          cnear(got.eval(q * q, q), expect, 1e-9, "raw Hopf at a = q^2");
        }
      });
  add("alexander-trefoil", "det(S - q S^T) for the trefoil matrix", [] {
    const SeifertMatrix s{{{1, 0}, {-1, 1}}};
    const LaurentPoly expect =
        LaurentPoly::one() - LaurentPoly::q_power(1) + LaurentPoly::q_power(2);
    same_poly(alexander_from_seifert(s), expect, "1 - q + q^2");
  });

  // --- fusion rings ---------------------------------------------------------

  add("fusion-action-s3", "action of L_s on the S3 ring", [] {
    const FusionRing r = builtin_ring("s3");
    const IntMat m = action_matrix(r, parse_object(r, "Ls"));
    const IntMat expect = {{0, 1, 0}, {1, 1, 1}, {0, 1, 0}};
    want(m == expect, "Gamma_s must be [[0,1,0],[1,1,1],[0,1,0]]");
  });
  add("fusion-action-fib", "action of L on the Fibonacci ring", [] {
    const FusionRing r = builtin_ring("fib");
    const IntMat m = action_matrix(r, parse_object(r, "L"));
    const IntMat expect = {{0, 1}, {1, 1}};
    want(m == expect, "Gamma_L must be [[0,1],[1,1]]");
  });
  add("fusion-pf-fib", "PF pair of the Fibonacci action: phi, (1, phi)", [] {
    const FusionRing r = builtin_ring("fib");
    const PFData pf = pf_data(to_dense(action_matrix(r, parse_object(r, "L"))));
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    near(pf.eigenvalue, phi, 1e-10, "lambda");
    near(pf.right_eigenvector[1] / pf.right_eigenvector[0], phi, 1e-9,
         "eigenvector ratio");
  });
  add("fusion-pf-s3", "PF pair of Gamma_s: 2, (1,2,1)", [] {
    const FusionRing r = builtin_ring("s3");
    const PFData pf = pf_data(to_dense(action_matrix(r, parse_object(r, "Ls"))));
    near(pf.eigenvalue, 2.0, 1e-10, "lambda");
    near(pf.right_eigenvector[1] / pf.right_eigenvector[0], 2.0, 1e-9, "v1/v0");
    near(pf.right_eigenvector[2] / pf.right_eigenvector[0], 1.0, 1e-9, "v2/v0");
  });
  add("fusion-pf-ty3", "PF dimension of X in TY(Z/3) is sqrt 3", [] {
    const FusionRing r = builtin_ring("ty-zn", 3);
    near(pfdim(r, parse_object(r, "X")), std::sqrt(3.0), 1e-10, "PFdim(X)");
  });
  add("fusion-pfdim-rings",
      "ring PF dims: Fib (5+sqrt5)/2, Z/5 -> 5, TY(Z/3) -> 6", [] {
        near(pfdim_ring(builtin_ring("fib")), (5.0 + std::sqrt(5.0)) / 2.0,
             1e-9, "PFdim(Fib)");
        near(pfdim_ring(builtin_ring("group-zn", 5)), 5.0, 1e-9, "PFdim(Z/5)");
        near(pfdim_ring(builtin_ring("ty-zn", 3)), 6.0, 1e-9, "PFdim(TY_3)");
      });
  add("fusion-regular-objects", "regular objects of S3 and Fib", [] {
    const std::vector<double> s3reg = regular_object(builtin_ring("s3"));
    near(s3reg[0], 1.0, 1e-9, "S3 unit coordinate");
    near(s3reg[1], 2.0, 1e-8, "S3 L_s coordinate");
    near(s3reg[2], 1.0, 1e-8, "S3 L_1' coordinate");
    const std::vector<double> fibreg = regular_object(builtin_ring("fib"));
    near(fibreg[1], (1.0 + std::sqrt(5.0)) / 2.0, 1e-8, "Fib L coordinate");
  });
  add("fusion-growth-fib", "b_n of (Fib, L) is the Fibonacci sequence", [] {
    const FusionRing r = builtin_ring("fib");
    const auto bn = growth_bn(r, parse_object(r, "L"), 10);
    const std::vector<Int> expect = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    want(bn == expect, "b_0..b_10 must be 1,1,2,3,5,8,13,21,34,55,89");
  });
  add("fusion-growth-jacobsthal",
      "b_n of (S3, L_s) is J(n) + 2 J(n-1)", [] {
        const FusionRing r = builtin_ring("s3");
        const auto bn = growth_bn(r, parse_object(r, "Ls"), 12);
        std::vector<Int> jac = {0, 1};  // Jacobsthal J(n+1) = J(n) + 2J(n-1)
        for (int n = 2; n <= 13; ++n)
          jac.push_back(jac[n - 1] + Int(2) * jac[n - 2]);
        want(bn[0] == Int(1), "b_0 must be 1");
        for (int n = 1; n <= 12; ++n)
          want(bn[n] == jac[n] + Int(2) * jac[n - 1],
               "b_n must be J(n) + 2 J(n-1)");
      });
  add("fusion-growth-dihedral", "b_n of (dihedral-8, V) is 4^floor(n/2)", [] {
    const FusionRing r = builtin_ring("dihedral8");
    const auto bn = growth_bn(r, parse_object(r, "V"), 12);
    for (int n = 0; n <= 12; ++n) {
      Int expect = 1;
      for (int i = 0; i < n / 2; ++i) expect *= 4;
      want(bn[n] == expect, "b_n must be 4^floor(n/2)");
    }
  });
  add("fusion-growth-middle-binomial",
      "untruncated sl2 growth gives middle binomials", [] {
        const FusionRing r = builtin_ring("verlinde-sl2", 23);
        const auto bn = growth_bn(r, parse_object(r, "L1"), 20);
        for (int n = 0; n <= 20; ++n)
          want(bn[n] == binomial(n, n / 2),
               "b_n must be the middle binomial C(n, floor(n/2))");
      });
  add("fusion-asymptotic-fib", "a(n) for (Fib, L) is (phi/sqrt5) phi^n", [] {
    const FusionRing r = builtin_ring("fib");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double a40 = growth_asymptotic(r, parse_object(r, "L"), 40);
    const double expect = phi / std::sqrt(5.0) * std::pow(phi, 40);
    near(a40 / expect, 1.0, 1e-6, "a(40) against the closed form");
    const auto bn = growth_bn(r, parse_object(r, "L"), 40);
    near(bn[40].convert_to<double>() / a40, 1.0, 0.02, "b_40 / a(40)");
  });
  add("fusion-asymptotic-s3", "a(n) for (S3, L_s) is (2/3) 2^n", [] {
    const FusionRing r = builtin_ring("s3");
    const double a40 = growth_asymptotic(r, parse_object(r, "Ls"), 40);
    near(a40 / ((2.0 / 3.0) * std::pow(2.0, 40)), 1.0, 1e-6, "a(40)");
  });
  add("fusion-asymptotic-dihedral",
      "a(n) for (dihedral-8, V) alternates (1/8)(6 +- 2) 2^n", [] {
        const FusionRing r = builtin_ring("dihedral8");
        const IntVec v = parse_object(r, "V");
        near(growth_asymptotic(r, v, 10), (6.0 + 2.0) / 8.0 * 1024.0, 1e-6,
             "a(10)");
        near(growth_asymptotic(r, v, 11), (6.0 - 2.0) / 8.0 * 2048.0, 1e-6,
             "a(11)");
      });
  add("fusion-filtered-sl2",
      "level-k sl2 dims 2 cos(pi/k) increase to 2", [] {
        std::vector<int> levels;
        for (int k = 3; k <= 24; ++k) levels.push_back(k);
        const auto dims = pfdim_filtered(
            [](int k) {
              const FusionRing r = builtin_ring("verlinde-sl2", k);
              return std::make_pair(r, parse_object(r, "L1"));
            },
            levels);
        for (std::size_t i = 0; i < levels.size(); ++i)
          near(dims[i], 2.0 * std::cos(kPi / levels[i]), 1e-9,
               "PFdim at level k");
        want(dims.back() > 1.98 && dims.back() < 2.0,
             "limit must approach 2 from below");
      });
  add("fusion-table-sl2-level4",
      "level-4 table: L1 L1 = 1 + L2, L1 L2 = L1, L2 L2 = 1", [] {
        const FusionRing r = builtin_ring("verlinde-sl2", 4);
        want(r.n[1][1][0] == 1 && r.n[1][1][2] == 1 && r.n[1][1][1] == 0,
             "L1 L1");
        want(r.n[1][2][1] == 1 && r.n[1][2][0] == 0 && r.n[1][2][2] == 0,
             "L1 L2");
        want(r.n[2][2][0] == 1 && r.n[2][2][1] == 0 && r.n[2][2][2] == 0,
             "L2 L2");
      });
  add("fusion-table-sl2-level3", "level-3 table: L1 L1 = 1", [] {
    const FusionRing r = builtin_ring("verlinde-sl2", 3);
    want(r.n[1][1][0] == 1 && r.n[1][1][1] == 0, "L1 L1 must be the unit");
  });
  add("fusion-table-ty3", "TY(Z/3): g X = X g = X and X^2 = sum of g", [] {
    const FusionRing r = builtin_ring("ty-zn", 3);
    const int x = 3;  // labels g0, g1, g2, X
    for (int g = 0; g < 3; ++g) {
      want(r.n[g][x][x] == 1 && r.n[x][g][x] == 1, "gX = Xg = X");
      want(r.n[x][x][g] == 1, "X^2 must contain every g once");
    }
    want(r.n[x][x][x] == 0, "X^2 has no X part");
  });

  // --- modular data ---------------------------------------------------------

  add("verlinde-level4-smatrix", "k = 4 S matrix", [] {
    const ModularData d = modular_data_sl2(4);
    const double r2 = std::sqrt(2.0);
    const double expect[3][3] = {{1, -r2, 1}, {-r2, 0, r2}, {1, r2, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        cnear(d.s(i, j), expect[i][j], 1e-9, "S entry");
  });
  add("verlinde-level4-twists",
      "k = 4 twists (1, q^-3/2, -1) and Gauss sums", [] {
        const ModularData d = modular_data_sl2(4);
        cnear(d.twists[0], 1.0, 1e-12, "twist of the unit");
        cnear(d.twists[1], std::polar(1.0, -3.0 * kPi / 8.0), 1e-12,
              "twist of L1");
        cnear(d.twists[2], -1.0, 1e-12, "twist of L2");
        cnear(d.delta_r, 2.0 * std::polar(1.0, -3.0 * kPi / 8.0), 1e-9,
              "delta_r");
        cnear(d.delta_l, 2.0 * std::polar(1.0, 3.0 * kPi / 8.0), 1e-9,
              "delta_l");
        near(d.global_dim, 4.0, 1e-9, "global dimension");
      });
  add("verlinde-level2-trivial", "k = 2 data is 1x1 with S = (1)", [] {
    const ModularData d = modular_data_sl2(2);
    want(d.s.rows() == 1, "rank must be 1");
    cnear(d.s(0, 0), 1.0, 1e-12, "S");
  });
  add("verlinde-level4-identities", "k = 4 identity suite, S^2 = 4 id", [] {
    const ModularData d = modular_data_sl2(4);
    want(verify_modular_identities(d, 1e-9).all_pass, "identity suite");
    const Eigen::MatrixXcd dev =
        d.s * d.s - 4.0 * Eigen::MatrixXcd::Identity(3, 3);
    want(dev.cwiseAbs().maxCoeff() < 1e-9, "S^2 must equal 4 id");
  });
  add("verlinde-level5-fib-block",
      "even-color block of k = 5 is [[1, phi], [phi, -1]]", [] {
        const ModularData d = modular_data_sl2(5);
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        cnear(d.s(0, 0), 1.0, 1e-9, "block (0,0)");
        cnear(d.s(0, 2), phi, 1e-9, "block (0,2)");
        cnear(d.s(2, 0), phi, 1e-9, "block (2,0)");
        cnear(d.s(2, 2), -1.0, 1e-9, "block (2,2)");
      });
  add("verlinde-level12-identities", "k = 12 identity suite at 1e-8", [] {
    want(verify_modular_identities(modular_data_sl2(12), 1e-8).all_pass,
         "identity suite at k = 12");
  });
  add("verlinde-level4-spot-sums",
      "k = 4 Verlinde sums: dim N_11^1 = 0, dim N_11^2 = 4", [] {
        const ModularData d = modular_data_sl2(4);
        std::complex<double> s0 = 0.0, s2 = 0.0;
        for (int i = 0; i < 3; ++i) {
          s0 += d.s(i, 1) * d.s(i, 1) * d.s(i, 1) / d.s(i, 0);
          s2 += d.s(i, 1) * d.s(i, 1) * d.s(i, 2) / d.s(i, 0);
        }
        cnear(s0, 0.0, 1e-9, "triple (1,1,1)");
        cnear(s2, 4.0, 1e-9, "triple (1,1,2)");
      });
  add("verlinde-level7-table", "k = 7 table reproduced by the formula", [] {
    const VerlindeReport rep = verlinde_formula_check(
        modular_data_sl2(7), builtin_ring("verlinde-sl2", 7));
    want(rep.all_match, "every triple must round to the structure constant");
  });
  add("verlinde-hopf-entries",
      "symbolic S entries equal the colored Hopf values", [] {
        same_poly(s_entry_symbolic(1, 1), qint(4), "(1,1)");
        same_poly(s_entry_symbolic(2, 1), qint(6).scaled(Int(-1)), "(2,1)");
        const PDCode hopf = hopf_pd();
        same_poly(colored_jones(hopf, {1, 1}), s_entry_symbolic(1, 1),
                  "diagram (1,1)");
        same_poly(colored_jones(hopf, {2, 1}), s_entry_symbolic(2, 1),
                  "diagram (2,1)");
      });

  return out;
}

}  // namespace skeinlab::golden

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "skeinlab/errors.hpp"
#include "skeinlab/knot.hpp"
#include "skeinlab/qnum.hpp"

using namespace skeinlab;

namespace {

const char* kTrefoilPd = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]";
const char* kFigureEightPd = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

LaurentPoly qpow_sum(const std::vector<int>& exps) {
  LaurentPoly p;
  for (int e : exps) p += LaurentPoly::q_power(e);
  return p;
}

LaurentPoly half_term(int coeff, int half) { return LaurentPoly::monomial(coeff, half); }

LaurentPoly delta() { return -(LaurentPoly::q_power(1) + LaurentPoly::q_power(-1)); }

PDCode unknot_pd() {
  PDCode pd;
  pd.free_loops = 1;
  return pd;
}

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_letters) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  const int strands = strands_dist(rng);
  std::uniform_int_distribution<int> len_dist(1, max_letters);
  std::uniform_int_distribution<int> gen_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  BraidWord b{strands, {}};
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    const int g = gen_dist(rng);
    b.letters.push_back(sign_dist(rng) ? g : -g);
  }
  return b;
}

}  // namespace

TEST_CASE("parse_pd reads bracketed and bare forms") {
  const PDCode a = parse_pd(kTrefoilPd);
  CHECK(a.crossings.size() == 3);
  CHECK(a.crossings[0] == std::array<int, 4>{1, 5, 2, 4});

  // Whitespace and per-line quadruples are equivalent.
  const PDCode b = parse_pd("1 5 2 4\n3 1 4 6\n5 3 6 2\n");
  CHECK(a.crossings == b.crossings);
  const PDCode c = parse_pd("  pd[ x[1,5,2,4], X[3,1,4,6],\n X[5,3,6,2] ] ");
  CHECK(a.crossings == c.crossings);

  // The one-crossing closed kink is a legitimate code.
  const PDCode kink = parse_pd("PD[X[1,1,2,2]]");
  CHECK(kink.crossings.size() == 1);

  CHECK_THROWS_AS(parse_pd(""), InputError);
  CHECK_THROWS_AS(parse_pd("   \n "), InputError);
  CHECK_THROWS_AS(parse_pd("PD[]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[Y[1,2,2,1]]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,2,3]]"), InputError);   // 3 missing a mate
  CHECK_THROWS_AS(parse_pd("PD[X[1,1,1,2]]"), InputError);   // 1 used thrice
  CHECK_THROWS_AS(parse_pd("PD[X[0,1,0,1]]"), InputError);   // labels start at 1
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,1,2],X[3,4,3,4],X[5,6,5,6],X[9,9,7,7]]"),
                  InputError);  // label 9 out of range
}

TEST_CASE("pd_to_string round-trips through parse_pd") {
  const PDCode pd = parse_pd(kFigureEightPd);
  CHECK(pd_to_string(pd) == kFigureEightPd);
  CHECK(parse_pd(pd_to_string(pd)).crossings == pd.crossings);
}

TEST_CASE("validate_braid rejects out-of-range letters") {
  CHECK_THROWS_AS(validate_braid(BraidWord{0, {}}), InputError);
  CHECK_THROWS_AS(validate_braid(BraidWord{2, {0}}), InputError);
  CHECK_THROWS_AS(validate_braid(BraidWord{2, {2}}), InputError);
  CHECK_THROWS_AS(validate_braid(BraidWord{3, {1, -2, 3}}), InputError);
  CHECK_NOTHROW(validate_braid(BraidWord{3, {1, -2, 1}}));
  CHECK_NOTHROW(validate_braid(BraidWord{1, {}}));
}

TEST_CASE("braid closures produce valid codes with expected loop counts") {
  const PDCode id3 = braid_closure_pd(BraidWord{3, {}});
  CHECK(id3.crossings.empty());
  CHECK(id3.free_loops == 3);

  const PDCode hopf = braid_closure_pd(BraidWord{2, {1, 1}});
  CHECK(hopf.crossings.size() == 2);
  CHECK(hopf.free_loops == 0);

  // A letter on strands 1,2 of a 3-strand braid leaves strand 3 free.
  const PDCode kinked = braid_closure_pd(BraidWord{3, {1}});
  CHECK(kinked.crossings.size() == 1);
  CHECK(kinked.free_loops == 1);
}

TEST_CASE("kauffman_bracket reproduces the pinned values") {
  CHECK(kauffman_bracket(PDCode{}) == LaurentPoly::one());
  CHECK(kauffman_bracket(unknot_pd()) == delta());

  const LaurentPoly hopf = kauffman_bracket(braid_closure_pd(BraidWord{2, {1, 1}}));
  CHECK(hopf == qpow_sum({3, 1, -1, -3}));

  // Both presentations of the trefoil give q^{7/2}+q^{3/2}+q^{-1/2}-q^{-9/2}.
  const LaurentPoly target =
      half_term(1, 7) + half_term(1, 3) + half_term(1, -1) + half_term(-1, -9);
  CHECK(kauffman_bracket(braid_closure_pd(BraidWord{2, {1, 1, 1}})) == target);
  CHECK(kauffman_bracket(parse_pd(kTrefoilPd)) == target);

  // Kinks: a positive curl contributes -q^{3/2}, a negative one -q^{-3/2}.
  CHECK(kauffman_bracket(parse_pd("PD[X[1,1,2,2]]")) == half_term(-1, 3) * delta());
  CHECK(kauffman_bracket(parse_pd("PD[X[1,2,2,1]]")) == half_term(-1, -3) * delta());
  CHECK(kauffman_bracket(braid_closure_pd(BraidWord{2, {1}})) ==
        half_term(-1, 3) * delta());
  CHECK(kauffman_bracket(braid_closure_pd(BraidWord{2, {-1}})) ==
        half_term(-1, -3) * delta());
}

TEST_CASE("kauffman_bracket honors the crossing cap") {
  BraidWord b{2, std::vector<int>(17, 1)};
  CHECK_THROWS_AS(kauffman_bracket(braid_closure_pd(b)), UnsupportedError);
}

TEST_CASE("orient recovers signs, components, and self-writhes") {
  const OrientedDiagram tref = orient(braid_closure_pd(BraidWord{2, {1, 1, 1}}));
  CHECK(tref.components() == 1);
  CHECK(tref.crossing_signs == std::vector<int>{1, 1, 1});
  CHECK(tref.self_writhes == std::vector<int>{3});

  const OrientedDiagram mtref = orient(mirror_pd(braid_closure_pd(BraidWord{2, {1, 1, 1}})));
  CHECK(mtref.self_writhes == std::vector<int>{-3});

  const OrientedDiagram hopf = orient(braid_closure_pd(BraidWord{2, {1, 1}}));
  CHECK(hopf.components() == 2);
  CHECK(hopf.self_writhes == std::vector<int>{0, 0});
  CHECK(hopf.crossing_signs[0] == hopf.crossing_signs[1]);

  const OrientedDiagram fig8 = orient(parse_pd(kFigureEightPd));
  CHECK(fig8.components() == 1);
  CHECK(fig8.self_writhes == std::vector<int>{0});

  const OrientedDiagram split = orient(braid_closure_pd(BraidWord{3, {1}}));
  CHECK(split.components() == 2);  // kinked circle plus a free loop
  CHECK(split.self_writhes == std::vector<int>{1, 0});
}

TEST_CASE("jones evaluates the pinned examples") {
  CHECK(jones(unknot_pd()) == delta());

  const LaurentPoly tref = jones(parse_pd(kTrefoilPd));
  CHECK(tref == half_term(-1, -2) + half_term(-1, -6) + half_term(-1, -10) +
                    half_term(1, -18));
  CHECK(jones(braid_closure_pd(BraidWord{2, {1, 1, 1}})) == tref);

  CHECK(jones(braid_closure_pd(BraidWord{2, {1, 1}})) == qpow_sum({3, 1, -1, -3}));

  // The figure-eight is amphichiral: its value is palindromic and the
  // mirrored diagram evaluates identically.
  const LaurentPoly fig8 = jones(parse_pd(kFigureEightPd));
  CHECK(fig8 == fig8.mirror());
  CHECK(jones(mirror_pd(parse_pd(kFigureEightPd))) == fig8);

  // The trefoil is chiral.
  const LaurentPoly mtref = jones(mirror_pd(parse_pd(kTrefoilPd)));
  CHECK(mtref == tref.mirror());
  CHECK(mtref != tref);

  // Reidemeister one: kinked unknot diagrams still give -[2].
  CHECK(jones(braid_closure_pd(BraidWord{2, {1}})) == delta());
  CHECK(jones(braid_closure_pd(BraidWord{2, {-1}})) == delta());
  CHECK(jones(parse_pd("PD[X[1,1,2,2]]")) == delta());
}

TEST_CASE("jones is multiplicative under connected sum") {
  // Granny knot as the closure of sigma_1^3 sigma_2^3.
  const LaurentPoly granny = jones(braid_closure_pd(BraidWord{3, {1, 1, 1, 2, 2, 2}}));
  const LaurentPoly tref = jones(parse_pd(kTrefoilPd));
  CHECK(tref * tref == granny * delta());
}

TEST_CASE("colored_jones matches the Hopf link grid") {
  const PDCode hopf = braid_closure_pd(BraidWord{2, {1, 1}});
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      const LaurentPoly got = colored_jones(hopf, {k, l});
      const int sign = (k + l) % 2 ? -1 : 1;
      CHECK(got == qint((k + 1) * (l + 1)).scaled(sign));
    }
  // One asymmetric spot value: colors (2,1) give -[6].
  CHECK(colored_jones(hopf, {2, 1}) == -qint(6));
}

TEST_CASE("colored_jones handles color zero and free loops") {
  const PDCode hopf = braid_closure_pd(BraidWord{2, {1, 1}});
  // Deleting one component leaves a 0-framed unknot colored k.
  for (int k = 0; k <= 3; ++k) {
    const int sign = k % 2 ? -1 : 1;
    CHECK(colored_jones(hopf, {0, k}) == qint(k + 1).scaled(sign));
  }
  CHECK(colored_jones(unknot_pd(), {2}) == qint(3));
  CHECK(colored_jones(unknot_pd(), {5}) == -qint(6));

  // A kinked unknot colored c picks up the framing correction exactly.
  const PDCode kink = braid_closure_pd(BraidWord{2, {1}});
  for (int c = 0; c <= 3; ++c) {
    const int sign = c % 2 ? -1 : 1;
    CHECK(colored_jones(kink, {c}) == qint(c + 1).scaled(sign));
  }

  CHECK_THROWS_AS(colored_jones(hopf, {1}), InputError);
  CHECK_THROWS_AS(colored_jones(hopf, {1, -1}), InputError);
}

TEST_CASE("jones agrees with the writhe-corrected bracket") {
  // Independent route: the cabled evaluation must reduce to
  // (-q^{3/2})^{-w} <L> with w the sum of self-writhes.
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 8; ++trial) {
    const PDCode pd = braid_closure_pd(random_braid(rng, 3, 6));
    const OrientedDiagram od = orient(pd);
    int w = 0;
    for (int wi : od.self_writhes) w += wi;
    const LaurentPoly expected =
        kauffman_bracket(pd).shifted(-3 * w).scaled(w % 2 ? -1 : 1);
    CHECK(jones(pd) == expected);
  }
}

TEST_CASE("jones is invariant under Markov moves") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> move_dist(0, 2);
  for (int trial = 0; trial < 10; ++trial) {
    BraidWord b = random_braid(rng, 3, 5);
    const LaurentPoly reference = jones(braid_closure_pd(b));
    for (int step = 0; step < 3; ++step) {
      switch (move_dist(rng)) {
        case 0: {
          std::uniform_int_distribution<int> g_dist(1, b.strands - 1);
          const int g = g_dist(rng) * (move_dist(rng) == 0 ? 1 : -1);
          b = markov_move(b, MarkovKind::Conjugate, g);
          break;
        }
        case 1:
          b = markov_move(b, MarkovKind::StabilizePositive);
          break;
        default:
          b = markov_move(b, MarkovKind::StabilizeNegative);
          break;
      }
      CHECK(jones(braid_closure_pd(b)) == reference);
    }
  }
}

TEST_CASE("markov_move mechanics") {
  const BraidWord tref{2, {1, 1, 1}};
  // Conjugating by the word's own leading letter reduces freely.
  const BraidWord conj = markov_move(tref, MarkovKind::Conjugate, 1);
  CHECK(conj.letters == std::vector<int>{1, 1, 1});

  const BraidWord stab = markov_move(tref, MarkovKind::StabilizePositive);
  CHECK(stab.strands == 3);
  CHECK(stab.letters == std::vector<int>{1, 1, 1, 2});
  const BraidWord back = markov_move(stab, MarkovKind::Destabilize);
  CHECK(back.strands == 2);
  CHECK(back.letters == tref.letters);

  CHECK_THROWS_AS(markov_move(tref, MarkovKind::Destabilize), DomainError);
  CHECK_THROWS_AS(markov_move(BraidWord{3, {2, 1, 2}}, MarkovKind::Destabilize),
                  DomainError);  // sigma_2 occurs twice
  CHECK_THROWS_AS(markov_move(BraidWord{3, {2, 1}}, MarkovKind::Destabilize),
                  DomainError);  // last letter is not sigma_2
  CHECK_THROWS_AS(markov_move(tref, MarkovKind::Conjugate, 0), DomainError);
  CHECK_THROWS_AS(markov_move(tref, MarkovKind::Conjugate, 2), DomainError);
}

TEST_CASE("kauffman_polynomial ground cases") {
  const TwoVarLaurentPoly c = TwoVarLaurentPoly::circle();
  CHECK(kauffman_polynomial(unknot_pd()) == TwoVarLaurentPoly::one());
  CHECK(kauffman_polynomial(unknot_pd(), false) == c);
  PDCode two_loops;
  two_loops.free_loops = 2;
  CHECK(kauffman_polynomial(two_loops) == c);

  // Curls carry the framing factors a^{-1} and a.
  CHECK(kauffman_polynomial(braid_closure_pd(BraidWord{2, {1}})) ==
        TwoVarLaurentPoly::monomial(1, -1, 0));
  CHECK(kauffman_polynomial(braid_closure_pd(BraidWord{2, {-1}})) ==
        TwoVarLaurentPoly::monomial(1, 1, 0));
  CHECK(kauffman_polynomial(parse_pd("PD[X[1,1,2,2]]")) ==
        TwoVarLaurentPoly::monomial(1, -1, 0));

  CHECK(kauffman_polynomial(PDCode{}, false) == TwoVarLaurentPoly::one());
  CHECK_THROWS_AS(kauffman_polynomial(PDCode{}), DomainError);

  BraidWord big{2, std::vector<int>(11, 1)};
  CHECK_THROWS_AS(kauffman_polynomial(braid_closure_pd(big)), UnsupportedError);
}

TEST_CASE("kauffman_polynomial of the positive Hopf link") {
  const PDCode hopf = braid_closure_pd(BraidWord{2, {1, 1}});
  const TwoVarLaurentPoly c = TwoVarLaurentPoly::circle();
  const TwoVarLaurentPoly z = TwoVarLaurentPoly::monomial(1, 0, 1);
  const TwoVarLaurentPoly a_minus_ainv =
      TwoVarLaurentPoly::monomial(1, 1, 0) - TwoVarLaurentPoly::monomial(1, -1, 0);

  const TwoVarLaurentPoly unnorm = kauffman_polynomial(hopf, false);
  CHECK(unnorm == c * c + z * a_minus_ainv * c);
  const TwoVarLaurentPoly norm = kauffman_polynomial(hopf);
  CHECK(norm == c + z * a_minus_ainv);
  CHECK(unnorm == norm * c);

  // Specializing a -> q^2 collapses to a one-variable value on both
  // normalizations.
  const LaurentPoly q2 = LaurentPoly::q_power(2);
  CHECK(twovar_specialize(norm, q2) == qpow_sum({3, 0, -3}));
  CHECK(twovar_specialize(unnorm, q2) ==
        qpow_sum({1, 0, -1}) * qpow_sum({3, 0, -3}));
}

TEST_CASE("kauffman_polynomial is a regular-isotopy invariant") {
  const TwoVarLaurentPoly c = TwoVarLaurentPoly::circle();
  // Reidemeister two: an inserted sigma_1 sigma_1^{-1} pair closes to the
  // two-strand unlink.
  CHECK(kauffman_polynomial(braid_closure_pd(BraidWord{2, {1, -1}})) == c);
  CHECK(kauffman_polynomial(braid_closure_pd(BraidWord{2, {-1, 1}})) == c);

  // Reidemeister three: both sides of the triangle move close identically.
  const TwoVarLaurentPoly lhs =
      kauffman_polynomial(braid_closure_pd(BraidWord{3, {1, 2, 1}}));
  const TwoVarLaurentPoly rhs =
      kauffman_polynomial(braid_closure_pd(BraidWord{3, {2, 1, 2}}));
  CHECK(lhs == rhs);

  // Stabilization is a curl: one factor of a^{-1}; conjugating the
  // stabilized word is regular isotopy and changes nothing.
  const PDCode tref = braid_closure_pd(BraidWord{2, {1, 1, 1}});
  const TwoVarLaurentPoly stabilized =
      kauffman_polynomial(braid_closure_pd(BraidWord{3, {1, 1, 1, 2}}));
  CHECK(stabilized ==
        TwoVarLaurentPoly::monomial(1, -1, 0) * kauffman_polynomial(tref));
  const BraidWord conj = markov_move(BraidWord{3, {1, 1, 1, 2}},
                                     MarkovKind::Conjugate, 2);
  CHECK(kauffman_polynomial(braid_closure_pd(conj)) == stabilized);

  // Mirror symmetry sends a -> a^{-1} and z -> -z.
  auto dubrovnik_mirror = [](const TwoVarLaurentPoly& p) {
    TwoVarLaurentPoly m;
    for (const auto& [key, coeff] : p.terms())
      m += TwoVarLaurentPoly::monomial(key.second % 2 ? Int(-coeff) : coeff,
                                       -key.first, key.second);
    return m;
  };
  const TwoVarLaurentPoly t = kauffman_polynomial(tref);
  CHECK(t == dubrovnik_mirror(kauffman_polynomial(mirror_pd(tref))));
  CHECK(kauffman_polynomial(braid_closure_pd(BraidWord{2, {-1, -1, -1}})) ==
        dubrovnik_mirror(t));

  // The figure-eight is amphichiral: its value is its own mirror.
  const TwoVarLaurentPoly f8 = kauffman_polynomial(parse_pd(kFigureEightPd));
  CHECK(f8 == dubrovnik_mirror(f8));

  // Connected sum multiplies normalized values: granny = trefoil # trefoil.
  const TwoVarLaurentPoly granny =
      kauffman_polynomial(braid_closure_pd(BraidWord{3, {1, 1, 1, 2, 2, 2}}));
  CHECK(granny == t * t);
}

TEST_CASE("alexander_from_seifert evaluates the pinned matrices") {
  // Trefoil genus-one matrix.
  const SeifertMatrix tref{{{1, 0}, {-1, 1}}};
  CHECK(alexander_from_seifert(tref) ==
        LaurentPoly::one() - LaurentPoly::q_power(1) + LaurentPoly::q_power(2));

  // Figure-eight genus-one matrix.
  const SeifertMatrix fig8{{{1, 1}, {0, -1}}};
  CHECK(alexander_from_seifert(fig8) ==
        -LaurentPoly::one() + LaurentPoly::q_power(1).scaled(3) -
            LaurentPoly::q_power(2));

  CHECK(alexander_from_seifert(SeifertMatrix{}) == LaurentPoly::one());
  CHECK(alexander_from_seifert(SeifertMatrix{{{0}}}).is_zero());
  CHECK_THROWS_AS(alexander_from_seifert(SeifertMatrix{{{1, 0}}}), InputError);

  // A matrix that forces a pivot search inside the elimination.
  const SeifertMatrix pivoting{{{1, 0, 0}, {-1, 1, 1}, {0, 0, 0}}};
  CHECK(alexander_from_seifert(pivoting) ==
        LaurentPoly::q_power(1) - LaurentPoly::q_power(2));
}

TEST_CASE("jones_via_rmatrix matches the skein evaluation") {
  // Calibration anchors: unknot and the one-letter kinks.
  CHECK(jones_via_rmatrix(BraidWord{1, {}}) == delta());
  CHECK(jones_via_rmatrix(BraidWord{2, {1}}) == delta());
  CHECK(jones_via_rmatrix(BraidWord{2, {-1}}) == delta());

  CHECK(jones_via_rmatrix(BraidWord{2, {1, 1}}) == qpow_sum({3, 1, -1, -3}));
  CHECK(jones_via_rmatrix(BraidWord{2, {1, 1, 1}}) ==
        jones(parse_pd(kTrefoilPd)));

  // R-matrix inverses cancel inside any word.
  CHECK(jones_via_rmatrix(BraidWord{3, {1, -1, 2, -2}}) ==
        jones_via_rmatrix(BraidWord{3, {}}));

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord b = random_braid(rng, 4, 7);
    CHECK(jones_via_rmatrix(b) == jones(braid_closure_pd(b)));
  }
}

TEST_CASE("poly_stats reports coefficient data") {
  // [4]_q runs from q^3 down to q^{-3}: spread 6 in q-units.
  const PolyStats s4 = poly_stats(qint(4));
  CHECK(s4.coeff_sum_abs == 4);
  CHECK(s4.max_abs_coeff == 1);
  CHECK(s4.spread == doctest::Approx(6.0));
  CHECK(s4.zero == false);

  const PolyStats constant = poly_stats(LaurentPoly::monomial(-5, 0));
  CHECK(constant.coeff_sum_abs == 5);
  CHECK(constant.max_abs_coeff == 5);
  CHECK(constant.spread == doctest::Approx(0.0));

  const PolyStats half = poly_stats(half_term(2, 3) + half_term(-1, 0));
  CHECK(half.coeff_sum_abs == 3);
  CHECK(half.max_abs_coeff == 2);
  CHECK(half.spread == doctest::Approx(1.5));

  const PolyStats zero = poly_stats(LaurentPoly::zero());
  CHECK(zero.zero == true);
  CHECK(zero.spread == doctest::Approx(0.0));
}

TEST_CASE("distinct_values separates the builtin census") {
  const DistinctValuesReport rep = distinct_values(builtin_census());
  CHECK(rep.total == 2);
  CHECK(rep.computed == 2);
  CHECK(rep.distinct == 2);
  CHECK(rep.percentage == doctest::Approx(100.0));
  CHECK(rep.collisions.empty());
  CHECK(rep.failures.empty());
}

TEST_CASE("distinct_values identifies duplicates and mirror pairs") {
  const PDCode tref = parse_pd(kTrefoilPd);
  const DistinctValuesReport dup =
      distinct_values({{"a", tref}, {"b", tref}}, "jones");
  CHECK(dup.distinct == 1);
  CHECK(dup.percentage == doctest::Approx(50.0));
  CHECK(dup.collisions.size() == 1);
  CHECK(dup.collisions[0] == std::vector<std::string>{"a", "b"});

  // Mirror-blindness: a chiral pair counts as one value.
  const DistinctValuesReport chiral =
      distinct_values({{"left", tref}, {"right", mirror_pd(tref)}}, "bracket");
  CHECK(chiral.distinct == 1);

  // Failures are collected, not fatal.
  BraidWord big{2, std::vector<int>(11, 1)};
  const DistinctValuesReport mixed = distinct_values(
      {{"ok", tref}, {"too-big", braid_closure_pd(big)}}, "kauffman");
  CHECK(mixed.total == 2);
  CHECK(mixed.computed == 1);
  CHECK(mixed.failures.size() == 1);
  CHECK(mixed.failures[0].first == "too-big");

  CHECK_THROWS_AS(distinct_values({}, "homfly"), InputError);
}

TEST_CASE("parse_census_csv reads name,pd rows") {
  std::istringstream in(
      "name,pd\n"
      "trefoil,PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]\n"
      "\n"
      "figure-eight,PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\n");
  const auto items = parse_census_csv(in);
  CHECK(items.size() == 2);
  CHECK(items[0].first == "trefoil");
  CHECK(items[1].second.crossings.size() == 4);

  std::istringstream no_header("unknot-kink,PD[X[1,1,2,2]]\n");
  CHECK(parse_census_csv(no_header).size() == 1);

  std::istringstream bad_row("name,pd\njust-a-name\n");
  CHECK_THROWS_AS(parse_census_csv(bad_row), InputError);
  std::istringstream bad_pd("name,pd\nknot,PD[X[1,2,3]]\n");
  CHECK_THROWS_AS(parse_census_csv(bad_pd), InputError);
}

TEST_CASE("builtin_census entries are the advertised knots") {
  const auto census = builtin_census();
  CHECK(census.size() == 2);
  CHECK(census[0].first == "trefoil");
  CHECK(census[1].first == "figure-eight");
  CHECK(jones(census[0].second) == jones(braid_closure_pd(BraidWord{2, {1, 1, 1}})));
  CHECK(jones(census[1].second) ==
        jones(braid_closure_pd(BraidWord{3, {1, -2, 1, -2}})));
}

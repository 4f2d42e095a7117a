#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/errors.hpp"
#include "skeinlab/qnum.hpp"
#include "skeinlab/tl.hpp"

using namespace skeinlab;

namespace {

RationalFn rq(const LaurentPoly& p) { return RationalFn(p); }

TLMorphism random_morphism(int m, int n, std::mt19937& rng) {
  auto basis = tl_basis(m, n);
  TLMorphism out(m, n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& d : basis) out.add_term(d, rq(LaurentPoly::monomial(coeff(rng), 0)));
  return out;
}

}  // namespace

TEST_CASE("diagram validation and canonical text form") {
  TLDiagram id3 = TLDiagram::identity(3);
  CHECK(id3.str() == "TL(3->3)[(1,4),(2,5),(3,6)]");
  TLDiagram u1 = TLDiagram::generator(3, 1);
  CHECK(u1.str() == "TL(3->3)[(1,2),(3,6),(4,5)]");
  // Pair order and orientation inside a pair do not matter.
  CHECK(TLDiagram(3, 3, {{6, 3}, {2, 1}, {5, 4}}) == u1);

  CHECK_THROWS_AS(TLDiagram(2, 1, {{1, 2}}), DomainError);           // odd boundary
  CHECK_THROWS_AS(TLDiagram(2, 2, {{1, 2}}), DomainError);           // not a cover
  CHECK_THROWS_AS(TLDiagram(2, 2, {{1, 2}, {1, 3}}), DomainError);   // label reused
  CHECK_THROWS_AS(TLDiagram(2, 2, {{1, 2}, {3, 5}}), DomainError);   // out of range
  CHECK_THROWS_AS(TLDiagram(4, 0, {{1, 3}, {2, 4}}), DomainError);   // interleaved caps
  CHECK_NOTHROW(TLDiagram(4, 0, {{1, 4}, {2, 3}}));                  // nested caps are planar
  CHECK_NOTHROW(TLDiagram(0, 4, {{1, 4}, {2, 3}}));
  // In End(2), (1,3),(2,4) is the identity; (1,4),(2,3) is the transposition,
  // which is not a flat tangle.
  CHECK_NOTHROW(TLDiagram(2, 2, {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(TLDiagram(2, 2, {{1, 4}, {2, 3}}), DomainError);
}

TEST_CASE("temperley-lieb relations") {
  const RationalFn delta{tl_delta()};
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      TLMorphism ui = TLMorphism::generator(n, i);
      CHECK(tl_compose(ui, ui) == ui.scaled(delta));
      for (int j = 1; j < n; ++j) {
        TLMorphism uj = TLMorphism::generator(n, j);
        if (std::abs(i - j) == 1) {
          CHECK(tl_compose(ui, tl_compose(uj, ui)) == ui);
        } else if (std::abs(i - j) >= 2) {
          CHECK(tl_compose(ui, uj) == tl_compose(uj, ui));
        }
      }
    }
  }
}

TEST_CASE("identity is neutral and composition is associative") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> size(0, 3);
    int m = size(rng), k = size(rng), l = size(rng), n = size(rng);
    if ((m + k) % 2 != 0) ++k;
    if ((k + l) % 2 != 0) ++l;
    if ((l + n) % 2 != 0) ++n;
    TLMorphism f = random_morphism(m, k, rng);
    TLMorphism g = random_morphism(k, l, rng);
    TLMorphism h = random_morphism(l, n, rng);
    CHECK(tl_compose(h, tl_compose(g, f)) == tl_compose(tl_compose(h, g), f));
    CHECK(tl_compose(TLMorphism::identity(k), f) == f);
    CHECK(tl_compose(f, TLMorphism::identity(m)) == f);
  }
}

TEST_CASE("tensor: juxtaposition, interchange law, zigzag") {
  // (id tensor u_1) on 1+2 strands equals u_2 on 3 strands.
  TLMorphism left = tl_tensor(TLMorphism::identity(1), TLMorphism::generator(2, 1));
  CHECK(left == TLMorphism::generator(3, 2));
  CHECK(tl_tensor(TLMorphism::generator(2, 1), TLMorphism::identity(1)) ==
        TLMorphism::generator(3, 1));

  // Interchange: (g1 tensor g2) after (f1 tensor f2) = (g1 f1) tensor (g2 f2).
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> size(0, 2);
    int m1 = size(rng), k1 = size(rng), n1 = size(rng);
    int m2 = size(rng), k2 = size(rng), n2 = size(rng);
    if ((m1 + k1) % 2 != 0) ++k1;
    if ((k1 + n1) % 2 != 0) ++n1;
    if ((m2 + k2) % 2 != 0) ++k2;
    if ((k2 + n2) % 2 != 0) ++n2;
    TLMorphism f1 = random_morphism(m1, k1, rng), g1 = random_morphism(k1, n1, rng);
    TLMorphism f2 = random_morphism(m2, k2, rng), g2 = random_morphism(k2, n2, rng);
    CHECK(tl_compose(tl_tensor(g1, g2), tl_tensor(f1, f2)) ==
          tl_tensor(tl_compose(g1, f1), tl_compose(g2, f2)));
  }

  // Zigzag: (cap_1 tensor id) after (id tensor cup_1) = id on one strand.
  TLMorphism cup{TLDiagram::cup(2, 1)};   // 0 -> 2
  TLMorphism cap{TLDiagram::cap(2, 1)};   // 2 -> 0
  TLMorphism zig = tl_compose(tl_tensor(cap, TLMorphism::identity(1)),
                              tl_tensor(TLMorphism::identity(1), cup));
  CHECK(zig == TLMorphism::identity(1));
  TLMorphism zag = tl_compose(tl_tensor(TLMorphism::identity(1), cap),
                              tl_tensor(cup, TLMorphism::identity(1)));
  CHECK(zag == TLMorphism::identity(1));
  // And cap after cup is a circle: delta times the empty diagram.
  TLMorphism circle = tl_compose(cap, cup);
  CHECK(circle == TLMorphism(TLDiagram(0, 0, {}), RationalFn(tl_delta())));
}

TEST_CASE("basis enumeration matches Catalan counts") {
  CHECK(tl_basis(1, 2).empty());
  CHECK(tl_basis(0, 0).size() == 1);
  CHECK(tl_basis(1, 1).size() == 1);
  CHECK(tl_basis(2, 2).size() == 2);
  CHECK(tl_basis(3, 3).size() == 5);
  CHECK(tl_basis(4, 4).size() == 14);
  CHECK(tl_basis(0, 6).size() == 5);
  CHECK(tl_basis(2, 4).size() == 5);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      auto basis = tl_basis(m, n);
      if ((m + n) % 2 != 0) {
        CHECK(basis.empty());
        continue;
      }
      CHECK(Int(basis.size()) == catalan((m + n) / 2));
      // Deterministic order and no duplicates.
      for (size_t i = 0; i + 1 < basis.size(); ++i) CHECK(basis[i] < basis[i + 1]);
      CHECK(basis == tl_basis(m, n));
    }
  }
  // The two elements of End(2): identity and the cup-cap.
  auto b22 = tl_basis(2, 2);
  REQUIRE(b22.size() == 2);
  CHECK(b22[0] == TLDiagram(2, 2, {{1, 2}, {3, 4}}));
  CHECK(b22[1] == TLDiagram::identity(2));
}

TEST_CASE("markov trace") {
  const RationalFn delta{tl_delta()};
  for (int n = 0; n <= 4; ++n) {
    RationalFn dn = RationalFn::one();
    for (int i = 0; i < n; ++i) dn = dn * delta;
    CHECK(tl_trace(TLMorphism::identity(n)) == dn);
  }
  CHECK(tl_trace(TLMorphism::generator(2, 1)) == delta);
  CHECK(tl_trace(TLMorphism::generator(3, 1)) == delta * delta);

  // tr(fg) = tr(gf) for random endomorphism pairs up to n = 4.
  std::mt19937 rng(99);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      TLMorphism f = random_morphism(n, n, rng);
      TLMorphism g = random_morphism(n, n, rng);
      CHECK(tl_trace(tl_compose(f, g)) == tl_trace(tl_compose(g, f)));
    }
  }

  // Linear in the coefficients.
  std::mt19937 rng2(4242);
  TLMorphism f = random_morphism(3, 3, rng2);
  TLMorphism g = random_morphism(3, 3, rng2);
  CHECK(tl_trace(f + g) == tl_trace(f) + tl_trace(g));
  RationalFn two{LaurentPoly::monomial(2, 0)};
  CHECK(tl_trace(f.scaled(two)) == tl_trace(f) * two);
}

TEST_CASE("closing the rightmost strand") {
  // Closing u_1 in End(2) leaves the through-strand: identity on 1.
  auto [d_u1, c_u1] = tl_close_rightmost(TLDiagram::generator(2, 1));
  CHECK(d_u1 == TLDiagram::identity(1));
  CHECK(c_u1 == 0);
  // Closing the identity's last strand makes one circle.
  auto [d_id, c_id] = tl_close_rightmost(TLDiagram::identity(3));
  CHECK(d_id == TLDiagram::identity(2));
  CHECK(c_id == 1);
  // Iterated closing reproduces the full Markov closure circle count.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& start : tl_basis(n, n)) {
      TLDiagram d = start;
      int circles = 0;
      while (d.bottom() > 0) {
        auto [next, c] = tl_close_rightmost(d);
        circles += c;
        d = next;
      }
      CHECK(circles == tl_closure_circles(start));
    }
  }
}

TEST_CASE("morphism arithmetic") {
  TLMorphism u1 = TLMorphism::generator(2, 1);
  TLMorphism id = TLMorphism::identity(2);
  TLMorphism sum = id + u1;
  CHECK(sum.terms().size() == 2);
  CHECK((sum - u1) == id);
  CHECK((u1 - u1).is_zero());
  CHECK(u1.scaled(RationalFn()).is_zero());
  CHECK_THROWS_AS(id + TLMorphism::identity(3), DomainError);
  CHECK_THROWS_AS(tl_compose(TLMorphism::identity(3), id), DomainError);
  CHECK_THROWS_AS(tl_trace(TLMorphism(TLDiagram::cap(2, 1))), DomainError);

  // delta = -(q + 1/q) evaluates to -[2].
  CHECK(tl_delta() == -qint(2));
}

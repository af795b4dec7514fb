#include "doctest.h"

#include "helixlab/expr.hpp"
#include "helixlab/parser.hpp"

#include <random>

using namespace helixlab;

namespace {

const Variety P2 = Variety::projective(2);
const Variety P4 = Variety::projective(4);
const Variety Q3 = Variety::quadric(3);
const Variety Q5 = Variety::quadric(5);

Expr parse(const std::string& s, const Variety& v) {
  return parse_sheaf_expr(s, v);
}

}  // namespace

TEST_CASE("variety basics") {
  CHECK(parse_variety("P3").str() == "P3");
  CHECK(parse_variety("Q5").str() == "Q5");
  CHECK(parse_variety("P3").canonical_twist() == -4);
  CHECK(parse_variety("Q3").canonical_twist() == -3);
  CHECK(P4.ambient_dim() == 4);
  CHECK(Q3.ambient_dim() == 4);
  CHECK_THROWS_AS(parse_variety("Q4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_variety("P0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_variety("X3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_variety("P"), std::invalid_argument);
}

TEST_CASE("parsing and printing round-trips") {
  CHECK(parse("O(3)", P4).str() == "O(3)");
  CHECK(parse("O", P4).str() == "O(0)");  // twist always printed
  CHECK(parse("Sigma(2) + 2*psi_1(3)", Q5).str() == "Sigma(2) + 2*Omega^1(4)");
  CHECK(parse("psi_0(4)", Q3).str() == "O(4)");
  CHECK(parse("0", Q3).str() == "0");
  CHECK(parse("O(1) + 0 + O(1)", P2).str() == "2*O(1)");
  CHECK(parse(" 3*O( -2 ) + Omega^1(5)", P2).str() == "3*O(-2) + Omega^1(5)");
  // terms merge and sort canonically regardless of input order
  CHECK(parse("wT^1(0) + O(9) + wT^1", P4).str() == "O(9) + 2*wT^1(0)");
}

TEST_CASE("parser rejections") {
  CHECK_THROWS_AS(parse("Sigma(1)", P4), std::invalid_argument);
  CHECK_THROWS_AS(parse("psi_1(0)", P4), std::invalid_argument);
  CHECK_THROWS_AS(parse("O(1) +", P4), ParseError);
  CHECK_THROWS_AS(parse("O(1) O(2)", P4), ParseError);
  CHECK_THROWS_AS(parse("2*", P4), ParseError);
  CHECK_THROWS_AS(parse("0*O(1)", P4), ParseError);
  CHECK_THROWS_AS(parse("O(", P4), ParseError);
  CHECK_THROWS_AS(parse("O(99999999999999)", P4), ParseError);
  CHECK_THROWS_AS(parse("Omeg^1(2)", P4), ParseError);
  // psi index n + odd offset has no catalog meaning
  CHECK_THROWS_AS(parse("psi_4(0)", Q3), std::invalid_argument);
  CHECK_THROWS_AS(parse("psidual_6(0)", Q5), std::invalid_argument);
}

TEST_CASE("catalog rewrites") {
  // top and bottom wedge powers collapse to line bundles
  CHECK(parse("Omega^4(4)", P4).str() == "O(-1)");
  CHECK(parse("wT^4(0)", P4).str() == "O(5)");
  CHECK(parse("Omega^4(0)", Q3).str() == "O(-5)");
  CHECK(parse("wT^4(0)", Q3).str() == "O(5)");
  CHECK(atom_expr(P4, AtomKind::Omega, 0, 7).str() == "O(7)");
  // out-of-range wedge powers are the zero sheaf
  CHECK(atom_expr(P4, AtomKind::Omega, 9, 0).is_zero());
  CHECK(atom_expr(Q3, AtomKind::WedgeT, 5, 0).is_zero());
  // psi normalizations
  CHECK(parse("psi_1(3)", Q3).str() == "Omega^1(4)");
  CHECK(parse("psidual_1(3)", Q3).str() == "wT^1(2)");
  CHECK(parse("psi_3(0)", Q3).str() == "4*Sigma(-1)");
  CHECK(parse("psidual_3(0)", Q3).str() == "4*Sigma(0)");
  CHECK(parse("psi_5(2)", Q3).str() == "4*Sigma(1)");  // psi_(n+2) = psi_n
  CHECK(parse("psi_5(0)", Q5).str() == "8*Sigma(-1)");
  CHECK(parse("psi_2(1)", Q5).str() == "psi_2(1)");
}

TEST_CASE("dual rules and involution") {
  CHECK(dual(parse("O(5)", P4)).str() == "O(-5)");
  CHECK(dual(parse("Sigma(0)", Q3)).str() == "Sigma(-1)");
  CHECK(dual(parse("Sigma(-1)", Q3)).str() == "Sigma(0)");
  // Omega^n(n) on P^n is O(-1), so its dual is O(1)
  CHECK(dual(parse("Omega^4(4)", P4)).str() == "O(1)");
  CHECK(dual(parse("Omega^2(3)", P4)).str() == "wT^2(-3)");
  CHECK(dual(parse("psi_2(1)", Q5)).str() == "psidual_2(-1)");

  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Variety& v = (it % 2) ? Q5 : P4;
    Expr e = zero_expr(v);
    for (int k = 0; k < 3; ++k) {
      int kinds = v.is_quadric() ? 6 : 3;
      int pick = static_cast<int>(rng() % kinds);
      AtomKind kind = v.is_quadric()
                          ? std::array{AtomKind::Structure, AtomKind::Sigma,
                                       AtomKind::Psi, AtomKind::PsiDual,
                                       AtomKind::Omega, AtomKind::WedgeT}[pick]
                          : std::array{AtomKind::Structure, AtomKind::Omega,
                                       AtomKind::WedgeT}[pick];
      long long p = 0;
      if (kind == AtomKind::Omega || kind == AtomKind::WedgeT)
        p = 1 + static_cast<long long>(rng() % v.ambient_dim());
      if (kind == AtomKind::Psi || kind == AtomKind::PsiDual)
        p = static_cast<long long>(rng() % (v.n + 1));
      long long t = static_cast<long long>(rng() % 21) - 10;
      Int mult = static_cast<long long>(rng() % 3) + 1;
      e = direct_sum(e, atom_expr(v, kind, p, t, mult));
    }
    CHECK(dual(dual(e)) == e);
    CHECK(rank(dual(e)) == rank(e));
    long long s = static_cast<long long>(rng() % 9) - 4;
    CHECK(twist(e, s) == twist(twist(e, 2), s - 2));
    CHECK(dual(twist(e, s)) == twist(dual(e), -s));
    CHECK(direct_sum(e, zero_expr(v)) == e);
  }
}

TEST_CASE("ranks") {
  CHECK(rank(parse("Sigma", Q3)) == 2);
  CHECK(rank(parse("Sigma", Q5)) == 4);
  CHECK(rank(parse("psi_2(0)", Q3)) == 7);   // C(4,2) + 1
  CHECK(rank(parse("psi_2(0)", Q5)) == 16);  // C(6,2) + 1
  CHECK(rank(parse("psidual_2(5)", Q5)) == 16);
  CHECK(rank(parse("psi_3(0)", Q3)) == 8);   // collapses to 4*Sigma
  CHECK(rank(parse("Omega^2(1)", P4)) == 6);
  CHECK(rank(parse("wT^3(0)", Q5)) == binomial(6, 3));
  CHECK(rank(parse("2*O(1) + Sigma", Q5)) == 6);
  CHECK(rank(zero_expr(P2)) == 0);
}

TEST_CASE("min twist and misc") {
  CHECK(min_twist(parse("O(-3) + Omega^1(2)", P2)) == -3);
  CHECK(min_twist(zero_expr(P2)) == 0);
  CHECK(parse("O(1)", P2) == parse("O(1)", P2));
  CHECK_FALSE(parse("O(1)", P2) == parse("O(2)", P2));
  CHECK_THROWS_AS(direct_sum(parse("O", P2), parse("O", P4)),
                  std::invalid_argument);
}

#include "doctest.h"

#include "helixlab/bott.hpp"
#include "helixlab/engine.hpp"
#include "helixlab/parser.hpp"

using namespace helixlab;

namespace {

Table exact_table(std::initializer_list<long long> xs) {
  Table t;
  for (auto x : xs) t.push_back(RankValue::exact(x));
  return t;
}

Int alt(const Table& t) {
  Int s = 0;
  int sign = 1;
  for (const auto& r : t) {
    s += sign * r.value();
    sign = -sign;
  }
  return s;
}

Expr P(const std::string& s, const Variety& v) {
  return parse_sheaf_expr(s, v);
}

}  // namespace

TEST_CASE("engine form tables on projective space match the closed formulas") {
  for (int n : {2, 3, 4}) {
    auto v = Variety::projective(n);
    auto& e = Engine::get(v);
    for (int p = 1; p < n; ++p)
      for (long long t = -5; t <= 5; ++t) {
        CHECK(e.cohomology_table(atom_expr(v, AtomKind::Omega, p, t)) ==
              bott(n, p, t));
        // wedge powers of T are twisted forms; both spellings agree
        CHECK(e.cohomology_table(atom_expr(v, AtomKind::WedgeT, p, t)) ==
              bott(n, n - p, t + n + 1));
      }
    for (long long t = -7; t <= 7; ++t)
      CHECK(e.cohomology_table(atom_expr(v, AtomKind::Structure, 0, t)) ==
            bott(n, 0, t));
  }
}

TEST_CASE("quadric tables through the engine: base points") {
  auto q3 = Variety::quadric(3);
  auto& e = Engine::get(q3);
  CHECK(e.cohomology_table(P("O(1)", q3)) == exact_table({5, 0, 0, 0}));
  CHECK(e.cohomology_table(P("Sigma", q3)) == exact_table({4, 0, 0, 0}));
  CHECK(e.cohomology_table(P("psi_1(-1)", q3)) == exact_table({0, 1, 0, 0}));
  CHECK(e.cohomology_table(P("psi_2(-2)", q3)) == exact_table({0, 0, 1, 0}));
  CHECK(e.cohomology_table(P("psi_2(0)", q3)) == exact_table({0, 0, 0, 0}));
  CHECK(e.cohomology_table(P("psi_2(-1)", q3)) == exact_table({0, 0, 0, 0}));
  CHECK(e.cohomology_table(P("psi_2(1)", q3)) == exact_table({15, 0, 0, 0}));
  CHECK(e.cohomology_table(P("psi_2(-3)", q3)) == exact_table({0, 0, 0, 11}));
  CHECK(e.cohomology_table(P("psidual_2(0)", q3)) ==
        exact_table({11, 0, 0, 0}));
  CHECK(e.cohomology_table(P("psidual_2(-1)", q3)) ==
        exact_table({0, 1, 0, 0}));

  auto q5 = Variety::quadric(5);
  auto& e5 = Engine::get(q5);
  for (int j = 2; j <= 4; ++j) {
    Table tab = e5.cohomology_table(
        atom_expr(q5, AtomKind::Psi, j, -j));
    Table want = table_zero(6);
    want[j] = RankValue::exact(1);
    CHECK(tab == want);
  }
  CHECK(e5.cohomology_table(P("psi_3(1)", q5)) ==
        exact_table({57, 0, 0, 0, 0, 0}));
}

TEST_CASE("expression tables are additive") {
  auto q3 = Variety::quadric(3);
  auto& e = Engine::get(q3);
  Table sum = e.cohomology_table(P("Sigma(1) + 2*O(-1)", q3));
  Table by_hand = table_add(e.cohomology_table(P("Sigma(1)", q3)),
                            table_scale(e.cohomology_table(P("O(-1)", q3)), 2));
  CHECK(sum == by_hand);
}

TEST_CASE("serre duality holds for every catalog atom table") {
  auto check_variety = [](const Variety& v, const std::vector<Expr>& atoms) {
    auto& e = Engine::get(v);
    for (const auto& f : atoms) {
      Table lhs = e.cohomology_table(f);
      Table rhs =
          table_flip(e.cohomology_table(twist(dual(f), v.canonical_twist())));
      CHECK(lhs == rhs);
    }
  };
  {
    auto v = Variety::projective(3);
    std::vector<Expr> atoms;
    for (long long t = -4; t <= 4; ++t) {
      atoms.push_back(atom_expr(v, AtomKind::Structure, 0, t));
      for (int p = 1; p <= 2; ++p) {
        atoms.push_back(atom_expr(v, AtomKind::Omega, p, t));
        atoms.push_back(atom_expr(v, AtomKind::WedgeT, p, t));
      }
    }
    check_variety(v, atoms);
  }
  {
    auto v = Variety::quadric(3);
    std::vector<Expr> atoms;
    for (long long t = -4; t <= 4; ++t) {
      atoms.push_back(atom_expr(v, AtomKind::Structure, 0, t));
      atoms.push_back(atom_expr(v, AtomKind::Sigma, 0, t));
      atoms.push_back(atom_expr(v, AtomKind::Omega, 1, t));
      atoms.push_back(atom_expr(v, AtomKind::Psi, 2, t));
      atoms.push_back(atom_expr(v, AtomKind::PsiDual, 2, t));
    }
    check_variety(v, atoms);
  }
}

TEST_CASE("euler characteristic equals the alternating sum of exact tables") {
  for (auto v : {Variety::projective(3), Variety::quadric(3)}) {
    auto& e = Engine::get(v);
    std::vector<Expr> samples;
    for (long long t = -3; t <= 3; ++t) {
      samples.push_back(atom_expr(v, AtomKind::Structure, 0, t));
      samples.push_back(atom_expr(v, AtomKind::Omega, 1, t));
      if (v.is_quadric()) {
        samples.push_back(atom_expr(v, AtomKind::Sigma, 0, t));
        samples.push_back(atom_expr(v, AtomKind::Psi, 2, t));
        samples.push_back(atom_expr(v, AtomKind::PsiDual, 2, t));
      } else {
        samples.push_back(atom_expr(v, AtomKind::Omega, 2, t));
        samples.push_back(atom_expr(v, AtomKind::WedgeT, 2, t));
      }
    }
    for (const auto& f : samples) {
      Table t = e.cohomology_table(f);
      REQUIRE(table_exact(t));
      CHECK(alt(t) == e.chi_of(f));
    }
  }
}

TEST_CASE("K0 classes: line walks and fixtures") {
  auto q3 = Variety::quadric(3);
  auto& e = Engine::get(q3);
  CHECK(e.k0_class(P("O(3)", q3)) == K0{-1, 5, -11, 4});
  CHECK(e.k0_class(P("O(-1)", q3)) == K0{5, -11, 15, -4});
  CHECK(e.euler_chi(P("O", q3), P("Sigma", q3)) == 4);
  CHECK(e.euler_chi(P("Sigma", q3), P("Sigma", q3)) == 1);

  auto p2 = Variety::projective(2);
  auto& e2 = Engine::get(p2);
  CHECK(e2.k0_class(P("O(3)", p2)) == K0{1, -3, 3});
  CHECK(e2.euler_chi(P("O", p2), P("O(3)", p2)) == 10);

  auto p3 = Variety::projective(3);
  auto& e3 = Engine::get(p3);
  CHECK(e3.k0_class(P("O(4)", p3)) == K0{-1, 4, -6, 4});

  // additivity over direct sums
  K0 s = e.k0_class(P("Sigma(1) + 2*O(-1)", q3));
  K0 a = e.k0_class(P("Sigma(1)", q3));
  K0 b = e.k0_class(P("O(-1)", q3));
  for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == a[i] + 2 * b[i]);
}

TEST_CASE("gram matrix columns are euler pairings of the collection") {
  for (auto v : {Variety::projective(3), Variety::quadric(3),
                 Variety::quadric(5)}) {
    auto& e = Engine::get(v);
    const auto& g = e.gram();
    for (int a = 0; a <= v.n; ++a)
      for (int b = 0; b <= v.n; ++b)
        CHECK(g[a][b] ==
              e.euler_chi(e.collection_member(a), e.collection_member(b)));
  }
}

TEST_CASE("cm regularity of the standard bundles") {
  auto p3 = Variety::projective(3);
  auto& e3 = Engine::get(p3);
  for (long long t = -3; t <= 3; ++t) {
    auto r = e3.cm_regularity(P("O(" + std::to_string(t) + ")", p3));
    REQUIRE(r.m.has_value());
    CHECK(*r.m == -t);
  }
  CHECK(*e3.cm_regularity(P("Omega^1", p3)).m == 2);
  CHECK(*e3.cm_regularity(P("Omega^2", p3)).m == 3);
  CHECK(*e3.cm_regularity(P("wT^1", p3)).m == 0);
  CHECK(e3.cm_regularity(P("0", p3)).minus_infinity);

  for (int n : {3, 5}) {
    auto q = Variety::quadric(n);
    auto& eq = Engine::get(q);
    for (long long s = -3; s <= 3; ++s) {
      CHECK(*eq.cm_regularity(P("O(" + std::to_string(s) + ")", q)).m ==
            1 - s);
      CHECK(*eq.cm_regularity(P("Sigma(" + std::to_string(s) + ")", q)).m ==
            -s);
    }
  }
}

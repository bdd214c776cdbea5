#include "test_support.hpp"

#include <gtest/gtest.h>

namespace sigcount {
namespace {

using testing::Gen;
using testing::sym;

void expect_exact_diagonalization(const SymMatrix& s) {
  Diagonalization d = congruence_diagonalize(s);
  EXPECT_NE(determinant(d.transform), Rational(0));
  EXPECT_EQ(d.transform.transpose() * s.matrix() * d.transform, d.diagonal);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j) { EXPECT_TRUE(d.diagonal(i, j).is_zero()); }
}

TEST(SymMatrix, RejectsAsymmetric) {
  EXPECT_THROW(SymMatrix(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix(Matrix(2, 3)), std::invalid_argument);
}

TEST(Diagonalize, Examples) {
  auto d1 = congruence_diagonalize(sym({{2, 0}, {0, -2}}));
  EXPECT_EQ(d1.transform, Matrix::identity(2));
  EXPECT_EQ(d1.diagonal, (Matrix{{2, 0}, {0, -2}}));

  SymMatrix hyperbolic = sym({{0, 1}, {1, 0}});
  auto d2 = congruence_diagonalize(hyperbolic);
  EXPECT_EQ(d2.diagonal, (Matrix{{2, 0}, {0, Rational(-1, 2)}}));
  expect_exact_diagonalization(hyperbolic);

  EXPECT_TRUE(congruence_diagonalize(SymMatrix(Matrix(3, 3))).diagonal.is_zero());
}

TEST(Diagonalize, PolarizationNeedsFallback) {
  // 2*a01 + a11 = 0: adding row 1 to row 0 leaves a zero pivot.
  SymMatrix s = sym({{0, 1}, {1, -2}});
  expect_exact_diagonalization(s);
  EXPECT_EQ(type_of(s), (FormType{1, 1, 2}));
}

TEST(TypeOf, Examples) {
  EXPECT_EQ(type_of(sym({{2, 0}, {0, -2}})), (FormType{1, 1, 2}));
  EXPECT_EQ(type_of(SymMatrix(Matrix::identity(4))), (FormType{4, 0, 4}));
  FormType t = type_of(sym({{2, 0, 0}, {0, 0, 0}, {0, 0, -3}}));
  EXPECT_EQ(t, (FormType{1, 1, 3}));
  EXPECT_EQ(t.rank(), 2u);
  EXPECT_EQ(t.signature(), 0);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(Matrix{{2, 0}, {0, -2}}), (std::vector<Rational>{-4, 0, 1}));
  EXPECT_EQ(char_poly(Matrix::identity(2)), (std::vector<Rational>{1, -2, 1}));
  EXPECT_EQ(char_poly(Matrix{{0, -1}, {1, 0}}), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(char_poly(Matrix(0, 0)), (std::vector<Rational>{1}));
  EXPECT_THROW(char_poly(Matrix(2, 3)), std::invalid_argument);
}

TEST(Descartes, Examples) {
  EXPECT_EQ(descartes_counts({-1, 0, 1}), (DescartesCounts{1, 1}));
  EXPECT_EQ(descartes_counts({1, 0, 1}), (DescartesCounts{0, 0}));
  EXPECT_EQ(descartes_counts({-6, 11, -6, 1}), (DescartesCounts{3, 0}));
  EXPECT_THROW(descartes_counts({0, 0}), std::invalid_argument);
  EXPECT_THROW(descartes_counts({}), std::invalid_argument);
}

TEST(TypeViaDescartes, Examples) {
  EXPECT_EQ(type_via_descartes(sym({{2, 0}, {0, -2}})), (FormType{1, 1, 2}));
  EXPECT_EQ(type_via_descartes(SymMatrix(Matrix::identity(3))), (FormType{3, 0, 3}));
  FormType t = type_via_descartes(sym({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
  EXPECT_EQ(t, (FormType{1, 1, 3}));
  EXPECT_EQ(t.rank(), 2u);
}

TEST(Hurwitz, Examples) {
  EXPECT_EQ(leading_principal_minors(Matrix{{2, 0}, {0, -2}}), (std::vector<Rational>{2, -4}));
  EXPECT_EQ(hurwitz_type(sym({{2, 0}, {0, -2}})), (FormType{1, 1, 2}));
  EXPECT_EQ(hurwitz_type(SymMatrix(Matrix::identity(5))), (FormType{5, 0, 5}));
  EXPECT_FALSE(hurwitz_type(sym({{0, 1}, {1, 0}})).has_value());
}

TEST(Definiteness, Examples) {
  EXPECT_EQ(definiteness(SymMatrix(Matrix::identity(3))), Definiteness::positive_definite);
  EXPECT_EQ(definiteness(sym({{2, 0}, {0, -2}})), Definiteness::indefinite);
  EXPECT_EQ(definiteness(sym({{1, 0}, {0, 0}})), Definiteness::positive_semi);
  EXPECT_EQ(definiteness(sym({{-1, 0}, {0, -3}})), Definiteness::negative_definite);
  EXPECT_EQ(definiteness(sym({{0, 0}, {0, -3}})), Definiteness::negative_semi);
  EXPECT_EQ(definiteness(SymMatrix(Matrix(2, 2))), Definiteness::zero);
  EXPECT_EQ(to_string(Definiteness::indefinite), "indefinite");
}

TEST(SignTable, EveryColumnHasAWitness) {
  for (const auto& col : testing::two_by_two_sign_table()) {
    auto w = testing::find_witness(col);
    ASSERT_TRUE(w.has_value()) << col.d1 << " " << col.d2;
    EXPECT_EQ(type_of(*w), col.type) << *w;
  }
}

TEST(SignTable, ZeroD1WithPositiveD2IsImpossible) {
  // D1 = 0 forces D2 = -a01^2 <= 0.
  Gen gen(41);
  for (int i = 0; i < 2000; ++i) {
    Rational b = gen.rational(), c = gen.rational();
    SymMatrix s{{0, b}, {b, c}};
    EXPECT_LE(determinant(s.matrix()).sign(), 0);
  }
}

TEST(QuadformProperty, DiagonalizationIsExact) {
  Gen gen(42);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 7));
    SymMatrix s = gen.coin(0.3) ? gen.low_rank_symmetric(n, static_cast<std::size_t>(gen.integer(0, static_cast<long>(n))))
                                : gen.symmetric(n);
    expect_exact_diagonalization(s);
  }
}

TEST(QuadformProperty, SylvesterInvariance) {
  Gen gen(43);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    SymMatrix s = gen.coin(0.4) ? gen.low_rank_symmetric(n, static_cast<std::size_t>(gen.integer(0, static_cast<long>(n))))
                                : gen.symmetric(n);
    EXPECT_EQ(type_of(s.congruent(gen.invertible(n))), type_of(s));
  }
}

TEST(QuadformProperty, ThreeWayAgreement) {
  Gen gen(44);
  int hurwitz_applicable = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    SymMatrix s = gen.coin(0.3) ? gen.low_rank_symmetric(n, static_cast<std::size_t>(gen.integer(0, static_cast<long>(n))))
                                : gen.symmetric(n);
    FormType t = type_of(s);
    EXPECT_EQ(type_via_descartes(s), t) << s;
    if (auto h = hurwitz_type(s)) {
      ++hurwitz_applicable;
      EXPECT_EQ(*h, t) << s;
    }
  }
  EXPECT_GT(hurwitz_applicable, 20);
}

TEST(QuadformProperty, DescartesExactOnSplitPolynomials) {
  Gen gen(45);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> roots;
    std::size_t pos = 0, neg = 0;
    for (long k = gen.integer(0, 8); k > 0; --k) {
      roots.push_back(gen.rational(6, 4));
      if (roots.back() > Rational(0)) ++pos;
      if (roots.back() < Rational(0)) ++neg;
    }
    UPoly g = upoly_from_roots(roots) * gen.nonzero_rational();
    EXPECT_EQ(descartes_counts(g.coeffs()), (DescartesCounts{pos, neg}));
  }
}

TEST(QuadformProperty, DescartesBoundAndParityAgainstSturm) {
  Gen gen(46);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    UPoly g = gen.upoly(static_cast<int>(gen.integer(1, 9)), 10);
    if (g.coeff(0).is_zero()) continue;
    if (!gcd(g, g.derivative()).is_constant()) continue;
    ++checked;
    const Rational b = cauchy_bound(g);
    const std::size_t n_pos = sturm_count(g, Rational(0), b);
    const std::size_t n_neg = sturm_count(g, -b, Rational(0));
    auto [v_pos, v_neg] = descartes_counts(g.coeffs());
    EXPECT_LE(n_pos, v_pos);
    EXPECT_LE(n_neg, v_neg);
    EXPECT_EQ((v_pos - n_pos) % 2, 0u);
    EXPECT_EQ((v_neg - n_neg) % 2, 0u);
  }
  EXPECT_GT(checked, 200);
}

TEST(QuadformProperty, CharPolyMatchesDeterminantAtSamplePoints) {
  Gen gen(47);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    Matrix m = gen.matrix(n, n);
    UPoly chi(char_poly(m));
    for (int k = 0; k < 3; ++k) {
      Rational x = gen.rational();
      EXPECT_EQ(chi.eval(x), determinant(Matrix::identity(n) * x - m));
    }
  }
}

}  // namespace
}  // namespace sigcount

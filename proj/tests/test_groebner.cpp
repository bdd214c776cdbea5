#include "test_support.hpp"

#include <gtest/gtest.h>

namespace sigcount {
namespace {

using testing::Gen;
using testing::poly;
using testing::polys;

const VarContext X1({"X"});
const VarContext XY({"X", "Y"});

TEST(Buchberger, Examples) {
  auto gb1 = buchberger(polys(X1, {"X^2+1"}), MonomialOrder::lex(1));
  EXPECT_EQ(gb1.generators(), polys(X1, {"X^2+1"}));

  auto shape = polys(XY, {"X - (Y^2 - 3*Y + 1)", "Y^3 - 2*Y + 7"});
  EXPECT_EQ(buchberger(shape, MonomialOrder::lex(2)).generators(), shape);

  auto gb3 = buchberger(polys(XY, {"X^2 + Y^2 - 1", "Y - X"}), MonomialOrder::lex(2));
  EXPECT_EQ(gb3.generators(), polys(XY, {"X - Y", "Y^2 - 1/2"}));
  EXPECT_TRUE(gb3.reduced());
}

TEST(Buchberger, Errors) {
  EXPECT_THROW(buchberger({Polynomial(XY)}, MonomialOrder::lex(2)), std::invalid_argument);
  EXPECT_THROW(buchberger({}, MonomialOrder::lex(2)), std::invalid_argument);
}

TEST(Buchberger, UnitIdeal) {
  auto gb = buchberger(polys(X1, {"X^2", "X - 1"}), MonomialOrder::lex(1));
  EXPECT_TRUE(gb.is_unit());
  EXPECT_EQ(QuotientAlgebra(gb).dim(), 0u);
}

TEST(NormalForm, Examples) {
  auto gb = buchberger(polys(X1, {"X^2+1"}), MonomialOrder::lex(1));
  EXPECT_EQ(normal_form(poly(X1, "X^2"), gb), poly(X1, "-1"));
  EXPECT_TRUE(normal_form(poly(X1, "X^2+1"), gb).is_zero());
  EXPECT_EQ(normal_form(poly(X1, "X^3"), gb), poly(X1, "-X"));
}

TEST(ZeroDimensional, Examples) {
  EXPECT_TRUE(is_zero_dimensional(buchberger(polys(X1, {"X^2+1"}), MonomialOrder::lex(1))));
  auto hyperbola = buchberger(polys(XY, {"X*Y - 1"}), MonomialOrder::degrevlex(2));
  EXPECT_FALSE(is_zero_dimensional(hyperbola));
  EXPECT_EQ(staircase_violation(hyperbola), 0u);
  EXPECT_TRUE(is_zero_dimensional(buchberger(polys(XY, {"X - Y", "2*Y^2 - 1"}), MonomialOrder::lex(2))));
  EXPECT_THROW(QuotientAlgebra{hyperbola}, NotZeroDimensional);
}

TEST(QuotientAlgebra, Examples) {
  QuotientAlgebra a(buchberger(polys(X1, {"X^2+1"}), MonomialOrder::lex(1)));
  EXPECT_EQ(a.basis(), (std::vector<Monomial>{{0}, {1}}));
  EXPECT_EQ(a.variable_matrices().at(0), (Matrix{{0, -1}, {1, 0}}));

  QuotientAlgebra b(buchberger(polys(X1, {"X - 5/3"}), MonomialOrder::lex(1)));
  EXPECT_EQ(b.dim(), 1u);
  EXPECT_EQ(b.variable_matrices().at(0), (Matrix{{Rational(5, 3)}}));

  QuotientAlgebra c(buchberger(polys(XY, {"X - Y", "2*Y^2 - 1"}), MonomialOrder::lex(2)));
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(c.basis(), (std::vector<Monomial>{{0, 0}, {0, 1}}));
}

TEST(MultMatrix, Examples) {
  QuotientAlgebra a(buchberger(polys(X1, {"X^2+1"}), MonomialOrder::lex(1)));
  EXPECT_EQ(mult_matrix(a, poly(X1, "1")), Matrix::identity(2));
  EXPECT_EQ(mult_matrix(a, poly(X1, "X")), (Matrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(mult_matrix(a, poly(X1, "X^2")), Matrix::identity(2) * Rational(-1));
  EXPECT_THROW(mult_matrix(a, poly(XY, "X")), std::invalid_argument);
}

TEST(MultMatrix, ColumnsAreNormalForms) {
  auto gens = polys(XY, {"X^2 + Y^2 - 5", "X*Y - 2"});
  QuotientAlgebra alg(buchberger(gens, MonomialOrder::degrevlex(2)));
  for (std::size_t v = 0; v < 2; ++v) {
    const Matrix& m = alg.variable_matrices()[v];
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Polynomial prod = Polynomial::variable(XY, v) * alg.basis_element(j);
      EXPECT_EQ(m.column(j), alg.coordinates(normal_form(prod, alg.source())));
    }
  }
}

std::vector<std::vector<Polynomial>> random_systems(unsigned seed, int count) {
  Gen gen(seed);
  std::vector<std::vector<Polynomial>> out;
  VarContext c2({"x", "y"}), c3({"x", "y", "z"});
  for (int i = 0; i < count; ++i) {
    if (i % 3 == 2) {
      out.push_back(testing::random_power_system(gen, c3, 2));
    } else {
      out.push_back(testing::random_power_system(gen, c2, static_cast<unsigned>(gen.integer(2, 3))));
    }
  }
  return out;
}

TEST(GroebnerProperty, BuchbergerCriterionAndReducedness) {
  for (const auto& sys : random_systems(31, 15)) {
    for (auto ord : {MonomialOrder::lex(sys[0].arity()), MonomialOrder::degrevlex(sys[0].arity())}) {
      GroebnerBasis gb = buchberger(sys, ord);
      EXPECT_TRUE(satisfies_buchberger_criterion(gb));
      const auto lms = gb.leading_monomials();
      for (std::size_t i = 0; i < gb.generators().size(); ++i) {
        EXPECT_EQ(gb.generators()[i].leading_term(ord).second, Rational(1));
        for (const auto& [m, c] : gb.generators()[i].terms())
          for (std::size_t j = 0; j < lms.size(); ++j)
            if (j != i) { EXPECT_FALSE(divides(lms[j], m)); }
      }
      for (const auto& g : sys) EXPECT_TRUE(ideal_contains(gb, g));
    }
  }
}

TEST(GroebnerProperty, NormalFormIdempotentAndWellDefined) {
  Gen gen(32);
  for (const auto& sys : random_systems(33, 9)) {
    GroebnerBasis gb = buchberger(sys, MonomialOrder::degrevlex(sys[0].arity()));
    const VarContext& ctx = sys[0].context();
    for (int k = 0; k < 10; ++k) {
      Polynomial p = gen.polynomial(ctx, 4, 5);
      Polynomial nf = normal_form(p, gb);
      EXPECT_EQ(normal_form(nf, gb), nf);
      Polynomial shifted = p + sys[0] * gen.polynomial(ctx, 1, 3) + sys.back() * gen.polynomial(ctx, 2, 3);
      EXPECT_EQ(normal_form(shifted, gb), nf);
    }
  }
}

TEST(GroebnerProperty, MultiplicationMatricesCommuteAndMultiply) {
  Gen gen(34);
  for (const auto& sys : random_systems(35, 9)) {
    QuotientAlgebra alg(buchberger(sys, MonomialOrder::degrevlex(sys[0].arity())));
    const auto& vm = alg.variable_matrices();
    for (std::size_t i = 0; i < vm.size(); ++i)
      for (std::size_t j = i + 1; j < vm.size(); ++j) EXPECT_EQ(vm[i] * vm[j], vm[j] * vm[i]);
    for (int k = 0; k < 5; ++k) {
      Polynomial h1 = gen.polynomial(alg.context(), 2, 4), h2 = gen.polynomial(alg.context(), 2, 4);
      EXPECT_EQ(alg.mult_matrix(h1 * h2), alg.mult_matrix(h1) * alg.mult_matrix(h2));
      EXPECT_EQ(alg.mult_matrix(h1), alg.mult_matrix_by_normal_forms(h1));
    }
  }
}

TEST(GroebnerProperty, DimensionIndependentOfOrder) {
  for (const auto& sys : random_systems(36, 12)) {
    const std::size_t n = sys[0].arity();
    QuotientAlgebra lex(buchberger(sys, MonomialOrder::lex(n)));
    QuotientAlgebra drl(buchberger(sys, MonomialOrder::degrevlex(n)));
    EXPECT_EQ(lex.dim(), drl.dim());
  }
  Gen gen(37);
  for (int i = 0; i < 10; ++i) {
    auto s = testing::random_shape_system(gen, 2 + static_cast<std::size_t>(i % 2), 6);
    const std::size_t n = s.context.size();
    EXPECT_EQ(QuotientAlgebra(buchberger(s.system, MonomialOrder::lex(n))).dim(), s.dim());
    EXPECT_EQ(QuotientAlgebra(buchberger(s.system, MonomialOrder::degrevlex(n))).dim(), s.dim());
  }
}

}  // namespace
}  // namespace sigcount

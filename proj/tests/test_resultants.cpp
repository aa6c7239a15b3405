#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace discstrat;
using testing_support::from_roots;
using testing_support::point;

namespace {

UniPoly x_minus(long r) { return UniPoly({BigRational(-r), BigRational(1)}); }

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(DISCSTRAT_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::stringstream s;
  s << in.rdbuf();
  std::string text = s.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

// Distinct rational roots, drawn independently of the library's sampler.
std::vector<BigRational> distinct_roots(std::mt19937_64& rng, std::size_t count) {
  std::vector<BigRational> roots;
  while (roots.size() < count) {
    BigRational r = testing_support::random_rational(rng, 12, 3);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  return roots;
}

}  // namespace

TEST(Sylvester, QuadraticShape) {
  const PolyMatrix m = sylvester_f_fprime(2);
  ASSERT_EQ(m.rows(), 3U);
  const auto vars = coefficient_vars(2);
  auto c = [&](long v) { return MultiPoly::constant(vars, BigRational(v)); };
  const MultiPoly a0 = MultiPoly::variable(vars, 0), a1 = MultiPoly::variable(vars, 1);
  const PolyMatrix expected(3, 3, std::vector<MultiPoly>{c(1), a1, a0, c(2), a1, c(0), c(0), c(2), a1});
  EXPECT_EQ(m, expected);
}

TEST(Sylvester, CornersForAnyDegree) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const PolyMatrix m = sylvester_f_fprime(n);
    ASSERT_EQ(m.rows(), 2 * n - 1);
    EXPECT_EQ(m(0, 0), MultiPoly::constant(coefficient_vars(n), BigRational(1)));
    EXPECT_EQ(m(n - 1, 0), MultiPoly::constant(coefficient_vars(n), BigRational(static_cast<long>(n))));
  }
  EXPECT_THROW(sylvester_f_fprime(1), std::invalid_argument);
}

TEST(Subdiscriminant, ShapesForQuartic) {
  const std::size_t dims[] = {7, 5, 3, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    const PolyMatrix m = subdiscriminant_matrix(4, k);
    EXPECT_EQ(m.rows(), dims[k]);
    EXPECT_EQ(m.cols(), dims[k]);
  }
  EXPECT_THROW(subdiscriminant(4, 4), std::invalid_argument);
}

TEST(Subdiscriminant, Examples) {
  EXPECT_EQ(subdiscriminant(4, 3), MultiPoly::constant(coefficient_vars(4), BigRational(4)));
  EXPECT_EQ(subdiscriminant(3, 0).to_string(), testing_support::kCubicDiscriminant);
  EXPECT_EQ(evaluate(subdiscriminant(4, 2), point({4, 0, 4, 0})), BigRational(-32));
  // -det[[1,0,4],[4,0,8],[0,4,0]] by hand
  RationalMatrix m(3, 3, std::vector<BigRational>{1, 0, 4, 4, 0, 8, 0, 4, 0});
  EXPECT_EQ(-determinant_cofactor(m), BigRational(-32));
}

TEST(Subdiscriminant, LastIsDegree) {
  for (std::size_t n = 2; n <= 7; ++n)
    EXPECT_EQ(subdiscriminant(n, n - 1), MultiPoly::constant(coefficient_vars(n), BigRational(static_cast<long>(n))));
}

TEST(Subdiscriminant, ChainMatchesGcdDegreeOnRootSamples) {
  // D_j(gamma) = 0 for j < d and D_d(gamma) != 0, d = deg gcd(F, F').
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    auto roots = distinct_roots(rng, n);
    const std::size_t distinct = 1 + rng() % n;
    for (std::size_t i = distinct; i < n; ++i) roots[i] = roots[rng() % distinct];
    const UniPoly f = from_roots(roots);
    const auto d = static_cast<std::size_t>(gcd(f, derivative(f)).degree());
    const auto gamma = CoefficientPoint::from_monic(f);
    for (std::size_t j = 0; j < d; ++j) EXPECT_TRUE(is_zero(evaluate(subdiscriminant(n, j), gamma.coords())));
    EXPECT_FALSE(is_zero(evaluate(subdiscriminant(n, d), gamma.coords())));
  }
}

TEST(Discriminant, MatchesPrintedQuarticAndCubic) {
  const MultiPoly printed = testing_support::read_poly(testing_support::kQuarticDiscriminant, coefficient_vars(4));
  EXPECT_EQ(printed.term_count(), 16U);
  EXPECT_EQ(discriminant(4), printed);
  EXPECT_EQ(discriminant(4).term_count(), 16U);
  EXPECT_EQ(discriminant(3).to_string(), testing_support::kCubicDiscriminant);
  EXPECT_EQ(discriminant(2).to_string(), "a_1^2 - 4*a_0");
}

TEST(Discriminant, TermCounts) {
  const std::size_t counts[] = {2, 5, 16, 59, 246};
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(discriminant(n).term_count(), counts[n - 2]) << "n=" << n;
}

TEST(Discriminant, TermCountDegreeSeven) { EXPECT_EQ(discriminant(7).term_count(), 1103U); }

TEST(Discriminant, RootProductOracle) {
  // For monic F with roots r_i: D = prod_{i<j} (r_i - r_j)^2.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    auto roots = distinct_roots(rng, n);
    if (trial % 3 == 0) roots[n - 1] = roots[0];  // repeated root
    BigRational expected(1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) expected *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    const auto gamma = CoefficientPoint::from_monic(from_roots(roots));
    EXPECT_EQ(evaluate(discriminant(n), gamma.coords()), expected) << "n=" << n;
  }
}

TEST(Discriminant, GoldenFiles) {
  for (std::size_t n = 2; n <= 5; ++n)
    EXPECT_EQ(discriminant(n).to_string(), read_golden("discriminant_n" + std::to_string(n) + ".txt")) << n;
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_EQ(subdiscriminant(4, k).to_string(), read_golden("subdiscriminant_n4_k" + std::to_string(k) + ".txt")) << k;
}

TEST(Resultant, Examples) {
  // Sylvester convention: res(p, q) = prod over roots a of p of q(a).
  EXPECT_EQ(resultant(x_minus(1), x_minus(2)), BigRational(-1));
  EXPECT_EQ(resultant(x_minus(2), x_minus(1)), BigRational(1));
  EXPECT_EQ(resultant(x_minus(3) * x_minus(5), UniPoly(BigRational(1))), BigRational(1));
  EXPECT_EQ(resultant(UniPoly(BigRational(2)), UniPoly(BigRational(3))), BigRational(1));
  EXPECT_THROW(resultant(UniPoly(), x_minus(1)), std::invalid_argument);
}

TEST(Resultant, ProductFormulaOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto roots = distinct_roots(rng, 1 + trial % 5);
    const BigRational lc = testing_support::random_rational(rng, 5, 3) + 7;  // nonzero
    const UniPoly p = scale(from_roots(roots), lc);
    const UniPoly q = testing_support::random_unipoly(rng, trial % 4);
    BigRational expected = pow(lc, static_cast<unsigned>(q.degree()));
    for (const auto& r : roots) expected *= evaluate(q, r);
    EXPECT_EQ(resultant(p, q), expected);
  }
}

TEST(Resultant, Multiplicative) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly p = testing_support::random_unipoly(rng, 1 + trial % 5);
    const UniPoly q = testing_support::random_unipoly(rng, trial % 5);
    const UniPoly r = testing_support::random_unipoly(rng, trial % 4);
    EXPECT_EQ(resultant(p, q * r), resultant(p, q) * resultant(p, r));
  }
}

TEST(Resultant, OverPolynomialRingMatchesTShiftedDiscriminant) {
  // res_x(F + t, F') equals D(a_0 + t, a_1, ...) up to the sign (-1)^{n(n-1)/2}.
  const CoefficientPoint gamma = CoefficientPoint::from_monic(x_minus(1) * x_minus(1) * x_minus(1) * x_minus(2));
  const UniPoly r = constant_shift_resultant(gamma);
  EXPECT_EQ(r.valuation(), std::optional<std::size_t>(2));
  for (long t = -3; t <= 3; ++t) {
    std::vector<BigRational> shifted(gamma.coords());
    shifted[0] += t;
    EXPECT_EQ(evaluate(r, BigRational(t)), evaluate(discriminant(4), shifted));  // sign (+1) for n = 4
  }
}

TEST(Gcd, Examples) {
  const UniPoly f = x_minus(1) * x_minus(1) * x_minus(-2);
  const auto [g, fc, dc] = gcd_and_cofactors(f, derivative(f));
  EXPECT_EQ(g, x_minus(1));
  EXPECT_EQ(g * fc, f);
  EXPECT_EQ(g * dc, derivative(f));

  const UniPoly x4 = UniPoly::monomial(BigRational(1), 4);
  EXPECT_EQ(gcd(x4, derivative(x4)), UniPoly::monomial(BigRational(1), 3));

  const UniPoly x2p1({BigRational(1), BigRational(0), BigRational(1)});
  const UniPoly x = UniPoly::monomial(BigRational(1), 1);
  const auto coprime = gcd_and_cofactors(x2p1, x);
  EXPECT_EQ(coprime.gcd, UniPoly(BigRational(1)));
  EXPECT_EQ(coprime.p_cofactor, x2p1);
  EXPECT_EQ(coprime.q_cofactor, x);
  EXPECT_THROW(gcd(UniPoly(), UniPoly()), std::invalid_argument);
}

TEST(Gcd, EuclidMatchesSubresultantPrs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const UniPoly common = testing_support::random_unipoly(rng, trial % 3);
    const UniPoly a = common * testing_support::random_unipoly(rng, 1 + trial % 4);
    const UniPoly b = common * testing_support::random_unipoly(rng, trial % 5);
    const UniPoly g = gcd(a, b);
    EXPECT_EQ(g, gcd_subresultant(a, b));
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(divrem(a, g).second.is_zero());
    EXPECT_TRUE(divrem(b, g).second.is_zero());
    EXPECT_GE(g.degree(), common.degree());
  }
}

TEST(Squarefree, Examples) {
  const UniPoly p1({BigRational(1), BigRational(0), BigRational(-2), BigRational(0), BigRational(1)});
  const auto d1 = squarefree_decomposition(p1);
  ASSERT_EQ(d1.size(), 1U);
  EXPECT_EQ(d1[0].factor, x_minus(1) * x_minus(-1));
  EXPECT_EQ(d1[0].multiplicity, 2U);

  const UniPoly p2({BigRational(6), BigRational(-17), BigRational(17), BigRational(-7), BigRational(1)});
  const auto d2 = squarefree_decomposition(p2);
  ASSERT_EQ(d2.size(), 2U);
  EXPECT_EQ(d2[0], (SquarefreeFactor{x_minus(2) * x_minus(3), 1}));
  EXPECT_EQ(d2[1], (SquarefreeFactor{x_minus(1), 2}));

  const auto d3 = squarefree_decomposition(UniPoly::monomial(BigRational(1), 5));
  ASSERT_EQ(d3.size(), 1U);
  EXPECT_EQ(d3[0], (SquarefreeFactor{UniPoly::monomial(BigRational(1), 1), 5}));
  EXPECT_THROW(squarefree_decomposition(scale(p1, BigRational(2))), std::invalid_argument);
}

TEST(Squarefree, ReconstructionAndRootCount) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    auto roots = distinct_roots(rng, n);
    const std::size_t distinct = 1 + rng() % n;
    for (std::size_t i = distinct; i < n; ++i) roots[i] = roots[rng() % distinct];
    const UniPoly f = from_roots(roots);
    const auto dec = squarefree_decomposition(f);
    UniPoly rebuilt(BigRational(1));
    std::size_t degree_sum = 0, squarefree_degree = 0;
    for (const auto& [factor, mult] : dec) {
      rebuilt = rebuilt * pow(factor, mult);
      degree_sum += mult * static_cast<std::size_t>(factor.degree());
      squarefree_degree += static_cast<std::size_t>(factor.degree());
      EXPECT_TRUE(factor.is_monic());
      EXPECT_EQ(gcd(factor, derivative(factor)).degree(), 0);
    }
    EXPECT_EQ(rebuilt, f);
    EXPECT_EQ(degree_sum, n);
    EXPECT_EQ(distinct_root_count(f), squarefree_degree);
    EXPECT_EQ(distinct_root_count(f), distinct);
  }
}

TEST(DistinctRootCount, Examples) {
  EXPECT_EQ(distinct_root_count(UniPoly({24, -50, 35, -10, 1})), 4U);
  EXPECT_EQ(distinct_root_count(UniPoly({1, -4, 6, -4, 1})), 1U);
  EXPECT_EQ(distinct_root_count(UniPoly({4, 0, 4, 0, 1})), 2U);
  EXPECT_THROW(distinct_root_count(UniPoly({1, 2})), std::invalid_argument);
}

TEST(Cache, ConcurrentAccessYieldsOneValue) {
  std::vector<const MultiPoly*> seen(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < seen.size(); ++i) pool.emplace_back([&, i] { seen[i] = &subdiscriminant(5, 1); });
  }
  for (const auto* p : seen) EXPECT_EQ(p, seen[0]);
}

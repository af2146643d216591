#include "support.hpp"

#include <gtest/gtest.h>

using namespace fwsa;

namespace {

LabeledSet zeros(std::size_t n) { return LabeledSet(std::vector<Element>(n, Element{0})); }

RationalSeries univariate(const std::vector<long>& c) {
  RationalSeries s{FiniteAbelianGroup::trivial(), c.size() - 1, false, {}};
  for (std::size_t n = 0; n < c.size(); ++n) s.set({static_cast<std::uint32_t>(n)}, Cyclotomic(c[n]));
  return s;
}

}  // namespace

TEST(Series, MultinomialAndDegrees) {
  EXPECT_EQ(multinomial({2, 1, 1}), 12);
  EXPECT_EQ(multinomial({0, 0}), 1);
  EXPECT_EQ(multidegrees_upto(parse_group("Z2"), 3).size(), 10u);
  EXPECT_EQ(format_multidegree({1, 0, 2}), "1,0,2");
}

TEST(Series, TruncatedSeriesOfProjective) {
  const auto s = truncated_series(*principal_projective(FiniteAbelianGroup::trivial(), zeros(2), Category::fs), 6, false);
  // surjections onto a 2-set: 2^n - 2
  for (std::uint32_t n = 2; n <= 6; ++n) EXPECT_EQ(s.coeff({n}), Cyclotomic((1L << n) - 2));
  EXPECT_EQ(s.coeff({1}), Cyclotomic(0));
  const auto w = truncated_series(*v0_bar(parse_group("Z2")), 4, true);
  const auto u = truncated_series(*v0_bar(parse_group("Z2")), 4, false);
  EXPECT_EQ(reweighted(u, true), w);
  EXPECT_EQ(reweighted(w, false), u);
}

TEST(Series, MultiplyDivideInverse) {
  const auto a = parse_group("Z2");
  const auto s = truncated_series(*v0_bar(a), 6, false);
  for (const auto& f : candidate_factors(a, 2)) EXPECT_EQ(divide_by_factor(multiply_by_factor(s, f), f), s);
}

TEST(Series, CandidateFactors) {
  const auto a = parse_group("Z2");
  // a = 0: ζ = 1; a = 1: ζ = ±1, so the signs collapse; j = 1..4
  EXPECT_EQ(candidate_factors(a).size(), 16u);
  EXPECT_EQ(candidate_factors(FiniteAbelianGroup::trivial(), 2).size(), 4u);
}

TEST(BerlekampMassey, RecoversLinearRecurrences) {
  std::vector<Cyclotomic> fib{Cyclotomic(1), Cyclotomic(1)};
  for (int i = 0; i < 10; ++i) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const auto [c, l] = berlekamp_massey(fib);
  EXPECT_EQ(l, 2u);
  EXPECT_EQ(c[1], Cyclotomic(-1));
  EXPECT_EQ(c[2], Cyclotomic(-1));
  const auto [c0, l0] = berlekamp_massey(std::vector<Cyclotomic>(6, Cyclotomic(0)));
  EXPECT_EQ(l0, 0u);
}

TEST(Fit, TwoPointProjectiveOverFS) {
  const auto s = truncated_series(*principal_projective(FiniteAbelianGroup::trivial(), zeros(2), Category::fs), 12, false);
  FitOptions opt;
  opt.jmax = 2;
  const auto r = fit_rational(s, opt);
  ASSERT_TRUE(r.fit.has_value());
  EXPECT_EQ(r.fit->numerator.coeffs.size(), 1u);
  EXPECT_EQ(r.fit->numerator.coeff({2}), Cyclotomic(2));
  std::vector<Cyclotomic> poles;
  for (const auto& f : r.fit->factors) poles.push_back(f.c);
  ASSERT_EQ(poles.size(), 2u);
  EXPECT_TRUE((poles[0] == Cyclotomic(1) && poles[1] == Cyclotomic(2)) ||
              (poles[0] == Cyclotomic(2) && poles[1] == Cyclotomic(1)));
  EXPECT_GE(r.fit->guard_verified, 3u);
  EXPECT_EQ(expand(*r.fit), s);
  EXPECT_EQ(specialize_univariate(*r.fit).expand(12), specialize_univariate(s));
}

TEST(Fit, TailSeriesPoleAtOne) {
  // v0tilde over the trivial group is 1 in every size >= 3: t^3 / (1 - t).
  const auto s = truncated_series(*v0_tilde(FiniteAbelianGroup::trivial()), 10, false);
  const auto r = fit_rational(s);
  ASSERT_TRUE(r.fit.has_value());
  ASSERT_EQ(r.fit->factors.size(), 1u);
  EXPECT_EQ(r.fit->factors[0].c, Cyclotomic(1));
  EXPECT_EQ(r.fit->numerator.coeff({3}), Cyclotomic(1));
}

TEST(Fit, BivariateV0BarReexpands) {
  const auto a = parse_group("Z2");
  const auto s = truncated_series(*v0_bar(a), 10, false);
  const auto r = fit_rational(s);
  ASSERT_TRUE(r.fit.has_value());
  EXPECT_EQ(expand(*r.fit), s);
  EXPECT_GE(r.fit->guard_verified, 3u);
}

TEST(Fit, ReportsFailureOutsideCandidateFamily) {
  std::vector<long> c(11);
  long p = 1;
  for (auto& v : c) v = p, p *= 3;
  const auto r = fit_rational(univariate(c), FitOptions{3, 3, 12, false, 2});
  EXPECT_FALSE(r.fit.has_value());
  FitOptions bad;
  bad.guard = 1;
  EXPECT_THROW(fit_rational(univariate(c), bad), ValidationError);
}

#include "support.hpp"

#include <gtest/gtest.h>

using namespace fwsa;
using fwsa::testing::brute_hom_count;
using fwsa::testing::functoriality_failures;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

LabeledSet zeros(std::size_t n) { return LabeledSet(std::vector<Element>(n, Element{0})); }

}  // namespace

TEST(Projective, DimensionsAreHomCounts) {
  const auto a = parse_group("Z2");
  for (const auto& x : enumerate_objects_upto(a, 2)) {
    const auto pt = principal_projective(a, x, Category::tws);
    const auto pf = principal_projective(a, x, Category::fws);
    for (const auto& y : enumerate_objects_upto(a, 4)) {
      const std::size_t n = brute_hom_count(a, y, x);
      EXPECT_EQ(pf->dim(y), n);
      EXPECT_EQ(pt->dim(y), n * ipow(a.order(), y.size()));
    }
  }
  // FS: surjections from a 4-set onto a 2-set.
  EXPECT_EQ(principal_projective(a, zeros(2), Category::fs)->dim(zeros(4)), 14u);
}

TEST(Projective, YonedaActionOnIdentity) {
  const auto a = parse_group("Z3");
  const auto x = parse_labels(a, "1,2");
  const Projective p(a, x, Category::tws);
  const auto y = parse_labels(a, "1,1,0");
  for (const auto& f : hom_tws(a, y, x)) {
    // f^* sends the basis vector id_X to the basis vector f.
    const Matrix m = p.act(f);
    const auto col = m.column(p.index_of(identity_tws(x)));
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col[0].first, p.index_of(f));
  }
}

TEST(Functoriality, AllConstructions) {
  const auto z2 = parse_group("Z2");
  const auto z3 = parse_group("Z3");
  const auto one = parse_labels(z2, "1");
  struct Case {
    ModulePtr m;
    std::size_t n;
  };
  const std::vector<Case> cases = {
      {principal_projective(z2, parse_labels(z2, "1,1"), Category::tws), 4},
      {principal_projective(z2, parse_labels(z2, "0,1"), Category::fws), 4},
      {principal_projective(z2, zeros(2), Category::fsA), 4},
      {principal_projective(z2, zeros(2), Category::fs), 4},
      {v0_tilde(z2), 5},
      {v0_bar(z2), 5},
      {v0_tilde(z3), 4},
      {v0_bar(z3), 4},
      {shift(v0_bar(z2), Element{1}), 4},
      {convolve(principal_projective(z2, one, Category::tws), principal_projective(z2, one, Category::tws)), 3},
      {coinvariants(v0_bar(z2)), 4},
      {pushforward_u(coinvariants(v0_bar(z2))), 4},
      {fourier(principal_projective(z2, zeros(2), Category::fsA)), 4},
      {restrict_to_fws(v0_bar(z3)), 4},
      {restrict_to_fsa(v0_tilde(z2)), 4},
      {direct_sum({v0_bar(z2), v0_tilde(z2)}), 4},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(functoriality_failures(*c.m, c.n, 150, 42), 0u) << c.m->name();
  }
}

TEST(V0, DimensionsAndQuotientNaturality) {
  const auto a = parse_group("Z2");
  const auto vt = v0_tilde(a);
  const auto vb = v0_bar(a);
  EXPECT_EQ(vt->dim(parse_labels(a, "0,0,0")), 4u);
  EXPECT_EQ(vt->dim(parse_labels(a, "0,0")), 0u);
  EXPECT_EQ(vt->dim(parse_labels(a, "1,0,0")), 0u);
  EXPECT_EQ(vb->dim(parse_labels(a, "1,1,0")), 1u);
  EXPECT_EQ(vb->dim(parse_labels(a, "0,0,0")), 4u);
  EXPECT_EQ(vb->dim(parse_labels(a, "0")), 1u);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto x = fwsa::testing::random_object(a, 3 + t % 3, rng);
    const auto m = fwsa::testing::random_morphism(a, x, rng);
    EXPECT_EQ(vb->act(m) * v0_quotient_map(a, m.target()), v0_quotient_map(a, m.source()) * vt->act(m));
  }
}

TEST(Shift, ValueIsPrefixedObject) {
  const auto a = parse_group("Z3");
  const auto m = v0_bar(a);
  const auto s = shift(m, Element{2});
  for (const auto& x : enumerate_objects_upto(a, 3)) EXPECT_EQ(s->dim(x), m->dim(x.with_prefix(Element{2})));
  EXPECT_THROW(shift(principal_projective(a, parse_labels(a, "0"), Category::fsA), Element{1}), CategoryError);
}

TEST(Convolution, ProjectivesConvolveToDisjointUnion) {
  const auto a = parse_group("Z2");
  for (const auto& x : enumerate_objects_upto(a, 2)) {
    for (const auto& y : enumerate_objects_upto(a, 2)) {
      const auto c = convolve(principal_projective(a, x, Category::tws), principal_projective(a, y, Category::tws));
      std::vector<Element> xy = x.labels();
      xy.insert(xy.end(), y.labels().begin(), y.labels().end());
      const auto p = principal_projective(a, LabeledSet(xy), Category::tws);
      for (const auto& z : enumerate_objects_upto(a, 4)) EXPECT_EQ(c->dim(z), p->dim(z));
    }
  }
}

TEST(Coinvariants, V0BarClosedForm) {
  const auto a = parse_group("Z2");
  const auto c = coinvariants(v0_bar(a));
  EXPECT_EQ(c->category(), Category::fws);
  for (const auto& x : enumerate_objects_upto(a, 5)) {
    EXPECT_EQ(c->dim(x), x.size() >= 1 && x.total(a).id == 0 ? 1u : 0u) << format_labels(a, x);
  }
  const auto p = pushforward_u(c);
  EXPECT_EQ(p->dim(zeros(3)), 4u);
  EXPECT_THROW(pushforward_u(v0_bar(a)), CategoryError);
}

TEST(Fourier, IsotypicDecomposition) {
  const auto a = parse_group("Z2");
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto m = principal_projective(a, zeros(k), Category::fsA);
    const auto fm = std::make_shared<Fourier>(m);
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto labelings = all_labelings(a, n);
      std::size_t total = 0;
      Matrix sum(m->dim(zeros(n)), m->dim(zeros(n)));
      for (const auto& l : labelings) {
        total += fm->dim(l);
        const Matrix& p = fm->projector(l);
        sum = sum + p;
        EXPECT_EQ(p * p, p);
        for (const auto& l2 : labelings) {
          if (l2 != l) EXPECT_TRUE((p * fm->projector(l2)).is_zero_matrix());
        }
      }
      EXPECT_EQ(total, m->dim(zeros(n)));
      EXPECT_EQ(sum, Matrix::identity(m->dim(zeros(n))));
    }
  }
}

TEST(Restriction, DimensionsAgree) {
  const auto a = parse_group("Z2");
  const auto m = v0_bar(a);
  const auto r = restrict_to_fws(m);
  const auto s = restrict_to_fsa(m);
  for (const auto& x : enumerate_objects_upto(a, 3)) EXPECT_EQ(r->dim(x), m->dim(x));
  EXPECT_EQ(s->dim(zeros(3)), m->dim(zeros(3)));
  EXPECT_THROW(s->dim(parse_labels(a, "1,1")), CategoryError);
}

TEST(Module, CategoryChecks) {
  const auto a = parse_group("Z2");
  EXPECT_THROW(zero_module(a, Category::fs), CategoryError);
  const auto f = principal_projective(a, parse_labels(a, "1"), Category::fws);
  TwsMorphism m = identity_tws(parse_labels(a, "1"));
  m.pointing[0] = Element{1};
  EXPECT_THROW(f->act(m), CategoryError);
  TwsMorphism bad = identity_tws(parse_labels(a, "1,0"));
  bad.base.map = {0, 0};
  EXPECT_THROW(f->act(bad), ValidationError);
  EXPECT_THROW(convolve(v0_bar(a), f), CategoryError);
  EXPECT_THROW(coinvariants(f), CategoryError);
}

TEST(ModuleSpec, ParsesNestedExpressions) {
  const auto a = parse_group("Z2");
  EXPECT_EQ(parse_module(a, "push:coinv:v0bar")->name(), "push(coinv(v0bar))");
  EXPECT_EQ(parse_module(a, "conv:ppx:1:ppx:0")->category(), Category::tws);
  EXPECT_EQ(parse_module(a, "ppx:0,0:fsA")->category(), Category::fsA);
  EXPECT_EQ(parse_module(a, "shift:1:v0bar")->dim(parse_labels(a, "1")), 1u);
  EXPECT_THROW(parse_module(a, "v0bar:extra"), ParseError);
  EXPECT_THROW(parse_module(a, "conv:v0bar"), ParseError);
  EXPECT_THROW(parse_module(a, "nope"), ParseError);
  EXPECT_THROW(parse_module(a, "ppx:5"), ValidationError);
}

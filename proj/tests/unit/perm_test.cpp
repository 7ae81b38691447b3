#include <gtest/gtest.h>

#include <random>

#include "origami/error.hpp"
#include "origami/perm.hpp"
#include "support.hpp"

using namespace origami;
using testing_support::random_odd;
using testing_support::random_perm;
using testing_support::random_sperm;

namespace {

Perm cyc(std::size_t n, std::string_view text) { return parse_perm(text, n); }

}  // namespace

TEST(Perm, ComposeAppliesRightFactorFirst) {
  EXPECT_EQ(cyc(3, "(1 2)") * cyc(3, "(2 3)"), cyc(3, "(1 2 3)"));
  EXPECT_EQ(to_string(cyc(3, "(1 2)") * cyc(3, "(2 3)")), "(1 2 3)");
}

TEST(Perm, IdentityIsNeutral) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    Perm q = random_perm(7, rng);
    EXPECT_EQ(Perm(7) * q, q);
    EXPECT_EQ(q * Perm(7), q);
  }
}

TEST(Perm, SignedInvolutionSquaresToIdentity) {
  SPerm p = parse_sperm("(+1 -1)", 1);
  EXPECT_TRUE((p * p).is_identity());
}

TEST(Perm, DegreeMismatchThrows) { EXPECT_THROW(Perm(2) * Perm(3), DegreeMismatch); }

TEST(Perm, CyclesAreSortedAndIncludeFixedPoints) {
  auto c = cycles(cyc(4, "(1 2 3)"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (Cycle{0, 1, 2}));
  EXPECT_EQ(c[1], (Cycle{3}));
  EXPECT_EQ(cycles(Perm(3)).size(), 3u);
  auto n = cycles(SPerm::sign_inversion(2));
  ASSERT_EQ(n.size(), 2u);
  EXPECT_EQ(n[0], (std::vector<Label>{1, -1}));
  EXPECT_EQ(n[1], (std::vector<Label>{2, -2}));
}

TEST(Perm, CyclesRebuildThePermutation) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    Perm p = random_perm(1 + rng() % 12, rng);
    auto cs = cycles(p);
    std::size_t total = 0;
    for (const auto& c : cs) total += c.size();
    EXPECT_EQ(total, p.degree());
    EXPECT_EQ(Perm::from_cycles(p.degree(), cs), p);
  }
}

TEST(Perm, AssociativeAndInverse) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    Perm a = random_perm(9, rng), b = random_perm(9, rng), c = random_perm(9, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
  }
}

TEST(Perm, Transitivity) {
  std::vector<Perm> g{cyc(3, "(1 2)"), cyc(3, "(2 3)")};
  EXPECT_TRUE(is_transitive(g, 3));
  std::vector<Perm> id{Perm(2)};
  EXPECT_FALSE(is_transitive(id, 2));
  std::vector<SPerm> s{parse_sperm("(+1 -1)(+2 -2)", 2), SPerm::sign_inversion(2)};
  EXPECT_FALSE(is_transitive(s));
}

TEST(Perm, OddIffCommutesWithSignInversion) {
  std::mt19937_64 rng(14);
  const SPerm n = SPerm::sign_inversion(3);
  int odd_seen = 0;
  for (int i = 0; i < 300; ++i) {
    SPerm f = (i % 3 == 0) ? random_odd(3, rng) : random_sperm(3, rng);
    EXPECT_EQ(f.odd(), f * n == n * f);
    odd_seen += f.odd();
  }
  EXPECT_GT(odd_seen, 50);
}

TEST(Perm, CentralizerOfNothingIsWholeGroup) {
  auto gens = centralizer(std::vector<SPerm>{}, 1, Ambient::full);
  EXPECT_EQ(testing_support::group_order(gens, 1), 2u);
}

TEST(Perm, CentralizerOfSignInversionIsOddGroup) {
  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<SPerm> n{SPerm::sign_inversion(d)};
    auto gens = centralizer(n, d, Ambient::full);
    std::size_t expected = 1;
    for (std::size_t k = 1; k <= d; ++k) expected *= 2 * k;
    EXPECT_EQ(testing_support::group_order(gens, d), expected);
    for (const auto& g : gens) EXPECT_TRUE(g.odd());
  }
}

TEST(Perm, CentralizerGeneratorsCommute) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    std::vector<SPerm> gens{testing_support::random_fpf_involution(4, rng), testing_support::random_fpf_involution(4, rng)};
    for (auto amb : {Ambient::full, Ambient::odd}) {
      for (const auto& c : centralizer(gens, 4, amb)) {
        for (const auto& g : gens) EXPECT_EQ(c * g, g * c);
        if (amb == Ambient::odd) EXPECT_TRUE(c.odd());
      }
    }
  }
}

TEST(Perm, SimultaneousConjugacyExamples) {
  std::vector<SPerm> a{parse_sperm("(+1 -1)", 1)};
  auto w = simultaneous_conjugacy(a, a, ConjugacyConstraint::none);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->is_identity());

  std::vector<SPerm> A{parse_sperm("(+1 -2)(-1 +2)", 2)};
  std::vector<SPerm> B{parse_sperm("(+2 -1)(-2 +1)", 2)};
  auto v = simultaneous_conjugacy(A, B, ConjugacyConstraint::none);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(conjugate(A[0], *v), B[0]);
}

TEST(Perm, SimultaneousConjugacyFindsRandomConjugates) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = 2 + rng() % 5;
    std::vector<SPerm> a;
    do {
      a = {random_sperm(d, rng), random_sperm(d, rng)};
    } while (!is_transitive(a));
    for (auto constraint : {ConjugacyConstraint::none, ConjugacyConstraint::odd}) {
      SPerm g = constraint == ConjugacyConstraint::odd ? random_odd(d, rng) : random_sperm(d, rng);
      std::vector<SPerm> b{conjugate(a[0], g), conjugate(a[1], g)};
      auto w = simultaneous_conjugacy(a, b, constraint);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(conjugate(a[0], *w), b[0]);
      EXPECT_EQ(conjugate(a[1], *w), b[1]);
      if (constraint == ConjugacyConstraint::odd) EXPECT_TRUE(w->odd());
    }
  }
}

TEST(Perm, SimultaneousConjugacyRejectsDifferentCycleTypes) {
  std::vector<Perm> a{cyc(4, "(1 2)")}, b{cyc(4, "(1 2 3)")};
  EXPECT_FALSE(simultaneous_conjugacy(a, b).has_value());
}

TEST(PermText, RoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    Perm p = random_perm(1 + rng() % 9, rng);
    EXPECT_EQ(parse_perm(to_string(p), p.degree()), p);
    SPerm s = random_sperm(1 + rng() % 5, rng);
    EXPECT_EQ(parse_sperm(to_string(s), s.degree()), s);
  }
}

TEST(PermText, SyntaxErrorsCarryPositions) {
  try {
    parse_perm("(1 2)(2 3)", 3);
    FAIL() << "repeated point accepted";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_perm("(1 0)"), SyntaxError);
  EXPECT_THROW(parse_perm("(1 5)", 3), SyntaxError);
  EXPECT_THROW(parse_perm("(1 2"), SyntaxError);
  EXPECT_THROW(parse_sperm("(+1 -1)(+1 +2)", 2), SyntaxError);
}

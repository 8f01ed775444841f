#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "packdom/bounds.hpp"
#include "packdom/errors.hpp"
#include "packdom/generators.hpp"

using namespace packdom;

namespace {

bool pairwise_congruent(const std::vector<std::vector<int>>& dist, const std::vector<int>& set,
                        int r, int m) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (dist[set[a]][set[b]] % m != r) return false;
  return true;
}

std::vector<int> leaf_list(const Graph& t) {
  std::vector<int> out;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<int> support_list(const Graph& t) {
  std::vector<int> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    bool s = false;
    for (auto w : t.neighbors(v)) s = s || t.degree(w) == 1;
    if (s) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

TEST(Rationals, FloorCeilAndSqrt) {
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil_of(Rational(6, 3)), 2);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  for (std::int64_t x = 0; x < 20000; ++x) {
    const std::int64_t r = isqrt(x);
    ASSERT_LE(r * r, x);
    ASSERT_GT((r + 1) * (r + 1), x);
  }
  const std::int64_t big = 3037000499LL;
  EXPECT_EQ(isqrt(big * big), big);
  EXPECT_EQ(isqrt(big * big - 1), big - 1);
}

TEST(SurdBound, IntegerBoundaryIsExact) {
  // (9 - 2*3 + 2 + 1)/2 = 3 exactly.
  SurdBound b = ub_thm5(9, 2);
  EXPECT_TRUE(b.is_integer());
  EXPECT_TRUE(b.admits(3));
  EXPECT_FALSE(b.admits(4));
  EXPECT_TRUE(b.at_most(3));
  EXPECT_FALSE(b.at_most(2));
  EXPECT_EQ(b.floor(), 3);
  EXPECT_NE(b.to_string().find("= 3"), std::string::npos);

  SurdBound h = ub_henning(4);  // (4 + 3 - 4)/2 = 3/2
  EXPECT_FALSE(h.is_integer());
  EXPECT_EQ(h.floor(), 1);
  EXPECT_TRUE(h.below(2));
  EXPECT_DOUBLE_EQ(h.to_double(), 1.5);
}

TEST(SurdBoundProperty, AgreesWithLongDouble) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 20000; ++round) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000000);
    const int d = 2 + static_cast<int>(rng() % 6);
    SurdBound b = ub_thm5(n, d);
    const long double v = (n - 2 * std::sqrt(static_cast<long double>(n)) + d + 1) / d;
    const std::int64_t f = b.floor();
    EXPECT_EQ(f, static_cast<std::int64_t>(std::floor(v + 1e-12L))) << n << " " << d;
    EXPECT_TRUE(b.admits(f));
    EXPECT_FALSE(b.admits(f + 1));
  }
}

TEST(Bounds, Formulas) {
  EXPECT_EQ(lb_thm1(10, 2, 2), Rational(10, 5));
  EXPECT_EQ(lb_thm2(10, 2, 2), Rational(10, 5));
  EXPECT_EQ(bounds_thm3(10, 2, 2), (IntegerBracket{2, 3}));
  EXPECT_THROW(lb_thm1(3, 2, 0), InputError);
  EXPECT_THROW(bounds_thm3(1, 0, 0), InputError);
  EXPECT_THROW(ub_thm5(4, 1), InputError);
  EXPECT_THROW(ub_henning(2), InputError);
  EXPECT_EQ(clamp_to_one(-3), 1);
}

TEST(Bounds, HenningComparison) {
  std::mt19937 rng(42);
  for (int round = 0; round < 5000; ++round) {
    const std::int64_t n = 3 + rng() % 5000;
    const std::int64_t s = 1 + rng() % (n / 2 + 1);
    auto c = compare_thm3_henning(n, s);
    const long double hen = (n + 3 - 2 * std::sqrt(static_cast<long double>(n))) / 2;
    const long double raw = static_cast<long double>(n + 3 * s - 1) / 5;
    EXPECT_EQ(c.thm3_upper, (n + 3 * s - 1) / 5);
    if (std::fabs(raw - hen) > 1e-9L) EXPECT_EQ(c.thm3_raw_smaller, raw < hen) << n << " " << s;
    if (std::fabs(c.thm3_upper - hen) > 1e-9L)
      EXPECT_EQ(c.thm3_smaller, c.thm3_upper < hen) << n << " " << s;
  }
}

TEST(BoundsProperty, ExactValuesRespectEveryBound) {
  std::mt19937 rng(43);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 13;
    Graph t = oracle::random_tree(n, rng);
    const auto l = static_cast<std::int64_t>(oracle::count_leaves(t));
    const auto s = static_cast<std::int64_t>(oracle::count_supports(t));
    const auto nn = static_cast<std::int64_t>(n);
    const int g20 = *oracle::gamma(t, 2, 0);
    const int g22 = *oracle::gamma(t, 2, 2);
    const int d = 2 + static_cast<int>(rng() % 3);
    const int gd0 = *oracle::gamma(t, d, 0);
    const auto gd2 = oracle::gamma(t, d, 2);
    EXPECT_GE(Rational(gd0), lb_thm1(nn, l, d));
    EXPECT_GE(Rational(g20), lb_thm2(nn, l, s));
    auto br = bounds_thm3(nn, l, s);
    EXPECT_GE(g22, br.lower);
    EXPECT_LE(g22, br.upper) << serialize_edge_list(t);
    ASSERT_TRUE(gd2.has_value());
    EXPECT_TRUE(ub_thm5(nn, d).admits(*gd2)) << serialize_edge_list(t);
    if (n >= 3) EXPECT_TRUE(ub_henning(nn).admits(g22));

    BoundsReport rep = bounds_report(t, d);
    EXPECT_TRUE(rep.all_hold());
    EXPECT_EQ(rep.stats.leaves, static_cast<std::size_t>(l));
  }
}

TEST(BoundsProperty, FamilyMembershipMatchesDefinition) {
  std::mt19937 rng(44);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 16;
    Graph t = oracle::random_tree(n, rng);
    const auto dist = oracle::floyd(t);
    for (int d = 1; d <= 3; ++d) {
      const bool td = n == 1 || pairwise_congruent(dist, leaf_list(t), 2 * d, 2 * d + 1);
      EXPECT_EQ(in_family_Td(t, d), td) << serialize_edge_list(t) << " d=" << d;
    }
    bool star = false;
    for (Vertex v = 0; v < n; ++v) star = star || (n >= 3 && t.degree(v) == n - 1);
    const bool f2 = n == 1 || (!star && pairwise_congruent(dist, support_list(t), 2, 5));
    EXPECT_EQ(in_family_F2(t), f2) << serialize_edge_list(t);
  }
}

TEST(Bounds, EqualityAuditOnKnownMembers) {
  // A T_2 spider: legs of length 2 + 5m.
  const std::vector<std::size_t> mult{0, 0, 1};
  Graph t = make_Td_spider(2, mult);
  EXPECT_TRUE(in_family_Td(t, 2));
  EqualityAudit a = equality_audit(t, 2);
  EXPECT_TRUE(a.consistent());
  EXPECT_TRUE(a.thm1_equality);
  EXPECT_EQ(a.gammad0, *oracle::gamma(t, 2, 0));
}

TEST(Bounds, ConjectureProbe) {
  Graph t = make_path(20);
  EXPECT_THROW(conjecture_probe(t, 3, 2), InputError);
  EXPECT_THROW(conjecture_probe(t, 3, 4), InputError);
  ConjectureProbe pr = conjecture_probe(t, 3, 3);
  ASSERT_TRUE(pr.outcome.has_value());
  EXPECT_EQ(pr.outcome.gamma, *oracle::gamma(t, 3, 3));
  EXPECT_EQ(pr.holds, pr.bound.admits(pr.outcome.gamma));
}

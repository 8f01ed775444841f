#include "packdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "packdom/errors.hpp"
#include "packdom/tree_dp.hpp"

namespace packdom {

namespace {

using Wide = __int128;

void require_tree(const Graph& tree, const char* who) {
  if (!is_tree(tree)) throw InputError(std::string(who) + " requires a tree");
}

bool is_star_with_two_or_more_leaves(const Graph& tree) {
  if (tree.order() < 3) return false;
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) + 1 == tree.order()) return true;
  }
  return false;
}

bool pairwise_distances_congruent(const Graph& tree, const VertexSet& members, int residue,
                                  int modulus) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto dist = bfs_distances(tree, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (dist[members[j]] % modulus != residue) return false;
    }
  }
  return true;
}

}  // namespace

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw InputError("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<Wide>(r) * r > x) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool SurdBound::admits(std::int64_t gamma) const {
  // denom*gamma <= base - coeff*sqrt(r)  <=>  coeff*sqrt(r) <= x
  const Wide x = static_cast<Wide>(base) - static_cast<Wide>(denom) * gamma;
  return x >= 0 && x * x >= static_cast<Wide>(coeff) * coeff * radicand;
}

bool SurdBound::at_most(std::int64_t t) const {
  // base - coeff*sqrt(r) <= denom*t  <=>  y <= coeff*sqrt(r)
  const Wide y = static_cast<Wide>(base) - static_cast<Wide>(denom) * t;
  return y <= 0 || y * y <= static_cast<Wide>(coeff) * coeff * radicand;
}

std::int64_t SurdBound::floor() const {
  auto guess = static_cast<std::int64_t>(std::floor(to_double()));
  while (!admits(guess)) --guess;
  while (admits(guess + 1)) ++guess;
  return guess;
}

bool SurdBound::is_integer() const { return at_most(floor()); }

double SurdBound::to_double() const {
  return (static_cast<double>(base) -
          static_cast<double>(coeff) * std::sqrt(static_cast<double>(radicand))) /
         static_cast<double>(denom);
}

std::string SurdBound::to_string() const {
  std::ostringstream out;
  out << "(" << base << " - " << coeff << "*sqrt(" << radicand << "))/" << denom;
  if (is_integer()) out << " = " << floor();
  return out.str();
}

Rational lb_thm1(std::int64_t n, std::int64_t leaves, int d) {
  if (d < 1) throw InputError("lb_thm1 needs d >= 1");
  return Rational(n - d * leaves + 2 * d, 2 * d + 1);
}

Rational lb_thm2(std::int64_t n, std::int64_t leaves, std::int64_t supports) {
  return Rational(n - leaves - supports + 4, 5);
}

IntegerBracket bounds_thm3(std::int64_t n, std::int64_t leaves, std::int64_t supports) {
  if (n < 2) throw InputError("bounds_thm3 needs n >= 2");
  return {ceil_of(Rational(n - leaves - supports + 4, 5)), floor_of(Rational(n + 3 * supports - 1, 5))};
}

SurdBound ub_thm5(std::int64_t n, int d) {
  if (d < 2) throw InputError("ub_thm5 needs d >= 2");
  if (n < 1) throw InputError("ub_thm5 needs n >= 1");
  return {n + d + 1, 2, n, d};
}

SurdBound ub_henning(std::int64_t n) {
  if (n < 3) throw InputError("ub_henning needs n >= 3");
  return {n + 3, 2, n, 2};
}

UpperBoundComparison compare_thm3_henning(std::int64_t n, std::int64_t supports) {
  UpperBoundComparison cmp;
  cmp.thm3_upper = floor_of(Rational(n + 3 * supports - 1, 5));
  cmp.henning = ub_henning(n);
  cmp.thm3_smaller = !cmp.henning.at_most(cmp.thm3_upper);
  // (n+3s-1)/5 < (n+3-2 sqrt n)/2  <=>  10 sqrt n < 3n - 6s + 17
  const Wide y = static_cast<Wide>(3) * n - static_cast<Wide>(6) * supports + 17;
  cmp.thm3_raw_smaller = y > 0 && y * y > static_cast<Wide>(100) * n;
  return cmp;
}

bool in_family_Td(const Graph& tree, int d) {
  require_tree(tree, "in_family_Td");
  if (d < 1) throw InputError("in_family_Td needs d >= 1");
  return pairwise_distances_congruent(tree, leaves(tree), 2 * d, 2 * d + 1);
}

bool in_family_F2(const Graph& tree) {
  require_tree(tree, "in_family_F2");
  if (tree.order() == 1) return true;
  if (is_star_with_two_or_more_leaves(tree)) return false;
  return pairwise_distances_congruent(tree, support_vertices(tree), 2, 5);
}

EqualityAudit equality_audit(const Graph& tree, int d) {
  require_tree(tree, "equality_audit");
  if (d < 1) throw InputError("equality_audit needs d >= 1");
  EqualityAudit audit;
  audit.d = d;
  audit.stats = structural_stats(tree);
  const auto n = static_cast<std::int64_t>(audit.stats.n);
  const auto l = static_cast<std::int64_t>(audit.stats.leaves);
  const auto s = static_cast<std::int64_t>(audit.stats.supports);

  audit.gamma20 = min_distance_dominating_tree(tree, 2).gamma;
  audit.gammad0 = d == 2 ? audit.gamma20 : min_distance_dominating_tree(tree, d).gamma;
  audit.in_F2 = in_family_F2(tree);
  audit.in_Td = in_family_Td(tree, d);

  const std::int64_t thm2_rhs = n - l - s + 4;
  const std::int64_t thm1_rhs = n - d * l + 2 * d;
  audit.thm2_equality = 5 * audit.gamma20 == thm2_rhs;
  audit.thm1_equality = (2 * d + 1) * audit.gammad0 == thm1_rhs;

  if (5 * audit.gamma20 < thm2_rhs) audit.failures.push_back("gamma_2^0 below the (n-l-s+4)/5 bound");
  if ((2 * d + 1) * audit.gammad0 < thm1_rhs) {
    audit.failures.push_back("gamma_d^0 below the (n-dl+2d)/(2d+1) bound");
  }
  if (audit.thm2_equality != audit.in_F2) {
    audit.failures.push_back(audit.in_F2 ? "F_2 member without equality (n-l-s+4)/5"
                                         : "equality (n-l-s+4)/5 outside F_2");
  }
  if (audit.thm1_equality != audit.in_Td) {
    audit.failures.push_back(audit.in_Td ? "T_d member without equality (n-dl+2d)/(2d+1)"
                                         : "equality (n-dl+2d)/(2d+1) outside T_d");
  }
  if (d == 2 && audit.in_Td && !audit.in_F2) audit.failures.push_back("T_2 member outside F_2");
  return audit;
}

ConjectureProbe conjecture_probe(const Graph& tree, int d, int p) {
  if (!(3 <= p && p <= d)) throw InputError("conjecture_probe needs 3 <= p <= d");
  require_tree(tree, "conjecture_probe");
  ConjectureProbe probe;
  probe.params = {d, p};
  probe.n = static_cast<std::int64_t>(tree.order());
  probe.outcome = gamma_tree(tree, probe.params);
  probe.bound = ub_thm5(probe.n, d);
  probe.holds = probe.outcome.has_value() && probe.bound.admits(probe.outcome.gamma);
  return probe;
}

std::int64_t clamp_to_one(std::int64_t value) { return std::max<std::int64_t>(value, 1); }

bool BoundsReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

BoundsReport bounds_report(const Graph& tree, int d) {
  require_tree(tree, "bounds_report");
  if (d < 1) throw InputError("bounds_report needs d >= 1");
  BoundsReport report;
  report.d = d;
  report.stats = structural_stats(tree);
  const auto n = static_cast<std::int64_t>(report.stats.n);
  const auto l = static_cast<std::int64_t>(report.stats.leaves);
  const auto s = static_cast<std::int64_t>(report.stats.supports);
  auto gamma = [&](int dd, int pp) { return gamma_tree(tree, {dd, pp}).gamma; };
  auto param_text = [](int dd, int pp) {
    return "d=" + std::to_string(dd) + ",p=" + std::to_string(pp);
  };

  const int g20 = gamma(2, 0);
  const int g22 = gamma(2, 2);
  const int gd0 = d == 2 ? g20 : gamma(d, 0);

  {
    Rational lb = lb_thm1(n, l, d);
    report.checks.push_back({"thm1-lower", param_text(d, 0), to_string(lb),
                             boost::rational_cast<double>(lb), gd0, Rational(gd0) >= lb});
  }
  {
    Rational lb = lb_thm2(n, l, s);
    report.checks.push_back({"thm2-lower", param_text(2, 0), to_string(lb),
                             boost::rational_cast<double>(lb), g20, Rational(g20) >= lb});
  }
  if (n >= 2) {
    auto [lo, hi] = bounds_thm3(n, l, s);
    report.checks.push_back({"thm3-lower", param_text(2, 2), std::to_string(lo),
                             static_cast<double>(lo), g22, g22 >= lo});
    report.checks.push_back({"thm3-upper", param_text(2, 2), std::to_string(hi),
                             static_cast<double>(hi), g22, g22 <= hi});
  }
  if (d >= 2) {
    const int gd2 = d == 2 ? g22 : gamma(d, 2);
    SurdBound ub = ub_thm5(n, d);
    report.checks.push_back(
        {"thm5-upper", param_text(d, 2), ub.to_string(), ub.to_double(), gd2, ub.admits(gd2)});
  }
  if (n >= 3) {
    SurdBound ub = ub_henning(n);
    report.checks.push_back(
        {"henning-upper", param_text(2, 2), ub.to_string(), ub.to_double(), g22, ub.admits(g22)});
    report.henning_vs_thm3 = compare_thm3_henning(n, s);
  }

  report.in_Td = in_family_Td(tree, d);
  report.in_F2 = in_family_F2(tree);
  report.thm1_equality = (2 * d + 1) * gd0 == n - d * l + 2 * d;
  report.thm2_equality = 5 * g20 == n - l - s + 4;
  return report;
}

}  // namespace packdom

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hypercc/analysis.hpp"
#include "hypercc/error.hpp"
#include "hypercc/report.hpp"
#include "hypercc/testkit/random.hpp"
#include "test_util.hpp"

using namespace hypercc;

namespace {

// Textbook two-pass formula.
std::optional<double> two_pass(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("pearson basics") {
  const std::vector<double> xs = {0.1, 0.4, 0.2, 0.9, 0.5};
  std::vector<double> neg;
  for (double x : xs) neg.push_back(-x);
  CHECK(*pearson(xs, xs) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*pearson(xs, neg) == doctest::Approx(-1.0).epsilon(1e-12));
  const std::vector<double> flat = {0.3, 0.3, 0.3, 0.3, 0.3};
  CHECK_FALSE(pearson(xs, flat).has_value());
  CHECK_THROWS_AS(pearson(xs, std::vector<double>{1.0, 2.0}), InvalidInput);
  CHECK_THROWS_AS(pearson(std::vector<double>{1.0}, std::vector<double>{1.0}), InvalidInput);
}

TEST_CASE("pearson matches the two-pass formula") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    testkit::Rng rng(seed);
    const auto n = rng.between(2, 300);
    std::vector<double> x, y;
    for (std::uint64_t i = 0; i < n; ++i) {
      x.push_back(rng.unit());
      y.push_back(0.5 * x.back() + 0.5 * rng.unit());
    }
    const auto a = pearson(x, y);
    const auto b = two_pass(x, y);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(std::abs(*a - *b) <= 1e-12);
      CHECK(std::abs(*a) <= 1.0);
    }
  }
}

TEST_CASE("histogram binning") {
  const std::vector<double> zeros(5, 0.0);
  const auto hz = histogram(zeros, {.bins = 4});
  CHECK(hz.counts == std::vector<std::uint64_t>{5, 0, 0, 0});
  CHECK(hz.edges.size() == 5);
  CHECK(hz.edges.front() == 0.0);
  CHECK(hz.edges.back() == 1.0);

  const std::vector<double> ones = {1.0, 1.0};
  CHECK(histogram(ones, {.bins = 3}).counts == std::vector<std::uint64_t>{0, 0, 2});

  const std::vector<double> edges = {0.25, 0.5, 0.75};
  CHECK(histogram(edges, {.bins = 4}).counts == std::vector<std::uint64_t>{0, 1, 1, 1});

  CHECK_THROWS_AS(histogram(zeros, {.bins = 0}), InvalidInput);
  const std::vector<double> bad = {0.5, 1.5};
  CHECK_THROWS_AS(histogram(bad), InvalidInput);
  const std::vector<double> nan = {std::nan("")};
  CHECK_THROWS_AS(histogram(nan), InvalidInput);
}

TEST_CASE("histogram agrees with a direct bin count") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    testkit::Rng rng(seed);
    const auto bins = static_cast<std::size_t>(rng.between(1, 30));
    std::vector<double> v;
    for (int i = 0; i < 500; ++i) v.push_back(rng.below(4) == 0 ? static_cast<double>(rng.below(2)) : rng.unit());
    const auto h = histogram(v, {.bins = bins});
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total == v.size());
    for (std::size_t b = 0; b < bins; ++b) {
      std::uint64_t direct = 0;
      for (double x : v) {
        const bool last = b + 1 == bins;
        direct += x >= h.edges[b] && (x < h.edges[b + 1] || (last && x <= h.edges[b + 1]));
      }
      CHECK(direct == h.counts[b]);
    }
  }
}

TEST_CASE("correlate uses per-node columns") {
  const auto h = test::corpus_graph(11);
  const auto r = cc_all(h);
  const auto c = correlate(r);
  const auto p = r.column(Definition::kProposed);
  CHECK(c.rho_op == pearson(r.column(Definition::kOpsahl), p));
  CHECK(c.rho_zp == pearson(r.column(Definition::kZhou), p));
  CHECK(c.rho_sp == pearson(r.column(Definition::kBaseline), p));
  CHECK_THROWS_AS(correlate(cc_all(h, {.definitions = DefinitionSet::parse("proposed")})), InvalidInput);
}

TEST_CASE("number formatting") {
  CHECK(fraction_string(1.0 / 3.0) == "1/3");
  CHECK(fraction_string(0.5) == "1/2");
  CHECK(fraction_string(0.0) == "0");
  CHECK(fraction_string(1.0) == "1");
  CHECK(fraction_string(0.485380116959) == decimal12(0.485380116959));
  CHECK(decimal12(2.0 / 3.0) == "0.666666666667");
  CHECK(format_optional(std::nullopt) == "undefined");
}

TEST_CASE("csv writers") {
  const auto h = test::make({{"a", "b", "c"}, {"a", "b"}});
  const auto r = cc_all(h, {.definitions = DefinitionSet::parse("proposed")});
  std::ostringstream cc;
  write_cc_csv(cc, h, r);
  CHECK(cc.str() == "node_label,c_proposed\na,0.5\nb,0.5\nc,1\n#average,0.6666666666666666\n");

  std::ostringstream census;
  write_census_csv(census, census_order3(h));
  CHECK(census.str() == "motif_class,count\nI,0\nII,0\nIII,0\nIV,1\nV,0\nVI,0\n");

  std::ostringstream hist;
  const std::vector<double> v = {0.0, 0.6, 1.0};
  write_histogram_csv(hist, Definition::kZhou, histogram(v, {.bins = 2}));
  CHECK(hist.str() == "definition,bin,lower,upper,count\nzhou,0,0,0.5,1\nzhou,1,0.5,1,2\n");

  std::ostringstream corr;
  write_correlation_csv(corr, {.rho_op = 0.25, .rho_zp = std::nullopt, .rho_sp = -1.0});
  CHECK(corr.str() == "pair,rho\nopsahl_proposed,0.25\nzhou_proposed,undefined\nbaseline_proposed,-1\n");
}

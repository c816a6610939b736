#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gibbs/cell_sampler.hpp"
#include "gibbs/errors.hpp"
#include "oracles.hpp"

using namespace gibbs;

namespace {

Box square(double lo, double hi) { return Box{2, {lo, lo, 0.0}, {hi, hi, 0.0}}; }

RandomStream stream(std::uint64_t seed) { return derive_stream({seed, StreamPurpose::cell, 0, 0}); }

}  // namespace

TEST(SamplePpp, CountsAndSupport) {
  auto s = stream(1);
  const Box box = square(0.2, 0.7);
  const double intensity = 20.0;
  const int n = 20000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto x = sample_ppp(intensity, box, std::nullopt, s);
    sum += x.size();
    sum2 += x.size() * x.size();
    for (const auto& p : x) {
      ASSERT_TRUE(box.contains(p.x));
      ASSERT_EQ(p.mark, 0);
    }
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  EXPECT_NEAR(mean, 5.0, 3.0 * std::sqrt(5.0 / n));
  EXPECT_NEAR(var, 5.0, 0.3);
}

TEST(SamplePpp, MarksFollowLaw) {
  auto s = stream(2);
  int type1 = 0, total = 0;
  for (int i = 0; i < 5000; ++i) {
    for (const auto& p : sample_ppp(10.0, square(0, 1), MarkLaw{0.3}, s)) {
      ASSERT_TRUE(p.mark == 1 || p.mark == 2);
      type1 += p.mark == 1;
      ++total;
    }
  }
  EXPECT_NEAR(static_cast<double>(type1) / total, 0.3, oracle::three_sigma(0.3, total));
}

TEST(SamplePpp, DegenerateInputsGiveEmpty) {
  auto s = stream(3);
  EXPECT_TRUE(sample_ppp(0.0, square(0, 1), std::nullopt, s).empty());
  EXPECT_TRUE(sample_ppp(5.0, square(0.5, 0.5), std::nullopt, s).empty());
}

TEST(CellGibbs, HardCoreNeverViolatesWithinCell) {
  const auto m = InteractionModel::hard_core(0.05, 400.0);
  const Cell cell{0, square(0.0, 0.1)};
  const auto law = CellLaw::for_model(m, cell);
  auto s = stream(4);
  const auto domain = BoxDomain::unit(2);
  for (int i = 0; i < 20000; ++i) {
    const auto x = sample_cell_gibbs(law, domain, s);
    ASSERT_NE(potential(m, x, domain), kInfiniteEnergy);
    for (const auto& p : x) ASSERT_TRUE(cell.bounds.contains(p.x));
  }
}

TEST(CellGibbs, UnitGammaAcceptsFirstAttempt) {
  const auto m = InteractionModel::strauss(1.0, 0.05, 1000.0);
  const auto law = CellLaw::for_model(m, Cell{0, square(0.0, 0.1)});
  auto s = stream(5);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(sample_cell_gibbs_counted(law, BoxDomain::unit(2), s).attempts, 1u);
  }
}

TEST(CellGibbs, AttemptCapRaises) {
  const auto m = InteractionModel::hard_core(0.05, 1e5);
  const auto law = CellLaw::for_model(m, Cell{0, square(0.0, 0.1)});
  auto s = stream(6);
  EXPECT_THROW(sample_cell_gibbs(law, BoxDomain::unit(2), s, 100), AttemptCapExceeded);
}

TEST(CellGibbs, DeterministicForAStream) {
  const auto m = InteractionModel::strauss(0.5, 0.05, 300.0);
  const auto law = CellLaw::for_model(m, Cell{0, square(0.0, 0.1)});
  auto a = stream(7);
  auto b = stream(7);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(sample_cell_gibbs(law, BoxDomain::unit(2), a),
              sample_cell_gibbs(law, BoxDomain::unit(2), b));
  }
}

// P(empty) under the restricted law is exp(-kappa Vol) / Z~, with Z~ the mean
// of exp(-U) under the reference process. Z~ is estimated by plain Monte
// Carlo with an unrelated generator.
struct EmptyCase {
  const char* name;
  InteractionModel model;
};

class EmptyProbability : public ::testing::TestWithParam<int> {};

TEST_P(EmptyProbability, MatchesReferenceRatio) {
  const double edge = 0.1;
  const double r = edge / 2;
  const double area = edge * edge;
  const double kappa = 1.0 / (std::numbers::pi * r * r);  // kappa0 = 1
  const std::vector<EmptyCase> cases = {
      {"hard-core", InteractionModel::hard_core(r, kappa)},
      {"strauss", InteractionModel::strauss(0.5, r, kappa)},
      {"psm", InteractionModel::penetrable_spheres(r, kappa / 2, kappa / 2)},
  };
  const auto& c = cases[GetParam()];
  const auto domain = BoxDomain::unit(2);

  std::mt19937_64 rng(100 + GetParam());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int mc = 200000;
  double z = 0.0, z2 = 0.0;
  for (int i = 0; i < mc; ++i) {
    auto x = oracle::poisson_points(rng, kappa * area, 2, 0.0, edge);
    if (c.model.is_marked()) {
      for (auto& p : x) p.mark = u(rng) < 0.5 ? 1 : 2;
    }
    const double w = boltzmann_weight(potential(c.model, x, domain));
    z += w;
    z2 += w * w;
  }
  z /= mc;
  const double z_var = (z2 / mc - z * z) / mc;
  const double p_ref = std::exp(-kappa * area) / z;
  // Delta method for the ratio.
  const double p_ref_sd = p_ref * std::sqrt(z_var) / z;

  const auto law = CellLaw::for_model(c.model, Cell{0, square(0.0, edge)});
  auto s = stream(200 + GetParam());
  const int n = 200000;
  int empty = 0;
  for (int i = 0; i < n; ++i) empty += sample_cell_gibbs(law, domain, s).empty();
  const double p_hat = static_cast<double>(empty) / n;
  const double sd = std::sqrt(p_ref * (1 - p_ref) / n + p_ref_sd * p_ref_sd);
  EXPECT_NEAR(p_hat, p_ref, 3.0 * sd) << c.name;
}

INSTANTIATE_TEST_SUITE_P(Models, EmptyProbability, ::testing::Values(0, 1, 2));

TEST(CellLaw, ExpectedReferenceCount) {
  const auto m = InteractionModel::hard_core(0.05, 100.0);
  const auto law = CellLaw::for_model(m, Cell{0, square(0.0, 0.1)});
  EXPECT_NEAR(law.expected_reference_count(), 1.0, 1e-12);
}

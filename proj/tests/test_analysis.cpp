#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spectra/analysis.hpp"
#include "spectra/error.hpp"
#include "spectra/fourier.hpp"
#include "spectra/smoothing.hpp"

namespace spectra {
namespace {

TEST(ExpectedParity, Examples) {
  const auto g1 = GroupSpec::boolean(1);
  const DenseFunction p(g1, {0.25, 0.75});
  EXPECT_NEAR(expected_parity(p, Frequency(g1, 1)), -0.5 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(expected_parity(p, Frequency(g1, 0)), 1.0 / std::sqrt(2.0), 1e-15);

  const auto g3 = GroupSpec::boolean(3);
  auto delta = DenseFunction::zeros(g3);
  delta.values[0] = 1.0;
  for (std::uint64_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(expected_parity(delta, Frequency(g3, k)), 1.0 / std::sqrt(8.0), 1e-15);
  }
}

TEST(ExpectedParity, MatchesFourier) {
  std::mt19937_64 rng(5);
  const auto g = GroupSpec::boolean(6);
  const auto p = empirical_distribution(oracle::random_dataset(6, 17, rng));
  const auto s = fourier(p);
  for (std::uint64_t k = 0; k < g.order(); ++k) {
    EXPECT_NEAR(expected_parity(p, Frequency(g, k)), s.values[k].real(), 1e-14);
  }
}

TEST(ExpectedParity, RejectsNonProbability) {
  const auto g = GroupSpec::boolean(1);
  EXPECT_THROW(expected_parity(DenseFunction(g, {0.5, 0.6}), Frequency(g, 1)),
               InvalidArgument);
  EXPECT_THROW(expected_parity(DenseFunction(g, {1.5, -0.5}), Frequency(g, 1)),
               InvalidArgument);
}

TEST(Convolve, IdentityAndShift) {
  std::mt19937_64 rng(6);
  const auto g = GroupSpec::cyclic(3, 2);
  const DenseFunction f(g, oracle::random_complex(g.order(), rng));
  auto delta0 = DenseFunction::zeros(g);
  delta0.values[0] = 1.0;
  const auto same = convolve(f, delta0);
  EXPECT_LT(oracle::max_abs_diff(same.values, f.values), 1e-12);

  auto da = DenseFunction::zeros(g), db = DenseFunction::zeros(g);
  da.values[4] = 1.0;
  db.values[7] = 1.0;
  const auto c = convolve(da, db);
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    EXPECT_NEAR(std::abs(c.values[x]), x == g.add(4, 7) ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Convolve, SpectralMatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupSpec::boolean(n);
    const DenseFunction f(g, oracle::random_complex(g.order(), rng));
    const DenseFunction h(g, oracle::random_complex(g.order(), rng));
    const auto want = oracle::naive_convolve(2, n, f.values, h.values);
    EXPECT_LT(oracle::max_abs_diff(convolve(f, h).values, want), 1e-10);
    EXPECT_LT(oracle::max_abs_diff(convolve_direct(f, h).values, want), 1e-10);
  }
  for (const auto& g : {GroupSpec::cyclic(5, 2), GroupSpec::cyclic(4, 3)}) {
    const DenseFunction f(g, oracle::random_complex(g.order(), rng));
    const DenseFunction h(g, oracle::random_complex(g.order(), rng));
    const auto want = oracle::naive_convolve(g.modulus(), g.dims(), f.values, h.values);
    EXPECT_LT(oracle::max_abs_diff(convolve(f, h).values, want), 1e-10);
  }
  EXPECT_THROW(convolve(DenseFunction::zeros(GroupSpec::boolean(2)),
                        DenseFunction::zeros(GroupSpec::cyclic(4, 1))),
               InvalidArgument);
}

TEST(Convolve, NoiseKernelReproducesSmoothing) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    const auto data = oracle::random_dataset(3, 5, rng);
    const double theta = 0.05 + 0.09 * t;
    const auto conv = convolve(empirical_distribution(data), noise_kernel_fn(3, theta));
    const auto model = smooth(data, OrderDecay{theta});
    for (std::size_t x = 0; x < 8; ++x) {
      EXPECT_NEAR(conv.values[x].real(), model.signed_values[x], 1e-12);
    }
  }
}

DenseFunction additive_response() {
  // f(x1 x2) with bit 0 = x1: f(00)=0, f(10)=1, f(01)=1, f(11)=2.
  return DenseFunction(GroupSpec::boolean(2), {0.0, 1.0, 1.0, 2.0});
}

TEST(InteractionEffect, Examples) {
  const auto f = additive_response();
  const auto g = f.group;
  EXPECT_NEAR(interaction_effect(f, Frequency(g, 3)), 0.0, 1e-15);
  EXPECT_NEAR(interaction_effect(f, Frequency(g, 1)), 2.0, 1e-15);
  EXPECT_NEAR(interaction_effect(f, Frequency(g, 0)), 4.0, 1e-15);

  const DenseFunction c(GroupSpec::boolean(3), std::vector<Complex>(8, 0.7));
  for (std::uint64_t s = 1; s < 8; ++s) {
    EXPECT_NEAR(interaction_effect(c, Frequency(c.group, s)), 0.0, 1e-15);
  }
}

// L(S) from its definition: sum_x f(x) prod_{i in S} (2 x_i - 1).
double interaction_oracle(const std::vector<double>& f, std::uint64_t s) {
  double acc = 0.0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    double sign = 1.0;
    for (std::uint64_t i = 0; (s >> i) != 0; ++i) {
      if ((s >> i) & 1u) sign *= ((x >> i) & 1u) ? 1.0 : -1.0;
    }
    acc += f[x] * sign;
  }
  return acc;
}

TEST(InteractionEffect, ExhaustiveQuarterGrid) {
  for (int n = 1; n <= 3; ++n) {
    const auto g = GroupSpec::boolean(n);
    const std::size_t size = g.order();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < size; ++i) combos *= 5;
    for (std::size_t c = 0; c < combos; ++c) {
      std::vector<double> f(size);
      std::size_t r = c;
      double total = 0.0;
      for (auto& v : f) {
        v = 0.25 * static_cast<double>(r % 5);
        r /= 5;
        total += v;
      }
      const auto fn = DenseFunction::from_real(g, f);
      const auto s = fourier(fn);
      for (std::uint64_t k = 0; k < size; ++k) {
        const double l = interaction_effect(fn, Frequency(g, k));
        const int w = std::popcount(k);
        ASSERT_NEAR(l, interaction_oracle(f, k), 1e-12);
        ASSERT_NEAR(l, (w % 2 ? -1.0 : 1.0) * std::sqrt(double(size)) * s.values[k].real(),
                    1e-12);
      }
      if (total > 0) {
        std::vector<double> p(f);
        for (auto& v : p) v /= total;
        const auto pf = DenseFunction::from_real(g, p);
        const auto m = to_spin_moments(pf);
        const auto ps = fourier(pf);
        for (std::uint64_t k = 0; k < size; ++k) {
          double direct = 0.0;
          for (std::uint64_t x = 0; x < size; ++x) {
            direct += p[x] * ((std::popcount(x & k) % 2) ? -1.0 : 1.0);
          }
          ASSERT_NEAR(m[k], direct, 1e-12);
          ASSERT_NEAR(m[k], std::sqrt(double(size)) * ps.values[k].real(), 1e-12);
        }
      }
    }
  }
}

TEST(SpinMoments, Examples) {
  const auto g1 = GroupSpec::boolean(1);
  const auto m = to_spin_moments(DenseFunction(g1, {0.25, 0.75}));
  EXPECT_NEAR(m[0], 1.0, 1e-15);
  EXPECT_NEAR(m[1], -0.5, 1e-15);
  const auto u = to_spin_moments(DenseFunction(GroupSpec::boolean(3),
                                               std::vector<Complex>(8, 0.125)));
  EXPECT_NEAR(u[0], 1.0, 1e-15);
  for (std::size_t k = 1; k < 8; ++k) EXPECT_NEAR(u[k], 0.0, 1e-15);
}

double mmd_oracle(const std::vector<Complex>& p, const std::vector<Complex>& q,
                  const std::vector<Complex>& phi, int d, int dims) {
  double acc = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      acc += ((p[a] - q[a]) * (p[b] - q[b]) * phi[oracle::sub(d, dims, a, b)]).real();
    }
  }
  return acc;
}

TEST(Mmd, Examples) {
  const auto g = GroupSpec::boolean(2);
  const DenseFunction p(g, {1.0, 0.0, 0.0, 0.0});
  const DenseFunction q(g, {0.0, 0.0, 0.0, 1.0});
  const auto phi = noise_kernel_fn(2, 0.25);
  const double want = mmd_oracle(p.values, q.values, phi.values, 2, 2);
  EXPECT_NEAR(want, 1.0, 1e-15);  // 2 (9/16) - 2 (1/16)
  const auto r = mmd_squared(p, q, phi);
  EXPECT_NEAR(r.value, want, 1e-12);
  EXPECT_TRUE(r.kernel_valid);
  EXPECT_NEAR(mmd_squared_direct(p, q, phi).value, want, 1e-12);

  EXPECT_NEAR(mmd_squared(p, p, phi).value, 0.0, 1e-15);
  const DenseFunction delta(g, {1.0, 0.0, 0.0, 0.0});
  EXPECT_NEAR(mmd_squared(p, q, delta).value, 2.0, 1e-12);
}

TEST(Mmd, SpectralMatchesDirect) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 6; ++n) {
    const auto p = empirical_distribution(oracle::random_dataset(n, 9, rng));
    const auto q = empirical_distribution(oracle::random_dataset(n, 4, rng));
    const auto phi = noise_kernel_fn(n, 0.2);
    const double want = mmd_oracle(p.values, q.values, phi.values, 2, n);
    EXPECT_NEAR(mmd_squared(p, q, phi).value, want, 1e-10);
    EXPECT_NEAR(mmd_squared_direct(p, q, phi).value, want, 1e-10);
  }
}

TEST(Mmd, FlagsNegativeKernelSpectrum) {
  const auto g = GroupSpec::boolean(1);
  const DenseFunction p(g, {1.0, 0.0}), q(g, {0.0, 1.0});
  // phi = (0, 1) has spectrum (1, -1)/sqrt2.
  const auto r = mmd_squared(p, q, DenseFunction(g, {0.0, 1.0}));
  EXPECT_FALSE(r.kernel_valid);
  EXPECT_NEAR(r.value, mmd_oracle(p.values, q.values, {0.0, 1.0}, 2, 1), 1e-12);
}

TEST(DecayProfile, Examples) {
  const auto g = GroupSpec::boolean(4);
  auto delta = DenseFunction::zeros(g);
  delta.values[0] = 1.0;
  for (const auto& shell : smoothness_decay_profile(delta)) {
    EXPECT_NEAR(shell.max_abs, 0.25, 1e-15);
  }
  const auto uniform = DenseFunction(g, std::vector<Complex>(16, 1.0 / 16));
  const auto prof = smoothness_decay_profile(uniform);
  ASSERT_EQ(prof.size(), 5u);
  EXPECT_NEAR(prof[0].max_abs, 0.25, 1e-15);
  for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_NEAR(prof[i].max_abs, 0.0, 1e-15);
}

TEST(DecayProfile, GaussianOnCycleDecreases) {
  const auto g = GroupSpec::cyclic(64, 1);
  std::vector<double> v(64);
  for (int x = 0; x < 64; ++x) {
    const int dist = std::min(x, 64 - x);
    v[x] = std::exp(-0.5 * dist * dist / 9.0);
  }
  const auto prof = smoothness_decay_profile(DenseFunction::from_real(g, v));
  ASSERT_EQ(prof.size(), 33u);
  // Monotone until the coefficients reach rounding level.
  for (std::size_t i = 1; i < prof.size(); ++i) {
    if (prof[i - 1].max_abs < 1e-13) break;
    EXPECT_LT(prof[i].max_abs, prof[i - 1].max_abs) << "shell " << i;
  }
}

TEST(CountBandlimited, Examples) {
  EXPECT_EQ(count_bandlimited_frequencies(10000, 2), BigInt(50005001));
  EXPECT_EQ(count_bandlimited_frequencies(37, 0), BigInt(1));
  EXPECT_EQ(count_bandlimited_frequencies(100, 100), BigInt(1) << 100);
  EXPECT_EQ(count_bandlimited_frequencies(10, 3), BigInt(1 + 10 + 45 + 120));
  EXPECT_THROW(count_bandlimited_frequencies(5, 6), InvalidArgument);
}

}  // namespace
}  // namespace spectra

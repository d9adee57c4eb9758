#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spectra/error.hpp"
#include "spectra/filter.hpp"
#include "spectra/fourier.hpp"
#include "spectra/smoothing.hpp"
#include "spectra/statevector.hpp"

namespace spectra {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void expect_amps(const StateVector& s, const std::vector<Complex>& want,
                 double tol = 1e-12) {
  ASSERT_EQ(s.dim(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_LT(std::abs(s.amps()[i] - want[i]), tol) << "index " << i;
  }
}

// Group-core version of the amplitude pipeline, normalized Born rule.
std::vector<double> classical_amplitude_pipeline(const Dataset& d, double theta) {
  const auto u = d.unique();
  const auto g = GroupSpec::boolean(d.n());
  auto psi = DenseFunction::zeros(g);
  for (const auto& x : u) psi.values[x.to_index()] = 1.0 / std::sqrt(double(u.size()));
  const auto filtered = inverse_fourier(apply_filter(fourier(psi), OrderDecay{theta}));
  std::vector<double> p(g.order());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += p[i] = std::norm(filtered.values[i]);
  for (double& v : p) v /= total;
  return p;
}

TEST(StateVector, Validation) {
  EXPECT_THROW(StateVector(1, 0, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(StateVector(2, 0, {1.0, 0.0}), InvalidArgument);
  EXPECT_NO_THROW(StateVector(1, 0, {kInvSqrt2, Complex(0, kInvSqrt2)}));
}

TEST(PrepareSuperposition, Examples) {
  const auto p0 = prepare_superposition(Dataset{"000"});
  expect_amps(p0.state, {1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_FALSE(p0.duplicates_collapsed);

  const auto bell = prepare_superposition(Dataset{"00", "11"});
  expect_amps(bell.state, {kInvSqrt2, 0, 0, kInvSqrt2});

  const auto dup = prepare_superposition(Dataset{"01", "01", "11"});
  expect_amps(dup.state, {0, kInvSqrt2, 0, kInvSqrt2});
  EXPECT_TRUE(dup.duplicates_collapsed);
  EXPECT_THROW(prepare_superposition(Dataset(21, {BitString(21)})), GuardExceeded);
}

TEST(WalshQft, Examples) {
  const auto plus = walsh_qft(StateVector::basis(2, 0));
  expect_amps(plus, {0.5, 0.5, 0.5, 0.5});
  expect_amps(walsh_qft(plus), {1, 0, 0, 0});
  expect_amps(walsh_qft(StateVector::basis(2, 3)), {0.5, -0.5, -0.5, 0.5});
}

TEST(WalshQft, AgreesWithFourier) {
  std::mt19937_64 rng(30);
  for (int n = 1; n <= 8; ++n) {
    const StateVector s(n, 0, oracle::random_state(std::size_t{1} << n, rng));
    const auto f = fourier(DenseFunction(GroupSpec::boolean(n), s.amps()));
    expect_amps(walsh_qft(s), f.values);
  }
}

TEST(CyclicQft, Examples) {
  expect_amps(cyclic_qft(StateVector::basis(2, 0)), {0.5, 0.5, 0.5, 0.5});
  expect_amps(cyclic_qft(StateVector::basis(2, 1)),
              {0.5, Complex(0, 0.5), -0.5, Complex(0, -0.5)});
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 6; ++n) {
    const StateVector s(n, 0, oracle::random_state(std::size_t{1} << n, rng));
    const auto t = cyclic_qft(s);
    EXPECT_NEAR(t.norm(), 1.0, 1e-10);
    expect_amps(inverse_cyclic_qft(t), s.amps());
    expect_amps(t, oracle::naive_transform(1 << n, 1, s.amps(), +1));
  }
  EXPECT_THROW(cyclic_qft(StateVector::basis(13, 0)), GuardExceeded);
}

TEST(AncillaDecayFilter, Examples) {
  std::mt19937_64 rng(32);
  const StateVector s(3, 0, oracle::random_state(8, rng));
  const auto id = ancilla_decay_filter(s, 0.0);
  EXPECT_NEAR(id.success_prob, 1.0, 1e-12);
  expect_amps(id.state_after, s.amps());

  const auto zero = ancilla_decay_filter(StateVector::basis(4, 0), 0.3);
  EXPECT_NEAR(zero.success_prob, 1.0, 1e-12);
  expect_amps(zero.state_after, StateVector::basis(4, 0).amps());

  for (int n = 1; n <= 6; ++n) {
    for (double theta : {0.1, 0.25, 0.4}) {
      const auto uniform = walsh_qft(StateVector::basis(n, 0));
      const double r = 1 - 2 * theta;
      EXPECT_NEAR(ancilla_decay_filter(uniform, theta).success_prob,
                  std::pow((1 + r * r) / 2, n), 1e-12);
    }
  }
  EXPECT_THROW(ancilla_decay_filter(StateVector::basis(2, 3), 0.5), ZeroSuccessProbability);
  EXPECT_THROW(ancilla_decay_filter(s, 0.6), InvalidArgument);
}

TEST(AncillaDecayFilter, MatchesDiagonalScalingAndClosedForm) {
  std::mt19937_64 rng(33);
  for (int n = 1; n <= 6; ++n) {
    const StateVector s(n, 0, oracle::random_state(std::size_t{1} << n, rng));
    double prev = 1.0 + 1e-12;
    for (double theta : {0.0, 0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45}) {
      const double r = 1 - 2 * theta;
      std::vector<Complex> scaled(s.dim());
      double closed = 0.0;
      for (std::size_t k = 0; k < s.dim(); ++k) {
        const double w = std::pow(r, std::popcount(k));
        scaled[k] = s.amps()[k] * w;
        closed += std::norm(scaled[k]);
      }
      for (auto& a : scaled) a /= std::sqrt(closed);
      const auto seq = ancilla_decay_filter(s, theta, AncillaSchedule::kSequential);
      const auto joint = ancilla_decay_filter(s, theta, AncillaSchedule::kJoint);
      EXPECT_NEAR(seq.success_prob, closed, 1e-12);
      EXPECT_NEAR(joint.success_prob, closed, 1e-12);
      expect_amps(seq.state_after, scaled);
      expect_amps(joint.state_after, scaled);
      EXPECT_LE(seq.success_prob, prev);
      prev = seq.success_prob;
    }
  }
}

TEST(Gates, PreserveNorm) {
  std::mt19937_64 rng(34);
  StateVector s(3, 0, oracle::random_state(8, rng));
  s = s.add_ancilla().add_ancilla();
  EXPECT_EQ(s.n_anc(), 2);
  for (int t = 0; t < 20; ++t) {
    s = s.hadamard(static_cast<int>(rng() % 5));
    s = s.controlled_ry(static_cast<int>(rng() % 3), 3 + static_cast<int>(rng() % 2),
                        0.1 * t + 0.3);
    EXPECT_NEAR(s.norm(), 1.0, 1e-10);
  }
  const auto post = postselect_ancillas(s);
  EXPECT_EQ(post.state_after.n_anc(), 0);
  double branch = 0.0;
  for (std::size_t i = 0; i < 8; ++i) branch += std::norm(s.amps()[i]);
  EXPECT_NEAR(post.success_prob, branch, 1e-12);
}

TEST(BornDistribution, Examples) {
  const auto d = born_distribution(StateVector::basis(2, 2));
  EXPECT_EQ(d.real(), (std::vector<double>{0, 0, 1, 0}));
  const auto bell = born_distribution(prepare_superposition(Dataset{"00", "11"}).state);
  EXPECT_NEAR(bell.values[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(bell.values[3].real(), 0.5, 1e-15);
  std::mt19937_64 rng(35);
  auto amps = oracle::random_state(16, rng);
  const auto before = born_distribution(StateVector(4, 0, amps)).real();
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= std::polar(1.0, 0.7 * i);
  const auto after = born_distribution(StateVector(4, 0, amps)).real();
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(before[i], after[i], 1e-15);
}

TEST(QuantumSmooth, Examples) {
  const Dataset d{"010", "111", "010"};
  const auto q0 = quantum_smooth(d, 0.0);
  EXPECT_TRUE(q0.duplicates_collapsed);
  EXPECT_NEAR(q0.success_prob, 1.0, 1e-12);
  const auto p0 = q0.distribution.real();
  for (std::size_t x = 0; x < 8; ++x) {
    EXPECT_NEAR(p0[x], (x == 2 || x == 7) ? 0.5 : 0.0, 1e-12);
  }
  const auto qh = quantum_smooth(d, 0.5);
  for (double v : qh.distribution.real()) EXPECT_NEAR(v, 0.125, 1e-12);
  EXPECT_GT(qh.success_prob, 0.0);
}

TEST(QuantumSmooth, BellFixtureSharperThanClassical) {
  const Dataset d{"00", "11"};
  const auto q = quantum_smooth(d, 0.25);
  const auto c = smooth(d, OrderDecay{0.25});
  const auto p = q.distribution.real();
  // psi^ = (1, 0, 0, 1) / sqrt2 is filtered to (1, 0, 0, 1/4) / sqrt2, which
  // keeps 17/32 of the norm and transforms back to (5, 3, 3, 5) / 8 before
  // renormalization.
  EXPECT_NEAR(p[0], 25.0 / 68, 1e-12);
  EXPECT_NEAR(p[1], 9.0 / 68, 1e-12);
  EXPECT_NEAR(p[3], p[0], 1e-12);
  EXPECT_NEAR(q.success_prob, 17.0 / 32, 1e-12);
  EXPECT_NEAR((*c.distribution)[0], 0.3125, 1e-12);
  EXPECT_GT(p[0], (*c.distribution)[0]);
}

TEST(QuantumSmooth, EqualsClassicalAmplitudePipeline) {
  std::mt19937_64 rng(36);
  for (int n = 1; n <= 6; ++n) {
    for (double theta : {0.0, 0.1, 0.25, 0.4, 0.5}) {
      for (int t = 0; t < 3; ++t) {
        const auto d = oracle::random_dataset(n, 1 + static_cast<int>(rng() % 6), rng);
        const auto want = classical_amplitude_pipeline(d, theta);
        const auto got = quantum_smooth(d, theta).distribution.real();
        for (std::size_t x = 0; x < want.size(); ++x) ASSERT_NEAR(got[x], want[x], 1e-12);
      }
    }
  }
}

TEST(QuantumSmooth, SinglePointAmplifiesTrainingPoint) {
  for (int n = 1; n <= 6; ++n) {
    const auto x = BitString::from_index(1, n);
    const Dataset d(n, {x});
    for (double theta : {0.05, 0.15, 0.25, 0.35, 0.45}) {
      const auto q = quantum_smooth(d, theta).distribution.real();
      const auto c = *smooth(d, OrderDecay{theta}).distribution;
      EXPECT_GE(q[x.to_index()], c[x.to_index()]) << "n=" << n << " theta=" << theta;
    }
  }
}

TEST(Autoconvolution, Examples) {
  const int n = 3;
  const auto g = GroupSpec::boolean(n);
  const auto basis = fourier(DenseFunction(g, StateVector::basis(n, 0).amps()));
  for (const auto& v : autoconvolution_spectrum(basis).values) {
    EXPECT_LT(std::abs(v - 1.0 / std::sqrt(8.0)), 1e-12);
  }
  auto delta = Spectrum::zeros(g);
  delta.values[0] = 1.0;
  const auto u = autoconvolution_spectrum(delta);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_LT(std::abs(u.values[k] - (k == 0 ? 1.0 / std::sqrt(8.0) : 0.0)), 1e-12);
  }
}

TEST(Autoconvolution, TheoremOnRandomStates) {
  std::mt19937_64 rng(37);
  for (int n = 2; n <= 8; ++n) {
    const auto g = GroupSpec::boolean(n);
    for (int t = 0; t < 10; ++t) {
      const StateVector s(n, 0, oracle::random_state(g.order(), rng));
      const auto lhs = autoconvolution_spectrum(fourier(DenseFunction(g, s.amps())));
      const auto rhs = fourier(born_distribution(s));
      ASSERT_LT(oracle::max_abs_diff(lhs.values, rhs.values), 1e-12);
    }
  }
  const auto g = GroupSpec::cyclic(5, 2);
  const auto psi = oracle::random_state(25, rng);
  std::vector<Complex> born(25);
  for (std::size_t i = 0; i < 25; ++i) born[i] = std::norm(psi[i]);
  const auto lhs = autoconvolution_spectrum(fourier(DenseFunction(g, psi)));
  EXPECT_LT(oracle::max_abs_diff(lhs.values, fourier(DenseFunction(g, born)).values), 1e-12);
}

}  // namespace
}  // namespace spectra

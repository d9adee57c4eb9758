#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "spectra/error.hpp"
#include "spectra/qnn.hpp"

namespace spectra {
namespace {

using Eigen::MatrixXcd;

// Every difference of eigenvalue sums over full tuples, one eigenvalue per gate.
std::set<double> brute_force_omega(const std::vector<std::vector<double>>& gates) {
  std::vector<double> sums{0.0};
  for (const auto& g : gates) {
    std::vector<double> next;
    for (double s : sums) {
      for (double e : g) next.push_back(s + e);
    }
    sums = std::move(next);
  }
  std::set<double> out;
  for (double a : sums) {
    for (double b : sums) out.insert(a - b);
  }
  return out;
}

std::vector<double> as_vector(const std::set<double>& s) { return {s.begin(), s.end()}; }

TEST(FrequencySet, Examples) {
  const auto one = qnn_frequency_set({{{0.0, 1.0}}});
  EXPECT_EQ(one.values, (std::vector<double>{-1, 0, 1}));
  EXPECT_TRUE(one.integer_spectrum);
  for (int r = 1; r <= 5; ++r) {
    const auto s = qnn_frequency_set({std::vector<std::vector<double>>(r, {-0.5, 0.5})});
    std::vector<double> want;
    for (int k = -r; k <= r; ++k) want.push_back(k);
    EXPECT_EQ(s.values, want);
  }
  EXPECT_EQ(qnn_frequency_set({}).values, (std::vector<double>{0}));
  const auto frac = qnn_frequency_set({{{0.0, 0.5}}});
  EXPECT_FALSE(frac.integer_spectrum);
  EXPECT_EQ(frac.values, (std::vector<double>{-0.5, 0, 0.5}));
  EXPECT_THROW(qnn_frequency_set({{{}}}), InvalidArgument);
}

TEST(FrequencySet, MatchesBruteForceTuples) {
  const std::vector<std::vector<std::vector<double>>> cases{
      {{0, 1}, {0, 2}},
      {{-1, 0, 3}, {0, 1}, {2, 5}},
      {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1}},
      {{-0.5, 0.5}, {-1.5, 0.5, 1.5}},
  };
  for (const auto& gates : cases) {
    EXPECT_EQ(qnn_frequency_set({gates}).values, as_vector(brute_force_omega(gates)));
  }
}

MatrixXcd identity(int dim) { return MatrixXcd::Identity(dim, dim); }

TEST(QnnEvaluate, Examples) {
  Rng rng(1);
  const QnnModel id(2, {random_unitary(4, rng), EncodingGate{0, 0.5 * pauli::x()}},
                    identity(4));
  for (double x : {0.0, 0.3, 2.0, -5.0}) EXPECT_NEAR(qnn_evaluate(id, x), 1.0, 1e-12);

  const QnnModel rx(1, {EncodingGate{0, 0.5 * pauli::x()}}, pauli::z());
  EXPECT_NEAR(qnn_evaluate(rx, 0.0), 1.0, 1e-12);
  for (double x : {0.4, 1.0, 2.5}) EXPECT_NEAR(qnn_evaluate(rx, x), std::cos(x), 1e-12);
}

TEST(QnnEvaluate, PeriodicForIntegerGenerators) {
  Rng rng(2);
  Eigen::Matrix2cd h;
  h << 0.5, 0.5, 0.5, 0.5;  // eigenvalues 0 and 1
  const QnnModel m(2, {random_unitary(4, rng), EncodingGate{1, h}, random_unitary(4, rng),
                       EncodingGate{0, h}, random_unitary(4, rng)},
                   single_qubit_observable(2, 0, pauli::z()));
  for (int t = 0; t < 10; ++t) {
    const double x = 10.0 * rng.uniform() - 5.0;
    EXPECT_NEAR(qnn_evaluate(m, x), qnn_evaluate(m, x + 2 * std::numbers::pi), 1e-10);
  }
}

TEST(QnnModel, Validation) {
  MatrixXcd bad = identity(2);
  bad(0, 1) = 0.5;
  EXPECT_THROW(QnnModel(1, {bad}, pauli::z()), InvalidArgument);
  EXPECT_THROW(QnnModel(1, {}, bad), InvalidArgument);
  EXPECT_THROW(QnnModel(1, {EncodingGate{0, bad.block<2, 2>(0, 0)}}, pauli::z()),
               InvalidArgument);
  EXPECT_THROW(QnnModel(1, {EncodingGate{1, pauli::x()}}, pauli::z()), InvalidArgument);
  EXPECT_THROW(QnnModel(11, {}, identity(2048)), GuardExceeded);
}

TEST(QnnExtractSpectrum, IdentityObservable) {
  Rng rng(3);
  const QnnModel m(1, {EncodingGate{0, 0.5 * pauli::y()}, random_unitary(2, rng)},
                   identity(2));
  const auto c = qnn_extract_spectrum(m, 3);
  ASSERT_EQ(c.size(), 7u);
  EXPECT_NEAR(std::abs(c.at(0) - 1.0), 0.0, 1e-12);
  for (const auto& [k, v] : c) {
    if (k != 0) EXPECT_LT(std::abs(v), 1e-12);
  }
}

double out_of_band(const std::map<int, Complex>& coeffs, const FrequencySet& omega) {
  double worst = 0.0;
  for (const auto& [k, v] : coeffs) {
    bool in = false;
    for (double w : omega.values) in |= std::abs(w - k) < 1e-9;
    if (!in) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

TEST(QnnExtractSpectrum, SingleQubitSupport) {
  Rng rng(4);
  Eigen::Matrix2cd h;
  h << 0.5, -0.5, -0.5, 0.5;  // eigenvalues 0 and 1
  for (int t = 0; t < 20; ++t) {
    const QnnModel m(1, {random_unitary(2, rng), EncodingGate{0, h}, random_unitary(2, rng)},
                     pauli::z());
    const auto omega = qnn_frequency_set(m.encoding_spec());
    EXPECT_EQ(omega.values, (std::vector<double>{-1, 0, 1}));
    const auto c = qnn_extract_spectrum(m, 4);
    EXPECT_LT(out_of_band(c, omega), 1e-9);
    // Reconstruct f from its coefficients.
    for (double x : {0.2, 1.7}) {
      Complex f = 0.0;
      for (const auto& [k, v] : c) f += v * std::polar(1.0, k * x);
      EXPECT_NEAR(f.real(), qnn_evaluate(m, x), 1e-10);
    }
  }
}

TEST(QnnExtractSpectrum, ThreeParallelPauliEncodings) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const QnnModel m(3,
                     {random_unitary(8, rng), EncodingGate{0, 0.5 * pauli::z()},
                      EncodingGate{1, 0.5 * pauli::z()}, EncodingGate{2, 0.5 * pauli::z()},
                      random_unitary(8, rng)},
                     single_qubit_observable(3, 1, pauli::z()));
    const auto omega = qnn_frequency_set(m.encoding_spec());
    EXPECT_EQ(omega.values, (std::vector<double>{-3, -2, -1, 0, 1, 2, 3}));
    EXPECT_LT(out_of_band(qnn_extract_spectrum(m, 6), omega), 1e-9);
  }
}

TEST(RandomUnitary, IsUnitary) {
  Rng rng(6);
  for (int dim : {1, 2, 4, 8}) {
    const auto u = random_unitary(dim, rng);
    EXPECT_LT((u.adjoint() * u - identity(dim)).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace spectra

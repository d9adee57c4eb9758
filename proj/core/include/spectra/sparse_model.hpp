#pragma once

#include <cstdint>
#include <vector>

#include "spectra/config.hpp"
#include "spectra/dataset.hpp"
#include "spectra/filter.hpp"
#include "spectra/smoothing.hpp"

namespace spectra {

// One retained frequency of a bandlimited model. `moment` is the filtered
// mean parity g(k) E_X[(-1)^{k.x}]; the balanced Fourier coefficient is
// moment / sqrt(2^n). Storing moments keeps large-n models free of
// underflow.
struct SparseTerm {
  std::vector<int> support;  // set bits of k, ascending
  double moment = 0.0;
};

// Filtered empirical spectrum truncated to Hamming weight <= band.
struct SparseModel {
  int n = 0;
  int band = 0;
  std::vector<SparseTerm> retained;  // retained[0] is k = 0 with moment 1

  double coefficient(std::size_t i) const;
};

// Builds the model from empirical coefficients without any dense table.
// Throws GuardExceeded when sum_{m<=band} C(n, m) exceeds `budget`.
SparseModel sparse_model(const Dataset& data, const FilterSpec& filter,
                         int band,
                         std::uint64_t budget = Guards::kSparseBudget);

// Truncated character sum p(x) = 2^{-n} sum_k moment_k (-1)^{k.x}. Negative
// results from aggressive truncation are returned unchanged.
double sparse_prob(const SparseModel& m, const BitString& x);
// 2^n p(x), representable for any n.
double sparse_prob_scaled(const SparseModel& m, const BitString& x);

// Probability that coordinates 0..prefix.size()-1 equal `prefix`. Terms with
// support outside the prefix sum to zero over the free bits and are skipped.
double sparse_marginal(const SparseModel& m, const BitString& prefix);

// Samples coordinate 0 first, then 1, ... from the model's conditionals.
// Throws NegativeConditional naming the prefix when a conditional is
// negative beyond round-off.
std::vector<BitString> autoregressive_sample(const SparseModel& m,
                                             std::uint64_t seed,
                                             std::size_t count);

LogLikelihood log_likelihood(const SparseModel& m, const Dataset& data,
                             double floor = 0.0);

}  // namespace spectra

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectra/dataset.hpp"
#include "spectra/filter.hpp"
#include "spectra/group.hpp"

namespace spectra {

// Multiset empirical measure: p_X(x) = count(x in X) / |X|.
DenseFunction empirical_distribution(const Dataset& data);

// (1 / (sqrt(2^n) |X|)) sum_{x in X} (-1)^{k.x}. Works for any n without a
// dense table; underflows to zero once 2^{-n/2} does.
double empirical_coefficient(const Dataset& data, const BitString& k);
// Mean parity (1/|X|) sum_x (-1)^{k.x} for k given by its set bits.
double empirical_moment(const Dataset& data, const std::vector<int>& support);

// theta^{d_H(x,y)} (1 - theta)^{n - d_H(x,y)}.
double noise_kernel(const BitString& x, const BitString& y, double theta);
// The noise kernel as a one-argument function of x - y on Z_2^n.
DenseFunction noise_kernel_fn(int n, double theta);

struct SmoothedModel {
  int n = 0;
  FilterSpec filter;
  // Inverse transform of the filtered spectrum, before any repair.
  std::vector<double> signed_values;
  // Set when the signed values pass the negative-mass budget.
  std::optional<std::vector<double>> distribution;
  Spectrum spectrum;
  std::string provenance;
};

// Empirical smoothing: transform p_X, filter, transform back. Throws when
// the filter's zero-frequency weight is not 1. For OrderDecay the result is
// a convolution with the noise kernel and therefore nonnegative.
SmoothedModel smooth(const Dataset& data, const FilterSpec& filter);

// Clips negatives totalling at most the budget and renormalizes; throws
// NegativeMass otherwise.
std::vector<double> as_distribution(const SmoothedModel& m);

// Inverse-CDF draws from the dense table.
std::vector<BitString> exact_sample(const SmoothedModel& m, std::uint64_t seed,
                                    std::size_t count);
std::vector<std::uint64_t> sample_indices(const std::vector<double>& p,
                                          std::uint64_t seed,
                                          std::size_t count);

// Picks a uniform training point and flips each bit with probability
// theta; the law is smooth(data, OrderDecay{theta}).
std::vector<BitString> kde_sample(const Dataset& data, double theta,
                                  std::uint64_t seed, std::size_t count);

struct LogLikelihood {
  // -inf when any point has zero probability (and no floor is set).
  double value = 0.0;
  std::size_t zero_points = 0;
};

// sum_x ln p(x); a positive floor replaces smaller probabilities.
LogLikelihood log_likelihood(const SmoothedModel& m, const Dataset& data,
                             double floor = 0.0);

struct FitResult {
  double theta = 0.0;
  double log_likelihood = 0.0;
  std::vector<std::pair<double, double>> curve;
};

// Held-out likelihood search for the order-decay theta on [0, 1/2]: a
// uniform grid followed by golden-section refinement around the best point.
FitResult fit_theta(const Dataset& train, const Dataset& valid, int grid);

}  // namespace spectra

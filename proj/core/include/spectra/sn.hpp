#pragma once

#include <Eigen/Dense>
#include <map>
#include <variant>
#include <vector>

#include "spectra/permutation.hpp"

namespace spectra {

// Transform paths run up to n = 6 by default; `extended` unlocks n = 8.
struct SnGuard {
  bool extended = false;
  int limit() const;
  void check(int n) const;
};

// Real function on S_n, indexed by lexicographic rank.
struct SnFunction {
  SnFunction(int n, std::vector<double> values);
  static SnFunction zeros(int n);
  static SnFunction delta(const Permutation& p);

  double at(const Permutation& p) const { return values[rank(p)]; }
  double total() const;

  int n;
  std::vector<double> values;
};

// One d x d block per partition of n.
struct SnSpectrum {
  int n = 0;
  std::map<Partition, Eigen::MatrixXd> blocks;
};

// f^(lambda) = (n!)^{-1/2} sum_pi f(pi) sigma_lambda(pi)^T.
SnSpectrum sn_fourier(const SnFunction& f, SnGuard guard = {});
// f(pi) = (n!)^{-1/2} sum_lambda d_lambda tr(f^(lambda) sigma_lambda(pi)).
SnFunction sn_inverse_fourier(const SnSpectrum& s, SnGuard guard = {});

// (f * g)(x) = sum_y f(x o y^{-1}) g(y), brute force.
SnFunction sn_convolve(const SnFunction& f, const SnFunction& g);
// Same product through the spectrum: (f * g)^ = sqrt(n!) g^ f^.
SnFunction sn_convolve_spectral(const SnFunction& f, const SnFunction& g,
                                SnGuard guard = {});

// q(e) = p, q(tau) = (1 - p) / C(n, 2) on transpositions, 0 elsewhere.
SnFunction diffusion_kernel(int n, double p);

// Scalar by which diffusing with diffusion_kernel(n, p) multiplies the
// lambda-block of a spectrum: p + (1 - p) content_sum(lambda) / C(n, 2).
double diffusion_multiplier(const Partition& shape, double p);

// Constant on conjugacy classes (cycle types).
bool is_class_function(const SnFunction& f);
// Largest deviation of any Fourier block from (trace / d) * I.
double class_diagonality_check(const SnFunction& f, SnGuard guard = {});

// prior * likelihood, renormalized. Throws ZeroPosteriorMass.
SnFunction condition(const SnFunction& prior, const SnFunction& likelihood);

struct Diffuse {
  double p = 1.0;
};
struct Condition {
  SnFunction likelihood;
};
using MarkovStep = std::variant<Diffuse, Condition>;

// Starts at delta_identity and applies each step; Diffuse runs in Fourier
// space by scaling each block with diffusion_multiplier.
SnFunction markov_model(int n, const std::vector<MarkovStep>& steps,
                        SnGuard guard = {});

// Likelihood of observing object `object` at position `position`: `hit` when
// pi(object) = position, `miss` otherwise.
SnFunction observation_likelihood(int n, int object, int position,
                                  double hit = 1.0, double miss = 0.0);

struct PatternBlock {
  std::vector<int> objects;
  std::vector<int> positions;
};

// sum_pi p(pi) [pi maps every object set onto its position set].
double marginal_pattern(const SnFunction& p,
                        const std::vector<PatternBlock>& pattern);

// f_up(pi) = f(pi(base_point)) for f given on positions 1..n.
SnFunction lift(const std::vector<double>& f, int base_point);

}  // namespace spectra

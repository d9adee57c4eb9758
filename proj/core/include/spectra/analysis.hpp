#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "spectra/group.hpp"

namespace spectra {

// Throws InvalidArgument unless p is real, nonnegative and sums to one.
void require_probability(const DenseFunction& p);

// Normalized expected parity |G|^{-1/2} sum_x p(x) (-1)^{x.k}; equals the
// Walsh coefficient fourier(p).values[k].
double expected_parity(const DenseFunction& p, const Frequency& k);

// (f * g)(x) = sum_y f(x - y) g(y), via the spectrum: the balanced
// convention makes the transform of f * g equal sqrt|G| f^ g^.
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g);
// Same sum evaluated directly in O(|G|^2).
DenseFunction convolve_direct(const DenseFunction& f, const DenseFunction& g);

// Alternating-difference effect of a set of bits on a real response f over
// Z_2^n, defined recursively by L(S) = L(S\i | x_i=1) - L(S\i | x_i=0).
// The empty subset yields sum_x f(x). Related to the spectrum by
// L(S) = (-1)^{|S|} sqrt(2^n) f^(k_S).
double interaction_effect(const DenseFunction& f, const Frequency& subset);

// E[prod_{i in k} (-1)^{x_i}] for every frequency k, indexed by k.
std::vector<double> to_spin_moments(const DenseFunction& p);

struct MmdResult {
  double value = 0.0;
  // False when the kernel's spectrum has a negative entry, in which case
  // the value is not a metric.
  bool kernel_valid = true;
};

// Squared MMD sum_{g,g'} D(g) D(g') phi(g - g') with D = p - q, computed in
// Fourier space as sqrt|G| sum_k |D^(k)|^2 Re phi^(k).
MmdResult mmd_squared(const DenseFunction& p, const DenseFunction& q,
                      const DenseFunction& kernel);
MmdResult mmd_squared_direct(const DenseFunction& p, const DenseFunction& q,
                             const DenseFunction& kernel);

struct DecayShell {
  int order = 0;
  double max_abs = 0.0;
};

// Largest |f^| per Hamming weight (Boolean) or per max_j min(k_j, d-k_j)
// shell (cyclic), ordered by shell.
std::vector<DecayShell> smoothness_decay_profile(const DenseFunction& f);

using BigInt = boost::multiprecision::cpp_int;

// sum_{m <= b} C(n, m).
BigInt count_bandlimited_frequencies(int n, int b);

}  // namespace spectra

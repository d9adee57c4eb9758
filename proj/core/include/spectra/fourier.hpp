#pragma once

#include <span>

#include "spectra/group.hpp"

namespace spectra {

// Sum_i x_i k_i mod 2 on a Boolean group.
int dot_mod2(const GroupElement& x, const Frequency& k);

// chi_k(x): (-1)^{x.k} on Z_2^n, exp(2 pi i sum_j x_j k_j / d) on Z_d^N.
Complex character(const GroupSpec& group, const Frequency& k,
                  const GroupElement& x);
Complex character(const GroupSpec& group, std::uint64_t k, std::uint64_t x);

// Unnormalized in-place Walsh-Hadamard butterfly; length must be a power of
// two. Applying it twice multiplies by the length.
void fwht_inplace(std::span<double> data);
void fwht_inplace(std::span<Complex> data);

// Balanced transform pair:
//   f^(k) = |G|^{-1/2} sum_g f(g) conj(chi_k(g))
//   f(g)  = |G|^{-1/2} sum_k f^(k) chi_k(g)
// Boolean groups use the butterfly, cyclic groups a per-axis FFT.
Spectrum fourier(const DenseFunction& f);
DenseFunction inverse_fourier(const Spectrum& s);
DenseFunction inverse_fourier(const SparseSpectrum& s);

}  // namespace spectra

#include "spectra/fourier.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "spectra/error.hpp"

namespace spectra {

int dot_mod2(const GroupElement& x, const Frequency& k) {
  if (x.dims() != k.dims()) {
    throw InvalidArgument("dot_mod2: element has " + std::to_string(x.dims()) +
                          " bits, frequency has " + std::to_string(k.dims()));
  }
  int acc = 0;
  for (int i = 0; i < x.dims(); ++i) acc ^= (x.coords()[i] & k.coords()[i] & 1);
  return acc;
}

Complex character(const GroupSpec& group, std::uint64_t k, std::uint64_t x) {
  if (k >= group.order() || x >= group.order()) {
    throw InvalidArgument("character: index outside " + group.describe());
  }
  if (group.is_boolean()) {
    return (std::popcount(k & x) & 1) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
  }
  const std::uint64_t d = group.modulus();
  std::uint64_t phase = 0;
  for (int i = 0; i < group.dims(); ++i) {
    phase = (phase + (k % d) * (x % d)) % d;
    k /= d;
    x /= d;
  }
  if (phase == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                       static_cast<double>(d);
  return std::polar(1.0, angle);
}

Complex character(const GroupSpec& group, const Frequency& k,
                  const GroupElement& x) {
  if (k.dims() != group.dims() || x.dims() != group.dims()) {
    throw InvalidArgument("character: arguments do not belong to " +
                          group.describe());
  }
  return character(group, k.index(), x.index());
}

namespace {

template <typename T>
void fwht_impl(std::span<T> data) {
  const std::size_t n = data.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw InvalidArgument("Walsh-Hadamard length must be a power of two");
  }
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T a = data[j];
        const T b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

// One-dimensional DFT of length d with exp(sign * 2 pi i k x / d) kernel,
// unnormalized. Radix-2 when d is a power of two, direct otherwise.
class LineDft {
 public:
  LineDft(int d, int sign) : d_(d), twiddle_(d) {
    for (int m = 0; m < d; ++m) {
      twiddle_[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi * m / d);
    }
    radix2_ = std::has_single_bit(static_cast<unsigned>(d));
    scratch_.resize(d);
  }

  void operator()(std::vector<Complex>& line) {
    if (radix2_) {
      radix2(line);
    } else {
      for (int k = 0; k < d_; ++k) {
        Complex acc = 0.0;
        for (int x = 0; x < d_; ++x) {
          acc += line[x] * twiddle_[(static_cast<long>(k) * x) % d_];
        }
        scratch_[k] = acc;
      }
      line.swap(scratch_);
    }
  }

 private:
  void radix2(std::vector<Complex>& a) {
    const int n = d_;
    for (int i = 1, j = 0; i < n; ++i) {
      int bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
      const int step = n / len;
      for (int i = 0; i < n; i += len) {
        for (int j = 0; j < len / 2; ++j) {
          const Complex u = a[i + j];
          const Complex v = a[i + j + len / 2] * twiddle_[j * step];
          a[i + j] = u + v;
          a[i + j + len / 2] = u - v;
        }
      }
    }
  }

  int d_;
  bool radix2_ = false;
  std::vector<Complex> twiddle_;
  std::vector<Complex> scratch_;
};

void cyclic_transform(const GroupSpec& g, std::vector<Complex>& values,
                      int sign) {
  const std::uint64_t d = g.modulus();
  LineDft dft(g.modulus(), sign);
  std::vector<Complex> line(d);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < g.dims(); ++axis) {
    const std::uint64_t block = stride * d;
    for (std::uint64_t hi = 0; hi < g.order(); hi += block) {
      for (std::uint64_t lo = 0; lo < stride; ++lo) {
        const std::uint64_t base = hi + lo;
        for (std::uint64_t t = 0; t < d; ++t) line[t] = values[base + t * stride];
        dft(line);
        for (std::uint64_t t = 0; t < d; ++t) values[base + t * stride] = line[t];
      }
    }
    stride = block;
  }
}

std::vector<Complex> transform(const GroupSpec& g, std::vector<Complex> values,
                               int sign) {
  g.require_dense();
  if (g.is_boolean()) {
    fwht_impl(std::span<Complex>(values));
  } else {
    cyclic_transform(g, values, sign);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.order()));
  for (auto& z : values) z *= scale;
  return values;
}

}  // namespace

void fwht_inplace(std::span<double> data) { fwht_impl(data); }
void fwht_inplace(std::span<Complex> data) { fwht_impl(data); }

Spectrum fourier(const DenseFunction& f) {
  return Spectrum(f.group, transform(f.group, f.values, -1));
}

DenseFunction inverse_fourier(const Spectrum& s) {
  return DenseFunction(s.group, transform(s.group, s.values, +1));
}

DenseFunction inverse_fourier(const SparseSpectrum& s) {
  return inverse_fourier(s.to_dense());
}

}  // namespace spectra

#include "spectra/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "spectra/config.hpp"
#include "spectra/error.hpp"
#include "spectra/fourier.hpp"

namespace spectra {

void require_probability(const DenseFunction& p) {
  double total = 0.0;
  for (const auto& z : p.values) {
    if (z.imag() != 0.0 || z.real() < 0.0) {
      throw InvalidArgument("not a probability vector: entry " +
                            std::to_string(z.real()) + "+" +
                            std::to_string(z.imag()) + "i");
    }
    total += z.real();
  }
  if (std::abs(total - 1.0) > Tolerances::kProbabilitySum) {
    throw InvalidArgument("not a probability vector: total mass " +
                          std::to_string(total));
  }
}

double expected_parity(const DenseFunction& p, const Frequency& k) {
  if (!p.group.is_boolean()) {
    throw InvalidArgument("expected parity is defined on Boolean groups");
  }
  if (k.dims() != p.group.dims()) {
    throw InvalidArgument("frequency does not belong to " +
                          p.group.describe());
  }
  require_probability(p);
  double acc = 0.0;
  const auto kk = k.index();
  for (std::uint64_t x = 0; x < p.values.size(); ++x) {
    const double v = p.values[x].real();
    acc += (std::popcount(x & kk) & 1) ? -v : v;
  }
  return acc / std::sqrt(static_cast<double>(p.group.order()));
}

namespace {

void require_same_group(const DenseFunction& f, const DenseFunction& g) {
  if (!(f.group == g.group)) {
    throw InvalidArgument("group mismatch: " + f.group.describe() + " vs " +
                          g.group.describe());
  }
}

}  // namespace

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g) {
  require_same_group(f, g);
  auto fh = fourier(f);
  const auto gh = fourier(g);
  const double scale = std::sqrt(static_cast<double>(f.group.order()));
  for (std::size_t k = 0; k < fh.values.size(); ++k) {
    fh.values[k] *= gh.values[k] * scale;
  }
  return inverse_fourier(fh);
}

DenseFunction convolve_direct(const DenseFunction& f, const DenseFunction& g) {
  require_same_group(f, g);
  const auto& grp = f.group;
  auto out = DenseFunction::zeros(grp);
  for (std::uint64_t x = 0; x < grp.order(); ++x) {
    Complex acc = 0.0;
    for (std::uint64_t y = 0; y < grp.order(); ++y) {
      acc += f.values[grp.subtract(x, y)] * g.values[y];
    }
    out.values[x] = acc;
  }
  return out;
}

namespace {

// Recursive conditional effect over the bits in `subset` of a real table.
double effect_rec(std::vector<double> table, std::uint64_t subset) {
  if (subset == 0) {
    double s = 0.0;
    for (double v : table) s += v;
    return s;
  }
  const int bit = std::bit_width(subset) - 1;
  const std::uint64_t low = (std::uint64_t{1} << bit) - 1;
  std::vector<double> zero(table.size() / 2), one(table.size() / 2);
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    const std::uint64_t reduced = (i & low) | ((i >> (bit + 1)) << bit);
    if ((i >> bit) & 1u) {
      one[reduced] = table[i];
    } else {
      zero[reduced] = table[i];
    }
  }
  const std::uint64_t rest = subset & ~(std::uint64_t{1} << bit);
  return effect_rec(std::move(one), rest) - effect_rec(std::move(zero), rest);
}

}  // namespace

double interaction_effect(const DenseFunction& f, const Frequency& subset) {
  if (!f.group.is_boolean() || subset.dims() != f.group.dims()) {
    throw InvalidArgument("interaction effect needs a matching Boolean group");
  }
  for (const auto& z : f.values) {
    if (z.imag() != 0.0) throw InvalidArgument("interaction effect needs real f");
  }
  return effect_rec(f.real(), subset.index());
}

std::vector<double> to_spin_moments(const DenseFunction& p) {
  if (!p.group.is_boolean()) {
    throw InvalidArgument("spin moments are defined on Boolean groups");
  }
  require_probability(p);
  auto m = p.real();
  fwht_inplace(std::span<double>(m));
  return m;
}

namespace {

MmdResult check_kernel(const DenseFunction& kernel) {
  const auto kh = fourier(kernel);
  MmdResult r;
  for (const auto& z : kh.values) {
    if (z.real() < -1e-12) r.kernel_valid = false;
  }
  return r;
}

}  // namespace

MmdResult mmd_squared(const DenseFunction& p, const DenseFunction& q,
                      const DenseFunction& kernel) {
  require_same_group(p, q);
  require_same_group(p, kernel);
  auto diff = p;
  for (std::size_t i = 0; i < diff.values.size(); ++i) {
    diff.values[i] -= q.values[i];
  }
  const auto dh = fourier(diff);
  const auto kh = fourier(kernel);
  double acc = 0.0;
  for (std::size_t k = 0; k < dh.values.size(); ++k) {
    acc += std::norm(dh.values[k]) * kh.values[k].real();
  }
  auto r = check_kernel(kernel);
  r.value = acc * std::sqrt(static_cast<double>(p.group.order()));
  return r;
}

MmdResult mmd_squared_direct(const DenseFunction& p, const DenseFunction& q,
                             const DenseFunction& kernel) {
  require_same_group(p, q);
  require_same_group(p, kernel);
  const auto& g = p.group;
  Complex acc = 0.0;
  for (std::uint64_t a = 0; a < g.order(); ++a) {
    const Complex da = p.values[a] - q.values[a];
    if (da == Complex(0.0)) continue;
    for (std::uint64_t b = 0; b < g.order(); ++b) {
      const Complex db = p.values[b] - q.values[b];
      acc += std::conj(da) * db * kernel.values[g.subtract(a, b)];
    }
  }
  auto r = check_kernel(kernel);
  r.value = acc.real();
  return r;
}

std::vector<DecayShell> smoothness_decay_profile(const DenseFunction& f) {
  const auto s = fourier(f);
  const auto& g = f.group;
  const int shells = g.is_boolean() ? g.dims() : g.modulus() / 2;
  std::vector<DecayShell> out(shells + 1);
  for (int i = 0; i <= shells; ++i) out[i].order = i;
  for (std::uint64_t k = 0; k < g.order(); ++k) {
    int shell = 0;
    if (g.is_boolean()) {
      shell = std::popcount(k);
    } else {
      std::uint64_t rest = k;
      for (int j = 0; j < g.dims(); ++j) {
        const int c = static_cast<int>(rest % g.modulus());
        rest /= g.modulus();
        shell = std::max(shell, std::min(c, g.modulus() - c));
      }
    }
    out[shell].max_abs = std::max(out[shell].max_abs, std::abs(s.values[k]));
  }
  return out;
}

BigInt count_bandlimited_frequencies(int n, int b) {
  if (n < 0 || b < 0 || b > n) {
    throw InvalidArgument("count_bandlimited_frequencies needs 0 <= b <= n");
  }
  BigInt total = 0;
  BigInt binom = 1;
  for (int m = 0; m <= b; ++m) {
    total += binom;
    binom = binom * (n - m) / (m + 1);
  }
  return total;
}

}  // namespace spectra

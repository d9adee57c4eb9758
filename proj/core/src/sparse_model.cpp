#include "spectra/sparse_model.hpp"

#include <cmath>
#include <limits>

#include "spectra/analysis.hpp"
#include "spectra/error.hpp"
#include "spectra/random.hpp"

namespace spectra {

double SparseModel::coefficient(std::size_t i) const {
  const double m = retained.at(i).moment;
  return std::ldexp(m, -n / 2) / (n % 2 ? std::sqrt(2.0) : 1.0);
}

namespace {

double filter_weight(const FilterSpec& filter, const std::vector<int>& support,
                     int n) {
  if (filter.depends_on_order_only()) {
    return filter.order_weight(static_cast<int>(support.size()));
  }
  if (n > 63) {
    throw InvalidArgument("per-frequency filters need n <= 63");
  }
  std::uint64_t k = 0;
  for (int i : support) k |= std::uint64_t{1} << i;
  const Complex w = filter.weight(k, static_cast<int>(support.size()));
  if (w.imag() != 0.0) {
    throw InvalidArgument("sparse models need real filter weights");
  }
  return w.real();
}

int character_sign(const std::vector<int>& support, const BitString& x) {
  int parity = 0;
  for (int i : support) parity ^= x.get(i);
  return parity ? -1 : 1;
}

}  // namespace

SparseModel sparse_model(const Dataset& data, const FilterSpec& filter,
                         int band, std::uint64_t budget) {
  const int n = data.n();
  if (band < 0 || band > n) {
    throw InvalidArgument("band must lie in [0, n]");
  }
  filter.validate(n);
  const BigInt count = count_bandlimited_frequencies(n, band);
  if (count > budget) {
    throw GuardExceeded("bandlimited model needs " + count.str() +
                        " frequencies, above the budget of " +
                        std::to_string(budget));
  }
  if (std::abs(filter_weight(filter, {}, n) - 1.0) > Tolerances::kUnitDcWeight) {
    throw InvalidArgument("filter " + filter.describe() +
                          " does not preserve total mass");
  }

  SparseModel m;
  m.n = n;
  m.band = band;
  m.retained.reserve(static_cast<std::size_t>(count));
  m.retained.push_back({{}, 1.0});
  // Enumerate supports of each size in lexicographic order.
  for (int w = 1; w <= band; ++w) {
    std::vector<int> s(w);
    for (int i = 0; i < w; ++i) s[i] = i;
    while (true) {
      const double g = filter_weight(filter, s, n);
      if (g != 0.0) m.retained.push_back({s, g * empirical_moment(data, s)});
      int i = w - 1;
      while (i >= 0 && s[i] == n - w + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < w; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return m;
}

double sparse_prob_scaled(const SparseModel& m, const BitString& x) {
  if (x.size() != m.n) throw InvalidArgument("bitstring does not match model");
  double acc = 0.0;
  for (const auto& t : m.retained) acc += t.moment * character_sign(t.support, x);
  return acc;
}

double sparse_prob(const SparseModel& m, const BitString& x) {
  return std::ldexp(sparse_prob_scaled(m, x), -m.n);
}

double sparse_marginal(const SparseModel& m, const BitString& prefix) {
  const int len = prefix.size();
  if (len > m.n) throw InvalidArgument("prefix longer than the model");
  double acc = 0.0;
  for (const auto& t : m.retained) {
    if (!t.support.empty() && t.support.back() >= len) continue;
    acc += t.moment * character_sign(t.support, prefix);
  }
  return std::ldexp(acc, -len);
}

std::vector<BitString> autoregressive_sample(const SparseModel& m,
                                             std::uint64_t seed,
                                             std::size_t count) {
  // Terms grouped by their highest set bit; the k = 0 term seeds the sum.
  std::vector<std::vector<const SparseTerm*>> by_top(m.n);
  double base = 0.0;
  for (const auto& t : m.retained) {
    if (t.support.empty()) {
      base += t.moment;
    } else {
      by_top[t.support.back()].push_back(&t);
    }
  }
  constexpr double kSlack = 1e-12;
  Rng rng(seed);
  std::vector<BitString> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    BitString x(m.n);
    // mass = 2^len * P(prefix)
    double mass = base;
    for (int bit = 0; bit < m.n; ++bit) {
      double t = 0.0;
      for (const SparseTerm* term : by_top[bit]) {
        int parity = 0;
        for (std::size_t j = 0; j + 1 < term->support.size(); ++j) {
          parity ^= x.get(term->support[j]);
        }
        t += parity ? -term->moment : term->moment;
      }
      double zero = mass + t, one = mass - t;
      if (zero < -kSlack * std::abs(mass) || one < -kSlack * std::abs(mass) ||
          !(mass > 0.0)) {
        BitString prefix(bit);
        for (int j = 0; j < bit; ++j) prefix.set(j, x.get(j));
        throw NegativeConditional(prefix.to_text(),
                                  std::min(zero, one) / (2.0 * mass));
      }
      zero = std::max(zero, 0.0);
      one = std::max(one, 0.0);
      const bool pick_one = rng.uniform() * (zero + one) >= zero;
      x.set(bit, pick_one);
      mass = pick_one ? one : zero;
    }
    out.push_back(std::move(x));
  }
  return out;
}

LogLikelihood log_likelihood(const SparseModel& m, const Dataset& data,
                             double floor) {
  if (data.n() != m.n) throw InvalidArgument("dataset does not match model");
  LogLikelihood ll;
  const double log_scale = m.n * std::log(2.0);
  for (const auto& x : data.samples()) {
    const double s = sparse_prob_scaled(m, x);
    double lp = s > 0.0 ? std::log(s) - log_scale
                        : -std::numeric_limits<double>::infinity();
    if (floor > 0.0) lp = std::max(lp, std::log(floor));
    if (std::isinf(lp)) {
      ++ll.zero_points;
    } else {
      ll.value += lp;
    }
  }
  if (ll.zero_points) ll.value = -std::numeric_limits<double>::infinity();
  return ll;
}

}  // namespace spectra

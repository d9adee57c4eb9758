#include "spectra/smoothing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "spectra/config.hpp"
#include "spectra/error.hpp"
#include "spectra/fourier.hpp"
#include "spectra/random.hpp"

namespace spectra {

namespace {

GroupSpec dense_group(int n) {
  auto g = GroupSpec::boolean(n);
  g.require_dense();
  return g;
}

}  // namespace

DenseFunction empirical_distribution(const Dataset& data) {
  const auto g = dense_group(data.n());
  auto p = DenseFunction::zeros(g);
  const double w = 1.0 / static_cast<double>(data.size());
  for (const auto& x : data.samples()) p.values[x.to_index()] += w;
  return p;
}

double empirical_coefficient(const Dataset& data, const BitString& k) {
  if (k.size() != data.n()) {
    throw InvalidArgument("frequency length does not match dataset");
  }
  long acc = 0;
  for (const auto& x : data.samples()) acc += x.dot_mod2(k) ? -1 : 1;
  return std::ldexp(static_cast<double>(acc), -data.n() / 2) /
         (data.n() % 2 ? std::sqrt(2.0) : 1.0) /
         static_cast<double>(data.size());
}

double empirical_moment(const Dataset& data,
                        const std::vector<int>& support) {
  long acc = 0;
  for (const auto& x : data.samples()) {
    int parity = 0;
    for (int i : support) parity ^= x.get(i);
    acc += parity ? -1 : 1;
  }
  return static_cast<double>(acc) / static_cast<double>(data.size());
}

double noise_kernel(const BitString& x, const BitString& y, double theta) {
  const int d = x.hamming_distance(y);
  return std::pow(theta, d) * std::pow(1.0 - theta, x.size() - d);
}

DenseFunction noise_kernel_fn(int n, double theta) {
  const auto g = dense_group(n);
  auto phi = DenseFunction::zeros(g);
  for (std::uint64_t z = 0; z < g.order(); ++z) {
    const int d = std::popcount(z);
    phi.values[z] = std::pow(theta, d) * std::pow(1.0 - theta, n - d);
  }
  return phi;
}

namespace {

// Negative mass of the signed table relative to its total.
double negative_mass(const std::vector<double>& v) {
  double neg = 0.0;
  for (double x : v) {
    if (x < 0.0) neg -= x;
  }
  return neg;
}

std::optional<std::vector<double>> repaired(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  const double neg = negative_mass(v);
  if (!(total > 0.0) || neg > Tolerances::kNegativeMassBudget * total) {
    return std::nullopt;
  }
  std::vector<double> out(v.size());
  double kept = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::max(v[i], 0.0);
    kept += out[i];
  }
  for (double& x : out) x /= kept;
  return out;
}

}  // namespace

SmoothedModel smooth(const Dataset& data, const FilterSpec& filter) {
  const int n = data.n();
  filter.validate(n);
  const Complex dc = filter.weight(0, 0);
  if (std::abs(dc - Complex(1.0)) > Tolerances::kUnitDcWeight) {
    throw InvalidArgument("filter " + filter.describe() +
                          " does not preserve total mass (zero-frequency "
                          "weight must be 1)");
  }
  const auto filtered = apply_filter(fourier(empirical_distribution(data)),
                                     filter);
  const auto back = inverse_fourier(filtered);
  std::vector<double> values(back.values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(back.values[i].imag()) > 1e-12) {
      throw InvalidArgument("filter " + filter.describe() +
                            " produces complex values");
    }
    values[i] = back.values[i].real();
  }
  if (std::holds_alternative<OrderDecay>(filter.variant())) {
    const double lo = *std::min_element(values.begin(), values.end());
    if (lo < -Tolerances::kRoundoffNegative) {
      throw Error("order-decay smoothing produced " + std::to_string(lo));
    }
  }
  auto dist = repaired(values);
  return SmoothedModel{n, filter, std::move(values), std::move(dist), filtered,
                       data.digest()};
}

std::vector<double> as_distribution(const SmoothedModel& m) {
  if (m.signed_values.empty()) throw InvalidArgument("model has no values");
  auto d = repaired(m.signed_values);
  if (!d) throw NegativeMass(negative_mass(m.signed_values), m.filter.describe());
  return *std::move(d);
}

std::vector<std::uint64_t> sample_indices(const std::vector<double>& p,
                                          std::uint64_t seed,
                                          std::size_t count) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t i = std::min<std::size_t>(it - cdf.begin(), p.size() - 1);
    // Never land on a zero-probability entry via the clamp above.
    while (p[i] <= 0.0 && i > 0) --i;
    out.push_back(i);
  }
  return out;
}

std::vector<BitString> exact_sample(const SmoothedModel& m, std::uint64_t seed,
                                    std::size_t count) {
  dense_group(m.n);
  const auto p = m.distribution ? *m.distribution : as_distribution(m);
  std::vector<BitString> out;
  out.reserve(count);
  for (auto i : sample_indices(p, seed, count)) {
    out.push_back(BitString::from_index(i, m.n));
  }
  return out;
}

std::vector<BitString> kde_sample(const Dataset& data, double theta,
                                  std::uint64_t seed, std::size_t count) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw InvalidArgument("theta must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<BitString> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    BitString x = data.samples()[rng.below(data.size())];
    for (int i = 0; i < x.size(); ++i) {
      if (rng.uniform() < theta) x.flip(i);
    }
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

LogLikelihood sum_logs(const std::vector<double>& p, const Dataset& data,
                       double floor) {
  LogLikelihood ll;
  for (const auto& x : data.samples()) {
    double v = p[x.to_index()];
    if (floor > 0.0) v = std::max(v, floor);
    if (v <= 0.0) {
      ++ll.zero_points;
    } else {
      ll.value += std::log(v);
    }
  }
  if (ll.zero_points) ll.value = -std::numeric_limits<double>::infinity();
  return ll;
}

}  // namespace

LogLikelihood log_likelihood(const SmoothedModel& m, const Dataset& data,
                             double floor) {
  if (data.n() != m.n) throw InvalidArgument("dataset does not match model");
  const auto p = m.distribution ? *m.distribution : as_distribution(m);
  return sum_logs(p, data, floor);
}

FitResult fit_theta(const Dataset& train, const Dataset& valid, int grid) {
  if (grid < 3) throw InvalidArgument("fit_theta needs a grid of at least 3");
  if (train.n() != valid.n()) {
    throw InvalidArgument("train and validation sets differ in width");
  }
  const int n = train.n();
  const auto g = dense_group(n);
  const auto base = fourier(empirical_distribution(train));
  const double norm = 1.0 / std::sqrt(static_cast<double>(g.order()));

  std::vector<double> work(g.order());
  auto score = [&](double theta) {
    const double r = 1.0 - 2.0 * theta;
    for (std::uint64_t k = 0; k < g.order(); ++k) {
      work[k] = base.values[k].real() * std::pow(r, std::popcount(k));
    }
    fwht_inplace(std::span<double>(work));
    for (double& v : work) v = std::max(v * norm, 0.0);
    return sum_logs(work, valid, 0.0).value;
  };

  FitResult fit;
  fit.log_likelihood = -std::numeric_limits<double>::infinity();
  int best = 0;
  for (int i = 0; i < grid; ++i) {
    const double theta = 0.5 * i / (grid - 1);
    const double s = score(theta);
    fit.curve.emplace_back(theta, s);
    if (s > fit.log_likelihood) {
      fit.log_likelihood = s;
      fit.theta = theta;
      best = i;
    }
  }

  // Golden-section search on the bracket around the best grid point.
  double a = 0.5 * std::max(best - 1, 0) / (grid - 1);
  double b = 0.5 * std::min(best + 1, grid - 1) / (grid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = score(c), fd = score(d);
  for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = score(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = score(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = score(mid);
  if (fm > fit.log_likelihood) {
    fit.theta = mid;
    fit.log_likelihood = fm;
  }
  return fit;
}

}  // namespace spectra

#include "spectra/sn.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "spectra/config.hpp"
#include "spectra/error.hpp"
#include "spectra/young.hpp"

namespace spectra {

int SnGuard::limit() const {
  return extended ? Guards::kMaxSnExtended : Guards::kMaxSnDefault;
}

void SnGuard::check(int n) const {
  if (n < 1 || n > limit()) {
    throw GuardExceeded("S_" + std::to_string(n) + " exceeds the limit n <= " +
                        std::to_string(limit()) +
                        (extended ? "" : " (extended guard allows 8)"));
  }
}

SnFunction::SnFunction(int n_, std::vector<double> v)
    : n(n_), values(std::move(v)) {
  if (n < 1 || n > Guards::kMaxSnExtended) {
    throw GuardExceeded("S_n functions are limited to n <= " +
                        std::to_string(Guards::kMaxSnExtended));
  }
  if (values.size() != factorial(n)) {
    throw InvalidArgument("S_n function needs n! values");
  }
  for (double x : values) {
    if (!std::isfinite(x)) throw InvalidArgument("non-finite S_n value");
  }
}

SnFunction SnFunction::zeros(int n) {
  if (n < 1 || n > Guards::kMaxSnExtended) {
    throw GuardExceeded("S_n functions are limited to n <= " +
                        std::to_string(Guards::kMaxSnExtended));
  }
  return SnFunction(n, std::vector<double>(factorial(n)));
}

SnFunction SnFunction::delta(const Permutation& p) {
  auto f = zeros(p.size());
  f.values[rank(p)] = 1.0;
  return f;
}

double SnFunction::total() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

SnSpectrum sn_fourier(const SnFunction& f, SnGuard guard) {
  guard.check(f.n);
  const auto basis = sn_basis(f.n);
  const auto walk = adjacent_walk(f.n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.values.size()));
  SnSpectrum out;
  out.n = f.n;
  for (const auto& irrep : basis->irreps) {
    const int d = irrep.dim();
    Eigen::MatrixXd rep = Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t t = 0; t < walk.ranks.size(); ++t) {
      if (t) irrep.right_multiply_generator(rep, walk.swaps[t - 1]);
      const double v = f.values[walk.ranks[t]];
      if (v != 0.0) acc.noalias() += v * rep;
    }
    out.blocks.emplace(irrep.shape(), acc.transpose() * scale);
  }
  return out;
}

SnFunction sn_inverse_fourier(const SnSpectrum& s, SnGuard guard) {
  guard.check(s.n);
  const auto basis = sn_basis(s.n);
  const auto walk = adjacent_walk(s.n);
  auto f = SnFunction::zeros(s.n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.values.size()));
  for (const auto& irrep : basis->irreps) {
    const auto it = s.blocks.find(irrep.shape());
    if (it == s.blocks.end()) {
      throw InvalidArgument("spectrum lacks partition " +
                            irrep.shape().to_text());
    }
    const int d = irrep.dim();
    if (it->second.rows() != d || it->second.cols() != d) {
      throw InvalidArgument("block " + irrep.shape().to_text() +
                            " has the wrong size");
    }
    // tr(F R) = sum_ij F_ij R_ji
    const Eigen::MatrixXd ft = it->second.transpose();
    Eigen::MatrixXd rep = Eigen::MatrixXd::Identity(d, d);
    for (std::size_t t = 0; t < walk.ranks.size(); ++t) {
      if (t) irrep.right_multiply_generator(rep, walk.swaps[t - 1]);
      f.values[walk.ranks[t]] += d * scale * ft.cwiseProduct(rep).sum();
    }
  }
  return f;
}

namespace {

void require_same_n(const SnFunction& f, const SnFunction& g) {
  if (f.n != g.n) throw InvalidArgument("S_n functions of different n");
}

}  // namespace

SnFunction sn_convolve(const SnFunction& f, const SnFunction& g) {
  require_same_n(f, g);
  if (f.n > 7) throw GuardExceeded("brute-force S_n convolution limited to n <= 7");
  const auto perms = enumerate(f.n);
  std::vector<Permutation> inverses;
  inverses.reserve(perms.size());
  for (const auto& p : perms) inverses.push_back(p.inverse());
  auto out = SnFunction::zeros(f.n);
  for (std::size_t y = 0; y < perms.size(); ++y) {
    if (g.values[y] == 0.0) continue;
    for (std::size_t x = 0; x < perms.size(); ++x) {
      out.values[x] += f.values[rank(compose(perms[x], inverses[y]))] * g.values[y];
    }
  }
  return out;
}

SnFunction sn_convolve_spectral(const SnFunction& f, const SnFunction& g,
                                SnGuard guard) {
  require_same_n(f, g);
  auto fh = sn_fourier(f, guard);
  const auto gh = sn_fourier(g, guard);
  const double scale = std::sqrt(static_cast<double>(f.values.size()));
  for (auto& [shape, block] : fh.blocks) {
    block = scale * gh.blocks.at(shape) * block;
  }
  return sn_inverse_fourier(fh, guard);
}

SnFunction diffusion_kernel(int n, double p) {
  if (n < 2) throw InvalidArgument("diffusion needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  auto q = SnFunction::zeros(n);
  const double pairs = n * (n - 1) / 2.0;
  q.values[0] = p;  // identity has rank 0
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto v = Permutation::identity(n).one_line();
      std::swap(v[i - 1], v[j - 1]);
      q.values[rank(Permutation(v))] = (1.0 - p) / pairs;
    }
  }
  return q;
}

double diffusion_multiplier(const Partition& shape, double p) {
  const int n = shape.size();
  const double pairs = n * (n - 1) / 2.0;
  return p + (1.0 - p) * YoungIrrep(shape).content_sum() / pairs;
}

bool is_class_function(const SnFunction& f) {
  const auto perms = enumerate(f.n);
  std::map<Partition, double> seen;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto [it, fresh] = seen.emplace(perms[i].cycle_type(), f.values[i]);
    if (!fresh && std::abs(it->second - f.values[i]) > Tolerances::kClassFunction) {
      return false;
    }
  }
  return true;
}

double class_diagonality_check(const SnFunction& f, SnGuard guard) {
  const auto s = sn_fourier(f, guard);
  double worst = 0.0;
  for (const auto& [shape, block] : s.blocks) {
    const double c = block.trace() / block.rows();
    const Eigen::MatrixXd resid =
        block - c * Eigen::MatrixXd::Identity(block.rows(), block.cols());
    worst = std::max(worst, resid.cwiseAbs().maxCoeff());
  }
  return worst;
}

SnFunction condition(const SnFunction& prior, const SnFunction& likelihood) {
  require_same_n(prior, likelihood);
  auto out = prior;
  double total = 0.0;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (likelihood.values[i] < 0.0) {
      throw InvalidArgument("likelihood must be nonnegative");
    }
    out.values[i] *= likelihood.values[i];
    total += out.values[i];
  }
  if (!(total > 0.0)) throw ZeroPosteriorMass();
  for (double& v : out.values) v /= total;
  return out;
}

SnFunction markov_model(int n, const std::vector<MarkovStep>& steps,
                        SnGuard guard) {
  guard.check(n);
  auto state = SnFunction::delta(Permutation::identity(n));
  for (const auto& step : steps) {
    if (const auto* d = std::get_if<Diffuse>(&step)) {
      if (n < 2) throw InvalidArgument("diffusion needs n >= 2");
      if (!(d->p >= 0.0 && d->p <= 1.0)) {
        throw InvalidArgument("diffusion p must lie in [0, 1]");
      }
      auto s = sn_fourier(state, guard);
      for (auto& [shape, block] : s.blocks) {
        block *= diffusion_multiplier(shape, d->p);
      }
      state = sn_inverse_fourier(s, guard);
    } else {
      state = condition(state, std::get<Condition>(step).likelihood);
    }
  }
  return state;
}

SnFunction observation_likelihood(int n, int object, int position, double hit,
                                  double miss) {
  if (object < 1 || object > n || position < 1 || position > n) {
    throw InvalidArgument("observation outside 1..n");
  }
  auto f = SnFunction::zeros(n);
  const auto perms = enumerate(n);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    f.values[i] = perms[i](object) == position ? hit : miss;
  }
  return f;
}

double marginal_pattern(const SnFunction& p,
                        const std::vector<PatternBlock>& pattern) {
  std::set<int> objects, positions;
  for (const auto& b : pattern) {
    if (b.objects.size() != b.positions.size() || b.objects.empty()) {
      throw InvalidArgument("pattern block needs equal, nonempty object and "
                            "position sets");
    }
    for (int o : b.objects) {
      if (o < 1 || o > p.n || !objects.insert(o).second) {
        throw InvalidArgument("pattern objects must be distinct and in 1..n");
      }
    }
    for (int q : b.positions) {
      if (q < 1 || q > p.n || !positions.insert(q).second) {
        throw InvalidArgument("pattern positions must be distinct and in 1..n");
      }
    }
  }
  const auto perms = enumerate(p.n);
  double acc = 0.0;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    bool match = true;
    for (const auto& b : pattern) {
      std::vector<int> image;
      for (int o : b.objects) image.push_back(perms[i](o));
      if (!std::is_permutation(image.begin(), image.end(), b.positions.begin())) {
        match = false;
        break;
      }
    }
    if (match) acc += p.values[i];
  }
  return acc;
}

SnFunction lift(const std::vector<double>& f, int base_point) {
  const int n = static_cast<int>(f.size());
  if (n < 2) throw InvalidArgument("lifting needs n >= 2");
  if (base_point < 1 || base_point > n) {
    throw InvalidArgument("base point outside 1..n");
  }
  auto out = SnFunction::zeros(n);
  const auto perms = enumerate(n);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    out.values[i] = f[perms[i](base_point) - 1];
  }
  return out;
}

}  // namespace spectra

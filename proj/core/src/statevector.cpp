#include "spectra/statevector.hpp"

#include <cmath>
#include <numbers>

#include "spectra/config.hpp"
#include "spectra/error.hpp"

namespace spectra {

namespace {

void require_qubit(int q, int total) {
  if (q < 0 || q >= total) {
    throw InvalidArgument("qubit " + std::to_string(q) + " outside register of " +
                          std::to_string(total));
  }
}

double l2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

StateVector::StateVector(int n_data, int n_anc, std::vector<Complex> amps)
    : n_data_(n_data), n_anc_(n_anc), amps_(std::move(amps)) {
  if (n_data < 1 || n_anc < 0 || n_data + n_anc > 62) {
    throw InvalidArgument("invalid register sizes");
  }
  if (amps_.size() != (std::size_t{1} << (n_data + n_anc))) {
    throw InvalidArgument("amplitude count does not match register");
  }
  if (std::abs(l2(amps_) - 1.0) > Tolerances::kStateNorm) {
    throw InvalidArgument("state is not normalized (norm " +
                          std::to_string(l2(amps_)) + ")");
  }
}

StateVector StateVector::basis(int n_data, std::uint64_t index) {
  if (n_data < 1 || n_data > 62) throw InvalidArgument("invalid register size");
  std::vector<Complex> a(std::size_t{1} << n_data);
  a.at(index) = 1.0;
  return StateVector(n_data, 0, std::move(a));
}

double StateVector::norm() const { return l2(amps_); }

StateVector StateVector::hadamard(int qubit) const {
  require_qubit(qubit, n_qubits());
  auto a = amps_;
  const std::size_t bit = std::size_t{1} << qubit;
  const double r = 1.0 / std::numbers::sqrt2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    const Complex u = a[i], v = a[i | bit];
    a[i] = (u + v) * r;
    a[i | bit] = (u - v) * r;
  }
  return StateVector(n_data_, n_anc_, std::move(a));
}

StateVector StateVector::controlled_ry(int control, int target,
                                       double angle) const {
  require_qubit(control, n_qubits());
  require_qubit(target, n_qubits());
  if (control == target) throw InvalidArgument("control equals target");
  auto a = amps_;
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(i & cb) || (i & tb)) continue;
    const Complex u = a[i], v = a[i | tb];
    a[i] = c * u - s * v;
    a[i | tb] = s * u + c * v;
  }
  return StateVector(n_data_, n_anc_, std::move(a));
}

StateVector StateVector::add_ancilla() const {
  auto a = amps_;
  a.resize(amps_.size() * 2);
  return StateVector(n_data_, n_anc_ + 1, std::move(a));
}

PostselectReport postselect_ancillas(const StateVector& s) {
  const std::size_t data_dim = std::size_t{1} << s.n_data();
  std::vector<Complex> kept(s.amps().begin(), s.amps().begin() + data_dim);
  double p = 0.0;
  for (const auto& z : kept) p += std::norm(z);
  if (p < Tolerances::kMinSuccessProbability) throw ZeroSuccessProbability(p);
  const double scale = 1.0 / std::sqrt(p);
  for (auto& z : kept) z *= scale;
  return {p, StateVector(s.n_data(), 0, std::move(kept))};
}

PreparedState prepare_superposition(const Dataset& data) {
  if (data.n() > Guards::kMaxDataQubits) {
    throw GuardExceeded("superposition over " + std::to_string(data.n()) +
                        " qubits exceeds the limit of " +
                        std::to_string(Guards::kMaxDataQubits));
  }
  const auto unique = data.unique();
  std::vector<Complex> a(std::size_t{1} << data.n());
  const double w = 1.0 / std::sqrt(static_cast<double>(unique.size()));
  for (const auto& x : unique) a[x.to_index()] = w;
  return {StateVector(data.n(), 0, std::move(a)),
          unique.size() != data.size()};
}

StateVector walsh_qft(const StateVector& s) {
  StateVector out = s;
  for (int q = 0; q < s.n_data(); ++q) out = out.hadamard(q);
  return out;
}

namespace {

StateVector dense_dft(const StateVector& s, int sign) {
  if (s.n_anc() != 0) throw InvalidArgument("cyclic QFT expects no ancillas");
  if (s.n_data() > Guards::kMaxCyclicQftQubits) {
    throw GuardExceeded("dense cyclic QFT limited to " +
                        std::to_string(Guards::kMaxCyclicQftQubits) +
                        " qubits");
  }
  const std::size_t d = s.dim();
  std::vector<Complex> roots(d);
  for (std::size_t m = 0; m < d; ++m) {
    roots[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                   static_cast<double>(m) /
                                   static_cast<double>(d));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    Complex acc = 0.0;
    for (std::size_t x = 0; x < d; ++x) {
      acc += roots[(k * x) & (d - 1)] * s.amps()[x];
    }
    out[k] = acc * scale;
  }
  return StateVector(s.n_data(), 0, std::move(out));
}

}  // namespace

StateVector cyclic_qft(const StateVector& s) { return dense_dft(s, +1); }
StateVector inverse_cyclic_qft(const StateVector& s) { return dense_dft(s, -1); }

PostselectReport ancilla_decay_filter(const StateVector& s, double theta,
                                      AncillaSchedule schedule) {
  if (s.n_anc() != 0) throw InvalidArgument("decay filter expects no ancillas");
  if (!(theta >= 0.0 && theta <= 0.5)) {
    throw InvalidArgument("decay filter theta must lie in [0, 1/2]");
  }
  const double angle = 2.0 * std::acos(1.0 - 2.0 * theta);
  const int n = s.n_data();
  if (schedule == AncillaSchedule::kSequential) {
    PostselectReport report{1.0, s};
    for (int q = 0; q < n; ++q) {
      const auto rotated = report.state_after.add_ancilla().controlled_ry(
          q, n, angle);
      auto step = postselect_ancillas(rotated);
      report.success_prob *= step.success_prob;
      if (report.success_prob < Tolerances::kMinSuccessProbability) {
        throw ZeroSuccessProbability(report.success_prob);
      }
      report.state_after = std::move(step.state_after);
    }
    return report;
  }
  if (2 * n > 24) throw GuardExceeded("joint ancilla schedule limited to 12 qubits");
  StateVector wide = s;
  for (int q = 0; q < n; ++q) wide = wide.add_ancilla();
  for (int q = 0; q < n; ++q) wide = wide.controlled_ry(q, n + q, angle);
  return postselect_ancillas(wide);
}

DenseFunction born_distribution(const StateVector& s) {
  if (s.n_anc() != 0) {
    throw InvalidArgument("Born distribution expects ancillas removed");
  }
  std::vector<Complex> p(s.dim());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(s.amps()[i]);
  return DenseFunction(GroupSpec::boolean(s.n_data()), std::move(p));
}

QuantumSmoothResult quantum_smooth(const Dataset& data, double theta) {
  auto prepared = prepare_superposition(data);
  const auto filtered =
      ancilla_decay_filter(walsh_qft(prepared.state), theta);
  return {born_distribution(walsh_qft(filtered.state_after)),
          filtered.success_prob, prepared.duplicates_collapsed};
}

Spectrum autoconvolution_spectrum(const Spectrum& psi_hat) {
  const auto& g = psi_hat.group;
  auto out = Spectrum::zeros(g);
  const auto& v = psi_hat.values;
  for (std::uint64_t k = 0; k < g.order(); ++k) {
    Complex acc = 0.0;
    for (std::uint64_t s = 0; s < g.order(); ++s) {
      acc += v[s] * std::conj(v[g.subtract(s, k)]);
    }
    out.values[k] = acc;
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.order()));
  for (auto& z : out.values) z *= scale;
  return out;
}

}  // namespace spectra

#pragma once

#include <vector>

#include "spectra/dataset.hpp"
#include "spectra/group.hpp"

namespace spectra {

// Amplitudes over n_data data qubits (low bits of the basis index) and
// n_anc ancillas (high bits).
class StateVector {
 public:
  StateVector(int n_data, int n_anc, std::vector<Complex> amps);
  static StateVector basis(int n_data, std::uint64_t index);

  int n_data() const { return n_data_; }
  int n_anc() const { return n_anc_; }
  int n_qubits() const { return n_data_ + n_anc_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amps() const { return amps_; }
  double norm() const;

  // Gate layer primitives; each returns a new state.
  StateVector hadamard(int qubit) const;
  // RY(angle) on `target` when `control` is |1>.
  StateVector controlled_ry(int control, int target, double angle) const;
  // Appends one ancilla in |0> as the new highest qubit.
  StateVector add_ancilla() const;

 private:
  int n_data_;
  int n_anc_;
  std::vector<Complex> amps_;
};

struct PostselectReport {
  double success_prob = 0.0;
  StateVector state_after;
};

// Projects every ancilla onto |0>, drops them and renormalizes. Throws
// ZeroSuccessProbability below the configured threshold.
PostselectReport postselect_ancillas(const StateVector& s);

struct PreparedState {
  StateVector state;
  bool duplicates_collapsed = false;
};

// Uniform superposition over the distinct training samples.
PreparedState prepare_superposition(const Dataset& data);

// Hadamard on every data qubit: the balanced Walsh transform of the
// amplitudes.
StateVector walsh_qft(const StateVector& s);

// DFT over Z_{2^n} on the data register, applied as a dense matrix:
// out[k] = 2^{-n/2} sum_x exp(+2 pi i k x / 2^n) in[x]. Requires no
// ancillas.
StateVector cyclic_qft(const StateVector& s);
StateVector inverse_cyclic_qft(const StateVector& s);

enum class AncillaSchedule {
  // One ancilla at a time: rotate, postselect, drop. Peak width n + 1.
  kSequential,
  // All n ancillas allocated, rotated, then postselected together.
  kJoint,
};

// One ancilla per data qubit, rotated by RY(2 arccos(1 - 2 theta)) when that
// data qubit is 1, then postselected on |0>: each amplitude is scaled by
// (1 - 2 theta)^{|k|} before renormalization.
PostselectReport ancilla_decay_filter(
    const StateVector& s, double theta,
    AncillaSchedule schedule = AncillaSchedule::kSequential);

// |amplitude|^2 over the data register.
DenseFunction born_distribution(const StateVector& s);

struct QuantumSmoothResult {
  DenseFunction distribution;
  double success_prob = 0.0;
  bool duplicates_collapsed = false;
};

// prepare -> walsh_qft -> ancilla_decay_filter -> walsh_qft -> Born rule.
QuantumSmoothResult quantum_smooth(const Dataset& data, double theta);

// p^(k) = |G|^{-1/2} sum_s psi^(s) conj(psi^(s - k)): the spectrum of the
// Born distribution from the spectrum of the amplitudes.
Spectrum autoconvolution_spectrum(const Spectrum& psi_hat);

}  // namespace spectra

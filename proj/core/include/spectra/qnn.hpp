#pragma once

#include <Eigen/Dense>
#include <map>
#include <variant>
#include <vector>

#include "spectra/group.hpp"
#include "spectra/random.hpp"

namespace spectra {

// Eigenvalues of each encoding generator acting on the scalar input.
struct QnnEncodingSpec {
  std::vector<std::vector<double>> gates;
};

struct FrequencySet {
  std::vector<double> values;  // sorted, deduplicated
  bool integer_spectrum = true;
};

// All differences Lambda_i - Lambda_j of eigenvalue sums that pick one
// eigenvalue per gate. Built as the Minkowski sum of per-gate difference
// sets; no gates gives {0}.
FrequencySet qnn_frequency_set(const QnnEncodingSpec& spec);

// exp(i x H) on one qubit, with H a 2x2 Hermitian generator.
struct EncodingGate {
  int qubit = 0;
  Eigen::Matrix2cd generator;
};

// A full-register trainable unitary or an encoding gate.
using QnnBlock = std::variant<Eigen::MatrixXcd, EncodingGate>;

// f(x) = <psi_x| O |psi_x> with |psi_x> = B_L ... B_1 |0...0>.
class QnnModel {
 public:
  QnnModel(int n_qubits, std::vector<QnnBlock> blocks,
           Eigen::MatrixXcd observable);

  int n_qubits() const { return n_; }
  const std::vector<QnnBlock>& blocks() const { return blocks_; }
  const Eigen::MatrixXcd& observable() const { return observable_; }
  QnnEncodingSpec encoding_spec() const;

  double evaluate(double x) const;

 private:
  struct Eigensystem {
    Eigen::Matrix2cd vectors;
    Eigen::Vector2d values;
  };

  int n_;
  std::vector<QnnBlock> blocks_;
  std::vector<Eigensystem> eigen_;  // one per EncodingGate, in order
  Eigen::MatrixXcd observable_;
};

double qnn_evaluate(const QnnModel& m, double x);

// Fourier-series coefficients c_k (f(x) = sum_k c_k e^{ikx}) for |k| <= k_max,
// from 4 k_max + 1 equispaced samples on [0, 2 pi).
std::map<int, Complex> qnn_extract_spectrum(const QnnModel& m, int k_max);

// Haar-random unitary (QR of a complex Gaussian matrix with phase fix).
Eigen::MatrixXcd random_unitary(int dim, Rng& rng);

namespace pauli {
Eigen::Matrix2cd x();
Eigen::Matrix2cd y();
Eigen::Matrix2cd z();
}  // namespace pauli

// Observable acting as `op` on one qubit and identity elsewhere.
Eigen::MatrixXcd single_qubit_observable(int n_qubits, int qubit,
                                         const Eigen::Matrix2cd& op);

}  // namespace spectra

#include "spectra/qnn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectra/config.hpp"
#include "spectra/error.hpp"

namespace spectra {

namespace {

std::vector<double> dedupe(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || std::abs(x - out.back()) > Tolerances::kIntegerFrequency) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

FrequencySet qnn_frequency_set(const QnnEncodingSpec& spec) {
  std::vector<double> omega{0.0};
  for (const auto& eigs : spec.gates) {
    if (eigs.empty()) throw InvalidArgument("encoding gate without eigenvalues");
    std::vector<double> diffs;
    for (double a : eigs) {
      if (!std::isfinite(a)) throw InvalidArgument("non-finite eigenvalue");
      for (double b : eigs) diffs.push_back(a - b);
    }
    diffs = dedupe(std::move(diffs));
    std::vector<double> next;
    next.reserve(omega.size() * diffs.size());
    for (double w : omega) {
      for (double d : diffs) next.push_back(w + d);
    }
    omega = dedupe(std::move(next));
  }
  FrequencySet out;
  for (double& w : omega) {
    const double r = std::round(w);
    if (std::abs(w - r) <= Tolerances::kIntegerFrequency) {
      w = r == 0.0 ? 0.0 : r;
    } else {
      out.integer_spectrum = false;
    }
  }
  out.values = std::move(omega);
  return out;
}

QnnModel::QnnModel(int n_qubits, std::vector<QnnBlock> blocks,
                   Eigen::MatrixXcd observable)
    : n_(n_qubits), blocks_(std::move(blocks)),
      observable_(std::move(observable)) {
  if (n_ < 1 || n_ > Guards::kMaxQnnQubits) {
    throw GuardExceeded("QNN register must have 1.." +
                        std::to_string(Guards::kMaxQnnQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_;
  if (observable_.rows() != dim || observable_.cols() != dim) {
    throw InvalidArgument("observable has the wrong dimension");
  }
  if ((observable_ - observable_.adjoint()).cwiseAbs().maxCoeff() >
      Tolerances::kMatrixCheck) {
    throw InvalidArgument("observable is not Hermitian");
  }
  for (const auto& b : blocks_) {
    if (const auto* u = std::get_if<Eigen::MatrixXcd>(&b)) {
      if (u->rows() != dim || u->cols() != dim) {
        throw InvalidArgument("trainable block has the wrong dimension");
      }
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
      if (((*u) * u->adjoint() - id).cwiseAbs().maxCoeff() >
          Tolerances::kMatrixCheck) {
        throw InvalidArgument("trainable block is not unitary");
      }
    } else {
      const auto& e = std::get<EncodingGate>(b);
      if (e.qubit < 0 || e.qubit >= n_) {
        throw InvalidArgument("encoding gate targets a missing qubit");
      }
      if ((e.generator - e.generator.adjoint()).cwiseAbs().maxCoeff() >
          Tolerances::kMatrixCheck) {
        throw InvalidArgument("encoding generator is not Hermitian");
      }
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(e.generator);
      eigen_.push_back({solver.eigenvectors(), solver.eigenvalues()});
    }
  }
}

QnnEncodingSpec QnnModel::encoding_spec() const {
  QnnEncodingSpec spec;
  for (const auto& e : eigen_) spec.gates.push_back({e.values(0), e.values(1)});
  return spec;
}

double QnnModel::evaluate(double x) const {
  const Eigen::Index dim = Eigen::Index{1} << n_;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = 1.0;
  std::size_t enc = 0;
  for (const auto& b : blocks_) {
    if (const auto* u = std::get_if<Eigen::MatrixXcd>(&b)) {
      psi = (*u) * psi;
      continue;
    }
    const auto& gate = std::get<EncodingGate>(b);
    const auto& es = eigen_[enc++];
    Eigen::Matrix2cd phase = Eigen::Matrix2cd::Zero();
    phase(0, 0) = std::polar(1.0, x * es.values(0));
    phase(1, 1) = std::polar(1.0, x * es.values(1));
    const Eigen::Matrix2cd u = es.vectors * phase * es.vectors.adjoint();
    const Eigen::Index bit = Eigen::Index{1} << gate.qubit;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const Complex a = psi(i), c = psi(i | bit);
      psi(i) = u(0, 0) * a + u(0, 1) * c;
      psi(i | bit) = u(1, 0) * a + u(1, 1) * c;
    }
  }
  return psi.dot(observable_ * psi).real();
}

double qnn_evaluate(const QnnModel& m, double x) { return m.evaluate(x); }

std::map<int, Complex> qnn_extract_spectrum(const QnnModel& m, int k_max) {
  if (k_max < 0) throw InvalidArgument("k_max must be nonnegative");
  const int grid = 4 * k_max + 1;
  std::vector<double> f(grid);
  for (int j = 0; j < grid; ++j) {
    f[j] = m.evaluate(2.0 * std::numbers::pi * j / grid);
  }
  std::map<int, Complex> out;
  for (int k = -k_max; k <= k_max; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < grid; ++j) {
      const long phase = ((static_cast<long>(k) * j) % grid + grid) % grid;
      acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * phase / grid);
    }
    out[k] = acc / static_cast<double>(grid);
  }
  return out;
}

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  std::mt19937_64 engine(rng.next());
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = {normal(engine), normal(engine)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

namespace pauli {
Eigen::Matrix2cd x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
Eigen::Matrix2cd y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Eigen::Matrix2cd z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

Eigen::MatrixXcd single_qubit_observable(int n_qubits, int qubit,
                                         const Eigen::Matrix2cd& op) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd o = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int bi = (i & bit) ? 1 : 0;
    for (int bj = 0; bj < 2; ++bj) {
      const Eigen::Index j = bj ? (i | bit) : (i & ~bit);
      o(j, i) = op(bj, bi);
    }
  }
  return o;
}

}  // namespace spectra

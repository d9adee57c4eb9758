#pragma once

#include <cstddef>
#include <cstdint>

namespace spectra {

// Numerical tolerances shared by every module. Values are fixed; callers that
// need a different budget pass it explicitly where an API allows it.
struct Tolerances {
  // Probability vectors must sum to one within this.
  static constexpr double kProbabilitySum = 1e-9;
  // Negative mass tolerated (as a fraction of total mass) before a signed
  // smoothing result is rejected as a distribution.
  static constexpr double kNegativeMassBudget = 1e-9;
  // Provably nonnegative outputs (noise-kernel smoothing) may dip this far
  // below zero from rounding.
  static constexpr double kRoundoffNegative = 1e-12;
  // Weight at the zero frequency must equal one within this.
  static constexpr double kUnitDcWeight = 1e-12;
  // Statevector norm.
  static constexpr double kStateNorm = 1e-10;
  // Unitarity / hermiticity of user-supplied matrices.
  static constexpr double kMatrixCheck = 1e-10;
  // Postselection below this success probability is refused.
  static constexpr double kMinSuccessProbability = 1e-12;
  // Eigenvalue differences closer than this to an integer count as integers.
  static constexpr double kIntegerFrequency = 1e-9;
  // Class-function check on the symmetric group.
  static constexpr double kClassFunction = 1e-12;
};

struct Guards {
  // Dense tables over an Abelian group.
  static constexpr std::uint64_t kMaxDenseOrder = std::uint64_t{1} << 24;
  // Data qubits for the simulated smoothing pipeline.
  static constexpr int kMaxDataQubits = 20;
  // Dense cyclic QFT matrix application.
  static constexpr int kMaxCyclicQftQubits = 12;
  // QNN statevector dimension.
  static constexpr int kMaxQnnQubits = 10;
  // Symmetric group: transforms by default / with explicit override / hard cap.
  static constexpr int kMaxSnDefault = 6;
  static constexpr int kMaxSnExtended = 8;
  // Retained frequencies of a bandlimited sparse model.
  static constexpr std::uint64_t kSparseBudget = 1'000'000;
};

}  // namespace spectra

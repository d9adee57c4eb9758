#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "spectra/permutation.hpp"

namespace spectra {

// Young's orthogonal representation of S_n for one partition.
//
// Basis: standard Young tableaux of the shape. The adjacent transposition
// s_i = (i, i+1) acts on tableau T by +1 if i, i+1 share a row, -1 if they
// share a column, and otherwise by the 2x2 block
//   [ 1/r        sqrt(1-1/r^2) ]
//   [ sqrt(1-1/r^2)   -1/r     ]
// on (T, s_i T), r = content(i+1) - content(i) in T.
class YoungIrrep {
 public:
  explicit YoungIrrep(Partition shape);

  const Partition& shape() const { return shape_; }
  int dim() const { return static_cast<int>(tableaux_.size()); }
  int n() const { return shape_.size(); }

  // Row-major cell coordinates of every entry 1..n in tableau t.
  const std::vector<std::pair<int, int>>& tableau(int t) const {
    return tableaux_[t];
  }

  Eigen::MatrixXd generator(int i) const;
  Eigen::MatrixXd operator()(const Permutation& p) const;
  // m <- m * sigma(s_i) in O(dim^2).
  void right_multiply_generator(Eigen::MatrixXd& m, int i) const;

  // Sum of the contents col - row over all cells; sum over transpositions
  // of sigma(tau) equals this times the identity.
  int content_sum() const;

 private:
  struct Action {
    double diag = 1.0;
    int partner = -1;  // -1 when s_i maps the tableau to +-itself
    double off = 0.0;
  };

  Partition shape_;
  std::vector<std::vector<std::pair<int, int>>> tableaux_;
  std::vector<std::vector<Action>> actions_;  // [i-1][tableau]
};

Eigen::MatrixXd young_orthogonal_irrep(const Partition& shape,
                                       const Permutation& p);

// Hook-length formula.
std::uint64_t irrep_dimension(const Partition& shape);

// All irreps of S_n, built once per n and shared read-only.
struct SnBasis {
  int n = 0;
  std::vector<Partition> shapes;
  std::vector<YoungIrrep> irreps;
};
std::shared_ptr<const SnBasis> sn_basis(int n);

}  // namespace spectra

#include "spectra/young.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "spectra/config.hpp"
#include "spectra/error.hpp"

namespace spectra {

YoungIrrep::YoungIrrep(Partition shape) : shape_(std::move(shape)) {
  const int n = shape_.size();
  // Fill entries 1..n row by row constraints: an entry goes to the end of a
  // row that is shorter than the row above it.
  std::vector<int> filled(shape_.rows(), 0);
  std::vector<std::pair<int, int>> cells(n);
  std::function<void(int)> rec = [&](int m) {
    if (m > n) {
      tableaux_.push_back(cells);
      return;
    }
    for (int r = 0; r < shape_.rows(); ++r) {
      if (filled[r] < shape_.parts()[r] && (r == 0 || filled[r - 1] > filled[r])) {
        cells[m - 1] = {r, filled[r]};
        ++filled[r];
        rec(m + 1);
        --filled[r];
      }
    }
  };
  rec(1);

  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int t = 0; t < dim(); ++t) index[tableaux_[t]] = t;

  actions_.assign(n > 1 ? n - 1 : 0, std::vector<Action>(dim()));
  for (int i = 1; i < n; ++i) {
    for (int t = 0; t < dim(); ++t) {
      const auto [r1, c1] = tableaux_[t][i - 1];
      const auto [r2, c2] = tableaux_[t][i];
      Action& a = actions_[i - 1][t];
      if (r1 == r2) {
        a.diag = 1.0;
      } else if (c1 == c2) {
        a.diag = -1.0;
      } else {
        const double r = static_cast<double>((c2 - r2) - (c1 - r1));
        auto swapped = tableaux_[t];
        std::swap(swapped[i - 1], swapped[i]);
        a.diag = 1.0 / r;
        a.partner = index.at(swapped);
        a.off = std::sqrt(1.0 - 1.0 / (r * r));
      }
    }
  }
}

Eigen::MatrixXd YoungIrrep::generator(int i) const {
  if (i < 1 || i >= n()) throw InvalidArgument("generator index out of range");
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim(), dim());
  for (int t = 0; t < dim(); ++t) {
    const Action& a = actions_[i - 1][t];
    g(t, t) = a.diag;
    if (a.partner >= 0) g(a.partner, t) = a.off;
  }
  return g;
}

void YoungIrrep::right_multiply_generator(Eigen::MatrixXd& m, int i) const {
  const auto& acts = actions_[i - 1];
  for (int t = 0; t < dim(); ++t) {
    const Action& a = acts[t];
    if (a.partner < 0) {
      if (a.diag < 0) m.col(t) = -m.col(t);
    } else if (a.partner > t) {
      const int u = a.partner;
      // Columns t and u mix through the symmetric 2x2 block.
      const Eigen::VectorXd ct = m.col(t), cu = m.col(u);
      m.col(t) = ct * a.diag + cu * a.off;
      m.col(u) = ct * a.off + cu * actions_[i - 1][u].diag;
    }
  }
}

Eigen::MatrixXd YoungIrrep::operator()(const Permutation& p) const {
  if (p.size() != n()) throw InvalidArgument("permutation size differs from shape");
  // Bubble-sort p to the identity by right multiplications p o s_j; then
  // p = s_jm o ... o s_j1 and sigma(p) = sigma(s_jm) ... sigma(s_j1).
  auto a = p.one_line();
  Eigen::MatrixXd rt = Eigen::MatrixXd::Identity(dim(), dim());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int j = 0; j + 1 < n(); ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        // Accumulate the transpose: rt <- rt * sigma(s_j)^T = rt * sigma(s_j).
        right_multiply_generator(rt, j + 1);
        swapped = true;
      }
    }
  }
  return rt.transpose();
}

int YoungIrrep::content_sum() const {
  int s = 0;
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = 0; c < shape_.parts()[r]; ++c) s += c - r;
  }
  return s;
}

Eigen::MatrixXd young_orthogonal_irrep(const Partition& shape,
                                       const Permutation& p) {
  if (shape.size() != p.size()) {
    throw InvalidArgument("partition and permutation sizes differ");
  }
  if (shape.size() <= Guards::kMaxSnExtended) {
    const auto basis = sn_basis(shape.size());
    for (std::size_t i = 0; i < basis->shapes.size(); ++i) {
      if (basis->shapes[i] == shape) return basis->irreps[i](p);
    }
  }
  return YoungIrrep(shape)(p);
}

std::uint64_t irrep_dimension(const Partition& shape) {
  const int n = shape.size();
  std::uint64_t num = 1, den = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.parts()[r]; ++c) {
      int below = 0;
      for (int rr = r + 1; rr < shape.rows() && shape.parts()[rr] > c; ++rr) ++below;
      den *= (shape.parts()[r] - c - 1) + below + 1;
    }
  }
  return num / den;
}

std::shared_ptr<const SnBasis> sn_basis(int n) {
  if (n < 1 || n > Guards::kMaxSnExtended) {
    throw GuardExceeded("S_n irreps are provided for n <= " +
                        std::to_string(Guards::kMaxSnExtended));
  }
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SnBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto b = std::make_shared<SnBasis>();
    b->n = n;
    b->shapes = partitions(n);
    for (const auto& s : b->shapes) b->irreps.emplace_back(s);
    slot = std::move(b);
  }
  return slot;
}

}  // namespace spectra

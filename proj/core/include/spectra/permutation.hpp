#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spectra {

// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  std::string to_text() const;  // "(3,1)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Partitions of n, starting with (n) and descending lexicographically.
std::vector<Partition> partitions(int n);

enum class Dominance { kDominates, kDominatedBy, kEqual, kIncomparable };

// Partial-sum comparison of two partitions of the same n.
Dominance dominance(const Partition& a, const Partition& b);

// A bijection of {1..n} in one-line notation: one_line()[i-1] = pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  // "2,4,1,3"
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[i - 1]; }
  const std::vector<int>& one_line() const { return one_line_; }

  Permutation inverse() const;
  int inversions() const;
  int sign() const { return inversions() % 2 ? -1 : 1; }
  Partition cycle_type() const;
  std::string to_text() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

// All of S_n in lexicographic one-line order; position = rank().
std::vector<Permutation> enumerate(int n);
std::uint64_t rank(const Permutation& p);
Permutation unrank(int n, std::uint64_t r);
std::uint64_t factorial(int n);

// Steinhaus-Johnson-Trotter order: successive permutations differ by a
// swap of adjacent positions, i.e. right multiplication by s_j.
struct AdjacentWalk {
  std::vector<std::uint64_t> ranks;  // visit order; ranks[0] is identity
  std::vector<int> swaps;  // swaps[t]: position j (1-based) taking t -> t+1
};
AdjacentWalk adjacent_walk(int n);

}  // namespace spectra

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectra {

using Complex = std::complex<double>;

enum class GroupKind { kBoolean, kCyclic };

// A finite Abelian group: Z_2^n (Boolean) or Z_d^N (Cyclic).
//
// Elements are addressed by a packed little-endian mixed-radix index:
// coordinate 0 is the least significant digit. For Boolean groups the packed
// index of a bitstring is its value as a binary numeral, so the text form
// "01" (most significant coordinate first) is index 1.
class GroupSpec {
 public:
  static GroupSpec boolean(int n);
  static GroupSpec cyclic(int modulus, int dims);

  GroupKind kind() const { return kind_; }
  bool is_boolean() const { return kind_ == GroupKind::kBoolean; }
  int modulus() const { return modulus_; }
  int dims() const { return dims_; }
  std::uint64_t order() const { return order_; }

  // Throws GuardExceeded when a dense table over the group is too large.
  void require_dense() const;

  std::vector<int> decode(std::uint64_t index) const;
  std::uint64_t encode(std::span<const int> coords) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate(std::uint64_t a) const;
  std::uint64_t subtract(std::uint64_t a, std::uint64_t b) const {
    return add(a, negate(b));
  }
  // Number of nonzero coordinates.
  int weight(std::uint64_t index) const;

  std::string describe() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, int modulus, int dims);

  GroupKind kind_;
  int modulus_;
  int dims_;
  std::uint64_t order_;
};

namespace detail {
struct ElementTag {};
struct DualTag {};
}  // namespace detail

// A point of the group or of its dual, carrying both coordinate and packed
// forms. Construct through GroupSpec-aware factories so the two agree.
template <typename Tag>
class Point {
 public:
  Point(const GroupSpec& group, std::uint64_t index)
      : coords_(group.decode(index)), index_(index) {}
  Point(const GroupSpec& group, std::vector<int> coords)
      : coords_(std::move(coords)), index_(group.encode(coords_)) {}

  const std::vector<int>& coords() const { return coords_; }
  std::uint64_t index() const { return index_; }
  int dims() const { return static_cast<int>(coords_.size()); }
  int order_weight() const {
    int w = 0;
    for (int c : coords_) w += c != 0;
    return w;
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<int> coords_;
  std::uint64_t index_;
};

using GroupElement = Point<detail::ElementTag>;
using Frequency = Point<detail::DualTag>;

// Parses text written most-significant coordinate first ("101").
GroupElement boolean_element(std::string_view bits);
Frequency boolean_frequency(std::string_view bits);
std::string to_bitstring(std::uint64_t index, int n);

// Bitstring of arbitrary length; bit i is coordinate i.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int n);
  static BitString from_text(std::string_view text);
  static BitString from_index(std::uint64_t index, int n);

  int size() const { return n_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v);
  void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  int popcount() const;
  // Parity of popcount(this AND other).
  int dot_mod2(const BitString& other) const;
  int hamming_distance(const BitString& other) const;
  BitString complement() const;

  // Requires size() <= 63.
  std::uint64_t to_index() const;
  std::string to_text() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Complex-valued function on a group, indexed by packed element index.
struct DenseFunction {
  DenseFunction(GroupSpec g, std::vector<Complex> v);
  static DenseFunction zeros(const GroupSpec& g);
  static DenseFunction from_real(const GroupSpec& g, std::span<const double> v);

  std::vector<double> real() const;
  double norm() const;

  GroupSpec group;
  std::vector<Complex> values;
};

// Function on the dual group, indexed by packed frequency index.
struct Spectrum {
  Spectrum(GroupSpec g, std::vector<Complex> v);
  static Spectrum zeros(const GroupSpec& g);

  double norm() const;

  GroupSpec group;
  std::vector<Complex> values;
};

// Listed (frequency, coefficient) pairs; unlisted frequencies are zero.
struct SparseSpectrum {
  GroupSpec group;
  std::vector<std::pair<Frequency, Complex>> entries;

  Spectrum to_dense() const;
};

}  // namespace spectra

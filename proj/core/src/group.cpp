#include "spectra/group.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "spectra/config.hpp"
#include "spectra/error.hpp"

namespace spectra {

GroupSpec::GroupSpec(GroupKind kind, int modulus, int dims)
    : kind_(kind), modulus_(modulus), dims_(dims), order_(1) {
  for (int i = 0; i < dims; ++i) {
    if (order_ > std::numeric_limits<std::uint64_t>::max() / 2 / modulus) {
      throw GuardExceeded("group " + describe() +
                          " is too large to index densely");
    }
    order_ *= static_cast<std::uint64_t>(modulus);
  }
}

GroupSpec GroupSpec::boolean(int n) {
  if (n < 1) throw InvalidArgument("Boolean group needs n >= 1");
  return GroupSpec(GroupKind::kBoolean, 2, n);
}

GroupSpec GroupSpec::cyclic(int modulus, int dims) {
  if (modulus < 2) throw InvalidArgument("cyclic group needs modulus >= 2");
  if (dims < 1) throw InvalidArgument("cyclic group needs at least one axis");
  return GroupSpec(GroupKind::kCyclic, modulus, dims);
}

void GroupSpec::require_dense() const {
  if (order_ > Guards::kMaxDenseOrder) {
    throw GuardExceeded("group " + describe() + " has order " +
                        std::to_string(order_) +
                        ", above the dense limit 2^24");
  }
}

std::vector<int> GroupSpec::decode(std::uint64_t index) const {
  if (index >= order_) throw InvalidArgument("index outside group");
  std::vector<int> coords(dims_);
  for (int i = 0; i < dims_; ++i) {
    coords[i] = static_cast<int>(index % modulus_);
    index /= modulus_;
  }
  return coords;
}

std::uint64_t GroupSpec::encode(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != dims_) {
    throw InvalidArgument("coordinate count " + std::to_string(coords.size()) +
                          " does not match group " + describe());
  }
  std::uint64_t index = 0;
  for (int i = dims_ - 1; i >= 0; --i) {
    if (coords[i] < 0 || coords[i] >= modulus_) {
      throw InvalidArgument("coordinate out of range for " + describe());
    }
    index = index * modulus_ + static_cast<std::uint64_t>(coords[i]);
  }
  return index;
}

std::uint64_t GroupSpec::add(std::uint64_t a, std::uint64_t b) const {
  if (is_boolean()) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < dims_; ++i) {
    const auto da = a % modulus_, db = b % modulus_;
    out += ((da + db) % modulus_) * scale;
    a /= modulus_;
    b /= modulus_;
    scale *= modulus_;
  }
  return out;
}

std::uint64_t GroupSpec::negate(std::uint64_t a) const {
  if (is_boolean()) return a;
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < dims_; ++i) {
    const auto da = a % modulus_;
    out += ((modulus_ - da) % modulus_) * scale;
    a /= modulus_;
    scale *= modulus_;
  }
  return out;
}

int GroupSpec::weight(std::uint64_t index) const {
  if (is_boolean()) return std::popcount(index);
  int w = 0;
  for (int i = 0; i < dims_; ++i) {
    w += (index % modulus_) != 0;
    index /= modulus_;
  }
  return w;
}

std::string GroupSpec::describe() const {
  return "Z" + std::to_string(modulus_) + "^" + std::to_string(dims_);
}

namespace {

std::vector<int> parse_bits(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty bitstring");
  std::vector<int> coords(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[bits.size() - 1 - i];
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid bit character '") + c + "'");
    }
    coords[i] = c - '0';
  }
  return coords;
}

}  // namespace

GroupElement boolean_element(std::string_view bits) {
  auto coords = parse_bits(bits);
  const auto g = GroupSpec::boolean(static_cast<int>(coords.size()));
  return GroupElement(g, std::move(coords));
}

Frequency boolean_frequency(std::string_view bits) {
  auto coords = parse_bits(bits);
  const auto g = GroupSpec::boolean(static_cast<int>(coords.size()));
  return Frequency(g, std::move(coords));
}

std::string to_bitstring(std::uint64_t index, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> i) & 1u) s[n - 1 - i] = '1';
  }
  return s;
}

// BitString

BitString::BitString(int n) : n_(n), words_((n + 63) / 64, 0) {
  if (n < 0) throw InvalidArgument("negative bitstring length");
}

BitString BitString::from_text(std::string_view text) {
  BitString b(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[text.size() - 1 - i];
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid bit character '") + c + "'");
    }
    if (c == '1') b.set(static_cast<int>(i), true);
  }
  return b;
}

BitString BitString::from_index(std::uint64_t index, int n) {
  if (n > 64) throw InvalidArgument("index form supports at most 64 bits");
  BitString b(n);
  if (n > 0) {
    b.words_[0] = n == 64 ? index : (index & ((std::uint64_t{1} << n) - 1));
  }
  return b;
}

void BitString::set(int i, bool v) {
  const auto mask = std::uint64_t{1} << (i & 63);
  if (v) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

int BitString::popcount() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

int BitString::dot_mod2(const BitString& other) const {
  if (other.n_ != n_) throw InvalidArgument("bitstring length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

int BitString::hamming_distance(const BitString& other) const {
  if (other.n_ != n_) throw InvalidArgument("bitstring length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    d += std::popcount(words_[i] ^ other.words_[i]);
  }
  return d;
}

BitString BitString::complement() const {
  BitString out = *this;
  for (auto& w : out.words_) w = ~w;
  if (n_ % 64 != 0) out.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return out;
}

std::uint64_t BitString::to_index() const {
  if (n_ > 63) throw GuardExceeded("bitstring too long for a packed index");
  return words_.empty() ? 0 : words_[0];
}

std::string BitString::to_text() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if (get(i)) s[n_ - 1 - i] = '1';
  }
  return s;
}

// Dense tables

namespace {

void check_table(const GroupSpec& g, const std::vector<Complex>& v) {
  g.require_dense();
  if (v.size() != g.order()) {
    throw InvalidArgument("table length " + std::to_string(v.size()) +
                          " does not match group order " +
                          std::to_string(g.order()));
  }
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("non-finite table entry");
    }
  }
}

double l2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

DenseFunction::DenseFunction(GroupSpec g, std::vector<Complex> v)
    : group(g), values(std::move(v)) {
  check_table(group, values);
}

DenseFunction DenseFunction::zeros(const GroupSpec& g) {
  g.require_dense();
  return DenseFunction(g, std::vector<Complex>(g.order()));
}

DenseFunction DenseFunction::from_real(const GroupSpec& g,
                                       std::span<const double> v) {
  return DenseFunction(g, std::vector<Complex>(v.begin(), v.end()));
}

std::vector<double> DenseFunction::real() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
  return out;
}

double DenseFunction::norm() const { return l2(values); }

Spectrum::Spectrum(GroupSpec g, std::vector<Complex> v)
    : group(g), values(std::move(v)) {
  check_table(group, values);
}

Spectrum Spectrum::zeros(const GroupSpec& g) {
  g.require_dense();
  return Spectrum(g, std::vector<Complex>(g.order()));
}

double Spectrum::norm() const { return l2(values); }

Spectrum SparseSpectrum::to_dense() const {
  auto out = Spectrum::zeros(group);
  for (const auto& [k, c] : entries) {
    if (k.dims() != group.dims()) {
      throw InvalidArgument("sparse entry does not belong to " +
                            group.describe());
    }
    out.values[k.index()] += c;
  }
  return out;
}

}  // namespace spectra

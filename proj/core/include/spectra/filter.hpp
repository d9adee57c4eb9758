#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spectra/group.hpp"

namespace spectra {

// Multiplies the order-m coefficients by (1 - 2 theta)^m; 0^0 = 1.
struct OrderDecay {
  double theta = 0.0;
};

// weights[m] multiplies every coefficient of Hamming weight m.
struct PerOrder {
  std::vector<double> weights;
};

// Explicit weight per packed frequency index; unlisted frequencies get 0.
struct PerFrequency {
  std::map<std::uint64_t, Complex> weights;
};

class FilterSpec {
 public:
  using Variant = std::variant<OrderDecay, PerOrder, PerFrequency>;

  FilterSpec(Variant v);  // NOLINT(google-explicit-constructor)
  FilterSpec(OrderDecay f) : FilterSpec(Variant(f)) {}  // NOLINT
  FilterSpec(PerOrder f) : FilterSpec(Variant(std::move(f))) {}  // NOLINT
  FilterSpec(PerFrequency f) : FilterSpec(Variant(std::move(f))) {}  // NOLINT

  const Variant& variant() const { return v_; }

  // Weight of the frequency with packed index `k` and Hamming weight `order`.
  Complex weight(std::uint64_t k, int order) const;
  // Weight for a frequency given only its order; PerFrequency needs an index.
  double order_weight(int order) const;
  bool depends_on_order_only() const {
    return !std::holds_alternative<PerFrequency>(v_);
  }

  // Throws InvalidArgument if the filter does not fit n-bit data.
  void validate(int n) const;

  std::string describe() const;

 private:
  Variant v_;
};

// Pointwise product of a Boolean-group spectrum with the filter.
Spectrum apply_filter(const Spectrum& s, const FilterSpec& g);

}  // namespace spectra

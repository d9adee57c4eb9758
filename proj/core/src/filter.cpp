#include "spectra/filter.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

FilterSpec::FilterSpec(Variant v) : v_(std::move(v)) {
  if (const auto* d = std::get_if<OrderDecay>(&v_)) {
    if (!(d->theta >= 0.0 && d->theta <= 1.0)) {
      throw InvalidArgument("order-decay theta must lie in [0, 1]");
    }
  } else if (const auto* p = std::get_if<PerOrder>(&v_)) {
    for (double w : p->weights) {
      if (!std::isfinite(w)) throw InvalidArgument("non-finite filter weight");
    }
  } else {
    for (const auto& [k, w] : std::get<PerFrequency>(v_).weights) {
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw InvalidArgument("non-finite filter weight");
      }
    }
  }
}

double FilterSpec::order_weight(int order) const {
  if (const auto* d = std::get_if<OrderDecay>(&v_)) {
    return std::pow(1.0 - 2.0 * d->theta, order);
  }
  if (const auto* p = std::get_if<PerOrder>(&v_)) {
    if (order < 0 || order >= static_cast<int>(p->weights.size())) {
      throw InvalidArgument("per-order filter has no weight for order " +
                            std::to_string(order));
    }
    return p->weights[order];
  }
  throw InvalidArgument("per-frequency filter needs a frequency index");
}

Complex FilterSpec::weight(std::uint64_t k, int order) const {
  if (const auto* f = std::get_if<PerFrequency>(&v_)) {
    const auto it = f->weights.find(k);
    return it == f->weights.end() ? Complex(0.0) : it->second;
  }
  return order_weight(order);
}

void FilterSpec::validate(int n) const {
  if (const auto* p = std::get_if<PerOrder>(&v_)) {
    if (static_cast<int>(p->weights.size()) != n + 1) {
      throw InvalidArgument("per-order filter needs " + std::to_string(n + 1) +
                            " weights, got " +
                            std::to_string(p->weights.size()));
    }
  } else if (const auto* f = std::get_if<PerFrequency>(&v_)) {
    for (const auto& [k, w] : f->weights) {
      if (n < 64 && k >> n) {
        throw InvalidArgument("per-frequency filter lists frequency " +
                              std::to_string(k) + " outside Z2^" +
                              std::to_string(n));
      }
    }
  }
}

std::string FilterSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (const auto* d = std::get_if<OrderDecay>(&v_)) {
    os << "order_decay(theta=" << d->theta << ")";
  } else if (const auto* p = std::get_if<PerOrder>(&v_)) {
    os << "per_order(";
    for (std::size_t i = 0; i < p->weights.size(); ++i) {
      os << (i ? "," : "") << p->weights[i];
    }
    os << ")";
  } else {
    os << "per_frequency(" << std::get<PerFrequency>(v_).weights.size()
       << " entries)";
  }
  return os.str();
}

Spectrum apply_filter(const Spectrum& s, const FilterSpec& g) {
  if (!s.group.is_boolean()) {
    throw InvalidArgument("filters act on Boolean-group spectra");
  }
  g.validate(s.group.dims());
  auto out = s;
  for (std::uint64_t k = 0; k < out.values.size(); ++k) {
    out.values[k] *= g.weight(k, std::popcount(k));
  }
  return out;
}

}  // namespace spectra

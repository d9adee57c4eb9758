#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/group.hpp"

namespace spectra {

// A multiset of equal-length bitstrings.
//
// Text form: one sample per line, characters '0'/'1' written most
// significant coordinate first; lines starting with '#' and blank lines are
// ignored; a trailing '\r' is tolerated.
class Dataset {
 public:
  Dataset(int n, std::vector<BitString> samples);
  Dataset(std::initializer_list<std::string_view> lines);

  static Dataset parse(std::string_view text);

  int n() const { return n_; }
  std::size_t size() const { return samples_.size(); }
  const std::vector<BitString>& samples() const { return samples_; }

  // Distinct samples in sorted order.
  std::vector<BitString> unique() const;
  bool has_duplicates() const { return unique().size() != samples_.size(); }

  std::string to_text() const;
  // 64-bit FNV-1a of to_text(), as 16 hex digits.
  std::string digest() const;

 private:
  int n_;
  std::vector<BitString> samples_;
};

}  // namespace spectra

#include "spectra/dataset.hpp"

#include <algorithm>
#include <cstdio>

#include "spectra/error.hpp"

namespace spectra {

Dataset::Dataset(int n, std::vector<BitString> samples)
    : n_(n), samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidArgument("empty dataset");
  if (n_ < 1) throw InvalidArgument("samples need at least one bit");
  for (const auto& s : samples_) {
    if (s.size() != n_) {
      throw InvalidArgument("sample of length " + std::to_string(s.size()) +
                            " in dataset of " + std::to_string(n_) + "-bit samples");
    }
  }
}

Dataset::Dataset(std::initializer_list<std::string_view> lines)
    : Dataset([&] {
        std::vector<BitString> s;
        for (auto l : lines) s.push_back(BitString::from_text(l));
        if (s.empty()) throw InvalidArgument("empty dataset");
        const int n = s.front().size();
        return Dataset(n, std::move(s));
      }()) {}

Dataset Dataset::parse(std::string_view text) {
  std::vector<BitString> samples;
  int n = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    for (char c : line) {
      if (c != '0' && c != '1') {
        throw ParseError("unexpected character in sample", line_no);
      }
    }
    if (n < 0) {
      n = static_cast<int>(line.size());
    } else if (static_cast<int>(line.size()) != n) {
      throw ParseError("sample has " + std::to_string(line.size()) +
                           " bits, expected " + std::to_string(n),
                       line_no);
    }
    samples.push_back(BitString::from_text(line));
  }
  if (samples.empty()) throw ParseError("dataset contains no samples");
  return Dataset(n, std::move(samples));
}

std::vector<BitString> Dataset::unique() const {
  auto u = samples_;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

std::string Dataset::to_text() const {
  std::string out;
  out.reserve(samples_.size() * (n_ + 1));
  for (const auto& s : samples_) {
    out += s.to_text();
    out += '\n';
  }
  return out;
}

std::string Dataset::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace spectra

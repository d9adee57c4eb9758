#include "spectra/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "spectra/error.hpp"

namespace spectra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("empty partition");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::to_text() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw InvalidArgument("partitions need n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Dominance dominance(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("dominance compares partitions of the same n");
  }
  bool ge = true, le = true;
  int sa = 0, sb = 0;
  const int rows = std::max(a.rows(), b.rows());
  for (int i = 0; i < rows; ++i) {
    sa += i < a.rows() ? a.parts()[i] : 0;
    sb += i < b.rows() ? b.parts()[i] : 0;
    ge = ge && sa >= sb;
    le = le && sa <= sb;
  }
  if (ge && le) return Dominance::kEqual;
  if (ge) return Dominance::kDominates;
  if (le) return Dominance::kDominatedBy;
  return Dominance::kIncomparable;
}

Permutation::Permutation(std::vector<int> one_line)
    : one_line_(std::move(one_line)) {
  const int n = size();
  if (n < 1) throw InvalidArgument("empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidArgument("not a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  while (true) {
    const auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r')) {
      tok.remove_suffix(1);
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid permutation entry '" + std::string(tok) + "'");
    }
    v.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Permutation(std::move(v));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> v(size());
  for (int i = 0; i < size(); ++i) v[one_line_[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) c += one_line_[i] > one_line_[j];
  }
  return c;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = one_line_[j] - 1) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

std::string Permutation::to_text() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(one_line_[i]);
  }
  return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("composing permutations of different sizes");
  }
  std::vector<int> v(a.size());
  for (int i = 1; i <= a.size(); ++i) v[i - 1] = a(b(i));
  return Permutation(std::move(v));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidArgument("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Permutation> enumerate(int n) {
  auto p = Permutation::identity(n).one_line();
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p.one_line()[j] < p.one_line()[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (r >= factorial(n)) throw InvalidArgument("rank outside S_n");
  std::vector<int> pool(n), v;
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(r / f);
    r %= f;
    v.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return Permutation(std::move(v));
}

AdjacentWalk adjacent_walk(int n) {
  // Even's variant of Steinhaus-Johnson-Trotter with per-value directions.
  std::vector<int> perm(n), dir(n + 1, -1);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  AdjacentWalk walk;
  const auto total = factorial(n);
  walk.ranks.reserve(total);
  walk.swaps.reserve(total ? total - 1 : 0);
  walk.ranks.push_back(rank(Permutation(perm)));
  while (true) {
    int mobile = 0, pos = -1;
    for (int i = 0; i < n; ++i) {
      const int j = i + dir[perm[i]];
      if (j >= 0 && j < n && perm[j] < perm[i] && perm[i] > mobile) {
        mobile = perm[i];
        pos = i;
      }
    }
    if (pos < 0) break;
    const int other = pos + dir[mobile];
    std::swap(perm[pos], perm[other]);
    walk.swaps.push_back(std::min(pos, other) + 1);
    for (int v = mobile + 1; v <= n; ++v) dir[v] = -dir[v];
    walk.ranks.push_back(rank(Permutation(perm)));
  }
  return walk;
}

}  // namespace spectra

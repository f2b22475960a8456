#pragma once

// Permutations of {1..n} in one-line notation, dimension sequences of
// parabolic subgroups, and the coset/length/Bruhat bookkeeping on top of them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagcycle/error.hpp"

namespace flagcycle {

namespace detail {

// Splits "a,b,c" / "a b c" / "a, b, c" into integer tokens. An input without
// any separator is read digit by digit ("2431"), which only makes sense for
// n <= 9.
inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  auto fail = [&](const std::string& why) {
    throw parse_error("invalid " + std::string(what) + " '" + std::string(text) + "': " + why);
  };
  std::vector<int> out;
  const bool has_separator = text.find_first_of(", \t") != std::string_view::npos;
  if (!has_separator) {
    if (text.empty()) fail("empty");
    for (char c : text) {
      if (c < '0' || c > '9') fail("unexpected character");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t k = 0;
  bool expect_value = true;
  while (k < text.size()) {
    const char c = text[k];
    if (c == ' ' || c == '\t') {
      ++k;
      continue;
    }
    if (c == ',') {
      if (expect_value) fail("empty entry");
      expect_value = true;
      ++k;
      continue;
    }
    if (c < '0' || c > '9') fail("unexpected character");
    long value = 0;
    while (k < text.size() && text[k] >= '0' && text[k] <= '9') {
      value = value * 10 + (text[k] - '0');
      if (value > 1'000'000) fail("entry too large");
      ++k;
    }
    out.push_back(static_cast<int>(value));
    expect_value = false;
  }
  if (out.empty()) fail("empty");
  if (expect_value) fail("trailing comma");
  return out;
}

inline std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace detail

/// An element of the symmetric group in one-line notation w(1) ... w(n).
/// Indexing is 1-based throughout.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw parse_error("not a permutation of 1.." + std::to_string(n) + ": " + detail::join(images_, ","));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Accepts "2,5,6,3,4,1", "2 5 6 3 4 1" and, for n <= 9, "256341".
  static Permutation parse(std::string_view text) {
    return Permutation(detail::parse_int_list(text, "permutation"));
  }

  int size() const { return static_cast<int>(images_.size()); }

  /// w(i), 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
    return Permutation(std::move(inv));
  }

  /// Canonical text form "2,5,6,3,4,1".
  std::string str() const { return detail::join(images_, ","); }

  /// "256341" when every value is a single digit, otherwise str().
  std::string compact() const {
    if (size() > 9) return str();
    std::string out;
    for (int v : images_) out += static_cast<char>('0' + v);
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

enum class FlagKind { full_flag, symmetric_d, symmetric_e, non_symmetric };

inline std::string_view to_string(FlagKind kind) {
  switch (kind) {
    case FlagKind::full_flag: return "full_flag";
    case FlagKind::symmetric_d: return "symmetric_d";
    case FlagKind::symmetric_e: return "symmetric_e";
    case FlagKind::non_symmetric: return "non_symmetric";
  }
  return "unknown";
}

/// Block sizes d_1..d_s of a parabolic subgroup; flags of this type are chains
/// V_1 < ... < V_s = C^n with dim V_i / V_{i-1} = d_i.
///
/// Palindromic sequences carry the symmetric structure used throughout:
/// d = (d_1..d_s, d_s..d_1) or e = (d_1..d_s, e', d_s..d_1). The full flag is
/// palindromic too and is read as d-type (n even) or e-type with e' = 1 (n odd).
class DimensionSequence {
 public:
  DimensionSequence() = default;

  explicit DimensionSequence(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw parse_error("dimension sequence is empty");
    for (int p : parts_)
      if (p < 1) throw parse_error("dimension sequence has a non-positive part: " + detail::join(parts_, ","));
  }

  static DimensionSequence full_flag(int n) { return DimensionSequence(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  static DimensionSequence parse(std::string_view text) {
    return DimensionSequence(detail::parse_int_list(text, "dimension sequence"));
  }

  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t size() const { return parts_.size(); }
  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t k) const { return parts_[k]; }

  /// delta_i = d_1 + ... + d_i, i.e. dim V_i.
  std::vector<int> partial_sums() const {
    std::vector<int> out(parts_.size());
    std::partial_sum(parts_.begin(), parts_.end(), out.begin());
    return out;
  }

  bool is_palindrome() const { return std::equal(parts_.begin(), parts_.end(), parts_.rbegin()); }

  FlagKind kind() const {
    if (std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; })) return FlagKind::full_flag;
    if (!is_palindrome()) return FlagKind::non_symmetric;
    return parts_.size() % 2 == 0 ? FlagKind::symmetric_d : FlagKind::symmetric_e;
  }

  bool is_symmetric() const { return is_palindrome(); }

  /// Palindromic with an odd number of parts (carries a middle block e').
  bool has_middle() const { return is_palindrome() && parts_.size() % 2 == 1; }

  /// s: the number of symmetric block pairs.
  std::size_t pair_count() const { return parts_.size() / 2; }

  /// e' for e-type sequences, 0 otherwise.
  int middle() const { return has_middle() ? parts_[parts_.size() / 2] : 0; }

  /// d_1 + ... + d_s over the symmetric block pairs.
  int outer_sum() const {
    return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(pair_count()), 0);
  }

  DimensionSequence reversed() const { return DimensionSequence(std::vector<int>(parts_.rbegin(), parts_.rend())); }

  std::string str() const { return detail::join(parts_, ","); }

  friend bool operator==(const DimensionSequence&, const DimensionSequence&) = default;

 private:
  std::vector<int> parts_;
};

inline void require_same_size(const Permutation& w, const DimensionSequence& d) {
  if (w.size() != d.n())
    throw parse_error("permutation of size " + std::to_string(w.size()) + " does not match dimension sequence (" +
                      d.str() + ") of total " + std::to_string(d.n()));
}

/// Number of inversions i < j with w(i) > w(j).
inline long length(const Permutation& w) {
  const auto v = w.images();
  long count = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) ++count;
  return count;
}

/// Length via the distance-sum procedure: slide 1 to the front, then 2 to the
/// slot right after 1, and so on, adding up how many entries each value passes.
inline long length_by_distance_sum(const Permutation& w) {
  std::vector<int> line(w.images().begin(), w.images().end());
  long total = 0;
  for (int value = 1; value <= w.size(); ++value) {
    const auto target = static_cast<std::ptrdiff_t>(value - 1);
    const auto pos = std::find(line.begin(), line.end(), value) - line.begin();
    total += pos - target;
    line.erase(line.begin() + pos);
    line.insert(line.begin() + target, value);
  }
  return total;
}

/// Consecutive segments of the one-line notation with sizes d_1..d_s.
inline std::vector<std::vector<int>> block_decompose(const Permutation& w, const DimensionSequence& d) {
  require_same_size(w, d);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(d.size());
  auto it = w.images().begin();
  for (int part : d.parts()) {
    blocks.emplace_back(it, it + part);
    it += part;
  }
  return blocks;
}

/// "(2)(3456)(1)"; entries inside a block are comma-separated once n > 9.
inline std::string block_string(const Permutation& w, const DimensionSequence& d) {
  std::string out;
  for (const auto& block : block_decompose(w, d)) {
    out += '(';
    out += w.size() > 9 ? detail::join(block, ",") : detail::join(block, "");
    out += ')';
  }
  return out;
}

inline Permutation from_blocks(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> v;
  for (const auto& b : blocks) v.insert(v.end(), b.begin(), b.end());
  return Permutation(std::move(v));
}

/// True iff each block is strictly increasing.
inline bool is_minimal_rep(const Permutation& w, const DimensionSequence& d) {
  for (const auto& b : block_decompose(w, d))
    if (!std::is_sorted(b.begin(), b.end())) return false;
  return true;
}

/// Shortest element of the coset w (S_{d_1} x ... x S_{d_s}).
inline Permutation min_rep(const Permutation& w, const DimensionSequence& d) {
  auto blocks = block_decompose(w, d);
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return from_blocks(blocks);
}

/// Dimension of the Schubert cell of wP in G/P.
inline long cell_dimension(const Permutation& w, const DimensionSequence& d) { return length(min_rep(w, d)); }

/// Bruhat order via the rank-matrix criterion:
/// u <= w iff #{a <= i : u(a) <= j} >= #{a <= i : w(a) <= j} for all i, j.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: permutations of different size");
  const int n = u.size();
  std::vector<int> ru(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> rw(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = u(i); j <= n; ++j) ++ru[static_cast<std::size_t>(j)];
    for (int j = w(i); j <= n; ++j) ++rw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (ru[static_cast<std::size_t>(j)] < rw[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

/// All permutations of {1..n} in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// All minimal coset representatives for d, in lexicographic order.
inline std::vector<Permutation> minimal_representatives(const DimensionSequence& d) {
  // Multiset permutations of block labels, then place values 1..n by label.
  const int n = d.n();
  std::vector<int> labels;
  for (std::size_t b = 0; b < d.size(); ++b) labels.insert(labels.end(), static_cast<std::size_t>(d[b]), static_cast<int>(b));
  const auto starts = [&] {
    std::vector<int> s(d.size(), 0);
    for (std::size_t b = 1; b < d.size(); ++b) s[b] = s[b - 1] + d[b - 1];
    return s;
  }();
  std::vector<Permutation> out;
  do {
    std::vector<int> images(static_cast<std::size_t>(n));
    auto fill = starts;
    for (int value = 1; value <= n; ++value) {
      const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(value - 1)]);
      images[static_cast<std::size_t>(fill[b]++)] = value;
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flagcycle

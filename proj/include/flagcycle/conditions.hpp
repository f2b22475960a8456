#pragma once

// Combinatorial predicates on Weyl group elements: the spacing condition, the
// double box contraction (immediate predecessor algorithm), their block-wise
// generalizations for symmetric dimension sequences, and the canonical
// rearrangement lifting a G/P representative to G/B.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagcycle/error.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

/// w = k_1 ... k_m [l_*] l_m ... l_1 with m = floor(n/2); l_* only for odd n.
struct PairSplit {
  std::vector<int> k;
  std::vector<int> l;
  std::optional<int> l_star;
};

inline PairSplit split_pairs(const Permutation& w) {
  const int n = w.size();
  const int m = n / 2;
  PairSplit out;
  for (int i = 1; i <= m; ++i) {
    out.k.push_back(w(i));
    out.l.push_back(w(n - i + 1));
  }
  if (n % 2 == 1) out.l_star = w(m + 1);
  return out;
}

/// m^2 for n = 2m, m^2 + m for n = 2m + 1.
inline long critical_length(int n) {
  const long m = n / 2;
  return n % 2 == 0 ? m * m : m * m + m;
}

/// l_i < k_i for all i <= m.
inline bool spacing(const Permutation& w) {
  const auto p = split_pairs(w);
  for (std::size_t i = 0; i < p.k.size(); ++i)
    if (p.l[i] >= p.k[i]) return false;
  return true;
}

namespace detail {

// True iff `low` is the immediate left neighbour of `high` in `residual`.
inline bool immediate_predecessor(const std::set<int>& residual, int low, int high) {
  auto it = residual.find(high);
  if (it == residual.end() || it == residual.begin()) return false;
  return *std::prev(it) == low;
}

inline std::set<int> full_residual(int n) {
  std::set<int> r;
  for (int v = 1; v <= n; ++v) r.insert(r.end(), v);
  return r;
}

inline void require_symmetric(const DimensionSequence& d, const char* op) {
  if (!d.is_symmetric())
    throw precondition_error(std::string(op) + ": dimension sequence (" + d.str() + ") is not symmetric");
  if (d.pair_count() == 0)
    throw precondition_error(std::string(op) + ": dimension sequence (" + d.str() + ") has no symmetric block pair");
}

struct BlockPair {
  std::vector<int> k;  // B_j, ascending
  std::vector<int> l;  // B~_j, ascending
};

struct SymmetricBlocks {
  std::vector<BlockPair> pairs;  // j = 1..s
  std::vector<int> middle;       // B_{e'}, ascending; empty for d-type
};

inline SymmetricBlocks symmetric_blocks(const Permutation& w, const DimensionSequence& d) {
  auto blocks = block_decompose(w, d);
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  SymmetricBlocks out;
  const std::size_t s = d.pair_count();
  for (std::size_t j = 0; j < s; ++j) out.pairs.push_back({blocks[j], blocks[blocks.size() - 1 - j]});
  if (d.has_middle()) out.middle = blocks[s];
  return out;
}

}  // namespace detail

/// Immediate predecessor algorithm, replayed on the pairs read off w: l_1 must
/// be k_1 - 1 and each later l_i must sit immediately left of k_i in what is
/// left of {1..n}. For odd n the middle letter l_* is whatever remains.
inline bool double_box(const Permutation& w) {
  const auto p = split_pairs(w);
  auto residual = detail::full_residual(w.size());
  for (std::size_t i = 0; i < p.k.size(); ++i) {
    if (!detail::immediate_predecessor(residual, p.l[i], p.k[i])) return false;
    residual.erase(p.k[i]);
    residual.erase(p.l[i]);
  }
  return true;
}

/// For every symmetric block pair (B_j, B~_j) the elements of B~_j can be
/// matched to those of B_j with each l below its k. Sorted-to-sorted matching
/// succeeds iff any such matching exists.
inline bool generalized_spacing(const Permutation& w, const DimensionSequence& d) {
  detail::require_symmetric(d, "generalized_spacing");
  require_same_size(w, d);
  for (const auto& pair : detail::symmetric_blocks(w, d).pairs)
    for (std::size_t i = 0; i < pair.k.size(); ++i)
      if (pair.l[i] >= pair.k[i]) return false;
  return true;
}

/// Generalized immediate predecessor algorithm: step j picks d_j pairs, each l
/// immediately left of its k in {1..n} minus the blocks of steps 1..j-1.
/// Within a step, disjoint adjacent pairs are non-interleaving, so the only
/// candidate pairing is sorted B_j against sorted B~_j.
inline bool generalized_double_box(const Permutation& w, const DimensionSequence& d) {
  detail::require_symmetric(d, "generalized_double_box");
  require_same_size(w, d);
  auto residual = detail::full_residual(w.size());
  for (const auto& pair : detail::symmetric_blocks(w, d).pairs) {
    for (std::size_t i = 0; i < pair.k.size(); ++i)
      if (!detail::immediate_predecessor(residual, pair.l[i], pair.k[i])) return false;
    for (std::size_t i = 0; i < pair.k.size(); ++i) {
      residual.erase(pair.k[i]);
      residual.erase(pair.l[i]);
    }
  }
  return true;
}

/// Middle block l'_1 < ... < l'_{e'} rewritten as
/// l'_{h+1} ... l'_{e'} l'_1 ... l'_h with h = e'/2 (e' even) or (e'+1)/2 (e' odd).
inline std::vector<int> rearranged_middle(const std::vector<int>& ascending) {
  const std::size_t e = ascending.size();
  const std::size_t h = e % 2 == 0 ? e / 2 : (e + 1) / 2;
  std::vector<int> out(ascending.begin() + static_cast<std::ptrdiff_t>(h), ascending.end());
  out.insert(out.end(), ascending.begin(), ascending.begin() + static_cast<std::ptrdiff_t>(h));
  return out;
}

/// Length added by the canonical rearrangement:
/// sum d_i(d_i - 1)/2 over the pairs, plus (e'/2)^2 or (e'-1)(e'+1)/4.
inline long rearrangement_length_gain(const DimensionSequence& d) {
  long gain = 0;
  for (std::size_t j = 0; j < d.pair_count(); ++j) gain += static_cast<long>(d[j]) * (d[j] - 1) / 2;
  const long e = d.middle();
  if (e > 0) gain += e % 2 == 0 ? (e / 2) * (e / 2) : (e - 1) * (e + 1) / 4;
  return gain;
}

/// The lift w^ of a G/P representative to G/B: B_j kept ascending, each B~_j
/// written in decreasing order, the middle block per rearranged_middle().
inline Permutation canonical_rearrangement(const Permutation& w, const DimensionSequence& d) {
  if (!generalized_double_box(w, d))
    throw precondition_error("canonical_rearrangement: " + w.str() + " fails the generalized double box contraction for (" +
                             d.str() + ")");
  auto blocks = block_decompose(w, d);
  const std::size_t s = d.pair_count();
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  for (std::size_t j = 0; j < s; ++j) {
    auto& tail = blocks[blocks.size() - 1 - j];
    std::reverse(tail.begin(), tail.end());
  }
  if (d.has_middle()) blocks[s] = rearranged_middle(blocks[s]);
  return from_blocks(blocks);
}

/// Within every group of t_j > 1 consecutive blocks of w^ (type d^), each block
/// lies entirely below the one before it: last(B_{i+1}) < first(B_i).
inline bool strictly_decreasing_groups(const Permutation& w_hat, const DimensionSequence& d_hat, const std::vector<int>& t) {
  std::size_t total = 0;
  for (int tj : t) {
    if (tj < 1) throw precondition_error("strictly_decreasing_groups: grouping entries must be positive");
    total += static_cast<std::size_t>(tj);
  }
  if (total != d_hat.size())
    throw precondition_error("strictly_decreasing_groups: grouping sums to " + std::to_string(total) + " but (" +
                             d_hat.str() + ") has " + std::to_string(d_hat.size()) + " parts");
  const auto blocks = block_decompose(w_hat, d_hat);
  std::size_t start = 0;
  for (int tj : t) {
    for (std::size_t i = start; i + 1 < start + static_cast<std::size_t>(tj); ++i)
      if (blocks[i + 1].back() >= blocks[i].front()) return false;
    start += static_cast<std::size_t>(tj);
  }
  return true;
}

}  // namespace flagcycle

#pragma once

// Generators for the Schubert varieties dual to the base cycle: the full flag
// case, symmetric (measurable) dimension sequences, and non-symmetric ones
// through their measurable model.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "flagcycle/conditions.hpp"
#include "flagcycle/error.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

/// All w in S_n satisfying the double box contraction, in lexicographic order.
inline std::vector<Permutation> enumerate_fullflag(int n) {
  if (n < 2) throw precondition_error("enumerate_fullflag: n must be at least 2");
  const int m = n / 2;
  std::vector<int> k(static_cast<std::size_t>(m)), l(static_cast<std::size_t>(m));
  std::vector<Permutation> out;

  std::function<void(std::vector<int>&, int)> step = [&](std::vector<int>& residual, int i) {
    if (i == m) {
      std::vector<int> images(k);
      if (n % 2 == 1) images.push_back(residual.front());
      images.insert(images.end(), l.rbegin(), l.rend());
      out.emplace_back(std::move(images));
      return;
    }
    for (std::size_t pos = 1; pos < residual.size(); ++pos) {
      k[static_cast<std::size_t>(i)] = residual[pos];
      l[static_cast<std::size_t>(i)] = residual[pos - 1];
      std::vector<int> rest;
      rest.reserve(residual.size() - 2);
      for (std::size_t q = 0; q < residual.size(); ++q)
        if (q != pos && q != pos - 1) rest.push_back(residual[q]);
      step(rest, i + 1);
    }
  };

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
  step(all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct MeasurableEntry {
  Permutation w;     // minimal representative for d
  Permutation lift;  // canonical rearrangement in S_n
};

namespace detail {

// Every way to pick `count` disjoint pairs of neighbours in `residual`
// (positions p, p+1). Each pick is reported as the list of left positions.
inline void adjacent_pairings(std::size_t size, int count, std::size_t from, std::vector<std::size_t>& chosen,
                              const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (count == 0) {
    emit(chosen);
    return;
  }
  for (std::size_t p = from; p + 1 < size; ++p) {
    chosen.push_back(p);
    adjacent_pairings(size, count - 1, p + 2, chosen, emit);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Minimal representatives satisfying the generalized double box contraction,
/// built step by step from the residual set, each paired with its lift.
inline std::vector<MeasurableEntry> enumerate_measurable(const DimensionSequence& d) {
  detail::require_symmetric(d, "enumerate_measurable");
  const int n = d.n();
  const std::size_t s = d.pair_count();
  std::vector<std::vector<int>> blocks(d.size());
  std::vector<MeasurableEntry> out;

  std::function<void(const std::vector<int>&, std::size_t)> step = [&](const std::vector<int>& residual, std::size_t j) {
    if (j == s) {
      if (d.has_middle()) blocks[s] = residual;
      const Permutation w = from_blocks(blocks);
      out.push_back({w, canonical_rearrangement(w, d)});
      return;
    }
    std::vector<std::size_t> chosen;
    detail::adjacent_pairings(residual.size(), d[j], 0, chosen, [&](const std::vector<std::size_t>& lefts) {
      std::vector<int> ks, ls;
      std::vector<bool> used(residual.size(), false);
      for (std::size_t p : lefts) {
        ls.push_back(residual[p]);
        ks.push_back(residual[p + 1]);
        used[p] = used[p + 1] = true;
      }
      std::vector<int> rest;
      for (std::size_t q = 0; q < residual.size(); ++q)
        if (!used[q]) rest.push_back(residual[q]);
      blocks[j] = ks;
      blocks[d.size() - 1 - j] = ls;
      step(rest, j + 1);
    });
  };

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
  step(all, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.w < b.w; });
  return out;
}

/// Dimension sequence d^ of P^ = P cap tau(P^-) together with the grouping t
/// of its parts that reproduces f.
struct MeasurableModel {
  DimensionSequence original;  // f
  DimensionSequence model;     // d^
  std::vector<int> t;
  std::vector<int> delta;  // partial sums of t
  long dim_drop = 0;
};

inline MeasurableModel measurable_model(const DimensionSequence& f) {
  std::set<int> cuts;
  for (int p : f.partial_sums()) cuts.insert(p);
  for (int p : f.reversed().partial_sums()) cuts.insert(p);

  std::vector<int> parts;
  int prev = 0;
  for (int c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  MeasurableModel out{f, DimensionSequence(parts), {}, {}, 0};

  // Each cut of f is a cut of d^, so every part of f is a run of parts of d^.
  std::size_t idx = 0;
  for (int part : f.parts()) {
    int covered = 0, count = 0;
    while (covered < part) covered += parts[idx++], ++count;
    out.t.push_back(count);
  }
  int running = 0;
  for (int tj : out.t) out.delta.push_back(running += tj);

  std::size_t start = 0;
  for (int tj : out.t) {
    for (std::size_t h = start; h < start + static_cast<std::size_t>(tj); ++h)
      for (std::size_t g = h + 1; g < start + static_cast<std::size_t>(tj); ++g)
        out.dim_drop += static_cast<long>(parts[h]) * parts[g];
    start += static_cast<std::size_t>(tj);
  }
  return out;
}

/// Merges each group of t consecutive blocks of w^ into one block, sorted.
inline Permutation merge(const Permutation& w_hat, const DimensionSequence& d_hat, const std::vector<int>& t) {
  const auto blocks = block_decompose(w_hat, d_hat);
  std::vector<std::vector<int>> merged;
  std::size_t idx = 0;
  for (int tj : t) {
    std::vector<int> group;
    for (int c = 0; c < tj; ++c, ++idx) group.insert(group.end(), blocks[idx].begin(), blocks[idx].end());
    std::sort(group.begin(), group.end());
    merged.push_back(std::move(group));
  }
  return from_blocks(merged);
}

struct NonMeasurableEntry {
  Permutation w;      // minimal representative for f
  Permutation w_hat;  // minimal representative for d^ projecting onto w
};

/// Members of the measurable model whose grouped blocks are strictly
/// decreasing, projected to f.
inline std::vector<NonMeasurableEntry> enumerate_nonmeasurable(const DimensionSequence& f) {
  const auto model = measurable_model(f);
  if (!model.model.is_symmetric() || model.model.pair_count() == 0)
    throw precondition_error("enumerate_nonmeasurable: measurable model (" + model.model.str() + ") of (" + f.str() +
                             ") is not usable");
  std::vector<NonMeasurableEntry> out;
  for (const auto& entry : enumerate_measurable(model.model))
    if (strictly_decreasing_groups(entry.w, model.model, model.t)) out.push_back({merge(entry.w, model.model, model.t), entry.w});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.w < b.w; });
  return out;
}

}  // namespace flagcycle

#pragma once

// Dimension bookkeeping for Z = G/P, the base cycle C_0 and the dual Schubert
// varieties, plus the homology decomposition of [C_0].

#include <algorithm>
#include <string>
#include <vector>

#include "flagcycle/enumerate.hpp"
#include "flagcycle/error.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

/// sum_{i<j} d_i d_j.
inline long dim_Z(const DimensionSequence& d) {
  long total = 0;
  long before = 0;
  for (int part : d.parts()) {
    total += before * part;
    before += part;
  }
  return total;
}

namespace detail {

// Isotropic full flags in C^k with a nondegenerate symmetric form:
// h^2 - h for k = 2h, h^2 for k = 2h + 1.
inline long isotropic_flag_dim(long k) {
  const long h = k / 2;
  return k % 2 == 0 ? h * h - h : h * h;
}

inline void require_supported(const DimensionSequence& d, const char* op) {
  if (!d.is_symmetric()) return;
  if (d.pair_count() == 0)
    throw precondition_error(std::string(op) + ": (" + d.str() + ") has no symmetric block pair and is degenerate");
}

}  // namespace detail

/// dim C_0. Full flag: m^2 - m (n = 2m) or m^2 (n = 2m + 1). Symmetric d:
/// the full-flag value minus the fibre of the isotropic full flags over C_0,
/// i.e. sum d_i(d_i - 1)/2 over the pairs plus the isotropic flags of the
/// middle block. Non-symmetric f: the value of its measurable model.
inline long dim_base_cycle(const DimensionSequence& d) {
  detail::require_supported(d, "dim_base_cycle");
  if (!d.is_symmetric()) return dim_base_cycle(measurable_model(d).model);
  const long full = detail::isotropic_flag_dim(d.n());
  long fibre = 0;
  for (std::size_t j = 0; j < d.pair_count(); ++j) fibre += static_cast<long>(d[j]) * (d[j] - 1) / 2;
  fibre += detail::isotropic_flag_dim(d.middle());
  return full - fibre;
}

/// dim Z - dim C_0, the dimension of every Schubert variety dual to C_0.
inline long expected_schubert_dim(const DimensionSequence& d) { return dim_Z(d) - dim_base_cycle(d); }

/// Open SL(n,R)-orbits: two when n = 2m and V_m belongs to the flag (they
/// differ by orientation), otherwise one.
inline int orbit_count(const DimensionSequence& d) {
  const int n = d.n();
  if (n % 2 != 0) return 1;
  const auto sums = d.partial_sums();
  return std::find(sums.begin(), sums.end(), n / 2) != sums.end() ? 2 : 1;
}

/// Number of intersection points of one dual Schubert variety with C_0 that
/// lie in a single open orbit.
inline long points_per_orbit(const DimensionSequence& d) {
  detail::require_supported(d, "points_per_orbit");
  const auto& sym = d.is_symmetric() ? d : measurable_model(d).model;
  const long total = 1L << sym.outer_sum();
  return total / orbit_count(d);
}

struct HomologyClass {
  long coefficient = 0;
  std::vector<Permutation> classes;
};

/// [C_0] = coefficient * sum of the classes of the dual Schubert varieties.
inline HomologyClass homology_class(const DimensionSequence& d) {
  if (!d.is_symmetric())
    throw precondition_error("homology_class: (" + d.str() + ") is not symmetric");
  detail::require_supported(d, "homology_class");
  HomologyClass out;
  out.coefficient = points_per_orbit(d);
  for (const auto& entry : enumerate_measurable(d)) out.classes.push_back(entry.w);
  return out;
}

/// All compositions of n, ordered lexicographically by their parts.
inline std::vector<DimensionSequence> compositions(int n) {
  std::vector<DimensionSequence> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1u << b)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end());
  });
  return out;
}

/// Palindromic compositions of n with at least one block pair.
inline std::vector<DimensionSequence> symmetric_sequences(int n) {
  std::vector<DimensionSequence> out;
  for (auto& d : compositions(n))
    if (d.is_symmetric() && d.pair_count() > 0) out.push_back(std::move(d));
  return out;
}

inline std::vector<DimensionSequence> nonsymmetric_sequences(int n) {
  std::vector<DimensionSequence> out;
  for (auto& d : compositions(n))
    if (!d.is_symmetric()) out.push_back(std::move(d));
  return out;
}

}  // namespace flagcycle

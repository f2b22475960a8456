#pragma once

// Brute-force counterparts of the constructive routines, random points of
// Schubert cells, and a sweep running every cross-module check for one n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagcycle/conditions.hpp"
#include "flagcycle/enumerate.hpp"
#include "flagcycle/error.hpp"
#include "flagcycle/exactnum.hpp"
#include "flagcycle/flags.hpp"
#include "flagcycle/geometry.hpp"
#include "flagcycle/intersect.hpp"
#include "flagcycle/parallel.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

/// Filter of S_n by spacing and critical length.
inline std::vector<Permutation> brute_SC0(int n) {
  if (n < 2 || n > 9) throw precondition_error("brute_SC0: n = " + std::to_string(n) + " outside 2..9");
  const long target = expected_schubert_dim(DimensionSequence::full_flag(n));
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (spacing(w) && length(w) == target) out.push_back(std::move(w));
  return out;
}

/// Filter of the minimal representatives by generalized spacing and length.
inline std::vector<Permutation> brute_measurable(const DimensionSequence& d) {
  if (d.n() > 9) throw precondition_error("brute_measurable: n = " + std::to_string(d.n()) + " exceeds 9");
  const long target = expected_schubert_dim(d);
  std::vector<Permutation> out;
  for (auto& w : minimal_representatives(d))
    if (generalized_spacing(w, d) && length(w) == target) out.push_back(std::move(w));
  return out;
}

namespace detail {

inline mpq_class random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 1000 + 1);
  const long den = static_cast<long>(rng() % 1000 + 1);
  mpq_class q(num, den);
  q.canonicalize();
  return rng() % 2 ? q : mpq_class(-q);
}

}  // namespace detail

/// A point of the cell O_w: column i has a 1 in row w(i) and free entries in
/// the rows above it that carry no earlier pivot. Free entries are random
/// Gaussian rationals with nonzero real and imaginary parts.
inline Flag sample_cell_point(const Permutation& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(w.size());
  ExactMatrix b(n, n);
  std::vector<bool> pivot_row(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    const auto row = static_cast<std::size_t>(w(static_cast<int>(c) + 1) - 1);
    b(row, c) = 1;
    for (std::size_t r = 0; r < row; ++r)
      if (!pivot_row[r]) {
        auto re = detail::random_rational(rng);
        auto im = detail::random_rational(rng);
        b(r, c) = GaussianRational(std::move(re), std::move(im));
      }
    pivot_row[row] = true;
  }
  return Flag(DimensionSequence::full_flag(w.size()), std::move(b));
}

struct DichotomyReport {
  int n = 0;
  int trials = 0;
  long non_spacing_perms = 0;
  long samples = 0;
  long spacing_perms = 0;
  std::vector<std::string> counterexamples;
  bool pass = false;
};

/// At critical length: every sampled point of a non-spacing cell fails
/// tau-genericity, and every spacing cell carries a tau-generic point among
/// the constructed intersection points.
inline DichotomyReport check_genericity_dichotomy(int n, int trials, std::uint64_t seed = 1) {
  if (n < 2 || n > 8) throw precondition_error("check_genericity_dichotomy: n = " + std::to_string(n) + " outside 2..8");
  if (trials < 0) throw precondition_error("check_genericity_dichotomy: trials must be non-negative");
  DichotomyReport rep;
  rep.n = n;
  rep.trials = trials;
  const long target = critical_length(n);
  std::vector<Permutation> candidates;
  for (auto& w : all_permutations(n))
    if (length(w) == target) candidates.push_back(std::move(w));

  std::vector<std::vector<std::string>> found(candidates.size());
  std::vector<long> sampled(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t k) {
    const auto& w = candidates[k];
    if (!spacing(w)) {
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed * 1'000'003ULL + k * 1'009ULL + static_cast<std::uint64_t>(t);
        ++sampled[k];
        if (is_tau_generic(sample_cell_point(w, s)))
          found[k].push_back(w.str() + ": sampled point (seed " + std::to_string(s) + ") is tau-generic");
      }
      return;
    }
    if (!double_box(w)) {
      found[k].push_back(w.str() + ": spacing at critical length but no double box contraction");
      return;
    }
    const auto points = intersection_points_fullflag(w);
    if (std::none_of(points.begin(), points.end(), [](const Flag& z) { return is_tau_generic(z); }))
      found[k].push_back(w.str() + ": no constructed point is tau-generic");
  });

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (spacing(candidates[k]))
      ++rep.spacing_perms;
    else
      ++rep.non_spacing_perms;
    rep.samples += sampled[k];
    rep.counterexamples.insert(rep.counterexamples.end(), found[k].begin(), found[k].end());
  }
  rep.pass = rep.counterexamples.empty();
  return rep;
}

inline nlohmann::ordered_json to_json(const DichotomyReport& r) {
  nlohmann::ordered_json out;
  out["n"] = r.n;
  out["trials"] = r.trials;
  out["non_spacing_perms"] = r.non_spacing_perms;
  out["samples"] = r.samples;
  out["spacing_perms"] = r.spacing_perms;
  out["counterexamples"] = r.counterexamples;
  out["pass"] = r.pass;
  return out;
}

/// (n-1)(n-3)...1.
inline long double_factorial(int n) {
  long out = 1;
  for (int k = n - 1; k > 0; k -= 2) out *= k;
  return out;
}

struct SweepCheck {
  std::string name;
  long cases = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

struct SweepReport {
  int n = 0;
  std::vector<SweepCheck> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SweepCheck& c) { return c.pass(); });
  }
};

namespace detail {

inline std::string seq(const DimensionSequence& d) { return "(" + d.str() + ")"; }

inline void verify_members(SweepCheck& check, const std::vector<std::pair<Permutation, DimensionSequence>>& items) {
  std::vector<IntersectionReport> reports(items.size());
  parallel_for(items.size(), [&](std::size_t k) { reports[k] = verify_intersection(items[k].first, items[k].second); });
  for (const auto& r : reports) {
    ++check.cases;
    for (const auto& f : r.failures) check.failures.push_back(r.w.str() + " in " + seq(r.d) + ": " + f);
  }
}

}  // namespace detail

/// Every cross-module invariant for a single n.
inline SweepReport verify_sweep(int n, int trials = 50, std::uint64_t seed = 1) {
  if (n < 2 || n > 8) throw precondition_error("verify_sweep: n = " + std::to_string(n) + " outside 2..8");
  SweepReport rep;
  rep.n = n;
  const auto full = DimensionSequence::full_flag(n);
  const auto members = enumerate_fullflag(n);

  {
    SweepCheck c{"fullflag_count", 1, {}};
    if (static_cast<long>(members.size()) != double_factorial(n))
      c.failures.push_back("found " + std::to_string(members.size()) + ", expected " + std::to_string(double_factorial(n)));
    rep.checks.push_back(std::move(c));
  }
  {
    SweepCheck c{"fullflag_matches_brute_force", 1, {}};
    if (brute_SC0(n) != members) c.failures.push_back("constructive and brute-force lists differ");
    rep.checks.push_back(std::move(c));
  }
  {
    SweepCheck c{"fullflag_critical_length", 0, {}};
    for (const auto& w : members) {
      ++c.cases;
      if (length(w) != critical_length(n)) c.failures.push_back(w.str() + ": length " + std::to_string(length(w)));
      if (!spacing(w)) c.failures.push_back(w.str() + ": spacing fails");
      if (w(n) != w(1) - 1) c.failures.push_back(w.str() + ": w(n) != w(1) - 1");
    }
    rep.checks.push_back(std::move(c));
  }
  {
    SweepCheck c{"length_oracles_agree", 0, {}};
    for (const auto& w : all_permutations(n)) {
      ++c.cases;
      if (length(w) != length_by_distance_sum(w)) c.failures.push_back(w.str());
    }
    rep.checks.push_back(std::move(c));
  }
  {
    SweepCheck c{"fullflag_intersection_points", 0, {}};
    std::vector<std::pair<Permutation, DimensionSequence>> items;
    for (const auto& w : members) items.emplace_back(w, full);
    detail::verify_members(c, items);
    rep.checks.push_back(std::move(c));
  }
  {
    SweepCheck c{"genericity_dichotomy", 1, {}};
    const auto d = check_genericity_dichotomy(n, trials, seed);
    c.cases = d.non_spacing_perms + d.spacing_perms;
    c.failures = d.counterexamples;
    rep.checks.push_back(std::move(c));
  }

  SweepCheck meas{"measurable_matches_brute_force", 0, {}};
  SweepCheck lifts{"measurable_lifts", 0, {}};
  SweepCheck meas_points{"measurable_intersection_points", 0, {}};
  SweepCheck homology{"homology_coefficient", 0, {}};
  std::vector<std::pair<Permutation, DimensionSequence>> meas_items;
  const std::set<Permutation> member_set(members.begin(), members.end());
  for (const auto& d : symmetric_sequences(n)) {
    const auto entries = enumerate_measurable(d);
    std::vector<Permutation> ws;
    std::set<Permutation> lift_set;
    for (const auto& e : entries) {
      ws.push_back(e.w);
      lift_set.insert(e.lift);
      ++lifts.cases;
      if (!member_set.count(e.lift)) lifts.failures.push_back(e.w.str() + " in " + detail::seq(d) + ": lift not in the full flag list");
      if (length(e.w) != length(e.lift) - rearrangement_length_gain(d))
        lifts.failures.push_back(e.w.str() + " in " + detail::seq(d) + ": length correction fails");
      if (length(e.w) != expected_schubert_dim(d))
        lifts.failures.push_back(e.w.str() + " in " + detail::seq(d) + ": length differs from dim Z - dim C_0");
      meas_items.emplace_back(e.w, d);
    }
    if (lift_set.size() != entries.size()) lifts.failures.push_back(detail::seq(d) + ": lifting is not injective");
    ++meas.cases;
    if (brute_measurable(d) != ws) meas.failures.push_back(detail::seq(d) + ": constructive and brute-force lists differ");

    ++homology.cases;
    const auto h = homology_class(d);
    if (h.classes != ws) homology.failures.push_back(detail::seq(d) + ": class list differs from the enumeration");
    if (!entries.empty()) {
      const auto r = verify_intersection(entries.front().w, d);
      for (const auto& [sign, count] : orientation_tally(r))
        if (count != h.coefficient)
          homology.failures.push_back(detail::seq(d) + ": coefficient " + std::to_string(h.coefficient) +
                                      " but an orbit holds " + std::to_string(count) + " points");
    }
  }
  detail::verify_members(meas_points, meas_items);
  rep.checks.push_back(std::move(meas));
  rep.checks.push_back(std::move(lifts));
  rep.checks.push_back(std::move(meas_points));
  rep.checks.push_back(std::move(homology));

  SweepCheck nonmeas{"nonmeasurable_projection", 0, {}};
  SweepCheck nonmeas_points{"nonmeasurable_intersection_points", 0, {}};
  std::vector<std::pair<Permutation, DimensionSequence>> nonmeas_items;
  for (const auto& f : nonsymmetric_sequences(n)) {
    const auto model = measurable_model(f);
    ++nonmeas.cases;
    if (dim_Z(f) != dim_Z(model.model) - model.dim_drop)
      nonmeas.failures.push_back(detail::seq(f) + ": dim Z differs from the model minus the drop");
    std::set<Permutation> hats;
    const auto entries = enumerate_nonmeasurable(f);
    for (const auto& e : entries) {
      hats.insert(e.w_hat);
      const std::string tag = e.w.str() + " in " + detail::seq(f) + ": ";
      if (!is_minimal_rep(e.w, f)) nonmeas.failures.push_back(tag + "not a minimal representative");
      if (length(e.w) != length(e.w_hat) - model.dim_drop) nonmeas.failures.push_back(tag + "length drop fails");
      if (length(e.w) != expected_schubert_dim(f)) nonmeas.failures.push_back(tag + "length differs from dim Z - dim C_0");
      nonmeas_items.emplace_back(e.w, f);
    }
    std::set<Permutation> ws;
    for (const auto& e : entries) ws.insert(e.w);
    if (ws.size() != entries.size() || hats.size() != entries.size())
      nonmeas.failures.push_back(detail::seq(f) + ": projection is not injective");
  }
  detail::verify_members(nonmeas_points, nonmeas_items);
  rep.checks.push_back(std::move(nonmeas));
  rep.checks.push_back(std::move(nonmeas_points));
  return rep;
}

inline nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json out;
  out["n"] = r.n;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["pass"] = c.pass();
    std::vector<std::string> shown(c.failures.begin(), c.failures.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(c.failures.size(), 20)));
    j["failures"] = shown;
    j["failure_count"] = c.failures.size();
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["pass"] = r.pass();
  return out;
}

}  // namespace flagcycle

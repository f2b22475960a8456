#pragma once

// Explicit intersection points of S_w with the base cycle C_0, and a report
// bundling every check performed on them.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagcycle/conditions.hpp"
#include "flagcycle/enumerate.hpp"
#include "flagcycle/error.hpp"
#include "flagcycle/exactnum.hpp"
#include "flagcycle/flags.hpp"
#include "flagcycle/geometry.hpp"
#include "flagcycle/parallel.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

/// Flag with adapted basis
///   s_1 i e_{l_1} + e_{k_1}, ..., s_m i e_{l_m} + e_{k_m}, [e_{l_*}], e_{l_m}, ..., e_{l_1}
/// where bit j of `signs` set means s_{j+1} = -1.
inline Flag twisted_flag(const Permutation& w, unsigned long signs) {
  const auto p = split_pairs(w);
  const auto n = static_cast<std::size_t>(w.size());
  ExactMatrix b(n, n);
  std::size_t col = 0;
  for (std::size_t j = 0; j < p.k.size(); ++j, ++col) {
    b(static_cast<std::size_t>(p.l[j] - 1), col) = (signs >> j) & 1u ? -GaussianRational::i() : GaussianRational::i();
    b(static_cast<std::size_t>(p.k[j] - 1), col) = 1;
  }
  if (p.l_star) b(static_cast<std::size_t>(*p.l_star - 1), col++) = 1;
  for (std::size_t j = p.l.size(); j-- > 0; ++col) b(static_cast<std::size_t>(p.l[j] - 1), col) = 1;
  return Flag(DimensionSequence::full_flag(w.size()), std::move(b));
}

/// The 2^m points of S_w cap C_0 for w satisfying the double box contraction,
/// ordered by sign vector.
inline std::vector<Flag> intersection_points_fullflag(const Permutation& w) {
  if (!double_box(w))
    throw precondition_error("intersection_points_fullflag: " + w.str() + " fails the double box contraction");
  const unsigned long count = 1ul << (w.size() / 2);
  std::vector<Flag> out;
  out.reserve(count);
  for (unsigned long signs = 0; signs < count; ++signs) out.push_back(twisted_flag(w, signs));
  return out;
}

/// Distinct flags, first occurrence kept.
inline std::vector<Flag> dedup_flags(const std::vector<Flag>& flags) {
  std::vector<Flag> out;
  for (const auto& f : flags) {
    bool seen = false;
    for (const auto& g : out)
      if (same_flag(f, g)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(f);
  }
  return out;
}

/// Points of S_w cap C_0 in G/P: the points of the lift S_w^ projected to type d.
inline std::vector<Flag> intersection_points_partial(const Permutation& w, const DimensionSequence& d) {
  if (!generalized_double_box(w, d))
    throw precondition_error("intersection_points_partial: " + w.str() +
                             " fails the generalized double box contraction for (" + d.str() + ")");
  std::vector<Flag> projected;
  for (const auto& f : intersection_points_fullflag(canonical_rearrangement(w, d))) projected.push_back(f.project(d));
  return dedup_flags(projected);
}

/// Points of S_w cap C_0 for a non-symmetric f: the points of the matching
/// member of the measurable model, read in type f.
inline std::vector<Flag> intersection_points_nonmeasurable(const Permutation& w, const DimensionSequence& f) {
  require_same_size(w, f);
  const auto model = measurable_model(f);
  for (const auto& entry : enumerate_nonmeasurable(f))
    if (entry.w == w) {
      std::vector<Flag> projected;
      for (const auto& z : intersection_points_partial(entry.w_hat, model.model)) projected.push_back(z.project(f));
      return dedup_flags(projected);
    }
  throw precondition_error("intersection_points_nonmeasurable: " + w.str() + " is not dual to C_0 in type (" + f.str() + ")");
}

/// Dispatches on the kind of d.
inline std::vector<Flag> intersection_points(const Permutation& w, const DimensionSequence& d) {
  require_same_size(w, d);
  if (d.kind() == FlagKind::full_flag) return intersection_points_fullflag(w);
  if (d.is_symmetric()) return intersection_points_partial(w, d);
  return intersection_points_nonmeasurable(w, d);
}

struct PointCheck {
  bool isotropic = false;
  bool tau_generic = false;
  bool in_cell = false;
  std::optional<int> orientation;
};

struct IntersectionReport {
  Permutation w;
  DimensionSequence d;
  nlohmann::ordered_json conditions = nlohmann::ordered_json::object();
  bool member = false;
  long length = 0;
  long expected_length = 0;
  std::optional<Permutation> lift;
  long expected_points = 0;
  long expected_per_orbit = 0;
  std::size_t constructed = 0;  // before identifying equal flags
  std::vector<Flag> points;     // distinct
  std::vector<PointCheck> checks;
  std::vector<std::string> failures;
  bool pass = false;
};

namespace detail {

inline PointCheck check_point(const Flag& z, const Permutation& cell) {
  PointCheck c;
  c.isotropic = is_isotropic(z);
  c.tau_generic = is_tau_generic(z);
  c.in_cell = cell_of_flag(z) == cell;
  const auto sums = z.dims().partial_sums();
  if (z.n() % 2 == 0 && std::find(sums.begin(), sums.end(), z.n() / 2) != sums.end() && c.tau_generic)
    c.orientation = orientation(z);
  return c;
}

}  // namespace detail

/// Runs the full certification of S_w cap C_0 for w in G/P of type d. Never
/// throws on mathematical failure; the report records it.
inline IntersectionReport verify_intersection(const Permutation& w, const DimensionSequence& d) {
  require_same_size(w, d);
  IntersectionReport r;
  r.w = w;
  r.d = d;
  const Permutation u = min_rep(w, d);
  r.length = length(u);

  // Points are computed in a symmetric type, then read in type d.
  DimensionSequence sym = d;
  Permutation sym_w = u;
  if (d.kind() == FlagKind::full_flag) {
    r.conditions["spacing"] = spacing(u);
    r.conditions["double_box"] = double_box(u);
    r.conditions["critical_length"] = critical_length(d.n());
    r.member = double_box(u);
  } else if (d.is_symmetric()) {
    if (d.pair_count() == 0) {
      r.failures.push_back("(" + d.str() + ") has no symmetric block pair");
      return r;
    }
    r.conditions["generalized_spacing"] = generalized_spacing(u, d);
    r.conditions["generalized_double_box"] = generalized_double_box(u, d);
    r.member = generalized_double_box(u, d);
  } else {
    const auto model = measurable_model(d);
    sym = model.model;
    r.conditions["model"] = std::vector<int>(sym.parts().begin(), sym.parts().end());
    r.conditions["t"] = model.t;
    for (const auto& entry : enumerate_nonmeasurable(d))
      if (entry.w == u) {
        r.member = true;
        sym_w = entry.w_hat;
      }
    r.conditions["nonmeasurable_member"] = r.member;
  }
  r.expected_length = expected_schubert_dim(d);
  r.expected_points = 1L << sym.outer_sum();
  r.expected_per_orbit = points_per_orbit(d);
  if (!r.member) {
    r.failures.push_back(w.str() + " does not parametrize a Schubert variety dual to C_0");
    return r;
  }
  if (r.length != r.expected_length) r.failures.push_back("length differs from dim Z - dim C_0");
  r.lift = canonical_rearrangement(sym_w, sym);

  std::vector<Flag> projected;
  for (const auto& f : intersection_points_fullflag(*r.lift)) projected.push_back(f.project(d));
  r.constructed = projected.size();
  r.points = dedup_flags(projected);

  r.checks.resize(r.points.size());
  parallel_for(r.points.size(), [&](std::size_t k) { r.checks[k] = detail::check_point(r.points[k], u); });

  if (static_cast<long>(r.points.size()) != r.expected_points)
    r.failures.push_back("constructed " + std::to_string(r.points.size()) + " distinct points, expected " +
                         std::to_string(r.expected_points));
  std::map<int, long> tally;
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    const auto& c = r.checks[k];
    const std::string tag = "point " + std::to_string(k) + ": ";
    if (!c.isotropic) r.failures.push_back(tag + "not isotropic");
    if (!c.tau_generic) r.failures.push_back(tag + "not tau-generic");
    if (!c.in_cell) r.failures.push_back(tag + "not in the cell of " + u.str());
    tally[c.orientation.value_or(0)]++;
  }
  if (static_cast<int>(tally.size()) != orbit_count(d))
    r.failures.push_back("points fall into " + std::to_string(tally.size()) + " orientation classes, expected " +
                         std::to_string(orbit_count(d)));
  for (const auto& [sign, count] : tally)
    if (count != r.expected_per_orbit)
      r.failures.push_back("orbit " + std::to_string(sign) + " holds " + std::to_string(count) + " points, expected " +
                           std::to_string(r.expected_per_orbit));
  r.pass = r.failures.empty();
  return r;
}

/// Orientation classes of a point set: sign -> count (sign 0 when undefined).
inline std::map<int, long> orientation_tally(const IntersectionReport& r) {
  std::map<int, long> tally;
  for (const auto& c : r.checks) tally[c.orientation.value_or(0)]++;
  return tally;
}

inline nlohmann::ordered_json to_json(const IntersectionReport& r) {
  nlohmann::ordered_json out;
  out["perm"] = r.w.str();
  out["dims"] = std::vector<int>(r.d.parts().begin(), r.d.parts().end());
  out["kind"] = std::string(to_string(r.d.kind()));
  out["conditions"] = r.conditions;
  out["member"] = r.member;
  out["length"] = r.length;
  out["expected_length"] = r.expected_length;
  out["lift"] = r.lift ? nlohmann::ordered_json(r.lift->str()) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json points;
  points["expected_total"] = r.expected_points;
  points["constructed"] = r.constructed;
  points["distinct"] = r.points.size();
  points["expected_per_orbit"] = r.expected_per_orbit;
  nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
  for (const auto& [sign, count] : orientation_tally(r)) {
    nlohmann::ordered_json o;
    o["orientation"] = sign == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(sign);
    o["count"] = count;
    orbits.push_back(std::move(o));
  }
  points["orbits"] = std::move(orbits);
  nlohmann::ordered_json per_point = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json p;
    p["isotropic"] = c.isotropic;
    p["tau_generic"] = c.tau_generic;
    p["in_cell"] = c.in_cell;
    p["orientation"] = c.orientation ? nlohmann::ordered_json(*c.orientation) : nlohmann::ordered_json(nullptr);
    per_point.push_back(std::move(p));
  }
  points["checks"] = std::move(per_point);
  out["points"] = std::move(points);
  out["failures"] = r.failures;
  out["pass"] = r.pass;
  return out;
}

}  // namespace flagcycle

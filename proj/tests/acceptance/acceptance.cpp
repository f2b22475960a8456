// One pass/fail line per acceptance criterion. With arguments, only the listed
// criteria run. Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flagcycle/flagcycle.hpp"

using namespace flagcycle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

DimensionSequence D(const char* s) { return DimensionSequence::parse(s); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

long pow2(long k) { return 1L << k; }

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t> expected{1, 2, 3, 8, 15, 48, 105, 384};
  for (int n = 2; n <= 9; ++n) {
    const auto got = enumerate_fullflag(n).size();
    if (got != expected[static_cast<std::size_t>(n - 2)])
      o.fail("n = " + std::to_string(n) + " gives " + std::to_string(got));
  }
  const double t = seconds_since(start);
  if (t >= 5.0) o.fail("took " + fmt_seconds(t));
  if (o.pass) o.detail = fmt_seconds(t);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double at8 = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto start = std::chrono::steady_clock::now();
    // Filter of S_n, written out here: spacing of the (k_i, l_i) pairs and
    // inversion count at the critical length.
    std::vector<Permutation> filtered;
    const long target = n % 2 == 0 ? (n / 2) * (n / 2) : (n / 2) * (n / 2) + n / 2;
    for (const auto& w : all_permutations(n)) {
      bool spaced = true;
      for (int i = 1; i <= n / 2; ++i) spaced = spaced && w(n + 1 - i) < w(i);
      long inversions = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) inversions += w(a) > w(b);
      if (spaced && inversions == target) filtered.push_back(w);
    }
    const auto brute = brute_SC0(n);
    const auto built = enumerate_fullflag(n);
    if (brute != built) o.fail("brute force and enumeration differ at n = " + std::to_string(n));
    if (filtered != built) o.fail("independent filter and enumeration differ at n = " + std::to_string(n));
    if (n == 8) at8 = seconds_since(start);
  }
  if (at8 >= 120.0) o.fail("n = 8 took " + fmt_seconds(at8));
  if (o.pass) o.detail = "n = 8 in " + fmt_seconds(at8);
  return o;
}

Outcome criterion3() {
  Outcome o;
  long count = 0;
  for (int n = 2; n <= 9; ++n) {
    const long m = n / 2;
    const long target = n % 2 == 0 ? m * m : m * m + m;
    for (const auto& w : enumerate_fullflag(n)) {
      ++count;
      if (length(w) != target) o.fail(w.str() + " has length " + std::to_string(length(w)));
      if (!spacing(w)) o.fail(w.str() + " fails spacing");
      if (w(n) != w(1) - 1) o.fail(w.str() + " has w(n) != w(1) - 1");
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " permutations, n = 2..9";
  return o;
}

Outcome criterion4() {
  Outcome o;
  double at8 = 0;
  long flags = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const int m = n / 2;
    const auto members = enumerate_fullflag(n);
    std::vector<std::string> problems(members.size());
    parallel_for(members.size(), [&](std::size_t k) {
      const auto& w = members[k];
      const auto points = intersection_points_fullflag(w);
      std::string& why = problems[k];
      if (static_cast<long>(points.size()) != pow2(m)) why = w.str() + ": " + std::to_string(points.size()) + " flags";
      std::map<int, long> split;
      for (std::size_t a = 0; a < points.size() && why.empty(); ++a) {
        const auto& z = points[a];
        if (!is_isotropic(z)) why = w.str() + ": point not isotropic";
        if (!is_tau_generic(z)) why = w.str() + ": point not tau-generic";
        if (cell_of_flag(z) != w) why = w.str() + ": point outside the cell";
        for (std::size_t b = a + 1; b < points.size(); ++b)
          if (same_flag(z, points[b])) why = w.str() + ": repeated point";
        if (n % 2 == 0) ++split[orientation(z)];
      }
      if (why.empty() && n % 2 == 0 && (split.size() != 2 || split.begin()->second != pow2(m - 1) || split.rbegin()->second != pow2(m - 1)))
        why = w.str() + ": orientation split is not 2^(m-1) / 2^(m-1)";
    });
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (!problems[k].empty()) o.fail(problems[k]);
      flags += pow2(m);
    }
    if (n == 8) at8 = seconds_since(start);
  }
  if (at8 >= 60.0) o.fail("n = 8 took " + fmt_seconds(at8));
  if (o.pass) o.detail = std::to_string(flags) + " flags, n = 8 in " + fmt_seconds(at8);
  return o;
}

Outcome criterion5() {
  Outcome o;
  long samples = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto r = check_genericity_dichotomy(n, 50);
    samples += r.samples;
    if (!r.pass) o.fail(r.counterexamples.front());
    if (r.samples != 50 * r.non_spacing_perms) o.fail("sample count mismatch at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = std::to_string(samples) + " sampled cell points, none tau-generic";
  return o;
}

// The stated per-orbit point count: 2^{m-1} for n = 2m without middle block,
// 2^{d_1+...+d_s-1} for n = 2m with a middle block, 2^{d_1+...+d_s} for n odd.
long stated_points_per_orbit(const DimensionSequence& d) {
  const long outer = d.outer_sum();
  if (d.n() % 2 == 1) return pow2(outer);
  if (!d.has_middle()) return pow2(d.n() / 2 - 1);
  return pow2(outer - 1);
}

long stated_length_gain(const DimensionSequence& d) {
  long gain = 0;
  for (std::size_t j = 0; j < d.pair_count(); ++j) gain += static_cast<long>(d[j]) * (d[j] - 1) / 2;
  const long e = d.middle();
  gain += e % 2 == 0 ? (e / 2) * (e / 2) : (e - 1) * (e + 1) / 4;
  return gain;
}

Outcome criterion6() {
  Outcome o;
  long types = 0;
  std::vector<std::string> count_mismatches;
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : symmetric_sequences(n)) {
      ++types;
      const auto entries = enumerate_measurable(d);
      std::vector<Permutation> ws;
      std::set<Permutation> lifts;
      for (const auto& e : entries) {
        ws.push_back(e.w);
        lifts.insert(e.lift);
      }
      if (ws != brute_measurable(d)) o.fail("(" + d.str() + "): enumeration differs from the brute filter");
      if (lifts.size() != entries.size()) o.fail("(" + d.str() + "): lifting is not injective");
      for (const auto& e : entries)
        if (length(e.w) != length(e.lift) - stated_length_gain(d))
          o.fail(e.w.str() + " in (" + d.str() + "): length correction fails");
      if (entries.empty()) continue;
      std::map<int, long> per_orbit;
      const auto sums = d.partial_sums();
      const bool oriented = n % 2 == 0 && std::find(sums.begin(), sums.end(), n / 2) != sums.end();
      for (const auto& z : intersection_points_partial(entries.front().w, d)) ++per_orbit[oriented ? orientation(z) : 0];
      const long stated = stated_points_per_orbit(d);
      for (const auto& [sign, count] : per_orbit)
        if (count != stated) {
          count_mismatches.push_back("(" + d.str() + ")");
          o.fail("(" + d.str() + "): " + std::to_string(count) + " points per orbit in " +
                 std::to_string(per_orbit.size()) + " orbit(s), stated " + std::to_string(stated));
          break;
        }
    }
  if (o.pass) {
    o.detail = std::to_string(types) + " symmetric types, n = 2..8";
  } else if (!count_mismatches.empty()) {
    o.detail += "; point count differs for";
    for (const auto& s : count_mismatches) o.detail += " " + s;
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto model = measurable_model(D("2,4,3"));
  if (model.model != D("2,1,3,1,2") || model.dim_drop != 5) o.fail("model of (2,4,3) is (" + model.model.str() + ")");
  std::vector<std::string> blocks;
  for (const auto& e : enumerate_measurable(D("1,4,1"))) blocks.push_back(block_string(e.w, D("1,4,1")));
  if (blocks != std::vector<std::string>{"(2)(3456)(1)", "(3)(1456)(2)", "(4)(1256)(3)", "(5)(1236)(4)", "(6)(1234)(5)"})
    o.fail("(1,4,1) list differs");
  const auto p5 = enumerate_nonmeasurable(D("1,5"));
  if (p5.size() != 1 || block_string(p5.front().w, D("1,5")) != "(2)(13456)") o.fail("(1,5) list differs");
  for (int n = 5; n <= 8; ++n) {
    const DimensionSequence f({1, n});
    std::string expected = "(2)(1";
    for (int v = 3; v <= n + 1; ++v) expected += std::to_string(v);
    expected += ")";
    const auto out = enumerate_nonmeasurable(f);
    if (out.size() != 1 || block_string(out.front().w, f) != expected) o.fail("(1," + std::to_string(n) + ") list differs");
  }
  if (o.pass) o.detail = "(2,4,3), (1,4,1), (1,n) for n = 5..8";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::map<int, long> full{{5, 4}, {6, 4}, {7, 8}};
  for (const auto& [n, c] : full)
    if (homology_class(DimensionSequence::full_flag(n)).coefficient != c) o.fail("full flag n = " + std::to_string(n));
  long checked = 0;
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : symmetric_sequences(n)) {
      const auto h = homology_class(d);
      if (n == 6 && !d.has_middle() && h.coefficient != 4) o.fail("(" + d.str() + "): coefficient " + std::to_string(h.coefficient));
      const auto sums = d.partial_sums();
      const bool oriented = n % 2 == 0 && std::find(sums.begin(), sums.end(), n / 2) != sums.end();
      for (const auto& w : h.classes) {
        ++checked;
        std::map<int, long> per_orbit;
        for (const auto& z : intersection_points_partial(w, d)) ++per_orbit[oriented ? orientation(z) : 0];
        for (const auto& [sign, count] : per_orbit)
          if (count != h.coefficient)
            o.fail(w.str() + " in (" + d.str() + "): coefficient " + std::to_string(h.coefficient) + ", orbit holds " +
                   std::to_string(count));
      }
    }
  if (o.pass) o.detail = std::to_string(checked) + " classes checked against their point counts";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"full-flag counts are the double factorials for n = 2..9", criterion1},
      {"brute-force filter equals the enumeration for n = 2..8", criterion2},
      {"every full-flag member has the critical length, spacing and w(n) = w(1) - 1", criterion3},
      {"2^m isotropic tau-generic distinct points in the cell, split evenly by orientation", criterion4},
      {"non-spacing cells at the critical length have no tau-generic sampled point", criterion5},
      {"measurable types: brute filter, injective lift, length correction, point counts", criterion6},
      {"worked examples: models, (1,4,1) list, (1,n) lists", criterion7},
      {"homology coefficients equal the per-orbit point counts", criterion8},
  };
  std::set<int> selected;
  for (int a = 1; a < argc; ++a) {
    const int k = std::atoi(argv[a]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [criterion 1-8 ...]\n";
      return 2;
    }
    selected.insert(k);
  }
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << criteria[k].first << " (" << o.detail << ")" << std::endl;
  }
  return all ? 0 : 1;
}

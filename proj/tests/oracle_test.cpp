#include <gtest/gtest.h>

#include "flagcycle/enumerate.hpp"
#include "flagcycle/geometry.hpp"
#include "flagcycle/oracle.hpp"

using namespace flagcycle;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(BruteSC0, Examples) {
  EXPECT_EQ(brute_SC0(2), (std::vector<Permutation>{P("21")}));
  EXPECT_EQ(brute_SC0(4), (std::vector<Permutation>{P("2431"), P("3412"), P("4213")}));
  EXPECT_THROW(brute_SC0(1), precondition_error);
  EXPECT_THROW(brute_SC0(10), precondition_error);
}

TEST(BruteSC0, AgreesWithConstructiveEnumeration) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(brute_SC0(n), enumerate_fullflag(n)) << n;
    EXPECT_EQ(static_cast<long>(brute_SC0(n).size()), double_factorial(n)) << n;
  }
}

TEST(BruteMeasurable, AgreesWithConstructiveEnumeration) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : symmetric_sequences(n)) {
      std::vector<Permutation> ws;
      for (const auto& e : enumerate_measurable(d)) ws.push_back(e.w);
      EXPECT_EQ(brute_measurable(d), ws) << d.str();
    }
}

TEST(DoubleFactorial, Values) {
  EXPECT_EQ(double_factorial(2), 1);
  EXPECT_EQ(double_factorial(6), 15);
  EXPECT_EQ(double_factorial(7), 48);
  EXPECT_EQ(double_factorial(9), 384);
}

TEST(SampleCellPoint, ShapeAndDeterminism) {
  const auto w = P("3142");
  const auto z = sample_cell_point(w, 99);
  EXPECT_EQ(z.basis(), sample_cell_point(w, 99).basis());
  EXPECT_FALSE(z.basis() == sample_cell_point(w, 100).basis());
  for (std::size_t c = 0; c < 4; ++c) {
    const auto pivot = static_cast<std::size_t>(w(static_cast<int>(c) + 1) - 1);
    EXPECT_EQ(z.basis()(pivot, c), GaussianRational(1));
    for (std::size_t r = pivot + 1; r < 4; ++r) EXPECT_TRUE(z.basis()(r, c).is_zero());
    for (std::size_t r = 0; r < pivot; ++r) {
      const auto& e = z.basis()(r, c);
      if (!e.is_zero()) {
        EXPECT_TRUE(sgn(e.real()) != 0 && sgn(e.imag()) != 0);
      }
    }
  }
  EXPECT_EQ(cell_of_flag(z), w);
}

TEST(GenericityDichotomy, HoldsForSmallN) {
  for (int n : {2, 3, 4, 5, 6}) {
    const auto r = check_genericity_dichotomy(n, 50);
    EXPECT_TRUE(r.pass) << n << ": " << (r.counterexamples.empty() ? "" : r.counterexamples.front());
    EXPECT_EQ(r.spacing_perms, double_factorial(n));
    EXPECT_EQ(r.samples, 50 * r.non_spacing_perms);
  }
  EXPECT_THROW(check_genericity_dichotomy(9, 1), precondition_error);
}

TEST(VerifySweep, AllChecksPassForFive) {
  const auto r = verify_sweep(5, 20);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass()) << c.name << ": " << (c.failures.empty() ? "" : c.failures.front());
  EXPECT_EQ(r.checks.size(), 12u);
  EXPECT_TRUE(to_json(r)["pass"].get<bool>());
}

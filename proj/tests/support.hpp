#pragma once

// Independent reference routines used by the tests. Nothing here calls the
// library's elimination code.

#include <cstdint>
#include <random>
#include <vector>

#include "flagcycle/exactnum.hpp"
#include "flagcycle/flags.hpp"
#include "flagcycle/perm.hpp"

namespace testsupport {

using flagcycle::ExactMatrix;
using flagcycle::GaussianRational;

// Plain Gauss-Jordan over Q[i] with division; returns the rank.
inline std::size_t naive_rank(ExactMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(p, k));
    const GaussianRational lead = m(rank, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c) / lead;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

inline ExactMatrix naive_inverse(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  ExactMatrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n + r) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m(p, c).is_zero()) ++p;
    for (std::size_t k = 0; k < 2 * n; ++k) std::swap(m(c, k), m(p, k));
    const GaussianRational lead = m(c, c);
    for (std::size_t k = 0; k < 2 * n; ++k) m(c, k) /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c);
      for (std::size_t k = 0; k < 2 * n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = m(r, n + c);
  return inv;
}

inline GaussianRational random_entry(std::mt19937_64& rng, int bound = 9) {
  auto pick = [&] { return static_cast<long>(rng() % (2 * bound + 1)) - bound; };
  const long den1 = static_cast<long>(rng() % 4 + 1);
  const long den2 = static_cast<long>(rng() % 4 + 1);
  return GaussianRational(mpq_class(pick(), den1), mpq_class(pick(), den2));
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_entry(rng);
  return m;
}

// Unit lower times unit upper: always invertible.
inline ExactMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  ExactMatrix l = ExactMatrix::identity(n), u = ExactMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) l(r, c) = random_entry(rng, 3);
      if (r < c) u(r, c) = random_entry(rng, 3);
    }
  return l * u;
}

// Invertible and block upper triangular for the blocks of d, so every V_i of
// a flag keeps its span when the basis is multiplied on the right.
inline ExactMatrix random_flag_change(std::mt19937_64& rng, const flagcycle::DimensionSequence& d) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<std::size_t> block_of(n);
  std::size_t pos = 0;
  for (std::size_t b = 0; b < d.size(); ++b)
    for (int k = 0; k < d[b]; ++k) block_of[pos++] = b;
  // Upper triangular with nonzero diagonal, times unit lower triangular
  // confined to the diagonal blocks.
  ExactMatrix upper(n, n), lower = ExactMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c)
        upper(r, c) = GaussianRational(mpq_class(static_cast<long>(rng() % 5 + 1)), mpq_class(static_cast<long>(rng() % 3)));
      else if (r < c)
        upper(r, c) = random_entry(rng, 4);
      else if (block_of[r] == block_of[c])
        lower(r, c) = random_entry(rng, 4);
    }
  const ExactMatrix t = upper * lower;
  return t;
}

inline flagcycle::Flag rebased(const flagcycle::Flag& z, const ExactMatrix& change) {
  return flagcycle::Flag(z.dims(), z.basis() * change);
}

// Flags spanning the same subspaces, decided with the reference rank.
inline bool same_flag_naive(const flagcycle::Flag& a, const flagcycle::Flag& b) {
  for (int delta : a.dims().partial_sums()) {
    const auto k = static_cast<std::size_t>(delta);
    if (naive_rank(flagcycle::hstack(a.basis().leading_columns(k), b.basis().leading_columns(k))) != k) return false;
  }
  return true;
}

}  // namespace testsupport

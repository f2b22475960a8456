#pragma once

// Flags in C^n stored as adapted bases, and the exact rank tests on them:
// tau-genericity, isotropy for b(v, w) = v^t w, orientation, and the Schubert
// cell containing a flag.

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagcycle/error.hpp"
#include "flagcycle/exactnum.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

/// V_1 < ... < V_s = C^n where V_i is spanned by the first delta_i columns of
/// an invertible n x n basis matrix.
class Flag {
 public:
  Flag(DimensionSequence d, ExactMatrix basis) : d_(std::move(d)), basis_(std::move(basis)) {
    const auto n = static_cast<std::size_t>(d_.n());
    if (basis_.rows() != n || basis_.cols() != n)
      throw std::invalid_argument("Flag: basis must be " + std::to_string(n) + " x " + std::to_string(n));
    if (rank(basis_) != n) throw std::invalid_argument("Flag: basis is singular");
  }

  int n() const { return d_.n(); }
  const DimensionSequence& dims() const { return d_; }
  const ExactMatrix& basis() const { return basis_; }

  /// Basis of V_i, 1 <= i <= s.
  ExactMatrix subspace(std::size_t i) const {
    return basis_.leading_columns(static_cast<std::size_t>(d_.partial_sums()[i - 1]));
  }

  /// The same flag read as a coarser type; every partial sum of `coarser`
  /// must be a partial sum of dims().
  Flag project(const DimensionSequence& coarser) const {
    const auto fine = d_.partial_sums();
    for (int p : coarser.partial_sums())
      if (std::find(fine.begin(), fine.end(), p) == fine.end())
        throw precondition_error("Flag::project: (" + coarser.str() + ") is not coarser than (" + d_.str() + ")");
    return Flag(coarser, basis_);
  }

 private:
  DimensionSequence d_;
  ExactMatrix basis_;
};

/// e_{w(1)}, ..., e_{w(n)}: the flag fixed by the torus in the cell O_w.
inline Flag coordinate_flag(const Permutation& w, const DimensionSequence& d) {
  require_same_size(w, d);
  const auto n = static_cast<std::size_t>(w.size());
  ExactMatrix b(n, n);
  for (int i = 1; i <= w.size(); ++i) b(static_cast<std::size_t>(w(i) - 1), static_cast<std::size_t>(i - 1)) = 1;
  return Flag(d, std::move(b));
}

inline Flag coordinate_flag(const Permutation& w) { return coordinate_flag(w, DimensionSequence::full_flag(w.size())); }

/// Equal subspaces at every step: rank [A_i | B_i] = delta_i.
inline bool same_flag(const Flag& a, const Flag& b) {
  if (!(a.dims() == b.dims())) return false;
  const auto sums = a.dims().partial_sums();
  for (int delta : sums) {
    SpanBuilder span(static_cast<std::size_t>(a.n()));
    span.add_columns(a.basis(), static_cast<std::size_t>(delta));
    span.add_columns(b.basis(), static_cast<std::size_t>(delta));
    if (span.rank() != static_cast<std::size_t>(delta)) return false;
  }
  return true;
}

/// dim(V_i cap tau(V_j)) = max(0, delta_i + delta_j - n) for all i, j.
inline bool is_tau_generic(const Flag& z) {
  const int n = z.n();
  const auto sums = z.dims().partial_sums();
  const auto conj = z.basis().conjugate();
  for (int di : sums) {
    SpanBuilder span(static_cast<std::size_t>(n));
    span.add_columns(z.basis(), static_cast<std::size_t>(di));
    int fed = 0;
    for (int dj : sums) {
      for (; fed < dj; ++fed) span.add(conj.column(static_cast<std::size_t>(fed)));
      const int meet = di + dj - static_cast<int>(span.rank());
      if (meet != std::max(0, di + dj - n)) return false;
    }
  }
  return true;
}

/// dim(V_i cap V_j^perp) = min(delta_i, n - delta_j) for all i, j, with perp
/// taken for the symmetric bilinear form b. The intersection dimension is
/// delta_i - rank G[0:delta_j, 0:delta_i] for the Gram matrix G = B^t B.
inline bool is_isotropic(const Flag& z) {
  const int n = z.n();
  const auto sums = z.dims().partial_sums();
  const auto g = gram(z.basis(), z.basis(), Form::bilinear);
  for (int di : sums) {
    SpanBuilder rows(static_cast<std::size_t>(di));
    int fed = 0;
    for (int dj : sums) {
      for (; fed < dj; ++fed) {
        std::vector<GaussianRational> row(static_cast<std::size_t>(di));
        for (int c = 0; c < di; ++c) row[static_cast<std::size_t>(c)] = g(static_cast<std::size_t>(fed), static_cast<std::size_t>(c));
        rows.add(std::move(row));
      }
      const int meet = di - static_cast<int>(rows.rank());
      if (meet != std::min(di, n - dj)) return false;
    }
  }
  return true;
}

/// For n = 2m with V_m in the flag: the sign of the real determinant of
/// [Re v_1, Im v_1, ..., Re v_m, Im v_m] for a basis v of V_m. A complex change
/// of basis of V_m multiplies it by |det|^2, so the sign depends on V_m only.
inline int orientation(const Flag& z) {
  const int n = z.n();
  if (n % 2 != 0) throw precondition_error("orientation: n = " + std::to_string(n) + " is odd");
  const int m = n / 2;
  const auto sums = z.dims().partial_sums();
  if (std::find(sums.begin(), sums.end(), m) == sums.end())
    throw precondition_error("orientation: V_" + std::to_string(m) + " is not part of a flag of type (" + z.dims().str() + ")");
  const auto un = static_cast<std::size_t>(n);
  ExactMatrix real(un, un);
  for (std::size_t c = 0; c < static_cast<std::size_t>(m); ++c)
    for (std::size_t r = 0; r < un; ++r) {
      real(r, 2 * c) = GaussianRational(z.basis()(r, c).real());
      real(r, 2 * c + 1) = GaussianRational(z.basis()(r, c).imag());
    }
  const auto det = determinant(real);
  if (det.is_zero()) throw precondition_error("orientation: V_" + std::to_string(m) + " meets its conjugate");
  return sgn(det.real());
}

/// The minimal representative u with z in O_u, read off the jumps of
/// r(a, j) = dim(V_a cap <e_1..e_j>) = delta_a + j - rank [V_a | e_1..e_j].
inline Permutation cell_of_flag(const Flag& z) {
  const int n = z.n();
  const auto sums = z.dims().partial_sums();
  std::vector<std::vector<int>> blocks;
  std::vector<int> previous_jumps(static_cast<std::size_t>(n) + 1, 0);
  for (int delta : sums) {
    SpanBuilder span(static_cast<std::size_t>(n));
    span.add_columns(z.basis(), static_cast<std::size_t>(delta));
    std::vector<int> jumps(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> block;
    int r_prev = 0;
    for (int j = 1; j <= n; ++j) {
      std::vector<GaussianRational> e(static_cast<std::size_t>(n));
      e[static_cast<std::size_t>(j - 1)] = 1;
      span.add(std::move(e));
      const int r = delta + j - static_cast<int>(span.rank());
      jumps[static_cast<std::size_t>(j)] = r - r_prev;
      if (jumps[static_cast<std::size_t>(j)] - previous_jumps[static_cast<std::size_t>(j)] == 1) block.push_back(j);
      r_prev = r;
    }
    blocks.push_back(std::move(block));
    previous_jumps = std::move(jumps);
  }
  return from_blocks(blocks);
}

/// {"n": n, "dims": [...], "basis": [[column 1 entries], ...]}.
inline nlohmann::ordered_json to_json(const Flag& z) {
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < z.basis().cols(); ++c) {
    nlohmann::ordered_json column = nlohmann::ordered_json::array();
    for (const auto& entry : z.basis().column(c)) column.push_back(entry.str());
    columns.push_back(std::move(column));
  }
  nlohmann::ordered_json out;
  out["n"] = z.n();
  out["dims"] = std::vector<int>(z.dims().parts().begin(), z.dims().parts().end());
  out["basis"] = std::move(columns);
  return out;
}

inline Flag flag_from_json(const nlohmann::ordered_json& j) {
  try {
    const DimensionSequence d(j.at("dims").get<std::vector<int>>());
    if (j.at("n").get<int>() != d.n()) throw parse_error("flag JSON: n does not match dims");
    std::vector<std::vector<GaussianRational>> columns;
    for (const auto& column : j.at("basis")) {
      std::vector<GaussianRational> entries;
      for (const auto& entry : column) entries.push_back(GaussianRational::parse(entry.get<std::string>()));
      columns.push_back(std::move(entries));
    }
    return Flag(d, ExactMatrix::from_columns(columns));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("flag JSON: ") + e.what());
  }
}

}  // namespace flagcycle
